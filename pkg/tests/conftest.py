import random

import pytest

from subspacecodes.fields import make_field
from subspacecodes.subspaces import Subspace, from_span


@pytest.fixture
def gf2():
    return make_field(2, 1)


@pytest.fixture
def gf3():
    return make_field(3, 1)


def random_subspace(spec, n: int, rng: random.Random, k: int | None = None) -> Subspace:
    """Random subspace by spanning random vectors (dimension <= k)."""
    if k is None:
        k = rng.randrange(0, n + 1)
    vecs = [[rng.randrange(spec.order) for _ in range(n)] for _ in range(k)]
    return from_span(vecs, spec, n)


def span_size(spec, rows, n: int) -> int:
    """Oracle: number of distinct vectors in the row span (exhaustive)."""
    from itertools import product

    seen = set()
    rows = [tuple(r) for r in rows]
    for coeffs in product(range(spec.order), repeat=len(rows)):
        acc = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                acc = [spec.add(a, spec.mul(c, x)) for a, x in zip(acc, row)]
        seen.add(tuple(acc))
    return len(seen)
