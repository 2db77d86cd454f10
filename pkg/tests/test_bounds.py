from fractions import Fraction

import pytest

from subspacecodes.bounds import (
    cdc_bounds,
    johnson_chain,
    projective_space_size,
    pspace_lower_bound,
    sphere_volume,
)
from subspacecodes.errors import BadParams
from subspacecodes.subspaces import gaussian


def test_specific_values_652():
    r = cdc_bounds(6, 3, 2, 2)
    assert r.singleton_upper == gaussian(5, 2, 2) == 155
    assert r.anticode_upper == 651 // 7 == 93
    assert r.johnson_upper == (63 * (31 // 3)) // 7 == 90
    assert r.sphere_packing_upper == 1395  # radius 0 ball for even distance 4


def test_spread_values_422():
    r = cdc_bounds(4, 2, 2, 2)
    assert r.anticode_upper == 5
    assert r.delta_k_exact == 5
    assert r.delta_k_lower == 5


def test_delta1_degenerate():
    # distance 2 admits the whole Grassmannian; the anticode bound is exact
    for n, k, q in [(5, 2, 2), (6, 3, 2), (4, 2, 3)]:
        r = cdc_bounds(n, k, 1, q)
        assert r.anticode_upper == gaussian(n, k, q)
        assert r.sphere_packing_upper == gaussian(n, k, q)
        assert r.sphere_covering_lower == Fraction(gaussian(n, k, q))
        assert r.johnson_upper == gaussian(n, k, q)


def test_bad_params():
    with pytest.raises(BadParams):
        cdc_bounds(4, 5, 1, 2)
    with pytest.raises(BadParams):
        cdc_bounds(4, 2, 0, 2)
    with pytest.raises(BadParams):
        pspace_lower_bound(4, 0, 2)


def test_anticode_stronger_than_singleton_on_grid():
    for q in (2, 3):
        for n in range(2, 11):
            for k in range(1, n // 2 + 1):
                for delta in range(1, k + 1):
                    r = cdc_bounds(n, k, delta, q)
                    assert r.anticode_upper <= r.singleton_upper


def test_lower_bounds_below_upper_bounds_on_grid():
    for q in (2, 3):
        for n in range(2, 11):
            for k in range(1, n // 2 + 1):
                for delta in range(1, k + 1):
                    r = cdc_bounds(n, k, delta, q)
                    uppers = [
                        r.sphere_packing_upper,
                        r.singleton_upper,
                        r.anticode_upper,
                        r.johnson_upper,
                    ]
                    if r.delta_k_upper is not None:
                        uppers.append(r.delta_k_upper)
                    if r.delta_k_exact is not None:
                        uppers.append(r.delta_k_exact)
                    lowers = [r.sphere_covering_lower]
                    if r.graham_sloane_lower is not None:
                        lowers.append(r.graham_sloane_lower)
                    if r.delta_k_lower is not None:
                        lowers.append(Fraction(r.delta_k_lower))
                    if r.delta_k_exact is not None:
                        lowers.append(Fraction(r.delta_k_exact))
                    for lo in lowers:
                        for up in uppers:
                            assert lo <= up, (q, n, k, delta, lo, up)
                    assert r.best_lower >= 1 and r.best_upper >= 1


def test_graham_sloane_weaker_than_covering_for_delta_3_plus():
    # the generic "weaker" ordering holds from delta 3 on; at delta 2 there
    # are counterexamples (e.g. q=2 n=4 k=2), so that case is not asserted
    checked = 0
    for q in (2, 3):
        for n in range(2, 11):
            for k in range(1, n // 2 + 1):
                for delta in range(3, k + 1):
                    r = cdc_bounds(n, k, delta, q)
                    assert r.graham_sloane_lower <= r.sphere_covering_lower
                    checked += 1
    assert checked > 0


def test_constructive_sizes_within_bounds():
    assert 9 <= cdc_bounds(5, 2, 2, 2).best_upper
    r6 = cdc_bounds(6, 3, 2, 2)
    assert 71 <= r6.best_upper <= 90
    assert 4573 <= cdc_bounds(8, 4, 2, 2).best_upper


def test_complement_symmetry():
    for q in (2, 3):
        for n in range(2, 9):
            for k in range(1, n + 1):
                for delta in range(1, min(k, n - k) + 1 or 1):
                    if delta < 1:
                        continue
                    a = cdc_bounds(n, k, delta, q)
                    b = cdc_bounds(n, n - k, delta, q) if n - k >= delta else None
                    if b is None:
                        continue
                    assert a.sphere_packing_upper == b.sphere_packing_upper
                    assert a.singleton_upper == b.singleton_upper
                    assert a.anticode_upper == b.anticode_upper
                    assert a.johnson_upper == b.johnson_upper
                    assert a.sphere_covering_lower == b.sphere_covering_lower


def test_delta_above_max_distance():
    r = cdc_bounds(4, 2, 2, 2)
    assert r.delta_k_exact == 5
    trivial = cdc_bounds(5, 4, 3, 2)  # effective k=1 < delta
    assert trivial.delta_k_exact == 1
    assert trivial.best_upper == 1


def test_sphere_volume():
    assert sphere_volume(6, 3, 0, 2) == 1
    assert sphere_volume(6, 3, 1, 2) == 1 + 2 * gaussian(3, 1, 2) ** 2
    assert sphere_volume(4, 2, 2, 2) == gaussian(4, 2, 2)  # whole Grassmannian


def test_pspace_lower_bound_properties():
    # d = 1: every subspace is a code, and the bound is exactly |P|
    for q in (2, 3):
        for n in (3, 4, 5):
            total = projective_space_size(n, q)
            assert pspace_lower_bound(n, 1, q) == Fraction(total)
    val = pspace_lower_bound(5, 3, 2)
    assert 0 < val <= projective_space_size(5, 2)
    # non-increasing in d
    for n in (4, 5, 6):
        vals = [pspace_lower_bound(n, d, 2) for d in range(1, n + 1)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_johnson_chain_values():
    assert johnson_chain(6, 3, 2, 2) == 90
    assert johnson_chain(6, 3, 3, 2) == (2**6 - 1) // (2**3 - 1)
    assert johnson_chain(4, 2, 1, 2) == gaussian(4, 2, 2)
