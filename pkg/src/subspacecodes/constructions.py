"""Constructions of subspace codes.

lift        prepend an identity block to rank-code matrices
multilevel  union of rank-metric codes planted into the echelon forms of a
            constant-weight code's words; distance doubles the design rank
            distance
spread_like multilevel over block-shifted weight-k words with full MRD
            codes; meets the closed-form size (q^n - q^(k+r) + q^k - 1)/(q^k - 1)
puncture    drop the last coordinate: words inside the hyperplane keep their
            dimension, words through a special outside vector contribute
            their intersection with the hyperplane
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .distances import hamming, min_distance
from .errors import (
    AmbientMismatch,
    BadParams,
    DeltaUnsupported,
    LengthMismatch,
    MissingTopWord,
    ShapeMismatch,
    SpecialVectorInQ,
)
from .fields import FieldSpec, extension_view
from .matrices import MatGF, null_space
from .rankcodes import FerrersRankCode, ZeroPattern, ferrers_d2_code, gabidulin
from .subspaces import (
    FerrersShape,
    IdVector,
    Subspace,
    echelon_ferrers_shape,
    fill_shape,
    from_span,
    full_space,
    zero_subspace,
)


@dataclass(frozen=True)
class ConstantWeightCode:
    """Binary constant-weight code: the skeleton of a multilevel code."""

    n: int
    k: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for w in self.words:
            if len(w) != self.n:
                raise LengthMismatch(f"word of length {len(w)}, expected {self.n}")
            if sum(w) != self.k:
                raise BadParams(f"word of weight {sum(w)}, expected {self.k}")
        if len(set(self.words)) != len(self.words):
            raise BadParams("duplicate words")

    @classmethod
    def from_strings(cls, words) -> ConstantWeightCode:
        tup = tuple(tuple(int(c) for c in w) for w in words)
        if not tup:
            raise BadParams("empty word list")
        return cls(len(tup[0]), sum(tup[0]), tup)

    @property
    def dmin(self) -> int | None:
        if len(self.words) < 2:
            return None
        return min(
            hamming(a, b)
            for i, a in enumerate(self.words)
            for b in self.words[i + 1 :]
        )

    @property
    def top_word(self) -> tuple[int, ...]:
        return (1,) * self.k + (0,) * (self.n - self.k)


class SubspaceCode:
    """Collection of distinct subspaces of one ambient space."""

    def __init__(self, spec: FieldSpec, n: int, words, kind: str | None = None):
        words = tuple(words)
        for w in words:
            if w.n != n or w.spec != spec:
                raise AmbientMismatch("codeword in a different ambient space")
        if len({w.key() for w in words}) != len(words):
            raise BadParams("duplicate codewords")
        self.spec = spec
        self.n = n
        self.words = words
        dims = {w.k for w in words}
        if kind is None:
            kind = "constant-dimension" if len(dims) <= 1 else "projective"
        self.kind = kind
        self.dims = tuple(sorted(dims))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def dmin(self) -> int:
        return min_distance(self)

    @property
    def max_dim(self) -> int:
        return max(self.dims) if self.dims else 0

    def __repr__(self) -> str:
        return (
            f"SubspaceCode(n={self.n}, q={self.spec.order}, size={len(self.words)},"
            f" kind={self.kind})"
        )


def lift(mats, spec: FieldSpec) -> SubspaceCode:
    """Row spaces of [I | x] for each k x c matrix x; distance doubles."""
    mats = [m if isinstance(m, MatGF) else MatGF(spec, m) for m in mats]
    if not mats:
        raise BadParams("nothing to lift")
    k, c = mats[0].rows, mats[0].cols
    words = []
    for m in mats:
        if m.rows != k or m.cols != c:
            raise ShapeMismatch("lifted matrices must share dimensions")
        gen = tuple(
            tuple(1 if j == r else 0 for j in range(k)) + m.entries[r]
            for r in range(k)
        )
        words.append(Subspace(spec, k + c, MatGF(spec, gen, cols=k + c)))
    return SubspaceCode(spec, k + c, words)


def lift_gabidulin(view, n: int, d: int) -> SubspaceCode:
    """Lift every codeword of a Gabidulin code (rows are the coordinate
    expansions, so the lifted words have dimension n)."""
    code = gabidulin(view, n, d)
    mats = [cw.matrix_form.transpose() for cw in code.enumerate()]
    return lift(mats, view.base)


def _rect_mrd_code(spec: FieldSpec, k: int, width: int) -> FerrersRankCode:
    """All-of-EF MRD code with rank distance k on a full k x width box."""
    pattern = ZeroPattern((0,) * k, width)
    if width < k:
        return FerrersRankCode(spec, pattern, k, ())
    view = extension_view(spec, width)
    code = gabidulin(view, k, k)
    # generator rows of the length-k Gabidulin code, expanded and transposed
    basis = []
    for i in range(code.k):
        for b in view.basis:
            cw = code.encode([0] * i + [b] + [0] * (code.k - i - 1))
            basis.append(cw.matrix_form.transpose())
    return FerrersRankCode(spec, pattern, k, tuple(basis))


def _full_shape_code(spec: FieldSpec, shape: FerrersShape) -> FerrersRankCode:
    """Every matrix fitting the shape (rank distance 1)."""
    pattern = ZeroPattern.from_shape(shape)
    k, w = pattern.nrows, pattern.ncols
    basis = []
    for r in range(k):
        for c in range(pattern.zeros[r], w):
            m = [[0] * w for _ in range(k)]
            m[r][c] = 1
            basis.append(MatGF(spec, m, cols=w))
    return FerrersRankCode(spec, pattern, 1, tuple(basis))


def default_ferrers_code(
    spec: FieldSpec, shape: FerrersShape, delta: int, k: int
) -> FerrersRankCode:
    """Built-in rank-metric code choices for a level of the construction."""
    if delta == 1:
        return _full_shape_code(spec, shape)
    if delta == 2:
        return ferrers_d2_code(shape, spec)
    pattern = ZeroPattern.from_shape(shape)
    if delta == k and all(z == 0 for z in pattern.zeros):
        return _rect_mrd_code(spec, k, pattern.ncols)
    raise DeltaUnsupported(
        f"no built-in rank code for distance {delta} on this shape; supply one"
    )


def multilevel(
    cw: ConstantWeightCode,
    delta: int,
    spec: FieldSpec,
    ferrers_codes: dict | None = None,
    verify_supplied: bool = True,
) -> SubspaceCode:
    """Union over words w of the rank-metric code planted into EF(w).

    The skeleton must contain the word 1..10..0 and have minimum Hamming
    distance >= 2*delta; the result is a constant-dimension code with
    minimum subspace distance exactly 2*delta (when at least one level code
    realises rank distance delta).
    """
    if cw.top_word not in cw.words:
        raise MissingTopWord("constant-weight code must contain 1..10..0")
    dmin = cw.dmin
    if dmin is not None and dmin < 2 * delta:
        raise BadParams(f"skeleton distance {dmin} below 2*delta = {2 * delta}")

    words: list[Subspace] = []
    for w in cw.words:
        v = IdVector(w)
        shape = echelon_ferrers_shape(v)
        if ferrers_codes is not None and w in ferrers_codes:
            level = ferrers_codes[w]
            if verify_supplied:
                pattern = ZeroPattern.from_shape(shape)
                for b in level.basis:
                    if not pattern.admits(b):
                        raise BadParams("supplied code does not fit the shape")
                md = level.min_rank_distance()
                if md is not None and md < delta:
                    raise BadParams("supplied code has too small a rank distance")
        else:
            level = default_ferrers_code(spec, shape, delta, cw.k)
        for m in level.codewords():
            words.append(fill_shape(v, m.entries, spec))
    return SubspaceCode(spec, cw.n, words)


def multilevel_fixture(
    name: str, spec: FieldSpec, puncture_aligned: bool = False
) -> SubspaceCode:
    """Multilevel code over a bundled word list.

    puncture_aligned swaps in the variant level codes (same sizes and
    distances) whose last-coordinate shortening keeps the best known
    projective-code sizes.
    """
    from .fixtures import CONSTANT_WEIGHT_WORDS, PUNCTURE_ALIGNED_BASES

    if name not in CONSTANT_WEIGHT_WORDS:
        raise BadParams(f"unknown fixture {name!r}; have {sorted(CONSTANT_WEIGHT_WORDS)}")
    cw = ConstantWeightCode.from_strings(CONSTANT_WEIGHT_WORDS[name])
    codes = None
    if puncture_aligned:
        codes = {}
        for word_str, basis in PUNCTURE_ALIGNED_BASES.items():
            word = tuple(int(c) for c in word_str)
            if word not in cw.words:
                continue
            shape = echelon_ferrers_shape(IdVector(word))
            pattern = ZeroPattern.from_shape(shape)
            codes[word] = FerrersRankCode(
                spec, pattern, 2, tuple(MatGF(spec, m) for m in basis)
            )
    return multilevel(cw, 2, spec, ferrers_codes=codes)


def spread_like(n: int, k: int, spec: FieldSpec) -> SubspaceCode:
    """Partial-spread construction: block-shifted weight-k words, each
    carrying a full MRD code of rank distance k; distance 2k and size
    (q^n - q^(k+r) + q^k - 1)/(q^k - 1) with r = n mod k."""
    if not 1 <= k <= n:
        raise BadParams(f"need 1 <= k <= n, got n={n} k={k}")
    s, r = divmod(n, k)
    words = []
    for i in range(1, s + 1):
        words.append((0,) * ((i - 1) * k) + (1,) * k + (0,) * (n - i * k))
    cw = ConstantWeightCode(n, k, tuple(words))
    codes = {}
    for i, w in enumerate(cw.words, start=1):
        width = n - i * k
        codes[w] = _rect_mrd_code(spec, k, width)
    return multilevel(cw, k, spec, ferrers_codes=codes, verify_supplied=False)


def spread_like_size(n: int, k: int, q: int) -> int:
    r = n % k
    num = q**n - q ** (k + r) + q**k - 1
    assert num % (q**k - 1) == 0
    return num // (q**k - 1)


def puncture(
    code: SubspaceCode, v, add_trivial: bool = False
) -> SubspaceCode:
    """Shorten by one coordinate through the hyperplane Q = span(e1..e_{n-1}).

    Keeps words inside Q at full dimension and replaces words through v
    (any fixed vector outside Q) by their intersection with Q.  The minimum
    distance drops by at most one: 2*delta becomes >= 2*delta - 1.
    """
    spec = code.spec
    n = code.n
    v = tuple(int(x) for x in v)
    if len(v) != n:
        raise LengthMismatch(f"special vector length {len(v)}, ambient {n}")
    if v[-1] == 0:
        raise SpecialVectorInQ("special vector must have a nonzero last coordinate")

    words: list[Subspace] = []
    seen = set()
    for c in code.words:
        if all(row[-1] == 0 for row in c.gen.entries):
            w = from_span([row[:-1] for row in c.gen.entries], spec, n - 1)
            if w.key() not in seen:
                seen.add(w.key())
                words.append(w)
    for c in code.words:
        if any(row[-1] != 0 for row in c.gen.entries) and c.contains(v):
            last_col = MatGF(spec, tuple((row[-1],) for row in c.gen.entries), cols=1)
            coeffs = null_space(last_col.transpose())
            inter = []
            for x in coeffs.entries:
                vec = [0] * n
                for xi, row in zip(x, c.gen.entries):
                    if xi:
                        vec = [spec.add(a, spec.mul(xi, b)) for a, b in zip(vec, row)]
                inter.append(vec[:-1])
            w = from_span(inter, spec, n - 1)
            if w.key() not in seen:
                seen.add(w.key())
                words.append(w)
    if add_trivial:
        for extra in (zero_subspace(spec, n - 1), full_space(spec, n - 1)):
            if extra.key() not in seen:
                seen.add(extra.key())
                words.append(extra)
    return SubspaceCode(spec, n - 1, words, kind="projective")


def greedy_constant_weight(n: int, k: int, d: int) -> ConstantWeightCode:
    """Greedy lexicode skeleton: scan weight-k words from 1..10..0 downward,
    keeping words at Hamming distance >= d from everything kept so far."""
    from itertools import combinations

    kept: list[tuple[int, ...]] = []
    for sup in combinations(range(n), k):
        w = tuple(1 if j in set(sup) else 0 for j in range(n))
        if all(hamming(w, u) >= d for u in kept):
            kept.append(w)
    return ConstantWeightCode(n, k, tuple(kept))
