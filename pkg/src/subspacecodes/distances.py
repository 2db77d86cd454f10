"""The subspace (dimension) metric and its fast evaluation.

d(U, W) = dim U + dim W - 2 dim(U ∩ W).  The naive route computes the rank
of the stacked generator matrices.  The fast route compares identifying
vectors first: s = Hamming distance of the pivot indicators is a lower bound
on d with the same parity, and after eliminating the pivots exclusive to one
side the remainder reduces to a rank of difference rows, so
d = s + 2 * rank(U~ - W~).
"""

from __future__ import annotations

from .errors import AmbientMismatch, TooFewCodewords
from .matrices import MatGF, rank, vconcat
from .subspaces import Subspace


def _check_pair(u: Subspace, w: Subspace) -> None:
    if u.n != w.n or u.spec != w.spec:
        raise AmbientMismatch("subspaces live in different ambient spaces")


def dim_intersection(u: Subspace, w: Subspace) -> int:
    _check_pair(u, w)
    return u.k + w.k - rank(vconcat(u.gen, w.gen))


def distance_naive(u: Subspace, w: Subspace) -> int:
    """2 rank([U; W]) - k1 - k2, straight from the definition."""
    _check_pair(u, w)
    return 2 * rank(vconcat(u.gen, w.gen)) - u.k - w.k


def hamming(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def distance_fast(u: Subspace, w: Subspace) -> int:
    """Identifying-vector algorithm; always equals distance_naive.

    Steps: (1) s = Hamming distance of the identifying vectors; (2) build
    I (pivots only in U) and J (pivots only in W), swapping roles so the
    smaller first exclusive pivot belongs to U, then clear the cross pivots
    working down the columns of I ∪ J from the largest; (3) the rows with
    shared pivots give U~ and W~, and d = s + 2 rank(U~ - W~).
    """
    _check_pair(u, w)
    spec = u.spec
    uid = u.id_vector.bits
    wid = w.id_vector.bits
    s = hamming(uid, wid)

    i_cols = [c for c in range(u.n) if uid[c] and not wid[c]]
    j_cols = [c for c in range(u.n) if wid[c] and not uid[c]]
    first_i = i_cols[0] if i_cols else u.n
    first_j = j_cols[0] if j_cols else u.n
    if first_i > first_j:
        u, w = w, u
        i_cols, j_cols = j_cols, i_cols

    urows = {p: list(row) for p, row in zip(u.id_vector.support, u.gen.entries)}
    wrows = {p: list(row) for p, row in zip(w.id_vector.support, w.gen.entries)}
    add, mul, neg = spec.add, spec.mul, spec.neg

    i_set = set(i_cols)
    for col in sorted(i_cols + j_cols, reverse=True):
        if col in i_set:
            source, targets = urows[col], wrows
        else:
            source, targets = wrows[col], urows
        for row in targets.values():
            c = row[col]
            if c:
                f = neg(c)
                for t in range(col, len(row)):
                    if source[t]:
                        row[t] = add(row[t], mul(f, source[t]))

    shared = [c for c in range(u.n) if uid[c] and wid[c]]
    diff = []
    for p in shared:
        ur, wr = urows[p], wrows[p]
        diff.append(tuple(spec.sub(a, b) for a, b in zip(ur, wr)))
    r = rank(MatGF(spec, tuple(diff), cols=u.n)) if diff else 0
    return s + 2 * r


def min_distance(code, use_fast: bool = True) -> int:
    """Minimum pairwise distance over all unordered codeword pairs.

    Routes GF(2) codes with n <= 64 through the packed kernel (compiled if
    available); everything else runs the per-pair algorithm.  The Hamming
    prefilter d >= d_H(ids) soundly skips pairs that cannot improve the
    current minimum.
    """
    words = list(code.words) if hasattr(code, "words") else list(code)
    if len(words) < 2:
        raise TooFewCodewords("minimum distance needs at least two codewords")

    spec = words[0].spec
    n = words[0].n
    if use_fast and spec.order == 2 and n <= 64:
        from . import kernels

        ids = [w.id_vector.packed() for w in words]
        gens = [_pack_rows(w) for w in words]
        return kernels.code_min_distance(ids, gens)

    best = None
    dist = distance_fast if use_fast else distance_naive
    for i in range(len(words)):
        wi = words[i]
        bi = wi.id_vector.bits
        for j in range(i + 1, len(words)):
            wj = words[j]
            if best is not None and hamming(bi, wj.id_vector.bits) >= best:
                continue
            d = dist(wi, wj)
            if best is None or d < best:
                best = d
    return best


def _pack_rows(u: Subspace) -> list[int]:
    """Generator rows as big-endian bit integers (column 0 is the high bit)."""
    out = []
    for row in u.gen.entries:
        v = 0
        for b in row:
            v = (v << 1) | b
        out.append(v)
    return out
