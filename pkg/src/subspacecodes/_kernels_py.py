"""Pure-Python GF(2) kernels over bit-packed rows.

Same API as the compiled extension module; rows are Python ints with
column 0 in the highest set bit, so arbitrary n is supported here.
"""

from __future__ import annotations

COMPILED = False


def gf2_rank(rows) -> int:
    """Rank of packed GF(2) rows."""
    lead: dict[int, int] = {}
    r = 0
    for v in rows:
        while v:
            b = v.bit_length()
            cur = lead.get(b)
            if cur is None:
                lead[b] = v
                r += 1
                break
            v ^= cur
    return r


def code_min_distance(ids, gens) -> int:
    """Minimum subspace distance over all unordered pairs of packed words.

    Pairs whose identifying vectors are already at Hamming distance >= the
    current best are skipped (the subspace distance dominates it); pairs with
    equal identifying vectors need only the rank of the row-wise XOR.
    """
    nwords = len(ids)
    best = None
    for i in range(nwords):
        idi = ids[i]
        gi = gens[i]
        ki = len(gi)
        for j in range(i + 1, nwords):
            s = (idi ^ ids[j]).bit_count()
            if best is not None and s >= best:
                continue
            gj = gens[j]
            if s == 0:
                d = 2 * gf2_rank([a ^ b for a, b in zip(gi, gj)])
            else:
                d = 2 * gf2_rank(gi + gj) - ki - len(gj)
            if best is None or d < best:
                best = d
    return best


def nearest(qid, qrows, ids, gens) -> tuple[int, int]:
    """Index and distance of the first closest word to the packed query."""
    kq = len(qrows)
    best_d = None
    best_i = -1
    for i in range(len(ids)):
        s = (qid ^ ids[i]).bit_count()
        if best_d is not None and s >= best_d:
            continue
        gi = gens[i]
        if s == 0:
            d = 2 * gf2_rank([a ^ b for a, b in zip(qrows, gi)])
        else:
            d = 2 * gf2_rank(qrows + gi) - kq - len(gi)
        if best_d is None or d < best_d:
            best_d = d
            best_i = i
    return best_i, best_d
