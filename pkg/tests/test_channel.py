import random

import pytest

from subspacecodes.channel import (
    ChannelConfig,
    min_distance_decode,
    packets_to_subspace,
    simulate,
    transmit,
)
from subspacecodes.constructions import SubspaceCode, multilevel_fixture
from subspacecodes.distances import distance_fast, distance_naive
from subspacecodes.errors import InfeasibleParams, TooFewCodewords
from subspacecodes.matrices import MatGF, mat_mul, rank
from subspacecodes.subspaces import from_span
from .conftest import random_subspace


def test_transmit_identity(gf2):
    rng = random.Random(1)
    v = from_span([(1, 0, 0, 0), (0, 1, 0, 0)], gf2, 4)
    assert transmit(v, 0, 0, rng) == v


def test_transmit_full_erasure(gf2):
    rng = random.Random(2)
    v = from_span([(1, 0, 0, 0), (0, 1, 0, 0)], gf2, 4)
    assert transmit(v, 2, 0, rng).k == 0


def test_transmit_dimensions_always(gf2):
    rng = random.Random(3)
    for _ in range(300):
        v = random_subspace(gf2, 6, rng)
        rho = rng.randrange(0, v.k + 1)
        tmax = 6 - (v.k - rho)
        t = rng.randrange(0, tmax + 1)
        u = transmit(v, rho, t, rng)
        assert u.k == v.k - rho + t


def test_transmit_distance_structure(gf2):
    # with rho erasures and t errors the output is within rho + t of v
    rng = random.Random(4)
    v = from_span([(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)], gf2, 6)
    for _ in range(200):
        u = transmit(v, 1, 1, rng)
        assert u.k == 3
        # H(V) is a 2-dim common subspace, so d is 0 or 2 (0 iff E fell
        # back inside V)
        assert distance_naive(v, u) in (0, 2)


def test_transmit_infeasible(gf2):
    rng = random.Random(5)
    v = from_span([(1, 0, 0)], gf2, 3)
    with pytest.raises(InfeasibleParams):
        transmit(v, 2, 0, rng)
    with pytest.raises(InfeasibleParams):
        transmit(v, 0, 3, rng)


def test_packets_roundtrip(gf2):
    rng = random.Random(6)
    sent = [(1, 0, 0, 1, 0), (0, 1, 0, 0, 1)]
    v = from_span(sent, gf2, 5)
    for _ in range(50):
        # y = Hp with random full-rank H
        while True:
            h = MatGF(gf2, [[rng.randrange(2) for _ in range(2)] for _ in range(2)])
            if rank(h) == 2:
                break
        y = mat_mul(h, MatGF(gf2, sent))
        assert packets_to_subspace(y.entries, gf2, 5) == v
    assert packets_to_subspace([], gf2, 5).k == 0
    dup = packets_to_subspace([sent[0], sent[0], sent[1]], gf2, 5)
    assert dup == v


def test_packets_with_error_rows(gf2):
    # y = Hp + Ge: the received row space sits inside span(p) + span(e)
    rng = random.Random(11)
    p = [(1, 0, 0, 1, 0), (0, 1, 0, 0, 1)]
    e = [(0, 0, 1, 1, 1)]
    v = from_span(p, gf2, 5)
    ve = from_span(p + e, gf2, 5)
    for _ in range(50):
        L = rng.randrange(1, 5)
        y = []
        for _ in range(L):
            h = [rng.randrange(2) for _ in range(2)]
            g = [rng.randrange(2)]
            row = [0] * 5
            for c, src in zip(h + g, p + e):
                if c:
                    row = [a ^ b for a, b in zip(row, src)]
            y.append(tuple(row))
        u = packets_to_subspace(y, gf2, 5)
        for vec in u.gen.entries:
            assert ve.contains(vec)


def test_decode_trivial_and_errors(gf2):
    code = multilevel_fixture("w5k2", gf2)
    word, dist = min_distance_decode(code, code.words[3])
    assert word == code.words[3] and dist == 0
    with pytest.raises(TooFewCodewords):
        min_distance_decode(SubspaceCode(gf2, 5, []), code.words[0])


def test_decode_matches_unfiltered_scan(gf2):
    code = multilevel_fixture("w6k3", gf2)
    rng = random.Random(7)
    for _ in range(1000):
        u = random_subspace(gf2, 6, rng)
        got_word, got_dist = min_distance_decode(code, u)
        # unfiltered exhaustive argmin with first-wins tie break
        best = None
        best_w = None
        for w in code.words:
            d = distance_fast(w, u)
            if best is None or d < best:
                best, best_w = d, w
        assert got_dist == best
        assert got_word == best_w


def test_decode_single_erasure(gf2):
    code = multilevel_fixture("w5k2", gf2)
    rng = random.Random(8)
    for w in code.words:
        u = transmit(w, 1, 0, rng)
        decoded, d = min_distance_decode(code, u)
        assert decoded == w and d == 1


def test_guarantee_property(gf2):
    # distance-4 codes decode perfectly whenever 2(t + rho) < 4
    for name in ("w5k2", "w6k3"):
        code = multilevel_fixture(name, gf2)
        for t, rho in [(0, 0), (1, 0), (0, 1)]:
            stats = simulate(code, ChannelConfig(rho=rho, t=t, seed=123, trials=1000))
            assert stats.successes == stats.trials == 1000
            assert stats.success_rate == 1.0


def test_boundary_parameters_recorded_not_asserted(gf2):
    code = multilevel_fixture("w6k3", gf2)
    stats = simulate(code, ChannelConfig(rho=1, t=1, seed=5, trials=300))
    assert 0.0 < stats.success_rate < 1.0


def test_simulation_deterministic(gf2):
    code = multilevel_fixture("w5k2", gf2)
    cfg = ChannelConfig(rho=1, t=1, seed=42, trials=200)
    a = simulate(code, cfg, keep_outcomes=True)
    b = simulate(code, cfg, keep_outcomes=True)
    assert a.successes == b.successes
    for oa, ob in zip(a.outcomes, b.outcomes):
        assert oa.sent == ob.sent
        assert oa.received == ob.received
        assert oa.decoded == ob.decoded
        assert oa.success == ob.success


def test_simulate_infeasible(gf2):
    code = multilevel_fixture("w5k2", gf2)
    with pytest.raises(InfeasibleParams):
        simulate(code, ChannelConfig(rho=3, t=0, seed=0, trials=10))
    with pytest.raises(InfeasibleParams):
        ChannelConfig(rho=-1, t=0)


def test_trial_outcomes(gf2):
    code = multilevel_fixture("w5k2", gf2)
    stats = simulate(code, ChannelConfig(rho=0, t=1, seed=9, trials=50), keep_outcomes=True)
    for outcome in stats.outcomes:
        assert outcome.success == (outcome.decoded == outcome.sent)
        assert outcome.received.k == outcome.sent.k + 1
        assert outcome.channel_distance == 1  # t=1 error dim, disjoint by construction
