from itertools import combinations, product

import pytest

from subspacecodes.errors import LengthMismatch, ParseError, ShapeViolation, TooLarge
from subspacecodes.matrices import row_space_equal
from subspacecodes.subspaces import (
    IdVector,
    count_with_id,
    echelon_ferrers_shape,
    enumerate_grassmannian,
    fill_shape,
    from_literal,
    from_span,
    full_space,
    gaussian,
    identifying_vector,
    identifying_vectors,
    orthogonal_complement,
    read_point_part,
    to_literal,
    zero_subspace,
)
from .conftest import span_size


def test_from_span_known(gf2):
    u = from_span([(1, 0, 0, 0), (0, 1, 0, 0)], gf2, 4)
    assert u.k == 2
    assert u.gen.entries == ((1, 0, 0, 0), (0, 1, 0, 0))
    assert from_span([], gf2, 4).k == 0
    dep = from_span([(1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0)], gf2, 4)
    assert dep.k == 2
    assert span_size(gf2, [(1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0)], 4) == 4
    with pytest.raises(LengthMismatch):
        from_span([(1, 0)], gf2, 4)


def test_identifying_vector_examples(gf2):
    u = from_span([(1, 0, 0, 0), (0, 1, 0, 0)], gf2, 4)
    assert str(identifying_vector(u)) == "1100"
    u1 = from_span([(1, 0, 0, 0), (0, 1, 0, 1)], gf2, 4)
    assert str(identifying_vector(u1)) == "1100"
    assert u != u1
    assert str(identifying_vector(zero_subspace(gf2, 4))) == "0000"


def test_echelon_ferrers_shape_example():
    # 0110100 with n=7, k=3: dots per row (3,3,2)
    shape = echelon_ferrers_shape(IdVector.from_string("0110100"))
    assert shape.row_dots == (3, 3, 2)
    assert shape.dot_count == 8
    assert shape.free_positions == ((3, 5, 6), (3, 5, 6), (5, 6))
    # lifted form: k ones first -> full rectangle
    top = echelon_ferrers_shape(IdVector.from_string("1110000"))
    assert top.row_dots == (4, 4, 4)
    # k ones last -> no dots
    bottom = echelon_ferrers_shape(IdVector.from_string("0000111"))
    assert bottom.dot_count == 0


def test_ferrers_property_row_dots_nonincreasing():
    for n, k in [(6, 3), (7, 3), (7, 4), (8, 4)]:
        for v in identifying_vectors(n, k):
            dots = echelon_ferrers_shape(v).row_dots
            assert all(a >= b for a, b in zip(dots, dots[1:]))


def test_count_with_id_examples():
    assert count_with_id(IdVector.from_string("1100"), 2) == 16
    assert count_with_id(IdVector.from_string("0011"), 2) == 1
    assert count_with_id(IdVector.from_string("0011"), 5) == 1
    assert count_with_id(IdVector.from_string("0110100"), 2) == 256


def test_count_with_id_matches_exhaustive_grouping(gf2):
    # group all of G_2(7,3) by identifying vector and compare counts
    from collections import Counter

    counts = Counter()
    for u in enumerate_grassmannian(7, 3, 2):
        counts[u.id_vector.bits] += 1
    for bits, cnt in counts.items():
        assert cnt == count_with_id(IdVector(bits), 2)


def test_fill_shape_example(gf2):
    v = IdVector.from_string("0110100")
    m1 = [(1, 1, 1), (1, 1, 0), (0, 1, 1)]
    u = fill_shape(v, m1, gf2)
    assert u.gen.entries == (
        (0, 1, 0, 1, 0, 1, 1),
        (0, 0, 1, 1, 0, 1, 0),
        (0, 0, 0, 0, 1, 1, 1),
    )
    m2 = [(1, 1, 0), (1, 1, 0), (1, 1, 1)]
    with pytest.raises(ShapeViolation):
        fill_shape(v, m2, gf2)
    zero_fill = fill_shape(v, [(0, 0, 0)] * 3, gf2)
    assert zero_fill.gen.entries == (
        (0, 1, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0),
    )


def test_fill_shape_roundtrip_small(gf2, gf3):
    for spec, n, k in [(gf2, 5, 2), (gf2, 6, 3), (gf2, 7, 3), (gf3, 4, 2)]:
        for u in enumerate_grassmannian(n, k, spec.order):
            again = fill_shape(u.id_vector, read_point_part(u), spec)
            assert again == u


def test_gaussian_values():
    assert gaussian(4, 0, 2) == 1 and gaussian(4, 4, 2) == 1
    assert gaussian(4, 2, 2) == 35
    assert gaussian(6, 3, 2) == 1395
    assert gaussian(4, 2, 3) == 130


def test_gaussian_matches_exhaustive_enumeration(gf2):
    subs = set()
    for vecs in combinations([v for v in product((0, 1), repeat=4) if any(v)], 2):
        u = from_span(vecs, gf2, 4)
        if u.k == 2:
            subs.add(u.key())
    assert len(subs) == gaussian(4, 2, 2) == 35


def test_gaussian_symmetry_and_bounds():
    for n in range(1, 13):
        for k in range(n + 1):
            for q in (2, 3, 4, 5):
                assert gaussian(n, k, q) == gaussian(n, n - k, q)
                if 0 < k < n:
                    e = k * (n - k)
                    assert q**e < gaussian(n, k, q) < 4 * q**e


def test_sum_of_class_sizes_is_gaussian():
    # identity over identifying vectors, q in {2,3}, n <= 7
    for q in (2, 3):
        for n in range(1, 8):
            for k in range(n + 1):
                total = sum(
                    count_with_id(v, q) for v in identifying_vectors(n, k)
                )
                assert total == gaussian(n, k, q)


def test_enumeration_order_and_distinctness(gf2):
    listed = list(enumerate_grassmannian(2, 1, 2))
    assert [to_literal(u) for u in listed] == ["10", "11", "01"]
    g42 = list(enumerate_grassmannian(4, 2, 2))
    assert len(g42) == 35
    assert len({u.key() for u in g42}) == 35
    for a, b in zip(g42, g42[1:]):
        assert not row_space_equal(a.gen, b.gen)
    single = list(enumerate_grassmannian(5, 0, 2))
    assert len(single) == 1 and single[0].k == 0


def test_enumeration_cap():
    with pytest.raises(TooLarge):
        list(enumerate_grassmannian(30, 15, 2, cap=1000))


def test_orthogonal_complement(gf2):
    assert orthogonal_complement(full_space(gf2, 4)).k == 0
    u = from_span([(1, 0, 0, 0), (0, 1, 0, 0)], gf2, 4)
    w = orthogonal_complement(u)
    assert w == from_span([(0, 0, 1, 0), (0, 0, 0, 1)], gf2, 4)
    for s in enumerate_grassmannian(5, 2, 2):
        c = orthogonal_complement(s)
        assert c.k == 3
        assert orthogonal_complement(c) == s


def test_complement_preserves_distance(gf2):
    from subspacecodes.distances import distance_fast

    g42 = list(enumerate_grassmannian(4, 2, 2))
    for u in g42:
        for w in g42:
            assert distance_fast(u, w) == distance_fast(
                orthogonal_complement(u), orthogonal_complement(w)
            )


def test_literals(gf2, gf3):
    u = from_literal("1000;0101", gf2, 4)
    assert to_literal(u) == "1000;0101"
    assert from_literal("", gf2, 4).k == 0
    assert to_literal(zero_subspace(gf2, 4)) == ""
    with pytest.raises(ParseError):
        from_literal("1030", gf3, 4)  # digit 3 invalid over GF(3)
    with pytest.raises(ParseError):
        from_literal("10;0100", gf2, 4)


def test_subspace_membership(gf2):
    u = from_span([(1, 0, 0, 0), (0, 1, 0, 1)], gf2, 4)
    assert u.contains((1, 1, 0, 1))
    assert not u.contains((0, 0, 1, 0))
    assert zero_subspace(gf2, 4).contains((0, 0, 0, 0))
    assert set(u.vectors()) == {
        (0, 0, 0, 0),
        (1, 0, 0, 0),
        (0, 1, 0, 1),
        (1, 1, 0, 1),
    }
