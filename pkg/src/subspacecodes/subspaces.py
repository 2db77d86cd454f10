"""Points of the projective space P_q(n): canonical subspace representation.

A Subspace is stored by its unique reduced-echelon generator matrix.  Every
subspace has an identifying vector (the 0/1 indicator of its pivot columns)
and every identifying vector has an echelon form whose non-pivot entries to
the right of each pivot are free; those free positions form a Ferrers-shaped
region, and filling them with field elements enumerates exactly the
subspaces sharing that identifying vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BadParams, LengthMismatch, ParseError, ShapeViolation, TooLarge
from .fields import FieldSpec, make_field
from .matrices import MatGF, nonzero_rows, null_space, rref

ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class IdVector:
    """Binary indicator of pivot columns; weight equals the dimension."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise BadParams("identifying vector must be binary")

    @classmethod
    def from_string(cls, s: str) -> IdVector:
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_support(cls, n: int, support) -> IdVector:
        sup = set(support)
        return cls(tuple(1 if j in sup else 0 for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, b in enumerate(self.bits) if b)

    def packed(self) -> int:
        """Big-endian integer: the string "1100" packs to 0b1100."""
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class FerrersShape:
    """Free-entry region of the echelon form of an identifying vector.

    free_positions[r] lists the ambient columns (ascending) where row r of
    the echelon form is arbitrary: everything right of row r's pivot that is
    not itself a pivot column.
    """

    id_vec: IdVector
    free_positions: tuple[tuple[int, ...], ...]

    @property
    def row_dots(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.free_positions)

    @property
    def dot_count(self) -> int:
        return sum(self.row_dots)

    @property
    def box_columns(self) -> tuple[int, ...]:
        """Ambient columns of the point part: non-pivots >= the first pivot."""
        sup = self.id_vec.support
        if not sup:
            return ()
        pset = set(sup)
        return tuple(c for c in range(sup[0], self.id_vec.n) if c not in pset)

    def leading_zero_counts(self) -> tuple[int, ...]:
        """Per row, number of box columns left of the row's first dot."""
        cols = self.box_columns
        out = []
        for r, sup in enumerate(self.id_vec.support):
            out.append(sum(1 for c in cols if c < sup))
        return tuple(out)


class Subspace:
    """A k-dimensional subspace of GF(q)^n in canonical form."""

    __slots__ = ("spec", "n", "k", "gen", "_id")

    def __init__(self, spec: FieldSpec, n: int, gen: MatGF):
        if gen.cols != n:
            raise LengthMismatch(f"generator has {gen.cols} columns, ambient is {n}")
        r, rank_, pivots = rref(gen)
        if rank_ != gen.rows or nonzero_rows(r) != gen.entries:
            raise BadParams("generator matrix is not a full-rank reduced echelon form")
        self.spec = spec
        self.n = n
        self.k = gen.rows
        self.gen = gen
        self._id: IdVector | None = None

    @property
    def id_vector(self) -> IdVector:
        if self._id is None:
            pivots = rref(self.gen)[2]
            self._id = IdVector.from_support(self.n, pivots)
        return self._id

    def contains(self, vec) -> bool:
        from .matrices import row_in_span

        if len(tuple(vec)) != self.n:
            raise LengthMismatch("vector length differs from ambient dimension")
        if self.k == 0:
            return not any(vec)
        return row_in_span(self.gen, vec)

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All q^k elements of the subspace (exponential; small k only)."""
        spec = self.spec
        coords = [0] * self.k
        total = spec.order**self.k
        for idx in range(total):
            t = idx
            for i in range(self.k):
                coords[i] = t % spec.order
                t //= spec.order
            acc = [0] * self.n
            for c, row in zip(coords, self.gen.entries):
                if c:
                    acc = [spec.add(a, spec.mul(c, x)) for a, x in zip(acc, row)]
            yield tuple(acc)

    def key(self) -> tuple:
        return (self.spec.order, self.n, self.gen.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Subspace({to_literal(self)!r}, n={self.n}, GF({self.spec.order}))"


def zero_subspace(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec, n, MatGF.zero(spec, 0, n))


def full_space(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec, n, MatGF.identity(spec, n))


def from_span(vectors, spec: FieldSpec, n: int) -> Subspace:
    """Canonical subspace spanned by the given vectors (possibly dependent)."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    for v in vecs:
        if len(v) != n:
            raise LengthMismatch(f"vector of length {len(v)}, ambient is {n}")
    if not vecs:
        return zero_subspace(spec, n)
    r, rank_, _ = rref(MatGF(spec, vecs))
    return Subspace(spec, n, MatGF(spec, nonzero_rows(r), cols=n))


def from_matrix(m: MatGF, n: int | None = None) -> Subspace:
    """Row space of an arbitrary matrix, canonicalized."""
    n = m.cols if n is None else n
    return from_span(m.entries, m.spec, n)


def identifying_vector(u: Subspace) -> IdVector:
    return u.id_vector


def echelon_ferrers_shape(v: IdVector) -> FerrersShape:
    """Free positions of the echelon form whose pivots sit at v's ones."""
    sup = v.support
    pset = set(sup)
    free = tuple(
        tuple(c for c in range(p + 1, v.n) if c not in pset) for p in sup
    )
    return FerrersShape(v, free)


def count_with_id(v: IdVector, q: int) -> int:
    """Number of subspaces of GF(q)^n whose identifying vector is v.

    Equals q to the number of free entries, which in terms of 1-based pivot
    indices i_1..i_k is -k(k-1)/2 + kn - sum(i_j).
    """
    k = v.weight
    n = v.n
    pivots_1based = sum(p + 1 for p in v.support)
    exponent = -k * (k - 1) // 2 + k * n - pivots_1based
    shape = echelon_ferrers_shape(v)
    assert exponent == shape.dot_count
    return q**exponent


def fits_shape(shape: FerrersShape, point_part) -> bool:
    """Check a k x (#box columns) matrix has nonzeros only at free positions."""
    rows = [tuple(r) for r in point_part]
    cols = shape.box_columns
    if len(rows) != len(shape.free_positions) or any(len(r) != len(cols) for r in rows):
        return False
    for r, row in enumerate(rows):
        allowed = set(shape.free_positions[r])
        for j, x in enumerate(row):
            if x and cols[j] not in allowed:
                return False
    return True


def fill_shape(v: IdVector, point_part, spec: FieldSpec) -> Subspace:
    """Unique subspace with identifying vector v and the given free entries.

    point_part is a k x (n - k - i1 + 1) matrix over the field covering the
    box columns (non-pivot columns from the first pivot rightwards); nonzero
    entries outside the dotted region raise ShapeViolation.
    """
    shape = echelon_ferrers_shape(v)
    rows = [tuple(int(x) for x in r) for r in point_part]
    if not fits_shape(shape, rows):
        raise ShapeViolation(f"matrix does not fit the echelon form of {v}")
    cols = shape.box_columns
    col_of = {c: j for j, c in enumerate(cols)}
    gen = []
    for r, p in enumerate(v.support):
        row = [0] * v.n
        row[p] = 1
        for c in shape.free_positions[r]:
            row[c] = rows[r][col_of[c]]
        gen.append(tuple(row))
    m = MatGF(spec, tuple(gen), cols=v.n)
    return Subspace(spec, v.n, m)


def read_point_part(u: Subspace) -> tuple[tuple[int, ...], ...]:
    """Inverse of fill_shape: the free entries of u's generator matrix."""
    shape = echelon_ferrers_shape(u.id_vector)
    cols = shape.box_columns
    return tuple(tuple(u.gen.entries[r][c] for c in cols) for r in range(u.k))


def free_entries_row_major(u: Subspace) -> tuple[int, ...]:
    """Free entries of the generator matrix in row-major dot order."""
    shape = echelon_ferrers_shape(u.id_vector)
    out = []
    for r in range(u.k):
        for c in shape.free_positions[r]:
            out.append(u.gen.entries[r][c])
    return tuple(out)


def gaussian(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient: the number of k-subspaces of GF(q)^n."""
    if k < 0 or n < 0 or k > n:
        raise BadParams(f"need 0 <= k <= n, got n={n} k={k}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def identifying_vectors(n: int, k: int) -> Iterator[IdVector]:
    """All weight-k identifying vectors in lexicographically descending order."""
    from itertools import combinations

    for sup in combinations(range(n), k):
        yield IdVector.from_support(n, sup)


def subspaces_with_id(v: IdVector, spec: FieldSpec) -> Iterator[Subspace]:
    """All subspaces with identifying vector v, free entries in integer order.

    Free entries are the base-q digits (most significant first) of an index
    running over row-major dot positions.
    """
    shape = echelon_ferrers_shape(v)
    cols = shape.box_columns
    col_of = {c: j for j, c in enumerate(cols)}
    dots = [(r, col_of[c]) for r in range(v.weight) for c in shape.free_positions[r]]
    q = spec.order
    total = q ** len(dots)
    k = v.weight
    w = len(cols)
    for idx in range(total):
        mat = [[0] * w for _ in range(k)]
        t = idx
        for r, j in reversed(dots):
            mat[r][j] = t % q
            t //= q
        yield fill_shape(v, mat, spec)


def enumerate_grassmannian(
    n: int, k: int, q: int, cap: int = ENUMERATION_CAP
) -> Iterator[Subspace]:
    """Each k-subspace of GF(q)^n exactly once, in canonical order.

    Order: identifying vectors lexicographically descending, then free-entry
    assignments in integer order.  Refuses to start when the Grassmannian
    exceeds the cap.
    """
    total = gaussian(n, k, q)
    if total > cap:
        raise TooLarge(f"Grassmannian has {total} subspaces, cap is {cap}")
    spec = make_field(*_prime_power(q))
    for v in identifying_vectors(n, k):
        yield from subspaces_with_id(v, spec)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise BadParams(f"{q} is not a prime power")
            return p, m
    raise BadParams(f"{q} is not a prime power")


def field_for_order(q: int) -> FieldSpec:
    return make_field(*_prime_power(q))


def orthogonal_complement(u: Subspace) -> Subspace:
    """All vectors orthogonal to u under the standard dot product."""
    if u.k == 0:
        return full_space(u.spec, u.n)
    ns = null_space(u.gen)
    return from_span(ns.entries, u.spec, u.n)


def to_literal(u: Subspace) -> str:
    """Rows as digit strings joined by ';'.  The zero subspace is ''."""
    return ";".join("".join(str(x) for x in row) for row in u.gen.entries)


def from_literal(s: str, spec: FieldSpec, n: int) -> Subspace:
    """Parse a ';'-joined row literal into a canonical subspace."""
    s = s.strip()
    if not s:
        return zero_subspace(spec, n)
    rows = []
    for i, part in enumerate(s.split(";")):
        row = []
        for j, c in enumerate(part):
            if not c.isdigit() or int(c) >= spec.order:
                raise ParseError(f"row {i}, column {j}: invalid digit {c!r} for GF({spec.order})")
            row.append(int(c))
        if len(row) != n:
            raise ParseError(f"row {i}: length {len(row)}, expected {n}")
        rows.append(tuple(row))
    return from_span(rows, spec, n)
