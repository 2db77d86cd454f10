"""Finite field arithmetic for GF(q), q = p^m up to 2**20.

Elements are canonical integers in [0, q): the base-p digits of the integer
are the polynomial coefficients over GF(p), lowest degree first.  A FieldSpec
carries the modulus and (for q <= 2**16) exp/log tables over a multiplicative
generator, so products cost two table lookups.

ExtensionView pairs a base field GF(q) with GF(q^m) and fixes the polynomial
basis {1, a, a^2, ..., a^{m-1}} where `a` is the residue class of x.  It
provides coordinate expansion, its inverse, and Frobenius powers x -> x^(q^i).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BadParams, FieldTooLarge, NoExtensionView, NotPrime

MAX_ORDER = 1 << 20
_TABLE_LIMIT = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mul_mod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(tuple(out))


def _poly_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a)
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _poly_mod(a: tuple[int, ...], mod: tuple[int, ...], p: int) -> tuple[int, ...]:
    # mod must be monic
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return _poly_trim(tuple(a))


def _poly_divisible(a: tuple[int, ...], d: tuple[int, ...], p: int) -> bool:
    return len(_poly_mod(a, d, p)) == 0


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            low = _decode_poly(enc, p)
            div = low + (0,) * (d - len(low)) + (1,)
            if _poly_divisible(poly, div, p):
                return False
    return True


def _decode_poly(enc: int, p: int) -> tuple[int, ...]:
    digits = []
    while enc:
        digits.append(enc % p)
        enc //= p
    return tuple(digits)


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p).

    "Smallest" means smallest integer encoding of the non-leading
    coefficients (c0 + c1*p + ...); deterministic across runs.
    """
    if m == 1:
        return (0, 1)
    for enc in range(p**m):
        low = _decode_poly(enc, p)
        poly = low + (0,) * (m - len(low)) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldSpec:
    """Arithmetic context for GF(p^m_total).

    Immutable after construction and safe to share between threads; every
    operation is a pure function of integer representations.
    """

    def __init__(self, p: int, m_total: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        order = p**m_total
        if order > MAX_ORDER:
            raise FieldTooLarge(f"p^m = {order} exceeds {MAX_ORDER}")
        if len(modulus) != m_total + 1 or modulus[-1] != 1:
            raise BadParams("modulus must be monic of degree m_total")
        if not _is_irreducible(modulus, p):
            raise BadParams("modulus is reducible")
        self.p = p
        self.m_total = m_total
        self.modulus = modulus
        self.order = order
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.default_view: ExtensionView | None = None
        if 2 < order <= _TABLE_LIMIT:
            self._build_tables()

    # -- representation helpers ------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a representation, length m_total."""
        out = []
        for _ in range(self.m_total):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_digits(self, digits) -> int:
        a = 0
        for d in reversed(tuple(digits)):
            a = a * self.p + d % self.p
        return a

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out = 0
        scale = 1
        for _ in range(self.m_total):
            out += ((a + b) % self.p) * scale
            a //= self.p
            b //= self.p
            scale *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out = 0
        scale = 1
        for _ in range(self.m_total):
            out += (-a % self.p) * scale
            a //= self.p
            scale *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul_mod_p(self.digits(a), self.digits(b), self.p)
        return self.from_digits(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.order - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_poly(out, base)
            base = self._mul_poly(base, base)
            e >>= 1
        return out

    # -- tables --------------------------------------------------------------

    def _build_tables(self) -> None:
        g = self._find_generator()
        exp = [1] * (self.order - 1)
        log = [0] * self.order
        x = 1
        for i in range(self.order - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, g)
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        n = self.order - 1
        factors = []
        m = n
        d = 2
        while d * d <= m:
            if m % d == 0:
                factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            factors.append(m)

        def poly_pow(a: int, e: int) -> int:
            out = 1
            while e:
                if e & 1:
                    out = self._mul_poly(out, a)
                a = self._mul_poly(a, a)
                e >>= 1
            return out

        for cand in range(2, self.order):
            if all(poly_pow(cand, n // f) != 1 for f in factors):
                return cand
        raise AssertionError("no generator found")  # unreachable

    def element(self, rep: int) -> FieldElement:
        return FieldElement(self, rep % self.order)

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.m_total}))"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))


class FieldElement:
    """A field element: FieldSpec plus canonical integer representation."""

    __slots__ = ("spec", "rep")

    def __init__(self, spec: FieldSpec, rep: int):
        if not 0 <= rep < spec.order:
            raise BadParams(f"representation {rep} outside [0, {spec.order})")
        self.spec = spec
        self.rep = rep

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise BadParams("elements of different fields")
            return other.rep
        return int(other) % self.spec.order

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.rep, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.rep, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.rep, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.rep, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.rep))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.rep, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.rep == other.rep
        return self.rep == other

    def __hash__(self) -> int:
        return hash((id(self.spec), self.rep))

    def __repr__(self) -> str:
        return f"FieldElement({self.rep} in GF({self.spec.order}))"


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the smallest irreducible modulus; cached, deterministic."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise BadParams("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldTooLarge(f"p^m = {p**m} exceeds {MAX_ORDER}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def _solve_prime_system(rows: list[list[int]], rhs: list[int], p: int) -> list[int]:
    """Solve a square linear system over GF(p) by Gaussian elimination."""
    n = len(rows)
    aug = [rows[i][:] + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] % p), None)
        if piv is None:
            raise BadParams("singular system: basis is not independent")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


class ExtensionView:
    """GF(q^m) viewed as an m-dimensional vector space over GF(q).

    The basis is always {1, a, ..., a^{m-1}} with `a` the residue class of x
    in the extension field.  For a prime base field the coordinates are just
    the base-p digits; for a composite base an embedding of GF(q) into
    GF(q^m) is located once and coordinates are obtained by solving a linear
    system over GF(p), precomputed at construction time.
    """

    def __init__(self, base: FieldSpec, ext: FieldSpec):
        if ext.p != base.p or ext.m_total % base.m_total != 0:
            raise BadParams("ext is not an extension of base")
        self.base = base
        self.ext = ext
        self.m = ext.m_total // base.m_total
        self.alpha = ext.p if self.m > 1 else 0  # class of x (rep p^1)
        self.basis = tuple(ext.pow(self.alpha, j) if self.m > 1 else 1 for j in range(self.m))
        self._prime_base = base.m_total == 1
        if not self._prime_base:
            self._embed_root = self._find_embedding_root()
            self._setup_coordinate_solver()
        self._check_basis_independent()
        if ext.default_view is None:
            ext.default_view = self

    def _find_embedding_root(self) -> int:
        """Element of ext that is a root of base.modulus, defining GF(q) -> GF(q^m)."""
        mod = self.base.modulus
        for cand in range(self.ext.order):
            acc = 0
            for c in reversed(mod):
                acc = self.ext.add(self.ext.mul(acc, cand), c % self.ext.p)
            if acc == 0:
                return cand
        raise NoExtensionView("no embedding of base field found")

    def embed(self, b: int) -> int:
        """Image of base element b inside the extension field."""
        if self._prime_base:
            return b
        acc = 0
        for d in reversed(self.base.digits(b)):
            acc = self.ext.add(self.ext.mul(acc, self._embed_root), d)
        return acc

    def _setup_coordinate_solver(self) -> None:
        # columns: p-digit vectors of embed(p^t) * alpha^j
        p = self.ext.p
        a = self.base.m_total
        cols = []
        for j in range(self.m):
            for t in range(a):
                v = self.ext.mul(self.embed(p**t), self.basis[j])
                cols.append(list(self.ext.digits(v)))
        n = self.ext.m_total
        self._solve_rows = [[cols[c][r] for c in range(n)] for r in range(n)]

    def _check_basis_independent(self) -> None:
        probe = set()
        for x in self.basis:
            probe.add(x)
        if len(probe) != self.m:
            raise BadParams("basis elements repeat")
        # full check: expanding each basis vector must give the identity
        for j, x in enumerate(self.basis):
            coords = self.expand(x)
            expect = tuple(1 if i == j else 0 for i in range(self.m))
            if coords != expect:
                raise BadParams("polynomial basis is not independent over base")

    def expand(self, x: int) -> tuple[int, ...]:
        """Coordinates c with x = sum c_j * basis_j, c_j in the base field."""
        if self._prime_base:
            return self.ext.digits(x)
        p = self.ext.p
        a = self.base.m_total
        sol = _solve_prime_system(self._solve_rows, list(self.ext.digits(x)), p)
        return tuple(
            self.base.from_digits(sol[j * a : (j + 1) * a]) for j in range(self.m)
        )

    def collapse(self, coords) -> int:
        coords = tuple(coords)
        if len(coords) != self.m:
            raise BadParams(f"expected {self.m} coordinates")
        acc = 0
        for c, b in zip(coords, self.basis):
            acc = self.ext.add(acc, self.ext.mul(self.embed(c), b))
        return acc

    def frobenius(self, x: int, i: int) -> int:
        """x ** (q ** (i mod m)) in the extension field."""
        e = pow(self.base.order, i % self.m, self.ext.order - 1)
        return self.ext.pow(x, e)

    def __repr__(self) -> str:
        return f"ExtensionView(GF({self.base.order}) -> GF({self.ext.order}))"


@lru_cache(maxsize=None)
def extension_view(base: FieldSpec, m: int) -> ExtensionView:
    """Build (and cache) the view of GF(base.order^m) over base."""
    ext = make_field(base.p, base.m_total * m)
    return ExtensionView(base, ext)


def _as_element(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    raise BadParams("expected a FieldElement")


def frobenius_pow(x: FieldElement, i: int, view: ExtensionView | None = None) -> FieldElement:
    """x^[i] with [i] = q^(i mod m); a base-field-linear automorphism."""
    x = _as_element(x)
    if view is None:
        view = x.spec.default_view
    if view is None or view.ext != x.spec:
        raise NoExtensionView("element's field has no registered extension view")
    return FieldElement(x.spec, view.frobenius(x.rep, i))


def expand_coords(x: FieldElement, view: ExtensionView | None = None) -> tuple[FieldElement, ...]:
    """Coordinates of x over the view's base field, as base FieldElements."""
    x = _as_element(x)
    if view is None:
        view = x.spec.default_view
    if view is None or view.ext != x.spec:
        raise NoExtensionView("element's field has no registered extension view")
    return tuple(FieldElement(view.base, c) for c in view.expand(x.rep))


def collapse_coords(coords, view: ExtensionView) -> FieldElement:
    reps = [c.rep if isinstance(c, FieldElement) else int(c) for c in coords]
    return FieldElement(view.ext, view.collapse(reps))
