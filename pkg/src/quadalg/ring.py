"""Exact arithmetic over the supported base rings.

Four kinds of ring are available: the integers, integer table rings (free
Z-modules with a structure-constant multiplication), finite quotients of
those, and localizations Z[1/f].  All elements are kept in canonical form
so that equality doubles as the test oracle.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    InfiniteRing,
    NoIdentity,
    NonAssociative,
    NonCommutative,
    RingMismatch,
    NotTwoRegular,
    UnitSearchCapExceeded,
    UnsupportedRing,
)

PELL_CAP = 10**6


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of rows*x = rhs over Q, or None if inconsistent.

    Free variables are set to zero; callers verify the solution in-ring.
    """
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    nrows, ncols = len(m), len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [e - f * p for e, p in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][ncols]
    return x


def _det_int(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _det_int(minor)
        total += term if j % 2 == 0 else -term
    return total


def _adjugate_int(mat: list[list[int]]) -> list[list[int]]:
    n = len(mat)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(mat) if k != i]
            cof = _det_int(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def _pell_fundamental(n: int) -> tuple[int, int]:
    """Smallest (x, y), y >= 1, with x^2 - n*y^2 = +-1, by continued fractions."""
    a0 = isqrt(n)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for _ in range(PELL_CAP):
        if h * h - n * k * k in (1, -1):
            return h, k
        m = d * a - m
        d = (n - m * m) // d
        a = (a0 + m) // d
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    raise UnitSearchCapExceeded(f"no fundamental unit within {PELL_CAP} steps for N={n}")


class RingElement:
    """An element of a Ring, always held in canonical form."""

    __slots__ = ("ring", "coords", "k")

    def __init__(self, ring: Ring, coords: tuple[int, ...], k: int = 0):
        self.ring = ring
        self.coords = coords
        self.k = k

    def __add__(self, other):
        return self.ring._add(self, self.ring.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return self.ring._neg(self)

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        return self.ring._mul(self, self.ring.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: use Ring.try_inverse")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.ring == other.ring and self.coords == other.coords
                and self.k == other.k)

    def __hash__(self):
        return hash((self.ring, self.coords, self.k))

    def __int__(self) -> int:
        if self.k:
            raise ValueError(f"{self!r} is not a rational integer")
        if any(self.coords[1:]):
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coords[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return self.ring.format_element(self)


class Mod2Element:
    """Residue class of a ring element modulo 2R, in canonical coordinates."""

    __slots__ = ("ring", "residue")

    def __init__(self, ring: Ring, residue: tuple[int, ...]):
        self.ring = ring
        self.residue = residue

    def lift(self) -> RingElement:
        return self.ring.element(self.residue)

    def times(self, e: RingElement) -> Mod2Element:
        # well-defined: e*(x + 2t) = e*x + 2*e*t
        return self.ring.mod2(e * self.lift())

    def is_zero(self) -> bool:
        return not any(self.residue)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mod2Element):
            return NotImplemented
        return self.ring == other.ring and self.residue == other.residue

    def __hash__(self):
        return hash(("mod2", self.ring, self.residue))

    def __repr__(self):
        return f"({self.ring.format_element(self.lift())} mod 2)"


class Ring:
    """Common interface of the four ring backends."""

    kind = "abstract"
    rank: int
    two_regular: bool
    symbols: tuple[str, ...]

    # -- element plumbing ----------------------------------------------------

    def element(self, coords, k: int = 0) -> RingElement:
        raise NotImplementedError

    def from_int(self, n: int) -> RingElement:
        coords = (n,) + (0,) * (self.rank - 1)
        return self.element(coords)

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    def coerce(self, x) -> RingElement:
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, RingElement):
            if x.ring != self:
                raise RingMismatch(f"element of {x.ring!r} used in {self!r}")
            return x
        raise TypeError(f"cannot coerce {x!r} into {self!r}")

    # -- arithmetic kernels (canonical in, canonical out) ---------------------

    def _add(self, x: RingElement, y: RingElement) -> RingElement:
        raise NotImplementedError

    def _neg(self, x: RingElement) -> RingElement:
        raise NotImplementedError

    def _mul(self, x: RingElement, y: RingElement) -> RingElement:
        raise NotImplementedError

    # -- unit and divisibility structure --------------------------------------

    def try_inverse(self, x: RingElement) -> RingElement | None:
        raise NotImplementedError

    def is_unit(self, x: RingElement) -> bool:
        return self.try_inverse(self.coerce(x)) is not None

    def try_divide(self, p: RingElement, q: RingElement) -> RingElement | None:
        """Some y with q*y = p, or None."""
        raise NotImplementedError

    def try_halve(self, x: RingElement) -> RingElement | None:
        """The unique y with 2y = x, when it exists; requires 2 regular."""
        if not self.two_regular:
            raise NotTwoRegular(f"halving is not unique in {self!r}")
        return self._try_halve(x)

    def _try_halve(self, x: RingElement) -> RingElement | None:
        raise NotImplementedError

    def mod2(self, x: RingElement) -> Mod2Element:
        raise NotImplementedError

    def mod2_residues(self) -> list[Mod2Element]:
        """Canonical representatives of R/2R (finite for every supported kind)."""
        raise NotImplementedError

    def in_4R(self, x: RingElement) -> bool:
        raise NotImplementedError

    # -- global structure ------------------------------------------------------

    def is_finite(self) -> bool:
        return False

    def enumerate_elements(self) -> list[RingElement]:
        raise InfiniteRing(f"{self!r} is infinite")

    def unit_group_generators(self) -> list[RingElement]:
        raise UnsupportedRing(f"no unit-group algorithm for {self!r}")

    # -- serialization ----------------------------------------------------------

    def descriptor(self) -> dict:
        raise NotImplementedError

    def element_to_json(self, x: RingElement):
        if self.kind == "localization":
            return {"coords": list(x.coords), "k": x.k}
        return list(x.coords)

    def element_from_json(self, data) -> RingElement:
        if isinstance(data, dict):
            return self.element(tuple(int(c) for c in data["coords"]), int(data.get("k", 0)))
        if isinstance(data, int):
            return self.from_int(data)
        return self.element(tuple(int(c) for c in data))

    def format_element(self, x: RingElement) -> str:
        terms = []
        for c, sym in zip(x.coords, self.symbols):
            if c == 0:
                continue
            if sym == "1":
                terms.append(f"{c}")
            elif c == 1:
                terms.append(sym)
            elif c == -1:
                terms.append(f"-{sym}")
            else:
                terms.append(f"{c}{sym}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ring):
            return NotImplemented
        return self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(_freeze(self.descriptor()))

    def __repr__(self):
        return self.describe()

    def describe(self) -> str:
        raise NotImplementedError


def _freeze(obj):
    if isinstance(obj, dict):
        return tuple(sorted((k, _freeze(v)) for k, v in obj.items()))
    if isinstance(obj, list):
        return tuple(_freeze(v) for v in obj)
    return obj


class IntegerRing(Ring):
    """The rational integers."""

    kind = "integers"
    rank = 1
    two_regular = True
    symbols = ("1",)

    def element(self, coords, k: int = 0) -> RingElement:
        if k:
            raise ValueError("integers carry no denominator exponent")
        (n,) = coords
        return RingElement(self, (int(n),))

    def _add(self, x, y):
        return RingElement(self, (x.coords[0] + y.coords[0],))

    def _neg(self, x):
        return RingElement(self, (-x.coords[0],))

    def _mul(self, x, y):
        return RingElement(self, (x.coords[0] * y.coords[0],))

    def try_inverse(self, x):
        x = self.coerce(x)
        return x if x.coords[0] in (1, -1) else None

    def try_divide(self, p, q):
        a, b = p.coords[0], q.coords[0]
        if b == 0:
            return None
        if a % b:
            return None
        return self.from_int(a // b)

    def _try_halve(self, x):
        n = x.coords[0]
        return self.from_int(n // 2) if n % 2 == 0 else None

    def mod2(self, x):
        return Mod2Element(self, (x.coords[0] % 2,))

    def mod2_residues(self):
        return [Mod2Element(self, (0,)), Mod2Element(self, (1,))]

    def in_4R(self, x):
        return x.coords[0] % 4 == 0

    def unit_group_generators(self):
        return [self.from_int(-1)]

    def rational_value(self, x: RingElement) -> Fraction:
        return Fraction(x.coords[0])

    def try_from_rational(self, q) -> RingElement | None:
        q = Fraction(q)
        return self.from_int(q.numerator) if q.denominator == 1 else None

    def from_rational(self, q) -> RingElement:
        x = self.try_from_rational(q)
        if x is None:
            raise ValueError(f"{q} is not an integer")
        return x

    def descriptor(self):
        return {"kind": "integers"}

    def describe(self):
        return "Z"


class TableRing(Ring):
    """Free Z-module of finite rank with a structure-constant multiplication.

    table[i][j] holds the coordinates of e_i * e_j.  Commutativity,
    associativity and the identity are checked exhaustively on basis
    triples at construction.
    """

    kind = "table"
    two_regular = True  # free Z-module: 2x = 0 forces x = 0

    def __init__(self, table, one=None, symbols=None):
        n = len(table)
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.rank = n
        tbl = tuple(tuple(tuple(int(c) for c in table[i][j]) for j in range(n))
                    for i in range(n))
        if any(len(tbl[i]) != n or any(len(tbl[i][j]) != n for j in range(n))
               for i in range(n)):
            raise ValueError("structure-constant tensor must be n x n x n")
        self.table = tbl
        for i in range(n):
            for j in range(i + 1, n):
                if tbl[i][j] != tbl[j][i]:
                    raise NonCommutative(f"e{i}*e{j} != e{j}*e{i}")
        self.one_coords = self._resolve_identity(one)
        self.symbols = tuple(symbols) if symbols else ("1",) + tuple(
            f"e{i}" for i in range(1, n))
        if len(self.symbols) != n:
            raise ValueError("need one symbol per basis element")
        self._check_associativity()

    def _basis_mul(self, i: int, j: int) -> tuple[int, ...]:
        return self.table[i][j]

    def _mul_coords(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        n = self.rank
        out = [0] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                t = self.table[i][j]
                f = xi * yj
                for kk in range(n):
                    out[kk] += f * t[kk]
        return tuple(out)

    def _resolve_identity(self, one) -> tuple[int, ...]:
        n = self.rank
        if one is not None:
            e = tuple(int(c) for c in one)
        else:
            # solve sum_i e_i (e_i * e_j) = e_j for all j over Q
            rows, rhs = [], []
            for j in range(n):
                for kk in range(n):
                    rows.append([Fraction(self.table[i][j][kk]) for i in range(n)])
                    rhs.append(Fraction(1 if j == kk else 0))
            sol = _solve_exact(rows, rhs)
            if sol is None or any(f.denominator != 1 for f in sol):
                raise NoIdentity("structure constants admit no identity")
            e = tuple(int(f) for f in sol)
        for j in range(n):
            ej = tuple(1 if t == j else 0 for t in range(n))
            if self._mul_coords(e, ej) != ej:
                raise NoIdentity(f"claimed identity fails on e{j}")
        return e

    def _check_associativity(self):
        n = self.rank
        basis = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
        for i in range(n):
            for j in range(n):
                ij = self._mul_coords(basis[i], basis[j])
                for kk in range(n):
                    left = self._mul_coords(ij, basis[kk])
                    right = self._mul_coords(basis[i], self._mul_coords(basis[j], basis[kk]))
                    if left != right:
                        raise NonAssociative(f"(e{i}e{j})e{kk} != e{i}(e{j}e{kk})")

    def element(self, coords, k: int = 0) -> RingElement:
        if k:
            raise ValueError("table rings carry no denominator exponent")
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        return RingElement(self, coords)

    def from_int(self, n: int) -> RingElement:
        return RingElement(self, tuple(n * c for c in self.one_coords))

    def _add(self, x, y):
        return RingElement(self, tuple(a + b for a, b in zip(x.coords, y.coords)))

    def _neg(self, x):
        return RingElement(self, tuple(-a for a in x.coords))

    def _mul(self, x, y):
        return RingElement(self, self._mul_coords(x.coords, y.coords))

    def _mul_matrix(self, x: RingElement) -> list[list[int]]:
        # column i = coordinates of x * e_i
        n = self.rank
        cols = []
        for i in range(n):
            ei = tuple(1 if t == i else 0 for t in range(n))
            cols.append(self._mul_coords(x.coords, ei))
        return [[cols[i][kk] for i in range(n)] for kk in range(n)]

    def _solve_mul(self, q: RingElement, target: tuple[int, ...]) -> RingElement | None:
        mat = self._mul_matrix(q)
        rows = [[Fraction(e) for e in row] for row in mat]
        rhs = [Fraction(t) for t in target]
        sol = _solve_exact(rows, rhs)
        if sol is None or any(f.denominator != 1 for f in sol):
            return None
        y = self.element(tuple(int(f) for f in sol))
        return y if self._mul(q, y).coords == target else None

    def try_inverse(self, x):
        x = self.coerce(x)
        return self._solve_mul(x, self.one_coords)

    def try_divide(self, p, q):
        return self._solve_mul(q, p.coords)

    def _try_halve(self, x):
        if any(c % 2 for c in x.coords):
            return None
        return self.element(tuple(c // 2 for c in x.coords))

    def mod2(self, x):
        return Mod2Element(self, tuple(c % 2 for c in x.coords))

    def mod2_residues(self):
        return [Mod2Element(self, r)
                for r in itertools.product((0, 1), repeat=self.rank)]

    def in_4R(self, x):
        return all(c % 4 == 0 for c in x.coords)

    @property
    def quadratic_param(self) -> int | None:
        """N when this ring is Z[sqrt(N)] on the basis (1, w); else None."""
        if self.rank != 2 or self.one_coords != (1, 0):
            return None
        t = self.table
        if t[0][0] == (1, 0) and t[0][1] == (0, 1) and t[1][1][1] == 0:
            return t[1][1][0]
        return None

    def unit_group_generators(self):
        n = self.quadratic_param
        if n is None or n == 0 or is_square(n):
            raise UnsupportedRing(f"no unit-group algorithm for {self!r}")
        if n < 0:
            gens = [self.from_int(-1)]
            if n == -1:
                gens += [self.element((0, 1)), self.element((0, -1))]
            return gens
        x, y = _pell_fundamental(n)
        return [self.from_int(-1), self.element((x, y))]

    def descriptor(self):
        # symbols are presentation only and stay out of the identity
        return {"kind": "table", "rank": self.rank,
                "mul": [[list(self.table[i][j]) for j in range(self.rank)]
                        for i in range(self.rank)],
                "one": list(self.one_coords)}

    def describe(self):
        n = self.quadratic_param
        if n is not None:
            return f"Z[sqrt({n})]"
        return f"TableRing(rank={self.rank})"


class QuotientRing(Ring):
    """Quotient of the integers or a table ring by an integer m >= 2."""

    kind = "quotient"

    def __init__(self, base: Ring, m: int):
        if not isinstance(base, (IntegerRing, TableRing)):
            raise ValueError("quotient base must be Z or a table ring")
        if m < 2:
            raise ValueError("modulus must be at least 2")
        self.base = base
        self.m = m
        self.rank = base.rank
        self.two_regular = m % 2 == 1  # then 2 is a unit mod m
        self.symbols = base.symbols

    def element(self, coords, k: int = 0) -> RingElement:
        if k:
            raise ValueError("quotient rings carry no denominator exponent")
        coords = tuple(int(c) % self.m for c in coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates")
        return RingElement(self, coords)

    def _add(self, x, y):
        return self.element(tuple(a + b for a, b in zip(x.coords, y.coords)))

    def _neg(self, x):
        return self.element(tuple(-a for a in x.coords))

    def _mul(self, x, y):
        if isinstance(self.base, TableRing):
            return self.element(self.base._mul_coords(x.coords, y.coords))
        return self.element((x.coords[0] * y.coords[0],))

    def try_inverse(self, x):
        x = self.coerce(x)
        if isinstance(self.base, IntegerRing):
            g, u, _ = xgcd(x.coords[0], self.m)
            return self.element((u,)) if g == 1 else None
        mat = self.base._mul_matrix(self.base.element(x.coords))
        d = _det_int(mat) % self.m
        g, dinv, _ = xgcd(d, self.m)
        if g != 1:
            return None
        adj = _adjugate_int(mat)
        one = self.base.one_coords
        y = tuple(dinv * sum(adj[i][j] * one[j] for j in range(self.rank))
                  for i in range(self.rank))
        y = self.element(y)
        return y if self._mul(x, y) == self.one else None

    def try_divide(self, p, q):
        for y in self.enumerate_elements():
            if self._mul(q, y) == p:
                return y
        return None

    def _try_halve(self, x):
        # m odd, so 2 is a unit
        two_inv = self.try_inverse(self.from_int(2))
        return self._mul(x, two_inv)

    def mod2(self, x):
        if self.m % 2 == 0:
            return Mod2Element(self, tuple(c % 2 for c in x.coords))
        return Mod2Element(self, (0,) * self.rank)

    def mod2_residues(self):
        if self.m % 2 == 1:
            return [Mod2Element(self, (0,) * self.rank)]
        return [Mod2Element(self, r)
                for r in itertools.product((0, 1), repeat=self.rank)]

    def in_4R(self, x):
        g = gcd(4, self.m)
        return all(c % g == 0 for c in x.coords)

    def is_finite(self):
        return True

    def enumerate_elements(self):
        return [RingElement(self, coords)
                for coords in itertools.product(range(self.m), repeat=self.rank)]

    def unit_group_generators(self):
        return [u for u in self.enumerate_elements()
                if self.is_unit(u) and u != self.one]

    def descriptor(self):
        return {"kind": "quotient", "base": self.base.descriptor(), "m": self.m}

    def describe(self):
        return f"{self.base.describe()}/{self.m}"


class LocalizationRing(Ring):
    """Z[1/f]: values num/f^k with f not dividing num unless k = 0."""

    kind = "localization"
    rank = 1
    two_regular = True
    symbols = ("1",)

    def __init__(self, f: int):
        if f < 2:
            raise ValueError("inverted integer must be at least 2")
        self.f = f

    def element(self, coords, k: int = 0) -> RingElement:
        (num,) = coords
        num = int(num)
        if num == 0:
            k = 0
        while k > 0 and num % self.f == 0:
            num //= self.f
            k -= 1
        return RingElement(self, (num,), k)

    def rational_value(self, x: RingElement) -> Fraction:
        return Fraction(x.coords[0], self.f ** x.k)

    def try_from_rational(self, q) -> RingElement | None:
        q = Fraction(q)
        d = q.denominator
        g = gcd(d, self.f)
        while g > 1:
            d //= g
            g = gcd(d, self.f)
        if d != 1:
            return None  # denominator not f-smooth
        j, pw = 0, 1
        while pw % q.denominator:
            j += 1
            pw *= self.f
        return self.element((q.numerator * (pw // q.denominator),), j)

    def from_rational(self, q) -> RingElement:
        x = self.try_from_rational(q)
        if x is None:
            raise ValueError(f"{q} does not lie in {self!r}")
        return x

    def _add(self, x, y):
        return self.from_rational(self.rational_value(x) + self.rational_value(y))

    def _neg(self, x):
        return RingElement(self, (-x.coords[0],), x.k)

    def _mul(self, x, y):
        return self.element((x.coords[0] * y.coords[0],), x.k + y.k)

    def try_inverse(self, x):
        x = self.coerce(x)
        n = x.coords[0]
        if n == 0:
            return None
        m = abs(n)
        g = gcd(m, self.f)
        while g > 1:
            m //= g
            g = gcd(m, self.f)
        if m != 1:
            return None  # numerator has a prime away from f
        return self.from_rational(Fraction(1) / self.rational_value(x))

    def try_divide(self, p, q):
        if q.is_zero():
            return None
        return self.try_from_rational(self.rational_value(p) / self.rational_value(q))

    def _try_halve(self, x):
        return self.try_from_rational(self.rational_value(x) / 2)

    def mod2(self, x):
        if self.f % 2 == 0:
            return Mod2Element(self, (0,))
        return Mod2Element(self, (x.coords[0] % 2,))

    def mod2_residues(self):
        if self.f % 2 == 0:
            return [Mod2Element(self, (0,))]
        return [Mod2Element(self, (0,)), Mod2Element(self, (1,))]

    def in_4R(self, x):
        return self.try_from_rational(self.rational_value(x) / 4) is not None

    def format_element(self, x):
        if x.k == 0:
            return str(x.coords[0])
        return f"{x.coords[0]}/{self.f ** x.k}"

    def descriptor(self):
        return {"kind": "localization", "f": self.f}

    def describe(self):
        return f"Z[1/{self.f}]"


def construct_ring(descriptor: dict) -> Ring:
    """Build a ring handle from its JSON descriptor, verifying the axioms."""
    kind = descriptor.get("kind")
    if kind == "integers":
        return IntegerRing()
    if kind == "table":
        ring = TableRing(descriptor["mul"], one=descriptor.get("one"),
                         symbols=descriptor.get("symbols"))
        if "rank" in descriptor and int(descriptor["rank"]) != ring.rank:
            raise ValueError("descriptor rank disagrees with the tensor shape")
        return ring
    if kind == "quotient":
        return QuotientRing(construct_ring(descriptor["base"]), int(descriptor["m"]))
    if kind == "localization":
        return LocalizationRing(int(descriptor["f"]))
    raise ValueError(f"unknown ring kind {kind!r}")


def quadratic_table_ring(n: int, symbol: str = "w") -> TableRing:
    """Z[sqrt(N)] on the basis (1, w) with w^2 = N."""
    table = [[(1, 0), (0, 1)], [(0, 1), (n, 0)]]
    return TableRing(table, one=(1, 0), symbols=("1", symbol))
