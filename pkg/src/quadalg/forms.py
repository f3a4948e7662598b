"""Twisted binary quadratic forms [a,b,c] with the GL2xGL1 and twisted GL2
actions, the natural (discriminant, parity) invariant, primitivity, and
reduction/equivalence over Z for negative discriminants.
"""

from __future__ import annotations

from math import gcd

from .algebras import AlgebraType
from .errors import (
    DiscriminantMismatch,
    InvalidDiscriminant,
    NotAUnit,
    NotDefinite,
    SingularMatrix,
    UnsupportedRing,
)
from .ring import IntegerRing, Ring, RingElement, TableRing, xgcd

NaturalType = AlgebraType  # same (discriminant, parity) shape, shared class

_Z = IntegerRing()


class TwistedForm:
    """q = a x^2 z + b xy z + c y^2 z in a trivialized basis."""

    __slots__ = ("ring", "a", "b", "c")

    def __init__(self, ring: Ring, a, b, c):
        self.ring = ring
        self.a = ring.coerce(a)
        self.b = ring.coerce(b)
        self.c = ring.coerce(c)

    @classmethod
    def over_z(cls, a: int, b: int, c: int) -> TwistedForm:
        return cls(_Z, a, b, c)

    def coefficients(self) -> tuple[RingElement, RingElement, RingElement]:
        return self.a, self.b, self.c

    def int_coefficients(self) -> tuple[int, int, int]:
        return int(self.a), int(self.b), int(self.c)

    def opposite(self) -> TwistedForm:
        return TwistedForm(self.ring, self.a, -self.b, self.c)

    def discriminant(self) -> RingElement:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x, y) -> RingElement:
        x = self.ring.coerce(x)
        y = self.ring.coerce(y)
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedForm):
            return NotImplemented
        return (self.ring == other.ring and self.a == other.a
                and self.b == other.b and self.c == other.c)

    def __hash__(self):
        return hash(("form", self.a, self.b, self.c))

    def __repr__(self):
        return f"[{self.a!r},{self.b!r},{self.c!r}]"

    def to_json(self):
        ring = self.ring
        return {"ring": ring.descriptor(), "a": ring.element_to_json(self.a),
                "b": ring.element_to_json(self.b), "c": ring.element_to_json(self.c)}


class GL2Matrix:
    """[[alpha, beta], [gamma, delta]] with unit determinant."""

    __slots__ = ("ring", "alpha", "beta", "gamma", "delta")

    def __init__(self, ring: Ring, alpha, beta, gamma, delta):
        self.ring = ring
        self.alpha = ring.coerce(alpha)
        self.beta = ring.coerce(beta)
        self.gamma = ring.coerce(gamma)
        self.delta = ring.coerce(delta)
        if not ring.is_unit(self.det()):
            raise SingularMatrix(f"determinant {self.det()!r} is not a unit")

    def det(self) -> RingElement:
        return self.alpha * self.delta - self.beta * self.gamma

    @classmethod
    def identity(cls, ring: Ring) -> GL2Matrix:
        return cls(ring, 1, 0, 0, 1)

    def __mul__(self, other: GL2Matrix) -> GL2Matrix:
        if self.ring != other.ring:
            raise ValueError("matrices over different rings")
        a1, b1, c1, d1 = self.alpha, self.beta, self.gamma, self.delta
        a2, b2, c2, d2 = other.alpha, other.beta, other.gamma, other.delta
        return GL2Matrix(self.ring, a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                         c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GL2Matrix):
            return NotImplemented
        return (self.alpha, self.beta, self.gamma, self.delta) == \
               (other.alpha, other.beta, other.gamma, other.delta)

    def __hash__(self):
        return hash(("mat", self.alpha, self.beta, self.gamma, self.delta))

    def __repr__(self):
        return f"[[{self.alpha!r},{self.beta!r}],[{self.gamma!r},{self.delta!r}]]"


def act_gl2gl1(mu: GL2Matrix, e, q: TwistedForm) -> TwistedForm:
    """Substitute (x, y) -> (alpha x + beta y, gamma x + delta y), scale by e."""
    ring = q.ring
    e = ring.coerce(e)
    if not ring.is_unit(e):
        raise NotAUnit(f"scale factor {e!r} is not a unit")
    al, be, ga, de = mu.alpha, mu.beta, mu.gamma, mu.delta
    a2 = q.evaluate(al, ga)
    b2 = 2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de
    c2 = q.evaluate(be, de)
    return TwistedForm(ring, e * a2, e * b2, e * c2)


def act_gl2tw(mu: GL2Matrix, q: TwistedForm) -> TwistedForm:
    """Twisted action: the substitution followed by division by det(mu)."""
    det_inv = q.ring.try_inverse(mu.det())
    if det_inv is None:
        raise SingularMatrix(f"determinant {mu.det()!r} is not a unit")
    return act_gl2gl1(mu, det_inv, q)


def natural_type(q: TwistedForm) -> NaturalType:
    return NaturalType(q.discriminant(), q.ring.mod2(q.b))


def _lattice_is_full(rows: list[list[int]], n: int) -> bool:
    """True when the integer row span equals Z^n (unit index)."""
    mat = [row[:] for row in rows]
    r = 0
    det = 1
    for col in range(n):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col]:
                if piv is None:
                    piv = i
                    continue
                g, u, v = xgcd(mat[piv][col], mat[i][col])
                a, b = mat[piv][col] // g, mat[i][col] // g
                rp, ri = mat[piv], mat[i]
                mat[piv] = [u * x + v * y for x, y in zip(rp, ri)]
                mat[i] = [a * y - b * x for x, y in zip(rp, ri)]
        if piv is None:
            return False  # rank deficient
        mat[r], mat[piv] = mat[piv], mat[r]
        det *= abs(mat[r][col])
        r += 1
        if r == len(mat):
            break
    return r == n and det == 1


def is_primitive(q: TwistedForm) -> bool:
    """Whether a, b, c generate the unit ideal."""
    ring = q.ring
    if isinstance(ring, IntegerRing):
        a, b, c = q.int_coefficients()
        return gcd(gcd(a, b), c) == 1
    if isinstance(ring, TableRing):
        n = ring.rank
        rows = []
        for g in (q.a, q.b, q.c):
            for i in range(n):
                ei = tuple(1 if t == i else 0 for t in range(n))
                rows.append(list(ring._mul_coords(g.coords, ei)))
        return _lattice_is_full(rows, n)
    raise UnsupportedRing(f"primitivity is not decided over {ring!r}")


def principal_form(delta: int) -> TwistedForm:
    """[1, pt, (pt^2 - delta)/4] over Z with pt = delta mod 2."""
    if delta >= 0 or delta % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{delta} is not a negative discriminant")
    pt = delta % 2
    return TwistedForm.over_z(1, pt, (pt * pt - delta) // 4)


def _translate(t: int) -> GL2Matrix:
    return GL2Matrix(_Z, 1, t, 0, 1)


_SWAP = GL2Matrix(_Z, 0, -1, 1, 0)
_FLIP = GL2Matrix(_Z, 1, 0, 0, -1)


def reduce_posdef_with_witness(q: TwistedForm) -> tuple[TwistedForm, GL2Matrix]:
    """Reduced representative plus a matrix W with act_gl2tw(W, q) equal to it."""
    if not isinstance(q.ring, IntegerRing):
        raise UnsupportedRing("reduction is implemented over Z only")
    a, b, c = q.int_coefficients()
    if b * b - 4 * a * c >= 0:
        raise NotDefinite(f"discriminant {b * b - 4 * a * c} is not negative")
    witness = GL2Matrix.identity(_Z)
    cur = q
    if a < 0:
        cur = act_gl2tw(_FLIP, cur)  # [a,b,c] -> [-a,b,-c]
        witness = witness * _FLIP
    while True:
        a, b, c = cur.int_coefficients()
        # bring b into (-a, a]
        t = (a - b) // (2 * a)
        if t:
            mv = _translate(t)
            cur = act_gl2tw(mv, cur)
            witness = witness * mv
            a, b, c = cur.int_coefficients()
        if a > c:
            cur = act_gl2tw(_SWAP, cur)
            witness = witness * _SWAP
            continue
        if a == c and b < 0:
            cur = act_gl2tw(_SWAP, cur)
            witness = witness * _SWAP
        break
    return cur, witness


def reduce_posdef(q: TwistedForm) -> TwistedForm:
    return reduce_posdef_with_witness(q)[0]


def is_reduced(q: TwistedForm) -> bool:
    a, b, c = q.int_coefficients()
    if not (-a < b <= a <= c):
        return False
    return b >= 0 if a == c else True


def _check_definite_pair(q1: TwistedForm, q2: TwistedForm) -> None:
    if not isinstance(q1.ring, IntegerRing) or not isinstance(q2.ring, IntegerRing):
        raise UnsupportedRing("equivalence testing is implemented over Z only")
    d1 = int(q1.discriminant())
    d2 = int(q2.discriminant())
    if d1 >= 0 or d2 >= 0:
        raise NotDefinite("both forms must have negative discriminant")
    if d1 != d2:
        raise DiscriminantMismatch(f"{d1} != {d2}")


def equivalent_gl2tw(q1: TwistedForm, q2: TwistedForm) -> bool:
    _check_definite_pair(q1, q2)
    return reduce_posdef(q1) == reduce_posdef(q2)


def equivalent_gl2gl1(q1: TwistedForm, q2: TwistedForm) -> bool:
    """Twisted-equivalent to q1 or to its opposite (the det=-1, e=1 orbit)."""
    _check_definite_pair(q1, q2)
    r2 = reduce_posdef(q2)
    return r2 == reduce_posdef(q1) or r2 == reduce_posdef(q1.opposite())
