"""Traceless 2x2 matrices over R, GL2(R), the bracket and conjugation.

Conjugation is always ``conj(P, Z) = P^-1 Z P``.  The automorphism
``Z -> P Z P^-1`` is ``conj(P.inverse(), Z)``; keep the two apart.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatch,
    LemmaViolation,
    NotATriple,
    NotDivisible,
    NotInvertibleOverR,
    ZeroElement,
)
from .poly import Poly, PolyRing, is_unit


@dataclass(frozen=True)
class MatSL2:
    """``[[a, b], [c, -a]]``."""

    a: Poly
    b: Poly
    c: Poly

    @property
    def ring(self) -> PolyRing:
        return self.a.ring

    @classmethod
    def of(cls, ring: PolyRing, a, b, c) -> MatSL2:
        return cls(ring.coerce(a), ring.coerce(b), ring.coerce(c))

    @classmethod
    def zero(cls, ring: PolyRing) -> MatSL2:
        return cls(ring.zero, ring.zero, ring.zero)

    def coords(self) -> tuple[Poly, Poly, Poly]:
        return (self.a, self.b, self.c)

    def rows(self) -> tuple[tuple[Poly, Poly], tuple[Poly, Poly]]:
        return ((self.a, self.b), (self.c, -self.a))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def __add__(self, other: MatSL2) -> MatSL2:
        return MatSL2(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: MatSL2) -> MatSL2:
        return MatSL2(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> MatSL2:
        return MatSL2(-self.a, -self.b, -self.c)

    def scale(self, r) -> MatSL2:
        """Multiply by a ring element or field scalar."""
        if isinstance(r, Poly):
            return MatSL2(self.a * r, self.b * r, self.c * r)
        return MatSL2(self.a.scale(r), self.b.scale(r), self.c.scale(r))

    def divexact(self, r) -> MatSL2:
        return MatSL2(self.a.divexact(r), self.b.divexact(r), self.c.divexact(r))

    def map_entries(self, fn) -> MatSL2:
        return MatSL2(fn(self.a), fn(self.b), fn(self.c))

    def transpose(self) -> MatSL2:
        return MatSL2(self.a, self.c, self.b)

    def quadratic(self) -> Poly:
        """``a^2 + bc`` (minus the determinant)."""
        return self.a * self.a + self.b * self.c

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {-self.a}]]"


def standard_basis(ring: PolyRing) -> tuple[MatSL2, MatSL2, MatSL2]:
    """``(e, h, f)``."""
    z, o = ring.zero, ring.one
    return MatSL2(z, o, z), MatSL2(o, z, z), MatSL2(z, z, o)


def bracket(A: MatSL2, B: MatSL2) -> MatSL2:
    """``AB - BA`` in coordinates."""
    if A.ring != B.ring:
        raise FieldMismatch(f"{A.ring} vs {B.ring}")
    a1, a2, a3 = A.a, A.b, A.c
    b1, b2, b3 = B.a, B.b, B.c
    return MatSL2(
        a2 * b3 - a3 * b2,
        (a1 * b2 - a2 * b1).scale(2),
        (a3 * b1 - a1 * b3).scale(2),
    )


def ad_matrix(X: MatSL2) -> list[list[Poly]]:
    """Matrix of ``ad X`` on coordinates ``(a, b, c)``."""
    x1, x2, x3 = X.a, X.b, X.c
    z = X.ring.zero
    two = X.ring.const(2)
    # columns: images of h=(1,0,0), e=(0,1,0), f=(0,0,1)
    return [
        [z, -x3, x2],
        [-two * x2, two * x1, z],
        [two * x3, z, -two * x1],
    ]


def is_involution(H: MatSL2) -> bool:
    return H.quadratic() == 1


def is_square_zero(X: MatSL2) -> bool:
    return X.quadratic().is_zero()


class MatGL2:
    """Invertible 2x2 matrix over R with cached inverse."""

    __slots__ = ("p11", "p12", "p21", "p22", "det", "det_inv", "_inv")

    def __init__(self, p11: Poly, p12: Poly, p21: Poly, p22: Poly):
        ring = p11.ring
        for p in (p12, p21, p22):
            if p.ring != ring:
                raise FieldMismatch(f"{p.ring} vs {ring}")
        det = p11 * p22 - p12 * p21
        det_inv = is_unit(det)
        if det_inv is None:
            raise NotInvertibleOverR(f"determinant {det} is not a unit")
        self.p11, self.p12, self.p21, self.p22 = p11, p12, p21, p22
        self.det = det
        self.det_inv = det_inv
        self._inv = None

    @property
    def ring(self) -> PolyRing:
        return self.p11.ring

    @classmethod
    def identity(cls, ring: PolyRing) -> MatGL2:
        return cls(ring.one, ring.zero, ring.zero, ring.one)

    @classmethod
    def diag(cls, ring: PolyRing, d1, d2) -> MatGL2:
        return cls(ring.coerce(d1), ring.zero, ring.zero, ring.coerce(d2))

    @classmethod
    def e12(cls, r: Poly) -> MatGL2:
        ring = r.ring
        return cls(ring.one, r, ring.zero, ring.one)

    @classmethod
    def e21(cls, r: Poly) -> MatGL2:
        ring = r.ring
        return cls(ring.one, ring.zero, r, ring.one)

    def entries(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.p11, self.p12, self.p21, self.p22)

    def rows(self):
        return ((self.p11, self.p12), (self.p21, self.p22))

    def inverse(self) -> MatGL2:
        if self._inv is None:
            d = self.det_inv
            inv = MatGL2.__new__(MatGL2)
            inv.p11, inv.p12 = self.p22 * d, -self.p12 * d
            inv.p21, inv.p22 = -self.p21 * d, self.p11 * d
            inv.det = d
            inv.det_inv = self.det
            inv._inv = self
            self._inv = inv
        return self._inv

    def __matmul__(self, other: MatGL2) -> MatGL2:
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return MatGL2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def map_entries(self, fn) -> MatGL2:
        return MatGL2(fn(self.p11), fn(self.p12), fn(self.p21), fn(self.p22))

    def scale(self, u) -> MatGL2:
        return self.map_entries(lambda p: p.scale(u))

    def __eq__(self, other):
        return isinstance(other, MatGL2) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def is_identity(self) -> bool:
        return self.p11 == 1 and self.p22 == 1 and self.p12.is_zero() and self.p21.is_zero()

    def __repr__(self):
        return f"MatGL2([[{self.p11}, {self.p12}], [{self.p21}, {self.p22}]])"


def gl2_new(p11: Poly, p12: Poly, p21: Poly, p22: Poly) -> MatGL2:
    return MatGL2(p11, p12, p21, p22)


def equal_up_to_center(P: MatGL2, Q: MatGL2):
    """Unit ``u`` with ``Q = u P``, or ``None``."""
    for p, q in zip(P.entries(), Q.entries()):
        if p:
            try:
                u = q.divexact(p)
            except NotDivisible:
                return None
            if is_unit(u) is None:
                return None
            c = u.constant_value()
            if all(pp.scale(c) == qq for pp, qq in zip(P.entries(), Q.entries())):
                return c
            return None
    return None


def conj(P: MatGL2, Z: MatSL2) -> MatSL2:
    """``P^-1 Z P``."""
    Pi = P.inverse()
    a, b, c = Z.a, Z.b, Z.c
    # Z P
    zp11 = a * P.p11 + b * P.p21
    zp12 = a * P.p12 + b * P.p22
    zp21 = c * P.p11 - a * P.p21
    zp22 = c * P.p12 - a * P.p22
    return MatSL2(
        Pi.p11 * zp11 + Pi.p12 * zp21,
        Pi.p11 * zp12 + Pi.p12 * zp22,
        Pi.p21 * zp11 + Pi.p22 * zp21,
    )


def tau(P: MatGL2, Z: MatSL2) -> MatSL2:
    """The automorphism ``Z -> P Z P^-1``."""
    return conj(P.inverse(), Z)


@dataclass(frozen=True)
class Sl2Triple:
    X: MatSL2
    H: MatSL2
    Y: MatSL2

    @property
    def ring(self) -> PolyRing:
        return self.H.ring

    def as_tuple(self):
        return (self.X, self.H, self.Y)


def lemma_identities(X: MatSL2, H: MatSL2, Y: MatSL2) -> dict[str, bool]:
    """The four identities every triple over an integral domain satisfies."""
    q = H.quadratic()
    return {
        "H1^2+H2H3=1": q == 1,
        "X1^2+X2X3=0": X.quadratic().is_zero(),
        "Y1^2+Y2Y3=0": Y.quadratic().is_zero(),
        # H^2 = (H1^2 + H2H3) I for traceless H, computed here entrywise
        "H^2=I": _square_is_identity(H, q),
    }


def _square_is_identity(H: MatSL2, q: Poly) -> bool:
    # entries of H^2: (1,1) = a^2 + bc, (1,2) = ab - ba, (2,1) = ca - ac, (2,2) = cb + a^2
    a, b, c = H.a, H.b, H.c
    return q == 1 and (a * b - b * a).is_zero() and (c * a - a * c).is_zero() and c * b + a * a == 1


def verify_triple(X: MatSL2, H: MatSL2, Y: MatSL2) -> Sl2Triple:
    for name, M in (("X", X), ("H", H), ("Y", Y)):
        if M.is_zero():
            raise ZeroElement(f"{name} is zero")
    if bracket(H, X) != X.scale(2):
        raise NotATriple("[H,X] != 2X")
    if bracket(H, Y) != Y.scale(-2):
        raise NotATriple("[H,Y] != -2Y")
    if bracket(X, Y) != H:
        raise NotATriple("[X,Y] != H")
    failed = [k for k, ok in lemma_identities(X, H, Y).items() if not ok]
    if failed:
        raise LemmaViolation(f"bracket relations hold but {failed} fail")
    return Sl2Triple(X, H, Y)


def standard_triple(ring: PolyRing) -> Sl2Triple:
    e, h, f = standard_basis(ring)
    return Sl2Triple(e, h, f)
