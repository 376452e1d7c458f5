"""Constructive conjugacy results for sl2 over F[x1..xn].

Every function returns data that its caller can re-verify with exact
arithmetic; most of them also verify their own postcondition before
returning, because a failure there would mean an arithmetic bug rather than
bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DegenerateCase,
    InternalNonUnitQuotient,
    InternalShapeViolation,
    LemmaViolation,
    MultivariateUnsupported,
    NotAdDiagonalizable,
    NotComaximal,
    NotInvolution,
    NotMember,
    NotNilpotent,
    RequiresSquareRoot,
    ZeroElement,
)
from .field import square_in_field
from .poly import (
    BezoutCert,
    Poly,
    PolyRing,
    comaximal_certificate,
    is_unit,
    poly_gcd,
    poly_gcd_many,
)
from .sl2 import (
    MatGL2,
    MatSL2,
    Sl2Triple,
    conj,
    is_involution,
    standard_basis,
    tau,
    verify_triple,
)


def _unit_quotient(num: Poly, den: Poly, what: str):
    q = num.divexact(den)
    if is_unit(q) is None:
        raise InternalNonUnitQuotient(f"{what} = {q} is not a unit")
    return q.constant_value()


def _require_involution(H: MatSL2) -> None:
    if not is_involution(H):
        raise NotInvolution(f"H1^2 + H2H3 = {H.quadratic()} != 1")


# ---------------------------------------------------------------------------
# involutions


@dataclass(frozen=True)
class InvolutionFactorization:
    """``H1-1 = u a b``, ``H1+1 = u' a' b'``, ``H2 = v a a'``, ``H3 = w b b'``."""

    a: Poly
    a_: Poly
    b: Poly
    b_: Poly
    u: object
    u_: object
    v: object
    w: object


def ufd_factor_involution(H: MatSL2) -> InvolutionFactorization:
    _require_involution(H)
    if H.b.is_zero() or H.c.is_zero():
        raise DegenerateCase("H2 = 0 or H3 = 0; use the explicit branches")
    field = H.ring.field
    hm, hp = H.a - 1, H.a + 1
    a, a_ = poly_gcd(hm, H.b), poly_gcd(hp, H.b)
    b, b_ = poly_gcd(hm, H.c), poly_gcd(hp, H.c)
    u = _unit_quotient(hm, a * b, "(H1-1)/(ab)")
    u_ = _unit_quotient(hp, a_ * b_, "(H1+1)/(a'b')")
    v = _unit_quotient(H.b, a * a_, "H2/(aa')")
    w = _unit_quotient(H.c, b * b_, "H3/(bb')")
    if field.reduce(u * u_ + v * w):
        raise InternalNonUnitQuotient("uu' != -vw")
    return InvolutionFactorization(a, a_, b, b_, u, u_, v, w)


def triple_from_involution(H: MatSL2) -> Sl2Triple:
    """An sl2-triple ``(X, H, Y)`` around an involution ``H``."""
    _require_involution(H)
    ring = H.ring
    z, one = ring.zero, ring.one
    h1, h2, h3 = H.coords()
    half = ring.field.inv(ring.field.elem(2))
    quarter = ring.field.reduce(half * half)
    if h2.is_zero():
        if h1 == 1:
            X = MatSL2(-h3.scale(half), one, -(h3 * h3).scale(quarter))
            Y = MatSL2(z, z, one)
        else:
            X = MatSL2(z, z, -one)
            Y = MatSL2(-h3.scale(half), -one, (h3 * h3).scale(quarter))
    elif h3.is_zero():
        if h1 == 1:
            X = MatSL2(z, one, z)
            Y = MatSL2(-h2.scale(half), -(h2 * h2).scale(quarter), one)
        else:
            X = MatSL2(-h2.scale(half), (h2 * h2).scale(quarter), -one)
            Y = MatSL2(z, -one, z)
    else:
        fac = ufd_factor_involution(H)
        hm, hp = h1 - 1, h1 + 1
        Xp = MatSL2(hm * h2, h2 * h2, -(hm * hm))
        Yp = MatSL2(-(hp * h2), -(h2 * h2), hp * hp)
        two_v = ring.const(fac.v).scale(2)
        X = Xp.divexact(two_v * fac.a * fac.a)
        Y = Yp.divexact(two_v * fac.a_ * fac.a_)
    return verify_triple(X, H, Y)


def diagonalize_involution(H: MatSL2) -> MatGL2:
    """``P`` in GL2(R) with ``P^-1 H P = diag(1, -1)``."""
    _require_involution(H)
    ring = H.ring
    z, one = ring.zero, ring.one
    h1, h2, h3 = H.coords()
    half = ring.field.inv(ring.field.elem(2))
    if h2.is_zero():
        if h1 == 1:
            P = MatGL2(one, z, h3.scale(half), one)
        else:
            P = MatGL2(z, -one, one, h3.scale(half))
    elif h3.is_zero():
        if h1 == 1:
            P = MatGL2(one, -h2.scale(half), z, one)
        else:
            P = MatGL2(h2.scale(half), -one, one, z)
    else:
        f = ufd_factor_involution(H)
        P = MatGL2(f.a_.scale(f.u_), f.a.scale(f.u), f.b.scale(f.w), f.b_.scale(f.w))
    _, h, _ = standard_basis(ring)
    if conj(P, H) != h:
        raise InternalShapeViolation("P^-1 H P != diag(1,-1)")
    return P


# ---------------------------------------------------------------------------
# triples


def standardize_triple(T: Sl2Triple) -> MatGL2:
    """``P`` with ``P^-1 (X, H, Y) P = (e, h, f)``."""
    ring = T.ring
    P0 = diagonalize_involution(T.H)
    Xs, Ys = conj(P0, T.X), conj(P0, T.Y)
    if not (Xs.a.is_zero() and Xs.c.is_zero()):
        raise InternalShapeViolation(f"P0^-1 X P0 = {Xs} is not strictly upper triangular")
    u_inv = is_unit(Xs.b)
    if u_inv is None:
        raise InternalShapeViolation(f"P0^-1 X P0 has non-unit entry {Xs.b}")
    if not (Ys.a.is_zero() and Ys.b.is_zero() and Ys.c == u_inv):
        raise InternalShapeViolation(f"P0^-1 Y P0 = {Ys} is not [[0,0],[1/u,0]]")
    # conj(diag(u,1), [[0,u],[0,0]]) = e
    P = P0 @ MatGL2.diag(ring, Xs.b, ring.one)
    e, h, f = standard_basis(ring)
    if (conj(P, T.X), conj(P, T.H), conj(P, T.Y)) != (e, h, f):
        raise InternalShapeViolation("standardization failed")
    return P


def triple_basis_matrix(T: Sl2Triple) -> list[list[Poly]]:
    """Columns hold the coordinates of ``H``, ``X``, ``Y``; determinant is 1."""
    B = [
        [T.H.a, T.X.a, T.Y.a],
        [T.H.b, T.X.b, T.Y.b],
        [T.H.c, T.X.c, T.Y.c],
    ]
    if det3(B) != 1:
        raise LemmaViolation(f"det B = {det3(B)} != 1")
    return B


def det3(B: Sequence[Sequence[Poly]]) -> Poly:
    return (
        B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1])
        - B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0])
        + B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0])
    )


def theta(T: Sl2Triple, Z: MatSL2) -> MatSL2:
    """``Z1 H + Z2 X + Z3 Y``: the R-linear map sending ``(h, e, f)`` to ``(H, X, Y)``."""
    return T.H.scale(Z.a) + T.X.scale(Z.b) + T.Y.scale(Z.c)


def theta_inverse(T: Sl2Triple, Z: MatSL2) -> MatSL2:
    """Coordinates of ``Z`` in the basis ``(H, X, Y)``, packed as a matrix."""
    B = triple_basis_matrix(T)
    # det B = 1, so the inverse is the adjugate
    adj = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for k, r in enumerate(B) if k != j]
            minor = [[x for k, x in enumerate(r) if k != i] for r in rows]
            m = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            adj[i][j] = m if (i + j) % 2 == 0 else -m
    v = Z.coords()
    c = [adj[i][0] * v[0] + adj[i][1] * v[1] + adj[i][2] * v[2] for i in range(3)]
    return MatSL2(*c)


# ---------------------------------------------------------------------------
# nilpotents


def _nilpotent_cert(X: MatSL2, cert) -> BezoutCert:
    if X.is_zero():
        raise ZeroElement("X is zero")
    if not X.quadratic().is_zero():
        raise NotNilpotent(f"X1^2 + X2X3 = {X.quadratic()} != 0")
    return comaximal_certificate(X.b, X.c, cert)


def jacobson_morozov(X: MatSL2, cert=None) -> Sl2Triple:
    """Complete a square-zero ``X`` with comaximal off-diagonals to a triple."""
    c = _nilpotent_cert(X, cert)
    r, s = c.r, c.s
    x1, x2, x3 = X.coords()
    d = r * x2 - s * x3
    H = MatSL2(d, (s * x1).scale(2), (r * x1).scale(-2))
    rs = r * s
    Y = MatSL2(-(rs * x1), s * s * x3, r * r * x2)
    return verify_triple(X, H, Y)


def nilpotent_to_standard(X: MatSL2, cert=None) -> MatGL2:
    """``P`` with ``P^-1 X P = e`` for square-zero ``X`` with comaximal off-diagonals."""
    c = _nilpotent_cert(X, cert)
    ring = X.ring
    field = ring.field
    x1, x2, x3 = X.coords()
    if x1.is_zero():
        if x3.is_zero():
            # X = [[0, v], [0, 0]] with v a unit
            p, q, w = x2, ring.zero, field.reduce(-x2.constant_value())
        else:
            # X = [[0, 0], [w, 0]] with w a unit
            p, q, w = ring.zero, ring.one, x3.constant_value()
    else:
        p0, q = poly_gcd(x1, x2), poly_gcd(x1, x3)
        u = _unit_quotient(x1, p0 * q, "X1/(pq)")
        p = p0.scale(u)
        w = _unit_quotient(x3, q * q, "X3/q^2")
        if x2 != (p * p).scale(field.reduce(-field.inv(w))):
            raise InternalNonUnitQuotient("X2 != -(1/w) p^2")
    wq = q.scale(w)
    P = MatGL2(p, c.s * wq, wq, c.r * p)
    if P.det != ring.const(field.reduce(-w)):
        raise InternalShapeViolation(f"det P = {P.det} != -w")
    if conj(P, X) != standard_basis(ring)[0]:
        raise InternalShapeViolation("P^-1 X P != e")
    return P


def bezout_from_conjugation(P: MatGL2) -> BezoutCert:
    """Certificate for ``(X2) + (X3) = R`` where ``X = P e P^-1``.

    Works over any coordinate ring, so it is the source of certificates in
    several variables.
    """
    a, b, c, d = P.entries()
    delta_inv = P.det_inv
    t = d * delta_inv
    u = -(b * delta_inv)
    one = P.ring.one
    r0 = t * t * (one + (u * c).scale(2))
    s0 = u * u * (one + (t * a).scale(2))
    # r0 a^2 + s0 c^2 = 1 and X2 = a^2/delta, X3 = -c^2/delta
    X = tau(P, standard_basis(P.ring)[0])
    return BezoutCert(r0 * P.det, -(s0 * P.det), (X.b, X.c))


# ---------------------------------------------------------------------------
# MADs and sl2(F) membership


def mad_normalize(Hp: MatSL2):
    """``(lambda, P)`` with ``P^-1 H' P = diag(lambda, -lambda)``."""
    if Hp.is_zero():
        raise ZeroElement("H' is zero")
    ring = Hp.ring
    field = ring.field
    d = Hp.quadratic()
    if d.is_zero():
        raise NotAdDiagonalizable("H'1^2 + H'2H'3 = 0: ad H' is nilpotent")
    if not d.is_constant():
        raise NotAdDiagonalizable(f"H'1^2 + H'2H'3 = {d} is not a constant")
    lam = square_in_field(field, d.constant_value())
    if lam is None:
        raise NotAdDiagonalizable(f"{field.format(d.constant_value())} is not a square in F")
    P = diagonalize_involution(Hp.scale(field.inv(lam)))
    target = MatSL2(ring.const(lam), ring.zero, ring.zero)
    if conj(P, Hp) != target:
        raise InternalShapeViolation("P^-1 H' P != diag(lambda, -lambda)")
    return lam, P


@dataclass(frozen=True)
class MembershipWitness:
    kind: str  # "nilpotent" or "semisimple"
    triple: Sl2Triple
    lam: object = None

    def coefficients(self, Z: MatSL2):
        """``(x, h, y)`` in F with ``Z = xX + hH + yY``."""
        ring = Z.ring
        if self.kind == "nilpotent":
            return (ring.field.elem(1), ring.field.elem(0), ring.field.elem(0))
        return (ring.field.elem(0), self.lam, ring.field.elem(0))


def sl2F_membership(Z: MatSL2, cert=None) -> MembershipWitness:
    if Z.is_zero():
        raise ZeroElement("Z is zero")
    field = Z.ring.field
    d = Z.quadratic()
    if d.is_zero():
        try:
            T = jacobson_morozov(Z, cert)
        except NotComaximal as exc:
            raise NotMember(f"(Z2) + (Z3) != R: {exc}") from exc
        return MembershipWitness("nilpotent", T)
    if not d.is_constant():
        raise NotMember(f"Z1^2 + Z2Z3 = {d} is neither 0 nor in F^x")
    lam = square_in_field(field, d.constant_value())
    if lam is None:
        raise RequiresSquareRoot(
            f"Z1^2 + Z2Z3 = {field.format(d.constant_value())} has no square root in F"
        )
    T = triple_from_involution(Z.scale(field.inv(lam)))
    return MembershipWitness("semisimple", T, lam)


def ideal_correspondence(gens: Sequence[Poly], Z: MatSL2) -> bool:
    """Whether ``Z`` lies in ``sl2(A)`` for the ideal ``A`` generated by ``gens``."""
    ring: PolyRing = Z.ring
    if ring.nvars > 1:
        raise MultivariateUnsupported("ideal membership is decided only over F[t]")
    g = poly_gcd_many(gens, ring)
    if g.is_zero():
        return Z.is_zero()
    return all(g.divides(x) for x in Z.coords())
