"""Automorphisms ``PGL2(R) x| Aut_F(R)`` and derivations ``InnD + Der_F(R)``.

An automorphism is stored as a pair ``(P, rho)`` acting by
``Z -> P rho(Z) P^-1``; a derivation as ``(Z, delta)`` acting by
``M -> [Z, M] + delta(M)``.  Ring maps are stored by generator images
together with inverse images, checked by composing both ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .conjugacy import standardize_triple
from .errors import (
    FieldMismatch,
    InconsistentDiagonalData,
    NotADerivation,
    NotDiagonalAfterStandardization,
    NotInvertibleSubstitution,
)
from .poly import Poly, PolyRing
from .sl2 import (
    MatGL2,
    MatSL2,
    Sl2Triple,
    bracket,
    conj,
    equal_up_to_center,
    standard_basis,
    tau,
    verify_triple,
)


# ---------------------------------------------------------------------------
# ring maps


class RingIso:
    """F-algebra isomorphism ``source -> target`` given on generators."""

    __slots__ = ("source", "target", "images", "inverse_images")

    def __init__(
        self,
        source: PolyRing,
        target: PolyRing,
        images: Sequence[Poly],
        inverse_images: Sequence[Poly] | None = None,
    ):
        if source.field != target.field:
            raise FieldMismatch(f"{source.field} vs {target.field}")
        images = tuple(target.coerce(p) for p in images)
        if len(images) != source.nvars:
            raise NotInvertibleSubstitution(
                f"need {source.nvars} images, got {len(images)}"
            )
        if inverse_images is None:
            if source != target:
                raise NotInvertibleSubstitution("inverse images are required between different rings")
            inverse_images = invert_substitution(target, images)
        inverse_images = tuple(source.coerce(p) for p in inverse_images)
        if len(inverse_images) != target.nvars:
            raise NotInvertibleSubstitution(
                f"need {target.nvars} inverse images, got {len(inverse_images)}"
            )
        for x, img in zip(source.gens(), images):
            if img.substitute(inverse_images, source) != x:
                raise NotInvertibleSubstitution(f"inverse fails to undo {x} -> {img}")
        for y, pre in zip(target.gens(), inverse_images):
            if pre.substitute(images, target) != y:
                raise NotInvertibleSubstitution(f"inverse image {pre} of {y} is not a preimage")
        self.source, self.target = source, target
        self.images, self.inverse_images = images, inverse_images

    def __call__(self, p: Poly) -> Poly:
        return p.substitute(self.images, self.target)

    def apply_matrix(self, M):
        return M.map_entries(self)

    def inverse(self) -> RingIso:
        inv = RingIso.__new__(type(self))
        inv.source, inv.target = self.target, self.source
        inv.images, inv.inverse_images = self.inverse_images, self.images
        return inv

    def __eq__(self, other):
        return (
            isinstance(other, RingIso)
            and self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        pairs = ", ".join(
            f"{v} -> {p}" for v, p in zip(self.source.variables, self.images)
        )
        return f"{type(self).__name__}({pairs})"


class RingAut(RingIso):
    """Automorphism of a single ring."""

    __slots__ = ()

    def __init__(self, ring: PolyRing, images, inverse_images=None):
        super().__init__(ring, ring, images, inverse_images)

    @property
    def ring(self) -> PolyRing:
        return self.source

    @classmethod
    def identity(cls, ring: PolyRing) -> RingAut:
        g = ring.gens()
        return cls(ring, g, g)

    def compose(self, other: RingAut) -> RingAut:
        """``self o other``."""
        images = [p.substitute(self.images, self.ring) for p in other.images]
        inverse = [p.substitute(other.inverse_images, self.ring) for p in self.inverse_images]
        return RingAut(self.ring, images, inverse)

    def is_identity(self) -> bool:
        return all(p == x for p, x in zip(self.images, self.ring.gens()))


def invert_substitution(ring: PolyRing, images: Sequence[Poly]) -> tuple[Poly, ...]:
    """Inverse of an affine or triangular substitution.

    Triangular means ``x_i -> c_i x_i + g_i(x_{i+1}, ..., x_n)`` with ``c_i``
    a nonzero constant.  Anything else needs caller-supplied inverse images.
    """
    if all(p.total_degree() <= 1 for p in images):
        return _invert_affine(ring, images)
    return _invert_triangular(ring, images)


def _invert_affine(ring: PolyRing, images) -> tuple[Poly, ...]:
    field = ring.field
    n = ring.nvars
    # images[i] = sum_j A[i][j] x_j + b[i]
    units = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    A = [[p.terms.get(units[j], field.elem(0)) for j in range(n)] for p in images]
    b = [p.terms.get(ring._unit_exp, field.elem(0)) for p in images]
    # Gauss-Jordan on [A | I]
    M = [row[:] + [field.elem(1 if i == j else 0) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if field.reduce(M[r][col])), None)
        if piv is None:
            raise NotInvertibleSubstitution("linear part of the substitution is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = field.inv(M[col][col])
        M[col] = [field.reduce(v * inv) for v in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [field.reduce(v - f * w) for v, w in zip(M[r], M[col])]
    Ainv = [row[n:] for row in M]
    gens = ring.gens()
    out = []
    for i in range(n):
        acc = ring.zero
        for j in range(n):
            acc = acc + (gens[j] - ring.const(b[j])).scale(Ainv[i][j])
        out.append(acc)
    return tuple(out)


def _invert_triangular(ring: PolyRing, images) -> tuple[Poly, ...]:
    field = ring.field
    n = ring.nvars
    gens = ring.gens()
    coeffs, tails = [], []
    for i, p in enumerate(images):
        unit = tuple(1 if k == i else 0 for k in range(n))
        c = p.terms.get(unit)
        tail = p - gens[i].scale(c) if c else p
        if not c or any(j <= i for j in tail.variables_used()):
            raise NotInvertibleSubstitution(
                f"image {p} of {ring.variables[i]} is not of triangular form; supply inverse images"
            )
        coeffs.append(c)
        tails.append(tail)
    inv: list[Poly | None] = [None] * n
    for i in reversed(range(n)):
        # x_i = c_i y_i + g_i(y_{i+1..}) with y_k = inv[k] already known for k > i
        sub = [gens[k] if k <= i else inv[k] for k in range(n)]
        g = tails[i].substitute(sub, ring)
        inv[i] = (gens[i] - g).scale(field.inv(coeffs[i]))
    return tuple(inv)


# ---------------------------------------------------------------------------
# Lie automorphisms


@dataclass(frozen=True)
class LieAut:
    """``Z -> P rho(Z) P^-1``; ``P`` is a representative modulo the center."""

    P: MatGL2
    rho: RingAut

    @property
    def ring(self) -> PolyRing:
        return self.rho.ring

    @classmethod
    def identity(cls, ring: PolyRing) -> LieAut:
        return cls(MatGL2.identity(ring), RingAut.identity(ring))

    def __call__(self, Z: MatSL2) -> MatSL2:
        return aut_apply(self, Z)

    def same_as(self, other: LieAut) -> bool:
        """Equality in ``PGL2(R) x| Aut_F(R)``."""
        return (
            self.rho.images == other.rho.images
            and equal_up_to_center(self.P, other.P) is not None
        )


def aut_apply(sigma: LieAut, Z: MatSL2) -> MatSL2:
    return tau(sigma.P, Z.map_entries(sigma.rho))


def aut_compose(s1: LieAut, s2: LieAut) -> LieAut:
    """``s1 o s2`` via ``rho tau_P rho^-1 = tau_{rho(P)}``."""
    if s1.ring != s2.ring:
        raise FieldMismatch(f"{s1.ring} vs {s2.ring}")
    return LieAut(s1.P @ s2.P.map_entries(s1.rho), s1.rho.compose(s2.rho))


def aut_inverse(sigma: LieAut) -> LieAut:
    rinv = sigma.rho.inverse()
    return LieAut(sigma.P.inverse().map_entries(rinv), rinv)


def forward_data(sigma: LieAut):
    """The finite data the recognizer consumes: images of ``e, h, f`` and ``x_i h``."""
    ring = sigma.ring
    e, h, f = standard_basis(ring)
    diag = [aut_apply(sigma, h.scale(x)) for x in ring.gens()]
    return aut_apply(sigma, e), aut_apply(sigma, h), aut_apply(sigma, f), diag


def _read_ring_part(Q: MatGL2, diag_images: Sequence[MatSL2]) -> list[Poly]:
    out = []
    for i, D in enumerate(diag_images):
        Ds = conj(Q, D)
        if not (Ds.b.is_zero() and Ds.c.is_zero()):
            raise NotDiagonalAfterStandardization(
                f"standardized image of x{i + 1}*h is {Ds}, not diagonal"
            )
        out.append(Ds.a)
    return out


def recognize_automorphism(
    imgX: MatSL2,
    imgH: MatSL2,
    imgY: MatSL2,
    diag_images: Sequence[MatSL2],
    inverse_data=None,
) -> LieAut:
    """Rebuild ``(P, rho)`` from the images of ``e, h, f`` and of ``x_i h``.

    ``inverse_data`` is the same kind of tuple for the inverse automorphism.
    Without it the ring part must be affine or triangular so that its inverse
    can be computed directly.
    """
    ring = imgH.ring
    if len(diag_images) != ring.nvars:
        raise NotDiagonalAfterStandardization(
            f"need {ring.nvars} diagonal images, got {len(diag_images)}"
        )
    T = verify_triple(imgX, imgH, imgY)
    # conj(Q, sigma(e, h, f)) = (e, h, f) forces Q^-1 P to be central
    Q = standardize_triple(T)
    images = _read_ring_part(Q, diag_images)
    if inverse_data is not None:
        iX, iH, iY, idiag = inverse_data
        Qi = standardize_triple(verify_triple(iX, iH, iY))
        inverse_images = _read_ring_part(Qi, idiag)
    else:
        inverse_images = None
    sigma = LieAut(Q, RingAut(ring, images, inverse_images))
    if forward_data(sigma) != (imgX, imgH, imgY, list(diag_images)):
        raise NotDiagonalAfterStandardization("recognized pair does not reproduce the data")
    return sigma


def transport_ring_iso(phi: RingIso, M: MatSL2) -> MatSL2:
    """Entrywise image of ``M`` over ``phi.source`` in ``sl2(phi.target)``."""
    if M.ring != phi.source:
        raise FieldMismatch(f"{M.ring} vs {phi.source}")
    return M.map_entries(phi)


# ---------------------------------------------------------------------------
# derivations


class RingDer:
    """F-derivation of ``R`` given by the images of the generators."""

    __slots__ = ("ring", "images")

    def __init__(self, ring: PolyRing, images: Sequence[Poly]):
        images = tuple(ring.coerce(p) for p in images)
        if len(images) != ring.nvars:
            raise NotADerivation(f"need {ring.nvars} images, got {len(images)}")
        self.ring, self.images = ring, images

    @classmethod
    def zero(cls, ring: PolyRing) -> RingDer:
        return cls(ring, [ring.zero] * ring.nvars)

    def __call__(self, p: Poly) -> Poly:
        acc = self.ring.zero
        for i, img in enumerate(self.images):
            if img:
                acc = acc + p.derivative(i) * img
        return acc

    def __eq__(self, other):
        return isinstance(other, RingDer) and (self.ring, self.images) == (other.ring, other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"RingDer({', '.join(map(str, self.images))})"


@dataclass(frozen=True)
class LieDer:
    """``M -> [Z, M] + delta(M)``."""

    Z: MatSL2
    delta: RingDer

    def __call__(self, M: MatSL2) -> MatSL2:
        return der_apply(self, M)


def der_apply(D: LieDer, M: MatSL2) -> MatSL2:
    return bracket(D.Z, M) + M.map_entries(D.delta)


def derivation_data(D: LieDer):
    """``D(e)``, ``D(f)`` and ``D(x_i h)``."""
    ring = D.Z.ring
    e, h, f = standard_basis(ring)
    return der_apply(D, e), der_apply(D, f), [der_apply(D, h.scale(x)) for x in ring.gens()]


def decompose_derivation(De: MatSL2, Df: MatSL2, diag_images: Sequence[MatSL2]) -> LieDer:
    ring = De.ring
    if len(diag_images) != ring.nvars:
        raise InconsistentDiagonalData(
            f"need {ring.nvars} diagonal images, got {len(diag_images)}"
        )
    a, b, c = De.coords()
    e_, f_, g_ = Df.coords()
    if c:
        raise NotADerivation(f"(2,1) entry of D(e) is {c}, must be 0")
    if f_:
        raise NotADerivation(f"(1,2) entry of D(f) is {f_}, must be 0")
    if b + g_:
        raise NotADerivation(f"D(e)_12 + D(f)_21 = {b + g_}, must be 0")
    half = ring.field.inv(ring.field.elem(2))
    Z = MatSL2(b.scale(half), e_, -a)
    _, h, _ = standard_basis(ring)
    images = []
    for i, (x, img) in enumerate(zip(ring.gens(), diag_images)):
        rest = img - bracket(Z, h.scale(x))
        if rest.b or rest.c:
            raise InconsistentDiagonalData(
                f"D(x{i + 1}*h) - [Z, x{i + 1}*h] = {rest} is not diagonal"
            )
        images.append(rest.a)
    D = LieDer(Z, RingDer(ring, images))
    De2, Df2, diag2 = derivation_data(D)
    if (De2, Df2) != (De, Df) or diag2 != list(diag_images):
        raise InconsistentDiagonalData("decomposition does not reproduce the data")
    return D


def triple_images(sigma: LieAut) -> Sl2Triple:
    X, H, Y, _ = forward_data(sigma)
    return Sl2Triple(X, H, Y)
