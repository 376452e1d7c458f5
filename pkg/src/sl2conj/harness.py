"""Seeded random instances with certificates.

The generator is :class:`random.Random` (Mersenne Twister) seeded with the
config seed and nothing else.  Independent streams are forked by hashing
``"<seed>:<label>"`` into a child seed.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import asdict, dataclass, replace
from fractions import Fraction

from .automorphisms import LieAut, LieDer, RingAut, RingDer
from .conjugacy import bezout_from_conjugation
from .field import field_from_config
from .poly import BezoutCert, Poly, PolyRing
from .sl2 import MatGL2, MatSL2, Sl2Triple, conj, standard_basis, standard_triple, tau

DEFAULT_VARS = ("t", "u", "v", "w")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    nvars: int = 1
    max_degree: int = 2
    max_terms: int = 3
    coeff_bound: int = 3
    word_length: int = 4
    field: str = "q"
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("nvars", "max_degree", "max_terms", "coeff_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.word_length < 0:
            raise ValueError("word_length must be non-negative")
        if self.variables and len(self.variables) != self.nvars:
            raise ValueError("variables must list exactly nvars names")

    @property
    def var_names(self) -> tuple[str, ...]:
        if self.variables:
            return tuple(self.variables)
        if self.nvars <= len(DEFAULT_VARS):
            return DEFAULT_VARS[: self.nvars]
        return tuple(f"x{i + 1}" for i in range(self.nvars))

    def ring(self) -> PolyRing:
        return PolyRing(field_from_config(self.field), self.var_names)

    def child(self, label: str) -> GenConfig:
        return replace(self, seed=derive_seed(self.seed, label))

    def as_dict(self) -> dict:
        d = asdict(self)
        d["variables"] = list(self.var_names)
        return d


def derive_seed(seed: int, label: str) -> int:
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


class Generator:
    """One stream of random instances; not shared across threads."""

    def __init__(self, cfg: GenConfig, ring: PolyRing | None = None):
        self.cfg = cfg
        self.ring = ring if ring is not None else cfg.ring()
        self.rng = random.Random(cfg.seed)

    # -- scalars and polynomials ----------------------------------------

    def coeff(self, nonzero=True):
        F = self.ring.field
        B = self.cfg.coeff_bound
        rng = self.rng
        while True:
            if F.characteristic:
                c = rng.randrange(F.characteristic)
            else:
                c = Fraction(rng.randint(-B, B), rng.randint(1, B))
            if c or not nonzero:
                return F.elem(c)

    def unit(self) -> Poly:
        return self.ring.const(self.coeff())

    def poly(self, allow_zero=True, max_degree=None, variables=None) -> Poly:
        cfg, rng, ring = self.cfg, self.rng, self.ring
        deg = cfg.max_degree if max_degree is None else max_degree
        idx = range(ring.nvars) if variables is None else variables
        terms = {}
        for _ in range(rng.randint(1, cfg.max_terms)):
            exp = [0] * ring.nvars
            for i in idx:
                exp[i] = rng.randint(0, deg)
            exp = tuple(exp)
            terms[exp] = terms.get(exp, 0) + self.coeff()
        p = ring.from_terms(terms)
        if not p and not allow_zero:
            return self.poly(False, max_degree, variables)
        return p

    def sl2(self, allow_zero=False) -> MatSL2:
        while True:
            M = MatSL2(self.poly(), self.poly(), self.poly())
            if allow_zero or not M.is_zero():
                return M

    # -- group elements and certified instances -------------------------

    def gl2(self) -> MatGL2:
        ring, rng = self.ring, self.rng
        P = MatGL2.identity(ring)
        wl = self.cfg.word_length
        if wl == 0:
            return P
        for _ in range(rng.randint(1, wl)):
            kind = rng.randrange(3)
            if kind == 0:
                F = MatGL2.e12(self.poly())
            elif kind == 1:
                F = MatGL2.e21(self.poly())
            else:
                F = MatGL2.diag(ring, self.unit(), ring.one)
            P = P @ F
        return P

    def involution(self):
        P = self.gl2()
        return conj(P, standard_basis(self.ring)[1]), P

    def nilpotent(self):
        P = self.gl2()
        X = tau(P, standard_basis(self.ring)[0])
        return X, P, bezout_from_conjugation(P)

    def triple(self):
        P = self.gl2()
        T = standard_triple(self.ring)
        return Sl2Triple(*(tau(P, Z) for Z in T.as_tuple())), P

    def ring_aut(self) -> RingAut:
        """Affine in one variable, triangular in several."""
        ring = self.ring
        n = ring.nvars
        gens = ring.gens()
        images = []
        for i in range(n):
            tail = self.poly(variables=range(i + 1, n)) if i + 1 < n else self.unit()
            images.append(gens[i].scale(self.coeff()) + tail)
        return RingAut(ring, images)

    def lie_aut(self) -> LieAut:
        return LieAut(self.gl2(), self.ring_aut())

    def ring_der(self) -> RingDer:
        return RingDer(self.ring, [self.poly() for _ in range(self.ring.nvars)])

    def lie_der(self) -> LieDer:
        return LieDer(self.sl2(allow_zero=True), self.ring_der())


def random_gl2(cfg: GenConfig) -> MatGL2:
    return Generator(cfg).gl2()


def random_involution(cfg: GenConfig) -> tuple[MatSL2, MatGL2]:
    return Generator(cfg).involution()


def random_nilpotent(cfg: GenConfig) -> tuple[MatSL2, MatGL2, BezoutCert]:
    return Generator(cfg).nilpotent()


def random_triple(cfg: GenConfig) -> tuple[Sl2Triple, MatGL2]:
    return Generator(cfg).triple()


def stream(cfg: GenConfig, kind: str, count: int) -> list:
    """``count`` instances of ``kind`` from one generator."""
    g = Generator(cfg)
    make = {
        "gl2": g.gl2,
        "involution": g.involution,
        "nilpotent": g.nilpotent,
        "triple": g.triple,
        "sl2": g.sl2,
        "aut": g.lie_aut,
        "der": g.lie_der,
    }[kind]
    return [make() for _ in range(count)]


KINDS = ("gl2", "involution", "nilpotent", "triple", "sl2", "aut", "der")
