"""Hypothesis strategies for polynomials and matrices."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from sl2conj import MatSL2, PolyRing, PrimeField, QQ

FIELDS = {"q": QQ, "fp:5": PrimeField(5), "fp:7": PrimeField(7)}

RINGS = {
    "q[t]": PolyRing(QQ, ("t",)),
    "q[t,u]": PolyRing(QQ, ("t", "u")),
    "f5[t]": PolyRing(PrimeField(5), ("t",)),
    "f7[t,u]": PolyRing(PrimeField(7), ("t", "u")),
}


def coeffs(field):
    if field.characteristic:
        return st.integers(0, field.characteristic - 1)
    return st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def polys(draw, ring, max_degree=3, max_terms=4):
    n = ring.nvars
    exps = st.tuples(*[st.integers(0, max_degree)] * n)
    terms = draw(st.dictionaries(exps, coeffs(ring.field), max_size=max_terms))
    return ring.from_terms(terms)


@st.composite
def sl2_elems(draw, ring, max_degree=2):
    p = polys(ring, max_degree, 3)
    return MatSL2(draw(p), draw(p), draw(p))


rings = st.sampled_from(list(RINGS.values()))
univariate_rings = st.sampled_from([RINGS["q[t]"], RINGS["f5[t]"]])
