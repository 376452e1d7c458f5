from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2conj import (
    QQ,
    GenConfig,
    Generator,
    InconsistentDiagonalData,
    LieAut,
    LieDer,
    MatGL2,
    MatSL2,
    NotADerivation,
    NotATriple,
    NotDiagonalAfterStandardization,
    NotInvertibleSubstitution,
    PolyRing,
    RingAut,
    RingDer,
    RingIso,
    aut_apply,
    aut_compose,
    aut_inverse,
    bracket,
    decompose_derivation,
    der_apply,
    derivation_data,
    equal_up_to_center,
    forward_data,
    recognize_automorphism,
    standard_basis,
    tau,
    transport_ring_iso,
)

R = PolyRing(QQ, ("t",))
S2 = PolyRing(QQ, ("x", "y"))
e, h, f = standard_basis(R)
ID = RingAut.identity(R)
SHIFT = RingAut(R, [R.parse("t+1")])


def M(a, b, c, ring=R):
    return MatSL2(ring.parse(a), ring.parse(b), ring.parse(c))


def G(p11, p12, p21, p22, ring=R):
    return MatGL2(*(ring.parse(x) for x in (p11, p12, p21, p22)))


# -- ring maps --------------------------------------------------------------


def test_ring_aut_inverse_is_computed_and_verified():
    assert SHIFT.inverse_images == (R.parse("t - 1"),)
    with pytest.raises(NotInvertibleSubstitution):
        RingAut(R, [R.parse("t^2")])
    with pytest.raises(NotInvertibleSubstitution):
        RingAut(R, [R.parse("t+1")], [R.parse("t+1")])
    tri = RingAut(S2, [S2.parse("x + y^3"), S2.parse("2*y - 1")])
    x, y = S2.gens()
    assert all(p.substitute(tri.inverse_images) == g for p, g in zip(tri.images, (x, y)))
    with pytest.raises(NotInvertibleSubstitution):
        RingAut(S2, [S2.parse("x + x*y"), S2.parse("y")])
    with pytest.raises(NotInvertibleSubstitution):
        RingAut(S2, [S2.parse("x + y"), S2.parse("2*x + 2*y")])


def test_wild_style_map_needs_caller_inverse():
    images = [S2.parse("x"), S2.parse("y + x^2")]
    with pytest.raises(NotInvertibleSubstitution):
        RingAut(S2, images)
    rho = RingAut(S2, images, [S2.parse("x"), S2.parse("y - x^2")])
    assert rho.compose(rho.inverse()).is_identity()


# -- automorphisms ----------------------------------------------------------


def test_aut_apply_examples():
    Z = M("t^2", "3", "t")
    assert aut_apply(LieAut.identity(R), Z) == Z
    assert aut_apply(LieAut(MatGL2.identity(R), SHIFT), M("t", "0", "0")) == M("t+1", "0", "0")
    assert aut_apply(LieAut(G("1", "1", "0", "1"), ID), h) == M("1", "-2", "0")


def test_aut_compose_examples():
    s1 = LieAut(MatGL2.identity(R), SHIFT)
    s2 = LieAut(MatGL2.e12(R.gen(0)), ID)
    c = aut_compose(s1, s2)
    assert c.P == MatGL2.e12(R.parse("t+1"))
    sigma = LieAut(G("t", "1", "1", "0"), SHIFT)
    assert aut_compose(sigma, LieAut.identity(R)).same_as(sigma)
    z = aut_compose(sigma, aut_inverse(sigma))
    for Z in (e, h, f, M("t^3", "t", "1")):
        assert aut_apply(z, Z) == Z


def test_recognizer_examples():
    s = LieAut(G("1", "1", "0", "1"), ID)
    r = recognize_automorphism(*forward_data(s)[:3], forward_data(s)[3])
    assert equal_up_to_center(r.P, s.P) is not None and r.rho.is_identity()
    s = LieAut(MatGL2.identity(R), SHIFT)
    r = recognize_automorphism(*forward_data(s)[:3], forward_data(s)[3])
    assert r.rho.images == (R.parse("t+1"),) and r.rho.inverse_images == (R.parse("t-1"),)
    with pytest.raises(NotATriple):
        recognize_automorphism(e, h, e, [h.scale(R.gen(0))])


def test_recognizer_rejects_inconsistent_diag():
    s = LieAut(G("1", "t", "0", "1"), ID)
    X, H, Y, _ = forward_data(s)
    with pytest.raises(NotDiagonalAfterStandardization):
        recognize_automorphism(X, H, Y, [X])


def test_recognizer_uses_inverse_data_for_non_triangular():
    images = [S2.parse("x"), S2.parse("y + x^2")]
    rho = RingAut(S2, images, [S2.parse("x"), S2.parse("y - x^2")])
    P = MatGL2.e12(S2.parse("x - y"))
    s = LieAut(P, rho)
    X, H, Y, D = forward_data(s)
    inv = forward_data(aut_inverse(s))
    # the triangular solver orders variables the other way round
    with pytest.raises(NotInvertibleSubstitution):
        recognize_automorphism(X, H, Y, D)
    r = recognize_automorphism(X, H, Y, D, inv)
    assert r.same_as(s) and r.rho.inverse_images == rho.inverse_images


def test_transport_examples():
    Ssrc = PolyRing(QQ, ("s",))
    ident = RingIso(R, R, R.gens(), R.gens())
    Z = M("t", "1", "0")
    assert transport_ring_iso(ident, Z) == Z
    phi = RingIso(Ssrc, R, [R.parse("t+1")], [Ssrc.parse("s-1")])
    assert transport_ring_iso(phi, M("s", "1", "0", Ssrc)) == M("t+1", "1", "0")
    with pytest.raises(NotInvertibleSubstitution):
        RingIso(Ssrc, R, [R.parse("t+1")], [Ssrc.parse("s")])


# -- derivations ------------------------------------------------------------


def test_der_apply_examples():
    D = LieDer(h, RingDer.zero(R))
    assert der_apply(D, e) == e.scale(2)
    D = LieDer(MatSL2.zero(R), RingDer(R, [R.one]))
    assert der_apply(D, M("t^2", "0", "0")) == M("2*t", "0", "0")


def test_decompose_examples():
    t = R.gen(0)
    D = decompose_derivation(MatSL2.zero(R), h, [bracket(e, h.scale(t))])
    assert D.Z == e and D.delta == RingDer.zero(R)
    D = decompose_derivation(MatSL2.zero(R), MatSL2.zero(R), [h])
    assert D.Z.is_zero() and D.delta.images == (R.one,)
    with pytest.raises(NotADerivation):
        decompose_derivation(f, MatSL2.zero(R), [h])
    with pytest.raises(NotADerivation):
        decompose_derivation(MatSL2.zero(R), e, [h])
    with pytest.raises(NotADerivation):
        decompose_derivation(e, MatSL2.zero(R), [h])
    with pytest.raises(InconsistentDiagonalData):
        decompose_derivation(MatSL2.zero(R), MatSL2.zero(R), [e])


# -- properties -------------------------------------------------------------

AUT_CONFIGS = [
    GenConfig(max_degree=2, word_length=3),
    GenConfig(field="fp:7", max_degree=2, word_length=3),
    GenConfig(nvars=2, max_degree=1, max_terms=2, word_length=2),
]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(AUT_CONFIGS), st.integers(0, 2**32))
def test_semidirect_law_and_associativity(cfg, seed):
    g = Generator(replace(cfg, seed=seed))
    a, b, c = g.lie_aut(), g.lie_aut(), g.lie_aut()
    Z = g.sl2()
    assert aut_apply(aut_compose(a, b), Z) == aut_apply(a, aut_apply(b, Z))
    left = aut_compose(aut_compose(a, b), c)
    right = aut_compose(a, aut_compose(b, c))
    assert left.same_as(right)
    # rho tau_P rho^-1 = tau_{rho(P)}
    rho, P = a.rho, b.P
    lhs = tau(P, Z.map_entries(rho.inverse())).map_entries(rho)
    assert lhs == tau(P.map_entries(rho), Z)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(AUT_CONFIGS), st.integers(0, 2**32))
def test_recognizer_round_trip(cfg, seed):
    g = Generator(replace(cfg, seed=seed))
    s = g.lie_aut()
    X, H, Y, D = forward_data(s)
    r = recognize_automorphism(X, H, Y, D)
    assert r.same_as(s)
    Z = g.sl2()
    assert aut_apply(r, Z) == aut_apply(s, Z)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(AUT_CONFIGS), st.integers(0, 2**32))
def test_derivation_round_trip_and_leibniz(cfg, seed):
    g = Generator(replace(cfg, seed=seed))
    D = g.lie_der()
    back = decompose_derivation(*derivation_data(D))
    assert back.Z == D.Z and back.delta == D.delta
    A, B = g.sl2(), g.sl2()
    assert der_apply(D, bracket(A, B)) == bracket(der_apply(D, A), B) + bracket(A, der_apply(D, B))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_transport_preserves_brackets(seed):
    g = Generator(GenConfig(seed=seed, max_degree=2))
    Ssrc = PolyRing(QQ, ("s",))
    c, b = g.coeff(), g.coeff()
    t = R.gen(0)
    phi = RingIso(Ssrc, R, [t.scale(c) + R.const(b)], [(Ssrc.gen(0) - Ssrc.const(b)).scale(1 / c)])
    A = Generator(GenConfig(seed=seed + 1), Ssrc).sl2()
    B = Generator(GenConfig(seed=seed + 2), Ssrc).sl2()
    assert transport_ring_iso(phi, bracket(A, B)) == bracket(transport_ring_iso(phi, A), transport_ring_iso(phi, B))
