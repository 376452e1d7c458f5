from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2conj import (
    QQ,
    BadCertificate,
    DegenerateCase,
    GenConfig,
    Generator,
    MatGL2,
    MatSL2,
    MultivariateUnsupported,
    NotAdDiagonalizable,
    NotComaximal,
    NotInvolution,
    NotMember,
    PolyRing,
    PrimeField,
    RequiresSquareRoot,
    Sl2Triple,
    bezout_from_conjugation,
    conj,
    diagonalize_involution,
    equal_up_to_center,
    ideal_correspondence,
    is_unit,
    jacobson_morozov,
    lemma_identities,
    mad_normalize,
    nilpotent_to_standard,
    sl2F_membership,
    standard_basis,
    standard_triple,
    standardize_triple,
    tau,
    theta,
    theta_inverse,
    triple_basis_matrix,
    triple_from_involution,
    ufd_factor_involution,
    verify_triple,
)
from sl2conj.conjugacy import det3

import oracle

R = PolyRing(QQ, ("t",))
S = PolyRing(QQ, ("x", "y"))
e, h, f = standard_basis(R)
CASE3 = ("2*t+1", "-2", "2*t^2+2*t")


def M(a, b, c, ring=R):
    return MatSL2(ring.parse(a), ring.parse(b), ring.parse(c))


def G(p11, p12, p21, p22, ring=R):
    return MatGL2(*(ring.parse(x) for x in (p11, p12, p21, p22)))


def rows(P):
    return [[str(P.p11), str(P.p12)], [str(P.p21), str(P.p22)]]


# -- involutions ------------------------------------------------------------


def test_factorization_example():
    fac = ufd_factor_involution(M(*CASE3))
    assert (str(fac.a), str(fac.a_), str(fac.b), str(fac.b_)) == ("1", "1", "t", "t + 1")
    assert (fac.u, fac.u_, fac.v, fac.w) == (2, 2, -2, 2)


def test_factorization_errors():
    with pytest.raises(DegenerateCase):
        ufd_factor_involution(h)
    with pytest.raises(NotInvolution):
        ufd_factor_involution(e)


def test_triple_from_involution_examples():
    assert triple_from_involution(h).as_tuple() == (e, h, f)
    T = triple_from_involution(M("1", "0", "2"))
    assert T.X == M("-1", "1", "-1") and T.Y == f
    H = M(*CASE3)
    T = triple_from_involution(H)
    hm, hp = H.a - 1, H.a + 1
    Xp = MatSL2(hm * H.b, H.b * H.b, -(hm * hm))
    Yp = MatSL2(-(hp * H.b), -(H.b * H.b), hp * hp)
    assert T.X == Xp.scale(QQ.elem(-1) / 4)
    assert T.Y == Yp.scale(QQ.elem(-1) / 4)


@pytest.mark.parametrize(
    "H",
    [
        ("1", "0", "t^2+1"),
        ("-1", "0", "t^2+1"),
        ("1", "t^3", "0"),
        ("-1", "t^3", "0"),
        ("-1", "0", "0"),
        CASE3,
    ],
)
def test_all_branches_verify(H):
    H = M(*H)
    T = triple_from_involution(H)
    verify_triple(*T.as_tuple())
    P = diagonalize_involution(H)
    assert conj(P, H) == h
    # independent check with sympy
    sP, sH = oracle.from_mat_gl2(P), oracle.from_mat_sl2(H)
    assert oracle.equal2(oracle.mul2(oracle.mul2(oracle.inv2(sP), sH), sP), [[1, 0], [0, -1]])


def test_diagonalize_examples():
    assert diagonalize_involution(h).is_identity()
    assert rows(diagonalize_involution(M("1", "0", "2"))) == [["1", "0"], ["1", "1"]]
    P = diagonalize_involution(M(*CASE3))
    assert rows(P) == [["2", "2"], ["2*t", "2*t + 2"]]
    assert P.det == 4


def test_diagonalize_rejects_non_involution():
    with pytest.raises(NotInvolution):
        diagonalize_involution(M("t", "0", "0"))


# -- triples ----------------------------------------------------------------


def test_standardize_examples():
    assert equal_up_to_center(MatGL2.identity(R), standardize_triple(standard_triple(R))) is not None
    T = Sl2Triple(M("-1", "1", "-1"), M("1", "0", "2"), f)
    P = standardize_triple(T)
    assert (conj(P, T.X), conj(P, T.H), conj(P, T.Y)) == (e, h, f)


def test_triple_basis_matrix():
    B = triple_basis_matrix(standard_triple(R))
    assert [[str(x) for x in r] for r in B] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    T = verify_triple(M("-1", "1", "-1"), M("1", "0", "2"), f)
    assert det3(triple_basis_matrix(T)) == 1


def test_theta_round_trip():
    T = verify_triple(M("-1", "1", "-1"), M("1", "0", "2"), f)
    Z = M("t", "t^2-1", "3")
    assert theta(T, theta_inverse(T, Z)) == Z
    assert theta(T, e) == T.X and theta(T, h) == T.H and theta(T, f) == T.Y


# -- nilpotents -------------------------------------------------------------


def test_jm_examples():
    T = jacobson_morozov(e, (R.one, R.zero))
    assert T.as_tuple() == (e, h, f)
    X = M("t", "t^2", "-1")
    T = jacobson_morozov(X, (R.zero, -R.one))
    assert T.H == M("-1", "-2*t", "0")
    assert T.Y == M("0", "-1", "0")
    with pytest.raises(NotComaximal):
        jacobson_morozov(M("0", "t", "0"))


def test_jm_certificate_handling():
    X = M("t", "t^2", "-1")
    assert jacobson_morozov(X).X == X
    with pytest.raises(BadCertificate):
        jacobson_morozov(X, (R.one, R.one))
    Xs = MatSL2(S.zero, S.one, S.zero)
    with pytest.raises(MultivariateUnsupported):
        jacobson_morozov(Xs)
    assert jacobson_morozov(Xs, (S.one, S.zero)).H == MatSL2(S.one, S.zero, S.zero)


def test_nilpotent_to_standard_examples():
    assert nilpotent_to_standard(e, (R.one, R.zero)).is_identity()
    X = M("t", "-t^2", "1")
    P = nilpotent_to_standard(X, (R.zero, R.one))
    assert rows(P) == [["t", "1"], ["1", "0"]]
    assert P.det == -1
    assert conj(P, X) == e
    w0 = QQ.elem(3)
    X = MatSL2(R.zero, R.zero, R.const(w0))
    P = nilpotent_to_standard(X, (R.zero, R.const(1 / w0)))
    assert rows(P) == [["0", "1"], ["3", "0"]]


def test_bezout_from_conjugation_examples():
    c = bezout_from_conjugation(MatGL2.identity(R))
    assert c.targets == (R.one, R.zero)
    P = G("1", "0", "t", "1")
    c = bezout_from_conjugation(P)
    assert c.targets == (R.one, R.parse("-t^2"))
    assert tau(P, e) == M("-t", "1", "-t^2")
    assert c.r * c.targets[0] + c.s * c.targets[1] == 1


# -- MADs and membership ----------------------------------------------------


def test_mad_examples():
    lam, P = mad_normalize(M("3", "0", "0"))
    assert lam == 3 and P.is_identity()
    lam, P = mad_normalize(M(*CASE3).scale(5))
    assert lam == 5 and rows(P) == [["2", "2"], ["2*t", "2*t + 2"]]
    for bad in (e, M("0", "1", "2"), M("t", "0", "0")):
        with pytest.raises(NotAdDiagonalizable):
            mad_normalize(bad)


def test_membership_examples():
    w = sl2F_membership(e)
    assert w.kind == "nilpotent" and w.triple.as_tuple() == (e, h, f)
    with pytest.raises(NotMember):
        sl2F_membership(M("0", "t", "0"))
    w = sl2F_membership(M(*CASE3).scale(2))
    assert w.kind == "semisimple" and w.lam == 2
    with pytest.raises(RequiresSquareRoot):
        sl2F_membership(M("0", "1", "2"))
    with pytest.raises(NotMember):
        sl2F_membership(M("t", "0", "0"))


def test_ideal_correspondence_examples():
    t = R.gen(0)
    assert ideal_correspondence([t], M("t", "t^2", "0"))
    assert not ideal_correspondence([t], e)
    assert ideal_correspondence([R.parse("t^2"), R.parse("t^3+t^2")], M("0", "t^2", "0"))
    assert not ideal_correspondence([R.parse("t^2"), R.parse("t^3+t^2")], M("0", "t", "0"))
    assert ideal_correspondence([R.zero], MatSL2.zero(R))
    with pytest.raises(MultivariateUnsupported):
        ideal_correspondence([S.gen(0)], MatSL2.zero(S))


# -- properties -------------------------------------------------------------

CONFIGS = [
    GenConfig(max_degree=3, word_length=6),
    GenConfig(field="fp:5", max_degree=3, word_length=6),
    GenConfig(nvars=2, max_degree=1, max_terms=2, word_length=3),
    GenConfig(nvars=2, field="fp:7", max_degree=1, max_terms=2, word_length=3),
]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONFIGS), st.integers(0, 2**32))
def test_involution_round_trip(cfg, seed):
    H, _ = Generator(replace(cfg, seed=seed)).involution()
    T = triple_from_involution(H)
    assert all(lemma_identities(*T.as_tuple()).values())
    Q = diagonalize_involution(H)
    assert conj(Q, H) == standard_basis(H.ring)[1]
    assert is_unit(Q.det) is not None
    if H.b and H.c:
        fac = ufd_factor_involution(H)
        assert H.a - 1 == (fac.a * fac.b).scale(fac.u)
        assert H.a + 1 == (fac.a_ * fac.b_).scale(fac.u_)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONFIGS), st.integers(0, 2**32))
def test_triple_round_trip(cfg, seed):
    T, P = Generator(replace(cfg, seed=seed)).triple()
    Q = standardize_triple(T)
    assert equal_up_to_center(P, Q) is not None
    assert det3(triple_basis_matrix(T)) == 1


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONFIGS), st.integers(0, 2**32))
def test_nilpotent_round_trip(cfg, seed):
    X, P, cert = Generator(replace(cfg, seed=seed)).nilpotent()
    T = jacobson_morozov(X, cert)
    assert all(lemma_identities(*T.as_tuple()).values())
    Q = nilpotent_to_standard(X, cert)
    assert conj(Q, X) == standard_basis(X.ring)[0]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 9))
def test_mad_scaling(seed, mu):
    H, _ = Generator(GenConfig(seed=seed, word_length=4)).involution()
    lam, P = mad_normalize(H)
    lam2, P2 = mad_normalize(H.scale(mu))
    assert lam == 1 and lam2 == mu * lam and P2 == P


def test_mad_over_prime_field_uses_least_root():
    F = PolyRing(PrimeField(7), ("t",))
    H = MatSL2(F.parse("t"), F.one, F.parse("1 - t^2")).scale(5)
    lam, P = mad_normalize(H)
    assert lam == 2  # roots of 25 = 4 mod 7 are 2 and 5
    assert conj(P, H) == MatSL2(F.const(2), F.zero, F.zero)
