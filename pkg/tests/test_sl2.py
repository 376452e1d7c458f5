import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2conj import (
    QQ,
    GenConfig,
    Generator,
    LemmaViolation,
    MatGL2,
    MatSL2,
    NotATriple,
    NotInvertibleOverR,
    PolyRing,
    ZeroElement,
    ad_matrix,
    bracket,
    conj,
    is_involution,
    is_square_zero,
    lemma_identities,
    standard_basis,
    tau,
    verify_triple,
)

import oracle
from strategies import rings, sl2_elems

R = PolyRing(QQ, ("t",))
e, h, f = standard_basis(R)


def M(a, b, c, ring=R):
    return MatSL2(ring.parse(a), ring.parse(b), ring.parse(c))


def G(p11, p12, p21, p22, ring=R):
    return MatGL2(*(ring.parse(x) for x in (p11, p12, p21, p22)))


def test_bracket_relations():
    assert bracket(h, e) == e.scale(2)
    assert bracket(h, f) == f.scale(-2)
    assert bracket(e, f) == h
    A = M("t", "t^2+1", "3")
    assert bracket(A, A).is_zero()


def test_conj_examples():
    Z = M("t^2", "1", "t")
    assert conj(MatGL2.identity(R), Z) == Z
    P = G("1", "t", "0", "1")
    assert conj(P, conj(P.inverse(), Z)) == Z
    E21 = G("1", "0", "t", "1")
    # P^-1 h P; the automorphism Z -> P Z P^-1 gives the opposite sign
    assert conj(E21, h) == M("1", "0", "-2*t")
    assert tau(E21, h) == M("1", "0", "2*t")


def test_conj_against_sympy():
    P = G("t+1", "t", "1", "1")
    Z = M("t^2", "2*t-1", "3")
    W = conj(P, Z)
    sP, sZ = oracle.from_mat_gl2(P), oracle.from_mat_sl2(Z)
    ref = oracle.mul2(oracle.mul2(oracle.inv2(sP), sZ), sP)
    assert oracle.equal2(ref, oracle.from_mat_sl2(W))


def test_verify_triple_examples():
    verify_triple(e, h, f)
    with pytest.raises(NotATriple):
        verify_triple(e, h, e)
    with pytest.raises(ZeroElement):
        verify_triple(MatSL2.zero(R), h, f)
    T = verify_triple(M("-1", "1", "-1"), M("1", "0", "2"), f)
    assert T.H == M("1", "0", "2")


def test_predicates():
    assert is_involution(h)
    assert is_involution(M("2*t+1", "-2", "2*t^2+2*t"))
    assert not is_involution(e)
    assert is_square_zero(e)
    assert is_square_zero(M("t", "t^2", "-1"))
    assert not is_square_zero(h)


def test_gl2_examples():
    P = G("1", "0", "t", "1")
    assert P.det == 1
    with pytest.raises(NotInvertibleOverR):
        G("t", "0", "0", "1")
    Q = G("2", "2", "2*t", "2*t+2")
    assert Q.det == 4
    I = MatGL2.identity(R)
    assert Q @ Q.inverse() == I and Q.inverse() @ Q == I
    assert Q.det * Q.det_inv == 1


def test_lemma_violation_is_internal():
    assert issubclass(LemmaViolation, AssertionError)


def test_tau_is_inverse_conj():
    P = G("1", "t", "0", "1")
    assert tau(P, e) == conj(P.inverse(), e)


def _gl2(ring, seed):
    return Generator(GenConfig(seed=seed, max_degree=1, word_length=3), ring).gl2()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_jacobi(data):
    ring = data.draw(rings)
    A, B, C = (data.draw(sl2_elems(ring)) for _ in range(3))
    total = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B))
    assert total.is_zero()


@settings(max_examples=30, deadline=None)
@given(st.data(), st.integers(0, 10**6), st.integers(0, 10**6))
def test_conj_is_lie_map_and_contravariant(data, s1, s2):
    ring = data.draw(rings)
    A, B = data.draw(sl2_elems(ring)), data.draw(sl2_elems(ring))
    P, Q = _gl2(ring, s1), _gl2(ring, s2)
    assert conj(P, bracket(A, B)) == bracket(conj(P, A), conj(P, B))
    assert conj(P @ Q, A) == conj(Q, conj(P, A))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_square_zero_iff_ad_nilpotent(data):
    ring = data.draw(rings)
    X = data.draw(sl2_elems(ring))
    if X.is_zero():
        return
    A = ad_matrix(X)

    def mm(U, V):
        return [[sum((U[i][k] * V[k][j] for k in range(3)), ring.zero) for j in range(3)] for i in range(3)]

    cube = mm(A, mm(A, A))
    assert is_square_zero(X) == all(x.is_zero() for row in cube for x in row)


def test_ad_matrix_columns():
    X = M("t", "2", "t^2")
    A = ad_matrix(X)
    for j, B in enumerate((h, e, f)):
        col = bracket(X, B)
        assert [A[0][j], A[1][j], A[2][j]] == list(col.coords())


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_conjugated_triples_satisfy_lemma_identities(seed):
    T, _ = Generator(GenConfig(seed=seed, word_length=4)).triple()
    verify_triple(*T.as_tuple())
    assert all(lemma_identities(*T.as_tuple()).values())
