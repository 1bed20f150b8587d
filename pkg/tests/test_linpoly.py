"""Additive polynomials: evaluation, composition, reduction, matrix view."""

import random

import pytest

from skewlin.errors import (
    ContextMismatchError,
    NotAPermutationError,
    SingularSystemError,
    TwistMismatchError,
)
from skewlin.linpoly import NEG_INF, LinPoly


def random_linpoly(field, rng, max_index, twist=1):
    n = rng.randrange(max_index + 1)
    coeffs = [field.random_element(rng) for _ in range(n + 1)]
    return LinPoly(field, coeffs, twist)


def test_construction_and_views(gf4):
    t = gf4.generator()
    zero = LinPoly.zero(gf4)
    assert zero.is_zero
    assert zero.ps_degree == NEG_INF
    assert zero.degree == NEG_INF
    with pytest.raises(ValueError):
        zero.lead
    ident = LinPoly.identity(gf4)
    assert ident.ps_degree == 0
    assert ident.degree == 1
    mono = LinPoly.monomial(gf4, 2, t)
    assert mono.ps_degree == 2
    assert mono.degree == 4  # p^(twist*2)
    assert mono.lead == t
    # trailing zeros are trimmed away
    assert LinPoly(gf4, [gf4.one(), gf4.zero()]).ps_degree == 0


def test_constructor_validation(gf4, gf9):
    with pytest.raises(TwistMismatchError):
        LinPoly(gf4, [gf4.one()], twist=0)
    with pytest.raises(TwistMismatchError):
        LinPoly(gf4, [gf4.one()], twist=-1)
    with pytest.raises(ContextMismatchError):
        LinPoly(gf4, [gf9.one()])


def test_pointwise_additivity(gf16, gf27):
    for field in (gf16, gf27):
        rng = random.Random(20)
        for _ in range(15):
            L = random_linpoly(field, rng, 4)
            x = field.random_element(rng)
            y = field.random_element(rng)
            assert L(x + y) == L(x) + L(y)
            c = field.scalar(rng.randrange(field.p))
            assert L(c * x) == c * L(x)
            assert L(field.zero()) == field.zero()


def test_ring_ops_pointwise(gf8):
    rng = random.Random(21)
    for _ in range(15):
        L = random_linpoly(gf8, rng, 3)
        M = random_linpoly(gf8, rng, 3)
        for x in gf8.elements():
            assert (L + M)(x) == L(x) + M(x)
            assert (L - M)(x) == L(x) - M(x)
            assert (-L)(x) == -L(x)


def test_compose_matches_pointwise(gf8, gf9):
    for field in (gf8, gf9):
        rng = random.Random(22)
        for _ in range(15):
            L = random_linpoly(field, rng, 3)
            M = random_linpoly(field, rng, 3)
            C = L.compose(M)
            for x in field.elements():
                assert C(x) == L(M(x))


def test_compose_hand_values(gf4):
    t = gf4.generator()
    one = gf4.one()
    frob = LinPoly.monomial(gf4, 1, one)  # X^2
    assert frob.compose(frob).coeffs == (gf4.zero(), gf4.zero(), one)  # X^4
    tX = LinPoly(gf4, [t])
    # X^2 after tX picks up a frobenius twist on the inner coefficient
    assert frob.compose(tX) == LinPoly.monomial(gf4, 1, t * t)
    assert tX.compose(frob) == LinPoly.monomial(gf4, 1, t)


def test_identity_neutral(gf9):
    rng = random.Random(23)
    ident = LinPoly.identity(gf9)
    for _ in range(10):
        L = random_linpoly(gf9, rng, 3)
        assert L.compose(ident) == L
        assert ident.compose(L) == L


def test_scale_pointwise(gf16):
    rng = random.Random(24)
    for _ in range(10):
        L = random_linpoly(gf16, rng, 3)
        c = gf16.random_element(rng)
        S = L.scale(c)
        x = gf16.random_element(rng)
        assert S(x) == c * L(x)


def test_reduce_hand_value(gf4):
    one = gf4.one()
    zero = gf4.zero()
    # X^4 + X^2 folds through X^4 = X to X + X^2
    L = LinPoly(gf4, [zero, one, one])
    R = L.reduce()
    assert R.coeffs == (one, one)
    assert R.twist == 1


def test_reduce_preserves_function(gf8, gf27):
    for field in (gf8, gf27):
        rng = random.Random(25)
        for _ in range(10):
            L = random_linpoly(field, rng, 6)
            R = L.reduce()
            assert R.ps_degree < field.e or R.is_zero
            assert R.reduce() == R
            for x in field.elements():
                assert R(x) == L(x)


def test_as_p_poly(gf16):
    rng = random.Random(26)
    for _ in range(10):
        L = random_linpoly(gf16, rng, 3, twist=2)
        P = L.as_p_poly()
        assert P.twist == 1
        for x in gf16.elements():
            assert P(x) == L(x)
        # indices are spread exactly, not folded
        if not L.is_zero:
            assert P.ps_degree == 2 * L.ps_degree


def test_twist2_compose_and_reduce(gf16):
    rng = random.Random(27)
    for _ in range(10):
        L = random_linpoly(gf16, rng, 3, twist=2)
        M = random_linpoly(gf16, rng, 3, twist=2)
        C = L.compose(M)
        assert C.twist == 2
        for x in gf16.elements():
            assert C(x) == L(M(x))
            assert L.reduce()(x) == L(x)


def test_matrix_hand_value(gf4):
    frob = LinPoly.monomial(gf4, 1, gf4.one())  # X^2
    assert frob.to_matrix() == ((1, 1), (0, 1))
    ident = LinPoly.identity(gf4)
    assert ident.to_matrix() == ((1, 0), (0, 1))


def test_matrix_roundtrip(gf8, gf9):
    for field in (gf8, gf9):
        rng = random.Random(28)
        for _ in range(10):
            L = random_linpoly(field, rng, 4)
            M = L.to_matrix()
            back = LinPoly.from_matrix(field, M)
            assert back == L.reduce()


def test_matrix_of_composition(gf8):
    rng = random.Random(29)
    import skewlin._linalg as la

    for _ in range(10):
        L = random_linpoly(gf8, rng, 3)
        M = random_linpoly(gf8, rng, 3)
        prod = la.matmul(
            [list(r) for r in L.to_matrix()], [list(r) for r in M.to_matrix()], gf8.p
        )
        assert tuple(tuple(r) for r in prod) == L.compose(M).to_matrix()


def test_from_matrix_validation(gf4):
    with pytest.raises(SingularSystemError):
        LinPoly.from_matrix(gf4, [[1, 0]])
    with pytest.raises(SingularSystemError):
        LinPoly.from_matrix(gf4, [[1], [0]])


def test_permutation_detection(gf8, gf9):
    for field in (gf8, gf9):
        rng = random.Random(30)
        for _ in range(20):
            L = random_linpoly(field, rng, 3)
            images = {L(x) for x in field.elements()}
            assert L.is_permutation() == (len(images) == field.q)


def test_inverse(gf8):
    rng = random.Random(31)
    ident = LinPoly.identity(gf8)
    found = 0
    for _ in range(40):
        L = random_linpoly(gf8, rng, 3)
        if not L.is_permutation():
            with pytest.raises(NotAPermutationError):
                L.inverse()
            continue
        found += 1
        inv = L.inverse()
        assert inv.compose(L).reduce() == ident
        assert L.compose(inv).reduce() == ident
    assert found > 5


def test_frobenius_inverse(gf16):
    frob = LinPoly.monomial(gf16, 1, gf16.one())
    inv = frob.inverse()
    # the inverse of x -> x^2 is x -> x^8 over GF(16)
    assert inv == LinPoly.monomial(gf16, 3, gf16.one())


def test_kernel_poly_not_permutation(gf4):
    one = gf4.one()
    # X^2 + X kills the prime subfield
    L = LinPoly(gf4, [one, one])
    assert not L.is_permutation()
    assert L(gf4.one()) == gf4.zero()


def test_peer_errors(gf4, gf9):
    L4 = LinPoly.identity(gf4)
    L9 = LinPoly.identity(gf9)
    with pytest.raises(ContextMismatchError):
        L4 + L9
    with pytest.raises(TypeError):
        L4 + 1
    with pytest.raises(TwistMismatchError):
        LinPoly.identity(gf4, twist=1) + LinPoly.identity(gf4, twist=2)
    with pytest.raises(ContextMismatchError):
        L4(gf9.one())


def test_eq_hash_immutable(gf4):
    a = LinPoly.identity(gf4)
    b = LinPoly.identity(gf4)
    assert a == b and hash(a) == hash(b)
    assert a != LinPoly.identity(gf4, twist=2)
    with pytest.raises(AttributeError):
        a.twist = 3
