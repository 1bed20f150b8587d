"""Structured quadratic polynomials and the three-term difference operator."""

import random

import pytest

from skewlin.errors import (
    ContextMismatchError,
    DegreeTooLargeError,
    ShapeViolationError,
    TwistMismatchError,
)
from skewlin.fqpoly import FqPoly
from skewlin.hfe import (
    DOPoly,
    check_do_shape,
    dense_difference,
    difference_poly,
    do_compose_lin,
    lin_to_dense,
    to_multivariate,
)
from skewlin.linpoly import LinPoly


def random_do(field, rng, max_index=None, with_lin=True, with_const=False):
    e = field.e
    top = e - 1 if max_index is None else max_index
    quad = {}
    for _ in range(rng.randint(1, 3)):
        i = rng.randint(0, top)
        j = rng.randint(0, top)
        quad[(min(i, j), max(i, j))] = field.random_element(rng)
    lin = None
    if with_lin:
        lin = LinPoly(field, [field.random_element(rng) for _ in range(rng.randint(1, e))])
    const = field.random_element(rng) if with_const else None
    return DOPoly(field, quad, lin, const)


def random_linpoly(field, rng, max_index):
    return LinPoly(
        field, [field.random_element(rng) for _ in range(rng.randint(1, max_index + 1))]
    )


def test_char2_diagonal_migrates(gf4):
    t = gf4.generator()
    D = DOPoly(gf4, {(0, 0): t})
    # x^(1+1) = x^2 is additive in characteristic 2
    assert D.quad == {}
    assert D.lin == LinPoly(gf4, [gf4.zero(), t])
    for x in gf4.elements():
        assert D(x) == t * x * x


def test_diagonal_stays_quadratic_odd_char(gf9):
    c = gf9.generator()
    D = DOPoly(gf9, {(1, 1): c})
    assert D.quad == {(1, 1): c}
    assert D.lin.is_zero
    for x in gf9.elements():
        assert D(x) == c * x.frobenius(1) * x.frobenius(1)


def test_constructor_validation(gf4, gf9, gf16):
    with pytest.raises(ValueError):
        DOPoly(gf4, {(-1, 0): gf4.one()})
    with pytest.raises(ContextMismatchError):
        DOPoly(gf4, {(0, 1): gf9.one()})
    with pytest.raises(ContextMismatchError):
        DOPoly(gf4, {}, LinPoly.identity(gf9))
    with pytest.raises(TwistMismatchError):
        DOPoly(gf16, {}, LinPoly.identity(gf16, twist=2))
    # unordered pairs normalise, zero coefficients drop
    t = gf4.generator()
    assert DOPoly(gf4, {(1, 0): t}).quad == {(0, 1): t}
    assert DOPoly(gf4, {(0, 1): gf4.zero()}).is_zero


def test_evaluation_is_monomial_sum(gf16):
    rng = random.Random(80)
    p = gf16.p
    for _ in range(10):
        D = random_do(gf16, rng, with_const=True)
        for x in gf16.elements():
            acc = D.const + D.lin(x)
            for (i, j), c in D.quad.items():
                acc = acc + c * x ** (p**i + p**j)
            assert D(x) == acc


def test_group_ops_pointwise(gf9):
    rng = random.Random(81)
    for _ in range(10):
        A = random_do(gf9, rng, with_const=True)
        B = random_do(gf9, rng, with_const=True)
        x = gf9.random_element(rng)
        assert (A + B)(x) == A(x) + B(x)
        assert (A - B)(x) == A(x) - B(x)
        assert (-A)(x) == -A(x)


def test_reduce_preserves_function(gf16, gf27):
    for field in (gf16, gf27):
        rng = random.Random(82)
        for _ in range(8):
            D = random_do(field, rng, max_index=2 * field.e, with_const=True)
            R = D.reduce()
            assert R.degree < field.q
            assert R.reduce() == R
            for x in field.elements():
                assert R(x) == D(x)


def test_reduced_form_is_canonical(gf16):
    rng = random.Random(83)
    for _ in range(8):
        D = random_do(gf16, rng, max_index=7, with_const=True)
        R = D.reduce()
        # same function and degree < q force equal reduced forms
        S = (D + DOPoly.zero(gf16)).reduce()
        assert S == R


def test_to_fqpoly_pointwise(gf16, gf9):
    for field in (gf16, gf9):
        rng = random.Random(84)
        for _ in range(8):
            D = random_do(field, rng, with_const=True)
            f = D.to_fqpoly()
            assert f.degree == D.degree
            for x in field.elements():
                assert f(x) == D(x)


def test_difference_symbolic_equals_dense(gf16, gf9, gf27):
    for field in (gf16, gf9, gf27):
        rng = random.Random(85)
        for _ in range(10):
            D = random_do(field, rng)
            f = D.to_fqpoly()
            for _ in range(4):
                a = field.random_element(rng)
                sym = difference_poly(D, a)
                assert lin_to_dense(sym) == dense_difference(f, a)


def test_difference_drops_additive_part(gf16):
    rng = random.Random(86)
    quad = {(0, 1): gf16.generator()}
    with_lin = DOPoly(gf16, quad, random_linpoly(gf16, rng, 3))
    without = DOPoly(gf16, quad)
    a = gf16.random_element(rng, nonzero=True)
    assert difference_poly(with_lin, a) == difference_poly(without, a)


def test_difference_additive_in_shift(gf9):
    rng = random.Random(87)
    for _ in range(10):
        D = random_do(gf9, rng)
        a = gf9.random_element(rng)
        b = gf9.random_element(rng)
        assert difference_poly(D, a + b) == difference_poly(D, a) + difference_poly(D, b)


def test_difference_rejects_constant(gf4):
    D = DOPoly(gf4, {(0, 1): gf4.one()}, None, gf4.one())
    with pytest.raises(ShapeViolationError):
        difference_poly(D, gf4.generator())


def test_dense_difference_shows_constant_defect(gf9):
    rng = random.Random(88)
    core = random_do(gf9, rng)
    c = gf9.random_element(rng, nonzero=True)
    shifted = core + DOPoly(gf9, {}, None, c)
    a = gf9.random_element(rng, nonzero=True)
    # t = D + c turns the three-term difference into Delta_D - c
    expect = lin_to_dense(difference_poly(core, a)) - FqPoly.constant(c)
    assert dense_difference(shifted.to_fqpoly(), a) == expect


def test_check_do_shape_accepts_roundtrip(gf16, gf9):
    for field in (gf16, gf9):
        rng = random.Random(89)
        for _ in range(10):
            D = random_do(field, rng, with_const=True).reduce()
            res = check_do_shape(D.to_fqpoly())
            assert res.ok and res.offender is None and res.witness is None
            assert res.value == D


def test_check_do_shape_offenders_gf16(gf16):
    good = {0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12}
    bad = {7, 11, 13, 14, 15}
    assert good | bad == set(range(16))
    for exp in sorted(good | bad):
        f = FqPoly.from_monomials(gf16, {exp: gf16.one(), 3: gf16.generator()})
        res = check_do_shape(f)
        if exp in bad:
            assert not res.ok and res.offender == exp
        else:
            assert res.ok


def test_check_do_shape_offenders_gf9(gf9):
    good = {0, 1, 3, 2, 4, 6}
    bad = {5, 7, 8}
    assert good | bad == set(range(9))
    for exp in sorted(good | bad):
        f = FqPoly.from_monomials(gf9, {exp: gf9.one()})
        res = check_do_shape(f)
        assert res.ok == (exp in good), exp
        if exp in bad:
            assert res.offender == exp


def test_check_do_shape_reports_smallest_offender(gf16):
    f = FqPoly.from_monomials(gf16, {7: gf16.one(), 11: gf16.generator()})
    res = check_do_shape(f)
    assert res.offender == 7


def test_check_do_shape_witness_is_numeric(gf16, gf9):
    for field, exp in ((gf16, 7), (gf9, 5)):
        f = FqPoly.from_monomials(field, {exp: field.one()})
        res = check_do_shape(f)
        w = res.witness
        assert w is not None and w.a
        g = f.shift(w.a) - f - FqPoly.constant(f(w.a)) + FqPoly.constant(f(field.zero()))
        assert g(w.x + w.y) != g(w.x) + g(w.y)


def test_check_do_shape_degree_cap(gf4):
    f = FqPoly.from_monomials(gf4, {4: gf4.one()})
    with pytest.raises(DegreeTooLargeError):
        check_do_shape(f)
    assert check_do_shape(FqPoly.zero(gf4)).ok


def test_compose_left_pointwise(gf16, gf9):
    for field in (gf16, gf9):
        rng = random.Random(90)
        for _ in range(8):
            D = random_do(field, rng, with_const=True)
            L = random_linpoly(field, rng, field.e - 1)
            C = do_compose_lin(L, D, "left")
            for x in field.elements():
                assert C(x) == L(D(x))
            R = do_compose_lin(L, D, "left", reduce=True)
            assert R.degree < field.q
            for x in field.elements():
                assert R(x) == L(D(x))


def test_compose_right_pointwise(gf16, gf9):
    for field in (gf16, gf9):
        rng = random.Random(91)
        for _ in range(8):
            D = random_do(field, rng, with_const=True)
            L = random_linpoly(field, rng, field.e - 1)
            C = do_compose_lin(L, D, "right")
            for x in field.elements():
                assert C(x) == D(L(x))
            assert C.const == D.const


def test_compose_side_validation(gf4):
    D = DOPoly(gf4, {(0, 1): gf4.one()})
    with pytest.raises(ValueError):
        do_compose_lin(LinPoly.identity(gf4), D, "both")
    with pytest.raises(TwistMismatchError):
        do_compose_lin(LinPoly.identity(gf4, twist=2), D, "left")


def test_chain_rule_exact(gf16, gf9):
    # difference of L(D(X)) is L applied to the difference of D, symbolically
    for field in (gf16, gf9):
        rng = random.Random(92)
        for _ in range(12):
            D = random_do(field, rng)
            L = random_linpoly(field, rng, field.e - 1)
            a = field.random_element(rng)
            lhs = difference_poly(do_compose_lin(L, D, "left"), a)
            rhs = L.compose(difference_poly(D, a))
            assert lhs == rhs
            assert lhs.reduce() == rhs.reduce()


def test_multivariate_frozen_square(gf4):
    E = DOPoly(gf4, {}, LinPoly.monomial(gf4, 1, gf4.one()))  # X^2
    mv = to_multivariate(E)
    assert mv.n_vars == 2 and mv.p == 2
    assert mv.quad == ({}, {})
    assert mv.lin == ({0: 1, 1: 1}, {1: 1})
    assert mv.const == (0, 0)


def test_multivariate_pointwise(gf16, gf9):
    for field in (gf16, gf9):
        rng = random.Random(93)
        for _ in range(8):
            E = random_do(field, rng, with_const=True)
            mv = to_multivariate(E)
            assert mv.n_vars == field.e
            for x in field.elements():
                got = mv.evaluate(field.coordinates(x))
                assert got == field.coordinates(E(x))


def test_multivariate_no_squares_char2(gf16):
    rng = random.Random(94)
    for _ in range(8):
        E = random_do(gf16, rng, with_const=True)
        mv = to_multivariate(E)
        for k in range(mv.n_vars):
            assert all(s != t for (s, t) in mv.quad[k])


def test_multivariate_term_bound(gf16):
    rng = random.Random(95)
    e = gf16.e
    bound = e * (e + 1) // 2 + e + 1
    for _ in range(8):
        E = random_do(gf16, rng, with_const=True)
        mv = to_multivariate(E)
        assert mv.max_terms <= bound


def test_multivariate_evaluate_validation(gf9):
    mv = to_multivariate(DOPoly(gf9, {(0, 1): gf9.one()}))
    with pytest.raises(ValueError):
        mv.evaluate([1])
