from fractions import Fraction

import pytest
import sympy as sp
from strategies import X, sympy_equal, to_sympy

from kmersenne.exact import GaussianDyadic as G
from kmersenne.exact import GaussianPolynomial, IntPolynomial, poly_eval
from kmersenne.polynomials import (
    POLY_INDEX_CAP,
    binet_numeric_check,
    gaussian_mersenne_poly,
    k_gaussian_mersenne_poly,
    k_mersenne_poly,
    mersenne_poly,
    quadratic_roots,
)
from kmersenne.sequences import gaussian_mersenne, mersenne


def _sympy_recurrence(n, a, b):
    for _ in range(n):
        a, b = b, sp.expand(3 * X * b - 2 * a)
    return a


def test_mersenne_poly_examples():
    assert mersenne_poly(3) == IntPolynomial((-2, 0, 9))
    assert mersenne_poly(5) == IntPolynomial((4, 0, -54, 0, 81))
    assert mersenne_poly(0).is_zero()


def test_mersenne_poly_matches_sympy_recurrence():
    for n in range(30):
        assert sympy_equal(to_sympy(mersenne_poly(n)), _sympy_recurrence(n, 0, 1))
        assert sympy_equal(to_sympy(gaussian_mersenne_poly(n)), _sympy_recurrence(n, -sp.I / 2, 1))


def test_k_mersenne_poly_examples():
    assert k_mersenne_poly(5, 2) == IntPolynomial((0, -6, 0, 27))
    assert k_mersenne_poly(4, 2) == IntPolynomial((0, 0, 9))
    assert k_mersenne_poly(6, 3) == IntPolynomial((0, 0, 0, 27))
    with pytest.raises(ValueError):
        k_mersenne_poly(6, 0)


def test_gaussian_mersenne_poly_examples():
    assert gaussian_mersenne_poly(2) == GaussianPolynomial((G(0, 1), G(3)))
    assert gaussian_mersenne_poly(4) == GaussianPolynomial.from_parts([0, -12, 0, 27], [-2, 0, 9])
    assert gaussian_mersenne_poly(0) == GaussianPolynomial.constant(G(0, -1, 1))


def test_k_gaussian_mersenne_poly_examples():
    assert k_gaussian_mersenne_poly(4, 2) == GaussianPolynomial.from_parts([-1, 0, 9], [0, 6])
    assert k_gaussian_mersenne_poly(0, 5) == GaussianPolynomial.constant(G(0, -1, 5))
    # published cell reads (27x^3-3x^2-6x)+i(18x^2-2); the product GM2(x) GM3(x) gives this
    assert k_gaussian_mersenne_poly(5, 2) == GaussianPolynomial.from_parts([0, -9, 0, 27], [-2, 0, 18])


def test_index_cap():
    with pytest.raises(ValueError):
        mersenne_poly(POLY_INDEX_CAP + 1)
    with pytest.raises(ValueError):
        mersenne_poly(-1)


def test_evaluation_at_one():
    for n in range(201):
        assert poly_eval(mersenne_poly(n), 1) == mersenne(n)
        assert poly_eval(gaussian_mersenne_poly(n), 1) == gaussian_mersenne(n)


def test_gaussian_poly_structure():
    for n in range(2, 201):
        expected = mersenne_poly(n) + GaussianPolynomial((G(0, 1),)) * mersenne_poly(n - 1)
        assert gaussian_mersenne_poly(n) == expected


def test_degree_and_leading_coefficient():
    for n in range(1, 129):
        p = mersenne_poly(n)
        assert p.degree == n - 1
        assert p.leading() == 3 ** (n - 1)


def test_enumerated_small_k_relations():
    M, GM = mersenne_poly, gaussian_mersenne_poly
    three_x = IntPolynomial((0, 3))
    for n in range(33):
        assert k_mersenne_poly(2 * n, 2) == M(n) ** 2
        assert k_mersenne_poly(2 * n + 1, 2) == M(n) * M(n + 1)
        assert k_mersenne_poly(3 * n, 3) == M(n) ** 3
        assert k_mersenne_poly(3 * n + 1, 3) == M(n) ** 2 * M(n + 1)
        assert k_mersenne_poly(3 * n + 2, 3) == M(n) * M(n + 1) ** 2
        assert k_gaussian_mersenne_poly(2 * n, 2) == GM(n) ** 2
        assert k_gaussian_mersenne_poly(2 * n + 1, 2) == GM(n) * GM(n + 1)
        assert k_gaussian_mersenne_poly(3 * n, 3) == GM(n) ** 3
        assert k_gaussian_mersenne_poly(3 * n + 1, 3) == GM(n) ** 2 * GM(n + 1)
        assert k_gaussian_mersenne_poly(3 * n + 2, 3) == GM(n) * GM(n + 1) ** 2
        if n >= 1:
            for k in (2, 3):
                assert k_mersenne_poly(k * n + 1, k) == \
                    three_x * k_mersenne_poly(k * n, k) - 2 * k_mersenne_poly(k * n - 1, k)
                assert k_gaussian_mersenne_poly(k * n + 1, k) == \
                    three_x * k_gaussian_mersenne_poly(k * n, k) - 2 * k_gaussian_mersenne_poly(k * n - 1, k)


class TestBinet:
    def test_roots(self):
        r = quadratic_roots(1)
        assert (r.lambda1, r.lambda2) == (2.0, 1.0)
        for x0 in (1, Fraction(3, 2), 2, 3, 10):
            r = quadratic_roots(x0)
            assert r.lambda1 >= r.lambda2
            assert r.lambda1 * r.lambda2 == pytest.approx(2, rel=1e-12)
            assert r.lambda1 + r.lambda2 == pytest.approx(3 * float(x0), rel=1e-12)

    def test_small_cases(self):
        c = binet_numeric_check(3, 1, tol=1e-9)
        assert c.passed and c.exact == 7 and c.binet == pytest.approx(7)
        c = binet_numeric_check(0, Fraction(3, 2))
        assert c.passed and c.exact == 0 and c.binet == 0
        # M6(x) = 243x^5 - 216x^3 + 36x, so M6(2) = 6120 (sympy expansion)
        c = binet_numeric_check(6, 2, tol=1e-9)
        assert c.passed and c.exact == 6120

    def test_gaussian_seed(self):
        c = binet_numeric_check(0, 2)
        assert c.gaussian_exact == complex(0, -0.5)
        assert c.gaussian_binet == pytest.approx(complex(0, -0.5))

    @pytest.mark.parametrize("x0", [0, Fraction(1, 2), Fraction(2, 3), -Fraction(1, 3)])
    def test_rejects_degenerate_points(self, x0):
        with pytest.raises(ValueError):
            binet_numeric_check(4, x0)

    def test_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            binet_numeric_check(4, 2, tol=0)
