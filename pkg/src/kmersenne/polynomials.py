"""Mersenne polynomials, Gaussian Mersenne polynomials and their k-generalizations.

The recurrence ``P[n+2](x) = 3x P[n+1](x) - 2 P[n](x)`` is the definition;
the Binet form is only checked numerically at sample points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import X, GaussianDyadic, GaussianPolynomial, IntPolynomial
from .sequences import check_index, decompose

#: largest polynomial index; coefficients grow like 3**n
POLY_INDEX_CAP = 512

_GM0 = GaussianPolynomial.constant(GaussianDyadic(0, -1, 1))
_THREE_X = 3 * X


def _pair(n: int, seed0, seed1):
    """``(P[n], P[n+1])`` for the recurrence started at the given seeds."""
    check_index(n, POLY_INDEX_CAP)
    a, b = seed0, seed1
    for _ in range(n):
        a, b = b, _THREE_X * b - 2 * a
    return a, b


def mersenne_poly(n: int) -> IntPolynomial:
    return _pair(n, IntPolynomial(), IntPolynomial((1,)))[0]


def gaussian_mersenne_poly(n: int) -> GaussianPolynomial:
    return _pair(n, _GM0, GaussianPolynomial.constant(1))[0]


def k_mersenne_poly(n: int, k: int) -> IntPolynomial:
    """``M[s](x)**(k-r) * M[s+1](x)**r`` where ``n = s*k + r``."""
    s, r = decompose(n, k)
    lo, hi = _pair(s, IntPolynomial(), IntPolynomial((1,)))
    return lo ** (k - r) * hi ** r


def k_gaussian_mersenne_poly(n: int, k: int) -> GaussianPolynomial:
    s, r = decompose(n, k)
    lo, hi = _pair(s, _GM0, GaussianPolynomial.constant(1))
    return lo ** (k - r) * hi ** r


@dataclass(frozen=True)
class QuadraticRoots:
    """Real roots of ``t**2 - 3*x0*t + 2`` at a sample point."""

    x0: Fraction
    lambda1: float
    lambda2: float


def quadratic_roots(x0) -> QuadraticRoots:
    x0 = Fraction(x0)
    disc = 9 * x0 * x0 - 8
    if disc <= 0:
        raise ValueError(f"9*x0**2 - 8 must be positive, got {disc} at x0={x0}")
    lam1 = (3 * float(x0) + math.sqrt(disc)) / 2
    # product of roots is 2; dividing avoids cancellation in 3x - sqrt(...)
    return QuadraticRoots(x0, lam1, 2 / lam1)


@dataclass(frozen=True)
class BinetCheck:
    n: int
    x0: Fraction
    exact: Fraction
    binet: float
    gaussian_exact: complex
    gaussian_binet: complex
    rel_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.rel_error < self.tol


def _rel(approx: complex, exact: complex) -> float:
    diff = abs(approx - exact)
    return diff / abs(exact) if exact else diff


def binet_numeric_check(n: int, x0=1, tol: float = 1e-8) -> BinetCheck:
    """Compare the floating Binet forms with the exact polynomials at ``x0``.

    Both ``M[n](x0)`` and ``GM[n](x0) = M[n](x0) + i*M[n-1](x0)`` are checked;
    ``rel_error`` is the larger of the two relative errors.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    roots = quadratic_roots(x0)
    x0 = roots.x0
    l1, l2 = roots.lambda1, roots.lambda2

    def binet(m: int) -> float:
        return (l1 ** m - l2 ** m) / (l1 - l2)

    exact = mersenne_poly(n)(x0)
    g = gaussian_mersenne_poly(n)
    (re, e), (im, _) = g.real_part(), g.imag_part()
    den = 1 << e
    g_exact = complex(re(x0) / den, im(x0) / den)
    # binet(-1) = -1/2 reproduces the seed GM[0] = -i/2
    g_binet = complex(binet(n), binet(n - 1))
    approx = binet(n)
    err = max(_rel(approx, float(exact)), _rel(g_binet, g_exact))
    return BinetCheck(n, x0, exact, approx, g_exact, g_binet, err, tol)
