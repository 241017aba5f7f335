"""Mersenne, k-Mersenne, Gaussian Mersenne and k-Gaussian Mersenne numbers.

Each family has a fast path (closed form or product relation) and a slow
recurrence oracle used only to check the fast path.
"""

from __future__ import annotations

from enum import Enum
from itertools import islice
from typing import Iterator, NamedTuple

from .exact import X, GaussianDyadic, GaussianPolynomial, IntPolynomial, gd_pow

#: largest index accepted by the number families
MAX_INDEX = 2**32


class Family(str, Enum):
    M = "M"
    GM = "GM"
    MP = "MP"
    GMP = "GMP"

    @property
    def is_polynomial(self) -> bool:
        return self in (Family.MP, Family.GMP)

    @property
    def is_gaussian(self) -> bool:
        return self in (Family.GM, Family.GMP)


class Decomposition(NamedTuple):
    s: int
    r: int


def check_index(n: int, limit: int = MAX_INDEX) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if n > limit:
        raise ValueError(f"index {n} exceeds the supported bound {limit}")


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")


def decompose(n: int, k: int) -> Decomposition:
    """The unique ``(s, r)`` with ``n == s*k + r`` and ``0 <= r < k``."""
    _check_k(k)
    check_index(n)
    return Decomposition(*divmod(n, k))


def mersenne(n: int) -> int:
    """``2**n - 1``.

    ``pow`` on ints is square-and-multiply, so this costs O(log n) big
    multiplications; ``mersenne(10**6)`` takes milliseconds.
    """
    check_index(n)
    return pow(2, n) - 1


def iter_mersenne_oracle() -> Iterator[int]:
    """``M[0], M[1], ...`` from ``M[j+2] = 3 M[j+1] - 2 M[j]``, ``M[0] = 0, M[1] = 1``."""
    a, b = 0, 1
    while True:
        yield a
        a, b = b, 3 * b - 2 * a


def mersenne_oracle(n: int) -> int:
    check_index(n)
    return next(islice(iter_mersenne_oracle(), n, None))


def k_mersenne(n: int, k: int) -> int:
    """``M[s]**(k-r) * M[s+1]**r`` where ``n = s*k + r``."""
    s, r = decompose(n, k)
    return mersenne(s) ** (k - r) * mersenne(s + 1) ** r


def gaussian_mersenne(n: int) -> GaussianDyadic:
    """``(2**n - 1) + i*(2**(n-1) - 1)``, exact for every ``n >= 0``.

    At ``n = 0`` the imaginary part is ``1/2 - 1`` so the seed ``-i/2`` falls
    out of the same formula.
    """
    check_index(n)
    p = pow(2, n)
    # both parts over the common denominator 2
    return GaussianDyadic(2 * (p - 1), p - 2, 1)


def iter_gaussian_mersenne_oracle() -> Iterator[GaussianDyadic]:
    """The Mersenne recurrence started at ``GM[0] = -i/2, GM[1] = 1``."""
    a, b = GaussianDyadic(0, -1, 1), GaussianDyadic(1)
    while True:
        yield a
        a, b = b, 3 * b - 2 * a


def gaussian_mersenne_oracle(n: int) -> GaussianDyadic:
    check_index(n)
    return next(islice(iter_gaussian_mersenne_oracle(), n, None))


def k_gaussian_mersenne(n: int, k: int) -> GaussianDyadic:
    s, r = decompose(n, k)
    return gd_pow(gaussian_mersenne(s), k - r) * gd_pow(gaussian_mersenne(s + 1), r)


def term(family: Family | str, n: int, k: int = 1):
    """Single term of any family at parameter ``k``."""
    family = Family(family)
    if family is Family.M:
        return k_mersenne(n, k)
    if family is Family.GM:
        return k_gaussian_mersenne(n, k)
    from . import polynomials

    if family is Family.MP:
        return polynomials.k_mersenne_poly(n, k)
    return polynomials.k_gaussian_mersenne_poly(n, k)


def _base_stream(family: Family) -> Iterator:
    if family is Family.M:
        a, b, mult = 0, 1, 3
    elif family is Family.GM:
        a, b, mult = GaussianDyadic(0, -1, 1), GaussianDyadic(1), 3
    elif family is Family.MP:
        a, b, mult = IntPolynomial(), IntPolynomial((1,)), 3 * X
    else:
        a = GaussianPolynomial.constant(GaussianDyadic(0, -1, 1))
        b, mult = GaussianPolynomial.constant(1), 3 * X
    while True:
        yield a
        a, b = b, mult * b - 2 * a


def seq_stream(family: Family | str, count: int, k: int = 1) -> Iterator:
    """First ``count`` terms of ``family`` at parameter ``k``.

    For ``k == 1`` each term costs one step of the recurrence. For ``k > 1``
    the base terms are generated once and the products formed per index.
    Arguments are validated eagerly; each call returns a fresh iterator.
    """
    family = Family(family)
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    _check_k(k)
    return _stream(family, count, k)


def _stream(family: Family, count: int, k: int) -> Iterator:
    base = _base_stream(family)
    if k == 1:
        for _ in range(count):
            yield next(base)
        return
    terms = [next(base), next(base)]
    for n in range(count):
        s, r = divmod(n, k)
        while len(terms) < s + 2:
            terms.append(next(base))
        yield terms[s] ** (k - r) * terms[s + 1] ** r
