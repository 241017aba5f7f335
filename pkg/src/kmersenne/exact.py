"""Exact arithmetic: Gaussian dyadic rationals and dense polynomials over them.

A :class:`GaussianDyadic` denotes ``(re_num + im_num*i) / 2**exp2``. Every
denominator that shows up in the Gaussian Mersenne families is a power of two,
so this is all the rational machinery needed.

:class:`IntPolynomial` has plain ``int`` coefficients. :class:`GaussianPolynomial`
keeps a common power-of-two denominator internally and exposes per-coefficient
:class:`GaussianDyadic` values through :attr:`GaussianPolynomial.coeffs`.

All values are immutable and canonical on construction, so ``==`` is
structural equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

#: degree of the zero polynomial
NEG_INF = -math.inf


def _twos(v: int) -> int:
    """Number of trailing zero bits of a nonzero int."""
    return (v & -v).bit_length() - 1


class GaussianDyadic:
    """Exact ``(re_num + im_num*i) / 2**exp2`` in canonical form.

    Canonical means ``exp2 == 0`` or ``re_num`` and ``im_num`` are not both
    even; zero is always ``(0, 0, 0)``.
    """

    __slots__ = ("re_num", "im_num", "exp2")

    def __init__(self, re_num: int = 0, im_num: int = 0, exp2: int = 0):
        if exp2 < 0:
            raise ValueError(f"exp2 must be non-negative, got {exp2}")
        if re_num == 0 and im_num == 0:
            exp2 = 0
        elif exp2:
            t = exp2
            if re_num:
                t = min(t, _twos(re_num))
            if im_num:
                t = min(t, _twos(im_num))
            if t:
                re_num >>= t
                im_num >>= t
                exp2 -= t
        object.__setattr__(self, "re_num", re_num)
        object.__setattr__(self, "im_num", im_num)
        object.__setattr__(self, "exp2", exp2)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianDyadic is immutable")

    @classmethod
    def _raw(cls, re_num: int, im_num: int, exp2: int) -> GaussianDyadic:
        # caller guarantees canonical form
        obj = object.__new__(cls)
        object.__setattr__(obj, "re_num", re_num)
        object.__setattr__(obj, "im_num", im_num)
        object.__setattr__(obj, "exp2", exp2)
        return obj

    @classmethod
    def coerce(cls, value: Union[int, GaussianDyadic]) -> GaussianDyadic:
        if isinstance(value, GaussianDyadic):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 0)
        if isinstance(value, Fraction):
            den = value.denominator
            if den & (den - 1):
                raise ValueError(f"{value} is not a dyadic rational")
            return cls(value.numerator, 0, den.bit_length() - 1)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianDyadic")

    # -- inspection -------------------------------------------------------

    def is_canonical(self) -> bool:
        if self.exp2 < 0:
            return False
        if self.re_num == 0 and self.im_num == 0:
            return self.exp2 == 0
        return self.exp2 == 0 or bool((self.re_num | self.im_num) & 1)

    @property
    def real(self) -> Fraction:
        return Fraction(self.re_num, 1 << self.exp2)

    @property
    def imag(self) -> Fraction:
        return Fraction(self.im_num, 1 << self.exp2)

    def is_zero(self) -> bool:
        return self.re_num == 0 and self.im_num == 0

    def is_integer(self) -> bool:
        return self.im_num == 0 and self.exp2 == 0

    def __complex__(self) -> complex:
        return complex(self.real, self.imag)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> GaussianDyadic:
        return GaussianDyadic._raw(-self.re_num, -self.im_num, self.exp2)

    def __add__(self, other) -> GaussianDyadic:
        try:
            other = GaussianDyadic.coerce(other)
        except TypeError:
            return NotImplemented
        e1, e2 = self.exp2, other.exp2
        if e1 == e2:
            return GaussianDyadic(self.re_num + other.re_num, self.im_num + other.im_num, e1)
        if e1 > e2:
            d = e1 - e2
            return GaussianDyadic._raw(
                self.re_num + (other.re_num << d), self.im_num + (other.im_num << d), e1
            )
        d = e2 - e1
        return GaussianDyadic._raw(
            (self.re_num << d) + other.re_num, (self.im_num << d) + other.im_num, e2
        )

    __radd__ = __add__

    def __sub__(self, other) -> GaussianDyadic:
        try:
            other = GaussianDyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> GaussianDyadic:
        try:
            other = GaussianDyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> GaussianDyadic:
        try:
            other = GaussianDyadic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re_num, self.im_num, other.re_num, other.im_num
        return GaussianDyadic(a * c - b * d, a * d + b * c, self.exp2 + other.exp2)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianDyadic:
        if e < 0:
            return self.inverse() ** (-e)
        # square-and-multiply on the Gaussian-integer numerator, normalize once
        re, im = 1, 0
        br, bi = self.re_num, self.im_num
        k = e
        while k:
            if k & 1:
                re, im = re * br - im * bi, re * bi + im * br
            k >>= 1
            if k:
                br, bi = br * br - bi * bi, 2 * br * bi
        return GaussianDyadic(re, im, self.exp2 * e)

    def inverse(self) -> GaussianDyadic:
        """Multiplicative inverse; only units times powers of two qualify."""
        norm = self.re_num * self.re_num + self.im_num * self.im_num
        if norm == 0:
            raise ZeroDivisionError("GaussianDyadic zero has no inverse")
        if norm & (norm - 1):
            raise ValueError(f"{self!r} has no dyadic inverse (norm {norm})")
        t = norm.bit_length() - 1
        # (a+bi)^-1 = (a-bi) * 2^exp2 / 2^t
        return GaussianDyadic(self.re_num << self.exp2, -self.im_num << self.exp2, t)

    def __truediv__(self, other) -> GaussianDyadic:
        try:
            other = GaussianDyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def conjugate(self) -> GaussianDyadic:
        return GaussianDyadic._raw(self.re_num, -self.im_num, self.exp2)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianDyadic):
            return (
                self.re_num == other.re_num
                and self.im_num == other.im_num
                and self.exp2 == other.exp2
            )
        if isinstance(other, int):
            return self.im_num == 0 and self.exp2 == 0 and self.re_num == other
        if isinstance(other, Fraction):
            return self.im_num == 0 and self.real == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.im_num == 0 and self.exp2 == 0:
            return hash(self.re_num)
        return hash((self.re_num, self.im_num, self.exp2))

    def __repr__(self) -> str:
        return f"GaussianDyadic({self.re_num}, {self.im_num}, {self.exp2})"


Scalar = Union[int, GaussianDyadic]

ZERO = GaussianDyadic()
ONE = GaussianDyadic(1)
I = GaussianDyadic(0, 1)


def pow2(e: int) -> GaussianDyadic:
    """Exact ``2**e`` for any integer ``e`` (negative gives ``1/2**-e``)."""
    if e >= 0:
        return GaussianDyadic._raw(1 << e, 0, 0)
    return GaussianDyadic._raw(1, 0, -e)


def gd_normalize(re_num: int, im_num: int, exp2: int) -> GaussianDyadic:
    """Canonical representative of ``(re_num + im_num*i) / 2**exp2``."""
    return GaussianDyadic(re_num, im_num, exp2)


def gd_arith(op: str, a: GaussianDyadic, b: GaussianDyadic | None = None) -> GaussianDyadic:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def gd_pow(a: GaussianDyadic, e: int) -> GaussianDyadic:
    """``a**e`` for ``e >= 0``; ``a**0 == 1`` even for ``a == 0``."""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    return GaussianDyadic.coerce(a) ** e


# ---------------------------------------------------------------------------
# integer coefficient lists


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, v in enumerate(b):
        out[j] += v
    return out


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for j, v in enumerate(b):
        out[j] -= v
    return out


def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of two coefficient lists."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a, j):
                out[i] += ai * bj
    return out


class IntPolynomial:
    """Dense polynomial in ``x`` with ``int`` coefficients, lowest degree first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        object.__setattr__(self, "_c", _trim(c))

    @classmethod
    def _raw(cls, c: tuple[int, ...]) -> IntPolynomial:
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", c)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else NEG_INF

    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def _lift(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return None

    def __add__(self, other):
        if isinstance(other, (GaussianPolynomial, GaussianDyadic)):
            return self.to_gaussian() + other
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return IntPolynomial._raw(_trim(_add(self._c, q._c)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial._raw(tuple(-v for v in self._c))

    def __sub__(self, other):
        if isinstance(other, (GaussianPolynomial, GaussianDyadic)):
            return self.to_gaussian() - other
        q = self._lift(other)
        if q is None:
            return NotImplemented
        return IntPolynomial._raw(_trim(_sub(self._c, q._c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, (GaussianPolynomial, GaussianDyadic)):
            return self.to_gaussian() * other
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return IntPolynomial._raw(_trim(_conv(self._c, other._c)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError(f"exponent must be non-negative, got {e}")
        result = IntPolynomial._raw((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> IntPolynomial:
        if c == 0:
            return IntPolynomial._raw(())
        return IntPolynomial._raw(tuple(c * v for v in self._c))

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if not self._c:
            return self
        return IntPolynomial._raw((0,) * k + self._c)

    def __call__(self, x0):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x0 + c
        return acc

    def to_gaussian(self) -> GaussianPolynomial:
        return GaussianPolynomial._raw(self._c, (), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == _trim([other])
        if isinstance(other, GaussianPolynomial):
            return self.to_gaussian() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_gaussian())

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"


class GaussianPolynomial:
    """Dense polynomial with :class:`GaussianDyadic` coefficients.

    Stored as ``(re + i*im) / 2**exp2`` with ``re`` and ``im`` integer
    coefficient tuples sharing one denominator. Canonical form trims trailing
    zeros from each tuple and reduces ``exp2`` until some numerator is odd.
    """

    __slots__ = ("re", "im", "exp2")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [GaussianDyadic.coerce(c) for c in coeffs]
        e = max((c.exp2 for c in cs), default=0)
        re = [c.re_num << (e - c.exp2) for c in cs]
        im = [c.im_num << (e - c.exp2) for c in cs]
        _set(self, *_canon(re, im, e))

    @classmethod
    def _raw(cls, re: tuple[int, ...], im: tuple[int, ...], exp2: int) -> GaussianPolynomial:
        obj = object.__new__(cls)
        _set(obj, re, im, exp2)
        return obj

    @classmethod
    def from_parts(cls, re: Sequence[int], im: Sequence[int] = (), exp2: int = 0) -> GaussianPolynomial:
        """Build ``(re(x) + i*im(x)) / 2**exp2`` from numerator coefficient lists."""
        if exp2 < 0:
            raise ValueError("exp2 must be non-negative")
        return cls._raw(*_canon(list(re), list(im), exp2))

    @classmethod
    def constant(cls, c: Scalar) -> GaussianPolynomial:
        c = GaussianDyadic.coerce(c)
        return cls._raw(_trim([c.re_num]), _trim([c.im_num]), c.exp2)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianPolynomial is immutable")

    # -- inspection -------------------------------------------------------

    def __len__(self) -> int:
        return max(len(self.re), len(self.im))

    @property
    def coeffs(self) -> tuple[GaussianDyadic, ...]:
        n = len(self)
        re = self.re + (0,) * (n - len(self.re))
        im = self.im + (0,) * (n - len(self.im))
        return tuple(GaussianDyadic(a, b, self.exp2) for a, b in zip(re, im))

    @property
    def degree(self) -> int | float:
        n = len(self)
        return n - 1 if n else NEG_INF

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def real_part(self) -> tuple[IntPolynomial, int]:
        """Numerator of the real part and the shared ``exp2``."""
        return IntPolynomial._raw(self.re), self.exp2

    def imag_part(self) -> tuple[IntPolynomial, int]:
        return IntPolynomial._raw(self.im), self.exp2

    def is_constant(self) -> bool:
        return len(self) <= 1

    def constant_term(self) -> GaussianDyadic:
        a = self.re[0] if self.re else 0
        b = self.im[0] if self.im else 0
        return GaussianDyadic(a, b, self.exp2)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def lift(value) -> GaussianPolynomial:
        """Embed ints, dyadics and integer polynomials as Gaussian polynomials."""
        if isinstance(value, GaussianPolynomial):
            return value
        if isinstance(value, IntPolynomial):
            return value.to_gaussian()
        return GaussianPolynomial.constant(value)

    def _align(self, other: GaussianPolynomial):
        e = max(self.exp2, other.exp2)
        d1, d2 = e - self.exp2, e - other.exp2
        if d1:
            a_re = [v << d1 for v in self.re]
            a_im = [v << d1 for v in self.im]
        else:
            a_re, a_im = self.re, self.im
        if d2:
            b_re = [v << d2 for v in other.re]
            b_im = [v << d2 for v in other.im]
        else:
            b_re, b_im = other.re, other.im
        return a_re, a_im, b_re, b_im, e

    def __add__(self, other):
        try:
            other = GaussianPolynomial.lift(other)
        except TypeError:
            return NotImplemented
        a_re, a_im, b_re, b_im, e = self._align(other)
        return GaussianPolynomial._raw(*_canon(_add(a_re, b_re), _add(a_im, b_im), e))

    __radd__ = __add__

    def __neg__(self) -> GaussianPolynomial:
        return GaussianPolynomial._raw(
            tuple(-v for v in self.re), tuple(-v for v in self.im), self.exp2
        )

    def __sub__(self, other):
        try:
            other = GaussianPolynomial.lift(other)
        except TypeError:
            return NotImplemented
        a_re, a_im, b_re, b_im, e = self._align(other)
        return GaussianPolynomial._raw(*_canon(_sub(a_re, b_re), _sub(a_im, b_im), e))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianPolynomial.lift(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        ac = _conv(a, c)
        bd = _conv(b, d)
        if not b and not d:
            re, im = ac, []
        elif not b:
            re, im = ac, _conv(a, d)
        elif not d:
            re, im = ac, _conv(b, c)
        else:
            # three real products: (a+b)(c+d) - ac - bd = ad + bc
            re = _sub(ac, bd)
            im = _sub(_sub(_conv(_add(a, b), _add(c, d)), ac), bd)
        return GaussianPolynomial._raw(*_canon(re, im, self.exp2 + other.exp2))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianPolynomial:
        if e < 0:
            raise ValueError(f"exponent must be non-negative, got {e}")
        result = GaussianPolynomial._raw((1,), (), 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Scalar) -> GaussianPolynomial:
        return self * GaussianPolynomial.constant(c)

    def shift(self, k: int = 1) -> GaussianPolynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        pad = (0,) * k
        re = pad + self.re if self.re else ()
        im = pad + self.im if self.im else ()
        return GaussianPolynomial._raw(re, im, self.exp2)

    def truncate(self, n: int) -> GaussianPolynomial:
        """Drop every term of degree ``>= n``."""
        return GaussianPolynomial._raw(*_canon(list(self.re[:n]), list(self.im[:n]), self.exp2))

    def __call__(self, x0) -> GaussianDyadic:
        x0 = GaussianDyadic.coerce(x0)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianPolynomial):
            return self.re == other.re and self.im == other.im and self.exp2 == other.exp2
        if isinstance(other, (IntPolynomial, GaussianDyadic, int)):
            return self == GaussianPolynomial.lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im, self.exp2))

    def __repr__(self) -> str:
        return f"GaussianPolynomial.from_parts({list(self.re)}, {list(self.im)}, {self.exp2})"


def _set(obj, re, im, exp2):
    object.__setattr__(obj, "re", re)
    object.__setattr__(obj, "im", im)
    object.__setattr__(obj, "exp2", exp2)


def _canon(re: list[int], im: list[int], exp2: int):
    re_t, im_t = _trim(re), _trim(im)
    if not re_t and not im_t:
        return (), (), 0
    if exp2:
        acc = 0
        for v in re_t:
            acc |= v
        for v in im_t:
            acc |= v
        t = min(exp2, _twos(acc))
        if t:
            re_t = tuple(v >> t for v in re_t)
            im_t = tuple(v >> t for v in im_t)
            exp2 -= t
    return re_t, im_t, exp2


Polynomial = Union[IntPolynomial, GaussianPolynomial]

X = IntPolynomial((0, 1))


def poly_arith(op: str, p: Polynomial, q=None) -> Polynomial:
    """Ring operations on either polynomial type.

    ``scale`` takes a scalar ``q``; ``shift`` takes a non-negative int count
    (default 1) and multiplies by that power of ``x``.
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        if isinstance(p, IntPolynomial) and isinstance(q, int):
            return p.scale(q)
        return GaussianPolynomial.lift(p).scale(q)
    if op == "shift":
        return p.shift(1 if q is None else q)
    raise ValueError(f"unknown operation {op!r}")


def poly_pow(p: Polynomial, e: int) -> Polynomial:
    return p ** e


def poly_eval(p: Polynomial, x0):
    """Exact value of ``p`` at ``x0`` (Horner)."""
    if isinstance(p, IntPolynomial) and isinstance(x0, (int, Fraction)):
        return p(x0)
    return GaussianPolynomial.lift(p)(x0)
