"""Exact checkers for the Cassini, Catalan, d'Ocagne, shift, difference,
two-index and generating-function identities of the four Mersenne families.

Every checker builds the left side from the sequence and polynomial modules
and the right side from the closed form. Both are embedded as
:class:`GaussianPolynomial` and compared structurally, so a report is only
``holds`` when the two sides are identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import polynomials as poly
from . import sequences as seq
from .exact import I, X, GaussianDyadic, GaussianPolynomial, pow2
from .sequences import Family


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    parameters: tuple[tuple[str, int], ...]
    lhs: GaussianPolynomial
    rhs: GaussianPolynomial
    orientation: str = ""
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs", GaussianPolynomial.lift(self.lhs))
        object.__setattr__(self, "rhs", GaussianPolynomial.lift(self.rhs))
        object.__setattr__(self, "holds", self.lhs == self.rhs)

    @property
    def residual(self) -> GaussianPolynomial:
        return self.lhs - self.rhs

    @property
    def params(self) -> dict[str, int]:
        return dict(self.parameters)


def _report(name, lhs, rhs, orientation, **params) -> IdentityReport:
    return IdentityReport(name, tuple(params.items()), lhs, rhs, orientation)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _base(family: Family, n: int):
    """Base (k = 1) term computed by its recurrence, not the closed form."""
    if family is Family.M:
        return seq.mersenne_oracle(n)
    if family is Family.GM:
        return seq.gaussian_mersenne_oracle(n)
    if family is Family.MP:
        return poly.mersenne_poly(n)
    return poly.gaussian_mersenne_poly(n)


def _gaussian_cassini_rhs(n: int, x_term: bool) -> GaussianPolynomial:
    """``(2^(n-2) - 2^(n-1)) - i*3*2^(n-2)``, with ``x`` on the i-part if asked."""
    q = pow2(n - 2)
    re = GaussianPolynomial.constant(q - pow2(n - 1))
    im = GaussianPolynomial.constant(-3 * I * q)
    return re + (im * X if x_term else im)


# -- Cassini family ---------------------------------------------------------


def check_cassini(family: Family | str, n: int) -> IdentityReport:
    """Three consecutive base terms, in the orientation each family uses.

    M, MP: ``P[n]^2 - P[n+1] P[n-1] = 2^(n-1)``.
    GM, GMP: ``P[n+1] P[n-1] - P[n]^2 = (2^(n-2) - 2^(n-1)) - i 3 2^(n-2)``
    (times ``x`` on the imaginary part for GMP).
    """
    family = Family(family)
    _need(n >= 1, f"Cassini needs n >= 1, got {n}")
    t = lambda j: seq.term(family, j)
    if family in (Family.M, Family.MP):
        lhs = t(n) ** 2 - t(n + 1) * t(n - 1)
        return _report("cassini", lhs, pow2(n - 1), "P[n]^2 - P[n+1]P[n-1]",
                       family=family.value, n=n)
    lhs = t(n + 1) * t(n - 1) - t(n) ** 2
    rhs = _gaussian_cassini_rhs(n, family is Family.GMP)
    return _report("cassini", lhs, rhs, "P[n+1]P[n-1] - P[n]^2", family=family.value, n=n)


def check_catalan_gaussian(n: int, m: int) -> IdentityReport:
    _need(1 <= m <= n, f"Catalan needs 1 <= m <= n, got n={n}, m={m}")
    gm = seq.gaussian_mersenne
    lhs = gm(n + m) * gm(n - m) - gm(n) ** 2
    a = pow2(n) - pow2(n + m - 1)
    re = a + (pow2(n - m - 1) - pow2(n - m))
    im = 3 * (a - pow2(n - m - 1))
    return _report("catalan", lhs, re + I * im, "GM[n+m]GM[n-m] - GM[n]^2", n=n, m=m)


def check_docagne_gaussian(n: int, m: int) -> IdentityReport:
    _need(n >= 1 and m >= 1, f"d'Ocagne needs n, m >= 1, got n={n}, m={m}")
    gm = seq.gaussian_mersenne
    lhs = gm(m + 1) * gm(n) - gm(m) * gm(n + 1)
    d = pow2(n - 1) - pow2(m - 1)
    return _report("docagne", lhs, d + 3 * I * d, "GM[m+1]GM[n] - GM[m]GM[n+1]", n=n, m=m)


def check_k_cassini(family: Family | str, n: int, k: int, a: int) -> IdentityReport:
    """Cassini identity for the k-generalized terms at ``nk+a, nk+a-1, nk+a-2``.

    Offsets ``a`` outside ``[0, k]`` are rejected: ``a = k + 1`` is the
    ``a = 1`` case of ``n + 1`` and larger offsets fall outside the block of n.
    """
    family = Family(family)
    _need(n >= 2 and k >= 2, f"k-Cassini needs n, k >= 2, got n={n}, k={k}")
    _need(0 <= a <= k, f"offset a must lie in [0, {k}], got {a}")
    t = lambda j: seq.term(family, j, k)
    hi, mid, lo = t(n * k + a), t(n * k + a - 1), t(n * k + a - 2)
    base = _base(family, n)
    if family in (Family.M, Family.MP):
        lhs = hi * lo - mid ** 2
        rhs = -pow2(n - 1) * base ** (2 * k - 2) if a == 1 else 0
        orient = "P[nk+a]P[nk+a-2] - P[nk+a-1]^2"
    else:
        lhs = mid ** 2 - hi * lo
        if a == 1:
            # -(Gaussian Cassini rhs) = (2^(n-1) - 2^(n-2)) + i 3 2^(n-2) [x]
            bracket = -_gaussian_cassini_rhs(n, family is Family.GMP)
            rhs = GaussianPolynomial.lift(base ** (2 * k - 2)) * bracket
        else:
            rhs = 0
        orient = "P[nk+a-1]^2 - P[nk+a]P[nk+a-2]"
    return _report("k_cassini", lhs, rhs, orient, family=family.value, n=n, k=k, a=a)


def check_shift(family: Family | str, n: int, s: int) -> IdentityReport:
    """``P[sn+1] = 3 P[sn] - 2 P[sn-1]`` at parameter ``s`` (``3x`` for polynomials)."""
    family = Family(family)
    _need(n >= 1 and s >= 1, f"shift needs n, s >= 1, got n={n}, s={s}")
    t = lambda j: seq.term(family, j, s)
    mult = 3 * X if family.is_polynomial else 3
    rhs = mult * t(s * n) - 2 * t(s * n - 1)
    return _report("shift", t(s * n + 1), rhs, "P[sn+1] = mult*P[sn] - 2P[sn-1]",
                   family=family.value, n=n, s=s)


def check_difference(family: Family | str, s: int, k: int) -> IdentityReport:
    """``P[s+1]^k - P[s]^k = P^(k)[sk+k] - P^(k)[sk]``."""
    family = Family(family)
    _need(s >= 0 and k >= 1, f"difference needs s >= 0, k >= 1, got s={s}, k={k}")
    lhs = _base(family, s + 1) ** k - _base(family, s) ** k
    rhs = seq.term(family, s * k + k, k) - seq.term(family, s * k, k)
    return _report("difference", lhs, rhs, "P[s+1]^k - P[s]^k", family=family.value, s=s, k=k)


def two_index_rhs(family: Family | str, n: int, m: int) -> GaussianPolynomial:
    """Closed form of ``P^(2)[2(n+m-1)] - P[n+m] P[n+m-2]``.

    This is the Cassini value at ``N = n+m-1``: ``2^(n+m-2)`` for M and MP,
    ``2^(n+m-3) (1 + 3i)`` for GM and ``2^(n+m-3) (1 + 3ix)`` for GMP.
    """
    family = Family(family)
    if not family.is_gaussian:
        return GaussianPolynomial.constant(pow2(n + m - 2))
    return -_gaussian_cassini_rhs(n + m - 1, family is Family.GMP)


def printed_two_index_rhs(family: Family | str, n: int, m: int) -> GaussianPolynomial:
    """The Gaussian two-index right side with the exponents as usually printed,
    ``(2^(n+m-1) - 2^(n+m-2)) + i 3 2^(n+m-2)``; exactly twice the true value."""
    family = Family(family)
    if not family.is_gaussian:
        return two_index_rhs(family, n, m)
    q = pow2(n + m - 2)
    im = GaussianPolynomial.constant(3 * I * q)
    return (pow2(n + m - 1) - q) + (im * X if family is Family.GMP else im)


def check_two_index(family: Family | str, n: int, m: int) -> IdentityReport:
    family = Family(family)
    _need(n >= 0 and m >= 0 and n + m > 1, f"two-index needs n, m >= 0 and n+m > 1, got n={n}, m={m}")
    j = n + m
    lhs = seq.term(family, 2 * (j - 1), 2) - _base(family, j) * _base(family, j - 2)
    return _report("two_index", lhs, two_index_rhs(family, n, m),
                   "P^(2)[2(n+m-1)] - P[n+m]P[n+m-2]", family=family.value, n=n, m=m)


# -- generating functions ---------------------------------------------------


@dataclass(frozen=True)
class RationalSeries:
    numerator: GaussianPolynomial
    denominator: GaussianPolynomial
    coefficients: tuple[GaussianDyadic, ...]

    def as_polynomial(self) -> GaussianPolynomial:
        return GaussianPolynomial(self.coefficients)

    def convolution_residual(self) -> GaussianPolynomial:
        """``(sum c_j z^j) * den - num`` truncated to the computed order."""
        n = len(self.coefficients)
        return (self.as_polynomial() * self.denominator - self.numerator).truncate(n)


def expand_rational_series(num, den, count: int) -> RationalSeries:
    """First ``count`` power-series coefficients of ``num / den`` by long division."""
    num, den = GaussianPolynomial.lift(num), GaussianPolynomial.lift(den)
    _need(count >= 1, f"count must be positive, got {count}")
    d = den.coeffs
    if not d or d[0].is_zero():
        raise ValueError("denominator must have a nonzero constant term")
    inv = d[0].inverse()
    a = num.coeffs
    out: list[GaussianDyadic] = []
    for j in range(count):
        acc = a[j] if j < len(a) else GaussianDyadic()
        for i in range(1, min(j, len(d) - 1) + 1):
            acc = acc - d[i] * out[j - i]
        out.append(acc * inv)
    return RationalSeries(num, den, tuple(out))


#: 1 - 3z + 2z^2
MERSENNE_DENOMINATOR = GaussianPolynomial((1, -3, 2))


def generating_function(family: Family | str) -> tuple[GaussianPolynomial, GaussianPolynomial]:
    """``(numerator, denominator)`` of the M or GM generating function."""
    family = Family(family)
    if family is Family.M:
        return GaussianPolynomial((0, 1)), MERSENNE_DENOMINATOR
    if family is Family.GM:
        # z + i(3z/2 - 1/2)
        return GaussianPolynomial((GaussianDyadic(0, -1, 1), GaussianDyadic(2, 3, 1))), MERSENNE_DENOMINATOR
    raise ValueError(f"no generating function for family {family.value}")


def check_genfunc(family: Family | str, count: int) -> IdentityReport:
    family = Family(family)
    _need(count >= 1, f"count must be positive, got {count}")
    series = expand_rational_series(*generating_function(family), count)
    terms = GaussianPolynomial(seq.seq_stream(family, count))
    return _report("genfunc", series.as_polynomial(), terms, "series prefix vs sequence",
                   family=family.value, count=count)


# -- suites -----------------------------------------------------------------

NUMBER_FAMILIES = (Family.M, Family.GM)
ALL_FAMILIES = (Family.M, Family.GM, Family.MP, Family.GMP)


@dataclass
class SuiteConfig:
    """Grid bounds for the verification suites.

    ``None`` means the per-suite default; ``n_max`` overrides both the number
    and polynomial defaults.
    """

    n_max: int | None = None
    k_max: int | None = None
    families: Sequence[Family] = ALL_FAMILIES
    cassini_n: int = 256
    cassini_poly_n: int = 48
    pair_n: int = 64
    k_cassini_n: int = 32
    k_cassini_poly_n: int = 12
    k_cassini_k: int = 8
    shift_n: int = 32
    shift_k: int = 8
    genfunc_count: int = 64

    def n_for(self, default: int) -> int:
        return default if self.n_max is None else self.n_max

    def k_for(self, default: int) -> int:
        return default if self.k_max is None else self.k_max


def _cassini(cfg: SuiteConfig):
    for f in cfg.families:
        top = cfg.n_for(cfg.cassini_poly_n if f.is_polynomial else cfg.cassini_n)
        for n in range(1, top + 1):
            yield check_cassini(f, n)


def _catalan(cfg: SuiteConfig):
    top = cfg.n_for(cfg.pair_n)
    for n in range(1, top + 1):
        for m in range(1, n + 1):
            yield check_catalan_gaussian(n, m)


def _docagne(cfg: SuiteConfig):
    top = cfg.n_for(cfg.pair_n)
    for n in range(1, top + 1):
        for m in range(1, top + 1):
            yield check_docagne_gaussian(n, m)


def _k_cassini(cfg: SuiteConfig):
    for f in cfg.families:
        top = cfg.n_for(cfg.k_cassini_poly_n if f.is_polynomial else cfg.k_cassini_n)
        for k in range(2, cfg.k_for(cfg.k_cassini_k) + 1):
            for n in range(2, top + 1):
                for a in range(k + 1):
                    yield check_k_cassini(f, n, k, a)


def _shift(cfg: SuiteConfig):
    for f in cfg.families:
        for s in range(1, cfg.k_for(cfg.shift_k) + 1):
            for n in range(1, cfg.n_for(cfg.shift_n) + 1):
                yield check_shift(f, n, s)


def _difference(cfg: SuiteConfig):
    for f in cfg.families:
        for k in range(1, cfg.k_for(cfg.shift_k) + 1):
            for s in range(0, cfg.n_for(cfg.shift_n) + 1):
                yield check_difference(f, s, k)


def _two_index(cfg: SuiteConfig):
    top = cfg.n_for(cfg.shift_n)
    for f in cfg.families:
        for n in range(0, top + 1):
            for m in range(0, top + 1):
                if n + m > 1:
                    yield check_two_index(f, n, m)


def _genfunc(cfg: SuiteConfig):
    count = cfg.n_for(cfg.genfunc_count)
    for f in cfg.families:
        if not f.is_polynomial:
            yield check_genfunc(f, count)


SUITES = {
    "cassini": _cassini,
    "catalan": _catalan,
    "docagne": _docagne,
    "k-cassini": _k_cassini,
    "shift": _shift,
    "difference": _difference,
    "two-index": _two_index,
    "genfunc": _genfunc,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> list[IdentityReport]:
    """All reports of one named suite, in deterministic grid order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or SuiteConfig()
    if cfg.n_max is not None and cfg.n_max < 1:
        raise ValueError(f"n_max must be positive, got {cfg.n_max}")
    if cfg.k_max is not None and cfg.k_max < 1:
        raise ValueError(f"k_max must be positive, got {cfg.k_max}")
    return list(SUITES[name](cfg))
