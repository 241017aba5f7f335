"""Text rendering and the JSON value codec used by the command line."""

from __future__ import annotations

from .exact import GaussianDyadic, GaussianPolynomial, IntPolynomial
from .sequences import Family


def _mono(c: int, d: int, unit_ok: bool = True) -> str:
    """``|c| x^d`` with the coefficient dropped when it is 1 and ``d > 0``."""
    c = abs(c)
    if d == 0:
        return str(c)
    x = "x" if d == 1 else f"x^{d}"
    return x if (c == 1 and unit_ok) else f"{c}{x}"


def _terms(coeffs) -> list[tuple[int, int]]:
    return [(c, d) for d, c in reversed(list(enumerate(coeffs))) if c]


def format_int_poly(coeffs) -> str:
    out = []
    for c, d in _terms(coeffs):
        sign = "-" if c < 0 else ("+" if out else "")
        out.append(sign + _mono(c, d))
    return "".join(out) or "0"


def _imag(coeffs, leading: bool) -> str:
    terms = _terms(coeffs)
    if len(terms) == 1:
        c, d = terms[0]
        sign = "-" if c < 0 else ("" if leading else "+")
        if d == 0:
            return sign + ("i" if abs(c) == 1 else f"{abs(c)}i")
        return sign + "i" + _mono(c, d)
    return ("" if leading else "+") + "i(" + format_int_poly(coeffs) + ")"


def format_value(value) -> str:
    """Render any family value the way the published tables write them.

    ``3+i``, ``-i/2``, ``(1+3i)/4``, ``81x^4-54x^2+4``, ``27x^3-12x+i(9x^2-2)``.
    Denominators are written as the decimal value of ``2**exp2``.
    """
    if isinstance(value, int):
        return str(value)
    if isinstance(value, IntPolynomial):
        return format_int_poly(value.coeffs)
    if isinstance(value, GaussianDyadic):
        value = GaussianPolynomial.constant(value)
    if not isinstance(value, GaussianPolynomial):
        raise TypeError(f"cannot render {type(value).__name__}")
    if value.is_zero():
        return "0"
    re = format_int_poly(value.re) if value.re else ""
    im = _imag(value.im, leading=not re) if value.im else ""
    body = re + im
    if not value.exp2:
        return body
    single = len(_terms(value.re)) + len(_terms(value.im)) == 1
    den = 1 << value.exp2
    return f"{body}/{den}" if single else f"({body})/{den}"


# -- JSON -------------------------------------------------------------------


def _enc_scalar(g: GaussianDyadic) -> dict:
    return {"re": str(g.re_num), "im": str(g.im_num), "exp2": g.exp2}


def encode_value(value) -> dict:
    """``{re, im, exp2}`` for numbers, ``{"coeffs": [...]}`` for polynomials.

    Big integers are decimal strings so no JSON reader loses precision.
    """
    if isinstance(value, (int, GaussianDyadic)):
        return _enc_scalar(GaussianDyadic.coerce(value))
    if isinstance(value, (IntPolynomial, GaussianPolynomial)):
        return {"coeffs": [_enc_scalar(GaussianDyadic.coerce(c)) for c in value.coeffs]}
    raise TypeError(f"cannot encode {type(value).__name__}")


def _dec_scalar(obj: dict) -> GaussianDyadic:
    return GaussianDyadic(int(obj["re"]), int(obj["im"]), int(obj["exp2"]))


def decode_value(obj: dict, family: Family | str | None = None):
    """Inverse of :func:`encode_value`.

    With a family tag the native type comes back (``int`` for M,
    :class:`IntPolynomial` for MP); otherwise Gaussian types.
    """
    family = Family(family) if family is not None else None
    if "coeffs" in obj:
        cs = [_dec_scalar(c) for c in obj["coeffs"]]
        if family is Family.MP:
            if not all(c.is_integer() for c in cs):
                raise ValueError("MP coefficients must be integers")
            return IntPolynomial(c.re_num for c in cs)
        return GaussianPolynomial(cs)
    g = _dec_scalar(obj)
    if family is Family.M:
        if not g.is_integer():
            raise ValueError("M values must be integers")
        return g.re_num
    return g


def value_record(family: Family | str, n: int, k: int, value) -> dict:
    return {"family": Family(family).value, "n": n, "k": k, "value": encode_value(value)}
