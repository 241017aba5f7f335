import json

import pytest
from hypothesis import given
from strategies import dyadics, gauss_polys, int_polys

from kmersenne.exact import GaussianDyadic as G
from kmersenne.exact import GaussianPolynomial, IntPolynomial
from kmersenne.polynomials import gaussian_mersenne_poly, k_gaussian_mersenne_poly, mersenne_poly
from kmersenne.render import decode_value, encode_value, format_value, value_record


@pytest.mark.parametrize("value, text", [
    (0, "0"),
    (-7, "-7"),
    (G(3, 1), "3+i"),
    (G(0, -1, 1), "-i/2"),
    (G(-1, 0, 2), "-1/4"),
    (G(0, 1, 3), "i/8"),
    (G(1, 3, 2), "(1+3i)/4"),
    (G(18, 16), "18+16i"),
    (G(0, -3), "-3i"),
    (mersenne_poly(5), "81x^4-54x^2+4"),
    (mersenne_poly(2), "3x"),
    (IntPolynomial((0, 1)), "x"),
    (IntPolynomial((0, -1, 0, -1)), "-x^3-x"),
    (gaussian_mersenne_poly(2), "3x+i"),
    (gaussian_mersenne_poly(3), "9x^2-2+i3x"),
    (gaussian_mersenne_poly(4), "27x^3-12x+i(9x^2-2)"),
    (k_gaussian_mersenne_poly(5, 2), "27x^3-9x+i(18x^2-2)"),
    (GaussianPolynomial.from_parts([], [0, -1]), "-ix"),
    (GaussianPolynomial(), "0"),
])
def test_format(value, text):
    assert format_value(value) == text


def test_format_rejects_unknown():
    with pytest.raises(TypeError):
        format_value(1.5)


def test_big_ints_are_strings():
    enc = encode_value(2**200 - 1)
    assert enc == {"re": str(2**200 - 1), "im": "0", "exp2": 0}
    assert json.loads(json.dumps(enc)) == enc


def _roundtrip(value, family=None):
    return decode_value(json.loads(json.dumps(encode_value(value))), family)


@given(dyadics)
def test_roundtrip_dyadic(g):
    assert _roundtrip(g, "GM") == g


@given(gauss_polys)
def test_roundtrip_gaussian_poly(p):
    assert _roundtrip(p, "GMP") == p


@given(int_polys)
def test_roundtrip_int_poly(p):
    back = _roundtrip(p, "MP")
    assert isinstance(back, IntPolynomial) and back == p


def test_roundtrip_int():
    back = _roundtrip(-(10**40), "M")
    assert isinstance(back, int) and back == -(10**40)


def test_decode_type_checks():
    with pytest.raises(ValueError):
        decode_value(encode_value(G(1, 1)), "M")
    with pytest.raises(ValueError):
        decode_value(encode_value(GaussianPolynomial((G(1, 0, 1),))), "MP")


def test_value_record():
    rec = value_record("GM", 0, 1, G(0, -1, 1))
    assert rec == {"family": "GM", "n": 0, "k": 1, "value": {"re": "0", "im": "-1", "exp2": 1}}
