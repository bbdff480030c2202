import json
import math
import os
from fractions import Fraction

import numpy as np
import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def load_fixture(name):
    with open(os.path.join(FIXTURES, name)) as fh:
        return json.load(fh)


def parse_radical(text):
    """Parse an exact entry string into canonical (sign, q) with value sign*sqrt(q).

    Accepted forms: "0", "1", "-1", "p/q", "sqrt(p/q)", "c*sqrt(p/q)",
    "c/sqrt(p)"; q is a non-negative Fraction.
    """
    text = text.strip()
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:]
    if "sqrt" not in text:
        value = Fraction(text)
        if value == 0:
            return (0, Fraction(0))
        return (sign, value * value)
    if "*" in text:
        coeff_text, _, rest = text.partition("*")
        coeff = Fraction(coeff_text)
        arg = Fraction(rest.removeprefix("sqrt(").removesuffix(")"))
        return (sign, coeff * coeff * arg)
    if "/sqrt" in text:
        coeff_text, _, rest = text.partition("/sqrt")
        coeff = Fraction(coeff_text)
        arg = Fraction(rest.removeprefix("(").removesuffix(")"))
        return (sign, coeff * coeff / arg)
    arg = Fraction(text.removeprefix("sqrt(").removesuffix(")"))
    return (sign, arg)


def parse_entry(text):
    """Entry string -> (real (sign, q), imag (sign, q)); imaginaries are +-i."""
    text = text.strip()
    zero = (0, Fraction(0))
    if text == "i":
        return zero, (1, Fraction(1))
    if text == "-i":
        return zero, (-1, Fraction(1))
    return parse_radical(text), zero


def radical_float(pair):
    sign, q = pair
    return sign * math.sqrt(float(q))


def fixture_matrix(rows):
    """Exact fixture rows -> complex float matrix (same float convention as the
    constructor: sign * sqrt(float(q)))."""
    dim = len(rows)
    out = np.zeros((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            re, im = parse_entry(cell)
            out[i, j] = radical_float(re) + 1j * radical_float(im)
    return out


def unitary_from_hermitian(h, angle=1.0):
    """exp(i * angle * h) for Hermitian h, via eigendecomposition."""
    vals, vecs = np.linalg.eigh(h)
    return (vecs * np.exp(1j * angle * vals)) @ vecs.conj().T


def haar_unitary(dim, seed):
    """Haar-distributed unitary via QR of a complex Ginibre matrix."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
