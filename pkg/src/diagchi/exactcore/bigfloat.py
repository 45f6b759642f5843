"""Arbitrary-precision numerics: precision management and special values.

Thin layer over mpmath.  The one convention that matters package-wide:
every routine that promises `d` correct digits computes with
``bits(d) + max(30, bits(d)//10)`` bits internally and only rounds on the
way out.  Use :func:`working_digits` (or :func:`working_prec` in bits) as a
context manager around any numerical block.
"""

from __future__ import annotations

from contextlib import contextmanager

import mpmath
from mpmath import mpf, mpc  # re-exported for convenience

__all__ = [
    "mpf",
    "mpc",
    "working_digits",
    "working_prec",
    "bits_for_digits",
    "to_mpf",
    "to_mpc",
    "gamma_value",
    "digamma_value",
    "log_value",
    "pi_value",
    "clausen2",
    "zeta_value",
    "almost_equal",
    "digits_agreement",
]

_LOG2_10 = 3.321928094887362


def bits_for_digits(digits):
    return int(digits * _LOG2_10) + 4


def _guarded(bits):
    return bits + max(30, bits // 10)


@contextmanager
def working_digits(digits):
    """Run a block at `digits` decimal digits plus guard bits."""
    with mpmath.workprec(_guarded(bits_for_digits(digits))):
        yield mpmath.mp


@contextmanager
def working_prec(bits):
    """Run a block at `bits` bits plus guard bits."""
    with mpmath.workprec(_guarded(int(bits))):
        yield mpmath.mp


def to_mpf(x):
    """Exact rational (or int/float/mpf) -> mpf at current precision."""
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        num, den = int(x.numerator), int(x.denominator)
        if den == 1:
            return mpmath.mpf(num)
        return mpmath.mpf(num) / mpmath.mpf(den)
    return mpmath.mpf(x)


def to_mpc(x):
    if isinstance(x, mpmath.mpc) or isinstance(x, complex):
        return mpmath.mpc(x)
    return mpmath.mpc(to_mpf(x))


def gamma_value(z):
    """Gamma(z) at the current working precision."""
    return mpmath.gamma(z)


def digamma_value(z):
    """psi(z) = Gamma'(z)/Gamma(z) at the current working precision."""
    return mpmath.psi(0, z)


def log_value(x):
    return mpmath.log(x)


def pi_value():
    return mpmath.pi + mpmath.mpf(0)


def zeta_value(s):
    return mpmath.zeta(s)


def clausen2(theta):
    """The Clausen function Cl_2(theta) = sum sin(k theta)/k^2."""
    return mpmath.clsin(2, theta)


def almost_equal(a, b, digits):
    """|a-b| <= 10^-digits * max(1, |a|, |b|)?"""
    a, b = mpmath.mpmathify(a), mpmath.mpmathify(b)
    scale = max(1, abs(a), abs(b))
    return abs(a - b) <= mpmath.mpf(10) ** (-digits) * scale


def digits_agreement(a, b):
    """Number of decimal digits to which a and b agree (relative)."""
    a, b = mpmath.mpmathify(a), mpmath.mpmathify(b)
    diff = abs(a - b)
    if diff == 0:
        return mpmath.inf
    scale = max(abs(a), abs(b), mpmath.mpf(1))
    return float(-mpmath.log10(diff / scale))
