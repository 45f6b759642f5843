"""Exact arithmetic layer: scalars, polynomials, series, linear algebra."""

from .fields import (
    Rat,
    rat,
    QQ,
    PrimeField,
    QuotientField,
    DualField,
    rational_reconstruct,
    crt_combine,
)
from .polys import Poly, RatFun
from .series import ExactSeries
from . import bigfloat, linalg

__all__ = [
    "Rat",
    "rat",
    "QQ",
    "PrimeField",
    "QuotientField",
    "DualField",
    "rational_reconstruct",
    "crt_combine",
    "Poly",
    "RatFun",
    "ExactSeries",
    "bigfloat",
    "linalg",
]
