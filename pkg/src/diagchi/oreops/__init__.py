"""Linear differential operators over rational functions."""

from .diffops import DiffOp
from .indicial import local_exponents, indicial_polynomial, singular_points, AlgebraicPoint
from .sympowers import symmetric_square, exterior_square
from .frobenius import LogSeries, local_basis
from .intertwine import find_intertwiner, verify_intertwiner
from . import catalog

__all__ = [
    "DiffOp",
    "local_exponents",
    "indicial_polynomial",
    "singular_points",
    "AlgebraicPoint",
    "symmetric_square",
    "exterior_square",
    "LogSeries",
    "local_basis",
    "find_intertwiner",
    "verify_intertwiner",
    "catalog",
]
