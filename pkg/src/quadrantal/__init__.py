"""Exact arithmetic for quadratic number rings and small number fields:
polynomials over Q, trace/norm/discriminant machinery, the full ideal
calculus of quadratic rings (splitting, factorization, class groups),
unit groups via Pell equations, cyclotomic splitting parameters, and
empirical checks of the ideal-distribution asymptotics."""

__version__ = "0.1.0"

from .polynomial import Poly
from .numberfield import FieldElement, NumberField
from .quadring import QuadIdeal, QuadInt, QuadraticField

__all__ = [
    "Poly",
    "NumberField",
    "FieldElement",
    "QuadraticField",
    "QuadInt",
    "QuadIdeal",
]
