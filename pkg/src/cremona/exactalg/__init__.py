"""Exact arithmetic: rationals, homogeneous polynomials, gcds, quadratic fields."""

from fractions import Fraction as Rational

from .polynomial import HomogPoly, poly_add, poly_gcd, poly_gcd_many, poly_mul
from .quadratic import QuadExtElem, quad_arith
from .ratfunc import RatFunc

__all__ = [
    "Rational",
    "HomogPoly",
    "poly_add",
    "poly_mul",
    "poly_gcd",
    "poly_gcd_many",
    "QuadExtElem",
    "quad_arith",
    "RatFunc",
]
