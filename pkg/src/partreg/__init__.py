"""Partition regularity, monochromatic solution search and signature colorings."""

from partreg.algebra import Rational, dot, normalize, parse_rational
from partreg.equations import LinearEquation, fox_equation, make_equation

__version__ = "0.1.0"

__all__ = [
    "LinearEquation",
    "Rational",
    "dot",
    "fox_equation",
    "make_equation",
    "normalize",
    "parse_rational",
]
