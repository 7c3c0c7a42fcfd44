"""Exact verification toolkit for symmetric sextic surfaces and their moduli."""
from .exactnum import CyclotomicElement, OrderMismatchError, Rational, root_of_unity
from .hilbert import HilbertSamples, OddCubic
from .polyalg import ExactMatrix, Polynomial

__version__ = "0.1.0"

__all__ = [
    "CyclotomicElement", "ExactMatrix", "HilbertSamples", "OddCubic", "OrderMismatchError",
    "Polynomial", "Rational", "root_of_unity",
]
