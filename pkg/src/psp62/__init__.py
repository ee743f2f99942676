"""Computational verification of a degree-36 polynomial family with Galois
group PSp(6, 2), from the monodromy triple to Frobenius statistics."""

from .claims import CLAIMS, explain
from .pipeline import Config, dumps_report, run

__version__ = "0.1.0"

__all__ = ["CLAIMS", "Config", "dumps_report", "explain", "run"]
