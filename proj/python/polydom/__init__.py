"""Parameterized polynomial domains with Buchberger's Groebner basis algorithms."""

from ._core import AlgebraError, Polynomial, Ring, axiom_report, run_cli

__all__ = ["AlgebraError", "Polynomial", "Ring", "axiom_report", "run_cli"]
