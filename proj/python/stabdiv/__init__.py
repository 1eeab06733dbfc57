"""Exact polynomial division, Groebner bases and stability diagnostics.

Polynomials are passed as text, e.g. ``"x^2 + 2xy"``, together with the list
of variable names. Orders are specs such as ``"grlex:x>y"``; an empty spec
means graded-lex in declaration order.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    AssertionFailure,
    ParseError,
    StabdivError,
    ValidationError,
    divide,
    groebner,
    hilbert_dimension,
    is_groebner_basis,
    stability_scan,
)

__all__ = [
    "AssertionFailure",
    "ParseError",
    "StabdivError",
    "ValidationError",
    "divide",
    "groebner",
    "h2_norm_sq",
    "hilbert_dimension",
    "is_groebner_basis",
    "l1_norm",
    "rescale",
    "run_job",
    "stability_scan",
]


def h2_norm_sq(polynomial, variables, channels=1):
    """Squared H^2 norm as an exact Fraction."""
    return Fraction(_core.h2_norm_sq(polynomial, list(variables), channels))


def l1_norm(polynomial, variables, channels=1):
    """Sum of absolute coefficients as an exact Fraction."""
    return Fraction(_core.l1_norm(polynomial, list(variables), channels))


def rescale(generators, variables, order=""):
    out = _core.rescale(list(generators), list(variables), order)
    out["lambdas"] = [int(v) for v in out["lambdas"]]
    if out["rho"] is not None:
        out["rho"] = Fraction(out["rho"])
    return out


def run_job(config):
    """Run a job given as a dict or JSON string; returns (code, message, files)."""
    if not isinstance(config, str):
        config = json.dumps(config)
    return _core.run_job(config)
