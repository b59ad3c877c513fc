"""Exact arithmetic for Fano and reflexive lattice polytopes."""

from .errors import PolytopeError
from .normal_form import NormalForm, isomorphic, normal_form
from .polytope import Polytope, RationalPolytope, free_sum, product
from .reflexive import (
    discrepancy,
    dual,
    gorenstein_index,
    is_canonical,
    is_fano,
    is_reflexive,
    is_smooth,
    is_terminal,
    predicate_report,
)

__all__ = [
    "NormalForm",
    "Polytope",
    "PolytopeError",
    "RationalPolytope",
    "discrepancy",
    "dual",
    "free_sum",
    "gorenstein_index",
    "is_canonical",
    "is_fano",
    "is_reflexive",
    "is_smooth",
    "is_terminal",
    "isomorphic",
    "normal_form",
    "predicate_report",
    "product",
]

__version__ = "0.1.0"
