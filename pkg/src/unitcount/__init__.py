"""Exact computations around the unit equation x + y = 1 over F_q(t)."""

from .ff import FieldElem, FieldSpec
from .group import GroupElem, GroupSpec, PhiVector
from .poly import Poly, RatFunc, parse_ratfunc

__all__ = ["FieldElem", "FieldSpec", "GroupElem", "GroupSpec", "PhiVector", "Poly", "RatFunc", "parse_ratfunc"]
