"""Exact SU_n brackets of framed links and webs.

Two evaluators are provided: tensor contraction of a sliced diagram
(:func:`evaluate`) and crossing resolution followed by a planar state sum
(:func:`resolved_state_sum`).  Everything is exact in ``t`` with ``q = t^n``.
"""

from .crosscheck import (kauffman_bracket, kauffman_compare, normalized_invariant,
                         psi_expand, singular_bracket)
from .diagram import (DiagramCombination, Slice, SlicedDiagram, braid_closure, closed,
                      parse_web, render_web, theta, unknot)
from .errors import SnwebError
from .kernel import BACKEND
from .moy import MOYGraph, moy_bracket, moy_original_bracket, moy_state_sum, parse_moy
from .poly import LaurentPoly, RationalFunc
from .statesum import resolve_crossings, resolved_state_sum, state_sum
from .tensor import evaluate, operator_of_tangle

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DiagramCombination", "LaurentPoly", "MOYGraph", "RationalFunc", "Slice",
    "SlicedDiagram", "SnwebError", "braid_closure", "closed", "evaluate", "kauffman_bracket",
    "kauffman_compare", "moy_bracket", "moy_original_bracket", "moy_state_sum",
    "normalized_invariant", "operator_of_tangle", "parse_moy", "parse_web", "psi_expand",
    "render_web", "resolve_crossings", "resolved_state_sum", "singular_bracket", "state_sum",
    "theta", "unknot",
]
