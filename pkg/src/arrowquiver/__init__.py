"""Arrow weight quiver invariants of oriented classical and virtual knots.

Knots are given as signed Gauss codes.  A finite biquandle colors the
semiarcs of a diagram; an arrow weight on the biquandle assigns an element of
Z_m to each pair of crossings whose chords intersect in the Gauss diagram,
and the resulting crossing-pair weight sum is invariant under Reidemeister
moves.  Decorating the biquandle coloring quiver with these weights gives a
quiver-valued invariant with several polynomial decategorifications.
"""

from __future__ import annotations

from .biquandle import Biquandle, BiquandleError, Violation, validate_tables
from .gausscode import (
    GaussDiagram,
    apply_move,
    enumerate_moves,
    inverse_move,
    parse_gauss_code,
)
from .homset import (
    arrow_label,
    counting_invariant,
    enumerate_colorings,
    transport_coloring,
)
from .arrowweight import (
    ValidityReport,
    WeightTensor,
    generate_constraints,
    is_valid_weight,
    search_weights,
    sigma_D,
    solve_constraints,
    weight_multiset,
)
from .quiver import Quiver, build_quiver, quotient_quiver, quiver_isomorphic
from .invariants import (
    ExpPoly,
    phi_indegree,
    phi_quotient_loop,
    phi_twovar,
    phi_weight,
    weight_polynomial,
)
from .knotdata import KnotTable, bundled_table, load_table, orientation_variants

__all__ = [
    "Biquandle",
    "BiquandleError",
    "Violation",
    "validate_tables",
    "GaussDiagram",
    "parse_gauss_code",
    "apply_move",
    "enumerate_moves",
    "inverse_move",
    "arrow_label",
    "counting_invariant",
    "enumerate_colorings",
    "transport_coloring",
    "WeightTensor",
    "ValidityReport",
    "sigma_D",
    "weight_multiset",
    "generate_constraints",
    "solve_constraints",
    "search_weights",
    "is_valid_weight",
    "Quiver",
    "build_quiver",
    "quotient_quiver",
    "quiver_isomorphic",
    "ExpPoly",
    "weight_polynomial",
    "phi_indegree",
    "phi_quotient_loop",
    "phi_twovar",
    "phi_weight",
    "KnotTable",
    "bundled_table",
    "load_table",
    "orientation_variants",
]

__version__ = "0.1.0"
