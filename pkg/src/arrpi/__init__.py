"""Fundamental groups of complex line arrangements.

From exact equations of a projective line arrangement (or from a braided
wiring diagram file) this package computes the fundamental groups of the
boundary manifold and of the complement, and the explicit word-level map
between them induced by inclusion.
"""

from .arrangement import (
    Arrangement,
    ProjLine,
    SingularPoint,
    arrangement_from_dict,
    cycle_basis,
    incidence_graph,
    load_arrangement,
    singular_points,
)
from .arvola import LabelRule, complement_presentation_arvola, label_diagram
from .boundary import boundary_presentation, boundary_presentation_from_diagram
from .exactnum import QuadElem, QuadField
from .inclusion import (
    complement_presentation_inclusion,
    delta_words,
    inclusion_data,
    inclusion_map,
    kernel_generators,
    mu,
    randell_presentation,
    unknotting_map,
)
from .simplify import abelianization, canonical_eq, eliminate_generator, presentation_eq
from .wiring import (
    BraidedWiringDiagram,
    compute_wiring,
    dump_wiring,
    find_shear,
    load_wiring,
    render_svg,
    wiring_from_dict,
    wiring_to_dict,
)
from .words import GroupMap, Presentation, W, Word, alpha, eps, parse_word

__version__ = "0.1.0"
