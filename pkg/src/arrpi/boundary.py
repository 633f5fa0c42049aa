"""Presentation of the boundary-manifold group from incidence combinatorics.

Generators: one meridian per line (the infinity line included) and one cycle
generator per non-tree edge of the incidence graph.  Every affine singular
point P with incident lines i_1 < i_2 < ... < i_m contributes the cyclic
family

    [ a_{i_m}^(e_{i_1,i_m}), ..., a_{i_2}^(e_{i_1,i_2}), a_{i_1} ],

m - 1 relators in total; points on the infinity line contribute nothing.
The abelianization is therefore free of rank (number of lines) + b_1 of the
incidence graph.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .arrangement import Arrangement, CycleBasis, cycle_basis, incidence_graph, singular_points
from .wiring import BraidedWiringDiagram
from .words import Presentation, Word, alpha, eps


def _family(incident: Tuple[int, ...]) -> Tuple[Word, ...]:
    s = incident[0]
    entries = [
        Word.gen(alpha(j)) ** Word.gen(eps(s, j)) for j in reversed(incident[1:])
    ]
    entries.append(Word.gen(alpha(s)))
    return tuple(entries)


def boundary_presentation(arr: Arrangement, basis: Optional[CycleBasis] = None) -> Presentation:
    if basis is None:
        basis = cycle_basis(incidence_graph(arr))
    gens = [alpha(i) for i in range(len(arr.lines))]
    gens.extend(eps(s, t) for s, t in basis.pairs)
    families = [
        _family(p.incident) for p in singular_points(arr) if not p.at_infinity
    ]
    return Presentation(tuple(gens), tuple(families))


def boundary_presentation_from_diagram(
    bwd: BraidedWiringDiagram, infinity_index: int = 0
) -> Presentation:
    """Same presentation computed from a wiring diagram alone.

    The diagram's actual crossings are exactly the affine singular points;
    points on the infinity line contribute no relators, so only the meridian
    of the infinity line itself has to be adjoined.
    """
    points = sorted(tuple(sorted(ev.kind.lines)) for ev in bwd.actual_events())
    pairs = sorted({(min(inc), j) for inc in points for j in inc if j != min(inc)})
    gens = [alpha(i) for i in sorted(set(bwd.initial_order) | {infinity_index})]
    gens.extend(eps(s, t) for s, t in pairs)
    families = [_family(inc) for inc in points]
    return Presentation(tuple(gens), tuple(families))
