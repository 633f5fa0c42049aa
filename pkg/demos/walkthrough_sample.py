#!/usr/bin/env python3
"""Walk the whole pipeline on the five-line sample arrangement.

Starts from exact equations over Q(i), computes the combinatorics, a wiring
diagram, both fundamental-group presentations, and the word-level inclusion
data tying them together.
"""

from arrpi import (
    boundary_presentation,
    complement_presentation_arvola,
    complement_presentation_inclusion,
    compute_wiring,
    fixtures,
    inclusion_data,
    kernel_generators,
    load_arrangement,
    load_wiring,
)
from arrpi.arrangement import cycle_basis, incidence_graph, singular_points
from arrpi.simplify import abelianization


def main() -> None:
    arr = load_arrangement(fixtures.path("didactic.arr.json"))
    print("== combinatorics ==")
    for p in singular_points(arr):
        where = "at infinity" if p.at_infinity else "affine"
        print(f"  {p.label()}  multiplicity {p.multiplicity} ({where})")
    graph = incidence_graph(arr)
    basis = cycle_basis(graph)
    print(f"  incidence graph: {graph.vertex_count()} vertices, "
          f"{graph.edge_count()} edges, b1 = {graph.b1()}")
    print("  generating cycles:", ", ".join(f"({s},{t})" for s, t in basis.pairs))

    print("\n== computed wiring diagram ==")
    computed = compute_wiring(arr)
    kinds = ["actual" if ev.is_actual else "virtual" for ev in computed.events]
    print(f"  shear {computed.source['computed']['shear']}, "
          f"tilt {computed.source['computed']['tilt']}, "
          f"{kinds.count('actual')} actual / {kinds.count('virtual')} virtual crossings")

    print("\n== groups, from the transcribed diagram ==")
    bwd = load_wiring(fixtures.path("didactic.wd.json"))
    bp = boundary_presentation(arr)
    print("  boundary:  ", bp.describe())
    print("  H1:", abelianization(bp))
    cp = complement_presentation_arvola(bwd)
    print("  complement:", cp.describe())
    print("  H1:", abelianization(cp))

    print("\n== the inclusion, cycle by cycle ==")
    data = inclusion_data(bwd, "framed")
    for pd in data.pairs:
        print(f"  e{pd.pair}: delta_l = {pd.delta_l} ; mu = {pd.mu} ; "
              f"delta_r = {pd.delta_r}")
        print(f"            image = {pd.image}")
    print("  kernel normal generators:",
          "; ".join(str(w) for w in kernel_generators(bwd)))

    print("\n== complement presentation carrying the boundary data ==")
    print(" ", complement_presentation_inclusion(bwd, "framed").describe())


if __name__ == "__main__":
    main()
