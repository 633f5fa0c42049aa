"""Cross-checks tying the pipeline's pieces together.

Each check returns (name, passed, detail).  They are deliberately redundant
with the unit tests: the CLI exposes them so any arrangement or diagram a
user feeds in gets the same scrutiny as the shipped fixtures.
"""

from __future__ import annotations

from math import comb
from typing import List, Optional, Tuple

from . import arvola, boundary, inclusion, simplify, wiring
from .arrangement import Arrangement, cycle_basis, incidence_graph, singular_points
from .errors import ArrpiError, CrossingOrderError
from .words import Word, alpha, expand_relator_family

Check = Tuple[str, bool, str]


def _expected_relators(point_sets) -> int:
    return sum(len(s) - 1 for s in point_sets)


def check_arrangement(arr: Arrangement) -> List[Check]:
    out: List[Check] = []
    pts = singular_points(arr)
    n_lines = len(arr.lines)

    pair_total = sum(comb(p.multiplicity, 2) for p in pts)
    out.append(
        (
            "pair-count",
            pair_total == comb(n_lines, 2),
            f"sum binom(m_P,2) = {pair_total}, binom({n_lines},2) = {comb(n_lines, 2)}",
        )
    )

    graph = incidence_graph(arr)
    basis = cycle_basis(graph)  # raises if tree/cycle structure is broken
    b1 = graph.b1()
    formula = (
        sum(p.multiplicity for p in pts) - n_lines - len(pts) + 1
    )
    out.append(
        (
            "cycle-count",
            len(basis.pairs) == b1 == formula,
            f"pairs = {len(basis.pairs)}, E - V + 1 = {b1}, formula = {formula}",
        )
    )
    return out


def check_diagram(bwd: wiring.BraidedWiringDiagram, arr: Optional[Arrangement]) -> List[Check]:
    out: List[Check] = []
    try:
        wiring.validate(bwd)
        out.append(("diagram-bookkeeping", True, "positions and blocks consistent"))
    except ArrpiError as exc:
        out.append(("diagram-bookkeeping", False, str(exc)))
        return out

    rt = wiring.wiring_from_dict(wiring.wiring_to_dict(bwd))
    out.append(
        (
            "serialization-roundtrip",
            rt.n == bwd.n and rt.initial_order == bwd.initial_order and rt.events == bwd.events,
            "parse(serialize(d)) == d",
        )
    )

    if arr is not None:
        ok = wiring.matches_arrangement(bwd, arr)
        out.append(
            ("crossings-vs-points", ok, "actual crossings biject with affine singular points")
        )
        if wiring.is_real_arrangement(arr):
            out.append(
                (
                    "real-no-virtuals",
                    not bwd.virtual_events(),
                    f"{len(bwd.virtual_events())} virtual crossings",
                )
            )
    return out


def check_presentations(
    bwd: wiring.BraidedWiringDiagram,
    arr: Optional[Arrangement],
    infinity_index: int = 0,
) -> List[Check]:
    out: List[Check] = []
    n = bwd.n
    point_sets = wiring.crossing_point_sets(bwd)
    want_relators = _expected_relators(point_sets)

    pres = arvola.complement_presentation_arvola(bwd)
    ab = simplify.abelianization(pres)
    out.append(
        (
            "arvola-counts",
            len(pres.generators) == n and pres.relator_count() == want_relators,
            f"{len(pres.generators)} generators, {pres.relator_count()} relators "
            f"(expected {n}, {want_relators})",
        )
    )
    out.append(
        (
            "arvola-abelianization",
            ab.rank == n and ab.is_free(),
            f"H_1 = {ab}",
        )
    )

    raw = arvola.complement_presentation_arvola(bwd, rule=arvola.LabelRule.RAW)
    ab_raw = simplify.abelianization(raw)
    out.append(
        (
            "label-rule-agreement",
            ab_raw == ab and raw.relator_count() == pres.relator_count(),
            "raw and simplified labelings give the same counts and abelianization",
        )
    )

    if arr is not None:
        bp = boundary.boundary_presentation(arr)
    else:
        bp = boundary.boundary_presentation_from_diagram(bwd, infinity_index)
    cycles = sum(1 for g in bp.generators if g[0] == "e")
    ab_b = simplify.abelianization(bp)
    out.append(
        (
            "boundary-abelianization",
            ab_b.rank == (n + 1) + cycles and ab_b.is_free(),
            f"H_1 = {ab_b}, expected rank {(n + 1) + cycles}",
        )
    )
    out.append(
        (
            "boundary-relator-count",
            bp.relator_count() == want_relators,
            f"{bp.relator_count()} relators (expected {want_relators})",
        )
    )

    geo = inclusion.complement_presentation_inclusion(bwd, "geometric")
    ab_g = simplify.abelianization(geo)
    out.append(
        (
            "geometric-counts",
            len(geo.generators) == n
            and geo.relator_count() == want_relators
            and ab_g.rank == n
            and ab_g.is_free(),
            f"{len(geo.generators)} generators, {geo.relator_count()} relators, H_1 = {ab_g}",
        )
    )

    if not bwd.virtual_events():
        randell = inclusion.randell_presentation(bwd)
        out.append(
            (
                "randell-geometric-verbatim",
                simplify.families_eq(randell, geo),
                "geometric inclusion presentation equals the real-picture presentation",
            )
        )

    try:
        data = inclusion.inclusion_data(bwd, "framed")
    except CrossingOrderError as exc:
        out.append(("framed-inclusion", True, f"skipped: {exc}"))
        return out

    imap = data.map()
    wire_ids = sorted(bwd.initial_order)

    def dies_in_zn(img: Word) -> bool:
        # Z^n class of alpha_i is exp_i - exp_inf once the infinity meridian
        # is rewritten as the inverse of the product of the others.
        e_inf = img.exponent_sum(alpha(infinity_index))
        return all(img.exponent_sum(alpha(i)) == e_inf for i in wire_ids)

    kernel_words = inclusion.kernel_generators(bwd, infinity_index=infinity_index)
    ok_kernel = all(not imap(w) for w in kernel_words[:-1]) and dies_in_zn(
        imap(kernel_words[-1])
    )
    out.append(
        (
            "kernel-vanishes",
            ok_kernel,
            "per-cycle kernel words map to 1; the meridian product dies in Z^n",
        )
    )

    ok_products = True
    for pd in data.pairs:
        for g in pd.image_raw.generators():
            if g[0] == "e" and pd.image_raw.exponent_sum(g) != 0:
                ok_products = False
        if any(g[0] == "e" for g in pd.image.generators()):
            ok_products = False
        dl_img = imap(pd.delta_l)
        dr_img = imap(pd.delta_r)
        if dl_img * pd.image * dr_img != pd.mu:
            ok_products = False
    out.append(
        (
            "image-structure",
            ok_products,
            "cycle images are meridian-conjugate products; delta_l c delta_r = mu",
        )
    )

    framed = inclusion.complement_presentation_inclusion(bwd, "framed", data=data)
    ab_f = simplify.abelianization(framed)
    out.append(
        (
            "framed-counts",
            len(framed.generators) == n
            and framed.relator_count() == want_relators
            and ab_f.rank == n
            and ab_f.is_free(),
            f"{len(framed.generators)} generators, {framed.relator_count()} relators, "
            f"H_1 = {ab_f}",
        )
    )

    ok_boundary_rel = all(
        dies_in_zn(imap(rel))
        for fam in bp.families
        for rel in expand_relator_family(list(fam))
    )
    out.append(
        (
            "boundary-relators-die",
            ok_boundary_rel,
            "images of boundary relators abelianize to zero",
        )
    )
    return out


def run_all(
    arr: Optional[Arrangement] = None,
    bwd: Optional[wiring.BraidedWiringDiagram] = None,
    infinity_index: int = 0,
) -> List[Check]:
    checks: List[Check] = []
    if arr is not None:
        checks.extend(check_arrangement(arr))
        if bwd is None:
            try:
                bwd = wiring.compute_wiring(arr)
                checks.append(("wiring-computed", True, str(bwd.source.get("computed", ""))))
            except ArrpiError as exc:
                checks.append(("wiring-computed", False, str(exc)))
                return checks
    if bwd is not None:
        checks.extend(check_diagram(bwd, arr))
        checks.extend(check_presentations(bwd, arr, infinity_index))
    return checks
