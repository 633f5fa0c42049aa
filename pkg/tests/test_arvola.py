from arrpi.arvola import (
    LabelRule,
    complement_presentation_arvola,
    is_conjugate_of_generator,
    label_diagram,
)
from arrpi.simplify import abelianization
from arrpi.wiring import compute_wiring, wiring_from_dict
from arrpi.words import W, Word, alpha


def fams(p):
    return [tuple(str(w) for w in fam) for fam in p.families]


def test_single_positive_virtual():
    bwd = wiring_from_dict(
        {"n": 2, "initial_order": [1, 2], "events": [{"t": "1", "virtual": {"pos": 1, "sign": 1}}]}
    )
    lab = label_diagram(bwd)
    rec = lab.records[0]
    # (top a1, bottom a2) -> (top a2^a1, bottom a1)
    assert rec.labels_after == (W("a2^a1"), W("a1"))
    assert rec.over_wire == 1 and rec.under_wire == 2


def test_single_negative_virtual():
    bwd = wiring_from_dict(
        {"n": 2, "initial_order": [1, 2], "events": [{"t": "1", "virtual": {"pos": 1, "sign": -1}}]}
    )
    rec = label_diagram(bwd).records[0]
    # (top a1, bottom a2) -> (top a2, bottom a1^(a2^-1))
    assert rec.labels_after == (W("a2"), W("a1^(a2^-1)"))
    assert rec.over_wire == 2 and rec.under_wire == 1


# Strand words of the hand-drawn four-line diagram, read off its annotations.
# Each entry: (event index, position, expected label after the event).
DIDACTIC_TRACE = [
    (0, 3, "a4^a3"),
    (0, 4, "a3"),
    (1, 1, "a4^a3"),
    (1, 2, "a2^a1"),
    (1, 3, "a1"),
    (2, 4, "a1^(a3^-1)"),
    (3, 3, "a2^(a1 a3^-1)"),
    (4, 2, "a2^a1"),
    (5, 3, "a1"),
    (8, 1, "a3"),
    (8, 2, "a4"),
    (10, 2, "a2^a1"),
    (10, 3, "a3"),
]


def test_didactic_label_trace(didactic_wd):
    lab = label_diagram(didactic_wd)
    for k, pos, expect in DIDACTIC_TRACE:
        assert lab.records[k].labels_after[pos - 1] == W(expect), (k, pos, expect)
    assert lab.final_order == (4, 3, 2, 1)
    assert [str(w) for w in lab.final_labels] == ["a4", "a3", "a1^-1 a2 a1", "a1"]


def test_didactic_presentation(didactic_wd):
    pres = complement_presentation_arvola(didactic_wd)
    assert [g for g in pres.generators] == [alpha(1), alpha(2), alpha(3), alpha(4)]
    expected = [
        (W("a4^a3"), W("a2"), W("a1")),
        (W("a3"), W("a1")),
        (W("a4"), W("a3")),
        (W("a3"), W("a2^a1")),
    ]
    assert list(pres.families) == expected
    assert pres.relator_count() == 5  # sum of (m_P - 1)


def test_maclane_bottom_rule_arc_labels(maclane_wd):
    """Labels carried by the strands that later pass over the (4,5) cycle."""
    lab = label_diagram(maclane_wd, LabelRule.BOTTOM_CONJ)
    # wire 4 keeps its generator across the first virtual crossing (it is over)
    assert lab.records[0].label_of(4, after=True) == W("a4")
    # wire 7 exits the (2,4,7) crossing on top with its own generator
    assert lab.records[3].label_of(7, after=True) == W("a7")
    # wire 4 exits the middle of (2,4,7) conjugated by the entering bottom word
    assert lab.records[3].label_of(4, after=True) == W("a4^a7")


def test_maclane_simplified_rule_differs(maclane_wd):
    lab = label_diagram(maclane_wd, LabelRule.SIMPLIFIED)
    assert lab.records[3].label_of(4, after=True) == W("a4^a2")


def test_one_real_node():
    bwd = wiring_from_dict(
        {"n": 2, "initial_order": [1, 2], "events": [{"t": "1", "actual": {"top_pos": 1, "lines": [1, 2]}}]}
    )
    pres = complement_presentation_arvola(bwd)
    assert fams(pres) == [("a2", "a1")]
    ab = abelianization(pres)
    assert ab.rank == 2 and ab.is_free()


def test_generic_three_real_lines(triangle_arr):
    bwd = compute_wiring(triangle_arr)
    pres = complement_presentation_arvola(bwd)
    assert len(pres.families) == 3
    assert all(len(fam) == 2 for fam in pres.families)
    ab = abelianization(pres)
    assert ab.rank == 3 and ab.is_free()


def test_real_double_point_diagram_labels_never_change(triangle_arr):
    # with no virtual crossings and only double points, words follow their
    # strands unchanged and the final order is a permutation of the start
    bwd = compute_wiring(triangle_arr)
    lab = label_diagram(bwd)
    for rec in lab.records:
        for wire, w in zip(rec.order_after, rec.labels_after):
            assert w == Word.gen(alpha(wire))


def test_real_triple_point_conjugates_middle_strand(nearpencil_arr):
    # a real triple point does relabel its middle strand (the half-twist
    # conjugates it); top and bottom strands keep plain meridians
    bwd = compute_wiring(nearpencil_arr)
    lab = label_diagram(bwd)
    triple = next(
        rec for rec in lab.records
        if rec.event.is_actual and rec.event.kind.multiplicity == 3
    )
    k = rec = triple.event.kind
    incoming = triple.labels_before[k.top_pos - 1 : k.top_pos + 2]
    assert all(len(w) == 1 for w in incoming)
    out_top, out_mid, out_bot = triple.labels_after[k.top_pos - 1 : k.top_pos + 2]
    assert out_top == incoming[2] and out_bot == incoming[0]
    assert out_mid == incoming[1] ** incoming[0]


def test_labels_stay_conjugates(maclane_wd, didactic_wd):
    for bwd in (maclane_wd, didactic_wd):
        for rule in LabelRule:
            lab = label_diagram(bwd, rule)
            for rec in lab.records:
                for wire, w in zip(rec.order_after, rec.labels_after):
                    assert is_conjugate_of_generator(w, alpha(wire))


def test_rule_choice_preserves_counts_and_homology(maclane_wd):
    presentations = [
        complement_presentation_arvola(maclane_wd, rule) for rule in LabelRule
    ]
    counts = {(len(p.generators), p.relator_count()) for p in presentations}
    assert counts == {(7, 13)}
    assert {abelianization(p) for p in presentations} == {abelianization(presentations[0])}


def test_relator_count_matches_multiplicities(maclane_wd):
    pres = complement_presentation_arvola(maclane_wd)
    expected = sum(len(ev.kind.lines) - 1 for ev in maclane_wd.actual_events())
    assert pres.relator_count() == expected == 13
