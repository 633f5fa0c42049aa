"""Strand labeling of a braided wiring diagram and the induced presentation
of the complement group.

Each strand starts at the base fiber carrying the meridian generator of its
line and is relabeled at every crossing.  Virtual crossings act like braid
generators (the over strand keeps its word, the under strand is conjugated
by it, positively when the over strand descends).  An actual crossing of m
strands reverses the block and rewrites the entering words a_1..a_m (top to
bottom); the exit words admit several equivalent conventions, all presenting
the same group but differing as free words:

* RAW: the positive half-twist action; the strand entering at height j from
  the bottom leaves with (a_j)^(a_{j-1}...a_1).
* SIMPLIFIED (default): as RAW, except the bottom strand leaves with its own
  word a_m literally (the raw top output collapses to a_m modulo the
  crossing's own relation).
* BOTTOM_CONJ: top and bottom as in SIMPLIFIED, but the inner strands leave
  with (a_j)^(a_m), conjugated by the entering bottom word.  This matches
  the published word tables for the MacLane arrangement, which SIMPLIFIED
  does not; the tests record the one place even that table disagrees with
  itself.

Every intermediate label stays a conjugate of its strand's meridian under
all three rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .errors import DiagramError
from .wiring import BraidedWiringDiagram, VirtualCrossing, WiringEvent, step
from .words import Gen, Presentation, Word, alpha


class LabelRule(Enum):
    RAW = "raw"
    SIMPLIFIED = "simplified"
    BOTTOM_CONJ = "bottom"


DEFAULT_RULE = LabelRule.SIMPLIFIED


def _actual_outputs(incoming: List[Word], rule: LabelRule) -> List[Word]:
    """Exit words, top to bottom, for entering words a_1..a_m (top to bottom).

    The strand entering at block height k (0-based from the top) exits at
    height m-1-k; the returned list is indexed by exit height.
    """
    m = len(incoming)
    outs: List[Optional[Word]] = [None] * m
    for k, a in enumerate(incoming):
        if rule is LabelRule.RAW:
            conj = Word()
            for j in range(k - 1, -1, -1):
                conj = conj * incoming[j]
            out = a ** conj
        elif k == m - 1 or k == 0:
            out = a  # bottom exits literally; top strand's word is a_1 under all rules
        elif rule is LabelRule.BOTTOM_CONJ:
            out = a ** incoming[m - 1]
        else:  # SIMPLIFIED inner strands follow the half-twist action
            conj = Word()
            for j in range(k - 1, -1, -1):
                conj = conj * incoming[j]
            out = a ** conj
        outs[m - 1 - k] = out
    return outs  # type: ignore[return-value]


@dataclass(frozen=True)
class EventRecord:
    event: WiringEvent
    order_before: Tuple[int, ...]
    order_after: Tuple[int, ...]
    labels_before: Tuple[Word, ...]   # by position, top to bottom
    labels_after: Tuple[Word, ...]
    over_wire: Optional[int] = None   # virtual crossings only
    under_wire: Optional[int] = None
    over_label: Optional[Word] = None

    def label_of(self, wire: int, after: bool = False) -> Word:
        order = self.order_after if after else self.order_before
        labels = self.labels_after if after else self.labels_before
        return labels[order.index(wire)]


@dataclass(frozen=True)
class LabeledDiagram:
    bwd: BraidedWiringDiagram
    rule: LabelRule
    records: Tuple[EventRecord, ...]
    final_order: Tuple[int, ...]
    final_labels: Tuple[Word, ...]

    def initial_labels(self) -> Dict[int, Word]:
        return {w: Word.gen(alpha(w)) for w in self.bwd.initial_order}


def label_diagram(bwd: BraidedWiringDiagram, rule: LabelRule = DEFAULT_RULE) -> LabeledDiagram:
    order = list(bwd.initial_order)
    labels: Dict[int, Word] = {w: Word.gen(alpha(w)) for w in order}
    records: List[EventRecord] = []
    for ev in bwd.events:
        before_order = tuple(order)
        before_labels = tuple(labels[w] for w in order)
        over = under = None
        over_label = None
        k = ev.kind
        if isinstance(k, VirtualCrossing):
            upper, lower = order[k.pos - 1], order[k.pos]
            if k.sign == 1:
                over, under = upper, lower
                labels[under] = labels[under] ** labels[over]
            else:
                over, under = lower, upper
                labels[under] = labels[under] ** ~labels[over]
            over_label = labels[over]
        else:
            lo = k.top_pos - 1
            incoming = [labels[w] for w in order[lo : lo + k.multiplicity]]
            outs = _actual_outputs(incoming, rule)
            for height, wire in enumerate(reversed(order[lo : lo + k.multiplicity])):
                labels[wire] = outs[height]
        order = step(order, ev)
        records.append(
            EventRecord(
                ev,
                before_order,
                tuple(order),
                before_labels,
                tuple(labels[w] for w in order),
                over,
                under,
                over_label,
            )
        )
    labeled = LabeledDiagram(
        bwd, rule, tuple(records), tuple(order), tuple(labels[w] for w in order)
    )
    _check_conjugacy(labeled)
    return labeled


def is_conjugate_of_generator(w: Word, g: Gen) -> bool:
    """True when w freely equals u^-1 g u for some word u."""
    letters = list(w.letters)
    while len(letters) > 1:
        (g0, e0), (g1, e1) = letters[0], letters[-1]
        if g0 == g1 and e0 == -e1:
            letters = letters[1:-1]
        else:
            return False
    return letters == [(g, 1)]


def _check_conjugacy(labeled: LabeledDiagram) -> None:
    for rec in labeled.records:
        for wire, w in zip(rec.order_after, rec.labels_after):
            if not is_conjugate_of_generator(w, alpha(wire)):
                raise DiagramError(
                    f"label {w} of strand {wire} is not a conjugate of its meridian"
                )


def complement_presentation_arvola(
    bwd: BraidedWiringDiagram,
    rule: LabelRule = DEFAULT_RULE,
    labeled: Optional[LabeledDiagram] = None,
) -> Presentation:
    """Generators: one meridian per strand.  Relations: at every actual
    crossing with entering words a_1..a_m (top to bottom), the cyclic family
    [a_m, ..., a_1]."""
    if labeled is None:
        labeled = label_diagram(bwd, rule)
    families = []
    for rec in labeled.records:
        if rec.event.is_actual:
            k = rec.event.kind
            lo = k.top_pos - 1
            incoming = rec.labels_before[lo : lo + k.multiplicity]
            families.append(tuple(reversed(incoming)))
    gens = tuple(alpha(i) for i in sorted(bwd.initial_order))
    return Presentation(gens, tuple(families))
