"""The inclusion of the boundary manifold into the complement, word by word.

Every generating cycle of the incidence graph is indexed by a line pair
(s, t) with s the minimal line through the point P = L_s /\\ L_t.  Seen in the
wiring diagram, the cycle runs from the base fiber along wire s to the
crossing of P (the *left leg*), then back along wire t (the *right leg*).

Two words are attached to each cycle:

* correction words delta_l, delta_r collect, at every actual crossing the
  legs pass through, the effect of detouring around that crossing.  A
  crossing with lines i_1..i_m (top to bottom, i_1 minimal) crossed on wire
  i_h contributes

      left:   e^-1 ( a_{i_1}^-1 (e_2 a_{i_2}^-1 e_2^-1) ... (e_{h-1} a_{i_{h-1}}^-1 e_{h-1}^-1) ) e
      right:  e^-1 ( (e_{h-1} a_{i_{h-1}} e_{h-1}^-1) ... (e_2 a_{i_2} e_2^-1) a_{i_1} ) e

  with e = e_{i_1,i_h} and e_j = e_{i_1,i_j}; the top strand (h = 1)
  contributes nothing.  Left-leg factors are ordered by increasing path
  parameter, right-leg factors by decreasing parameter.

* the retraction word mu is the ordered signed product of the labels of the
  strands passing over the cycle at virtual crossings, in traversal order
  (left leg forward, then right leg backward); a descending over-strand
  counts +1 on the left leg and -1 on the right leg.

The cycle generator's image under the inclusion is delta_l^-1 mu delta_r^-1;
substituting recursively (crossings on the legs lie strictly left of P, so
the recursion is well founded in path order) expresses it in meridians only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .arvola import DEFAULT_RULE, LabeledDiagram, LabelRule, label_diagram
from .errors import CrossingOrderError, DiagramError, DomainError
from .wiring import BraidedWiringDiagram, VirtualCrossing, step
from .words import Gen, GroupMap, Presentation, Word, alpha, eps

Pair = Tuple[int, int]


def cycle_pairs(bwd: BraidedWiringDiagram) -> List[Tuple[Pair, int]]:
    """(pair, event index) for every generating cycle, in path order.

    Each actual crossing with lines i_1 < ... < i_m (as a set) carries the
    pairs (i_1, i_j); the listing order (crossing by crossing, then by the
    partner index's strand order) is a valid substitution order because leg
    contributions only ever involve pairs of strictly earlier crossings.
    """
    out: List[Tuple[Pair, int]] = []
    for k, ev in enumerate(bwd.events):
        if not ev.is_actual:
            continue
        lines = ev.kind.lines
        s = min(lines)
        out.extend(((s, j), k) for j in lines if j != s)
    return out


@dataclass(frozen=True)
class CyclePath:
    pair: Pair
    crossing_index: int
    left: Tuple[int, ...]    # event indices met by wire s before P, ascending
    right: Tuple[int, ...]   # event indices met by wire t before P, descending


def _wire_events(bwd: BraidedWiringDiagram, wire: int, before: int) -> List[int]:
    """Indices of events (actual and virtual) involving `wire` before event
    index `before`, ascending."""
    out = []
    order = list(bwd.initial_order)
    for k, ev in enumerate(bwd.events):
        if k >= before:
            break
        kind = ev.kind
        if isinstance(kind, VirtualCrossing):
            involved = (order[kind.pos - 1], order[kind.pos])
        else:
            involved = kind.lines
        if wire in involved:
            out.append(k)
        order = step(order, ev)
    return out


def cycle_path(bwd: BraidedWiringDiagram, pair: Pair) -> CyclePath:
    s, t = pair
    crossing_index = None
    for k, ev in enumerate(bwd.events):
        if ev.is_actual and s in ev.kind.lines and t in ev.kind.lines:
            crossing_index = k
            break
    if crossing_index is None:
        raise DiagramError(f"no actual crossing joins lines {s} and {t}")
    left = _wire_events(bwd, s, crossing_index)
    right = _wire_events(bwd, t, crossing_index)
    return CyclePath(pair, crossing_index, tuple(left), tuple(reversed(right)))


def _delta_contribution(lines: Sequence[int], wire: int, side: str) -> Word:
    i1 = lines[0]
    if min(lines) != i1:
        raise CrossingOrderError(
            f"crossing {tuple(lines)}: top strand is line {i1}, not the minimal "
            f"line {min(lines)}; the correction-word formulas do not apply"
        )
    h = lines.index(wire) + 1
    if h == 1:
        return Word()
    e_h = Word.gen(eps(i1, lines[h - 1]))
    inner = Word()
    if side == "left":
        inner = Word.gen(alpha(i1), -1)
        for j in range(2, h):
            e_j = Word.gen(eps(i1, lines[j - 1]))
            inner = inner * (e_j * Word.gen(alpha(lines[j - 1]), -1) * ~e_j)
    else:
        for j in range(h - 1, 1, -1):
            e_j = Word.gen(eps(i1, lines[j - 1]))
            inner = inner * (e_j * Word.gen(alpha(lines[j - 1])) * ~e_j)
        inner = inner * Word.gen(alpha(i1))
    return ~e_h * inner * e_h


def delta_words(bwd: BraidedWiringDiagram, pair: Pair) -> Tuple[Word, Word]:
    path = cycle_path(bwd, pair)
    s, t = pair
    dl = Word()
    for k in path.left:
        ev = bwd.events[k]
        if ev.is_actual:
            dl = dl * _delta_contribution(ev.kind.lines, s, "left")
    dr = Word()
    for k in path.right:
        ev = bwd.events[k]
        if ev.is_actual:
            dr = dr * _delta_contribution(ev.kind.lines, t, "right")
    return dl, dr


def mu(
    bwd: BraidedWiringDiagram,
    pair: Pair,
    labeled: Optional[LabeledDiagram] = None,
    rule: LabelRule = DEFAULT_RULE,
) -> Word:
    if labeled is None:
        labeled = label_diagram(bwd, rule)
    path = cycle_path(bwd, pair)
    s, t = pair
    out = Word()
    for leg_wire, leg, leg_sign in ((s, path.left, 1), (t, path.right, -1)):
        for k in leg:
            rec = labeled.records[k]
            if rec.event.is_actual or rec.under_wire != leg_wire:
                continue
            sgn = rec.event.kind.sign * leg_sign
            out = out * (rec.over_label if sgn == 1 else ~rec.over_label)
    return out


def unknotting_map(bwd: BraidedWiringDiagram, infinity_index: int = 0) -> GroupMap:
    """alpha_i -> alpha_i, e_{s,t} -> delta_l * e_{s,t} * delta_r."""
    images: Dict[Gen, Word] = {}
    for i in sorted(set(bwd.initial_order) | {infinity_index}):
        images[alpha(i)] = Word.gen(alpha(i))
    for pair, _ in cycle_pairs(bwd):
        dl, dr = delta_words(bwd, pair)
        images[eps(*pair)] = dl * Word.gen(eps(*pair)) * dr
    return GroupMap(images)


@dataclass(frozen=True)
class PairData:
    pair: Pair
    crossing_index: int
    delta_l: Word
    delta_r: Word
    mu: Word
    image_raw: Word     # (delta_l)^-1 mu (delta_r)^-1, cycle generators allowed
    image: Word         # meridians only, after recursive substitution
    kernel_word: Word   # delta_l e delta_r mu^-1


@dataclass(frozen=True)
class InclusionData:
    bwd: BraidedWiringDiagram
    variant: str
    rule: LabelRule
    infinity_index: int
    pairs: Tuple[PairData, ...]

    def by_pair(self) -> Dict[Pair, PairData]:
        return {pd.pair: pd for pd in self.pairs}

    def map(self) -> GroupMap:
        images: Dict[Gen, Word] = {}
        for i in sorted(set(self.bwd.initial_order) | {self.infinity_index}):
            images[alpha(i)] = Word.gen(alpha(i))
        for pd in self.pairs:
            images[eps(*pd.pair)] = pd.image
        return GroupMap(images)


def inclusion_data(
    bwd: BraidedWiringDiagram,
    variant: str = "framed",
    rule: LabelRule = DEFAULT_RULE,
    infinity_index: int = 0,
) -> InclusionData:
    """Per-cycle inclusion words.

    variant "framed": images are delta_l^-1 mu delta_r^-1 with earlier cycle
    generators substituted recursively.  variant "geometric": the cycles are
    taken in their unknotted position and map straight to mu.
    """
    if variant not in ("framed", "geometric"):
        raise DomainError(f"unknown variant {variant!r}")
    labeled = label_diagram(bwd, rule)
    alpha_ids = GroupMap.identity_on(
        alpha(i) for i in sorted(set(bwd.initial_order) | {infinity_index})
    )
    substitution = alpha_ids
    out: List[PairData] = []
    for pair, k in cycle_pairs(bwd):
        m_word = mu(bwd, pair, labeled)
        if variant == "geometric":
            dl = dr = Word()
        else:
            dl, dr = delta_words(bwd, pair)
        raw = ~dl * m_word * ~dr
        image = substitution(raw)
        if any(g[0] == "e" for g in image.generators()):
            raise DomainError(
                f"cycle {pair}: substitution left cycle generators in the image"
            )
        kernel = dl * Word.gen(eps(*pair)) * dr * ~m_word
        substitution = substitution.updated({eps(*pair): image})
        out.append(PairData(pair, k, dl, dr, m_word, raw, image, kernel))
    return InclusionData(bwd, variant, rule, infinity_index, tuple(out))


def inclusion_map(
    bwd: BraidedWiringDiagram,
    variant: str = "framed",
    rule: LabelRule = DEFAULT_RULE,
    infinity_index: int = 0,
) -> GroupMap:
    return inclusion_data(bwd, variant, rule, infinity_index).map()


def kernel_generators(
    bwd: BraidedWiringDiagram,
    rule: LabelRule = DEFAULT_RULE,
    infinity_index: int = 0,
) -> List[Word]:
    """Normal generators of the inclusion's kernel: one word
    delta_l e delta_r mu^-1 per cycle, plus the product of all meridians."""
    data = inclusion_data(bwd, "framed", rule, infinity_index)
    out = [pd.kernel_word for pd in data.pairs]
    product = Word()
    for i in sorted(set(bwd.initial_order) | {infinity_index}):
        product = product * Word.gen(alpha(i))
    out.append(product)
    return out


def complement_presentation_inclusion(
    bwd: BraidedWiringDiagram,
    variant: str = "framed",
    rule: LabelRule = DEFAULT_RULE,
    infinity_index: int = 0,
    data: Optional[InclusionData] = None,
) -> Presentation:
    """Complement-group presentation carrying the boundary data.

    One cyclic family per actual crossing: entries run bottom-to-top through
    the crossing, each non-minimal line's meridian conjugated by the image of
    its cycle generator, the minimal line's meridian bare.  After the
    recursive substitution the infinity meridian and the cycle generators are
    gone, leaving n generators and sum(m_P - 1) relators.
    """
    if data is None:
        data = inclusion_data(bwd, variant, rule, infinity_index)
    images = {pd.pair: pd.image for pd in data.pairs}
    families = []
    for ev in bwd.actual_events():
        lines = ev.kind.lines
        s = min(lines)
        entries = []
        for l in reversed(lines):
            if l == s:
                entries.append(Word.gen(alpha(l)))
            else:
                entries.append(Word.gen(alpha(l)) ** images[(s, l)])
        families.append(tuple(entries))
    gens = tuple(alpha(i) for i in sorted(bwd.initial_order))
    return Presentation(gens, tuple(families))


def randell_presentation(bwd: BraidedWiringDiagram) -> Presentation:
    """For diagrams with no virtual crossings: one family per crossing,
    meridians taken bottom-to-top at its left."""
    if bwd.virtual_events():
        raise DomainError(
            "diagram has virtual crossings; use the arvola or inclusion pipeline"
        )
    families = []
    for ev in bwd.actual_events():
        families.append(tuple(Word.gen(alpha(l)) for l in reversed(ev.kind.lines)))
    gens = tuple(alpha(i) for i in sorted(bwd.initial_order))
    return Presentation(gens, tuple(families))
