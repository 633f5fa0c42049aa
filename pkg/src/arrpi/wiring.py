"""Braided wiring diagrams: computation, validation, files, rendering.

A diagram records what happens to the n affine lines over an admissible path
in the projection base: the path starts left of every singular value, passes
through them in increasing real-part order, and is horizontal near each.
Tracking the lines' fiber coordinates along the path yields an ordered event
list: an *actual* crossing at each singular point (the m incident strands
reverse) and a *virtual* crossing whenever two strands trade drawn heights
away from a singular point (one passes over the other).

Drawing convention, fixed package-wide: a strand's drawn height is
re(y) + tilt*im(y) for a rational tilt chosen (0 whenever possible) so the
projection to the drawing plane is generic; at a virtual crossing the strand
with the greater imaginary coordinate passes OVER, and the sign is +1
exactly when the over-strand descends (crosses from the upper position to
the lower one).  Real arrangements keep tilt 0 and produce their real
picture with no virtual crossings at all.

Computed diagrams depend on the projection and path; two valid runs (or a
hand-drawn figure) may differ by virtual-crossing patterns while presenting
the same groups.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .arrangement import Arrangement, SingularPoint, affine_chart, singular_points
from .errors import DiagramError, GenericityError, InputError
from .exactnum import QuadElem

MAX_SHEAR_CANDIDATES = 240
MAX_BASE_TILT_TRIES = 6
MAX_TILT_TRIES = 16
MAX_INSET_TRIES = 6


@dataclass(frozen=True)
class ActualCrossing:
    top_pos: int                 # 1-based position of the block's top strand
    lines: Tuple[int, ...]       # line indices top to bottom at the left

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class VirtualCrossing:
    pos: int        # position of the upper strand (lower strand is pos+1)
    sign: int       # +1: upper strand passes over; -1: lower strand passes over


@dataclass(frozen=True)
class WiringEvent:
    t: Fraction
    kind: Union[ActualCrossing, VirtualCrossing]

    @property
    def is_actual(self) -> bool:
        return isinstance(self.kind, ActualCrossing)


@dataclass(frozen=True)
class BraidedWiringDiagram:
    n: int
    initial_order: Tuple[int, ...]    # line indices top to bottom at the base fiber
    events: Tuple[WiringEvent, ...]
    source: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        validate(self)

    def actual_events(self) -> List[WiringEvent]:
        return [ev for ev in self.events if ev.is_actual]

    def virtual_events(self) -> List[WiringEvent]:
        return [ev for ev in self.events if not ev.is_actual]

    def final_order(self) -> Tuple[int, ...]:
        state = list(self.initial_order)
        for _, state in replay(self):
            pass
        return tuple(state)


def step(state: List[int], ev: WiringEvent) -> List[int]:
    """Strand order after the event, given the order before (top to bottom)."""
    n = len(state)
    out = list(state)
    k = ev.kind
    if isinstance(k, VirtualCrossing):
        if not (1 <= k.pos <= n - 1):
            raise DiagramError(f"virtual crossing position {k.pos} out of range at t={ev.t}")
        out[k.pos - 1], out[k.pos] = out[k.pos], out[k.pos - 1]
    else:
        m = k.multiplicity
        if m < 2:
            raise DiagramError(f"actual crossing needs multiplicity >= 2 at t={ev.t}")
        if not (1 <= k.top_pos and k.top_pos + m - 1 <= n):
            raise DiagramError(f"actual crossing block out of range at t={ev.t}")
        lo, hi = k.top_pos - 1, k.top_pos - 1 + m
        if tuple(state[lo:hi]) != k.lines:
            raise DiagramError(
                f"actual crossing at t={ev.t} records lines {k.lines} but the "
                f"strands there are {tuple(state[lo:hi])}"
            )
        out[lo:hi] = reversed(out[lo:hi])
    return out


def replay(bwd: "BraidedWiringDiagram") -> Iterator[Tuple[WiringEvent, List[int]]]:
    """Yield (event, order after the event); orders are top to bottom."""
    state = list(bwd.initial_order)
    for ev in bwd.events:
        state = step(state, ev)
        yield ev, state


def validate(bwd: "BraidedWiringDiagram") -> None:
    if bwd.n < 1:
        raise DiagramError("need at least one strand")
    if len(bwd.initial_order) != bwd.n or len(set(bwd.initial_order)) != bwd.n:
        raise DiagramError("initial_order must list each line exactly once")
    last_t = None
    for ev in bwd.events:
        if last_t is not None and ev.t <= last_t:
            raise DiagramError(f"events not strictly ordered: t={ev.t} after t={last_t}")
        last_t = ev.t
    for _ in replay(bwd):  # position bookkeeping, block consistency
        pass


def crossing_point_sets(bwd: BraidedWiringDiagram) -> List[Tuple[int, ...]]:
    return [tuple(sorted(ev.kind.lines)) for ev in bwd.actual_events()]


def matches_arrangement(bwd: BraidedWiringDiagram, arr: Arrangement) -> bool:
    """Actual crossings biject with affine singular points, by incident set."""
    affine = sorted(p.incident for p in singular_points(arr) if not p.at_infinity)
    return sorted(crossing_point_sets(bwd)) == affine


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def wiring_from_dict(data: dict) -> BraidedWiringDiagram:
    try:
        n = data["n"]
        order = tuple(data["initial_order"])
        raw_events = data["events"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"wiring file missing key: {exc}") from exc
    events = []
    for k, raw in enumerate(raw_events):
        try:
            t = Fraction(raw["t"])
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"event {k}: bad or missing t: {exc}") from exc
        if "actual" in raw:
            a = raw["actual"]
            kind: Union[ActualCrossing, VirtualCrossing] = ActualCrossing(
                int(a["top_pos"]), tuple(int(x) for x in a["lines"])
            )
        elif "virtual" in raw:
            v = raw["virtual"]
            sign = int(v["sign"])
            if sign not in (1, -1):
                raise InputError(f"event {k}: virtual sign must be +-1")
            kind = VirtualCrossing(int(v["pos"]), sign)
        else:
            raise InputError(f"event {k}: neither actual nor virtual")
        events.append(WiringEvent(t, kind))
    try:
        return BraidedWiringDiagram(n, order, tuple(events), data.get("source", {}))
    except DiagramError as exc:
        raise InputError(f"invalid wiring diagram: {exc}") from exc


def wiring_to_dict(bwd: BraidedWiringDiagram) -> dict:
    events = []
    for ev in bwd.events:
        entry: dict = {"t": str(ev.t)}
        if ev.is_actual:
            entry["actual"] = {"top_pos": ev.kind.top_pos, "lines": list(ev.kind.lines)}
        else:
            entry["virtual"] = {"pos": ev.kind.pos, "sign": ev.kind.sign}
        events.append(entry)
    out = {"n": bwd.n, "initial_order": list(bwd.initial_order), "events": events}
    if bwd.source:
        out["source"] = bwd.source
    return out


def load_wiring(path) -> BraidedWiringDiagram:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return wiring_from_dict(data)


def dump_wiring(bwd: BraidedWiringDiagram) -> str:
    return json.dumps(wiring_to_dict(bwd), indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Geometric computation
# ---------------------------------------------------------------------------


def _rational_sequence() -> Iterator[Fraction]:
    """0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ... small rationals first."""
    yield Fraction(0)
    total = 2
    while True:
        for q in range(total - 1, 0, -1):
            p = total - q
            if gcd(p, q) == 1:
                yield Fraction(p, q)
                yield Fraction(-p, q)
        total += 1


def shear_candidates(field=None, rational_prefix: int = 120) -> Iterator:
    """Shear parameters to try, small rationals first.

    Two singular values can differ purely imaginarily in both coordinates; no
    rational shear then separates their real parts, so when a field is given
    the rational prefix is followed by field elements r*sqrt(-d) and
    r*(1 + sqrt(-d)), which do separate such pairs.
    """
    count = 0
    for r in _rational_sequence():
        yield r
        count += 1
        if count >= rational_prefix:
            break
    if field is None:
        return
    mixed = []
    for r in _rational_sequence():
        if r == 0:
            continue
        mixed.append(field(0, r))
        mixed.append(field(r, r))
        if len(mixed) >= rational_prefix:
            break
    yield from mixed


@dataclass(frozen=True)
class _Wire:
    index: int
    slope: QuadElem       # y(x) = slope * x + offset in the sheared chart
    offset: QuadElem

    def at(self, x: QuadElem) -> QuadElem:
        return self.slope * x + self.offset


def _as_field_element(arr: Arrangement, lam) -> QuadElem:
    if isinstance(lam, QuadElem):
        if lam.d != arr.field.d:
            raise GenericityError(f"shear {lam} lives in a different field")
        return lam
    return arr.field(lam)


def _sheared_wires(arr: Arrangement, lam: QuadElem) -> List[_Wire]:
    wires = []
    for idx, a, b, c in affine_chart(arr):
        b2 = b - a * lam  # x -> x + lam*y turns a x + b y + c into a x + (b - lam a) y + c
        if b2.is_zero():
            raise GenericityError(f"line {idx} is vertical under shear {lam}")
        inv = b2.inverse()
        wires.append(_Wire(idx, -(a * inv), -(c * inv)))
    return wires


def _affine_point_xs(
    arr: Arrangement, lam: QuadElem
) -> List[Tuple[QuadElem, SingularPoint]]:
    """Sheared x-coordinate of each affine singular point."""
    chart = {idx: (a, b, c) for idx, a, b, c in affine_chart(arr)}
    out = []
    for p in singular_points(arr):
        if p.at_infinity:
            continue
        i, j = p.incident[0], p.incident[1]
        a1, b1, c1 = chart[i]
        a2, b2, c2 = chart[j]
        det = a1 * b2 - a2 * b1
        if det.is_zero():  # cannot happen for an affine point
            raise GenericityError(f"degenerate intersection {p.label()}")
        inv = det.inverse()
        x = (b1 * c2 - b2 * c1) * inv
        y = (a2 * c1 - a1 * c2) * inv
        out.append((x + y * lam, p))
    return out


def _height(y: QuadElem, tilt: Fraction) -> Fraction:
    """Drawn height of a fiber point.

    The diagram projects the complex fiber to a line; the projection must be
    generic for the arrangement (a strand may not pass through a crossing's
    drawn position at the crossing instant).  Using re + tilt*im, a rational
    linear form in the exact components, keeps every event parameter rational;
    tilt = 0 is the plain real part and suffices for real arrangements.
    """
    return y.re + tilt * y.im


def _order_at(wires: Sequence[_Wire], x: QuadElem, tilt: Fraction) -> List[int]:
    heights = {w.index: _height(w.at(x), tilt) for w in wires}
    order = sorted(heights, key=lambda i: heights[i], reverse=True)
    for a, b in zip(order, order[1:]):
        if heights[a] == heights[b]:
            raise GenericityError(f"wires {a} and {b} tie in drawn height over x = {x}")
    return order


def _segment_events(
    wires: Sequence[_Wire],
    t_a: Fraction,
    t_b: Fraction,
    z_a: QuadElem,
    z_b: QuadElem,
    actual_ts: Dict[Fraction, SingularPoint],
    tilt: Fraction,
) -> List[Tuple[Fraction, int, int, int]]:
    """Drawn-height coincidences of wire pairs strictly inside one segment.

    Each entry is (t, over_wire, i, j) with i, j the two wires and over_wire
    the one with greater imaginary coordinate at the instant.
    """
    dz = z_b - z_a
    dt = t_b - t_a
    found = []
    for a_pos in range(len(wires)):
        for b_pos in range(a_pos + 1, len(wires)):
            wi, wj = wires[a_pos], wires[b_pos]
            dm = wi.slope - wj.slope
            dk = wi.offset - wj.offset
            # Delta(t) = dm * gamma(t) + dk, gamma affine in t
            B = dm * dz
            A = dm * z_a + dk
            rho_B = _height(B, tilt)
            rho_A = _height(A, tilt)
            if rho_B == 0:
                if rho_A == 0:
                    # drawn heights tie along the whole segment: the fiber
                    # projection is not generic for this pair
                    raise GenericityError(
                        f"wires {wi.index},{wj.index} tie in drawn height along a "
                        f"path segment"
                    )
                continue  # constant height offset on this segment: no crossing
            s = Fraction(-rho_A, rho_B)
            if not (0 < s < 1):
                continue
            t = t_a + s * dt
            delta = A + B.scale(s)
            pt = actual_ts.get(t)
            if pt is not None:
                if wi.index in pt.incident and wj.index in pt.incident:
                    continue  # the pair's own actual crossing, recorded separately
                raise GenericityError(
                    f"wires {wi.index},{wj.index} cross over the singular value of "
                    f"{pt.label()}; perturb the projection"
                )
            if delta.im == 0:  # the wires genuinely meet here: cannot happen off a point
                raise GenericityError(
                    f"wires {wi.index},{wj.index} collide at t={t} away from a singular point"
                )
            over = wi.index if delta.im > 0 else wj.index
            found.append((t, over, wi.index, wj.index))
    return found


def _build_diagram(
    arr: Arrangement,
    wires: List[_Wire],
    res: List[Tuple[QuadElem, SingularPoint]],
    lam: QuadElem,
    base_tilt: Fraction,
    tilt: Fraction,
    inset_scale: Fraction,
) -> BraidedWiringDiagram:
    n = len(wires)
    field = arr.field

    if not res:
        x0 = field(0)
        return BraidedWiringDiagram(
            n, tuple(_order_at(wires, x0, tilt)), (),
            {"computed": {"shear": str(lam), "tilt": str(tilt), "base": [str(x0.re), str(x0.im)]}},
        )

    gaps = [
        _height(x2, base_tilt) - _height(x1, base_tilt)
        for (x1, _), (x2, _) in zip(res, res[1:])
    ]
    h = (min(gaps) if gaps else Fraction(1)) * Fraction(1, 4) * inset_scale

    # Path vertices: x0, then for each singular value x_i the horizontal inset
    # [x_i - h, x_i + h]; the actual crossing happens mid-inset.  Real offsets
    # shift the ordering height by exactly their size whatever the base tilt.
    x1 = res[0][0]
    x0 = field(x1.re - 1, x1.im)
    verts: List[QuadElem] = [x0]
    actual_ts: Dict[Fraction, SingularPoint] = {}
    for k, (x, p) in enumerate(res):
        verts.append(field(x.re - h, x.im))
        verts.append(field(x.re + h, x.im))
        actual_ts[Fraction(4 * k + 3, 2)] = p  # t = 2k + 3/2, mid of segment [2k+1, 2k+2]

    initial_order = _order_at(wires, x0, tilt)

    raw_virtuals: List[Tuple[Fraction, int, int, int]] = []
    for s in range(len(verts) - 1):
        t_a, t_b = Fraction(s), Fraction(s + 1)
        raw_virtuals.extend(
            _segment_events(wires, t_a, t_b, verts[s], verts[s + 1], actual_ts, tilt)
        )

    schedule: List[Tuple[Fraction, object]] = [(t, p) for t, p in actual_ts.items()]
    schedule.extend((t, (over, i, j)) for t, over, i, j in raw_virtuals)
    schedule.sort(key=lambda e: e[0])
    for (ta, _), (tb, _) in zip(schedule, schedule[1:]):
        if ta == tb:
            raise GenericityError(f"two crossings share the path parameter t={ta}")

    def gamma(t: Fraction) -> QuadElem:
        s = int(t)
        if s >= len(verts) - 1:
            s = len(verts) - 2
        frac = t - s
        return verts[s] + (verts[s + 1] - verts[s]).scale(frac)

    state = list(initial_order)
    events: List[WiringEvent] = []
    checkpoints = [Fraction(0)]
    for t, payload in schedule:
        checkpoints.append(t)
        if isinstance(payload, SingularPoint):
            block = [i for i in payload.incident if i != arr.infinity]
            positions = sorted(state.index(i) for i in block)
            if positions != list(range(positions[0], positions[0] + len(block))):
                raise GenericityError(
                    f"strands of {payload.label()} not contiguous before the crossing"
                )
            lo = positions[0]
            lines = tuple(state[lo : lo + len(block)])
            events.append(WiringEvent(t, ActualCrossing(lo + 1, lines)))
            state[lo : lo + len(block)] = reversed(state[lo : lo + len(block)])
        else:
            over, i, j = payload
            pi, pj = state.index(i), state.index(j)
            if abs(pi - pj) != 1:
                raise GenericityError(
                    f"wires {i},{j} are not adjacent at t={t}; a crossing was missed"
                )
            upper = min(pi, pj)
            sign = 1 if state[upper] == over else -1
            events.append(WiringEvent(t, VirtualCrossing(upper + 1, sign)))
            state[pi], state[pj] = state[pj], state[pi]

    # Exact mid-gap checkpoints: the maintained order must match geometry.
    checkpoints.append(Fraction(len(verts) - 1))
    for ta, tb in zip(checkpoints, checkpoints[1:]):
        mid = (ta + tb) / 2
        expected = _order_at(wires, gamma(mid), tilt)
        if expected != _replayed_state(initial_order, events, mid):
            raise GenericityError(f"strand order mismatch at t={mid}")

    source = {
        "shear": str(lam),
        "tilt": str(tilt),
        "inset": str(h),
        "base": [str(x0.re), str(x0.im)],
    }
    if base_tilt:
        source["base_tilt"] = str(base_tilt)
    return BraidedWiringDiagram(
        n, tuple(initial_order), tuple(events), {"computed": source}
    )


def _replayed_state(
    initial_order: Sequence[int], events: Sequence[WiringEvent], t: Fraction
) -> List[int]:
    state = list(initial_order)
    for ev in events:
        if ev.t > t:
            break
        state = step(state, ev)
    return state


def find_shear(arr: Arrangement, max_candidates: int = MAX_SHEAR_CANDIDATES):
    """Smallest shear x -> x + lam*y in the search sequence that yields a
    generic projection for this arrangement.

    Returns a rational whenever one works (always, for real arrangements);
    otherwise a field element from the extended sequence.
    """
    last_error = None
    for count, lam in enumerate(shear_candidates(arr.field)):
        if count >= max_candidates:
            break
        try:
            _attempt(arr, lam)
            return lam
        except GenericityError as exc:
            last_error = exc
    raise GenericityError(
        f"no generic shear among the first {max_candidates} candidates; last: {last_error}"
    )


def _attempt(arr: Arrangement, lam) -> BraidedWiringDiagram:
    lam = _as_field_element(arr, lam)
    # Shear-level genericity first: this cannot be repaired by choosing the
    # path or projections differently.
    wires = _sheared_wires(arr, lam)
    pts = _affine_point_xs(arr, lam)
    for k1 in range(len(pts)):
        for k2 in range(k1 + 1, len(pts)):
            if (pts[k1][0] - pts[k2][0]).is_zero():
                raise GenericityError(
                    f"{pts[k1][1].label()} and {pts[k2][1].label()} share a fiber"
                )

    # The path orders the singular values by a generic rational height on the
    # base (the plain real part whenever possible); the fiber projection and
    # the inset length have their own search loops below.
    last: Optional[GenericityError] = None
    for bcount, base_tilt in enumerate(_rational_sequence()):
        if bcount >= MAX_BASE_TILT_TRIES:
            break
        res = sorted(pts, key=lambda q: _height(q[0], base_tilt))
        tied = next(
            (
                (p1, p2)
                for (x1, p1), (x2, p2) in zip(res, res[1:])
                if _height(x1, base_tilt) == _height(x2, base_tilt)
            ),
            None,
        )
        if tied is not None:
            last = GenericityError(
                f"{tied[0].label()} and {tied[1].label()} tie in base height "
                f"under shear {lam}, base tilt {base_tilt}"
            )
            continue
        for count, tilt in enumerate(shear_candidates()):
            if count >= MAX_TILT_TRIES:
                break
            scale = Fraction(1)
            for _ in range(MAX_INSET_TRIES):
                try:
                    return _build_diagram(arr, wires, res, lam, base_tilt, tilt, scale)
                except GenericityError as exc:
                    last = exc
                    scale *= Fraction(13, 16)
    raise last if last is not None else GenericityError("diagram construction failed")


def compute_wiring(arr: Arrangement, shear=None) -> BraidedWiringDiagram:
    if shear is None:
        shear = find_shear(arr)
    return _attempt(arr, shear)


def is_real_arrangement(arr: Arrangement) -> bool:
    return all(c.im == 0 for idx, a, b, c in affine_chart(arr) for c in (a, b, c))


# ---------------------------------------------------------------------------
# SVG rendering
# ---------------------------------------------------------------------------

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]
_STEP_X = 60
_STEP_Y = 40
_PAD = 30


def render_svg(bwd: BraidedWiringDiagram) -> str:
    """Deterministic SVG: wires as polylines, virtual crossings drawn with an
    over/under gap, actual crossings as marked multi-points."""

    cols = len(bwd.events) + 1
    width = _PAD * 2 + cols * _STEP_X
    height = _PAD * 2 + (bwd.n - 1) * _STEP_Y

    def xy(col: int, pos: int) -> Tuple[int, int]:
        return _PAD + col * _STEP_X, _PAD + (pos - 1) * _STEP_Y

    # Wire waypoints per column.
    states = [list(bwd.initial_order)]
    for _, st in replay(bwd):
        states.append(list(st))
    paths: Dict[int, List[Tuple[int, int]]] = {w: [] for w in bwd.initial_order}
    for col, st in enumerate(states):
        for pos, wire in enumerate(st, start=1):
            paths[wire].append(xy(col, pos))
    # extend flat stubs at both ends
    for w, pts in paths.items():
        pts.insert(0, (pts[0][0] - _PAD, pts[0][1]))
        pts.append((pts[-1][0] + _PAD, pts[-1][1]))

    color = {w: _PALETTE[k % len(_PALETTE)] for k, w in enumerate(sorted(paths))}
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width + _PAD} {height}" '
        f'width="{width + _PAD}" height="{height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for w in sorted(paths):
        pts = " ".join(f"{x},{y}" for x, y in paths[w])
        lines.append(
            f'<polyline class="wire wire-{w}" points="{pts}" fill="none" '
            f'stroke="{color[w]}" stroke-width="2"/>'
        )
        x, y = paths[w][0]
        lines.append(
            f'<text x="{x - 18}" y="{y + 4}" font-size="12" fill="{color[w]}">{w}</text>'
        )

    for col, ev in enumerate(bwd.events):
        st_before = states[col]
        if ev.is_actual:
            k = ev.kind
            cx = _PAD + (col + Fraction(1, 2)) * _STEP_X
            cy = _PAD + (k.top_pos - 1 + Fraction(k.multiplicity - 1, 2)) * _STEP_Y
            lines.append(
                f'<g class="crossing actual" data-t="{ev.t}">'
                f'<circle cx="{float(cx):.1f}" cy="{float(cy):.1f}" r="5" fill="black"/></g>'
            )
        else:
            k = ev.kind
            over_pos = k.pos if k.sign == 1 else k.pos + 1
            over_wire = st_before[over_pos - 1]
            x0, y0 = xy(col, over_pos)
            x1, y1 = xy(col + 1, k.pos + 1 if over_pos == k.pos else k.pos)
            cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
            lines.append(
                f'<g class="crossing virtual" data-t="{ev.t}" data-sign="{k.sign}">'
                f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="7" fill="white"/>'
                f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
                f'stroke="{color[over_wire]}" stroke-width="2"/></g>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
