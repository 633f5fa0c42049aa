"""Arrangement combinatorics: singular points, incidence graph, cycle basis.

Lines live in the complex projective plane over Q(sqrt(-d)).  All
intersections are computed exactly and deduplicated by exact projective
normalization (first nonzero coordinate scaled to 1), so multiple points of
any multiplicity are recognized with no epsilon anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import DomainError, InputError
from .exactnum import QuadElem, QuadField

Point = Tuple[QuadElem, QuadElem, QuadElem]


@dataclass(frozen=True)
class ProjLine:
    """The projective line a*x + b*y + c*z = 0."""

    coeffs: Tuple[QuadElem, QuadElem, QuadElem]
    index: int

    def __post_init__(self):
        if all(c.is_zero() for c in self.coeffs):
            raise DomainError(f"line {self.index} has zero coefficient vector")

    def contains(self, p: Point) -> bool:
        a, b, c = self.coeffs
        return (a * p[0] + b * p[1] + c * p[2]).is_zero()


@dataclass(frozen=True)
class Arrangement:
    lines: Tuple[ProjLine, ...]
    infinity: int  # index of the line at infinity L_0's slot in `lines`
    field: QuadField

    def __post_init__(self):
        if len(self.lines) < 2:
            raise DomainError("an arrangement needs at least 2 lines")
        if not (0 <= self.infinity < len(self.lines)):
            raise DomainError("infinity index out of range")
        for i, line in enumerate(self.lines):
            if line.index != i:
                raise DomainError("line indices must be consecutive from 0")
        for i in range(len(self.lines)):
            for j in range(i + 1, len(self.lines)):
                if proportional(self.lines[i].coeffs, self.lines[j].coeffs):
                    raise DomainError(f"lines {i} and {j} coincide")

    @property
    def n(self) -> int:
        """Number of affine lines (total minus the line at infinity)."""
        return len(self.lines) - 1

    def affine_indices(self) -> List[int]:
        return [l.index for l in self.lines if l.index != self.infinity]


# -- exact projective primitives ---------------------------------------------


def proportional(u: Sequence[QuadElem], v: Sequence[QuadElem]) -> bool:
    for i in range(3):
        for j in range(i + 1, 3):
            if not (u[i] * v[j] - u[j] * v[i]).is_zero():
                return False
    return True


def cross(u: Sequence[QuadElem], v: Sequence[QuadElem]) -> Point:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def normalize_point(p: Point) -> Point:
    for coord in p:
        if not coord.is_zero():
            inv = coord.inverse()
            return tuple(x * inv for x in p)  # type: ignore[return-value]
    raise DomainError("zero vector is not a projective point")


@dataclass(frozen=True)
class SingularPoint:
    coords: Point                 # normalized
    incident: Tuple[int, ...]     # sorted line indices
    at_infinity: bool

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    def label(self) -> str:
        return "P" + ",".join(str(i) for i in self.incident)


def singular_points(arr: Arrangement) -> List[SingularPoint]:
    """All pairwise intersections, merged by exact coordinates."""
    buckets: Dict[Point, set] = {}
    lines = arr.lines
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = normalize_point(cross(lines[i].coeffs, lines[j].coeffs))
            buckets.setdefault(p, set()).update((i, j))
    pts = [
        SingularPoint(p, tuple(sorted(inc)), arr.infinity in inc)
        for p, inc in buckets.items()
    ]
    pts.sort(key=lambda s: (not s.at_infinity, s.incident))
    return pts


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph: one vertex per line, one per singular point,
    an edge e(L, P) whenever P lies on L."""

    n_lines: int
    infinity: int
    points: Tuple[SingularPoint, ...]

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """(line index, point position) pairs."""
        return [(l, k) for k, p in enumerate(self.points) for l in p.incident]

    def vertex_count(self) -> int:
        return self.n_lines + len(self.points)

    def edge_count(self) -> int:
        return sum(p.multiplicity for p in self.points)

    def b1(self) -> int:
        return self.edge_count() - self.vertex_count() + 1

    def to_dot(self) -> str:
        out = ["graph incidence {"]
        for i in range(self.n_lines):
            shape = "doublecircle" if i == self.infinity else "circle"
            out.append(f'  L{i} [shape={shape}, label="L{i}"];')
        for k, p in enumerate(self.points):
            out.append(f'  P{k} [shape=box, label="{p.label()}"];')
        for l, k in self.edges:
            out.append(f"  L{l} -- P{k};")
        out.append("}")
        return "\n".join(out) + "\n"


def incidence_graph(arr: Arrangement) -> IncidenceGraph:
    return IncidenceGraph(len(arr.lines), arr.infinity, tuple(singular_points(arr)))


def nu(point: SingularPoint, infinity: int) -> int:
    """Minimal line index among the affine lines through an affine point."""
    if point.at_infinity:
        raise DomainError("nu is defined for affine singular points only")
    return min(i for i in point.incident if i != infinity)


@dataclass(frozen=True)
class CycleBasis:
    """Spanning tree of the incidence graph plus one cycle pair per
    non-tree edge.

    The tree keeps every edge at the points of the infinity line, plus the
    minimal-index edge e(L_nu(P), P) at every affine point; each remaining
    edge e(L_t, P) closes exactly one generating cycle, recorded as the
    pair (nu(P), t).
    """

    tree: Tuple[Tuple[int, int], ...]      # (line index, point position)
    pairs: Tuple[Tuple[int, int], ...]     # (s, t) with s = nu(P) < t
    pair_points: Dict[Tuple[int, int], int]  # pair -> point position


def cycle_basis(graph: IncidenceGraph) -> CycleBasis:
    tree: List[Tuple[int, int]] = []
    pairs: List[Tuple[int, int]] = []
    pair_points: Dict[Tuple[int, int], int] = {}
    for k, p in enumerate(graph.points):
        if p.at_infinity:
            tree.extend((l, k) for l in p.incident)
            continue
        s = nu(p, graph.infinity)
        tree.append((s, k))
        for t in p.incident:
            if t != s:
                pairs.append((s, t))
                pair_points[(s, t)] = k
    pairs.sort()
    basis = CycleBasis(tuple(tree), tuple(pairs), pair_points)
    _validate_basis(graph, basis)
    return basis


def _validate_basis(graph: IncidenceGraph, basis: CycleBasis) -> None:
    v = graph.vertex_count()
    if len(basis.tree) != v - 1:
        raise DomainError("tree edge count != V - 1; arrangement graph not connected?")
    # spanning and acyclic, by traversal
    adj: Dict[str, List[str]] = {}
    for l, k in basis.tree:
        adj.setdefault(f"L{l}", []).append(f"P{k}")
        adj.setdefault(f"P{k}", []).append(f"L{l}")
    seen = set()
    stack = [(f"L{graph.infinity}", None)]
    while stack:
        node, parent = stack.pop()
        if node in seen:
            raise DomainError("tree has a cycle")
        seen.add(node)
        for nb in adj.get(node, ()):
            if nb != parent:
                stack.append((nb, node))
    if len(seen) != v:
        raise DomainError("tree is not spanning")
    if len(basis.pairs) != graph.b1():
        raise DomainError("cycle count disagrees with b1 of the incidence graph")
    if len(set(basis.pairs)) != len(basis.pairs):
        raise DomainError("duplicate cycle pair")


# -- affine chart --------------------------------------------------------------


def _inv3(m: List[List[QuadElem]], field: QuadField) -> List[List[QuadElem]]:
    def det2(a, b, c, d):
        return a * d - b * c

    cof = [
        [
            det2(m[1][1], m[1][2], m[2][1], m[2][2]),
            -det2(m[1][0], m[1][2], m[2][0], m[2][2]),
            det2(m[1][0], m[1][1], m[2][0], m[2][1]),
        ],
        [
            -det2(m[0][1], m[0][2], m[2][1], m[2][2]),
            det2(m[0][0], m[0][2], m[2][0], m[2][2]),
            -det2(m[0][0], m[0][1], m[2][0], m[2][1]),
        ],
        [
            det2(m[0][1], m[0][2], m[1][1], m[1][2]),
            -det2(m[0][0], m[0][2], m[1][0], m[1][2]),
            det2(m[0][0], m[0][1], m[1][0], m[1][1]),
        ],
    ]
    det = m[0][0] * cof[0][0] + m[0][1] * cof[0][1] + m[0][2] * cof[0][2]
    if det.is_zero():
        raise DomainError("singular coordinate change")
    inv_det = det.inverse()
    # inverse = adjugate / det; adjugate = transpose of cofactor matrix
    return [[cof[j][i] * inv_det for j in range(3)] for i in range(3)]


def affine_chart(arr: Arrangement) -> List[Tuple[int, QuadElem, QuadElem, QuadElem]]:
    """Affine equations a*x + b*y + c = 0 of the lines other than L_infinity,
    in a chart where the infinity line is z = 0.

    Returns (line index, a, b, c) tuples.  If the infinity line already is
    z = 0 the equations are read off directly; otherwise a projective change
    of coordinates with third row L_infinity is applied to every line.
    """
    field = arr.field
    inf = arr.lines[arr.infinity].coeffs
    if inf[0].is_zero() and inf[1].is_zero():
        rows = None  # chart already affine
    else:
        candidates = [
            (field(1), field(0), field(0)),
            (field(0), field(1), field(0)),
            (field(0), field(0), field(1)),
        ]
        rows = None
        for i in range(3):
            for j in range(i + 1, 3):
                m = [list(candidates[i]), list(candidates[j]), list(inf)]
                try:
                    minv = _inv3(m, field)
                except DomainError:
                    continue
                rows = minv
                break
            if rows:
                break
        if rows is None:  # unreachable: inf is nonzero
            raise DomainError("could not build a chart for the infinity line")
    out = []
    for line in arr.lines:
        if line.index == arr.infinity:
            continue
        if rows is None:
            a, b, c = line.coeffs
        else:
            # new coefficients = old row-vector times M^{-1}
            l = line.coeffs
            a = l[0] * rows[0][0] + l[1] * rows[1][0] + l[2] * rows[2][0]
            b = l[0] * rows[0][1] + l[1] * rows[1][1] + l[2] * rows[2][1]
            c = l[0] * rows[0][2] + l[1] * rows[1][2] + l[2] * rows[2][2]
        out.append((line.index, a, b, c))
    return out


# -- serialization --------------------------------------------------------------


def arrangement_from_dict(data: dict) -> Arrangement:
    try:
        d = data["field"]["d"]
        infinity = data["infinity"]
        raw_lines = data["lines"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"arrangement file missing key: {exc}") from exc
    if not isinstance(d, int):
        raise InputError("field.d must be an integer")
    field = QuadField(d)
    lines = []
    for i, coeffs in enumerate(raw_lines):
        if len(coeffs) != 3:
            raise InputError(f"line {i}: expected 3 coefficients")
        lines.append(ProjLine(tuple(field.from_literal(c) for c in coeffs), i))
    return Arrangement(tuple(lines), infinity, field)


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "field": {"d": arr.field.d},
        "infinity": arr.infinity,
        "lines": [[c.to_literal() for c in l.coeffs] for l in arr.lines],
    }


def load_arrangement(path) -> Arrangement:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return arrangement_from_dict(data)
