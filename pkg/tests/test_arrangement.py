from itertools import combinations
from math import comb

import pytest

from arrpi.arrangement import (
    arrangement_from_dict,
    cycle_basis,
    incidence_graph,
    nu,
    singular_points,
)
from arrpi.errors import DomainError


def incident_sets(arr):
    return sorted(p.incident for p in singular_points(arr))


def test_didactic_points(didactic_arr):
    pts = singular_points(didactic_arr)
    assert len(pts) == 8
    assert incident_sets(didactic_arr) == [
        (0, 1), (0, 2), (0, 3), (0, 4),
        (1, 2, 4), (1, 3), (2, 3), (3, 4),
    ]
    affine = [p for p in pts if not p.at_infinity]
    assert sorted(p.multiplicity for p in affine) == [2, 2, 2, 3]


def test_maclane_points(maclane_arr):
    pts = singular_points(maclane_arr)
    assert len(pts) == 12
    assert incident_sets(maclane_arr) == [
        (0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7),
        (1, 3), (1, 4, 6), (1, 5, 7),
        (2, 3, 5), (2, 4, 7), (2, 6),
        (3, 6, 7), (4, 5),
    ]
    affine = [p for p in pts if not p.at_infinity]
    assert len(affine) == 8
    assert sorted(p.multiplicity for p in affine) == [2, 2, 2, 3, 3, 3, 3, 3]


def test_two_lines(twolines_arr):
    pts = singular_points(twolines_arr)
    assert len(pts) == 1 and pts[0].multiplicity == 2 and pts[0].at_infinity
    graph = incidence_graph(twolines_arr)
    # a single path: L0 - P - L1
    assert graph.vertex_count() == 3 and graph.edge_count() == 2 and graph.b1() == 0


def brute_force_counts(arr):
    """Independent oracle: enumerate line pairs, group by exact intersection,
    count tree-independent cycles via a fresh traversal."""
    from arrpi.arrangement import cross, normalize_point

    buckets = {}
    lines = arr.lines
    for i, j in combinations(range(len(lines)), 2):
        p = normalize_point(cross(lines[i].coeffs, lines[j].coeffs))
        buckets.setdefault(p, set()).update((i, j))
    V = len(lines) + len(buckets)
    E = sum(len(s) for s in buckets.values())
    # count connected components of the bipartite graph by search
    adj = {}
    for k, (p, inc) in enumerate(buckets.items()):
        for l in inc:
            adj.setdefault(("L", l), []).append(("P", k))
            adj.setdefault(("P", k), []).append(("L", l))
    seen = set()
    comps = 0
    for v in adj:
        if v in seen:
            continue
        comps += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u])
    return V, E, E - V + comps


def test_generic_three_lines_graph(triangle_arr):
    graph = incidence_graph(triangle_arr)
    assert graph.vertex_count() == 10
    assert graph.edge_count() == 12
    V, E, b1 = brute_force_counts(triangle_arr)
    assert (V, E) == (10, 12)
    assert graph.b1() == b1 == 3
    basis = cycle_basis(graph)
    assert basis.pairs == ((1, 2), (1, 3), (2, 3))


def test_didactic_graph_and_basis(didactic_arr):
    graph = incidence_graph(didactic_arr)
    assert graph.vertex_count() == 13
    assert graph.edge_count() == 17
    assert graph.b1() == 5
    basis = cycle_basis(graph)
    assert basis.pairs == ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))
    assert len(basis.tree) == graph.vertex_count() - 1


def test_maclane_basis(maclane_arr):
    graph = incidence_graph(maclane_arr)
    basis = cycle_basis(graph)
    assert graph.b1() == 13
    assert set(basis.pairs) == {
        (2, 3), (2, 5), (2, 4), (2, 7), (2, 6), (4, 5), (3, 6), (3, 7),
        (1, 5), (1, 7), (1, 3), (1, 4), (1, 6),
    }
    assert list(basis.pairs) == sorted(basis.pairs)


@pytest.mark.parametrize(
    "name", ["didactic", "maclane", "triangle", "nearpencil", "twolines"]
)
def test_pair_count_identity(name, request):
    arr = request.getfixturevalue(f"{name}_arr")
    pts = singular_points(arr)
    assert sum(comb(p.multiplicity, 2) for p in pts) == comb(len(arr.lines), 2)
    graph = incidence_graph(arr)
    formula = sum(p.multiplicity for p in pts) - len(arr.lines) - len(pts) + 1
    assert len(cycle_basis(graph).pairs) == graph.b1() == formula


def test_nu_minimal_index(didactic_arr):
    pts = {p.incident: p for p in singular_points(didactic_arr)}
    assert nu(pts[(1, 2, 4)], 0) == 1
    assert nu(pts[(3, 4)], 0) == 3
    with pytest.raises(DomainError):
        nu(pts[(0, 1)], 0)


def test_dot_export(didactic_arr):
    dot = incidence_graph(didactic_arr).to_dot()
    assert dot.startswith("graph incidence {")
    assert dot.count(" -- ") == 17
    assert 'label="P1,2,4"' in dot


def test_rejects_duplicate_lines():
    data = {
        "field": {"d": 1},
        "infinity": 0,
        "lines": [
            [["0", "0"], ["0", "0"], ["1", "0"]],
            [["0", "0"], ["1", "0"], ["0", "0"]],
            [["0", "0"], ["2", "0"], ["0", "0"]],
        ],
    }
    with pytest.raises(DomainError):
        arrangement_from_dict(data)
