"""Transposition graphs on linear extensions and the Hamiltonian-path
necessary condition for sign imbalance at most 1.

Vertices are the linear extensions; two extensions are adjacent when they
differ by swapping the labels of two elements. The default mode allows
any label swap; adjacent mode requires the two labels to be consecutive
integers. Every edge joins extensions of opposite sign, so the graph is
bipartite by sign and the part sizes differ by exactly the imbalance.
"""

from dataclasses import dataclass, field

from .errors import ResourceLimit
from .linext import enumerate_extensions, sign
from .poset import Poset

__all__ = [
    "TranspositionGraph",
    "build_graph",
    "is_connected",
    "hamiltonian_path",
    "ruskey_report",
    "GRAPH_CAP",
    "HAMPATH_CAP",
]

GRAPH_CAP = 10**4
HAMPATH_CAP = 10**3


@dataclass(frozen=True)
class TranspositionGraph:
    vertices: tuple[tuple[int, ...], ...]  # label arrays, lexicographic
    edges: tuple[tuple[int, int], ...]
    signs: tuple[int, ...]
    adjacent_only: bool
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, default=())


def build_graph(
    p: Poset, adjacent_only: bool = False, cap: int = GRAPH_CAP
) -> TranspositionGraph:
    """Graph on all extensions; edge iff the label arrays differ in
    exactly two positions (their labels swapped)."""
    verts = list(enumerate_extensions(p, cap=cap))
    if len(verts) > cap:
        raise ResourceLimit(f"vertex count exceeded cap {cap}")
    signs = tuple(sign(p, v) for v in verts)
    n = p.n
    edges = []
    adjacency: list[list[int]] = [[] for _ in verts]
    for i in range(len(verts)):
        vi = verts[i]
        for j in range(i + 1, len(verts)):
            vj = verts[j]
            diff = [k for k in range(n) if vi[k] != vj[k]]
            if len(diff) != 2:
                continue
            if adjacent_only and abs(vi[diff[0]] - vi[diff[1]]) != 1:
                continue
            edges.append((i, j))
            adjacency[i].append(j)
            adjacency[j].append(i)
    return TranspositionGraph(
        tuple(verts),
        tuple(edges),
        signs,
        adjacent_only,
        tuple(tuple(a) for a in adjacency),
    )


def is_connected(g: TranspositionGraph) -> bool:
    if not g.vertices:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def part_sizes(g: TranspositionGraph) -> tuple[int, int]:
    plus = sum(1 for s in g.signs if s > 0)
    return plus, len(g.signs) - plus


def hamiltonian_path(
    g: TranspositionGraph, cap: int = HAMPATH_CAP
) -> list[int] | None:
    """A Hamiltonian path as vertex indices, or None after an exhaustive
    search. A bipartite part-size gap of 2 or more rules a path out
    immediately; the backtracking prefers low-degree continuations."""
    nv = len(g.vertices)
    if nv > cap:
        raise ResourceLimit(f"vertex count exceeded cap {cap}")
    if nv == 0:
        return []
    if nv == 1:
        return [0]
    plus, minus = part_sizes(g)
    if abs(plus - minus) > 1:
        return None
    if not is_connected(g):
        return None
    adjacency = g.adjacency
    degree = [len(a) for a in adjacency]
    visited = [False] * nv
    path: list[int] = []

    def rec(v: int) -> bool:
        path.append(v)
        visited[v] = True
        if len(path) == nv:
            return True
        unvisited = [w for w in adjacency[v] if not visited[w]]
        for w in unvisited:
            degree[w] -= 1
        # a neighbor left with no other unvisited neighbor must come next
        forced = [w for w in unvisited if degree[w] == 0]
        if len(forced) > 1:
            choices: list[int] = []
        elif forced:
            choices = forced
        else:
            choices = sorted(unvisited, key=degree.__getitem__)
        for w in choices:
            if rec(w):
                return True
        for w in unvisited:
            degree[w] += 1
        visited[v] = False
        path.pop()
        return False

    import sys

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 3 * nv + 100))
    try:
        starts = sorted(range(nv), key=degree.__getitem__)
        for s in starts:
            if rec(s):
                return path
    finally:
        sys.setrecursionlimit(old_limit)
    return None


def ruskey_report(
    p: Poset,
    adjacent_only: bool = False,
    search_path: bool = True,
    graph_cap: int = GRAPH_CAP,
    path_cap: int = HAMPATH_CAP,
) -> dict:
    """Sign imbalance, path existence, and conjecture consistency.

    Consistency means: not (si <= 1 and no path found), search being
    exhaustive. An inconsistency would contradict an open conjecture and
    almost certainly indicates a bug, so callers should treat it loudly.
    """
    g = build_graph(p, adjacent_only, graph_cap)
    plus, minus = part_sizes(g)
    si = abs(plus - minus)
    report = {
        "n": p.n,
        "extensions": len(g.vertices),
        "si": si,
        "mode": "adjacent" if adjacent_only else "any-transposition",
        "connected": is_connected(g),
        "bipartite_by_sign": all(g.signs[a] != g.signs[b] for a, b in g.edges),
    }
    if search_path:
        path = hamiltonian_path(g, path_cap)
        report["path_found"] = path is not None
        report["consistent_with_conjecture"] = not (si <= 1 and path is None)
        if path is not None:
            report["path"] = path
    return report
