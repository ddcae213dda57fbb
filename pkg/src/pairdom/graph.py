"""Undirected simple graphs and the domination / matching predicates.

Vertices are dense 0-based integers. All adjacency lists are kept sorted so
that every operation downstream is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, out-of-range ids)."""


@dataclass(frozen=True)
class Graph:
    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate and reversed duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        seen.add((u, v) if u < v else (v, u))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, len(seen), tuple(tuple(sorted(a)) for a in adj))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `vertices`, relabeled to 0..k-1.

    Returns the subgraph and the old-id -> new-id mapping.
    """
    order = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(order)}
    edges = [
        (relabel[u], relabel[v])
        for u in order
        for v in g.adjacency[u]
        if u < v and v in relabel
    ]
    return build_graph(len(order), edges), relabel


def is_dominating(g: Graph, d: Iterable[int], targets: Iterable[int]) -> bool:
    """True iff every target is in d or has a neighbor in d."""
    dset = set(d)
    for t in targets:
        if t in dset:
            continue
        if not any(w in dset for w in g.adjacency[t]):
            return False
    return True


def has_perfect_matching_induced(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced by `s` has a perfect matching.

    Backtracking search; intended for desk-scale sets (|s| <= ~20).
    """
    remaining = sorted(set(s))
    if len(remaining) % 2 == 1:
        return False
    return _match_backtrack(set(remaining), g)


def _match_backtrack(free: set[int], g: Graph) -> bool:
    if not free:
        return True
    v = min(free)
    free.discard(v)
    for u in g.adjacency[v]:
        if u in free:
            free.discard(u)
            if _match_backtrack(free, g):
                free.add(u)
                free.add(v)
                return True
            free.add(u)
    free.add(v)
    return False


def is_paired_dominating(g: Graph, d: Iterable[int]) -> bool:
    dlist = sorted(set(d))
    return is_dominating(g, dlist, range(g.n)) and has_perfect_matching_induced(g, dlist)


def parse_graph_text(text: str) -> Graph:
    """Parse the "n m" + edge-list text format. '#' lines are comments."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise GraphError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise GraphError(f"bad header line {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(x) for x in ln.split())
        except ValueError as exc:
            raise GraphError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    g = build_graph(n, edges)
    if g.m != m:
        raise GraphError(f"header claims {m} edges but {g.m} are distinct")
    return g


def format_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
