"""Recognize distance-hereditary graphs and build a decomposition tree.

The construction prunes one vertex at a time — a pendant vertex, a true
twin, or a false twin — until one vertex remains, then replays the sequence
in reverse as leaf replacements. A graph with no prunable vertex at some
stage is not distance-hereditary.

The result always satisfies a hard postcondition: expanding the returned
tree reproduces the input edge set exactly. Should the greedy pruning order
ever produce a tree failing that check, a bounded backtracking search over
alternative orders takes over; the postcondition is asserted regardless.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import dectree
from .dectree import DecompTree
from .graph import Graph, build_graph, induced_subgraph


class ReductionKind(Enum):
    PENDANT = "pendant"
    TRUE_TWIN = "true_twin"
    FALSE_TWIN = "false_twin"


@dataclass(frozen=True)
class Reduction:
    kind: ReductionKind
    removed: int
    anchor: int


class NotDistanceHereditary(ValueError):
    """Carries the vertex set of the remnant that admits no pruning step."""

    def __init__(self, remnant):
        self.remnant = tuple(sorted(remnant))
        super().__init__(
            f"graph is not distance-hereditary; stuck remnant {self.remnant}")


class DecomposeError(RuntimeError):
    """Backtracking budget exhausted without a tree passing the round-trip check."""


def _reductions_at(adj: dict[int, set], u: int):
    """All valid reductions removing u, in kind-then-anchor order."""
    nu = adj[u]
    out: list[Reduction] = []
    if len(nu) == 1:
        out.append(Reduction(ReductionKind.PENDANT, u, next(iter(nu))))
    closed_u = nu | {u}
    for v in sorted(adj):
        if v == u:
            continue
        if v in nu:
            if (adj[v] | {v}) == closed_u:
                out.append(Reduction(ReductionKind.TRUE_TWIN, u, v))
        elif adj[v] == nu:
            out.append(Reduction(ReductionKind.FALSE_TWIN, u, v))
    out.sort(key=lambda r: (_KIND_ORDER[r.kind], r.anchor))
    return out


_KIND_ORDER = {ReductionKind.PENDANT: 0,
               ReductionKind.TRUE_TWIN: 1,
               ReductionKind.FALSE_TWIN: 2}


def find_reduction(g: Graph) -> Optional[Reduction]:
    """Deterministic choice: smallest removed id, then pendant < true twin
    < false twin, then smallest anchor."""
    adj = {v: set(g.adjacency[v]) for v in range(g.n)}
    for u in sorted(adj):
        cands = _reductions_at(adj, u)
        if cands:
            return cands[0]
    return None


def _apply(adj: dict[int, set], r: Reduction) -> None:
    for w in adj[r.removed]:
        adj[w].discard(r.removed)
    del adj[r.removed]


def _build_tree(last: int, reductions: list[Reduction], n: int) -> DecompTree:
    """Replay removals in reverse, replacing the anchor's current leaf."""
    slot: list = ["leaf", last]
    slots: dict[int, list] = {last: slot}
    for r in reversed(reductions):
        anchor_slot = slots[r.anchor]
        new_anchor = ["leaf", r.anchor]
        new_leaf = ["leaf", r.removed]
        if r.kind == ReductionKind.PENDANT:
            label = dectree.ATTACH
        elif r.kind == ReductionKind.TRUE_TWIN:
            label = dectree.TRUE_TWIN
        else:
            label = dectree.FALSE_TWIN
        anchor_slot[:] = [label, new_anchor, new_leaf]
        slots[r.anchor] = new_anchor
        slots[r.removed] = new_leaf

    nodes: list[tuple] = []
    stack = [(slot, False)]
    done: dict[int, int] = {}
    while stack:
        cur, expanded = stack.pop()
        if cur[0] == "leaf":
            nodes.append(dectree.leaf(cur[1]))
            done[id(cur)] = len(nodes) - 1
        elif expanded:
            nodes.append(dectree.internal(cur[0], done[id(cur[1])], done[id(cur[2])]))
            done[id(cur)] = len(nodes) - 1
        else:
            stack.append((cur, True))
            stack.append((cur[2], False))
            stack.append((cur[1], False))
    return DecompTree(tuple(nodes), len(nodes) - 1)


def _edge_set(adj: dict[int, set]) -> frozenset:
    return frozenset((u, v) for u in adj for v in adj[u] if u < v)


def _decompose_adj(adj: dict[int, set], budget: list[int]) -> DecompTree:
    """Connected component given as adjacency over original vertex ids."""
    target_edges = _edge_set(adj)
    n = len(adj)
    if n == 1:
        (v,) = adj
        return DecompTree((dectree.leaf(v),), 0)

    def greedy_sequence() -> list[Reduction]:
        work = {v: set(ns) for v, ns in adj.items()}
        seq: list[Reduction] = []
        while len(work) > 1:
            red = None
            for u in sorted(work):
                cands = _reductions_at(work, u)
                if cands:
                    red = cands[0]
                    break
            if red is None:
                raise NotDistanceHereditary(work.keys())
            _apply(work, red)
            seq.append(red)
        return seq

    def check(seq: list[Reduction]) -> Optional[DecompTree]:
        last = ({v for v in adj} - {r.removed for r in seq}).pop()
        t = _build_tree(last, seq, n)
        g, _ = dectree.expand(_relabel(t))
        mapped = _leaf_map(t)
        got = frozenset(tuple(sorted((mapped[u], mapped[v]))) for u, v in g.edges())
        return t if got == target_edges else None

    seq = greedy_sequence()
    t = check(seq)
    if t is not None:
        return t

    # greedy order failed the round-trip check: bounded backtracking
    def search(work: dict[int, set], seq: list[Reduction]) -> Optional[DecompTree]:
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        if len(work) == 1:
            return check(seq)
        cands = []
        for u in sorted(work):
            cands.extend(_reductions_at(work, u))
        for red in cands:
            saved = {w: set(work[w]) for w in work}
            _apply(work, red)
            seq.append(red)
            found = search(work, seq)
            if found is not None:
                return found
            seq.pop()
            work.clear()
            work.update(saved)
        return None

    t = search({v: set(ns) for v, ns in adj.items()}, [])
    if t is None:
        raise DecomposeError(
            "no pruning order produced a round-trip-exact tree within budget")
    return t


def _relabel(t: DecompTree) -> DecompTree:
    """Renumber leaf vertices to 0..n-1 (ascending by original id)."""
    originals = sorted(t.leaf_vertex(i) for i in range(len(t.nodes))
                       if t.is_leaf(i))
    remap = {v: i for i, v in enumerate(originals)}
    nodes = tuple(dectree.leaf(remap[nd[1]]) if nd[0] == dectree.LEAF else nd
                  for nd in t.nodes)
    return DecompTree(nodes, t.root)


def _leaf_map(t: DecompTree) -> dict[int, int]:
    """dense id -> original id, matching _relabel's renumbering."""
    originals = sorted(t.leaf_vertex(i) for i in range(len(t.nodes))
                       if t.is_leaf(i))
    return dict(enumerate(originals))


def _components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def decompose(g: Graph, backtrack_budget: int = 200_000) -> DecompTree:
    """Tree whose expansion is edge-identical to g, or NotDistanceHereditary.

    Disconnected inputs get one subtree per component, joined left-to-right
    with false-twin nodes (no edges added).
    """
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    budget = [backtrack_budget]
    subtrees = []
    for comp in _components(g):
        adj = {v: {w for w in g.adjacency[v]} for v in comp}
        subtrees.append(_decompose_adj(adj, budget))

    # splice component trees into one node array, then join with ⊙
    nodes: list[tuple] = []
    roots: list[int] = []
    for t in subtrees:
        off = len(nodes)
        for nd in t.nodes:
            if nd[0] == dectree.LEAF:
                nodes.append(nd)
            else:
                nodes.append((nd[0], nd[1] + off, nd[2] + off))
        roots.append(t.root + off)
    root = roots[0]
    for r in roots[1:]:
        nodes.append(dectree.internal(dectree.FALSE_TWIN, root, r))
        root = len(nodes) - 1
    result = DecompTree(tuple(nodes), root)

    expanded, _ = dectree.expand(result)
    if set(expanded.edges()) != set(g.edges()) or expanded.n != g.n:
        raise DecomposeError("round-trip postcondition failed")  # pragma: no cover
    return result


def is_distance_hereditary(g: Graph) -> bool:
    if g.n == 0:
        return True
    try:
        decompose(g)
        return True
    except NotDistanceHereditary:
        return False
