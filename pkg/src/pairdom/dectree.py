"""Decomposition trees: structure, expansion into a graph, and generation.

A tree node is either ("leaf", vertex) or (label, left, right) with label one
of "T" (true twin), "F" (false twin), "A" (attachment, left child keeps the
twin set). Nodes live in a flat tuple indexed by node id; all traversals are
iterative so million-leaf trees cannot exhaust the call stack.
"""

from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, build_graph

LEAF = "leaf"
TRUE_TWIN = "T"
FALSE_TWIN = "F"
ATTACH = "A"
LABELS = (TRUE_TWIN, FALSE_TWIN, ATTACH)


class TreeError(ValueError):
    """Raised when a structurally invalid tree is used where a valid one is required."""


@dataclass(frozen=True)
class DecompTree:
    nodes: tuple[tuple, ...]
    root: int

    def is_leaf(self, node: int) -> bool:
        return self.nodes[node][0] == LEAF

    def label(self, node: int) -> str:
        return self.nodes[node][0]

    def children(self, node: int) -> tuple[int, int]:
        _, left, right = self.nodes[node]
        return left, right

    def leaf_vertex(self, node: int) -> int:
        return self.nodes[node][1]

    @property
    def n_leaves(self) -> int:
        return (len(self.nodes) + 1) // 2


def leaf(vertex: int) -> tuple:
    return (LEAF, vertex)


def internal(label: str, left: int, right: int) -> tuple:
    if label not in LABELS:
        raise TreeError(f"unknown label {label!r}")
    return (label, left, right)


def postorder(t: DecompTree) -> Iterator[int]:
    """Children-before-parent node order, without recursion."""
    stack: list[tuple[int, bool]] = [(t.root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded or t.is_leaf(node):
            yield node
        else:
            left, right = t.children(node)
            stack.append((node, True))
            stack.append((right, False))
            stack.append((left, False))


def validate(t: DecompTree) -> list[str]:
    """Check the structural invariants; empty list means ok."""
    violations: list[str] = []
    n_nodes = len(t.nodes)
    if not (0 <= t.root < n_nodes):
        return [f"root id {t.root} out of range"]
    for i, node in enumerate(t.nodes):
        if node[0] == LEAF:
            continue
        if node[0] not in LABELS:
            violations.append(f"node {i}: unknown label {node[0]!r}")
            continue
        if len(node) != 3:
            violations.append(f"node {i}: internal node without two children")
            continue
        for c in node[1:]:
            if not (0 <= c < n_nodes):
                violations.append(f"node {i}: child id {c} out of range")
    if violations:
        return violations

    # reachability / single parent / acyclicity
    seen = bytearray(n_nodes)
    n_seen = 0
    leaves: list[int] = []
    stack = [t.root]
    nodes = t.nodes
    while stack:
        node = stack.pop()
        if seen[node]:
            violations.append(f"node {node} reachable twice (shared child or cycle)")
            return violations
        seen[node] = 1
        n_seen += 1
        nd = nodes[node]
        if nd[0] == LEAF:
            leaves.append(nd[1])
        else:
            stack.append(nd[1])
            stack.append(nd[2])
    if n_seen != n_nodes:
        violations.append(f"{n_nodes - n_seen} node(s) unreachable from root")

    n = len(leaves)
    leaves.sort()
    if leaves != list(range(n)):
        violations.append(f"leaf vertex ids {leaves} are not 0..{n - 1}")
    return violations


def require_valid(t: DecompTree) -> None:
    violations = validate(t)
    if violations:
        raise TreeError("; ".join(violations))


def expand(t: DecompTree) -> tuple[Graph, tuple[int, ...]]:
    """Materialize the graph described by the tree and its root twin set.

    Leaf: single vertex with twin set {v}. "T": biclique between the child
    twin sets, union of twin sets. "F": plain union, union of twin sets.
    "A": biclique between the child twin sets, left twin set survives.
    """
    require_valid(t)
    edges: list[tuple[int, int]] = []
    twin: dict[int, list[int]] = {}
    for node in postorder(t):
        if t.is_leaf(node):
            twin[node] = [t.leaf_vertex(node)]
            continue
        label = t.label(node)
        left, right = t.children(node)
        ts_l, ts_r = twin.pop(left), twin.pop(right)
        assert ts_l and ts_r, "twin sets are never empty"
        if label in (TRUE_TWIN, ATTACH):
            edges.extend((u, v) for u in ts_l for v in ts_r)
        if label == ATTACH:
            twin[node] = ts_l
        else:
            twin[node] = sorted(ts_l + ts_r)
    root_ts = twin[t.root]
    return build_graph(t.n_leaves, edges), tuple(root_ts)


def twin_set(t: DecompTree, node: int) -> tuple[int, ...]:
    """Twin set of the subtree rooted at `node`, by the expansion recurrence."""
    if not (0 <= node < len(t.nodes)):
        raise TreeError(f"unknown node id {node}")
    sub = DecompTree(t.nodes, node)
    twin: dict[int, list[int]] = {}
    for nd in postorder(sub):
        if t.is_leaf(nd):
            twin[nd] = [t.leaf_vertex(nd)]
            continue
        left, right = t.children(nd)
        ts_l, ts_r = twin.pop(left), twin.pop(right)
        if t.label(nd) == ATTACH:
            twin[nd] = ts_l
        else:
            twin[nd] = sorted(ts_l + ts_r)
    return tuple(twin[node])


def generate(
    n: int,
    seed: int,
    weights: Sequence[float] = (1.0, 1.0, 1.0),
) -> DecompTree:
    """Deterministic random tree with n leaves.

    Labels are drawn per `weights` (T, F, A), except the final merge which is
    forced to T or A so the expansion is connected. Built by repeatedly
    merging two uniformly chosen subtrees from a work list; "A" orientation
    (which child keeps the twin set) is a fair coin.
    """
    if n < 1:
        raise TreeError(f"need at least one leaf, got n={n}")
    if len(weights) != 3 or any(w < 0 for w in weights) or sum(weights) == 0:
        raise TreeError(f"bad label weights {weights!r}")
    rng = random.Random(seed)
    nodes: list[tuple] = [leaf(v) for v in range(n)]
    roots = list(range(n))
    while len(roots) > 1:
        i = rng.randrange(len(roots))
        roots[i], roots[-1] = roots[-1], roots[i]
        a = roots.pop()
        j = rng.randrange(len(roots))
        roots[j], roots[-1] = roots[-1], roots[j]
        b = roots.pop()
        if len(roots) == 0:
            # root merge: keep the expansion connected
            wt, _, wa = weights
            connected = (wt, 0.0, wa)
            if wt + wa == 0:
                connected = (1.0, 0.0, 1.0)
            label = rng.choices(LABELS, weights=connected)[0]
        else:
            label = rng.choices(LABELS, weights=weights)[0]
        if label == ATTACH and rng.random() < 0.5:
            a, b = b, a
        nodes.append(internal(label, a, b))
        roots.append(len(nodes) - 1)
    built = DecompTree(tuple(nodes), roots[0])
    # renumber into post-order so children sit near parents in the node
    # array; same tree, much friendlier to the solver's cache at 10^6 leaves
    remap = {old: new for new, old in enumerate(postorder(built))}
    new_nodes: list[tuple] = [()] * len(nodes)
    for old, new in remap.items():
        nd = nodes[old]
        new_nodes[new] = nd if nd[0] == LEAF else (nd[0], remap[nd[1]], remap[nd[2]])
    return DecompTree(tuple(new_nodes), remap[built.root])


# --- JSON tree file format -------------------------------------------------
#
# leaf     -> {"leaf": <int>}
# internal -> {"op": "T"|"F"|"A", "l": <node>, "r": <node>}


def to_json_obj(t: DecompTree) -> dict:
    objs: dict[int, dict] = {}
    for node in postorder(t):
        if t.is_leaf(node):
            objs[node] = {"leaf": t.leaf_vertex(node)}
        else:
            left, right = t.children(node)
            objs[node] = {"op": t.label(node), "l": objs.pop(left), "r": objs.pop(right)}
    return objs[t.root]


def from_json_obj(obj: dict) -> DecompTree:
    nodes: list[tuple] = []
    # iterative two-phase walk so deep trees do not recurse
    stack: list[tuple[dict, bool]] = [(obj, False)]
    ids: dict[int, int] = {}
    while stack:
        cur, expanded = stack.pop()
        if not isinstance(cur, dict):
            raise TreeError(f"tree node must be an object, got {cur!r}")
        if "leaf" in cur:
            if not isinstance(cur["leaf"], int):
                raise TreeError(f"leaf id must be an integer, got {cur['leaf']!r}")
            nodes.append(leaf(cur["leaf"]))
            ids[id(cur)] = len(nodes) - 1
        elif expanded:
            nodes.append(internal(cur.get("op"), ids[id(cur["l"])], ids[id(cur["r"])]))
            ids[id(cur)] = len(nodes) - 1
        else:
            if "op" not in cur or "l" not in cur or "r" not in cur:
                raise TreeError(f"internal node needs op/l/r keys: {cur!r}")
            stack.append((cur, True))
            stack.append((cur["r"], False))
            stack.append((cur["l"], False))
    t = DecompTree(tuple(nodes), len(nodes) - 1)
    require_valid(t)
    return t


def dumps(t: DecompTree) -> str:
    # string fragments assembled bottom-up: json.dumps would recurse on the
    # nested object and deep caterpillar trees blow the default limit
    frags: dict[int, str] = {}
    for node in postorder(t):
        if t.is_leaf(node):
            frags[node] = '{"leaf": %d}' % t.leaf_vertex(node)
        else:
            left, right = t.children(node)
            frags[node] = '{"op": "%s", "l": %s, "r": %s}' % (
                t.label(node), frags.pop(left), frags.pop(right))
    return frags[t.root] + "\n"


def loads(text: str) -> DecompTree:
    # the stdlib parser recurses once per nesting level; give it room
    limit = sys.getrecursionlimit()
    depth_bound = max(limit, min(len(text) // 4 + 100, 2_000_000))
    sys.setrecursionlimit(depth_bound)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeError(f"invalid tree JSON: {exc}") from exc
    finally:
        sys.setrecursionlimit(limit)
    return from_json_obj(obj)
