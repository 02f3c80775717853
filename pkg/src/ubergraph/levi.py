"""Uber-Levi digraphs: one node per vertex and per edge, an arc x -> y for x in y."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .core import Mode, Ubergraph, build
from .errors import NotADag


@dataclass(frozen=True)
class Digraph:
    """A plain finite digraph with ordered nodes."""

    nodes: tuple[Hashable, ...]
    arcs: frozenset[tuple[Hashable, Hashable]]
    _succ: dict = field(init=False, repr=False, compare=False)
    _pred: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        succ = {x: [] for x in self.nodes}
        pred = {x: [] for x in self.nodes}
        order = {x: i for i, x in enumerate(self.nodes)}
        for x, y in sorted(self.arcs, key=lambda a: (order[a[0]], order[a[1]])):
            succ[x].append(y)
            pred[y].append(x)
        object.__setattr__(self, "_succ", {x: tuple(v) for x, v in succ.items()})
        object.__setattr__(self, "_pred", {x: tuple(v) for x, v in pred.items()})

    @classmethod
    def from_arcs(cls, nodes: Iterable[Hashable], arcs: Iterable[tuple[Hashable, Hashable]]):
        return cls(tuple(nodes), frozenset(arcs))

    def successors(self, x) -> tuple:
        return self._succ[x]

    def predecessors(self, x) -> tuple:
        return self._pred[x]

    def in_degree(self, x) -> int:
        return len(self._pred[x])

    def out_degree(self, x) -> int:
        return len(self._succ[x])

    def roots(self) -> list:
        return [x for x in self.nodes if not self._pred[x]]


@dataclass(frozen=True)
class LeviDigraph(Digraph):
    """Digraph built from an ubergraph; ``vertices`` are its fundamental vertices."""

    vertices: frozenset[str] = frozenset()


@dataclass(frozen=True)
class EdgeOrder:
    """Strict inclusion between edge member sets, with its Hasse reduction."""

    edges: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]
    hasse: frozenset[tuple[str, str]]

    def chains(self) -> list[list[str]]:
        """Maximal chains of the Hasse diagram, in canonical order."""
        up: dict[str, list[str]] = {e: [] for e in self.edges}
        has_lower = set()
        for a, b in sorted(self.hasse, key=lambda p: (self.edges.index(p[0]), self.edges.index(p[1]))):
            up[a].append(b)
            has_lower.add(b)
        out = []

        def walk(chain):
            nxt = up[chain[-1]]
            if not nxt:
                out.append(chain)
            for b in nxt:
                walk(chain + [b])

        for e in self.edges:
            if e not in has_lower and up[e]:
                walk([e])
        return out

    def incomparable(self) -> list[str]:
        related = {x for p in self.pairs for x in p}
        return [e for e in self.edges if e not in related]

    def describe(self) -> str:
        parts = [" < ".join(c) for c in self.chains()]
        lone = self.incomparable()
        if lone:
            parts.append(", ".join(lone) + " incomparable")
        return "; ".join(parts)


def uber_levi(u: Ubergraph) -> LeviDigraph:
    arcs = frozenset((x, e) for e, ms in u.edges.items() for x in ms)
    return LeviDigraph(tuple(u.nodes()), arcs, vertices=frozenset(u.vertices))


def topological_order(d: Digraph) -> list | None:
    """Kahn's algorithm, ties by node order; ``None`` if ``d`` has a cycle."""
    indeg = {x: d.in_degree(x) for x in d.nodes}
    ready = [x for x in d.nodes if indeg[x] == 0]
    order = []
    while ready:
        x = ready.pop(0)
        order.append(x)
        for y in d.successors(x):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return order if len(order) == len(d.nodes) else None


def is_dag(d: Digraph) -> bool:
    return topological_order(d) is not None


def _strict_pairs(edges, sets) -> frozenset[tuple[str, str]]:
    return frozenset((a, b) for a in edges for b in edges if sets[a] < sets[b])


def _hasse(pairs: frozenset[tuple[str, str]]) -> frozenset[tuple[str, str]]:
    middle = {(a, c) for a, b in pairs for b2, c in pairs if b == b2}
    return pairs - middle


def levi_inclusion_pairs(d: LeviDigraph) -> frozenset[tuple[str, str]]:
    """Strict inclusion of in-neighbourhoods among the edge nodes of ``d``."""
    edges = [x for x in d.nodes if x not in d.vertices]
    return _strict_pairs(edges, {e: frozenset(d.predecessors(e)) for e in edges})


def edge_inclusion_order(u: Ubergraph) -> EdgeOrder:
    edges = tuple(u.edges)
    pairs = _strict_pairs(edges, u.edges)
    if pairs != levi_inclusion_pairs(uber_levi(u)):
        raise AssertionError("member-set inclusion disagrees with Levi in-neighbourhood inclusion")
    return EdgeOrder(edges, pairs, _hasse(pairs))


def dag_to_ubergraph(d: Digraph) -> Ubergraph:
    """Read an acyclic digraph as an ubergraph.

    Roots become fundamental vertices and every other node becomes the edge of
    its in-neighbourhood. Nodes whose in-neighbourhoods coincide (after earlier
    merges) collapse onto the first of them in topological order. Node names
    are used as labels, so ``str(node)`` must be a valid identifier.
    """
    order = topological_order(d)
    if order is None:
        raise NotADag("digraph has a directed cycle")
    rep: dict = {}
    by_members: dict[frozenset, object] = {}
    members: dict = {}
    for x in order:
        if d.in_degree(x) == 0:
            rep[x] = x
            continue
        key = frozenset(rep[p] for p in d.predecessors(x))
        rep[x] = by_members.setdefault(key, x)
        if rep[x] == x:
            members[x] = key
    position = {x: i for i, x in enumerate(d.nodes)}
    vertices = [str(x) for x in d.nodes if d.in_degree(x) == 0]
    edges = [(str(x), [str(p) for p in sorted(members[x], key=position.__getitem__)])
             for x in sorted(members, key=position.__getitem__)]
    return build(vertices, edges, Mode.WELL_FOUNDED)


def _quote(x) -> str:
    return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: LeviDigraph) -> str:
    """Graphviz source: circles for fundamental vertices, boxes for edges."""
    position = {x: i for i, x in enumerate(d.nodes)}
    lines = ["digraph {"]
    for x in d.nodes:
        shape = "circle" if x in d.vertices else "box"
        lines.append(f"  {_quote(x)} [shape={shape}];")
    for x, y in sorted(d.arcs, key=lambda a: (position[a[0]], position[a[1]])):
        lines.append(f"  {_quote(x)} -> {_quote(y)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
