"""Sububergraphs, co-membership paths, connectivity and Berge cycles.

The path domain is the set of "vertices" in the broad sense: fundamental
vertices plus every edge that is itself a member of some edge. Edges that
belong to nothing can connect a path but never sit on it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Ubergraph, build
from .errors import NotAVertex, NotMembershipClosed, UnknownEdge, UnknownVertex


@dataclass(frozen=True)
class Path:
    """Alternating ``x1, e1, x2, ..., es, x(s+1)``; ``len(edges)`` is the length."""

    nodes: tuple[str, ...]
    edges: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def sequence(self) -> list[str]:
        out = [self.nodes[0]]
        for e, x in zip(self.edges, self.nodes[1:]):
            out += [e, x]
        return out

    def is_cycle(self) -> bool:
        return self.length >= 1 and self.nodes[0] == self.nodes[-1]


def is_valid_path(u: Ubergraph, p: Path) -> bool:
    """Check the three defining conditions of a path against ``u``."""
    if len(p.nodes) != len(p.edges) + 1:
        return False
    if any(not u.is_edge(e) for e in p.edges) or len(set(p.edges)) != len(p.edges):
        return False
    inner = list(p.nodes[:-1]) if p.is_cycle() else list(p.nodes)
    if len(set(inner)) != len(inner):
        return False
    if any(x not in u.nodes() or not u.is_vertex_node(x) for x in p.nodes):
        return False
    return all(a in u.edges[e] and b in u.edges[e]
               for a, e, b in zip(p.nodes, p.edges, p.nodes[1:]))


def v0(u: Ubergraph, e: str) -> frozenset[str]:
    """Fundamental vertices reached by flattening the members of ``e``."""
    seen = {e}
    stack = [e]
    found = set()
    while stack:
        for x in u.members(stack.pop()):
            if not u.is_edge(x):
                found.add(x)
            elif x not in seen:
                seen.add(x)
                stack.append(x)
    return frozenset(found)


def closure(u: Ubergraph, edges: Iterable[str]) -> list[str]:
    """Smallest membership-closed edge set containing ``edges``, canonical order."""
    out = set()
    stack = list(edges)
    while stack:
        e = stack.pop()
        if not u.is_edge(e):
            raise UnknownEdge(f"{e!r} is not a declared edge", label=e)
        if e not in out:
            out.add(e)
            stack.extend(x for x in u.edges[e] if u.is_edge(x))
    return u.sorted_nodes(out)


def sububergraph(u: Ubergraph, edges: Iterable[str]) -> Ubergraph:
    keep = set(edges)
    for e in keep:
        if not u.is_edge(e):
            raise UnknownEdge(f"{e!r} is not a declared edge", label=e)
    missing = u.sorted_nodes({x for e in keep for x in u.edges[e]
                              if u.is_edge(x) and x not in keep})
    if missing:
        raise NotMembershipClosed("edge set is not membership-closed; missing "
                                  + ", ".join(missing), missing)
    return build(u.vertices, [(e, ms) for e, ms in u.edges.items() if e in keep], u.mode)


def induced_sububergraph(u: Ubergraph, vertices: Iterable[str]) -> Ubergraph:
    """``U[V']``: the vertices ``V'`` and every edge whose flattening lies in ``V'``."""
    keep = set(vertices)
    for v in keep:
        if not u.is_fundamental(v):
            raise UnknownVertex(f"{v!r} is not a fundamental vertex", label=v)
    return build([v for v in u.vertices if v in keep],
                 [(e, ms) for e, ms in u.edges.items() if v0(u, e) <= keep], u.mode)


def degree(u: Ubergraph, x: str) -> int:
    return len(u.containing(x))


def adjacent(u: Ubergraph, x: str, y: str) -> bool:
    return bool(set(u.containing(x)) & set(u.containing(y)))


def incident(u: Ubergraph, e: str, f: str) -> bool:
    for g in (e, f):
        if not u.is_edge(g):
            raise UnknownEdge(f"{g!r} is not a declared edge", label=g)
    return not u.edges[e].isdisjoint(u.edges[f])


def _require_path_node(u: Ubergraph, x: str) -> None:
    if not u.is_vertex_node(x):  # raises UnknownId for undeclared labels
        raise NotAVertex(f"edge {x!r} belongs to no edge, so it cannot be a path endpoint",
                         label=x)


def path_domain(u: Ubergraph) -> list[str]:
    return [x for x in u.nodes() if u.is_vertex_node(x)]


def find_path(u: Ubergraph, x: str, y: str) -> Path | None:
    """Shortest path by breadth-first search; ties go to the earliest edge and node."""
    _require_path_node(u, x)
    _require_path_node(u, y)
    parent: dict[str, tuple[str, str] | None] = {x: None}
    queue = deque([x])
    while queue and y not in parent:
        a = queue.popleft()
        for e in u.containing(a):
            for b in u.sorted_nodes(u.edges[e]):
                if b not in parent:
                    parent[b] = (a, e)
                    queue.append(b)
    if y not in parent:
        return None
    nodes, edges = [y], []
    while parent[nodes[-1]] is not None:
        a, e = parent[nodes[-1]]
        nodes.append(a)
        edges.append(e)
    return Path(tuple(reversed(nodes)), tuple(reversed(edges)))


def components(u: Ubergraph) -> list[list[str]]:
    """Blocks of the path domain under co-membership, each in canonical order."""
    root = {x: x for x in path_domain(u)}

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for ms in u.edges.values():
        first, *rest = ms
        for x in rest:
            a, b = find(first), find(x)
            if a != b:
                root[max(a, b, key=u.index)] = min(a, b, key=u.index)
    blocks: dict[str, list[str]] = {}
    for x in root:
        blocks.setdefault(find(x), []).append(x)
    return list(blocks.values())


def is_connected(u: Ubergraph) -> bool:
    return len(components(u)) <= 1


def has_berge_cycle(u: Ubergraph) -> bool:
    """True iff some cycle of length at least 2 exists.

    Such a cycle of length s is exactly a cycle of length 2s in the bipartite
    membership graph (path nodes on one side, edges on the other), so this is
    a forest test with union-find.
    """
    root: dict = {}

    def find(x):
        root.setdefault(x, x)
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for e, ms in u.edges.items():
        for x in ms:
            a, b = find(("node", x)), find(("edge", e))
            if a == b:
                return True
            root[a] = b
    return False

