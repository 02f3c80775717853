"""The validated, immutable ubergraph value.

Vertices and edges share one label namespace, so a node is referred to by its
bare label everywhere; ``Ubergraph.kind`` tells the two apart.
"""

from __future__ import annotations

import re
from enum import Enum
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateEdgeSet,
    DuplicateLabel,
    DuplicateMember,
    EmptyEdge,
    FoundationViolation,
    InvalidLabel,
    NotAHypergraph,
    UndefinedInCyclicMode,
    UnknownId,
    UnknownMember,
)

IDENT = re.compile(r"[A-Za-z0-9_]+")


class Mode(str, Enum):
    WELL_FOUNDED = "well-founded"
    CYCLIC = "cyclic"


class NodeKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class Ubergraph:
    """A recursive hypergraph ``(V, E)`` whose edges may contain other edges.

    Instances come from :func:`build` (or the UGT parser) and are never mutated.
    Declaration order, vertices first and then edges, is the canonical index
    order used by every matrix and every deterministic output.
    """

    __slots__ = ("_vertices", "_edges", "_mode", "_index", "_levels", "_containing")

    def __init__(self, vertices: tuple[str, ...], edges: dict[str, frozenset[str]],
                 mode: Mode, levels: dict[str, int] | None):
        self._vertices = vertices
        self._edges = MappingProxyType(edges)
        self._mode = mode
        self._index = {x: i for i, x in enumerate(vertices + tuple(edges))}
        self._levels = levels
        containing: dict[str, list[str]] = {x: [] for x in self._index}
        for e, members in edges.items():
            for x in members:
                containing[x].append(e)
        self._containing = {x: tuple(es) for x, es in containing.items()}

    # --- sizes and identity -------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, frozenset[str]]:
        return self._edges

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ubergraph):
            return NotImplemented
        return (self._mode == other._mode and self._vertices == other._vertices
                and list(self._edges.items()) == list(other._edges.items()))

    def __hash__(self) -> int:
        return hash((self._mode, self._vertices, tuple(self._edges.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}={{{', '.join(self.sorted_nodes(ms))}}}"
                         for e, ms in self._edges.items())
        return f"Ubergraph(V=[{', '.join(self._vertices)}], E=[{body}], mode={self._mode.value})"

    # --- accessors ----------------------------------------------------------

    def nodes(self) -> list[str]:
        """Vertices in declaration order, then edges in declaration order."""
        return list(self._index)

    def index(self, x: str) -> int:
        self._require(x)
        return self._index[x]

    def kind(self, x: str) -> NodeKind:
        self._require(x)
        return NodeKind.EDGE if x in self._edges else NodeKind.VERTEX

    def is_edge(self, x: str) -> bool:
        return x in self._edges

    def is_fundamental(self, x: str) -> bool:
        return x in self._index and x not in self._edges

    def members(self, e: str) -> frozenset[str]:
        if e not in self._edges:
            raise UnknownId(f"{e!r} is not a declared edge", label=e)
        return self._edges[e]

    def containing(self, x: str) -> tuple[str, ...]:
        """Edges having ``x`` as a member, in canonical order."""
        self._require(x)
        return self._containing[x]

    def is_vertex_node(self, x: str) -> bool:
        """True iff ``x`` lies in V or in some member set (the path domain)."""
        self._require(x)
        return x not in self._edges or bool(self._containing[x])

    def sorted_nodes(self, xs: Iterable[str]) -> list[str]:
        return sorted(xs, key=self._index.__getitem__)

    # --- nesting ------------------------------------------------------------

    def level(self, e: str) -> int:
        """0 for an edge of fundamental vertices, else 1 + max level of member edges."""
        if self._levels is None:
            raise UndefinedInCyclicMode("nesting level is undefined in cyclic mode", label=e)
        if e not in self._edges:
            raise UnknownId(f"{e!r} is not a declared edge", label=e)
        return self._levels[e]

    def depth(self) -> int:
        if self._levels is None:
            raise UndefinedInCyclicMode("depth is undefined in cyclic mode")
        return max(self._levels.values(), default=0)

    def _require(self, x: str) -> None:
        if x not in self._index:
            raise UnknownId(f"{x!r} is not a declared vertex or edge", label=x)


def build(vertices: Sequence[str],
          edges: Iterable[tuple[str, Sequence[str]]],
          mode: Mode | str = Mode.WELL_FOUNDED) -> Ubergraph:
    """Validate declarations and return an :class:`Ubergraph`.

    ``edges`` is an ordered sequence of ``(label, member labels)``. Members may
    name edges declared later; well-foundedness is checked on the whole graph.
    """
    mode = Mode(mode)
    vertices = tuple(vertices)
    edge_defs = [(label, list(ms)) for label, ms in edges]

    seen: set[str] = set()
    for label in list(vertices) + [label for label, _ in edge_defs]:
        if not isinstance(label, str) or not IDENT.fullmatch(label):
            raise InvalidLabel(f"invalid label {label!r}", label=str(label))
        if label in seen:
            raise DuplicateLabel(f"label {label!r} declared twice", label=label)
        seen.add(label)

    table: dict[str, frozenset[str]] = {}
    for label, ms in edge_defs:
        if not ms:
            raise EmptyEdge(f"edge {label!r} has no members", label=label)
        inside: set[str] = set()
        for x in ms:
            if x in inside:
                raise DuplicateMember(f"{x!r} listed twice in edge {label!r}", label=label)
            inside.add(x)
            if x not in seen:
                raise UnknownMember(f"edge {label!r} has undeclared member {x!r}", label=label)
        table[label] = frozenset(ms)

    levels = None
    if mode is Mode.WELL_FOUNDED:
        first_with: dict[frozenset[str], str] = {}
        for label, ms in table.items():
            if ms in first_with:
                raise DuplicateEdgeSet(
                    f"edges {first_with[ms]!r} and {label!r} have identical members", label=label)
            first_with[ms] = label
        levels = _nesting_levels(table)
    return Ubergraph(vertices, table, mode, levels)


def _nesting_levels(table: dict[str, frozenset[str]]) -> dict[str, int]:
    """Levels by iterative DFS over member edges; raises on a membership cycle."""
    levels: dict[str, int] = {}
    on_stack: dict[str, int] = {}
    for root in table:
        if root in levels:
            continue
        path = [root]
        on_stack[root] = 0
        stack = [(root, iter(sorted(x for x in table[root] if x in table)))]
        while stack:
            e, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                path.pop()
                del on_stack[e]
                levels[e] = max((levels[x] + 1 for x in table[e] if x in table), default=0)
                continue
            if child in levels:
                continue
            if child in on_stack:
                cycle = path[on_stack[child]:] + [child]
                raise FoundationViolation(
                    "membership cycle " + " -> ".join(reversed(cycle)), cycle, label=child)
            on_stack[child] = len(path)
            path.append(child)
            stack.append((child, iter(sorted(x for x in table[child] if x in table))))
    return levels


def is_simplicial_complex(u: Ubergraph) -> bool:
    """True iff every nonempty subset of every edge is itself an edge.

    Only defined for hypergraphs (depth 0). Checking the faces one element
    smaller suffices, since closure then follows by induction on size.
    """
    if any(u.is_edge(x) for ms in u.edges.values() for x in ms):
        raise NotAHypergraph("edges contain other edges; simplicial closure needs depth 0")
    present = set(u.edges.values())
    for ms in present:
        if len(ms) > 1 and any(ms - {x} not in present for x in ms):
            return False
    return True
