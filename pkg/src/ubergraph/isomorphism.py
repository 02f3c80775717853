"""Ubergraph isomorphism, searched directly and through uber-Levi digraphs.

Both searches are plain backtracking with invariant pruning. The Levi route is
the general one: the fundamental vertices are exactly the in-degree-0 nodes,
so a digraph isomorphism restricts to a vertex bijection.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable

from .core import Mode, Ubergraph
from .errors import TooLarge, UndefinedInCyclicMode
from .levi import Digraph, topological_order, uber_levi
from .traversal import v0

DIRECT_MAX_VERTICES = 10


@dataclass(frozen=True)
class IsoWitness:
    """``vertex_map`` is the bijection on V; ``edge_map`` is the edge map it induces."""

    vertex_map: dict[str, str]
    edge_map: dict[str, str]
    levi_map: dict[str, str] | None = field(default=None)

    def lines(self) -> list[str]:
        return [f"{x} -> {y}" for x, y in {**self.vertex_map, **self.edge_map}.items()]


def nested_forms(u: Ubergraph, vertex_map: dict[str, str] | None = None) -> dict[str, object]:
    """Each edge as a nested frozenset over (images of) fundamental vertices.

    Well-founded only. With no duplicate member sets this is injective, so
    comparing these values compares edges as the sets they denote.
    """
    if u.mode is not Mode.WELL_FOUNDED:
        raise UndefinedInCyclicMode("edges of a cyclic ubergraph are not well-founded sets")
    forms: dict[str, object] = {}
    for e in sorted(u.edges, key=u.level):
        forms[e] = frozenset(
            forms[x] if u.is_edge(x) else ("v", vertex_map[x] if vertex_map else x)
            for x in u.edges[e])
    return forms


def verify_witness(u: Ubergraph, w: Ubergraph, phi: dict[str, str]) -> bool:
    """Check that ``phi`` is a bijection V -> V' with e in E iff phi(e) in E'."""
    if set(phi) != set(u.vertices) or sorted(phi.values()) != sorted(w.vertices):
        return False
    if u.mode is Mode.WELL_FOUNDED and w.mode is Mode.WELL_FOUNDED:
        image = set(nested_forms(u, phi).values())
        return image == set(nested_forms(w).values())
    return False


def _check_levi_map(u: Ubergraph, w: Ubergraph, psi: dict[str, str]) -> bool:
    if sorted(psi) != sorted(u.nodes()) or sorted(psi.values()) != sorted(w.nodes()):
        return False
    if any(w.is_edge(psi[v]) for v in u.vertices):
        return False
    arcs = {(psi[x], psi[e]) for e, ms in u.edges.items() for x in ms}
    return arcs == {(x, e) for e, ms in w.edges.items() for x in ms}


# --- direct search ---------------------------------------------------------

def _vertex_signature(u: Ubergraph, v: str):
    return tuple(sorted(u.level(e) for e in u.containing(v)))


def is_isomorphic_direct(u: Ubergraph, w: Ubergraph, *,
                         max_vertices: int = DIRECT_MAX_VERTICES) -> IsoWitness | None:
    """Search vertex bijections directly against the set-theoretic definition."""
    for g in (u, w):
        if g.mode is not Mode.WELL_FOUNDED:
            raise UndefinedInCyclicMode("direct isomorphism needs well-founded ubergraphs")
    if u.n > max_vertices or w.n > max_vertices:
        raise TooLarge(f"{max(u.n, w.n)} vertices exceeds the direct-search bound "
                       f"{max_vertices}; use is_isomorphic")
    if (u.n, u.m) != (w.n, w.m):
        return None
    if Counter(map(u.level, u.edges)) != Counter(map(w.level, w.edges)):
        return None
    sig_u = {v: _vertex_signature(u, v) for v in u.vertices}
    sig_w = {v: _vertex_signature(w, v) for v in w.vertices}
    if Counter(sig_u.values()) != Counter(sig_w.values()):
        return None

    target = set(nested_forms(w).values())
    order = sorted(u.vertices, key=lambda v: (-len(u.containing(v)), u.index(v)))
    rank = {v: i for i, v in enumerate(order)}
    # Edge e can be tested once the last vertex of its flattening is assigned.
    ready: dict[str, list[str]] = {v: [] for v in order}
    for e in u.edges:
        support = v0(u, e)
        ready[max(support, key=rank.__getitem__)].append(e)
    phi: dict[str, str] = {}
    used: set[str] = set()

    def edge_ok(e: str, forms: dict[str, object]) -> bool:
        return _image(u, e, phi, forms) in target

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in w.vertices:
            if c in used or sig_w[c] != sig_u[v]:
                continue
            phi[v] = c
            used.add(c)
            forms: dict[str, object] = {}
            if all(edge_ok(e, forms) for e in ready[v]) and extend(i + 1):
                return True
            del phi[v]
            used.discard(c)
        return False

    if not extend(0):
        return None
    return _witness(u, w, dict(phi))


def _image(u: Ubergraph, e: str, phi: dict[str, str], memo: dict[str, object]):
    if e not in memo:
        memo[e] = frozenset(_image(u, x, phi, memo) if u.is_edge(x) else ("v", phi[x])
                            for x in u.edges[e])
    return memo[e]


def _witness(u: Ubergraph, w: Ubergraph, phi: dict[str, str],
             psi: dict[str, str] | None = None) -> IsoWitness:
    if psi is None:
        back = {form: e for e, form in nested_forms(w).items()}
        image = nested_forms(u, phi)
        edge_map = {e: back[image[e]] for e in u.edges}
    else:
        edge_map = {e: psi[e] for e in u.edges}
    return IsoWitness({v: phi[v] for v in u.vertices}, edge_map, psi)


# --- Levi route ------------------------------------------------------------

def _heights(d: Digraph) -> dict | None:
    order = topological_order(d)
    if order is None:
        return None
    h: dict = {}
    for x in order:
        h[x] = max((h[p] + 1 for p in d.predecessors(x)), default=0)
    return h


def _node_signatures(d: Digraph) -> dict:
    h = _heights(d)
    return {x: (d.in_degree(x) == 0, d.in_degree(x), d.out_degree(x),
                None if h is None else h[x]) for x in d.nodes}


def is_levi_isomorphic(d: Digraph, g: Digraph) -> dict[Hashable, Hashable] | None:
    """Digraph isomorphism ``d -> g`` as a node map, or ``None``."""
    if len(d.nodes) != len(g.nodes) or len(d.arcs) != len(g.arcs):
        return None
    sig_d, sig_g = _node_signatures(d), _node_signatures(g)
    if Counter(sig_d.values()) != Counter(sig_g.values()):
        return None
    by_sig: dict = {}
    for y in g.nodes:
        by_sig.setdefault(sig_g[y], []).append(y)

    order = _search_order(d, sig_d, by_sig)
    psi: dict = {}
    inverse: dict = {}
    arcs_g = g.arcs

    def consistent(x, y) -> bool:
        if ((x, x) in d.arcs) != ((y, y) in arcs_g):
            return False
        for p in d.predecessors(x):
            if p in psi and (psi[p], y) not in arcs_g:
                return False
        for s in d.successors(x):
            if s in psi and (y, psi[s]) not in arcs_g:
                return False
        # Same check from the g side, so the map preserves non-arcs too.
        for p in g.predecessors(y):
            if p in inverse and (inverse[p], x) not in d.arcs:
                return False
        for s in g.successors(y):
            if s in inverse and (x, inverse[s]) not in d.arcs:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in by_sig[sig_d[x]]:
            if y in inverse or not consistent(x, y):
                continue
            psi[x] = y
            inverse[y] = x
            if extend(i + 1):
                return True
            del psi[x], inverse[y]
        return False

    return dict(psi) if extend(0) else None


def _search_order(d: Digraph, sig: dict, by_sig: dict) -> list:
    # Rarest signature first, then grow along arcs so each pick is constrained.
    remaining = set(d.nodes)
    position = {x: i for i, x in enumerate(d.nodes)}
    order: list = []
    placed: set = set()
    while remaining:
        frontier = [x for x in remaining
                    if any(n in placed for n in d.predecessors(x) + d.successors(x))]
        pool = frontier or list(remaining)
        x = min(pool, key=lambda z: (len(by_sig[sig[z]]), position[z]))
        order.append(x)
        placed.add(x)
        remaining.discard(x)
    return order


def is_isomorphic(u: Ubergraph, w: Ubergraph) -> IsoWitness | None:
    """Isomorphism through the uber-Levi digraphs, restricted back to V.

    Well-founded witnesses are checked against the set-theoretic definition;
    for cyclic ubergraphs, where that definition does not apply, the witness
    is the Levi isomorphism itself and is checked arc by arc.
    """
    psi = is_levi_isomorphic(uber_levi(u), uber_levi(w))
    if psi is None:
        return None
    if not _check_levi_map(u, w, psi):
        raise AssertionError("Levi search returned a map that does not preserve membership")
    phi = {v: psi[v] for v in u.vertices}
    both_wf = u.mode is Mode.WELL_FOUNDED and w.mode is Mode.WELL_FOUNDED
    if both_wf and not verify_witness(u, w, phi):
        raise AssertionError("restricted Levi map fails the isomorphism definition")
    return _witness(u, w, phi, psi)
