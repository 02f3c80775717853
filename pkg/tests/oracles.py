"""Brute-force reference computations.

Each oracle works from the defining formula and shares no code with the
package beyond reading an Ubergraph's vertices and edge table.
"""

from __future__ import annotations

import itertools

import sympy


def in_tower(u, x, s, k) -> bool:
    """Is node ``x`` an element of P_0 u ... u P_k built over ``s``?"""
    if x not in u.edges:
        return x in s
    # x in P_i (i >= 1) iff every member lies in P_0 u ... u P_(i-1).
    return k >= 1 and all(in_tower(u, y, s, k - 1) for y in u.edges[x])


def edge_in_power_tower(u, e, s, k) -> bool:
    """``e`` in P(S)^k, i.e. every member of ``e`` lies in P_0 u ... u P_k."""
    return all(in_tower(u, x, s, k) for x in u.edges[e])


def tower_depth(u) -> int:
    """Least k with every edge in P(V)^k."""
    vs = set(u.vertices)
    for k in itertools.count():
        if all(edge_in_power_tower(u, e, vs, k) for e in u.edges):
            return k


def v0_by_intersection(u, e) -> frozenset:
    k = u.m  # no edge is nested deeper than the number of edges
    out = set(u.vertices)
    for r in range(len(u.vertices) + 1):
        for s in itertools.combinations(u.vertices, r):
            if edge_in_power_tower(u, e, set(s), k):
                out &= set(s)
    return frozenset(out)


def simplicial_by_subsets(u) -> bool:
    present = set(u.edges.values())
    for ms in present:
        for r in range(1, len(ms)):
            for sub in itertools.combinations(ms, r):
                if frozenset(sub) not in present:
                    return False
    return True


def _path_domain(u):
    members = {x for ms in u.edges.values() for x in ms}
    return [x for x in list(u.vertices) + list(u.edges) if x not in u.edges or x in members]


def all_paths(u, x, max_len=None):
    """Every path from ``x`` as (nodes, edges), by exhaustive extension."""
    max_len = u.m if max_len is None else max_len
    out = []

    def walk(nodes, edges):
        out.append((tuple(nodes), tuple(edges)))
        if len(edges) == max_len or (len(nodes) > 1 and nodes[-1] == nodes[0]):
            return
        for e, ms in u.edges.items():
            if e in edges or nodes[-1] not in ms:
                continue
            for y in ms:
                if y == nodes[-1]:
                    continue
                if y in nodes and not (y == nodes[0] and len(edges) >= 1):
                    continue
                walk(nodes + [y], edges + [e])

    walk([x], [])
    return out


def shortest_path_length(u, x, y):
    lengths = [len(es) for ns, es in all_paths(u, x) if ns[-1] == y and (x != y or not es)]
    return min(lengths, default=None)


def components_by_paths(u):
    domain = _path_domain(u)
    blocks = []
    placed = set()
    for x in domain:
        if x in placed:
            continue
        block = {ns[-1] for ns, _ in all_paths(u, x)}
        blocks.append(sorted(block, key=domain.index))
        placed |= block
    return blocks


def has_berge_cycle_by_enumeration(u) -> bool:
    return any(len(es) >= 2 and ns[0] == ns[-1]
               for x in _path_domain(u) for ns, es in all_paths(u, x))


def _image(u, x, phi):
    if x not in u.edges:
        return ("v", phi[x])
    return frozenset(_image(u, y, phi) for y in u.edges[x])


def iso_by_all_bijections(u, w):
    """First vertex bijection satisfying the isomorphism definition, or None."""
    if len(u.vertices) != len(w.vertices):
        return None
    target = {_image(w, e, {v: v for v in w.vertices}) for e in w.edges}
    for perm in itertools.permutations(w.vertices):
        phi = dict(zip(u.vertices, perm))
        image = {_image(u, e, phi) for e in u.edges}
        if all(_image(u, e, phi) in target for e in u.edges) and \
                all(f in image for f in target):
            return phi
    return None


def canonical_form(u) -> tuple:
    """Relabelling-invariant key: least sorted edge encoding over all vertex orders."""
    def enc(x, phi):
        if x not in u.edges:
            return str(phi[x])
        return "{" + ",".join(sorted(enc(y, phi) for y in u.edges[x])) + "}"

    best = None
    for perm in itertools.permutations(range(len(u.vertices))):
        phi = dict(zip(u.vertices, perm))
        key = tuple(sorted(enc(e, phi) for e in u.edges))
        if best is None or key < best:
            best = key
    return (len(u.vertices), best)


def charpoly_eigenvalues(rows) -> list[float]:
    """Eigenvalues as the exact real roots of det(tI - S), descending."""
    t = sympy.Symbol("t")
    poly = sympy.Matrix(rows).charpoly(t)
    roots = [float(r.evalf(30)) for r in sympy.Poly(poly.as_expr(), t).real_roots()]
    assert len(roots) == len(rows), "a symmetric matrix has only real eigenvalues"
    return sorted(roots, reverse=True)
