import pytest

import ubergraph as ug
from ubergraph import Mode, build, is_simplicial_complex
from ubergraph.errors import (
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
from hypothesis import given, settings

from generators import ubergraphs
from oracles import simplicial_by_subsets, tower_depth

E5_PRIME = [("e1", ["1"]), ("e2", ["1", "3"]), ("e3", ["1", "3", "e1"]),
            ("e4", ["2", "e2"]), ("e5", ["1", "e4", "e2"])]


def test_hypergraph_example_builds(hypergraph_example):
    u = hypergraph_example
    assert (u.n, u.m) == (5, 4)
    assert u.edges["e4"] == frozenset({"1", "3", "5"})


def test_empty():
    u = build([], [])
    assert (u.n, u.m, u.depth()) == (0, 0, 0)
    assert u.nodes() == []


def test_modified_e5_is_well_founded():
    u = build(["1", "2", "3"], E5_PRIME)
    assert u.depth() == 2


def test_self_membership_violates_foundation():
    with pytest.raises(FoundationViolation) as exc:
        build([], [("e", ["e"])])
    assert exc.value.cycle == ["e", "e"]


def test_self_membership_allowed_in_cyclic_mode():
    u = build([], [("e", ["e"])], Mode.CYCLIC)
    assert u.members("e") == {"e"}


def test_two_cycle_rejected():
    with pytest.raises(FoundationViolation):
        build(["v", "w"], [("a", ["v", "b"]), ("b", ["w", "a"])])


@pytest.mark.parametrize("vertices, edges, error", [
    (["1"], [("e", ["x"])], UnknownMember),
    (["1"], [("e", [])], EmptyEdge),
    (["1"], [("e", ["1", "1"])], DuplicateMember),
    (["1", "1"], [], DuplicateLabel),
    (["1"], [("1", ["1"])], DuplicateLabel),
    (["1"], [("e", ["1"]), ("f", ["1"])], DuplicateEdgeSet),
    (["a-b"], [], InvalidLabel),
    ([""], [], InvalidLabel),
])
def test_build_errors(vertices, edges, error):
    with pytest.raises(error):
        build(vertices, edges)


def test_duplicate_sets_allowed_when_cyclic():
    u = build(["1"], [("e", ["1"]), ("f", ["1"])], Mode.CYCLIC)
    assert u.m == 2


def test_forward_reference_accepted():
    u = build(["1"], [("f", ["e"]), ("e", ["1"])])
    assert u.level("f") == 1 and u.nodes() == ["1", "f", "e"]


def test_depth_of_hypergraph_is_zero(hypergraph_example):
    assert hypergraph_example.depth() == 0


def test_depth_of_ubergraph_example(ubergraph_example):
    u = ubergraph_example
    # e2 sits at level 0, e4 = {2, e2} at 1, e5 = {1, e4} at 2.
    assert [u.level(e) for e in u.edges] == [0, 0, 1, 1, 2]
    assert u.depth() == tower_depth(u) == 2


def test_depth_undefined_in_cyclic_mode():
    u = build(["1"], [("e", ["1"])], Mode.CYCLIC)
    with pytest.raises(UndefinedInCyclicMode):
        u.depth()


@given(ubergraphs())
@settings(max_examples=150, deadline=None)
def test_depth_matches_power_tower(u):
    assert u.depth() == tower_depth(u)


@given(ubergraphs())
@settings(max_examples=100, deadline=None)
def test_depth_bounds_members(u):
    k = u.depth()
    for e, ms in u.edges.items():
        assert all(not u.is_edge(x) or u.level(x) < u.level(e) for x in ms)
    assert not u.edges or any(u.level(e) == k for e in u.edges)


def test_nodes_and_vertex_nodes(ubergraph_example):
    u = ubergraph_example
    assert u.nodes() == ["1", "2", "3", "e1", "e2", "e3", "e4", "e5"]
    assert not u.is_vertex_node("e3")
    assert u.is_vertex_node("e1")
    assert u.is_vertex_node("2")
    assert u.members("e3") == {"1", "3", "e1"}
    with pytest.raises(UnknownId):
        u.members("1")
    with pytest.raises(UnknownId):
        u.is_vertex_node("zz")


def test_build_is_deterministic():
    defs = [("b", ["2", "a"]), ("a", ["1"])]
    assert build(["2", "1"], defs) == build(["2", "1"], defs)
    assert build(["2", "1"], defs).nodes() == ["2", "1", "b", "a"]


@pytest.mark.parametrize("edges, expected", [
    ([("a", ["1"]), ("b", ["2"]), ("c", ["1", "2"])], True),
    ([], True),
])
def test_simplicial_complex(edges, expected):
    assert is_simplicial_complex(build(["1", "2"], edges)) is expected


def test_hypergraph_example_is_not_simplicial(hypergraph_example):
    assert simplicial_by_subsets(hypergraph_example) is False
    assert is_simplicial_complex(hypergraph_example) is False


def test_simplicial_needs_depth_zero(ubergraph_example):
    with pytest.raises(NotAHypergraph):
        is_simplicial_complex(ubergraph_example)


@given(ubergraphs(max_n=4, max_m=7, max_size=3))
@settings(max_examples=150, deadline=None)
def test_simplicial_matches_subset_enumeration(u):
    flat = build(u.vertices, [(e, ms) for e, ms in u.edges.items()
                              if not any(u.is_edge(x) for x in ms)])
    assert is_simplicial_complex(flat) == simplicial_by_subsets(flat)


def test_ubergraph_is_hashable_and_immutable(ubergraph_example, data_dir):
    u = ubergraph_example
    assert hash(u) == hash(ug.load(data_dir / "ubergraph.ugt"))
    with pytest.raises(TypeError):
        u.edges["new"] = frozenset({"1"})
