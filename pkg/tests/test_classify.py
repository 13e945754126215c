import pytest
from hypothesis import given, settings

from conftest import rng_for, seeds
from posetdim.classify import (
    OTHER,
    TREE,
    UNICYCLE,
    RootedTree,
    UnicycleDecomposition,
    canonicalize,
    check_tree,
    classify,
    cycle_poset,
    decompose,
    graft,
    tree_neighborhood,
    validate,
)
from posetdim.crown import crown_poset
from posetdim.errors import InvalidDecomposition, NotATree, NotUnicycle, UnknownElement
from posetdim.oracle import random_decomposition
from posetdim.poset import build_poset, disjoint_union, is_isomorphic


def single(label):
    return RootedTree(build_poset([label], []), label)


def test_classify_kinds():
    assert classify(crown_poset(3)).kinds == (UNICYCLE,)
    assert classify(crown_poset(3)).connected
    chain = build_poset("abc", [("a", "b"), ("b", "c")])
    assert classify(chain).kinds == (TREE,)
    two = build_poset("mpqrstu", [("m", "p"), ("m", "q"), ("p", "r"), ("q", "r"),
                                 ("m", "s"), ("m", "t"), ("s", "u"), ("t", "u")])
    assert classify(two).kinds == (OTHER,)


def test_classify_components():
    cls = classify(disjoint_union([crown_poset(1), build_poset("uvw", [("u", "v")])]))
    assert not cls.connected
    assert sorted(cls.kinds) == [TREE, TREE, UNICYCLE]


def test_empty_poset_has_no_components():
    assert classify(build_poset([], [])).components == ()


def test_check_tree():
    check_tree(build_poset("a", []))
    with pytest.raises(NotATree):
        check_tree(crown_poset(2))
    with pytest.raises(NotATree):
        check_tree(build_poset("ab", []))


def test_neighborhood_of_forked_tree():
    # a below e1 and e2, e2 below e3 and e4
    t = build_poset(["a", "e1", "e2", "e3", "e4"], [("a", "e1"), ("a", "e2"), ("e2", "e3"), ("e2", "e4")])
    nb = tree_neighborhood(t, "e2")
    assert nb.up == nb.up_plus == {"e3", "e4"}
    assert nb.down == {"a", "e1"}
    assert nb.down_minus == {"a"}
    assert nb.down_plus == {"e1"}
    assert nb.i_plus == {"e3", "e4", "e1"}
    assert nb.i_minus == {"a", "e1"}
    with pytest.raises(UnknownElement):
        tree_neighborhood(t, "q")


def test_decompose_crown():
    d = decompose(crown_poset(4))
    assert d.n == 4
    assert d.x == ("x1", "x2", "x3", "x4")
    assert d.z == ("z1", "z2", "z3", "z4")
    assert all(c == () for c in d.chains)


def test_decompose_square_with_chains():
    p = build_poset(["x", "b1", "b2", "a1", "z", "t"],
                    [("x", "b1"), ("b1", "b2"), ("b2", "z"), ("x", "a1"), ("a1", "z"), ("t", "a1")])
    d = decompose(p)
    assert d.n == 1
    assert d.chains == (("a1",), ("b1", "b2"))
    assert set(d.trees["a1"].tree.labels) == {"a1", "t"}
    assert graft(d) == p


def test_decompose_rejects_trees_and_multicycles():
    with pytest.raises(NotUnicycle):
        decompose(build_poset("ab", [("a", "b")]))
    with pytest.raises(NotUnicycle):
        decompose(disjoint_union([crown_poset(2), crown_poset(1)]))


def test_validate_rejects_bad_decompositions():
    good = decompose(crown_poset(2))
    validate(good)
    trees = dict(good.trees)
    with pytest.raises(InvalidDecomposition):
        validate(UnicycleDecomposition(2, good.x, good.z, good.chains[:3], trees))
    with pytest.raises(InvalidDecomposition):
        validate(UnicycleDecomposition(1, ("x",), ("z",), (("a",), ()), {v: single(v) for v in "xza"}))
    trees.pop("z2")
    with pytest.raises(InvalidDecomposition):
        validate(UnicycleDecomposition(2, good.x, good.z, good.chains, trees))
    with pytest.raises(InvalidDecomposition):
        validate(UnicycleDecomposition(2, ("x1", "x1"), good.z, good.chains, dict(good.trees)))


def test_cycle_poset_of_subdivided_crown():
    trees = {v: single(v) for v in ["x1", "x2", "z1", "z2", "y"]}
    d = UnicycleDecomposition(2, ("x1", "x2"), ("z1", "z2"), (("y",), (), (), ()), trees)
    c = cycle_poset(d)
    assert c.covers == {("x1", "y"), ("y", "z1"), ("x2", "z1"), ("x2", "z2"), ("x1", "z2")}


def test_graft_orders_through_roots():
    trees = {v: single(v) for v in ["x", "a", "b"]}
    trees["z"] = RootedTree(build_poset(["z", "w"], [("w", "z")]), "z")
    d = UnicycleDecomposition(1, ("x",), ("z",), (("a",), ("b",)), trees)
    g = graft(d)
    assert g.lt("x", "z") and g.lt("w", "z")
    assert not g.comparable("w", "x")
    assert not g.comparable("w", "a")


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_graft_then_decompose_round_trip(seed):
    d = random_decomposition(rng_for(seed))
    g = graft(d)
    cls = classify(g)
    assert cls.connected and cls.kinds == (UNICYCLE,)
    back = decompose(g)
    assert back == canonicalize(d)
    assert graft(back) == g


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_decompose_then_graft_is_isomorphic(seed):
    d = random_decomposition(rng_for(seed))
    g = graft(d)
    if len(g) <= 64:
        assert is_isomorphic(graft(decompose(g)), g)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_canonicalize_is_idempotent_and_preserves_poset(seed):
    d = random_decomposition(rng_for(seed))
    c = canonicalize(d)
    assert canonicalize(c) == c
    assert graft(c) == graft(d)
