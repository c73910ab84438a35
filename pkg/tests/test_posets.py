import pytest

from polyrank.posets import Poset, PosetError


def chain(n):
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def test_chain_structure():
    p = chain(3)
    assert p.less(0, 2)
    assert p.less(0, 1)
    assert not p.less(2, 0)
    assert p.leq(1, 1)
    assert len(p.ideal_masks()) == 4
    assert len(p.antichain_masks()) == 4
    assert not p.has_x_shape()


def test_cycle_rejected():
    with pytest.raises(PosetError):
        Poset(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(PosetError):
        Poset(2, [(0, 0)])


def test_vee_poset():
    p = Poset(3, [(0, 1), (0, 2)])
    assert len(p.ideal_masks()) == 5
    assert len(p.antichain_masks()) == 5
    assert p.comparability_edges() == [(0, 1), (0, 2)]
    assert not p.has_x_shape()


def test_disjoint_chains():
    p = Poset(4, [(0, 1), (2, 3)])
    assert len(p.ideal_masks()) == 9
    assert len(p.antichain_masks()) == 9
    assert not p.comparable(0, 2)
    assert not p.has_x_shape()


def test_two_below_two():
    # both minimal elements below both maximal elements; the comparability
    # graph is a four-cycle
    p = Poset(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert len(p.antichain_masks()) == 7
    assert len(p.ideal_masks()) == 7
    assert sorted(p.comparability_edges()) == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert not p.has_x_shape()


def test_x_shape():
    # a, b < c < d, e
    p = Poset(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
    assert p.has_x_shape()
    # diamond: one incomparable pair in the middle, but nothing has two
    # incomparable elements both below and above
    diamond = Poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    assert not diamond.has_x_shape()
    # the shape looks through transitive relations, not just covers
    tall = Poset(7, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)])
    assert tall.has_x_shape()
    # extending a single chain above the join never creates the shape
    spindle = Poset(5, [(0, 2), (1, 2), (2, 3), (3, 4)])
    assert not spindle.has_x_shape()


def test_ideal_antichain_bijection_counts():
    # downsets and antichains are counted by independent routines, and the
    # classic bijection says the counts agree
    posets = [
        chain(5),
        Poset(4, [(0, 2), (1, 2), (2, 3)]),
        Poset(5, [(0, 2), (1, 2), (2, 3), (2, 4)]),
        Poset(6, [(0, 1), (1, 2), (3, 4), (4, 5)]),
    ]
    for p in posets:
        assert len(p.ideal_masks()) == len(p.antichain_masks())


def test_strictly_above_below():
    p = Poset(4, [(0, 1), (1, 2), (1, 3)])
    assert p.strictly_below(2) == 0b0011
    assert p.strictly_above(0) == 0b1110
    assert p.strictly_above(2) == 0


def test_serialization_roundtrip():
    p = Poset(4, [(0, 2), (1, 2), (2, 3)], labels=["a", "b", "c", "d"])
    again = Poset.from_dict(p.to_dict())
    assert again == p
    assert again.labels == ("a", "b", "c", "d")
