import random

import pytest

from polyrank.matroids import Matroid, MatroidError, uniform_matroid


def double_edge_with_handle():
    # graphic matroid of two parallel edges (0, 1) plus a two-edge path (2, 3)
    # joining the same endpoints; bases are the spanning trees
    return Matroid.from_bases(4, [[0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])


def test_uniform_basics():
    m = uniform_matroid(2, 4)
    assert m.rank == 2
    assert len(m.bases) == 6
    assert m.is_loopless()
    assert m.is_connected()
    assert m.rank_of([0]) == 1
    assert m.rank_of([0, 1, 2]) == 2
    assert len(m.independent_sets()) == 11
    assert len(m.flats()) == 6
    assert len(m.indecomposable_flats()) == 5
    assert len(m.parallel_classes()) == 4
    assert len(m.flacets()) == 4


def test_rank_one_uniform_has_single_parallel_class():
    m = uniform_matroid(1, 3)
    assert m.is_connected()
    assert m.flats() == (0, 0b111)
    assert m.parallel_classes() == (0b111,)
    assert m.flacets() == ()


def test_exchange_axiom_rejected():
    with pytest.raises(MatroidError):
        Matroid.from_bases(4, [[0, 1], [2, 3]])
    with pytest.raises(MatroidError):
        Matroid.from_bases(3, [[0], [1, 2]])
    with pytest.raises(MatroidError):
        Matroid.from_bases(2, [])


def test_minors_of_uniform():
    m = uniform_matroid(2, 4)
    contracted = m.contraction([0])
    assert contracted == uniform_matroid(1, 3)
    restricted = m.restriction([0, 1])
    assert restricted == uniform_matroid(2, 2)
    deleted = m.deletion([3])
    assert deleted == uniform_matroid(2, 3)


def test_dual():
    assert uniform_matroid(2, 4).dual() == uniform_matroid(2, 4)
    assert uniform_matroid(2, 3).dual() == uniform_matroid(1, 3)
    m = double_edge_with_handle()
    dd = m.dual().dual()
    assert dd == m


def test_direct_sum_disconnects():
    a = uniform_matroid(1, 2)
    s = a.direct_sum(a)
    assert s.ground_size == 4
    assert s.rank == 2
    assert len(s.bases) == 4
    assert not s.is_connected()
    assert a.is_connected()


def test_loops():
    loop = uniform_matroid(0, 1)
    assert loop.loops() == 1
    assert loop.is_connected()
    withloop = uniform_matroid(1, 2).direct_sum(uniform_matroid(0, 1))
    assert withloop.loops() == 0b100
    assert not withloop.is_connected()
    with pytest.raises(MatroidError):
        withloop.parallel_classes()


def test_double_edge_with_handle_structure():
    m = double_edge_with_handle()
    assert m.rank == 2
    assert m.is_connected()
    assert m.flats() == (0, 0b0011, 0b0100, 0b1000, 0b1111)
    assert m.parallel_classes() == (0b0011, 0b0100, 0b1000)
    assert m.indecomposable_flats() == (0b0011, 0b0100, 0b1000, 0b1111)
    assert m.flacets() == (0b0011, 0b0100, 0b1000)
    assert len(m.independent_sets()) == 10
    # elements 2 and 3 are each in series with the rest: deleting one leaves
    # a coloop, so only the parallel pair is deletable keeping connectivity
    assert m.deletion([0]).is_connected()
    assert m.deletion([1]).is_connected()
    assert not m.deletion([2]).is_connected()
    assert not m.deletion([3]).is_connected()


def test_rank_axioms_fuzz():
    rng = random.Random(7)
    matroids = [
        uniform_matroid(2, 5),
        uniform_matroid(3, 6),
        double_edge_with_handle(),
        double_edge_with_handle().dual(),
    ]
    for m in matroids:
        full = m.full_mask()
        assert m.rank_of(0) == 0
        for _ in range(300):
            a = rng.randrange(full + 1)
            b = rng.randrange(full + 1)
            ra, rb = m.rank_of(a), m.rank_of(b)
            assert 0 <= ra <= a.bit_count()
            if a & b == a:
                assert ra <= rb
            assert m.rank_of(a | b) + m.rank_of(a & b) <= ra + rb
            e = rng.randrange(m.ground_size)
            assert m.rank_of(a | (1 << e)) - ra in (0, 1)


def test_closure_is_a_closure_operator():
    rng = random.Random(11)
    m = double_edge_with_handle()
    for _ in range(100):
        a = rng.randrange(m.full_mask() + 1)
        c = m.closure(a)
        assert a & c == a
        assert m.closure(c) == c
        assert m.rank_of(c) == m.rank_of(a)


def test_serialization_roundtrip():
    m = double_edge_with_handle()
    again = Matroid.from_dict(m.to_dict())
    assert again == m
