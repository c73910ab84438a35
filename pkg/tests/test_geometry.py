import random
from fractions import Fraction

import pytest

from polyrank.geometry import (
    GeometryError,
    HalfspaceSystem,
    LatticePolytope,
    affine_hull_dimension,
    apply_affine_unimodular,
    lattice_invariants,
    random_unimodular_map,
    vertices_from_hrep,
)


def square():
    return LatticePolytope.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])


def triangle():
    return LatticePolytope.from_points([(0, 0), (1, 0), (0, 1)])


def cube():
    pts = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    return LatticePolytope.from_points(pts)


def test_unit_square_invariants():
    p = square()
    assert p.dim() == 2
    assert len(p.vertices) == 4
    assert p.facet_count() == 4
    assert p.rank() == 1
    assert p.lattice_point_count() == 4
    assert p.normalized_volume() == 2


def test_triangle_invariants():
    p = triangle()
    assert p.dim() == 2
    assert p.facet_count() == 3
    assert p.rank() == 0
    assert p.lattice_point_count() == 3
    assert p.normalized_volume() == 1


def test_cube_invariants():
    p = cube()
    assert p.dim() == 3
    assert p.facet_count() == 6
    assert p.rank() == 2
    assert p.lattice_point_count() == 8
    assert p.normalized_volume() == 6


def test_point_polytope():
    p = LatticePolytope.from_points([(3, -1)])
    assert p.dim() == 0
    assert p.facet_count() == 0
    assert p.lattice_point_count() == 1
    assert p.normalized_volume() == 1
    with pytest.raises(GeometryError):
        p.rank()
    # affine hull equations pin the point down exactly
    sys = p.facets()
    assert sys.satisfies((3, -1))
    assert not sys.satisfies((3, 0))


def test_segment_lattice_saturation():
    # the vertex differences span a sublattice; the chart must use the
    # saturated lattice so interior lattice points are counted
    p = LatticePolytope.from_points([(0,), (2,)])
    assert p.dim() == 1
    assert p.lattice_point_count() == 3
    assert p.normalized_volume() == 2
    q = LatticePolytope.from_points([(0, 0), (2, 4)])
    assert q.dim() == 1
    assert q.lattice_point_count() == 3
    assert q.normalized_volume() == 2


def test_from_points_drops_non_vertices():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0), (2, 1)]
    p = LatticePolytope.from_points(pts)
    assert p.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert p.lattice_point_count() == 9
    assert p.normalized_volume() == 8


def test_lower_dimensional_embedding():
    # a unit square sitting on a plane inside Z^3
    pts = [(0, 0, 0), (1, 1, 0), (0, 0, 1), (1, 1, 1)]
    p = LatticePolytope.from_points(pts)
    assert p.dim() == 2
    assert p.facet_count() == 4
    assert p.rank() == 1
    assert p.lattice_point_count() == 4
    assert p.normalized_volume() == 2
    sys = p.facets()
    assert len(sys.equations) == 1
    for v in pts:
        assert sys.satisfies(v)
    assert not sys.satisfies((1, 0, 0))


def test_facets_of_square_are_expected():
    sys = square().facets()
    expected = {
        ((-1, 0), 0),
        ((0, -1), 0),
        ((1, 0), 1),
        ((0, 1), 1),
    }
    assert set(sys.inequalities) == expected
    assert sys.equations == ()


def test_spanning_tree_polytope_of_double_edge_with_handle():
    # graph on {v1, v2, u}: two parallel v1v2 edges plus the path v1-u-v2;
    # coordinates ordered (first parallel edge, second, v1-u, u-v2)
    verts = [
        (1, 0, 1, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
    ]
    p = LatticePolytope.from_points(verts)
    assert len(p.vertices) == 5
    assert p.dim() == 3
    assert p.facet_count() == 5
    assert p.rank() == 1


def test_rank_four_uniform_independence_polytope():
    # independent sets of the rank-2 uniform matroid on 4 elements
    verts = [(0, 0, 0, 0)]
    for i in range(4):
        e = [0] * 4
        e[i] = 1
        verts.append(tuple(e))
    for i in range(4):
        for j in range(i + 1, 4):
            e = [0] * 4
            e[i] = e[j] = 1
            verts.append(tuple(e))
    p = LatticePolytope.from_points(verts)
    assert len(p.vertices) == 11
    assert p.dim() == 4
    assert p.facet_count() == 9
    assert p.rank() == 4
    expected = set()
    for i in range(4):
        low = [0] * 4
        low[i] = -1
        high = [0] * 4
        high[i] = 1
        expected.add((tuple(low), 0))
        expected.add((tuple(high), 1))
    expected.add(((1, 1, 1, 1), 2))
    assert set(p.facets().inequalities) == expected


def test_product_rank_law():
    def product(a, b):
        verts = [u + v for u in a.vertices for v in b.vertices]
        return LatticePolytope.from_points(verts, assume_vertices=True)

    seg = LatticePolytope.from_points([(0,), (1,)])
    pairs = [
        (square(), seg),
        (square(), triangle()),
        (cube(), seg),
        (triangle(), triangle()),
    ]
    for a, b in pairs:
        p = product(a, b)
        assert p.dim() == a.dim() + b.dim()
        assert p.facet_count() == a.facet_count() + b.facet_count()
        assert p.rank() == a.rank() + b.rank() + 1


def test_vertices_from_hrep_roundtrip():
    for poly in [square(), triangle(), cube()]:
        norm = poly.normalized()
        got = vertices_from_hrep(norm.chart_facets(), norm.dim())
        want = sorted(tuple(Fraction(x) for x in v) for v in norm.vertices)
        assert got == want


def test_vertices_from_hrep_fractional():
    # 2x + 3y <= 6, x >= 0, y >= 0 has a fractional vertex at (3, 0)... all
    # integral except (0, 2) and (3, 0) are integral; shrink to get fractions
    sys = HalfspaceSystem(
        inequalities=(((2, 3), 5), ((-1, 0), 0), ((0, -1), 0)),
    )
    got = vertices_from_hrep(sys, 2)
    assert got == [
        (Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(5, 3)),
        (Fraction(5, 2), Fraction(0)),
    ]


def test_contains():
    p = cube()
    assert p.contains((0, 0, 0))
    assert p.contains((1, 1, 0))
    assert not p.contains((2, 0, 0))
    assert not p.contains((-1, 0, 0))


def test_affine_hull_dimension():
    assert affine_hull_dimension([(0, 0)]) == 0
    assert affine_hull_dimension([(0, 0), (1, 1)]) == 1
    assert affine_hull_dimension([(0, 0), (1, 0), (0, 1)]) == 2
    with pytest.raises(GeometryError):
        affine_hull_dimension([])


def test_fingerprint_invariance_under_unimodular_maps():
    rng = random.Random(20240817)
    base = [square(), cube(), triangle()]
    for poly in base:
        fp = lattice_invariants(poly)
        for _ in range(25):
            m, t = random_unimodular_map(poly.ambient_dim, rng)
            image = apply_affine_unimodular(poly, m, t)
            assert lattice_invariants(image) == fp


def test_fingerprint_invariance_random_01_polytopes():
    rng = random.Random(99)
    for d in (2, 3, 4):
        for _ in range(8):
            pool = list(range(2**d))
            chosen = rng.sample(pool, rng.randint(d + 1, min(len(pool), 2 * d)))
            pts = [tuple(c >> i & 1 for i in range(d)) for c in chosen]
            poly = LatticePolytope.from_points(pts)
            fp = lattice_invariants(poly)
            m, t = random_unimodular_map(d, rng)
            image = apply_affine_unimodular(poly, m, t)
            assert lattice_invariants(image) == fp


def test_normalized_is_translation_stable():
    # normalizing twice can only shift by a lattice vector
    pts = [(0, 0, 0), (2, 2, 0), (0, 0, 3), (2, 2, 3)]
    p = LatticePolytope.from_points(pts)
    n1 = p.normalized()
    n2 = n1.normalized()
    assert n1.ambient_dim == n2.ambient_dim == p.dim()
    diffs = {
        tuple(a - b for a, b in zip(u, v))
        for u, v in zip(sorted(n1.vertices), sorted(n2.vertices))
    }
    assert len(diffs) == 1
    assert lattice_invariants(n1) == lattice_invariants(n2) == lattice_invariants(p)


def test_serialization_roundtrip():
    p = cube()
    q = LatticePolytope.from_dict(p.to_dict())
    assert q == p
    sys = p.facets()
    sys2 = HalfspaceSystem.from_dict(sys.to_dict())
    assert sys2.inequalities == sys.inequalities
    assert sys2.equations == sys.equations


def test_apply_affine_unimodular_rejects_bad_matrix():
    with pytest.raises(GeometryError):
        apply_affine_unimodular(square(), ((2, 0), (0, 1)), (0, 0))
