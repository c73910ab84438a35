"""Polytope constructions and the named graph, matroid, and poset families.

Edge and element orderings of the family builders are part of the contract:
the coordinate bijections in the equivalence suites index into them.
"""

import itertools
from dataclasses import dataclass
from typing import Optional

from .geometry import HalfspaceSystem, LatticePolytope
from .graphs import GraphError, Multigraph
from .matroids import MatroidError
from .posets import Poset

STABLE_SET_VERTEX_LIMIT = 14
IDEAL_ELEMENT_LIMIT = 20
ODD_CYCLE_VERTEX_LIMIT = 12


def indicator(mask, length):
    return tuple(mask >> i & 1 for i in range(length))


# ---------------------------------------------------------------------------
# polytopes from combinatorial objects


def independence_polytope(matroid):
    """Convex hull of the indicator vectors of independent sets."""
    n = matroid.ground_size
    points = [indicator(s, n) for s in matroid.independent_sets()]
    return LatticePolytope.from_points(points, assume_vertices=True)


def base_polytope(matroid):
    """Convex hull of the indicator vectors of bases."""
    n = matroid.ground_size
    points = [indicator(b, n) for b in matroid.bases]
    return LatticePolytope.from_points(points, assume_vertices=True)


def stable_set_masks(graph, max_vertices=STABLE_SET_VERTEX_LIMIT):
    n = graph.vertex_count
    if n > max_vertices:
        raise GraphError(
            f"stable set enumeration gated at {max_vertices} vertices, got {n}"
        )
    neighbor = [0] * n
    loops = 0
    for u, v in graph.edges:
        if u == v:
            loops |= 1 << u
        else:
            neighbor[u] |= 1 << v
            neighbor[v] |= 1 << u
    out = []
    for mask in range(1 << n):
        if mask & loops:
            continue
        ok = True
        probe = mask
        while probe:
            low = probe & -probe
            if neighbor[low.bit_length() - 1] & mask:
                ok = False
                break
            probe ^= low
        if ok:
            out.append(mask)
    return out


@dataclass(frozen=True)
class PerfectnessReport:
    """Outcome of the perfectness test.  When the graph is imperfect the
    hole is an induced odd cycle of length at least five, listed in cyclic
    vertex order; in_complement says whether it lives in the complement."""

    is_perfect: bool
    hole: Optional[tuple] = None
    in_complement: bool = False


class ImperfectGraphError(GraphError):
    def __init__(self, report):
        self.report = report
        where = "complement" if report.in_complement else "graph"
        super().__init__(
            f"stable set polytope needs a perfect graph; odd hole "
            f"{report.hole} found in the {where}"
        )


def _simple_neighbor_masks(graph):
    if not graph.is_simple():
        raise GraphError("needs a simple graph")
    neighbor = [0] * graph.vertex_count
    for u, v in graph.edges:
        neighbor[u] |= 1 << v
        neighbor[v] |= 1 << u
    return neighbor


def _induced_cycle_order(neighbor, subset_mask):
    """Cyclic vertex order if the induced subgraph is a single chordless
    cycle, else None."""
    members = []
    probe = subset_mask
    while probe:
        low = probe & -probe
        members.append(low.bit_length() - 1)
        probe ^= low
    degrees = {}
    for v in members:
        inside = neighbor[v] & subset_mask
        if inside.bit_count() != 2:
            return None
        degrees[v] = inside
    order = [members[0]]
    prev = -1
    while len(order) < len(members):
        options = degrees[order[-1]]
        nxt = None
        probe = options
        while probe:
            low = probe & -probe
            w = low.bit_length() - 1
            if w != prev:
                nxt = w
                break
            probe ^= low
        if nxt is None or nxt in order[1:] or (len(order) > 1 and nxt == order[0]):
            return None
        prev = order[-1]
        order.append(nxt)
    if not (neighbor[order[-1]] >> order[0]) & 1:
        return None
    return tuple(order)


def _find_odd_hole(neighbor, n):
    vertices = list(range(n))
    for size in range(5, n + 1, 2):
        for combo in itertools.combinations(vertices, size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            order = _induced_cycle_order(neighbor, mask)
            if order is not None:
                return order
    return None


def perfectness(graph, max_vertices=STABLE_SET_VERTEX_LIMIT):
    """Perfectness by exhaustive induced odd-hole search in the graph and
    its complement."""
    n = graph.vertex_count
    if n > max_vertices:
        raise GraphError(
            f"perfectness test gated at {max_vertices} vertices, got {n}"
        )
    neighbor = _simple_neighbor_masks(graph)
    hole = _find_odd_hole(neighbor, n)
    if hole is not None:
        return PerfectnessReport(False, hole, in_complement=False)
    full = (1 << n) - 1
    co_neighbor = [full & ~neighbor[v] & ~(1 << v) for v in range(n)]
    hole = _find_odd_hole(co_neighbor, n)
    if hole is not None:
        return PerfectnessReport(False, hole, in_complement=True)
    return PerfectnessReport(True)


def maximal_cliques(graph):
    """Masks of the inclusion-maximal cliques, ascending."""
    neighbor = _simple_neighbor_masks(graph)
    n = graph.vertex_count
    out = []

    def extend(clique, candidates, excluded):
        if candidates == 0 and excluded == 0:
            out.append(clique)
            return
        pool = candidates | excluded
        pivot = (pool & -pool).bit_length() - 1
        probe = candidates & ~neighbor[pivot]
        while probe:
            low = probe & -probe
            v = low.bit_length() - 1
            extend(
                clique | low,
                candidates & neighbor[v],
                excluded & neighbor[v],
            )
            candidates &= ~low
            excluded |= low
            probe ^= low

    if n:
        extend(0, (1 << n) - 1, 0)
    return sorted(out)


def stable_clique_hrep(graph):
    """Predicted irredundant H-representation of the stable set polytope of
    a perfect graph: nonnegativity plus one bound per maximal clique."""
    n = graph.vertex_count
    ineqs = []
    for v in range(n):
        normal = [0] * n
        normal[v] = -1
        ineqs.append((tuple(normal), 0))
    for clique in maximal_cliques(graph):
        ineqs.append((indicator(clique, n), 1))
    return HalfspaceSystem(inequalities=tuple(sorted(ineqs)), equations=())


def stable_set_polytope(graph, max_vertices=STABLE_SET_VERTEX_LIMIT):
    """Convex hull of the indicator vectors of stable sets of a perfect
    graph.  Imperfect input is refused with the odd-hole witness attached."""
    report = perfectness(graph, max_vertices)
    if not report.is_perfect:
        raise ImperfectGraphError(report)
    n = graph.vertex_count
    points = [indicator(s, n) for s in stable_set_masks(graph, max_vertices)]
    return LatticePolytope.from_points(points, assume_vertices=True)


@dataclass(frozen=True)
class OddCycleConditionReport:
    """Whether every two vertex-disjoint odd cycles are joined by an edge.
    A failing pair of cycles is returned in cyclic vertex order."""

    satisfied: bool
    witness: Optional[tuple] = None


def odd_cycle_condition(graph, max_vertices=ODD_CYCLE_VERTEX_LIMIT):
    """Check the joined-odd-cycles property on a simple graph.

    Only chordless odd cycles are enumerated: any odd cycle contains a
    chordless one on a subset of its vertices, so a violating pair survives
    the restriction and the check is equivalent.
    """
    n = graph.vertex_count
    if n > max_vertices:
        raise GraphError(
            f"odd cycle scan gated at {max_vertices} vertices, got {n}"
        )
    neighbor = _simple_neighbor_masks(graph)
    cycles = []
    for size in range(3, n + 1, 2):
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            order = _induced_cycle_order(neighbor, mask)
            if order is not None:
                cycles.append((mask, order))
    for i, (mask_a, cycle_a) in enumerate(cycles):
        reach_a = 0
        for v in cycle_a:
            reach_a |= neighbor[v]
        for mask_b, cycle_b in cycles[i + 1:]:
            if mask_a & mask_b:
                continue
            if reach_a & mask_b:
                continue
            return OddCycleConditionReport(False, (cycle_a, cycle_b))
    return OddCycleConditionReport(True)


def order_polytope(poset, max_elements=IDEAL_ELEMENT_LIMIT):
    """Convex hull of the indicator vectors of downward closed sets."""
    n = poset.element_count
    if n > max_elements:
        raise ValueError(f"order polytope gated at {max_elements} elements")
    points = [indicator(s, n) for s in poset.ideal_masks()]
    return LatticePolytope.from_points(points, assume_vertices=True)


def chain_polytope(poset, max_elements=IDEAL_ELEMENT_LIMIT):
    """Convex hull of the indicator vectors of antichains."""
    n = poset.element_count
    if n > max_elements:
        raise ValueError(f"chain polytope gated at {max_elements} elements")
    points = [indicator(s, n) for s in poset.antichain_masks()]
    return LatticePolytope.from_points(points, assume_vertices=True)


def edge_polytope(graph):
    """Convex hull of the columns e_u + e_v over the edges; a loop at u
    contributes 2 e_u."""
    if not graph.edges:
        raise GraphError("edge polytope needs at least one edge")
    n = graph.vertex_count
    points = []
    for u, v in graph.edges:
        p = [0] * n
        p[u] += 1
        p[v] += 1
        points.append(tuple(p))
    return LatticePolytope.from_points(points, assume_vertices=True)


def product_polytope(a, b):
    verts = [u + v for u in a.vertices for v in b.vertices]
    return LatticePolytope.from_points(verts, assume_vertices=True)


# ---------------------------------------------------------------------------
# theoretical facet descriptions


def independence_facets(matroid):
    """Predicted irredundant H-representation of the independence polytope of
    a loopless matroid: coordinate nonnegativity plus one rank bound per
    nonempty indecomposable flat."""
    if not matroid.is_loopless():
        raise MatroidError("facet description needs a loopless matroid")
    n = matroid.ground_size
    ineqs = []
    for e in range(n):
        normal = [0] * n
        normal[e] = -1
        ineqs.append((tuple(normal), 0))
    for flat in matroid.indecomposable_flats():
        normal = indicator(flat, n)
        ineqs.append((normal, matroid.rank_of(flat)))
    return HalfspaceSystem(inequalities=tuple(sorted(ineqs)), equations=())


def base_facets(matroid):
    """Predicted irredundant H-representation of the base polytope of a
    connected matroid: the rank equation, nonnegativity for elements whose
    deletion stays connected, and one rank bound per flacet."""
    if not matroid.is_connected():
        raise MatroidError("facet description needs a connected matroid")
    n = matroid.ground_size
    ineqs = []
    for e in range(n):
        if matroid.deletion(1 << e).is_connected():
            normal = [0] * n
            normal[e] = -1
            ineqs.append((tuple(normal), 0))
    for flat in matroid.flacets():
        ineqs.append((indicator(flat, n), matroid.rank_of(flat)))
    equation = ((1,) * n, matroid.rank)
    return HalfspaceSystem(
        inequalities=tuple(sorted(ineqs)), equations=(equation,)
    )


def base_facets_from_graph(graph):
    """Same facet description as base_facets, but computed with graph
    connectivity only; needs a two-connected loopless multigraph."""
    if graph.has_loops() or not graph.is_two_connected():
        raise GraphError("facet description needs a loopless two-connected graph")
    m = len(graph.edges)
    ineqs = []
    for e in range(m):
        if graph.is_edge_deletable(e):
            normal = [0] * m
            normal[e] = -1
            ineqs.append((tuple(normal), 0))
    for mask in graph.flacet_edge_masks():
        vertices = set()
        for i in range(m):
            if mask >> i & 1:
                vertices.update(graph.edges[i])
        ineqs.append((indicator(mask, m), len(vertices) - 1))
    equation = ((1,) * m, graph.vertex_count - 1)
    return HalfspaceSystem(
        inequalities=tuple(sorted(ineqs)), equations=(equation,)
    )


# ---------------------------------------------------------------------------
# graph families


def parallel_bundle_graph(s):
    """Two vertices joined by s parallel edges."""
    if s < 1:
        raise GraphError("bundle needs at least one edge")
    return Multigraph(2, [(0, 1)] * s)


def bundles_with_path_graph(sizes, path_length):
    """Chain of bundles v_0 .. v_n (bundle i has sizes[i] + 1 parallel edges)
    closed up by a path of path_length + 1 edges from v_0 to v_n through
    fresh vertices.  Edge order: bundle edges in chain order, then the path
    edges from the v_0 end."""
    n = len(sizes)
    if n == 0:
        raise GraphError("need at least one bundle")
    if any(s < 0 for s in sizes) or path_length < 0:
        raise GraphError("bundle sizes and path length must be nonnegative")
    total_vertices = n + 1 + path_length
    edges = []
    for i, s in enumerate(sizes):
        edges.extend([(i, i + 1)] * (s + 1))
    stops = [0] + [n + 1 + j for j in range(path_length)] + [n]
    edges.extend((stops[j], stops[j + 1]) for j in range(path_length + 1))
    return Multigraph(total_vertices, edges)


def double_bundle_with_two_paths_graph(s, t, p, q):
    """Bundles of s+1 and t+1 parallel edges on v0-v1 and v1-v2, a path of
    p+1 edges from v0 to v2, and a path of q+1 edges from v1 to v2.  Edge
    order: first bundle, second bundle, first path, second path."""
    if min(s, t, p, q) < 0:
        raise GraphError("parameters must be nonnegative")
    total_vertices = 3 + p + q
    edges = [(0, 1)] * (s + 1) + [(1, 2)] * (t + 1)
    stops1 = [0] + [3 + j for j in range(p)] + [2]
    edges.extend((stops1[j], stops1[j + 1]) for j in range(p + 1))
    stops2 = [1] + [3 + p + j for j in range(q)] + [2]
    edges.extend((stops2[j], stops2[j + 1]) for j in range(q + 1))
    return Multigraph(total_vertices, edges)


def triangle_bundle_graph(s1, s2, s3):
    """Triangle whose three sides are bundles of s1, s2, s3 parallel edges.
    Edge order: all v0-v1 copies, then v1-v2, then v0-v2."""
    if min(s1, s2, s3) < 1:
        raise GraphError("each side needs at least one edge")
    edges = [(0, 1)] * s1 + [(1, 2)] * s2 + [(0, 2)] * s3
    return Multigraph(3, edges)


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Multigraph(n, list(itertools.combinations(range(n), 2)))


def complete_multipartite_graph(sizes):
    """Parts occupy consecutive vertex ranges in the given order."""
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    n = bounds[-1]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if part[u] != part[v]
    ]
    return Multigraph(n, edges)


def theta_graph(lengths):
    """Two hub vertices joined by internally disjoint paths of the given
    edge lengths."""
    if len(lengths) < 2 or any(ln < 1 for ln in lengths):
        raise GraphError("need at least two paths of positive length")
    vertices = 2
    edges = []
    for ln in lengths:
        stops = [0] + [vertices + j for j in range(ln - 1)] + [1]
        vertices += ln - 1
        edges.extend((stops[j], stops[j + 1]) for j in range(ln))
    return Multigraph(vertices, edges)


SHAPE_FIXTURE_NAMES = (
    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9",
)


def shape_fixture(name):
    """Smallest simple representative of one of the nine named shapes the
    bounded rank sweep of 2-connected simple graphs enumerates: thetas with
    3, 4, 5 parallel paths (G1, G2, G6), two cycles joined by two paths
    (G3), a cycle with two chord paths from one vertex (G4), a complete
    graph on four vertices (G5), and a 4-path theta plus one extra path
    joining the same arc, a hub to an arc, or two different arcs (G7, G8,
    G9)."""
    if name == "G1":
        return theta_graph([1, 2, 2])
    if name == "G2":
        return theta_graph([1, 2, 2, 2])
    if name == "G3":
        return Multigraph(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4)],
        )
    if name == "G4":
        chords = [(0, 2), (0, 3)]
        return Multigraph(5, list(cycle_graph(5).edges) + chords)
    if name == "G5":
        return complete_graph(4)
    if name == "G6":
        return theta_graph([1, 2, 2, 2, 2])
    if name == "G7":
        return theta_graph([1, 2, 2, 3]).add_ear(4, 5, 2)
    if name == "G8":
        return theta_graph([1, 2, 2, 3]).add_ear(0, 5, 1)
    if name == "G9":
        return theta_graph([1, 2, 2, 2]).add_ear(2, 3, 1)
    raise GraphError(f"unknown shape fixture {name!r}")


def glued_cliques_graph(sizes, hub_path_count):
    """For each size s a clique on s block vertices plus one hub, and one
    more clique joining all hubs with hub_path_count extra vertices.  Vertex
    order: block vertices then hub, block by block, then the extra vertices."""
    n = len(sizes)
    if n == 0:
        raise GraphError("need at least one block")
    if any(s < 0 for s in sizes) or hub_path_count < 0:
        raise GraphError("sizes and extra vertex count must be nonnegative")
    edges = []
    hubs = []
    offset = 0
    for s in sizes:
        members = list(range(offset, offset + s + 1))
        hubs.append(members[-1])
        edges.extend(itertools.combinations(members, 2))
        offset += s + 1
    extras = list(range(offset, offset + hub_path_count))
    core = hubs + extras
    edges.extend(itertools.combinations(core, 2))
    return Multigraph(offset + hub_path_count, edges)


# ---------------------------------------------------------------------------
# poset families


def zigzag_chain_poset(s, t, p, q):
    """Three extremal elements joined by four chains: a chain of s elements
    above the first minimum, chains of p and t elements from the two minima
    up to the shared maximum, and a chain of q elements above the second
    minimum.  Element order matches the coordinate bijection used by the
    equivalence suites: s-chain, first minimum, t-chain, maximum, p-chain,
    second minimum, q-chain."""
    if min(s, t, p, q) < 0:
        raise ValueError("chain lengths must be nonnegative")
    alpha = list(range(s))
    mu1 = s
    gamma = [s + 1 + i for i in range(t)]
    mu2 = s + 1 + t
    beta = [s + t + 2 + i for i in range(p)]
    mu3 = s + t + p + 2
    delta = [s + t + p + 3 + i for i in range(q)]
    count = s + t + p + q + 3
    covers = []
    if alpha:
        covers.append((mu1, alpha[0]))
        covers.extend((alpha[i], alpha[i + 1]) for i in range(s - 1))
    if beta:
        covers.append((mu1, beta[0]))
        covers.extend((beta[i], beta[i + 1]) for i in range(p - 1))
        covers.append((beta[-1], mu2))
    else:
        covers.append((mu1, mu2))
    if gamma:
        covers.append((mu3, gamma[0]))
        covers.extend((gamma[i], gamma[i + 1]) for i in range(t - 1))
        covers.append((gamma[-1], mu2))
    else:
        covers.append((mu3, mu2))
    if delta:
        covers.append((mu3, delta[0]))
        covers.extend((delta[i], delta[i + 1]) for i in range(q - 1))
    return Poset(count, covers)
