"""Deterministic catalogs of graphs, posets, matroids and polytopes.

The verification suites draw their instance grids from here.  Every
entry carries a description string that parses back through the
command-line spec grammar, and every candidate list used for a
non-membership check is bounded by a classification that another suite
certifies (the docstrings say which one).
"""

import itertools
from functools import lru_cache

from .constructors import (
    base_polytope,
    bundles_with_path_graph,
    cycle_graph,
    double_bundle_with_two_paths_graph,
    edge_polytope,
    independence_polytope,
    odd_cycle_condition,
    order_polytope,
    parallel_bundle_graph,
    perfectness,
    product_polytope,
    stable_set_polytope,
    triangle_bundle_graph,
)
from .graphs import GraphError, Multigraph
from .matroids import Matroid, MatroidError, uniform_matroid
from .posets import Poset

MAX_CATALOG_VERTICES = 6


# --------------------------------------------------------------- graphs


@lru_cache(maxsize=None)
def _edge_slots(n):
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _slot_permutations(n):
    slots = _edge_slots(n)
    index = {pair: k for k, pair in enumerate(slots)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append(
            tuple(
                index[(perm[i], perm[j])]
                if perm[i] < perm[j]
                else index[(perm[j], perm[i])]
                for i, j in slots
            )
        )
    return tuple(tables)


@lru_cache(maxsize=None)
def simple_graph_classes(n):
    """All simple graphs on exactly n vertices, one per isomorphism
    class; disconnected graphs and isolated vertices included.

    Edge masks are scanned in increasing order and whole orbits are
    marked, so each class is emitted at its minimum mask and the cost is
    classes times n!, not masks times n!.
    """
    if n > MAX_CATALOG_VERTICES:
        raise GraphError(f"graph catalog capped at {MAX_CATALOG_VERTICES} vertices")
    if n == 0:
        return (Multigraph(0, []),)
    slots = _edge_slots(n)
    tables = _slot_permutations(n)
    seen = bytearray(1 << len(slots))
    out = []
    for mask in range(1 << len(slots)):
        if seen[mask]:
            continue
        for table in tables:
            image = 0
            bits = mask
            while bits:
                low = bits & -bits
                image |= 1 << table[low.bit_length() - 1]
                bits ^= low
            seen[image] = 1
        out.append(
            Multigraph(n, [slots[k] for k in range(len(slots)) if mask >> k & 1])
        )
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graph_classes(n):
    """Connected simple graphs on exactly n vertices, one per class."""
    return tuple(g for g in simple_graph_classes(n) if g.is_connected())


@lru_cache(maxsize=None)
def two_connected_multigraph_classes(max_edges):
    """Loopless 2-connected multigraphs with at most max_edges edges, one
    per isomorphism class.

    Any 2-connected graph beyond a single edge has at least as many
    edges as vertices, so vertex counts stay at or below the edge
    budget and the scan over edge multisets terminates.
    """
    seen = set()
    out = []
    for m in range(1, max_edges + 1):
        for n in range(2, max(2, m) + 1):
            for combo in itertools.combinations_with_replacement(_edge_slots(n), m):
                g = Multigraph(n, list(combo))
                if not g.is_two_connected():
                    continue
                key = g.canonical_form()
                if key not in seen:
                    seen.add(key)
                    out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def two_connected_simple_graph_classes(max_edges):
    """Simple 2-connected graphs with at most max_edges edges, one per
    isomorphism class, grown from cycles by open ear additions; every
    such graph arises this way because it has an open ear decomposition.
    """
    seen = {}
    frontier = []
    for k in range(3, max_edges + 1):
        g = cycle_graph(k)
        seen[g.canonical_form()] = g
        frontier.append(g)
    while frontier:
        grown = []
        for g in frontier:
            budget = max_edges - len(g.edges)
            if budget <= 0:
                continue
            present = {tuple(sorted(e)) for e in g.edges}
            for u in range(g.vertex_count):
                for v in range(u + 1, g.vertex_count):
                    shortest = 1 if (u, v) not in present else 2
                    for length in range(shortest, budget + 1):
                        h = g.add_ear(u, v, length)
                        key = h.canonical_form()
                        if key not in seen:
                            seen[key] = h
                            grown.append(h)
        frontier = grown
    return tuple(
        sorted(
            seen.values(),
            key=lambda g: (len(g.edges), g.vertex_count, g.canonical_form()),
        )
    )


# ----------------------------------------------------- shape recognizers


def cycle_length_of(graph):
    """Length of the graph when it is a single cycle (the doubled edge
    counts as the 2-cycle), else None."""
    n = graph.vertex_count
    if n < 2 or not graph.is_connected():
        return None
    if len(graph.edges) != n:
        return None
    if any(u == v for u, v in graph.edges):
        return None
    if any(graph.degree(v) != 2 for v in range(n)):
        return None
    return n


def theta_path_lengths(graph):
    """Sorted path lengths when the graph consists of two branch vertices
    joined by three or more internally disjoint paths, else None."""
    n = graph.vertex_count
    if any(u == v for u, v in graph.edges):
        return None
    degrees = [graph.degree(v) for v in range(n)]
    hubs = [v for v in range(n) if degrees[v] >= 3]
    if len(hubs) != 2:
        return None
    if any(degrees[v] != 2 for v in range(n) if v not in hubs):
        return None
    a, b = hubs
    incident = [[] for _ in range(n)]
    for i, (u, v) in enumerate(graph.edges):
        incident[u].append(i)
        incident[v].append(i)
    used = [False] * len(graph.edges)
    lengths = []
    for first in incident[a]:
        if used[first]:
            continue
        length = 0
        edge = first
        here = a
        while True:
            used[edge] = True
            length += 1
            u, v = graph.edges[edge]
            here = v if u == here else u
            if here in (a, b):
                break
            nxt = [i for i in incident[here] if not used[i]]
            if len(nxt) != 1:
                return None
            edge = nxt[0]
        if here != b:
            return None
        lengths.append(length)
    if not all(used) or len(lengths) != degrees[a]:
        return None
    return tuple(sorted(lengths))


# ---------------------------------------------------------------- posets


@lru_cache(maxsize=None)
def poset_classes(n):
    """All posets on exactly n elements up to isomorphism.

    Strict orders are enumerated as transitive subsets of the upper
    triangle, which reaches every poset because any finite poset can be
    relabeled along a linear extension; orbits under relabeling are
    deduplicated by their minimal relation."""
    if n == 0:
        return (Poset(0, []),)
    pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    perms = tuple(itertools.permutations(range(n)))
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if mask >> k & 1}
        if any(
            (a, c) not in rel
            for a, b in rel
            for b2, c in rel
            if b2 == b
        ):
            continue
        key = min(
            tuple(sorted((perm[a], perm[b]) for a, b in rel)) for perm in perms
        )
        if key in seen:
            continue
        seen.add(key)
        covers = [
            (a, b)
            for a, b in rel
            if not any((a, c) in rel and (c, b) in rel for c in range(n))
        ]
        out.append(Poset(n, covers))
    return tuple(out)


# -------------------------------------------------------------- matroids


@lru_cache(maxsize=None)
def loopless_matroid_classes(ground_size):
    """All loopless matroids on exactly ground_size elements up to
    isomorphism, enumerated as exchange-closed families of equal-size
    bases whose union covers the ground set."""
    n = ground_size
    full = (1 << n) - 1
    perms = tuple(itertools.permutations(range(n)))
    out = []
    seen = set()
    for r in range(1, n + 1):
        subsets = [m for m in range(1 << n) if m.bit_count() == r]
        for fam in range(1, 1 << len(subsets)):
            bases = tuple(
                subsets[k] for k in range(len(subsets)) if fam >> k & 1
            )
            covered = 0
            for b in bases:
                covered |= b
            if covered != full:
                continue
            try:
                matroid = Matroid(n, bases)
            except MatroidError:
                continue
            key = min(
                tuple(sorted(_relabel_mask(b, perm) for b in bases))
                for perm in perms
            )
            if key in seen:
                continue
            seen.add(key)
            out.append(matroid)
    return tuple(out)


def _relabel_mask(mask, perm):
    image = 0
    while mask:
        low = mask & -mask
        image |= 1 << perm[low.bit_length() - 1]
        mask ^= low
    return image


def _mask_bits(mask):
    bits = []
    while mask:
        low = mask & -mask
        bits.append(low.bit_length() - 1)
        mask ^= low
    return bits


def matroid_description(matroid):
    """Replayable literal spec listing the bases of a matroid."""
    names = []
    for mask in sorted(matroid.bases):
        names.append("-".join(str(e) for e in _mask_bits(mask)))
    return f"Bases:{matroid.ground_size}:{','.join(names)}"


def graph_description(graph):
    """Replayable literal spec listing the edges of a graph."""
    edges = ",".join(f"{u}-{v}" for u, v in sorted(tuple(sorted(e)) for e in graph.edges))
    return f"Edges:{graph.vertex_count}:{edges}"


def poset_description(poset):
    """Replayable literal spec listing the cover relations of a poset."""
    covers = ",".join(f"{a}<{b}" for a, b in sorted(poset.covers))
    return f"PosetCovers:{poset.element_count}:{covers}"


# ------------------------------------------------------- matroid corpus


def facet_corpus():
    """(description, matroid) pairs with at most 8 elements, all loopless:
    uniform matroids through six elements, the four graphic families,
    complete graphs and long cycles, and direct sums from a small pool.
    """
    entries = []

    def add(desc, matroid):
        entries.append((desc, matroid))

    for n in range(1, 7):
        for r in range(1, n + 1):
            add(f"Uniform:{r},{n}", uniform_matroid(r, n))
    for s in range(1, 7):
        add(f"A:{s}", parallel_bundle_graph(s).graphic_matroid())
    for s in range(1, 6):
        for p in range(1, 7 - s):
            add(f"B:{s};p={p}", bundles_with_path_graph((s,), p).graphic_matroid())
    for s1 in range(1, 5):
        for s2 in range(s1, 6 - s1):
            for p in range(0, 6 - s1 - s2):
                add(
                    f"B:{s1},{s2};p={p}",
                    bundles_with_path_graph((s1, s2), p).graphic_matroid(),
                )
    for triple in itertools.combinations_with_replacement(range(1, 3), 3):
        for p in range(0, 5 - sum(triple)):
            name = ",".join(str(s) for s in triple)
            add(
                f"B:{name};p={p}",
                bundles_with_path_graph(triple, p).graphic_matroid(),
            )
    for s in range(1, 4):
        for q in range(1, 4):
            for t in range(0, 3):
                for p in range(0, 3):
                    if s + t + p + q <= 4:
                        add(
                            f"C:{s},{t};p={p},q={q}",
                            double_bundle_with_two_paths_graph(
                                s, t, p, q
                            ).graphic_matroid(),
                        )
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(b, 7):
                if a + b + c <= 8:
                    add(
                        f"D:{a},{b},{c}",
                        triangle_bundle_graph(a, b, c).graphic_matroid(),
                    )
    for n in (7, 8):
        add(f"Cycle:{n}", cycle_graph(n).graphic_matroid())
    add("K:4", Multigraph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]).graphic_matroid())

    pool = [
        ("Uniform:1,1", uniform_matroid(1, 1)),
        ("Uniform:1,2", uniform_matroid(1, 2)),
        ("Uniform:2,2", uniform_matroid(2, 2)),
        ("Uniform:1,3", uniform_matroid(1, 3)),
        ("Uniform:2,3", uniform_matroid(2, 3)),
        ("Uniform:3,3", uniform_matroid(3, 3)),
        ("Uniform:2,4", uniform_matroid(2, 4)),
        ("A:2", parallel_bundle_graph(2).graphic_matroid()),
        ("A:3", parallel_bundle_graph(3).graphic_matroid()),
        ("D:1,1,1", triangle_bundle_graph(1, 1, 1).graphic_matroid()),
        ("B:1;p=1", bundles_with_path_graph((1,), 1).graphic_matroid()),
    ]
    for i, (d1, m1) in enumerate(pool):
        for d2, m2 in pool[i:]:
            if m1.ground_size + m2.ground_size <= 8:
                add(f"U:{d1}|{d2}", m1.direct_sum(m2))
    for combo in itertools.combinations_with_replacement(pool[:6], 3):
        total = sum(m.ground_size for _, m in combo)
        if total <= 6:
            descs = "|".join(d for d, _ in combo)
            merged = combo[0][1]
            for _, m in combo[1:]:
                merged = merged.direct_sum(m)
            add(f"U:{descs}", merged)
    return entries


# ----------------------------------------------- class member candidates


def _connected_base_members(rank_n, d):
    """Connected-matroid base polytopes of the given rank and dimension,
    as (graph spec, graph) pairs.

    The bundle-chain, double-bundle and triangle-bundle families exhaust
    connected ranks 0 through 3 (certified by suite thm-3.7), and each
    family dimension is edge count minus one, so the parameter grid below
    is the complete dimension-d slice.
    """
    edges_wanted = d + 1
    if rank_n == 0:
        if d >= 1:
            yield f"A:{d + 1}", parallel_bundle_graph(d + 1)
        return
    if rank_n == 1:
        for s in range(1, edges_wanted + 1):
            for p in range(1, edges_wanted + 1):
                g = bundles_with_path_graph((s,), p)
                if len(g.edges) == edges_wanted:
                    yield f"B:{s};p={p}", g
        return
    if rank_n == 2:
        for s1 in range(1, edges_wanted + 1):
            for s2 in range(s1, edges_wanted + 1):
                for p in range(0, edges_wanted + 1):
                    g = bundles_with_path_graph((s1, s2), p)
                    if len(g.edges) == edges_wanted:
                        yield f"B:{s1},{s2};p={p}", g
        return
    if rank_n == 3:
        for s1 in range(1, edges_wanted + 1):
            for s2 in range(s1, edges_wanted + 1):
                for s3 in range(s2, edges_wanted + 1):
                    for p in range(0, edges_wanted + 1):
                        g = bundles_with_path_graph((s1, s2, s3), p)
                        if len(g.edges) == edges_wanted:
                            name = f"{s1},{s2},{s3}"
                            yield f"B:{name};p={p}", g
        seen = set()
        for s in range(1, edges_wanted + 1):
            for t in range(0, edges_wanted + 1):
                for p in range(0, edges_wanted + 1):
                    for q in range(1, edges_wanted + 1):
                        g = double_bundle_with_two_paths_graph(s, t, p, q)
                        if len(g.edges) != edges_wanted:
                            continue
                        key = g.canonical_form()
                        if key not in seen:
                            seen.add(key)
                            yield f"C:{s},{t};p={p},q={q}", g
        for a in range(2, edges_wanted + 1):
            for b in range(a, edges_wanted + 1):
                for c in range(b, edges_wanted + 1):
                    g = triangle_bundle_graph(a, b, c)
                    if len(g.edges) == edges_wanted:
                        yield f"D:{a},{b},{c}", g
        return
    raise ValueError(f"no classification available for rank {rank_n}")


def base_class_members(rank_n, d):
    """All base polytope classes of the given rank and dimension, as
    (description, polytope) pairs.

    Disconnected matroids contribute products of connected ones; the
    product adds the factor ranks plus one per extra factor, and factors
    of dimension zero are excluded because they do not change the
    polytope.  Candidate lists built from this generator are exhaustive
    for ranks through 3 by the classifications that suites thm-3.2 and
    thm-3.7 certify."""
    for specs, graphs in _factorizations(rank_n, d, _connected_base_members):
        polytope = base_polytope(graphs[0].graphic_matroid())
        for g in graphs[1:]:
            polytope = product_polytope(polytope, base_polytope(g.graphic_matroid()))
        if len(specs) == 1:
            yield f"base({specs[0]})", polytope
        else:
            yield f"base(U:{'|'.join(specs)})", polytope


def _connected_independence_members(rank_n, d):
    """Connected-matroid independence polytopes of the given rank and
    dimension (suite thm-3.2 certifies the classification: rank 0 is the
    single parallel bundle, ranks 1 and 2 are empty, rank 3 is the
    triangle bundle family)."""
    if rank_n == 0:
        if d >= 1:
            yield f"A:{d}", parallel_bundle_graph(d)
        return
    if rank_n in (1, 2):
        return
    if rank_n == 3:
        for a in range(1, d + 1):
            for b in range(a, d + 1):
                for c in range(b, d + 1):
                    g = triangle_bundle_graph(a, b, c)
                    if len(g.edges) == d:
                        yield f"D:{a},{b},{c}", g
        return
    raise ValueError(f"no classification available for rank {rank_n}")


def independence_class_members(rank_n, d):
    """All independence polytope classes of the given rank and dimension,
    as (description, polytope) pairs; see base_class_members for how
    products cover the disconnected matroids."""
    for specs, graphs in _factorizations(rank_n, d, _connected_independence_members):
        polytope = independence_polytope(graphs[0].graphic_matroid())
        for g in graphs[1:]:
            polytope = product_polytope(
                polytope, independence_polytope(g.graphic_matroid())
            )
        if len(specs) == 1:
            yield f"independence({specs[0]})", polytope
        else:
            yield f"independence(U:{'|'.join(specs)})", polytope


def _factorizations(rank_n, d, connected_members):
    """Multisets of connected members with ranks summing to rank_n minus
    (factors - 1) and dimensions summing to d, in deterministic order."""
    seen = set()

    def split(remaining_rank, remaining_dim, floor_key):
        for r in range(0, remaining_rank + 1):
            for dim in range(1, remaining_dim + 1):
                for spec, graph in connected_members(r, dim):
                    key = (r, dim, spec)
                    if key < floor_key:
                        continue
                    rest_rank = remaining_rank - r
                    rest_dim = remaining_dim - dim
                    if rest_dim == 0:
                        if rest_rank == 0:
                            yield [(key, graph)]
                        continue
                    if rest_rank < 1:
                        continue
                    for tail in split(rest_rank - 1, rest_dim, key):
                        yield [(key, graph)] + tail

    for combo in split(rank_n, d, (-1, 0, "")):
        specs = tuple(item[0][2] for item in combo)
        if specs in seen:
            continue
        seen.add(specs)
        yield specs, [item[1] for item in combo]


def order_class_members(rank_n, d):
    """Order polytopes of the given rank and dimension: one per poset on
    exactly d elements (the order polytope of a d-element poset is always
    d-dimensional), filtered by computed rank."""
    for poset in poset_classes(d):
        polytope = order_polytope(poset)
        if polytope.dim() >= 1 and polytope.rank() == rank_n:
            yield f"order({poset_description(poset)})", polytope


def stable_class_members(rank_n, d):
    """Stable set polytopes of the given rank and dimension: one per
    perfect graph on exactly d vertices (the polytope is always
    d-dimensional), filtered by computed rank."""
    for graph in simple_graph_classes(d):
        if not perfectness(graph).is_perfect:
            continue
        polytope = stable_set_polytope(graph)
        if polytope.dim() >= 1 and polytope.rank() == rank_n:
            yield f"stable({graph_description(graph)})", polytope


def edge_sweep_graphs(d):
    """Simple graphs without isolated vertices whose edge polytopes have
    dimension d, one per isomorphism class, with the odd cycle condition
    holding.

    The free-join dimension count (vertices minus bipartite components
    minus one) pins the admissible component multisets; two nonbipartite
    components always violate the odd cycle condition, so one suffices.
    """
    target = d + 1
    if target + 1 > MAX_CATALOG_VERTICES:
        raise GraphError(
            f"edge polytope sweep needs graphs on {target + 1} vertices, "
            f"beyond the catalog cap of {MAX_CATALOG_VERTICES}"
        )
    catalog = []
    for n in range(2, target + 2):
        for g in connected_graph_classes(n):
            if not g.edges:
                continue
            bipartite = g.bipartite_component_count() == 1
            weight = n - (1 if bipartite else 0)
            catalog.append((weight, n, g))

    def assemble(parts):
        total = sum(g.vertex_count for _, _, g in parts)
        edges = []
        shift = 0
        for _, n, g in parts:
            edges.extend((u + shift, v + shift) for u, v in g.edges)
            shift += n
        return Multigraph(total, edges)

    def choose(remaining, start):
        if remaining == 0:
            yield []
            return
        for idx in range(start, len(catalog)):
            weight = catalog[idx][0]
            if weight <= remaining:
                for tail in choose(remaining - weight, idx):
                    yield [catalog[idx]] + tail

    for parts in choose(target, 0):
        graph = assemble(parts)
        if not odd_cycle_condition(graph).satisfied:
            continue
        yield graph_description(graph), graph


def edge_class_members(rank_n, d):
    """Edge polytopes of the given rank and dimension, one per graph
    class from the dimension-d sweep."""
    for desc, graph in edge_sweep_graphs(d):
        polytope = edge_polytope(graph)
        if polytope.dim() != d:
            raise GraphError(
                f"dimension count failed for {desc}: {polytope.dim()} != {d}"
            )
        if polytope.dim() >= 1 and polytope.rank() == rank_n:
            yield f"edge({desc})", polytope
