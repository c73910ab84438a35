"""Multigraphs with parallel edges and loops.

Edges carry identity by position in the edge tuple, so parallel copies stay
distinct; that position is also the ground-set index of the graphic matroid.
Loops are ignored by all vertex-connectivity notions.
"""

import itertools
from collections import defaultdict

from .matroids import Matroid


class GraphError(ValueError):
    pass


class Multigraph:
    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count, edges):
        self.vertex_count = vertex_count
        normalized = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError("edge endpoint outside vertex range")
            normalized.append((u, v) if u <= v else (v, u))
        self.edges = tuple(normalized)

    @classmethod
    def from_edges(cls, vertex_count, edges):
        return cls(vertex_count, [tuple(e) for e in edges])

    def __eq__(self, other):
        return (
            isinstance(other, Multigraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Multigraph(vertices={self.vertex_count}, edges={list(self.edges)})"

    def edge_count(self):
        return len(self.edges)

    def is_simple(self):
        seen = set()
        for u, v in self.edges:
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    def has_loops(self):
        return any(u == v for u, v in self.edges)

    def degree(self, v):
        d = 0
        for a, b in self.edges:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def _adjacency(self, skip_vertex=None):
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if u == v or u == skip_vertex or v == skip_vertex:
                continue
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _reaches_all(self, start, skip_vertex=None):
        adj = self._adjacency(skip_vertex)
        target = self.vertex_count - (0 if skip_vertex is None else 1)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == target

    def is_connected(self):
        if self.vertex_count == 0:
            return False
        if self.vertex_count == 1:
            return True
        return self._reaches_all(0)

    def is_two_connected(self):
        """Connected with no articulation vertex; two vertices joined by an
        edge count as two-connected."""
        if self.vertex_count < 2:
            return False
        if not self.is_connected():
            return False
        if self.vertex_count == 2:
            return True
        for v in range(self.vertex_count):
            start = 0 if v != 0 else 1
            if not self._reaches_all(start, skip_vertex=v):
                return False
        return True

    def component_count(self):
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        return len({find(v) for v in range(self.vertex_count)})

    def bipartite_component_count(self):
        """Components that admit a proper 2-coloring (loops break it)."""
        color = [None] * self.vertex_count
        adj = self._adjacency()
        loop_vertices = {u for u, v in self.edges if u == v}
        count = 0
        for start in range(self.vertex_count):
            if color[start] is not None:
                continue
            color[start] = 0
            queue = [start]
            members = [start]
            good = True
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if color[y] is None:
                        color[y] = color[x] ^ 1
                        members.append(y)
                        queue.append(y)
                    elif color[y] == color[x]:
                        good = False
            if good and not any(v in loop_vertices for v in members):
                count += 1
        return count

    def delete_edge(self, index):
        edges = list(self.edges)
        del edges[index]
        return Multigraph(self.vertex_count, edges)

    def contract_edge(self, index):
        u, v = self.edges[index]
        if u == v:
            return self.delete_edge(index)
        mask = 1 << index
        return self.contract_edge_set(mask)

    def contract_edge_set(self, edge_mask):
        """Contract the given edges; surviving parallel copies become loops."""
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, (u, v) in enumerate(self.edges):
            if edge_mask >> i & 1:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        label = {}
        for v in range(self.vertex_count):
            r = find(v)
            if r not in label:
                label[r] = len(label)
        edges = [
            (label[find(u)], label[find(v)])
            for i, (u, v) in enumerate(self.edges)
            if not edge_mask >> i & 1
        ]
        return Multigraph(len(label), edges)

    def is_edge_deletable(self, index):
        return self.delete_edge(index).is_two_connected()

    def is_edge_contractible(self, index):
        u, v = self.edges[index]
        if u == v:
            return False
        for j, (a, b) in enumerate(self.edges):
            if j != index and (a, b) == (u, v):
                return False
        return self.contract_edge(index).is_two_connected()

    def induced_subgraph(self, vertices):
        vertices = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Multigraph(len(vertices), edges)

    def induced_edge_mask(self, vertices):
        inside = set(vertices)
        mask = 0
        for i, (u, v) in enumerate(self.edges):
            if u in inside and v in inside:
                mask |= 1 << i
        return mask

    def add_ear(self, u, v, length):
        """Attach a path of the given edge length between two distinct
        existing vertices, through fresh internal vertices."""
        if u == v:
            raise GraphError("ear endpoints must differ")
        if length < 1:
            raise GraphError("ear length must be at least 1")
        n = self.vertex_count
        path = [u] + list(range(n, n + length - 1)) + [v]
        edges = list(self.edges) + [
            (path[i], path[i + 1]) for i in range(length)
        ]
        return Multigraph(n + length - 1, edges)

    def ear_decomposition(self):
        """Open ear decomposition, or None if the graph is not 2-connected.

        The lowest-index edge serves as the starting K2; each ear is the
        first shortest path of unused edges between two already-built
        vertices (BFS, ties broken by edge index), so the result is
        deterministic for a fixed edge order.  Ears are tuples of edge
        indices; the starting edge is not listed.
        """
        if not self.is_two_connected():
            return None
        adjacency = [[] for _ in range(self.vertex_count)]
        for i, (a, b) in enumerate(self.edges):
            adjacency[a].append((b, i))
            if a != b:
                adjacency[b].append((a, i))
        used = [False] * len(self.edges)
        used[0] = True
        u0, v0 = self.edges[0]
        built = {u0, v0}
        ears = []
        remaining = len(self.edges) - 1
        while remaining:
            # multi-source BFS over unused edges; an ear closes when two
            # different anchor regions touch (or a loop sits on a built
            # vertex), which 2-connectivity guarantees will happen
            parent = {}
            root = {v: v for v in built}
            queue = sorted(built)
            closing = None
            at = 0
            while closing is None and at < len(queue):
                x = queue[at]
                at += 1
                tree_edge = parent[x][1] if x in parent else None
                for y, i in adjacency[x]:
                    if used[i] or i == tree_edge:
                        continue
                    if y in root:
                        if root[y] == root[x] and not (y == x and x in built):
                            continue
                        closing = (x, y, i)
                        break
                    parent[y] = (x, i)
                    root[y] = root[x]
                    queue.append(y)
            if closing is None:
                raise GraphError("ear search stalled on a 2-connected graph")
            x, y, i = closing
            used[i] = True
            left = []
            while x not in built:
                built.add(x)
                x, j = parent[x]
                left.append(j)
                used[j] = True
            right = []
            while y not in built:
                built.add(y)
                y, j = parent[y]
                right.append(j)
                used[j] = True
            ear = tuple(reversed(left)) + (i,) + tuple(right)
            ears.append(ear)
            remaining -= len(ear)
        return ears

    def spanning_forest_masks(self):
        """Bitmasks of maximal spanning forests (spanning trees if connected)."""
        r = self.vertex_count - self.component_count()
        candidates = [i for i, (u, v) in enumerate(self.edges) if u != v]
        masks = []
        for combo in itertools.combinations(candidates, r):
            parent = list(range(self.vertex_count))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for i in combo:
                u, v = self.edges[i]
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if ok:
                mask = 0
                for i in combo:
                    mask |= 1 << i
                masks.append(mask)
        return masks

    def graphic_matroid(self):
        return Matroid(len(self.edges), self.spanning_forest_masks(), validate=False)

    def flacet_edge_masks(self):
        """Edge sets of induced two-connected subgraphs whose contraction
        stays two-connected; these are exactly the flacets of the graphic
        matroid when the graph itself is two-connected and loopless."""
        n = self.vertex_count
        m = len(self.edges)
        full = (1 << m) - 1
        out = []
        for subset in range(1, 1 << n):
            if subset.bit_count() < 2:
                continue
            vertices = [v for v in range(n) if subset >> v & 1]
            mask = self.induced_edge_mask(vertices)
            if mask == 0 or mask == full:
                continue
            if not self.induced_subgraph(vertices).is_two_connected():
                continue
            if self.contract_edge_set(mask).is_two_connected():
                out.append(mask)
        return sorted(out)

    def canonical_form(self):
        """Isomorphism-invariant key usable for dictionary lookups.

        Disconnected graphs reduce to the sorted multiset of component
        keys; connected ones get the minimal relabeled edge list found
        by branching only inside refinement-stable color classes, which
        keeps regular graphs (cycles, matchings, complete multipartite)
        far below the factorial worst case."""
        n = self.vertex_count
        comps = self._component_vertex_lists()
        if len(comps) > 1:
            parts = []
            for comp in comps:
                index = {v: i for i, v in enumerate(comp)}
                inside = [
                    (index[u], index[v])
                    for u, v in self.edges
                    if u in index and v in index
                ]
                parts.append(Multigraph(len(comp), inside).canonical_form())
            return (n, tuple(sorted(parts)))
        return (n, _canonical_edge_key(self))

    def _component_vertex_lists(self):
        seen = [False] * self.vertex_count
        adj = self._adjacency()
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def to_dict(self):
        return {
            "vertex_count": self.vertex_count,
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data["vertex_count"]),
            [tuple(int(x) for x in e) for e in data["edges"]],
        )


def _refined_colors(g):
    n = g.vertex_count
    loops = [0] * n
    adj = [[] for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            adj[u].append(v)
            adj[v].append(u)

    def compress(values):
        uniq = sorted(set(values))
        index = {c: i for i, c in enumerate(uniq)}
        return [index[c] for c in values], len(uniq)

    colors, k = compress([(loops[v], len(adj[v])) for v in range(n)])
    while True:
        refined = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(n)
        ]
        refined, k2 = compress(refined)
        if k2 == k:
            return refined
        colors, k = refined, k2


def _canonical_edge_key(g):
    """Minimal relabeled edge list of a connected multigraph.

    Branches by individualizing one vertex of the first ambiguous color
    class and re-refining; the branch rule depends only on colors, so
    the explored leaf set, and hence its minimum, is the same for any
    relabeling of g."""
    n = g.vertex_count
    edges = g.edges
    adj = [[] for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].append(v)
            adj[v].append(u)

    def compress(values):
        uniq = sorted(set(values))
        index = {c: i for i, c in enumerate(uniq)}
        return [index[c] for c in values], len(uniq)

    def refine(colors, k):
        while True:
            refined = [
                (colors[v], tuple(sorted(colors[w] for w in adj[v])))
                for v in range(n)
            ]
            refined, k2 = compress(refined)
            if k2 == k:
                return colors, k
            colors, k = refined, k2

    start = _refined_colors(g)
    best = None
    stack = [(start, len(set(start)))]
    while stack:
        colors, k = stack.pop()
        if k == n:
            key = tuple(
                sorted(
                    (colors[u], colors[v])
                    if colors[u] <= colors[v]
                    else (colors[v], colors[u])
                    for u, v in edges
                )
            )
            if best is None or key < best:
                best = key
            continue
        counts = defaultdict(int)
        for c in colors:
            counts[c] += 1
        target = min(c for c, size in counts.items() if size > 1)
        for v in range(n):
            if colors[v] != target:
                continue
            pinned = [
                (colors[w], 0 if w == v else 1) for w in range(n)
            ]
            pinned, k2 = compress(pinned)
            stack.append(refine(pinned, k2))
    return best
