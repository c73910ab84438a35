"""Exact lattice polytope geometry.

A polytope is stored by its integer vertex list.  Facet enumeration runs the
double description method on the dual cone of the vertex cone, entirely over
integers, inside a full-dimensional lattice chart of the affine hull.  No
floating point is used anywhere in this module.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .linalg import (
    content,
    det,
    extend_to_unimodular,
    invert_fraction,
    invert_unimodular,
    matrix_rank,
    primitive,
    saturated_row_basis,
    vec_dot,
    vec_sub,
)

LATTICE_POINT_BOX_LIMIT = 2_000_000


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class HalfspaceSystem:
    """Inequalities normal . x <= offset plus affine-hull equations normal . x = offset."""

    inequalities: tuple
    equations: tuple = ()
    irredundant: bool = True

    def satisfies(self, point):
        for normal, offset in self.inequalities:
            if vec_dot(normal, point) > offset:
                return False
        for normal, offset in self.equations:
            if vec_dot(normal, point) != offset:
                return False
        return True

    def to_dict(self):
        return {
            "inequalities": [
                {"normal": list(n), "offset": o} for n, o in self.inequalities
            ],
            "equations": [
                {"normal": list(n), "offset": o} for n, o in self.equations
            ],
            "irredundant": self.irredundant,
        }

    @classmethod
    def from_dict(cls, data):
        ineqs = tuple(
            (tuple(int(x) for x in item["normal"]), int(item["offset"]))
            for item in data["inequalities"]
        )
        eqs = tuple(
            (tuple(int(x) for x in item["normal"]), int(item["offset"]))
            for item in data.get("equations", [])
        )
        return cls(ineqs, eqs, bool(data.get("irredundant", True)))


@dataclass(frozen=True)
class AffineLatticeChart:
    """Unimodular chart identifying the affine lattice of a polytope with Z^dim.

    origin is a vertex of the polytope; basis rows generate the full affine
    lattice (aff(P) intersected with Z^ambient), never a proper sublattice.
    """

    origin: tuple
    basis: tuple
    full_matrix: tuple
    full_inverse: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def ambient_dim(self):
        return len(self.origin)

    def to_chart(self, point):
        diff = vec_sub(point, self.origin)
        coords = []
        inv = self.full_inverse
        n = len(diff)
        for j in range(n):
            coords.append(sum(diff[k] * inv[k][j] for k in range(n)))
        for j in range(self.dim, n):
            if coords[j] != 0:
                raise GeometryError("point lies outside the affine hull")
        return tuple(coords[: self.dim])

    def to_ambient(self, coords):
        point = list(self.origin)
        for c, row in zip(coords, self.basis):
            if c:
                for k in range(len(point)):
                    point[k] += c * row[k]
        return tuple(point)

    def to_dict(self):
        return {"origin": list(self.origin), "basis": [list(b) for b in self.basis]}

    @classmethod
    def from_dict(cls, data):
        origin = tuple(int(x) for x in data["origin"])
        basis = [tuple(int(x) for x in row) for row in data["basis"]]
        return build_chart_from_basis(origin, basis)


def build_chart_from_basis(origin, basis):
    dim = len(origin)
    full = extend_to_unimodular([list(b) for b in basis], dim)
    inv = invert_unimodular(full)
    return AffineLatticeChart(
        origin=tuple(origin),
        basis=tuple(tuple(b) for b in basis),
        full_matrix=tuple(tuple(r) for r in full),
        full_inverse=tuple(tuple(r) for r in inv),
    )


@dataclass(frozen=True)
class InvariantFingerprint:
    """Unimodular invariants used as a cheap pre-filter for equivalence."""

    dim: int
    vertex_count: int
    facet_count: int
    rank: Optional[int]
    lattice_point_count: int
    normalized_volume: int
    facet_vertex_counts: tuple

    def to_dict(self):
        return {
            "dim": self.dim,
            "vertex_count": self.vertex_count,
            "facet_count": self.facet_count,
            "rank": self.rank,
            "lattice_point_count": self.lattice_point_count,
            "normalized_volume": self.normalized_volume,
            "facet_vertex_counts": list(self.facet_vertex_counts),
        }


def _dd_extreme_rays(rows, dim):
    """Extreme rays of the pointed cone {y in R^dim : row . y >= 0 for all rows}.

    Incremental double description: seed with a simplicial cone built from dim
    linearly independent constraints, then cut with the remaining ones.  Rays
    come back as primitive integer tuples together with a bitmask marking the
    constraints they satisfy with equality.
    """
    m = len(rows)
    chosen = []
    chosen_idx = []
    for i, row in enumerate(rows):
        if len(chosen) == dim:
            break
        if matrix_rank(chosen + [list(row)]) > len(chosen):
            chosen.append(list(row))
            chosen_idx.append(i)
    if len(chosen) < dim:
        raise GeometryError("constraint matrix does not have full column rank")

    inv = invert_fraction(chosen)
    rays = []
    for j in range(dim):
        col = [inv[k][j] for k in range(dim)]
        denom = 1
        for x in col:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
        vec = tuple(int(x * denom) for x in col)
        vec = primitive(vec)
        mask = 0
        for pos, idx in enumerate(chosen_idx):
            if pos != j:
                mask |= 1 << idx
        rays.append((vec, mask))

    processed = set(chosen_idx)
    for t in range(m):
        if t in processed:
            continue
        row = rows[t]
        bit = 1 << t
        vals = [vec_dot(row, r) for r, _ in rays]
        if all(v >= 0 for v in vals):
            rays = [
                (r, z | bit) if v == 0 else (r, z)
                for (r, z), v in zip(rays, vals)
            ]
            continue
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zero = [k for k, v in enumerate(vals) if v == 0]
        kept = [(rays[k][0], rays[k][1]) for k in pos]
        kept += [(rays[k][0], rays[k][1] | bit) for k in zero]
        need = dim - 2
        new_rays = []
        for p in pos:
            zp = rays[p][1]
            vp = vals[p]
            for q in neg:
                zq = rays[q][1]
                common = zp & zq
                if common.bit_count() < need:
                    continue
                adjacent = True
                for k, (_, zr) in enumerate(rays):
                    if k == p or k == q:
                        continue
                    if common & zr == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vq = vals[q]
                combo = tuple(
                    vp * b - vq * a for a, b in zip(rays[p][0], rays[q][0])
                )
                new_rays.append((primitive(combo), common | bit))
        kept.extend(new_rays)
        rays = kept
        processed.add(t)
    return rays


def _hull_of_chart_points(points, dim):
    """Facets of the convex hull of full-dimensional integer points.

    Returns a list of (normal, offset, incidence_mask) triples, sorted, where
    normal . x <= offset and the mask marks the input points lying on the facet.
    """
    if dim == 0:
        return []
    rows = [(1,) + tuple(p) for p in points]
    rays = _dd_extreme_rays(rows, dim + 1)
    facets = []
    seen = set()
    for ray, mask in rays:
        normal = tuple(-x for x in ray[1:])
        offset = ray[0]
        key = (normal, offset)
        if key in seen:
            continue
        seen.add(key)
        facets.append((normal, offset, mask))
    facets.sort(key=lambda f: (f[0], f[1]))
    return facets


class LatticePolytope:
    """Convex hull of finitely many integer points, stored by its vertices."""

    __slots__ = ("ambient_dim", "vertices", "_cache")

    def __init__(self, ambient_dim, vertices):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self._cache = {}

    @classmethod
    def from_points(cls, points, assume_vertices=False):
        pts = sorted(set(tuple(int(x) for x in p) for p in points))
        if not pts:
            raise GeometryError("empty point set")
        ambient = len(pts[0])
        for p in pts:
            if len(p) != ambient:
                raise GeometryError("points have mixed ambient dimensions")
        poly = cls(ambient, tuple(pts))
        if assume_vertices or len(pts) == 1:
            return poly
        extreme = poly._extreme_points()
        if len(extreme) == len(pts):
            return poly
        return cls(ambient, tuple(sorted(extreme)))

    def _extreme_points(self):
        chart = self.chart()
        dim = chart.dim
        if dim == 0:
            return [self.vertices[0]]
        coords = [chart.to_chart(v) for v in self.vertices]
        facets = _hull_of_chart_points(coords, dim)
        extreme = []
        for i, v in enumerate(self.vertices):
            tight = [list(n) for n, _, mask in facets if mask >> i & 1]
            if len(tight) >= dim and matrix_rank(tight) == dim:
                extreme.append(v)
        return extreme

    def __eq__(self, other):
        return (
            isinstance(other, LatticePolytope)
            and self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self):
        return (
            f"LatticePolytope(ambient_dim={self.ambient_dim}, "
            f"vertices={len(self.vertices)}, dim={self.dim()})"
        )

    def dim(self):
        if "dim" not in self._cache:
            self._cache["dim"] = self.chart().dim
        return self._cache["dim"]

    def chart(self):
        if "chart" not in self._cache:
            origin = min(self.vertices)
            diffs = [list(vec_sub(v, origin)) for v in self.vertices if v != origin]
            basis = saturated_row_basis(diffs) if diffs else []
            self._cache["chart"] = build_chart_from_basis(origin, basis)
        return self._cache["chart"]

    def chart_vertices(self):
        if "chart_vertices" not in self._cache:
            chart = self.chart()
            self._cache["chart_vertices"] = tuple(
                chart.to_chart(v) for v in self.vertices
            )
        return self._cache["chart_vertices"]

    def normalized(self):
        """The unimodularly equivalent full-dimensional copy in Z^dim."""
        if "normalized" not in self._cache:
            self._cache["normalized"] = LatticePolytope.from_points(
                self.chart_vertices(), assume_vertices=True
            )
        return self._cache["normalized"]

    def _chart_hull(self):
        # facets in chart coordinates, with vertex incidence masks indexed
        # by position in self.vertices
        if "chart_hull" not in self._cache:
            self._cache["chart_hull"] = _hull_of_chart_points(
                self.chart_vertices(), self.dim()
            )
        return self._cache["chart_hull"]

    def chart_facets(self):
        return HalfspaceSystem(
            inequalities=tuple((n, o) for n, o, _ in self._chart_hull()),
            equations=(),
            irredundant=True,
        )

    def facet_incidence_masks(self):
        """Per-facet bitmasks over vertex indices, facet order as in facets()."""
        return tuple(mask for _, _, mask in self._chart_hull())

    def facets(self):
        """Irredundant ambient H-representation plus affine hull equations."""
        if "facets" not in self._cache:
            chart = self.chart()
            dim = chart.dim
            amb = self.ambient_dim
            inv = chart.full_inverse
            ineqs = []
            for normal, offset, _ in self._chart_hull():
                lifted = tuple(
                    sum(inv[k][i] * normal[i] for i in range(dim))
                    for k in range(amb)
                )
                g = content(lifted)
                off = offset + vec_dot(lifted, chart.origin)
                if g > 1:
                    if off % g != 0:
                        raise GeometryError("facet offset failed to stay integral")
                    lifted = tuple(x // g for x in lifted)
                    off //= g
                ineqs.append((lifted, off))
            eqs = []
            for j in range(dim, amb):
                normal = tuple(inv[k][j] for k in range(amb))
                eqs.append((normal, vec_dot(normal, chart.origin)))
            self._cache["facets"] = HalfspaceSystem(
                inequalities=tuple(sorted(ineqs)),
                equations=tuple(sorted(eqs)),
                irredundant=True,
            )
        return self._cache["facets"]

    def facet_count(self):
        return len(self._chart_hull())

    def rank(self):
        """Facet count minus (dim + 1); undefined for points."""
        d = self.dim()
        if d == 0:
            raise GeometryError("rank is undefined for a single point")
        return self.facet_count() - d - 1

    def lattice_point_count(self):
        if "lattice_points" not in self._cache:
            d = self.dim()
            if d == 0:
                self._cache["lattice_points"] = 1
            else:
                pts = self.chart_vertices()
                hull = self._chart_hull()
                lo = [min(p[i] for p in pts) for i in range(d)]
                hi = [max(p[i] for p in pts) for i in range(d)]
                total = 1
                for a, b in zip(lo, hi):
                    total *= b - a + 1
                    if total > LATTICE_POINT_BOX_LIMIT:
                        raise GeometryError(
                            "bounding box too large for lattice point enumeration"
                        )
                count = 0
                ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
                for point in itertools.product(*ranges):
                    ok = True
                    for normal, offset, _ in hull:
                        if vec_dot(normal, point) > offset:
                            ok = False
                            break
                    if ok:
                        count += 1
                self._cache["lattice_points"] = count
        return self._cache["lattice_points"]

    def normalized_volume(self):
        """Lattice-normalized volume (d! times euclidean volume in the chart)."""
        if "nvol" not in self._cache:
            memo = {}
            self._cache["nvol"] = _normalized_volume_rec(self.normalized(), memo)
        return self._cache["nvol"]

    def fingerprint(self):
        if "fingerprint" not in self._cache:
            d = self.dim()
            sizes = tuple(
                sorted(mask.bit_count() for mask in self.facet_incidence_masks())
            )
            self._cache["fingerprint"] = InvariantFingerprint(
                dim=d,
                vertex_count=len(self.vertices),
                facet_count=self.facet_count(),
                rank=self.rank() if d > 0 else None,
                lattice_point_count=self.lattice_point_count(),
                normalized_volume=self.normalized_volume(),
                facet_vertex_counts=sizes,
            )
        return self._cache["fingerprint"]

    def contains(self, point):
        point = tuple(int(x) for x in point)
        return self.facets().satisfies(point)

    def to_dict(self):
        return {
            "ambient_dim": self.ambient_dim,
            "vertices": [list(v) for v in self.vertices],
        }

    @classmethod
    def from_dict(cls, data):
        verts = [tuple(int(x) for x in v) for v in data["vertices"]]
        ambient = int(data["ambient_dim"])
        for v in verts:
            if len(v) != ambient:
                raise GeometryError("vertex length disagrees with ambient_dim")
        return cls.from_points(verts)


def _normalized_volume_rec(poly, memo):
    key = poly.vertices
    if key in memo:
        return memo[key]
    d = poly.dim()
    if d == 0:
        memo[key] = 1
        return 1
    verts = poly.chart_vertices()
    hull = poly._chart_hull()
    v0 = verts[0]
    total = 0
    for normal, offset, mask in hull:
        height = offset - vec_dot(normal, v0)
        if height == 0:
            continue
        face_pts = [verts[i] for i in range(len(verts)) if mask >> i & 1]
        face = LatticePolytope.from_points(face_pts, assume_vertices=True)
        total += height * _normalized_volume_rec(face.normalized(), memo)
    memo[key] = total
    return total


def affine_hull_dimension(points):
    """Dimension of the affine hull of a nonempty integer point set."""
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise GeometryError("empty point set")
    base = pts[0]
    diffs = [list(vec_sub(p, base)) for p in pts[1:]]
    return matrix_rank(diffs) if diffs else 0


def enumerate_facets(poly):
    return poly.facets()


def polytope_rank(poly):
    return poly.rank()


def normalize_to_lattice_chart(poly):
    return poly.normalized(), poly.chart()


def lattice_invariants(poly):
    return poly.fingerprint()


def vertices_from_hrep(system, ambient_dim):
    """Vertex set of a bounded full-dimensional H-polytope (test oracle).

    Returns sorted tuples of Fractions.  Raises when the system is unbounded
    or lower-dimensional.
    """
    rows = [
        (offset,) + tuple(-x for x in normal)
        for normal, offset in system.inequalities
    ]
    rays = _dd_extreme_rays(rows, ambient_dim + 1)
    verts = set()
    for ray, _ in rays:
        if ray[0] <= 0:
            raise GeometryError("H-polytope is unbounded or empty")
        verts.add(tuple(Fraction(x, ray[0]) for x in ray[1:]))
    return sorted(verts)


def hrep_matches(poly, system):
    """Whether a claimed H-representation describes the polytope exactly:
    valid on every vertex, equations cutting out the affine hull, and facet
    inequalities in bijection with the true facets via tight vertex sets."""
    verts = poly.vertices
    for v in verts:
        if not system.satisfies(v):
            return False
    eq_rows = [list(n) for n, _ in system.equations]
    codim = poly.ambient_dim - poly.dim()
    if (matrix_rank(eq_rows) if eq_rows else 0) != codim:
        return False
    tight = []
    for normal, offset in system.inequalities:
        mask = 0
        for i, v in enumerate(verts):
            if vec_dot(normal, v) == offset:
                mask |= 1 << i
        tight.append(mask)
    return sorted(tight) == sorted(poly.facet_incidence_masks())


def apply_affine_unimodular(poly, matrix, translation):
    """Image of a polytope under x -> matrix @ x + translation."""
    n = len(matrix)
    if n != poly.ambient_dim or abs(det([list(r) for r in matrix])) != 1:
        raise GeometryError("transform is not unimodular on the ambient lattice")
    new_verts = []
    for v in poly.vertices:
        img = tuple(
            sum(matrix[i][j] * v[j] for j in range(n)) + translation[i]
            for i in range(n)
        )
        new_verts.append(img)
    return LatticePolytope.from_points(new_verts, assume_vertices=True)


def random_unimodular_map(dim, rng, shear_steps=10, shift_bound=4):
    """Random unimodular matrix and integer translation, for invariance fuzzing."""
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(shear_steps):
        op = rng.randrange(3)
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if op == 0 and i != j:
            q = rng.choice([-2, -1, 1, 2])
            for k in range(dim):
                m[i][k] += q * m[j][k]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-x for x in m[i]]
    t = tuple(rng.randint(-shift_bound, shift_bound) for _ in range(dim))
    return tuple(tuple(r) for r in m), t
