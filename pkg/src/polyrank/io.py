"""Shared file formats, the inline description grammar, and report
rendering.

Files are JSON objects tagged with a "kind" field so a command can load
whatever it is handed.  Inline descriptions come in two layers: family
specs name graphs, matroids and posets ("A:3", "Uniform:2,4",
"PosetCovers:2:0<1", "U:A:2|B:1;p=1"), and polytope specs wrap them in a
construction ("base(D:2,2,2)", "product(independence(A:2),base(A:3))").
Every instance description emitted by the verification suites parses
back through this grammar.
"""

import csv
import io as _io
import json

from .constructors import (
    base_polytope,
    bundles_with_path_graph,
    chain_polytope,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    double_bundle_with_two_paths_graph,
    edge_polytope,
    glued_cliques_graph,
    independence_polytope,
    order_polytope,
    parallel_bundle_graph,
    product_polytope,
    stable_set_polytope,
    triangle_bundle_graph,
    zigzag_chain_poset,
)
from .equivalence import EquivalenceWitness
from .geometry import HalfspaceSystem, LatticePolytope
from .graphs import Multigraph
from .matroids import Matroid, uniform_matroid
from .posets import Poset


class SpecError(ValueError):
    """An inline description that does not parse."""


# --------------------------------------------------------------- files


def object_to_dict(obj):
    if isinstance(obj, Multigraph):
        return {
            "kind": "graph",
            "vertex_count": obj.vertex_count,
            "edges": [list(e) for e in obj.edges],
        }
    if isinstance(obj, Matroid):
        bases = sorted(sorted(_mask_bits(b)) for b in obj.bases)
        return {"kind": "matroid", "ground_size": obj.ground_size, "bases": bases}
    if isinstance(obj, Poset):
        data = {
            "kind": "poset",
            "element_count": obj.element_count,
            "covers": [list(c) for c in obj.covers],
        }
        default = tuple(str(i) for i in range(obj.element_count))
        if obj.labels != default:
            data["labels"] = list(obj.labels)
        return data
    if isinstance(obj, LatticePolytope):
        return {
            "kind": "polytope",
            "ambient_dim": obj.ambient_dim,
            "vertices": [list(v) for v in obj.vertices],
        }
    if isinstance(obj, HalfspaceSystem):
        return {"kind": "halfspaces", **obj.to_dict()}
    if isinstance(obj, EquivalenceWitness):
        return {"kind": "witness", **obj.to_dict()}
    raise SpecError(f"no file format for {type(obj).__name__}")


def object_from_dict(data):
    kind = data.get("kind")
    if kind == "graph":
        return Multigraph(
            data["vertex_count"], [tuple(e) for e in data["edges"]]
        )
    if kind == "matroid":
        return Matroid.from_bases(
            data["ground_size"], [frozenset(b) for b in data["bases"]]
        )
    if kind == "poset":
        return Poset(
            data["element_count"],
            [tuple(c) for c in data["covers"]],
            labels=tuple(data["labels"]) if "labels" in data else None,
        )
    if kind == "polytope":
        return LatticePolytope.from_points(
            [tuple(v) for v in data["vertices"]]
        )
    if kind == "halfspaces":
        return HalfspaceSystem.from_dict(data)
    if kind == "witness":
        return EquivalenceWitness.from_dict(data)
    raise SpecError(f"unrecognized file kind {kind!r}")


def save_object(obj, path):
    with open(path, "w") as fh:
        json.dump(object_to_dict(obj), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_object(path):
    with open(path) as fh:
        data = json.load(fh)
    return object_from_dict(data)


def _mask_bits(mask):
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


# ------------------------------------------------------- family specs


def _ints(text, context):
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise SpecError(f"expected integers in {context!r}, got {text!r}")


def _one(text, context):
    values = _ints(text, context)
    if len(values) != 1:
        raise SpecError(f"expected one integer in {context!r}, got {text!r}")
    return values[0]


def _sizes_and_path(rest, spec):
    sizes_txt, sep, path_txt = rest.partition(";p=")
    if not sep:
        raise SpecError(f"missing ';p=' in {spec!r}")
    sizes = _ints(sizes_txt, spec)
    path = _ints(path_txt, spec)
    if len(path) != 1:
        raise SpecError(f"expected one path length in {spec!r}")
    return sizes, path[0]


def parse_family_spec(spec):
    """A graph, matroid, or poset from its inline description."""
    spec = spec.strip()
    if spec.startswith("U:"):
        parts = spec[2:].split("|")
        if not all(p for p in parts):
            raise SpecError(f"empty part in union {spec!r}")
        return _union([parse_family_spec(p) for p in parts], spec)
    head, sep, rest = spec.partition(":")
    if not sep:
        raise SpecError(f"missing ':' in {spec!r}")
    if head == "A":
        params = _ints(rest, spec)
        if len(params) != 1:
            raise SpecError(f"expected one bundle size in {spec!r}")
        return parallel_bundle_graph(params[0])
    if head == "B":
        sizes, path = _sizes_and_path(rest, spec)
        return bundles_with_path_graph(tuple(sizes), path)
    if head == "C":
        heads_txt, sep, paths_txt = rest.partition(";p=")
        if not sep:
            raise SpecError(f"missing ';p=' in {spec!r}")
        s_t = _ints(heads_txt, spec)
        p_txt, sep, q_txt = paths_txt.partition(",q=")
        if not sep:
            raise SpecError(f"missing ',q=' in {spec!r}")
        if len(s_t) != 2:
            raise SpecError(f"expected two bundle sizes in {spec!r}")
        p = _one(p_txt, spec)
        q = _one(q_txt, spec)
        return double_bundle_with_two_paths_graph(s_t[0], s_t[1], p, q)
    if head == "D":
        sides = _ints(rest, spec)
        if len(sides) != 3:
            raise SpecError(f"expected three bundle sizes in {spec!r}")
        return triangle_bundle_graph(*sides)
    if head == "G":
        sizes, path = _sizes_and_path(rest, spec)
        return glued_cliques_graph(sizes, path)
    if head == "Cycle":
        params = _ints(rest, spec)
        if len(params) != 1:
            raise SpecError(f"expected one cycle length in {spec!r}")
        return cycle_graph(params[0])
    if head == "K":
        params = _ints(rest, spec)
        if len(params) != 1:
            raise SpecError(f"expected one vertex count in {spec!r}")
        return complete_graph(params[0])
    if head == "KM":
        return complete_multipartite_graph(_ints(rest, spec))
    if head == "Edges":
        count_txt, sep, edges_txt = rest.partition(":")
        if not sep:
            raise SpecError(f"missing vertex count in {spec!r}")
        n = _one(count_txt, spec)
        edges = []
        for token in filter(None, edges_txt.split(",")):
            ends = _ints(token.replace("-", ","), spec)
            if len(ends) != 2:
                raise SpecError(f"bad edge {token!r} in {spec!r}")
            edges.append(tuple(ends))
        return Multigraph(n, edges)
    if head == "Uniform":
        params = _ints(rest, spec)
        if len(params) != 2:
            raise SpecError(f"expected rank,size in {spec!r}")
        return uniform_matroid(*params)
    if head == "Bases":
        count_txt, sep, bases_txt = rest.partition(":")
        if not sep:
            raise SpecError(f"missing ground size in {spec!r}")
        n = _one(count_txt, spec)
        bases = [
            frozenset(_ints(token.replace("-", ","), spec))
            for token in filter(None, bases_txt.split(","))
        ]
        if not bases:
            raise SpecError(f"no bases in {spec!r}")
        return Matroid.from_bases(n, bases)
    if head == "W":
        params = _ints(rest, spec)
        if len(params) != 4:
            raise SpecError(f"expected four chain lengths in {spec!r}")
        return zigzag_chain_poset(*params)
    if head == "PosetCovers":
        count_txt, sep, covers_txt = rest.partition(":")
        if not sep:
            raise SpecError(f"missing element count in {spec!r}")
        n = _one(count_txt, spec)
        covers = []
        for token in filter(None, covers_txt.split(",")):
            ends = _ints(token.replace("<", ","), spec)
            if len(ends) != 2:
                raise SpecError(f"bad cover {token!r} in {spec!r}")
            covers.append(tuple(ends))
        return Poset(n, covers)
    raise SpecError(f"unrecognized family spec {spec!r}")


def _union(parts, spec):
    if all(isinstance(p, Multigraph) for p in parts):
        total = sum(p.vertex_count for p in parts)
        edges = []
        shift = 0
        for p in parts:
            edges.extend((u + shift, v + shift) for u, v in p.edges)
            shift += p.vertex_count
        return Multigraph(total, edges)
    matroids = []
    for p in parts:
        if isinstance(p, Multigraph):
            matroids.append(p.graphic_matroid())
        elif isinstance(p, Matroid):
            matroids.append(p)
        else:
            raise SpecError(f"cannot union a poset in {spec!r}")
    combined = matroids[0]
    for m in matroids[1:]:
        combined = combined.direct_sum(m)
    return combined


# ----------------------------------------------------- polytope specs


_POLYTOPE_KINDS = {
    "independence",
    "base",
    "edge",
    "stable",
    "order",
    "chain",
    "product",
}


def _as_matroid(inner, spec):
    if isinstance(inner, Multigraph):
        return inner.graphic_matroid()
    if isinstance(inner, Matroid):
        return inner
    raise SpecError(f"{spec!r} needs a graph or matroid inside")


def _as_graph(inner, spec):
    if isinstance(inner, Multigraph):
        return inner
    raise SpecError(f"{spec!r} needs a graph inside")


def _as_poset(inner, spec):
    if isinstance(inner, Poset):
        return inner
    raise SpecError(f"{spec!r} needs a poset inside")


def _split_top_level(text, spec):
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpecError(f"unbalanced parentheses in {spec!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise SpecError(f"unbalanced parentheses in {spec!r}")
    parts.append("".join(current))
    return parts


def parse_polytope_spec(spec):
    """A lattice polytope from its inline description."""
    text = spec.strip()
    head, sep, rest = text.partition("(")
    if not sep or not text.endswith(")"):
        raise SpecError(f"expected KIND(...) in {spec!r}")
    head = head.strip()
    inner_txt = rest[:-1]
    if head not in _POLYTOPE_KINDS:
        raise SpecError(
            f"unknown polytope kind {head!r} in {spec!r}; "
            f"expected one of {sorted(_POLYTOPE_KINDS)}"
        )
    if head == "product":
        parts = _split_top_level(inner_txt, spec)
        if len(parts) < 2:
            raise SpecError(f"product needs at least two factors in {spec!r}")
        polytope = parse_polytope_spec(parts[0])
        for part in parts[1:]:
            polytope = product_polytope(polytope, parse_polytope_spec(part))
        return polytope
    inner = parse_family_spec(inner_txt)
    if head == "independence":
        return independence_polytope(_as_matroid(inner, spec))
    if head == "base":
        return base_polytope(_as_matroid(inner, spec))
    if head == "edge":
        return edge_polytope(_as_graph(inner, spec))
    if head == "stable":
        return stable_set_polytope(_as_graph(inner, spec))
    if head == "order":
        return order_polytope(_as_poset(inner, spec))
    return chain_polytope(_as_poset(inner, spec))


# ------------------------------------------------------------ reports


def _flatten(value):
    if isinstance(value, (list, tuple)):
        return "; ".join(_flatten(v) for v in value)
    return str(value)


def render_record(record, fmt):
    """One key-value record (a compute or equiv report) in the chosen
    format."""
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        out = _io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["field", "value"])
        for key, value in record.items():
            writer.writerow([key, _flatten(value)])
        return out.getvalue()
    width = max(len(k) for k in record)
    lines = [f"{k.ljust(width)}  {_flatten(v)}" for k, v in record.items()]
    return "\n".join(lines) + "\n"


def suite_result_rows(results):
    return [
        {
            "suite_id": r.suite_id,
            "status": "pass" if r.passed else "FAIL",
            "instances_checked": r.instances_checked,
            "failures": len(r.failures),
            "runtime_seconds": round(r.runtime, 3),
        }
        for r in results
    ]


def render_suite_results(results, fmt):
    """A suite-result table plus one line per failure."""
    if fmt == "json":
        return (
            json.dumps([r.to_dict() for r in results], indent=2, sort_keys=True)
            + "\n"
        )
    rows = suite_result_rows(results)
    if not rows:
        return ""
    if fmt == "csv":
        out = _io.StringIO()
        writer = csv.writer(out)
        writer.writerow(list(rows[0]) + ["failure", "expected", "observed"])
        for row, result in zip(rows, results):
            if result.failures:
                for desc, expected, observed in result.failures:
                    writer.writerow(list(row.values()) + [desc, expected, observed])
            else:
                writer.writerow(list(row.values()) + ["", "", ""])
        return out.getvalue()
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in rows[0]}
    header = "  ".join(k.ljust(widths[k]) for k in rows[0])
    lines = [header, "-" * len(header)]
    for row, result in zip(rows, results):
        lines.append("  ".join(str(row[k]).ljust(widths[k]) for k in row))
        for desc, expected, observed in result.failures:
            lines.append(f"    failed: {desc}")
            lines.append(f"      expected: {expected}")
            lines.append(f"      observed: {observed}")
    return "\n".join(lines) + "\n"
