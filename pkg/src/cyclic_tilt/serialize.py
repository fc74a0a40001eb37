"""JSON (and DOT) encodings for the package's value types.

All collections are emitted in lexicographic order so that identical
inputs give byte-identical files.
"""
import json
from fractions import Fraction

from .cluster import ClusterObject, ExchangeAngles
from .complex import SimplicialComplex
from .errors import InvalidArgument
from .mutation import FlipGraph
from .reptheory import ExchangeSequence, ModuleIndex
from .triangulation import FaceSet, Triangulation
from .tropical import Lamination


def dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _tuples(items):
    return [list(t) for t in sorted(items)]


def _with_first(d, first):
    if first != 1:
        d["first"] = first
    return d


def triangulation_to_json(t):
    return _with_first({"m": t.m, "d": t.d, "cells": _tuples(t.cells)}, t.first)


def faceset_to_json(x):
    return _with_first({"m": x.m, "d": x.d, "faces": _tuples(x.faces)}, x.first)


def triangulation_from_json(obj):
    try:
        return Triangulation(obj["m"], obj["d"], [tuple(c) for c in obj["cells"]], obj.get("first", 1))
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed triangulation: {exc}") from exc


def faceset_from_json(obj):
    try:
        return FaceSet(obj["m"], obj["d"], [tuple(f) for f in obj["faces"]], obj.get("first", 1))
    except (KeyError, TypeError) as exc:
        raise InvalidArgument(f"malformed face set: {exc}") from exc


def flip_graph_to_json(g):
    return {
        "nodes": [faceset_to_json(x) for x in g.nodes],
        "edges": [[i, j, {"out": list(o), "in": list(n)}] for i, j, o, n in g.edges],
    }


def flip_graph_from_json(obj):
    nodes = [faceset_from_json(x) for x in obj["nodes"]]
    edges = [(i, j, tuple(lab["out"]), tuple(lab["in"])) for i, j, lab in obj["edges"]]
    return FlipGraph(nodes, edges)


def tuple_label(t):
    return ".".join(str(v) for v in t)


def flip_graph_to_dot(g, name="flips"):
    lines = [f"graph {name} {{"]
    for i in range(len(g.nodes)):
        lines.append(f'  {i} [label="{i}"];')
    for i, j, o, n in g.edges:
        lines.append(f'  {i} -- {j} [label="{tuple_label(o)}→{tuple_label(n)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def module_index_to_json(i):
    return {"n": i.n, "d": i.d, "tuple": list(i.tuple)}


def module_index_from_json(obj):
    return ModuleIndex(obj["n"], obj["d"], tuple(obj["tuple"]))


def exchange_sequence_to_json(s):
    return {
        "n": s.source.n,
        "d": s.source.d,
        "source": list(s.source.tuple),
        "target": list(s.target.tuple),
        "layers": [[list(u.tuple) for u in layer] for layer in s.layers],
    }


def exchange_sequence_from_json(obj):
    n, d = obj["n"], obj["d"]
    return ExchangeSequence(
        ModuleIndex(n, d, tuple(obj["source"])),
        ModuleIndex(n, d, tuple(obj["target"])),
        tuple(tuple(ModuleIndex(n, d, tuple(u)) for u in layer) for layer in obj["layers"]),
    )


def angles_to_json(a):
    return {
        "source": list(a.source.tuple),
        "target": list(a.target.tuple),
        "E": [[list(o.tuple) for o in layer] for layer in a.E],
        "F": [[list(o.tuple) for o in layer] for layer in a.F],
    }


def angles_from_json(obj, n):
    """Decode angle JSON; ``n`` is not stored, d is read off the tuples."""
    d = len(obj["source"]) - 1

    def objs(layers):
        return tuple(tuple(ClusterObject(n, d, tuple(t)) for t in layer) for layer in layers)

    return ExchangeAngles(
        ClusterObject(n, d, tuple(obj["source"])),
        ClusterObject(n, d, tuple(obj["target"])),
        objs(obj["E"]),
        objs(obj["F"]),
    )


def _rational(v):
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def lamination_to_json(lam):
    return {"m": lam.m, "d": lam.d, "leaves": [[_rational(v) for v in leaf] for leaf in lam.leaves]}


def lamination_from_json(obj):
    try:
        leaves = [tuple(Fraction(v) for v in leaf) for leaf in obj["leaves"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidArgument(f"bad rational in lamination: {exc}") from exc
    return Lamination(obj["m"], obj["d"], leaves)


def complex_to_json(c):
    return {"vertices": [list(v) for v in c.vertices], "facets": [list(f) for f in c.facets]}


def complex_from_json(obj):
    return SimplicialComplex([tuple(v) for v in obj["vertices"]], [tuple(f) for f in obj["facets"]])
