"""Hypergraph, certificate, and weight file formats.

Two hypergraph file forms share one canonical internal representation:

* JSON: ``{"vertices": ["1", "2"], "edges": {"e1": ["1", "2"]}}``
* text: one ``name: v1 v2 v3`` line per edge, ``#`` comments and blank lines
  ignored, plus an optional ``vertices:`` header naming the full vertex set
  (needed only when some vertex lies in no edge).

Serialization is canonical (sorted vertices, sorted edge members, edges in
declaration order), so parse -> serialize -> parse is the identity.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .errors import BadWeightFile, ParseError
from .hypergraph import Hypergraph, build_hypergraph, canonical_labels
from .kernels import (
    GENERAL_COMBINATION,
    ROOT_OF_UNITY_CYCLE,
    UNIT_PAIR,
    EQUAL_EDGE_PARTITION,
    EQUAL_VERTEX_PARTITION,
    RATIO_EDGE_PARTITION,
    RATIO_VERTEX_PARTITION,
    THREE_SET_RELATION,
    KernelCertificate,
    dual_side_certificate,
    equal_partition_certificate,
    general_combination_certificate,
    ratio_partition_certificate,
    root_of_unity_certificate,
    three_set_certificate,
    unit_pair_certificate,
)
from .spectra import EdgeWeighting, custom_weighting


def format_fraction(x) -> str:
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad fraction {text!r}: {exc}") from None


# -- hypergraph files ---------------------------------------------------------


def parse_hypergraph_text(text: str) -> Hypergraph:
    vertices: Optional[list[str]] = None
    edges: list[list[str]] = []
    names: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'name: v1 v2 ...'", line=lineno)
        name, _, rest = line.partition(":")
        name = name.strip()
        members = rest.split()
        if not name:
            raise ParseError("missing name before ':'", line=lineno)
        if name == "vertices":
            if vertices is not None:
                raise ParseError("duplicate 'vertices:' header", line=lineno)
            vertices = members
            continue
        if name in names:
            raise ParseError(f"duplicate edge name {name!r}", line=lineno)
        if not members:
            raise ParseError(f"edge {name!r} has no vertices", line=lineno)
        names.append(name)
        edges.append(members)
    inferred = {v for e in edges for v in e}
    if vertices is None:
        vertices = sorted(inferred)
    else:
        missing = inferred - set(vertices)
        if missing:
            raise ParseError(
                f"edges use vertices missing from the header: {sorted(missing)}"
            )
    if not vertices:
        raise ParseError("no vertices found")
    return build_hypergraph(vertices, edges, names)


def parse_hypergraph_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}", line=exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("expected an object with 'vertices' and 'edges'")
    edges_obj = data["edges"]
    if not isinstance(edges_obj, dict):
        raise ParseError("'edges' must map edge names to vertex lists")
    names = list(edges_obj)
    for name in names:
        if not isinstance(edges_obj[name], list):
            raise ParseError(f"edge {name!r} must be a list of vertex labels")
    edges = [edges_obj[n] for n in names]
    vertices = data.get("vertices")
    if vertices is None:
        vertices = sorted({str(v) for e in edges for v in e})
    return build_hypergraph(vertices, edges, names)


def parse_hypergraph(text: str) -> Hypergraph:
    """Auto-detect the JSON or text form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_hypergraph_json(text)
    return parse_hypergraph_text(text)


def load_hypergraph(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hypergraph(fh.read())


def serialize_hypergraph_text(h: Hypergraph) -> str:
    lines = ["vertices: " + " ".join(h.vertices)]
    for name, e in zip(h.edge_labels, h.edges):
        lines.append(f"{name}: " + " ".join(canonical_labels(e)))
    return "\n".join(lines) + "\n"


def serialize_hypergraph_json(h: Hypergraph) -> str:
    data = {
        "vertices": list(h.vertices),
        "edges": {
            name: list(canonical_labels(e)) for name, e in zip(h.edge_labels, h.edges)
        },
    }
    return json.dumps(data, indent=2) + "\n"


# -- certificates ---------------------------------------------------------------


def certificate_to_json(cert: KernelCertificate, check=None) -> dict:
    """JSON-ready report: kind, sets, coefficients, and (optionally) the
    verification verdict with its residual."""
    data: dict = {"kind": cert.kind, "side": cert.side}
    if cert.kind == ROOT_OF_UNITY_CYCLE:
        data["order"] = cert.order
        data["power"] = cert.power
    else:
        data["sets"] = {name: list(members) for name, members in cert.sets}
        data["coefficients"] = {
            name: format_fraction(c) for (name, _), c in zip(cert.sets, cert.coefficients)
        }
        if cert.ratio is not None:
            data["ratio"] = format_fraction(cert.ratio)
    if check is not None:
        data["valid"] = check.valid
        data["residual"] = {k: str(v) for k, v in check.residual.items()}
    return data


def certificate_from_json(h: Hypergraph, data: dict) -> KernelCertificate:
    """Rebuild a certificate from its JSON form, resolving labels against h."""
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("certificate JSON needs a 'kind' field")
    kind = data["kind"]
    sets = data.get("sets", {})

    def need(name: str) -> list[str]:
        if name not in sets:
            raise ParseError(f"certificate kind {kind!r} needs set {name!r}")
        return [str(x) for x in sets[name]]

    if kind == EQUAL_EDGE_PARTITION:
        return equal_partition_certificate(h, need("U"), need("V"))
    if kind == RATIO_EDGE_PARTITION:
        return ratio_partition_certificate(h, need("U"), need("V"), parse_fraction(data.get("ratio", "1")))
    if kind == THREE_SET_RELATION:
        return three_set_certificate(
            h, sets.get("U", []), sets.get("V", []), need("W"), parse_fraction(data.get("ratio", "1"))
        )
    if kind == GENERAL_COMBINATION:
        parts = data.get("parts")
        pairs = []
        if parts is not None:
            for item in parts:
                if isinstance(item, dict):
                    pairs.append((item["set"], parse_fraction(item["coefficient"])))
                else:
                    members, coeff = item
                    pairs.append((members, parse_fraction(coeff)))
        else:
            coefficients = data.get("coefficients")
            if not sets or coefficients is None:
                raise ParseError(
                    "general combination needs 'parts' or 'sets' with 'coefficients'"
                )
            for name, members in sets.items():
                if name not in coefficients:
                    raise ParseError(f"missing coefficient for set {name!r}")
                pairs.append((members, parse_fraction(coefficients[name])))
        return general_combination_certificate(h, pairs)
    if kind == UNIT_PAIR:
        u = data.get("u") or (need("u")[0] if "u" in sets else None)
        v = data.get("v") or (need("v")[0] if "v" in sets else None)
        if u is None or v is None:
            raise ParseError("unit pair needs 'u' and 'v'")
        return unit_pair_certificate(h, u, v)
    if kind == ROOT_OF_UNITY_CYCLE:
        try:
            return root_of_unity_certificate(h, int(data["order"]), int(data["power"]))
        except KeyError as exc:
            raise ParseError(f"root-of-unity certificate needs {exc}") from None
    if kind in (EQUAL_VERTEX_PARTITION, RATIO_VERTEX_PARTITION):
        r = parse_fraction(data.get("ratio", "1"))
        return dual_side_certificate(h, need("E"), need("F"), r)
    raise ParseError(f"unknown certificate kind {kind!r}")


def load_certificate(h: Hypergraph, path: str) -> KernelCertificate:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad certificate JSON: {exc}", line=exc.lineno) from None
    return certificate_from_json(h, data)


# -- weight files -------------------------------------------------------------------


def load_weighting(h: Hypergraph, path: str) -> EdgeWeighting:
    """JSON mapping edge name -> positive fraction string (or number)."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise BadWeightFile(f"bad JSON: {exc}") from None
    if not isinstance(data, dict):
        raise BadWeightFile("weight file must be a JSON object of edge -> weight")
    weights = {}
    for name, value in data.items():
        if isinstance(value, float):
            raise BadWeightFile(
                f"weight for {name!r} is a float; use an exact fraction string"
            )
        try:
            w = Fraction(str(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise BadWeightFile(f"bad weight for {name!r}: {exc}") from None
        if w <= 0:
            raise BadWeightFile(f"weight for {name!r} must be positive")
        weights[name] = w
    try:
        return custom_weighting(h, weights)
    except Exception as exc:
        raise BadWeightFile(str(exc)) from None
