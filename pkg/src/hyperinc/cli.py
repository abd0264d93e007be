"""Command-line front end.

Subcommands: rank, generate, units, contract, verify, find, spectra.  Every
report number is an exact fraction string; ``--json`` switches the report to
JSON.  The exit code is 0 only when every assertion the command makes
(rank identities, certificate verdicts, eigenpair checks) holds; domain
errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import HyperincError, InstanceTooLarge, InvalidParameters
from .formats import (
    certificate_from_json,
    certificate_to_json,
    format_fraction,
    load_certificate,
    load_hypergraph,
    load_weighting,
    serialize_hypergraph_json,
    serialize_hypergraph_text,
)
from .generators import random_hypergraph
from .hypergraph import (
    are_isomorphic,
    compute_units,
    unit_contraction,
    uniform_cycle,
)
from .kernels import (
    ALL_KINDS,
    find_certificates_exhaustive,
    nullity_decomposition,
    verify_certificate,
)
from .linalg import (
    edge_vertex_incidence,
    rank_and_nullspace,
    vertex_edge_incidence,
)
from .spectra import (
    banerjee_weighting,
    predict_unit_eigenpairs,
    unit_weighting,
    weighted_adjacency,
)


def _vector_json(vec) -> dict[str, str]:
    from .hypergraph import label_sort_key

    return {
        k: format_fraction(v)
        for k, v in sorted(vec.entries.items(), key=lambda kv: label_sort_key(kv[0]))
    }


def _basis_json(basis) -> list[dict[str, str]]:
    return [_vector_json(v) for v in basis.vectors]


# -- handlers -------------------------------------------------------------------


def cmd_rank(args) -> dict:
    h = load_hypergraph(args.file)
    b = edge_vertex_incidence(h)
    i = vertex_edge_incidence(h)
    ns_b = rank_and_nullspace(b)
    ns_i = rank_and_nullspace(i)
    failures = []
    if ns_b.rank != ns_i.rank:
        failures.append("rank(B_H) != rank(I_H)")
    return {
        "command": "rank",
        "file": args.file,
        "vertices": h.n_vertices,
        "edges": h.n_edges,
        "rank": str(ns_b.rank),
        "nullity": str(ns_b.nullity),
        "kernel_basis": _basis_json(ns_b),
        "transpose_rank": str(ns_i.rank),
        "transpose_nullity": str(ns_i.nullity),
        "transpose_kernel_basis": _basis_json(ns_i),
        "failures": failures,
    }


def render_rank(report) -> list[str]:
    lines = [
        f"file: {report['file']}  ({report['vertices']} vertices, {report['edges']} edges)",
        f"rank(B_H) = {report['rank']}   nullity(B_H) = {report['nullity']}",
    ]
    for vec in report["kernel_basis"]:
        lines.append("  ker B_H: " + _render_vector(vec))
    lines.append(
        f"rank(I_H) = {report['transpose_rank']}   nullity(I_H) = {report['transpose_nullity']}"
    )
    for vec in report["transpose_kernel_basis"]:
        lines.append("  ker I_H: " + _render_vector(vec))
    return lines


def cmd_generate(args) -> dict:
    try:
        params = [int(x) for x in args.params]
    except ValueError:
        raise InvalidParameters(f"generator parameters must be integers: {args.params}") from None
    if args.kind == "cycle":
        if len(params) != 2:
            raise InvalidParameters("generate cycle needs N and K")
        h = uniform_cycle(*params)
    elif args.kind == "random":
        if len(params) != 2:
            raise InvalidParameters("generate random needs N (vertices) and M (edges)")
        h = random_hypergraph(params[0], params[1], args.max_size, args.seed)
    else:
        raise InvalidParameters(f"unknown generator {args.kind!r}")
    content = serialize_hypergraph_json(h) if args.json else serialize_hypergraph_text(h)
    return {"command": "generate", "content": content, "output": args.output}


def cmd_units(args) -> dict:
    h = load_hypergraph(args.file)
    partition = compute_units(h)
    units = [
        {
            "members": list(unit.members),
            "generator": sorted(
                (h.edge_labels[i] for i in unit.generator), key=h.edge_index
            ),
        }
        for unit in partition.units
    ]
    return {
        "command": "units",
        "file": args.file,
        "count": len(partition),
        "units": units,
        "failures": [],
    }


def render_units(report) -> list[str]:
    lines = [f"{report['count']} units in {report['file']}"]
    for unit in report["units"]:
        members = ",".join(unit["members"])
        gen = " ".join(unit["generator"]) if unit["generator"] else "(empty star)"
        lines.append(f"  {{{members}}}  generator: {gen}")
    return lines


def cmd_contract(args) -> dict:
    h = load_hypergraph(args.file)
    contracted, vertex_map, edge_map = unit_contraction(h)
    decomposition = nullity_decomposition(h)
    failures = []
    if decomposition.rank != decomposition.contraction_rank:
        failures.append("rank(B_H) != rank of the contraction")
    if decomposition.nullity != decomposition.contraction_nullity + decomposition.units_deficiency:
        failures.append("nullity decomposition identity failed")
    iso = None
    if decomposition.units_deficiency == 0:
        try:
            iso = are_isomorphic(h, contracted) is not None
        except InstanceTooLarge:
            iso = None
    report = {
        "command": "contract",
        "file": args.file,
        "rank": str(decomposition.rank),
        "contraction_rank": str(decomposition.contraction_rank),
        "nullity": str(decomposition.nullity),
        "contraction_nullity": str(decomposition.contraction_nullity),
        "units": str(decomposition.n_units),
        "units_deficiency": str(decomposition.units_deficiency),
        "vertex_map": {v: vertex_map[v] for v in h.vertices},
        "edge_map": {h.edge_labels[i]: contracted.edge_labels[j] for i, j in edge_map.items()},
        "contracted_file": serialize_hypergraph_json(contracted)
        if args.json
        else serialize_hypergraph_text(contracted),
        "failures": failures,
    }
    if iso is not None:
        report["non_contractible_isomorphic"] = iso
        if not iso:
            failures.append("non-contractible hypergraph not isomorphic to its contraction")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(serialize_hypergraph_text(contracted))
    return report


def render_contract(report) -> list[str]:
    lines = [
        f"file: {report['file']}",
        f"units: {report['units']}  (vertex surplus over units: {report['units_deficiency']})",
        f"rank(B_H) = {report['rank']} = {report['contraction_rank']} = rank of contraction",
        f"nullity(B_H) = {report['nullity']} = {report['contraction_nullity']}"
        f" + {report['units_deficiency']}",
    ]
    if "non_contractible_isomorphic" in report:
        verdict = "yes" if report["non_contractible_isomorphic"] else "NO"
        lines.append(f"non-contractible; isomorphic to contraction: {verdict}")
    lines.append("contracted hypergraph:")
    lines.extend("  " + line for line in report["contracted_file"].rstrip().splitlines())
    return lines


def cmd_verify(args) -> dict:
    h = load_hypergraph(args.file)
    if args.certificate == "-":
        data = json.load(sys.stdin)
        cert = certificate_from_json(h, data)
    else:
        cert = load_certificate(h, args.certificate)
    check = verify_certificate(h, cert)
    failures = [] if check.valid else ["certificate is not in the kernel"]
    return {
        "command": "verify",
        "file": args.file,
        "certificate": certificate_to_json(cert, check),
        "failures": failures,
    }


def render_verify(report) -> list[str]:
    cert = report["certificate"]
    lines = [f"kind: {cert['kind']}  (side {cert['side']})"]
    for name, members in cert.get("sets", {}).items():
        lines.append(f"  {name} = {{{','.join(members)}}}")
    if "ratio" in cert:
        lines.append(f"  ratio = {cert['ratio']}")
    if "order" in cert:
        lines.append(f"  root order = {cert['order']}, power = {cert['power']}")
    lines.append("valid: " + ("yes" if cert["valid"] else "NO"))
    if not cert["valid"]:
        nonzero = {k: v for k, v in cert["residual"].items() if v != "0"}
        lines.append(f"non-zero residual entries: {nonzero}")
    return lines


def cmd_find(args) -> dict:
    h = load_hypergraph(args.file)
    certs = find_certificates_exhaustive(h, args.kind, args.max_ground)
    failures = []
    serialized = []
    for cert in certs:
        check = verify_certificate(h, cert)
        if not check.valid:
            failures.append(f"found certificate failed verification: {cert}")
        serialized.append(certificate_to_json(cert, check))
    return {
        "command": "find",
        "file": args.file,
        "kind": args.kind,
        "count": len(certs),
        "certificates": serialized,
        "failures": failures,
    }


def render_find(report) -> list[str]:
    lines = [
        f"{report['count']} certificates of kind {report['kind']} in {report['file']}"
    ]
    for i, cert in enumerate(report["certificates"], start=1):
        parts = []
        for name, members in cert.get("sets", {}).items():
            parts.append(f"{name}={{{','.join(members)}}}")
        if "ratio" in cert:
            parts.append(f"r={cert['ratio']}")
        flag = "" if cert["valid"] else "  INVALID"
        lines.append(f"  {i}. " + " ".join(parts) + flag)
    return lines


def cmd_spectra(args) -> dict:
    h = load_hypergraph(args.file)
    if args.weighting == "unit":
        w = unit_weighting(h)
    elif args.weighting == "banerjee":
        w = banerjee_weighting(h)
    else:
        w = load_weighting(h, args.weighting)
    pairs = predict_unit_eigenpairs(h, w)
    failures = [
        f"eigenpair for class {{{','.join(p.members)}}} failed exact verification"
        for p in pairs
        if not p.verified
    ]
    report = {
        "command": "spectra",
        "file": args.file,
        "weighting": w.name,
        "weights": {
            name: format_fraction(w.weight(i)) for i, name in enumerate(h.edge_labels)
        },
        "eigenpairs": [
            {
                "eigenvalue": format_fraction(p.eigenvalue),
                "members": list(p.members),
                "multiplicity_lower_bound": p.multiplicity_lower_bound,
                "verified": p.verified,
                "eigenvectors": [_vector_json(x) for x in p.eigenvectors],
            }
            for p in pairs
        ],
        "failures": failures,
    }
    if args.matrix:
        adjacency = weighted_adjacency(h, w).matrix
        report["adjacency"] = {
            "labels": list(adjacency.row_labels),
            "rows": [[format_fraction(x) for x in row] for row in adjacency.entries],
        }
    return report


def render_spectra(report) -> list[str]:
    lines = [f"weighting: {report['weighting']}"]
    if "adjacency" in report:
        labels = report["adjacency"]["labels"]
        lines.append("adjacency over " + " ".join(labels))
        for label, row in zip(labels, report["adjacency"]["rows"]):
            lines.append(f"  {label}: " + " ".join(row))
    if not report["eigenpairs"]:
        lines.append("no multi-vertex units: no predicted eigenpairs")
    for p in report["eigenpairs"]:
        verdict = "verified" if p["verified"] else "FAILED"
        lines.append(
            f"eigenvalue {p['eigenvalue']}  class {{{','.join(p['members'])}}}"
            f"  multiplicity >= {p['multiplicity_lower_bound']}  {verdict}"
        )
    return lines


def _render_vector(vec: dict[str, str]) -> str:
    inner = ", ".join(f"{k}: {v}" for k, v in vec.items())
    return "{" + inner + "}"


_RENDERERS = {
    "rank": render_rank,
    "units": render_units,
    "contract": render_contract,
    "verify": render_verify,
    "find": render_find,
    "spectra": render_spectra,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperinc",
        description="Exact rank, null-space certificates, units, and adjacency "
        "eigenpairs of hypergraph incidence matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("rank", help="rank, nullity, and kernel bases of both incidence matrices")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("generate", help="emit a hypergraph file (cycle or seeded random)")
    p.add_argument("kind", choices=["cycle", "random"])
    p.add_argument("params", nargs="+", help="cycle: N K; random: N M")
    p.add_argument("--max-size", type=int, default=None, help="random: largest edge size")
    p.add_argument("--seed", type=int, default=0, help="random: RNG seed")
    p.add_argument("-o", "--output", default=None, help="write here instead of stdout")
    add_json(p)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("units", help="list units and their generator edge sets")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=cmd_units)

    p = sub.add_parser("contract", help="unit contraction with rank/nullity identities")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None, help="also write the contracted hypergraph here")
    add_json(p)
    p.set_defaults(handler=cmd_contract)

    p = sub.add_parser("verify", help="verify a kernel certificate from JSON")
    p.add_argument("file")
    p.add_argument("--certificate", required=True, help="certificate JSON path, or - for stdin")
    add_json(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("find", help="exhaustively enumerate certificates of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=sorted(ALL_KINDS))
    p.add_argument("--max-ground", type=int, default=None, help="ground-set size bound")
    add_json(p)
    p.set_defaults(handler=cmd_find)

    p = sub.add_parser("spectra", help="unit-derived adjacency eigenpairs, exactly verified")
    p.add_argument("file")
    p.add_argument(
        "--weighting",
        default="unit",
        help="'unit', 'banerjee', or a JSON weight file of exact fractions",
    )
    p.add_argument("--matrix", action="store_true", help="include the adjacency matrix")
    add_json(p)
    p.set_defaults(handler=cmd_spectra)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except HyperincError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2

    if report["command"] == "generate":
        if report["output"]:
            with open(report["output"], "w", encoding="utf-8") as fh:
                fh.write(report["content"])
        else:
            sys.stdout.write(report["content"])
        return 0

    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in _RENDERERS[report["command"]](report):
            print(line)
        if report["failures"]:
            print("FAILURES:")
            for failure in report["failures"]:
                print(f"  - {failure}")
    return 0 if not report["failures"] else 1


if __name__ == "__main__":
    sys.exit(main())
