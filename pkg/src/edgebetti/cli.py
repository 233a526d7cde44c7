"""Command-line front end.

Exit codes: 0 success, 1 check violations, 2 usage or input errors,
3 graph above the vertex cap (override with ``--max-n``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import constructions
from .betti import (
    DEFAULT_MAX_N,
    CapExceeded,
    default_threads,
    hochster_table,
    jump_sequence,
    regularity_and_pd,
)
from .complexes import stanley_reisner_complex
from .graphs import (
    Graph,
    complement,
    induced_matching_number,
    is_induced_c4_free,
    matching_number,
    min_induced_cycle_length,
)
from .homology import FieldSpec, reduced_homology_dims
from .io import FormatError, parse_facets, read_graph
from . import verify

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CHECKS = ("small-graphs", "eight-vertex", "sum-formulas", "product-law", "field-agreement", "jump-bound", "construction")


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", type=int, default=32003, help="prime modulus, or 0 for the rationals (default 32003)")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: $EDGEBETTI_THREADS or CPU count)")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help=f"vertex cap for the subset loop (default {DEFAULT_MAX_N})")
    p.add_argument("--format", choices=("m2", "json", "csv"), default="m2")
    p.add_argument("--seed", type=int, default=0)


def _graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="edge-list or graph6 file, '-' for stdin")
    p.add_argument("--construction", nargs="+", metavar=("NAME", "PARAM"), help="named construction and its parameters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="edgebetti", description="Betti tables of edge ideals via Hochster's formula.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (
        ("betti", "print the graded Betti table"),
        ("jumpseq", "print the jump and relative jump sequences"),
        ("invariants", "print Ind, M, shortest induced cycle of the complement, C4-freeness"),
    ):
        p = sub.add_parser(name, help=help_)
        _graph_input(p)
        _common(p)

    p = sub.add_parser("homology", help="reduced homology of the complex of a graph, or of a facet file")
    _graph_input(p)
    p.add_argument("--complex", dest="complex_file", help="facet-list file instead of a graph")
    _common(p)

    p = sub.add_parser("generate", help="emit a named construction as an edge list")
    p.add_argument("name", choices=sorted(constructions.REGISTRY))
    p.add_argument("params", nargs="*", type=int)

    p = sub.add_parser("verify", help="run a check and print a JSON report")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("params", nargs="*", help="graph file for jump-bound; name and parameters for construction")
    p.add_argument("--suite-n", type=int, default=6, help="largest exhaustive size for small-graphs/field-agreement")
    p.add_argument("--sample", type=int, default=None, help="random sample size")
    p.add_argument("--pairs", type=int, default=50)
    p.add_argument("--no-timing", action="store_true", help="report millis as 0 for byte-stable output")
    _common(p)
    return parser


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _threads(args) -> int:
    t = args.threads if args.threads is not None else default_threads()
    if t < 1:
        raise UsageError("--threads must be at least 1")
    return t


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _construction(spec: Sequence[str]) -> constructions.NamedConstruction:
    name, *rest = spec
    try:
        params = [int(x) for x in rest]
    except ValueError:
        raise UsageError(f"construction parameters must be integers: {' '.join(rest)}") from None
    try:
        return constructions.by_name(name, params)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _load_graph(args) -> Graph:
    if args.construction and args.graph:
        raise UsageError("give either a graph file or --construction, not both")
    if args.construction:
        return _construction(args.construction).graph
    if not args.graph:
        raise UsageError("a graph file (or '-') or --construction is required")
    try:
        return read_graph(_read_text(args.graph))
    except FormatError as exc:
        raise UsageError(f"{args.graph}: {exc}") from None


def _cmd_betti(args, out) -> int:
    t = hochster_table(_load_graph(args), _field(args), args.max_n, _threads(args))
    out.write({"m2": t.to_m2, "json": lambda: t.to_json() + "\n", "csv": t.to_csv}[args.format]())
    return EXIT_OK


def _cmd_jumpseq(args, out) -> int:
    t = hochster_table(_load_graph(args), _field(args), args.max_n, _threads(args))
    js = jump_sequence(t)
    reg, pd = regularity_and_pd(t)
    if args.format == "json":
        out.write(json.dumps({"jump": str(js), "relative": str(js.relative()), "reg": reg, "pd": pd}) + "\n")
    elif args.format == "csv":
        out.write("jump,relative,reg,pd\n" f"{js},{js.relative()},{reg},{pd}\n")
    else:
        out.write(f"{js}\nrelative {js.relative()}\n")
    return EXIT_OK


def _cmd_invariants(args, out) -> int:
    g = _load_graph(args)
    h = complement(g)
    inv = {
        "n": g.n,
        "edges": g.edge_count,
        "induced_matching": induced_matching_number(g),
        "matching": matching_number(g),
        "complement_min_induced_cycle": min_induced_cycle_length(h),
        "complement_c4_free": is_induced_c4_free(h),
    }
    if args.format == "json":
        out.write(json.dumps(inv) + "\n")
    elif args.format == "csv":
        out.write(",".join(inv) + "\n" + ",".join(str(v) for v in inv.values()) + "\n")
    else:
        for k, v in inv.items():
            out.write(f"{k}: {'none' if v is None else v}\n")
    return EXIT_OK


def _cmd_homology(args, out) -> int:
    if args.complex_file:
        if args.graph or args.construction:
            raise UsageError("--complex excludes a graph input")
        try:
            c = parse_facets(_read_text(args.complex_file))
        except FormatError as exc:
            raise UsageError(f"{args.complex_file}: {exc}") from None
    else:
        c = stanley_reisner_complex(_load_graph(args))
    prof = reduced_homology_dims(c, _field(args))
    degrees = range(-1, len(prof.dims) - 1)
    if args.format == "json":
        out.write(json.dumps({"field": args.field, "f_vector": list(c.f_vector), "reduced": {str(d): prof.at(d) for d in degrees}}) + "\n")
    elif args.format == "csv":
        out.write("degree,dim\n" + "".join(f"{d},{prof.at(d)}\n" for d in degrees))
    else:
        out.write(f"f-vector: {' '.join(map(str, c.f_vector))}\n")
        for d in degrees:
            out.write(f"H~{d}: {prof.at(d)}\n")
    return EXIT_OK


def _cmd_generate(args, out) -> int:
    out.write(_construction([args.name, *map(str, args.params)]).to_edge_list())
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    field, threads = _field(args), _threads(args)
    check, params = args.check, args.params
    if check not in ("jump-bound", "construction") and params:
        raise UsageError(f"{check} takes no positional parameters")
    if check == "small-graphs":
        sample = 1000 if args.sample is None else args.sample
        rep = verify.check_small_graph_suite(args.suite_n, sample, args.seed, field, threads)
    elif check == "field-agreement":
        rep = verify.check_field_agreement(args.suite_n, field, threads)
    elif check == "eight-vertex":
        rep = verify.check_eight_vertex_exclusion(field, 500 if args.sample is None else args.sample, args.seed)
    elif check == "sum-formulas":
        rep = verify.check_sum_formulas(args.pairs, args.seed, field)
    elif check == "product-law":
        rep = verify.check_product_law(args.pairs, args.seed, field)
    elif check == "jump-bound":
        if len(params) != 1:
            raise UsageError("jump-bound takes one graph file")
        try:
            g = read_graph(_read_text(params[0]))
        except FormatError as exc:
            raise UsageError(f"{params[0]}: {exc}") from None
        rep = verify.check_jump_bound(g, field, args.max_n)
    else:
        if not params:
            raise UsageError("construction needs a name")
        rep = verify.check_construction(_construction(params), field, args.max_n)
    out.write(rep.to_json(timing=not args.no_timing) + "\n")
    return EXIT_OK if rep.passed else EXIT_VIOLATION


COMMANDS = {
    "betti": _cmd_betti,
    "jumpseq": _cmd_jumpseq,
    "invariants": _cmd_invariants,
    "homology": _cmd_homology,
    "generate": _cmd_generate,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"edgebetti: {exc}\n")
        parser.print_usage(err)
        return EXIT_USAGE
    except CapExceeded as exc:
        err.write(f"edgebetti: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
