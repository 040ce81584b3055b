"""Command-line front end: construct / color / verify / search / count / export.

Commands compose over pipes: ``construct`` and ``color`` emit JSON documents
that ``verify``, ``search``, ``count`` and ``export`` accept on stdin.  Exit
codes are a stable contract:

    0   success / certificate passed / SAT
    1   certificate failed
    20  UNSAT
    30  budget exhausted
    64  usage error
    65  schema or ingestion error
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import parse_coloring, serialize_coloring
from .errors import (InvalidK, InvalidN, MissingLabels, NotATriangulation,
                     RainbowTriError, SchemaError, UnknownFixture)
from .families import (FIXTURE_NAMES, LabeledTriangulation, build_barrel,
                       build_fixture, build_strip, parse_graph, serialize_graph)
from .search import (DEFAULT_BUDGET_NODES, DEFAULT_BUDGET_SECONDS,
                     SearchProblem, solve)
from .triangulation import enumerate_cycles
from .verify import certify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNSAT = 20
EXIT_BUDGET = 30
EXIT_USAGE = 64
EXIT_SCHEMA = 65

# fixed 12-entry cycle for DOT edge colors (color id -> hex)
DOT_PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#17becf", "#666666", "#1b9e77", "#d95f02", "#7570b3",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowtri",
                     description="extremal edge-colored planar triangulations: "
                                 "construct, color, certify, search")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", default=None, help="output path (default stdout)")

    def add_family(p):
        p.add_argument("--family", required=True, choices=["hk", "fn", "fixture"])
        p.add_argument("--k", type=int, help="ring parameter for --family hk")
        p.add_argument("--n", type=int, help="vertex count for --family fn")
        p.add_argument("--name", choices=FIXTURE_NAMES,
                       help="fixture name for --family fixture")

    p = sub.add_parser("construct", help="emit a labeled triangulation")
    add_family(p)
    p.add_argument("--format", default="json", choices=["json", "text"])
    add_out(p)

    p = sub.add_parser("color", help="emit a family graph with its coloring")
    add_family(p)
    p.add_argument("--format", default="json", choices=["json", "text"])
    add_out(p)

    p = sub.add_parser("verify", help="certify a coloring; exit 0 iff all checks pass")
    p.add_argument("--graph", default=None, help="graph JSON path ('-' = stdin)")
    p.add_argument("--coloring", default=None, help="coloring JSON path")
    p.add_argument("--forbid", default="", help="comma-separated cycle lengths")
    p.add_argument("--format", default="json", choices=["json", "text"])
    add_out(p)

    p = sub.add_parser("search", help="decide colorability; exit 0 SAT, 20 UNSAT, "
                                      "30 budget exceeded")
    p.add_argument("--graph", default=None)
    p.add_argument("--palette", type=int, required=True)
    p.add_argument("--forbid", default="", help="comma-separated cycle lengths")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--kernel", default="auto", choices=["auto", "py", "cy"])
    p.add_argument("--no-precheck", action="store_true")
    p.add_argument("--no-symmetry-breaking", action="store_true")
    add_out(p)

    p = sub.add_parser("count", help="census of cycles of one length")
    p.add_argument("--graph", default=None)
    p.add_argument("--length", type=int, required=True)
    add_out(p)

    p = sub.add_parser("export", help="emit DOT with colors as edge attributes")
    p.add_argument("--graph", default=None)
    p.add_argument("--coloring", default=None)
    p.add_argument("--format", default="dot", choices=["dot", "json"])
    add_out(p)

    return parser


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _read_doc(path):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON input: {exc}") from None


def _load_graph_doc(args):
    """Graph (and embedded coloring, if any) from --graph or stdin."""
    doc = _read_doc(args.graph)
    if isinstance(doc, dict) and "graph" in doc:
        return parse_graph(doc["graph"]), doc.get("coloring")
    return parse_graph(doc), None


def _load_coloring(args, embedded):
    if getattr(args, "coloring", None):
        return parse_coloring(_read_doc(args.coloring))
    if embedded is not None:
        return parse_coloring(embedded)
    raise SchemaError("no coloring given (use --coloring or pipe a combined "
                      "graph+coloring document)")


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, doc):
    _emit(args, json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _parse_forbid(spec: str):
    if not spec.strip():
        return []
    try:
        lengths = sorted({int(tok) for tok in spec.split(",") if tok.strip()})
    except ValueError:
        raise UsageError(f"bad --forbid value {spec!r}") from None
    if any(length < 3 for length in lengths):
        raise UsageError("forbidden cycle lengths must be at least 3")
    return lengths


def _build_family(args) -> LabeledTriangulation:
    if args.family == "hk":
        if args.k is None:
            raise UsageError("--family hk needs --k")
        return build_barrel(args.k)
    if args.family == "fn":
        if args.n is None:
            raise UsageError("--family fn needs --n")
        return build_strip(args.n)
    if args.name is None:
        raise UsageError("--family fixture needs --name")
    return build_fixture(args.name)


def _graph_summary(lt: LabeledTriangulation) -> str:
    g = lt.graph
    census = {}
    for rot in g.rotations:
        census[len(rot)] = census.get(len(rot), 0) + 1
    kind = lt.family.get("name", "graph")
    degs = " ".join(f"{d}x{c}" for d, c in sorted(census.items()))
    return (f"{kind}: n={g.n} edges={g.num_edges} faces={len(g.faces)} "
            f"degrees[{degs}]\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_construct(args) -> int:
    lt = _build_family(args)
    if args.format == "text":
        _emit(args, _graph_summary(lt))
    else:
        _emit_json(args, serialize_graph(lt))
    return EXIT_OK


def _cmd_color(args) -> int:
    from .coloring import barrel_coloring, strip_coloring

    lt = _build_family(args)
    if args.family == "hk":
        col = barrel_coloring(lt)
    elif args.family == "fn":
        col = strip_coloring(lt)
    else:
        raise UsageError("fixtures carry no family coloring; use 'search' to find one")
    if args.format == "text":
        _emit(args, _graph_summary(lt) +
              f"coloring: palette={col.palette_size} used={col.colors_used()}\n")
    else:
        _emit_json(args, {"graph": serialize_graph(lt),
                          "coloring": serialize_coloring(col)})
    return EXIT_OK


def _cmd_verify(args) -> int:
    lengths = _parse_forbid(args.forbid)
    lt, embedded = _load_graph_doc(args)
    col = _load_coloring(args, embedded)
    report = certify(lt, col, lengths)
    if args.format == "text":
        lines = [f"{name}: {'pass' if ok else 'FAIL'}"
                 for name, ok in sorted(report.claims.items()) if ok is not None]
        lines.append(f"overall: {'pass' if report.passed else 'FAIL'}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_search(args) -> int:
    lengths = _parse_forbid(args.forbid)
    if args.palette < 1:
        raise UsageError("--palette must be positive")
    budget_nodes = args.budget_nodes
    if budget_nodes is None:
        budget_nodes = int(os.environ.get("RAINBOWTRI_BUDGET_NODES",
                                          DEFAULT_BUDGET_NODES))
    budget_seconds = args.budget_seconds
    if budget_seconds is None:
        budget_seconds = float(os.environ.get("RAINBOWTRI_BUDGET_SECONDS",
                                              DEFAULT_BUDGET_SECONDS))
    lt, embedded = _load_graph_doc(args)
    if any(length > lt.graph.n for length in lengths):
        raise UsageError(f"forbidden length exceeds n={lt.graph.n}")
    problem = SearchProblem(
        graph=lt,
        palette_size=args.palette,
        forbidden_lengths=frozenset(lengths),
        budget_nodes=budget_nodes,
        budget_seconds=budget_seconds,
        symmetry_breaking=not args.no_symmetry_breaking,
    )
    backend = None if args.kernel == "auto" else args.kernel
    outcome = solve(problem, use_precheck=not args.no_precheck, backend=backend)
    _emit_json(args, outcome.to_dict())
    if outcome.status == "SAT":
        return EXIT_OK
    if outcome.status == "UNSAT":
        return EXIT_UNSAT
    return EXIT_BUDGET


def _cmd_count(args) -> int:
    lt, _ = _load_graph_doc(args)
    if not 3 <= args.length <= lt.graph.n:
        raise UsageError(f"--length must be in [3, {lt.graph.n}]")
    cycles = enumerate_cycles(lt.graph, args.length)
    _emit_json(args, {"n": lt.graph.n, "length": args.length,
                      "count": len(cycles)})
    return EXIT_OK


def _cmd_export(args) -> int:
    lt, embedded = _load_graph_doc(args)
    col = None
    if args.coloring or embedded is not None:
        col = _load_coloring(args, embedded)
    if args.format == "json":
        doc = {"graph": serialize_graph(lt)}
        if col is not None:
            doc["coloring"] = serialize_coloring(col)
        _emit_json(args, doc)
        return EXIT_OK
    lines = ["graph rainbowtri {", "  node [shape=circle];"]
    for v, label in enumerate(lt.labels):
        lines.append(f'  {v} [label="{label}"];')
    for u, v in lt.graph.edges:
        if col is not None:
            c = col.colors[(u, v)]
            hexcolor = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{hexcolor}", label="{c}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "count": _cmd_count,
    "export": _cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidK, InvalidN, UnknownFixture) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaError, NotATriangulation, MissingLabels) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except RainbowTriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
