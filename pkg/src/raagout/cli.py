"""Command-line surface: graph I/O, analysis, decisions, presentations, sampling.

Subcommands:
  analyze <file>          order/SIL/system/conjugation report as JSON
  decide <file>           decision with certificate as JSON (exit 0 for any verdict)
  presentation <file>     presentation export (--format text|gap|json)
  gen lambda|gamma|gnp|named ...   emit a graph document
  mc --n ... --p ...      Monte Carlo sweep as CSV

Graphs are read as JSON documents {"vertices": [...], "edges": [[a,b],...]}
or as a DOT subset (undirected simple graphs only). "-" reads stdin.
Exit status 2 flags bad arguments, 1 operational errors; mathematical
verdicts never affect the exit status.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .decide import decide
from .errors import InputError, InternalCheckError, ParseError, PreconditionError
from .gen import GnpConfig, fixture_names, gamma_pqr, gnp, lambda_graph, named
from .graph import SimplicialGraph, mask_components, star_mask
from .mc import reports_csv, sweep
from .order import equivalence_classes, maximal_vertices, order_pairs
from .pconj import classify_pc, enumerate_pcs
from .presentation import (
    presentation_gap,
    presentation_json_dict,
    presentation_text,
    pso_presentation,
)
from .sil import all_sil_pairs_connected, maximal_sil_system, separated_sil_pairs, sil_pairs


# ---------------------------------------------------------------------------
# graph documents


def graph_to_dict(g: SimplicialGraph) -> dict:
    return {
        "vertices": list(g.names),
        "edges": [[g.names[i], g.names[j]] for i, j in g.edges()],
    }


def serialize_graph(g: SimplicialGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=2) + "\n"


def _graph_from_document(vertices, edges) -> SimplicialGraph:
    if len(set(vertices)) != len(vertices):
        raise ParseError("duplicate vertex name in document")
    index = {name: i for i, name in enumerate(vertices)}
    seen = set()
    resolved = []
    for k, pair in enumerate(edges):
        if len(pair) != 2:
            raise ParseError(f"edge #{k} is not a pair")
        u, v = pair
        if u not in index:
            raise ParseError(f"edge #{k} references unknown vertex {u!r}")
        if v not in index:
            raise ParseError(f"edge #{k} references unknown vertex {v!r}")
        if u == v:
            raise ParseError(f"edge #{k} is a self-loop at {u!r}")
        key = (min(index[u], index[v]), max(index[u], index[v]))
        if key in seen:
            raise ParseError(f"duplicate edge #{k}: {u!r} -- {v!r}")
        seen.add(key)
        resolved.append((u, v))
    return SimplicialGraph(vertices, resolved)


def parse_graph_json(text: str) -> SimplicialGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ParseError('expected an object with "vertices" and "edges"')
    vertices = doc["vertices"]
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(x, str) for x in vertices):
        raise ParseError('"vertices" must be a list of names')
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list of pairs')
    return _graph_from_document(vertices, edges)


def _tokenize_dot(text: str):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#" or text.startswith("//", i):
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("/*", i):
            end = text.find("*/", i + 2)
            if end < 0:
                raise ParseError("unterminated comment", line=line)
            skipped = text[i : end + 2]
            line += skipped.count("\n")
            i = end + 2
            continue
        if text.startswith("--", i):
            tokens.append(("--", "--", line))
            i += 2
            col += 2
            continue
        if text.startswith("->", i):
            raise ParseError("directed edges are not supported", line=line)
        if ch in "{};=,":
            tokens.append((ch, ch, line))
            i += 1
            col += 1
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated quoted name", line=line)
                j += 1
            if j >= n:
                raise ParseError("unterminated quoted name", line=line)
            tokens.append(("name", text[i + 1 : j], line))
            col += j + 1 - i
            i = j + 1
            continue
        if ch.isalnum() or ch in "_.":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_."):
                j += 1
            tokens.append(("name", text[i:j], line))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line=line, column=col)
    return tokens


def parse_graph_dot(text: str) -> SimplicialGraph:
    """Parse the undirected simple-graph subset of DOT.

    Supported statements inside ``graph [name] { ... }`` are bare vertex
    declarations and chains ``a -- b -- c;``. Attributes, subgraphs, and
    directed edges are rejected.
    """
    tokens = _tokenize_dot(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("eof", "", -1)

    def take(kind=None):
        nonlocal pos
        tok = peek()
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", line=tok[2])
        pos += 1
        return tok

    head = take("name")
    if head[1] == "strict":
        head = take("name")
    if head[1] == "digraph":
        raise ParseError("directed graphs are not supported", line=head[2])
    if head[1] != "graph":
        raise ParseError(f"expected 'graph', found {head[1]!r}", line=head[2])
    if peek()[0] == "name":
        take("name")
    take("{")
    vertices: list[str] = []
    seen = set()
    edges: list[tuple[str, str]] = []

    def declare(name: str) -> None:
        if name not in seen:
            seen.add(name)
            vertices.append(name)

    while peek()[0] not in ("}", "eof"):
        first = take("name")
        declare(first[1])
        prev = first[1]
        had_edge = False
        while peek()[0] == "--":
            take("--")
            nxt = take("name")
            declare(nxt[1])
            edges.append((prev, nxt[1]))
            prev = nxt[1]
            had_edge = True
        if peek()[0] == ";":
            take(";")
        elif not had_edge and peek()[0] not in ("}",):
            tok = peek()
            raise ParseError(f"unexpected token {tok[1]!r}", line=tok[2])
    take("}")
    if peek()[0] != "eof":
        tok = peek()
        raise ParseError(f"trailing content {tok[1]!r}", line=tok[2])
    return _graph_from_document(vertices, edges)


def parse_graph(text: str, format: str = "json") -> SimplicialGraph:
    if format == "json":
        return parse_graph_json(text)
    if format == "dot":
        return parse_graph_dot(text)
    raise InputError(f"unknown graph format {format!r}")


def _sniff_format(path: str, text: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    if path.endswith(".dot") or path.endswith(".gv"):
        return "dot"
    stripped = text.lstrip()
    return "dot" if stripped.startswith(("graph", "strict", "digraph")) else "json"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc.strerror}") from None


def _load_graph(args) -> SimplicialGraph:
    text = _read_input(args.file)
    return parse_graph(text, _sniff_format(args.file, text, args.format))


def _emit(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> int:
    g = _load_graph(args)
    names = g.names
    d = maximal_sil_system(g)
    pcs = []
    for p in enumerate_pcs(g):
        comps = mask_components(g, g.full_mask & ~star_mask(g, p.vertex))
        entry = {
            "vertex": names[p.vertex],
            "support": list(p.support.names),
            "out_trivial": len(comps) == 1,
        }
        if d is not None and len(comps) > 1:
            entry["type"] = int(classify_pc(g, d, p))
        pcs.append(entry)
    report = {
        "graph": graph_to_dict(g),
        "order_pairs": [[names[i], names[j]] for i, j in order_pairs(g)],
        "equivalence_classes": [
            [g.names[i] for i in c.members] for c in equivalence_classes(g)
        ],
        "maximal_vertices": list(maximal_vertices(g).names),
        "sil_pairs": [[names[i], names[j]] for i, j in sil_pairs(g)],
        "separated_sil_pairs": [[names[i], names[j]] for i, j in separated_sil_pairs(g)],
        "all_sil_pairs_connected": all_sil_pairs_connected(g),
        "system": None,
        "partial_conjugations": pcs,
    }
    if d is not None:
        report["system"] = {
            "pivots": [names[w] for w in d.system.pivots],
            "core": list(d.core.names),
            "shared_components": [list(c.names) for c in d.shared_components],
            "additional_components": [list(c.names) for c in d.additional_components],
        }
    _emit(args, json.dumps(report, indent=2) + "\n")
    return 0


def cmd_decide(args) -> int:
    g = _load_graph(args)
    decision = decide(g)
    _emit(args, json.dumps(decision.to_dict(), indent=2) + "\n")
    return 0


def cmd_presentation(args) -> int:
    g = _load_graph(args)
    pres = pso_presentation(g)
    if args.fmt == "text":
        _emit(args, presentation_text(pres))
    elif args.fmt == "gap":
        _emit(args, presentation_gap(pres))
    else:
        _emit(args, json.dumps(presentation_json_dict(pres), indent=2) + "\n")
    return 0


def cmd_gen(args) -> int:
    if args.family == "lambda":
        g = lambda_graph(args.m)
    elif args.family == "gamma":
        g = gamma_pqr(args.p, args.q, args.r)
    elif args.family == "gnp":
        g = gnp(GnpConfig(args.n, args.prob, args.seed))
    else:
        g = named(args.name)
    _emit(args, serialize_graph(g))
    return 0


def cmd_mc(args) -> int:
    reports = sweep(args.n, args.p, args.samples, args.seed)
    _emit(args, reports_csv(reports))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagout",
        description=(
            "Analyze the outer automorphism group of the right-angled Artin "
            "group attached to a finite simplicial graph."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", help="graph document path, or - for stdin")
        p.add_argument("--format", choices=["json", "dot"], default=None)
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("analyze", help="order, SIL, system, and conjugation report")
    add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="acylindrical-hyperbolicity decision with certificate")
    add_input(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("presentation", help="pure symmetric outer presentation export")
    add_input(p)
    p.add_argument("--format", dest="fmt", choices=["text", "gap", "json"], default="text")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("gen", help="emit a generated graph as JSON")
    gsub = p.add_subparsers(dest="family", required=True)
    q = gsub.add_parser("lambda", help="polygon-with-apexes family member")
    q.add_argument("m", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_gen)
    q = gsub.add_parser("gamma", help="three glued polygon blocks")
    q.add_argument("p", type=int)
    q.add_argument("q", type=int)
    q.add_argument("r", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_gen)
    q = gsub.add_parser("gnp", help="seeded random graph")
    q.add_argument("n", type=int)
    q.add_argument("prob", type=float, metavar="p")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_gen)
    q = gsub.add_parser("named", help="documented figure fixture")
    q.add_argument("name", choices=fixture_names())
    q.add_argument("--out")
    q.set_defaults(func=cmd_gen)

    p = sub.add_parser("mc", help="Monte Carlo sweep (CSV)")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, nargs="+", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
