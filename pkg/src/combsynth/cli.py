"""Batch front end.

``combsynth run`` answers an inhabitation request offline and writes the
grammar, hypergraph, trace, reports and (optionally) enumerated terms and
per-step graphs.  Exit codes: 0 target inhabited, 1 provably uninhabited,
2 input error, 3 timeout.

``combsynth gen-labyrinth`` emits a labyrinth repository document and
``combsynth serve`` starts the HTTP service.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
from pathlib import Path

from .grammar import enumerate_terms, grammar_to_document, productive_nonterminals
from .hypergraph import filter_unproductive, from_grammar, to_document, to_dot
from .inhabitation import (
    DebugTrace,
    InhabitationError,
    inhabit_type,
    replay,
    trace_to_document,
)
from .labyrinth import LabyrinthError, gen_labyrinth
from .reports import Reason, report_for, report_to_document
from .repository import RepositoryError, load_repository
from .types import TypeSyntaxError, parse_type


def _dump(path: Path, doc: dict) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=False) + "\n")


def result_document(trace: DebugTrace, include_unproductive: bool) -> dict:
    """Result Overview body: the hypergraph of the computed grammar, or a
    no-solution message when the start symbol is uninhabited."""
    productive = productive_nonterminals(trace.final)
    if trace.final.start not in productive:
        report = report_for(trace)
        reason = Reason.UNPRODUCTIVE_CYCLE
        for entry in report.entries:
            if entry.type == trace.final.start:
                reason = entry.reason
        return {
            "solution": False,
            "reason": reason.value,
            "message": f"No inhabitant exists for {trace.final.start}: "
            + (
                "no usable combinator in the repository"
                if reason is Reason.NO_USABLE_COMBINATOR
                else "all candidate rules form unproductive cycles"
            ),
        }
    graph = from_grammar(trace.final)
    if not include_unproductive:
        graph = filter_unproductive(graph)
    return to_document(graph)


def _cmd_run(args: argparse.Namespace) -> int:
    try:
        repo = load_repository(Path(args.repo).read_text())
        target = parse_type(args.target)
    except (OSError, RepositoryError, TypeSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    def compute() -> DebugTrace:
        return inhabit_type(repo, target)

    try:
        if args.timeout_seconds is not None:
            with concurrent.futures.ThreadPoolExecutor(max_workers=1) as pool:
                try:
                    trace = pool.submit(compute).result(timeout=args.timeout_seconds)
                except concurrent.futures.TimeoutError:
                    print("error: inhabitation timed out", file=sys.stderr)
                    return 3
        else:
            trace = compute()
    except InhabitationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _dump(out / "grammar.json", grammar_to_document(trace.final))
    _dump(out / "trace.json", trace_to_document(trace))
    _dump(out / "reports.json", report_to_document(report_for(trace)))

    include_unproductive = not args.no_unproductive
    if args.format == "json":
        _dump(out / "graph.json", result_document(trace, include_unproductive))
    else:
        graph = from_grammar(trace.final)
        if not include_unproductive:
            graph = filter_unproductive(graph)
        (out / "graph.dot").write_text(to_dot(graph))

    if args.steps:
        for k in range(len(trace.steps) + 1):
            grammar, todo = replay(trace, k)
            graph = from_grammar(grammar, todo)
            if not include_unproductive:
                graph = filter_unproductive(graph)
            if args.format == "json":
                _dump(out / f"step-{k}.json", to_document(graph))
            else:
                (out / f"step-{k}.dot").write_text(to_dot(graph))

    if args.enumerate is not None:
        terms = enumerate_terms(trace.pruned, trace.pruned.start, args.enumerate)
        (out / "terms.txt").write_text("".join(f"{t}\n" for t in terms))

    inhabited = trace.final.start in productive_nonterminals(trace.final)
    print("inhabited" if inhabited else "uninhabited")
    return 0 if inhabited else 1


def _parse_cells(text: str) -> set[tuple[int, int]]:
    # "1,0;4,0" -> {(1, 0), (4, 0)}
    cells = set()
    if text:
        for chunk in text.split(";"):
            col, row = chunk.split(",")
            cells.add((int(col), int(row)))
    return cells


def _cmd_gen_labyrinth(args: argparse.Namespace) -> int:
    try:
        walls = _parse_cells(args.walls)
        col, row = (int(x) for x in args.start.split(","))
        doc = gen_labyrinth(args.rows, args.cols, walls, (col, row))
    except (ValueError, LabyrinthError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(
        timeout_seconds=args.timeout_seconds, static_dir=args.static_dir
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combsynth",
        description="Type inhabitation for combinator repositories",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="answer an inhabitation request offline")
    run.add_argument("--repo", required=True, help="repository JSON file")
    run.add_argument("--target", required=True, help="requested type")
    run.add_argument("--out", default=".", help="output directory")
    run.add_argument("--format", choices=["json", "dot"], default="json")
    run.add_argument("--enumerate", type=int, metavar="N",
                     help="also write the first N terms to terms.txt")
    run.add_argument("--steps", action="store_true",
                     help="write per-step hypergraphs")
    run.add_argument("--no-unproductive", action="store_true",
                     help="filter unproductive cycles from graphs")
    run.add_argument("--timeout-seconds", type=float, default=None)
    run.set_defaults(func=_cmd_run)

    gen = sub.add_parser("gen-labyrinth", help="generate a labyrinth repository")
    gen.add_argument("--rows", type=int, required=True)
    gen.add_argument("--cols", type=int, required=True)
    gen.add_argument("--walls", default="",
                     help="semicolon-separated col,row pairs, e.g. '1,0;4,0'")
    gen.add_argument("--start", required=True, help="col,row of the entrance")
    gen.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=_cmd_gen_labyrinth)

    serve = sub.add_parser("serve", help="start the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=9000)
    serve.add_argument("--timeout-seconds", type=float, default=30.0)
    serve.add_argument("--static-dir", default=None,
                       help="directory with the web UI bundle")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
