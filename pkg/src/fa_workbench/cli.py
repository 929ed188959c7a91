"""Command-line front door: accept, nature, export, examples, serve.

Exit codes: 0 accepted, 1 rejected, 2 bad input.  Stdout carries data,
stderr carries diagnostics.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import core, persistence
from .core import AutomatonError, Verdict
from .simulation import color_view, run_all, start_session

NATURE_KINDS = {
    "productive": core.productive_states,
    "accessible": core.accessible_states,
    "useful": core.useful_states,
}


def _load_automaton(path: str) -> core.FiniteAutomaton:
    return persistence.parse_automaton(Path(path).read_text(encoding="utf-8"))


def cmd_accept(args: argparse.Namespace) -> int:
    automaton = _load_automaton(args.file)
    t = core.trace(automaton, args.word)
    if args.trace:
        for config in t.configs:
            active = ",".join(sorted(config.active))
            remaining = len(t.word) - config.consumed
            print(f"pos={config.consumed} active={{{active}}} remaining={remaining}")
    print(t.verdict.value)
    return 0 if t.verdict is Verdict.ACCEPTED else 1


def cmd_nature(args: argparse.Namespace) -> int:
    if args.kind not in NATURE_KINDS:
        print(f"UNKNOWN_KIND: kind must be one of {sorted(NATURE_KINDS)}", file=sys.stderr)
        return 2
    automaton = _load_automaton(args.file)
    for state in sorted(NATURE_KINDS[args.kind](automaton)):
        print(state)
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    automaton = _load_automaton(args.file)
    coloring = None
    if args.color_word is not None:
        session = run_all(start_session(automaton, args.color_word), delay_ms=0)
        coloring = color_view(session).colors
    print(persistence.export_dot(automaton, coloring), end="")
    return 0


def cmd_examples(args: argparse.Namespace) -> int:
    catalog = persistence.list_examples()
    for name in catalog:
        print(name)
    if args.write is not None:
        out_dir = Path(args.write)
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, doc in catalog.items():
            text = persistence.format_document(doc)
            (out_dir / f"{name}.fa.json").write_text(text, encoding="utf-8")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    # imported lazily so accept/nature/export stay snappy
    import socket

    import uvicorn

    from .service import DEFAULT_PORT, create_app

    port = args.port if args.port is not None else int(os.environ.get("OFLAT_PORT", DEFAULT_PORT))
    app = create_app()
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    sock.bind((args.host, port))
    print(sock.getsockname()[1], flush=True)
    config = uvicorn.Config(app, host=args.host, port=port, log_level="info")
    uvicorn.Server(config).run(sockets=[sock])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_accept = sub.add_parser("accept", help="test whether an automaton accepts a word")
    p_accept.add_argument("file", help="automaton file (.fa.json)")
    p_accept.add_argument("word", help='word to test; spell the empty word as ""')
    p_accept.add_argument("--trace", action="store_true", help="print one line per configuration")
    p_accept.set_defaults(func=cmd_accept)

    p_nature = sub.add_parser("nature", help="list productive/accessible/useful states")
    p_nature.add_argument("file")
    p_nature.add_argument("--kind", required=True, help="productive | accessible | useful")
    p_nature.set_defaults(func=cmd_nature)

    p_export = sub.add_parser("export", help="export the automaton as a graph")
    p_export.add_argument("file")
    p_export.add_argument("--dot", action="store_true", required=True, help="emit DOT on stdout")
    p_export.add_argument(
        "--color-word", default=None, help="color states by the final view of this word's run"
    )
    p_export.set_defaults(func=cmd_export)

    p_examples = sub.add_parser("examples", help="list (and optionally write) bundled examples")
    p_examples.add_argument("--write", metavar="DIR", default=None)
    p_examples.set_defaults(func=cmd_examples)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=None, help="default $OFLAT_PORT or 8080; 0 picks a free port")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AutomatonError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"IO_ERROR: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
