#!/usr/bin/env python3
"""Animate a word run in the terminal: one line per step, states tinted like the UI.

Examples:
    python3 scripts/animate_word.py aba                    # bundled example1DFA
    python3 scripts/animate_word.py abaa --delay-ms 300
    python3 scripts/animate_word.py ab --file my.fa.json
"""

import argparse
from pathlib import Path

from fa_workbench.persistence import automaton_from_document, list_examples, parse_automaton
from fa_workbench.simulation import Color, color_view, current_word_view, run_all, start_session

ANSI = {Color.BLUE: "\033[94m", Color.GREEN: "\033[92m", Color.RED: "\033[91m"}
RESET = "\033[0m"


def paint(view) -> str:
    parts = [
        f"{ANSI[color]}{state}{RESET}" for state, color in sorted(view.colors.items())
    ]
    return " ".join(parts) if parts else "(no active states)"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("word")
    parser.add_argument("--file", default=None, help="automaton file; default: bundled example1DFA")
    parser.add_argument("--example", default="example1DFA", help="bundled example name")
    parser.add_argument("--delay-ms", type=float, default=500.0)
    args = parser.parse_args()

    if args.file:
        automaton = parse_automaton(Path(args.file).read_text(encoding="utf-8"))
    else:
        automaton = automaton_from_document(list_examples()[args.example])

    session = start_session(automaton, args.word)
    view = color_view(session)
    print(f"{current_word_view(session):>20}  {paint(view)}  [{view.caption}]")

    def tick(_position, view):
        print(f"{current_word_view(session):>20}  {paint(view)}  [{view.caption}]")

    run_all(session, tick, delay_ms=args.delay_ms)
    print(session.trace.verdict.value)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
