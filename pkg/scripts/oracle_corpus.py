#!/usr/bin/env python3
"""Stress the engine against brute-force path enumeration on a random corpus.

Self-contained experiment: generates random small automata, decides every
word up to a length bound both by subset stepping (the engine) and by
enumerating raw transition paths, and reports mismatches and timing.

    python3 scripts/oracle_corpus.py --count 10000 --max-len 6
"""

import argparse
import random
import time
from collections import defaultdict

from fa_workbench.core import FiniteAutomaton, Transition, accepts

STATE_POOL = ("Q0", "Q1", "Q2", "Q3", "Q4", "Q5")


def random_automaton(rng: random.Random, max_states: int, max_transitions: int) -> FiniteAutomaton:
    states = STATE_POOL[: rng.randint(1, max_states)]
    transitions = tuple(
        Transition(rng.choice(states), rng.choice("ab"), rng.choice(states))
        for _ in range(rng.randint(0, max_transitions))
    )
    accept = frozenset(s for s in states if rng.random() < 0.4)
    return FiniteAutomaton(rng.choice(states), transitions, accept)


def accepted_by_enumeration(a: FiniteAutomaton, max_len: int) -> set[str]:
    adjacency = defaultdict(list)
    for t in a.transitions:
        adjacency[t.src].append((t.symbol, t.dst))
    accepted: set[str] = set()
    stack = [(a.initial_state, "")]
    while stack:
        state, word = stack.pop()
        if state in a.accept_states:
            accepted.add(word)
        if len(word) < max_len:
            for symbol, dst in adjacency[state]:
                stack.append((dst, word + symbol))
    return accepted


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=10_000)
    parser.add_argument("--max-len", type=int, default=6)
    parser.add_argument("--max-states", type=int, default=6)
    parser.add_argument("--max-transitions", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    words = [""]
    frontier = [""]
    for _ in range(args.max_len):
        frontier = [w + c for w in frontier for c in "ab"]
        words.extend(frontier)

    rng = random.Random(args.seed)
    mismatches = 0
    started = time.perf_counter()
    for i in range(args.count):
        automaton = random_automaton(rng, args.max_states, args.max_transitions)
        oracle = accepted_by_enumeration(automaton, args.max_len)
        for word in words:
            if accepts(automaton, word) != (word in oracle):
                mismatches += 1
                print(f"MISMATCH on automaton #{i} word {word!r}")
    elapsed = time.perf_counter() - started

    print(
        f"{args.count} automata x {len(words)} words: "
        f"{mismatches} mismatches in {elapsed:.1f} s"
    )
    return 0 if mismatches == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
