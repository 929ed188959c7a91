"""Random automaton corpora for property and acceptance tests."""

import random

from fa_workbench.core import FiniteAutomaton, Transition

STATE_POOL = ("Q0", "Q1", "Q2", "Q3", "Q4", "Q5")

# name characters for serialization fuzzing: spaces, quotes, backslashes,
# non-ASCII letters -- anything legal inside a state name
NAME_CHARS = "abXZ019 _-·/\"\\'αβγλ漢字ß€"
SYMBOL_CHARS = "ab01λ€字\"\\"


def random_automaton(
    rng: random.Random,
    max_states: int = 6,
    alphabet: str = "ab",
    max_transitions: int = 12,
) -> FiniteAutomaton:
    """A small random automaton over a fixed state pool (possibly partial/NFA)."""
    states = STATE_POOL[: rng.randint(1, max_states)]
    transitions = tuple(
        Transition(rng.choice(states), rng.choice(alphabet), rng.choice(states))
        for _ in range(rng.randint(0, max_transitions))
    )
    accept = frozenset(s for s in states if rng.random() < 0.4)
    declared = frozenset(states) if rng.random() < 0.3 else frozenset()
    return FiniteAutomaton(rng.choice(states), transitions, accept, declared)


def random_name(rng: random.Random) -> str:
    while True:
        name = "".join(rng.choice(NAME_CHARS) for _ in range(rng.randint(1, 6)))
        if name and name == name.strip():
            return name


def random_unicode_automaton(rng: random.Random) -> FiniteAutomaton:
    """Random automaton with adversarial names/symbols, for round-trip fuzzing."""
    names = list({random_name(rng) for _ in range(rng.randint(1, 6))})
    symbols = [rng.choice(SYMBOL_CHARS) for _ in range(rng.randint(1, 3))]
    transitions = tuple(
        Transition(rng.choice(names), rng.choice(symbols), rng.choice(names))
        for _ in range(rng.randint(0, 10))
    )
    accept = frozenset(n for n in names if rng.random() < 0.4)
    declared = frozenset(names) if rng.random() < 0.5 else frozenset()
    return FiniteAutomaton(rng.choice(names), transitions, accept, declared)
