"""Finite automata as immutable values: stepping, acceptance, traces, classification.

Automata may be nondeterministic and partial.  A configuration carries the
set of simultaneously active states, so acceptance works for NFAs by subset
stepping; a missing transition strands the run and the word is rejected as
stuck.  All operations treat automata as values: edits return new instances
and never touch their inputs, so everything here is safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from typing import Sequence


class AutomatonError(ValueError):
    """Invariant violation, carrying a stable machine-readable ``code``."""

    def __init__(self, code: str, message: str, detail: str | None = None) -> None:
        super().__init__(message)
        self.code = code
        self.detail = detail


@dataclass(frozen=True)
class ValidationIssue:
    """One invariant violation found by :func:`validate`."""

    code: str
    message: str


@dataclass(frozen=True)
class Transition:
    """A labelled edge: reading ``symbol`` in state ``src`` may move to ``dst``."""

    src: str
    symbol: str
    dst: str


@dataclass(frozen=True)
class FiniteAutomaton:
    """An automaton given by its initial state, transitions and accept states.

    The state set is inferred: every state mentioned by ``initial_state``,
    the transitions or ``accept_states`` belongs to it, plus any extra
    isolated states kept in ``declared_states``.  Duplicate transitions are
    collapsed on construction (first occurrence wins the ordering).
    """

    initial_state: str
    transitions: tuple[Transition, ...] = ()
    accept_states: frozenset[str] = frozenset()
    declared_states: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        seen: set[Transition] = set()
        ordered: list[Transition] = []
        for t in self.transitions:
            if t not in seen:
                seen.add(t)
                ordered.append(t)
        object.__setattr__(self, "transitions", tuple(ordered))
        object.__setattr__(self, "accept_states", frozenset(self.accept_states))
        implied = {self.initial_state}
        implied.update(t.src for t in ordered)
        implied.update(t.dst for t in ordered)
        implied.update(self.accept_states)
        # keep only the states that nothing else implies, so value equality
        # is structural equality
        object.__setattr__(
            self, "declared_states", frozenset(self.declared_states) - implied
        )


@dataclass(frozen=True)
class Configuration:
    """Set of simultaneously active states after ``consumed`` input symbols."""

    active: frozenset[str]
    consumed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "active", frozenset(self.active))


class Verdict(Enum):
    ACCEPTED = "ACCEPTED"
    REJECTED_END = "REJECTED_END"
    REJECTED_STUCK = "REJECTED_STUCK"


@dataclass(frozen=True)
class Trace:
    """The full configuration sequence for one word, ending in a verdict.

    ``configs[0]`` holds the initial state with nothing consumed and each
    following entry is one subset step.  A stuck run keeps the final empty
    configuration as its last entry.
    """

    word: tuple[str, ...]
    configs: tuple[Configuration, ...]
    verdict: Verdict


def _check_state_name(name: str) -> None:
    if name == "":
        raise AutomatonError("EMPTY_STATE_NAME", "state name must not be empty")
    if name != name.strip():
        raise AutomatonError(
            "STATE_NAME_WHITESPACE",
            f"state name {name!r} has leading or trailing whitespace",
            detail=name,
        )


def _check_symbol(symbol: str) -> None:
    if len(symbol) != 1:
        raise AutomatonError(
            "SYMBOL_NOT_SINGLE",
            f"transition symbol {symbol!r} must be exactly one character",
            detail=symbol,
        )


def validate(a: FiniteAutomaton) -> list[ValidationIssue]:
    """Check every invariant of ``a``; an empty report means valid."""
    issues: list[ValidationIssue] = []
    reported: set[tuple[str, str]] = set()

    def add(code: str, message: str) -> None:
        if (code, message) not in reported:
            reported.add((code, message))
            issues.append(ValidationIssue(code, message))

    def check_name(name: str) -> None:
        if name == "":
            add("EMPTY_STATE_NAME", "state name is empty")
        elif name != name.strip():
            add(
                "STATE_NAME_WHITESPACE",
                f"state name {name!r} has leading or trailing whitespace",
            )

    check_name(a.initial_state)
    for t in a.transitions:
        check_name(t.src)
        check_name(t.dst)
        if len(t.symbol) != 1:
            add(
                "SYMBOL_NOT_SINGLE",
                f"transition symbol {t.symbol!r} must be exactly one character",
            )
    for name in sorted(a.accept_states):
        check_name(name)
    for name in sorted(a.declared_states):
        check_name(name)
    return issues


def state_set(a: FiniteAutomaton) -> frozenset[str]:
    """All states of ``a``: initial, transition endpoints, accept and declared."""
    states = {a.initial_state}
    for t in a.transitions:
        states.add(t.src)
        states.add(t.dst)
    states.update(a.accept_states)
    states.update(a.declared_states)
    return frozenset(states)


def alphabet(a: FiniteAutomaton) -> frozenset[str]:
    """All symbols appearing in transitions."""
    return frozenset(t.symbol for t in a.transitions)


def is_deterministic(a: FiniteAutomaton) -> bool:
    """True iff no (state, symbol) pair has two distinct successor states.

    A partial automaton (missing transitions) still counts as deterministic.
    """
    seen: set[tuple[str, str]] = set()
    for t in a.transitions:
        key = (t.src, t.symbol)
        if key in seen:
            return False
        seen.add(key)
    return True


@lru_cache(maxsize=1024)
def _transition_map(a: FiniteAutomaton) -> dict[tuple[str, str], tuple[str, ...]]:
    out: dict[tuple[str, str], list[str]] = {}
    for t in a.transitions:
        out.setdefault((t.src, t.symbol), []).append(t.dst)
    return {key: tuple(dsts) for key, dsts in out.items()}


def transitions_for(a: FiniteAutomaton, state: str, symbol: str) -> list[Transition]:
    """All transitions leaving ``state`` on ``symbol``, in stored order."""
    if state not in state_set(a):
        raise AutomatonError(
            "UNKNOWN_STATE", f"state {state!r} is not part of the automaton", detail=state
        )
    return [t for t in a.transitions if t.src == state and t.symbol == symbol]


def step_config(a: FiniteAutomaton, config: Configuration, symbol: str) -> Configuration:
    """One subset step: successors of every active state, one more symbol read.

    The resulting active set may be empty (the run is stuck).
    """
    lookup = _transition_map(a)
    nxt: set[str] = set()
    for state in config.active:
        dsts = lookup.get((state, symbol))
        if dsts:
            nxt.update(dsts)
    return Configuration(frozenset(nxt), config.consumed + 1)


def accepts(a: FiniteAutomaton, word: Sequence[str]) -> bool:
    """True iff some transition path consumes all of ``word`` into an accept state.

    Symbols outside the automaton's alphabet simply match no transition and
    strand the run.
    """
    lookup = _transition_map(a)
    active: set[str] = {a.initial_state}
    for symbol in word:
        nxt: set[str] = set()
        for state in active:
            dsts = lookup.get((state, symbol))
            if dsts:
                nxt.update(dsts)
        if not nxt:
            return False
        active = nxt
    return not a.accept_states.isdisjoint(active)


def trace(a: FiniteAutomaton, word: Sequence[str]) -> Trace:
    """Materialise the whole configuration sequence for ``word``.

    Stepping stops at the first empty active set; that empty configuration
    stays in the trace and the verdict is ``REJECTED_STUCK``.  Otherwise the
    word is consumed entirely and the verdict depends on whether an accept
    state is active at the end.
    """
    symbols = tuple(word)
    configs = [Configuration(frozenset({a.initial_state}), 0)]
    verdict: Verdict | None = None
    for symbol in symbols:
        configs.append(step_config(a, configs[-1], symbol))
        if not configs[-1].active:
            verdict = Verdict.REJECTED_STUCK
            break
    if verdict is None:
        if configs[-1].active & a.accept_states:
            verdict = Verdict.ACCEPTED
        else:
            verdict = Verdict.REJECTED_END
    return Trace(symbols, tuple(configs), verdict)


def accessible_states(a: FiniteAutomaton) -> frozenset[str]:
    """States reachable from the initial state (which is always included)."""
    reached = {a.initial_state}
    changed = True
    while changed:
        changed = False
        for t in a.transitions:
            if t.src in reached and t.dst not in reached:
                reached.add(t.dst)
                changed = True
    return frozenset(reached)


def productive_states(a: FiniteAutomaton) -> frozenset[str]:
    """States from which some accept state is reachable (accept states included)."""
    productive = set(a.accept_states)
    changed = True
    while changed:
        changed = False
        for t in a.transitions:
            if t.dst in productive and t.src not in productive:
                productive.add(t.src)
                changed = True
    return frozenset(productive)


def useful_states(a: FiniteAutomaton) -> frozenset[str]:
    """States that are both accessible and productive."""
    return accessible_states(a) & productive_states(a)


def new_automaton(initial: str, initial_is_accept: bool = False) -> FiniteAutomaton:
    """A fresh single-state automaton, optionally accepting its start state."""
    _check_state_name(initial)
    accept = frozenset({initial}) if initial_is_accept else frozenset()
    return FiniteAutomaton(initial, (), accept)


def add_transition(a: FiniteAutomaton, t: Transition) -> FiniteAutomaton:
    """Return ``a`` with ``t`` appended; re-adding an existing transition is a no-op."""
    _check_state_name(t.src)
    _check_state_name(t.dst)
    _check_symbol(t.symbol)
    if t in a.transitions:
        return a
    return replace(a, transitions=a.transitions + (t,))


def mark_accept(a: FiniteAutomaton, state: str) -> FiniteAutomaton:
    """Return ``a`` with ``state`` accepting (added to the state set if new)."""
    _check_state_name(state)
    if state in a.accept_states:
        return a
    return replace(a, accept_states=a.accept_states | {state})


def add_state(a: FiniteAutomaton, state: str) -> FiniteAutomaton:
    """Return ``a`` with ``state`` present, possibly isolated; idempotent."""
    _check_state_name(state)
    if state in state_set(a):
        return a
    return replace(a, declared_states=a.declared_states | {state})
