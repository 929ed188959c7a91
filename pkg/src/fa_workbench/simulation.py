"""Stepping sessions over a precomputed trace: forward, back (undo), animated run.

A session is a cursor into a :class:`~fa_workbench.core.Trace`.  The whole
trace is computed when the session starts, which makes undo O(1) and every
rendered view a pure function of the cursor position.  Sessions are mutable
single-owner objects: never drive one session from two threads at once;
distinct sessions are fully independent.

Color semantics for the graph renderers:

* BLUE marks the currently active states while the run is still going;
* GREEN marks active accept states, only when the word was consumed and
  accepted;
* RED marks the states where a rejected run ended: the final active states
  for a word that ran out, or the last nonempty configuration for a run
  that got stuck (the empty configuration itself has nothing to paint).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

from .core import (
    AutomatonError,
    FiniteAutomaton,
    Trace,
    Verdict,
    trace,
    validate,
)


class Color(Enum):
    PLAIN = "PLAIN"
    BLUE = "BLUE"
    GREEN = "GREEN"
    RED = "RED"


StateColoring = Mapping[str, Color]


class SessionStatus(Enum):
    RUNNING = "RUNNING"
    FINISHED = "FINISHED"


@dataclass(frozen=True)
class ColorView:
    """What a renderer should show: non-plain state colors, progress, caption.

    States absent from ``colors`` are plain.
    """

    colors: dict[str, Color]
    remaining: int
    caption: str


@dataclass
class SimulationSession:
    """Mutable cursor over the trace of one word."""

    automaton: FiniteAutomaton
    sentence: tuple[str, ...]
    trace: Trace
    position: int = 0

    @property
    def status(self) -> SessionStatus:
        if self.position == len(self.trace.configs) - 1:
            return SessionStatus.FINISHED
        return SessionStatus.RUNNING


def start_session(a: FiniteAutomaton, word: Sequence[str]) -> SimulationSession:
    """Precompute the trace for ``word`` and place the cursor at the start."""
    issues = validate(a)
    if issues:
        raise AutomatonError(
            "INVALID_AUTOMATON",
            f"automaton is not valid: {issues[0].message}",
        )
    t = trace(a, word)
    return SimulationSession(a, t.word, t)


def step_forward(session: SimulationSession) -> SimulationSession:
    """Advance one configuration; saturates at the end of the trace."""
    if session.position < len(session.trace.configs) - 1:
        session.position += 1
    return session


def step_back(session: SimulationSession) -> SimulationSession:
    """Undo one step; saturates at the start."""
    if session.position > 0:
        session.position -= 1
    return session


def color_view(session: SimulationSession) -> ColorView:
    """The colors and caption for the session's current position."""
    t = session.trace
    config = t.configs[session.position]
    remaining = len(t.word) - config.consumed
    if session.status is SessionStatus.RUNNING:
        colors = {state: Color.BLUE for state in config.active}
        return ColorView(colors, remaining, f"{remaining} symbol(s) left")
    if t.verdict is Verdict.ACCEPTED:
        accept = session.automaton.accept_states
        colors = {
            state: Color.GREEN if state in accept else Color.BLUE
            for state in config.active
        }
        return ColorView(colors, remaining, "word accepted")
    if t.verdict is Verdict.REJECTED_END:
        colors = {state: Color.RED for state in config.active}
        return ColorView(colors, remaining, "word rejected: ended outside an accept state")
    # stuck: the final configuration is empty, paint where the run died
    stranded = t.configs[session.position - 1].active
    colors = {state: Color.RED for state in stranded}
    return ColorView(colors, remaining, "word rejected: no transition available")


def current_word_view(session: SimulationSession) -> str:
    """The word split consumed|remaining at the cursor, e.g. ``"ab·a"``."""
    word = "".join(session.sentence)
    consumed = session.trace.configs[session.position].consumed
    return f"{word[:consumed]}·{word[consumed:]}"


def run_all(
    session: SimulationSession,
    tick: Callable[[int, ColorView], None] | None = None,
    delay_ms: float = 500.0,
) -> SimulationSession:
    """Step forward to the end, calling ``tick(position, view)`` once per step.

    Consecutive ticks are separated by ``delay_ms`` (0 is fine for tests);
    the delay is presentation only and never changes the outcome.
    """
    first = True
    while session.status is SessionStatus.RUNNING:
        if not first and delay_ms > 0:
            time.sleep(delay_ms / 1000.0)
        first = False
        step_forward(session)
        if tick is not None:
            tick(session.position, color_view(session))
    return session
