"""Automaton files, the bundled example catalog, and DOT export.

File format (extension ``.fa.json``, UTF-8 JSON):

    {
      "name": "optional display name",
      "initialState": "START",
      "transitions": [["START", "a", "A"], ...],
      "acceptStates": ["B", "C"],
      "states": ["X"]          // optional, for isolated states only
    }

Serialization is canonical: fixed key order, transitions in stored order,
``acceptStates`` and ``states`` sorted, so parse/serialize round-trips are
byte-stable.
"""

from __future__ import annotations

import copy
import json

from .core import (
    AutomatonError,
    FiniteAutomaton,
    Transition,
    state_set,
    validate,
)
from .simulation import Color, StateColoring

REQUIRED_FIELDS = ("initialState", "transitions", "acceptStates")


def automaton_from_document(doc: object) -> FiniteAutomaton:
    """Build and validate an automaton from an already-decoded document."""
    if not isinstance(doc, dict):
        raise AutomatonError("MALFORMED_DOCUMENT", "document must be a JSON object")
    for field in REQUIRED_FIELDS:
        if field not in doc:
            raise AutomatonError(
                "MISSING_FIELD", f"document is missing field {field!r}", detail=field
            )
    initial = doc["initialState"]
    if not isinstance(initial, str):
        raise AutomatonError("MALFORMED_DOCUMENT", "initialState must be a string")
    raw_transitions = doc["transitions"]
    if not isinstance(raw_transitions, list):
        raise AutomatonError("MALFORMED_DOCUMENT", "transitions must be a list of triples")
    transitions = []
    for entry in raw_transitions:
        if (
            not isinstance(entry, list)
            or len(entry) != 3
            or not all(isinstance(part, str) for part in entry)
        ):
            raise AutomatonError(
                "MALFORMED_DOCUMENT",
                f"transition {entry!r} must be a [from, symbol, to] triple of strings",
            )
        transitions.append(Transition(entry[0], entry[1], entry[2]))
    accept_states = _string_list(doc, "acceptStates")
    declared = _string_list(doc, "states") if "states" in doc else []
    if "name" in doc and not isinstance(doc["name"], str):
        raise AutomatonError("MALFORMED_DOCUMENT", "name must be a string")

    automaton = FiniteAutomaton(
        initial, tuple(transitions), frozenset(accept_states), frozenset(declared)
    )
    issues = validate(automaton)
    if issues:
        raise AutomatonError(issues[0].code, issues[0].message)
    return automaton


def _string_list(doc: dict, field: str) -> list[str]:
    value = doc[field]
    if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
        raise AutomatonError("MALFORMED_DOCUMENT", f"{field} must be a list of strings")
    return value


def parse_automaton(text: str | bytes) -> FiniteAutomaton:
    """Parse document text into a validated automaton."""
    try:
        doc = json.loads(text)
    except ValueError as exc:  # covers JSON and UTF-8 decoding errors
        raise AutomatonError("MALFORMED_DOCUMENT", f"not valid JSON: {exc}") from exc
    return automaton_from_document(doc)


def automaton_to_document(a: FiniteAutomaton, name: str | None = None) -> dict:
    """The canonical document for ``a`` (keys in fixed order)."""
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["initialState"] = a.initial_state
    doc["transitions"] = [[t.src, t.symbol, t.dst] for t in a.transitions]
    doc["acceptStates"] = sorted(a.accept_states)
    if a.declared_states:
        doc["states"] = sorted(a.declared_states)
    return doc


def format_document(doc: dict) -> str:
    """Canonical document text: one transition triple per line, fixed key order."""
    parts = []
    for key, value in doc.items():
        if key == "transitions" and value:
            inner = ",\n".join(
                "    " + json.dumps(triple, ensure_ascii=False) for triple in value
            )
            parts.append(f'  "transitions": [\n{inner}\n  ]')
        else:
            parts.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def serialize_automaton(a: FiniteAutomaton) -> str:
    """Canonical document text; ``parse_automaton`` inverts it exactly."""
    return format_document(automaton_to_document(a))


# Bundled teaching examples.  "example1DFA" is the classic four-state
# partial DFA; "example2NFA" accepts words ending in "ab" and is genuinely
# nondeterministic; "trap" has a sink state that is accessible but not
# productive plus an isolated state, so its useful states are a proper
# subset of its state set.
_EXAMPLES: tuple[dict, ...] = (
    {
        "name": "example1DFA",
        "initialState": "START",
        "transitions": [
            ["START", "a", "A"],
            ["A", "b", "B"],
            ["B", "a", "C"],
            ["C", "b", "B"],
            ["C", "a", "A"],
        ],
        "acceptStates": ["START", "B", "C"],
    },
    {
        "name": "example2NFA",
        "initialState": "S",
        "transitions": [
            ["S", "a", "S"],
            ["S", "b", "S"],
            ["S", "a", "A"],
            ["A", "b", "B"],
        ],
        "acceptStates": ["B"],
    },
    {
        "name": "trap",
        "initialState": "S",
        "transitions": [
            ["S", "a", "F"],
            ["S", "b", "T"],
            ["T", "a", "T"],
            ["T", "b", "T"],
        ],
        "acceptStates": ["F"],
        "states": ["X"],
    },
)


def list_examples() -> dict[str, dict]:
    """The bundled catalog, name -> document (fresh copies, stable order)."""
    return {doc["name"]: copy.deepcopy(doc) for doc in _EXAMPLES}


def _dot_quote(name: str) -> str:
    escaped = (
        name.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
    )
    return f'"{escaped}"'


def export_dot(a: FiniteAutomaton, coloring: StateColoring | None = None) -> str:
    """Render ``a`` as a DOT digraph.

    Accept states get a double border, an arrow from an invisible point
    marks the initial state, and ``coloring`` (state -> Color) fills nodes
    blue/green/red.
    """
    states = state_set(a)
    marker = "__start__"
    while marker in states:
        marker += "_"
    lines = ["digraph finite_automaton {", "  rankdir=LR;", f"  {marker} [shape=point];"]
    for state in sorted(states):
        attrs = ["shape=doublecircle" if state in a.accept_states else "shape=circle"]
        color = coloring.get(state) if coloring else None
        if color is not None and color is not Color.PLAIN:
            attrs.append("style=filled")
            attrs.append(f"fillcolor={color.value.lower()}")
        lines.append(f"  {_dot_quote(state)} [{', '.join(attrs)}];")
    lines.append(f"  {marker} -> {_dot_quote(a.initial_state)};")
    for t in a.transitions:
        lines.append(
            f"  {_dot_quote(t.src)} -> {_dot_quote(t.dst)} [label={_dot_quote(t.symbol)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
