"""Interactive finite-automaton workbench: engine, stepping sessions, file I/O."""

from .core import (
    AutomatonError,
    Configuration,
    FiniteAutomaton,
    Trace,
    Transition,
    ValidationIssue,
    Verdict,
    accepts,
    accessible_states,
    add_state,
    add_transition,
    alphabet,
    is_deterministic,
    mark_accept,
    new_automaton,
    productive_states,
    state_set,
    step_config,
    trace,
    transitions_for,
    useful_states,
    validate,
)
from .persistence import (
    export_dot,
    list_examples,
    parse_automaton,
    serialize_automaton,
)
from .simulation import (
    Color,
    ColorView,
    SessionStatus,
    SimulationSession,
    color_view,
    current_word_view,
    run_all,
    start_session,
    step_back,
    step_forward,
)

__all__ = [
    "AutomatonError",
    "Color",
    "ColorView",
    "Configuration",
    "FiniteAutomaton",
    "SessionStatus",
    "SimulationSession",
    "Trace",
    "Transition",
    "ValidationIssue",
    "Verdict",
    "accepts",
    "accessible_states",
    "add_state",
    "add_transition",
    "alphabet",
    "color_view",
    "current_word_view",
    "export_dot",
    "is_deterministic",
    "list_examples",
    "mark_accept",
    "new_automaton",
    "parse_automaton",
    "productive_states",
    "run_all",
    "serialize_automaton",
    "start_session",
    "state_set",
    "step_back",
    "step_config",
    "step_forward",
    "trace",
    "transitions_for",
    "useful_states",
    "validate",
]
