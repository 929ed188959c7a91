import pytest
from hypothesis import strategies as st

from fa_workbench.core import FiniteAutomaton, Transition

M1_TRIPLES = (
    ("START", "a", "A"),
    ("A", "b", "B"),
    ("B", "a", "C"),
    ("C", "b", "B"),
    ("C", "a", "A"),
)

STATE_NAMES = ("Q0", "Q1", "Q2", "Q3", "Q4", "Q5")


def make_automaton(initial, triples, accept, declared=()):
    return FiniteAutomaton(
        initial,
        tuple(Transition(*t) for t in triples),
        frozenset(accept),
        frozenset(declared),
    )


@pytest.fixture
def m1() -> FiniteAutomaton:
    """Four-state partial DFA accepting e.g. "aba" but not "abaa"."""
    return make_automaton("START", M1_TRIPLES, {"START", "B", "C"})


@pytest.fixture
def m3(m1) -> FiniteAutomaton:
    """m1 plus a dead-end state D reachable from A."""
    return make_automaton("START", M1_TRIPLES + (("A", "a", "D"),), {"START", "B", "C"})


@st.composite
def small_automata(draw, alphabet="ab", max_states=6, max_transitions=12):
    states = STATE_NAMES[: draw(st.integers(1, max_states))]
    triples = draw(
        st.lists(
            st.tuples(
                st.sampled_from(states),
                st.sampled_from(alphabet),
                st.sampled_from(states),
            ),
            max_size=max_transitions,
        )
    )
    accept = draw(st.frozensets(st.sampled_from(states)))
    declared = frozenset(states) if draw(st.booleans()) else frozenset()
    return FiniteAutomaton(
        draw(st.sampled_from(states)),
        tuple(Transition(*t) for t in triples),
        accept,
        declared,
    )


@st.composite
def deterministic_automata(draw, alphabet="ab", max_states=6):
    states = STATE_NAMES[: draw(st.integers(1, max_states))]
    mapping = draw(
        st.dictionaries(
            st.tuples(st.sampled_from(states), st.sampled_from(alphabet)),
            st.sampled_from(states),
        )
    )
    transitions = tuple(Transition(src, sym, dst) for (src, sym), dst in mapping.items())
    accept = draw(st.frozensets(st.sampled_from(states)))
    return FiniteAutomaton(draw(st.sampled_from(states)), transitions, accept)


def words(alphabet="ab", max_size=6):
    return st.text(alphabet=alphabet, max_size=max_size)


def all_words(alphabet: str, max_len: int) -> list[str]:
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + c for w in frontier for c in alphabet]
        out.extend(frontier)
    return out
