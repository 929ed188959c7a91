"""Independent oracles the engine is checked against.

Acceptance is re-decided by enumerating raw transition paths (no state-set
merging), reachability by explicit queue BFS over adjacency maps.  Nothing
here calls into the engine's own algorithms.
"""

from collections import defaultdict, deque

from fa_workbench.core import FiniteAutomaton


def accepted_words_by_enumeration(a: FiniteAutomaton, max_len: int) -> set[str]:
    """Every word of length <= max_len accepted, by walking all transition paths."""
    adjacency: dict[str, list[tuple[str, str]]] = defaultdict(list)
    for t in a.transitions:
        adjacency[t.src].append((t.symbol, t.dst))
    accepted: set[str] = set()
    stack: list[tuple[str, str]] = [(a.initial_state, "")]
    while stack:
        state, word = stack.pop()
        if state in a.accept_states:
            accepted.add(word)
        if len(word) < max_len:
            for symbol, dst in adjacency[state]:
                stack.append((dst, word + symbol))
    return accepted


def accepts_by_path_enumeration(a: FiniteAutomaton, word: str) -> bool:
    """DFS over individual transition paths consuming exactly ``word``."""
    adjacency: dict[tuple[str, str], list[str]] = defaultdict(list)
    for t in a.transitions:
        adjacency[(t.src, t.symbol)].append(t.dst)
    stack: list[tuple[str, int]] = [(a.initial_state, 0)]
    while stack:
        state, consumed = stack.pop()
        if consumed == len(word):
            if state in a.accept_states:
                return True
            continue
        for dst in adjacency[(state, word[consumed])]:
            stack.append((dst, consumed + 1))
    return False


def forward_bfs(a: FiniteAutomaton) -> set[str]:
    """States reachable from the initial state, by queue BFS."""
    adjacency: dict[str, list[str]] = defaultdict(list)
    for t in a.transitions:
        adjacency[t.src].append(t.dst)
    seen = {a.initial_state}
    queue = deque([a.initial_state])
    while queue:
        state = queue.popleft()
        for dst in adjacency[state]:
            if dst not in seen:
                seen.add(dst)
                queue.append(dst)
    return seen


def backward_bfs(a: FiniteAutomaton) -> set[str]:
    """States from which an accept state is reachable, by reverse queue BFS."""
    reverse: dict[str, list[str]] = defaultdict(list)
    for t in a.transitions:
        reverse[t.dst].append(t.src)
    seen = set(a.accept_states)
    queue = deque(seen)
    while queue:
        state = queue.popleft()
        for src in reverse[state]:
            if src not in seen:
                seen.add(src)
                queue.append(src)
    return seen
