"""Acceptance suite: one test per release criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""

import json
import random
import time

import pytest
from fastapi.testclient import TestClient

from conftest import all_words
from oracles import accepted_words_by_enumeration, backward_bfs, forward_bfs
from randgen import random_automaton, random_unicode_automaton

from fa_workbench.core import (
    AutomatonError,
    accepts,
    accessible_states,
    productive_states,
    trace,
    useful_states,
)
from fa_workbench.persistence import (
    automaton_from_document,
    list_examples,
    parse_automaton,
    serialize_automaton,
)
from fa_workbench.service import create_app
from fa_workbench.simulation import (
    SessionStatus,
    color_view,
    current_word_view,
    start_session,
    step_back,
    step_forward,
)

SEED = 20260811
CORPUS_SIZE = 10_000
WORD_ALPHABET = "ab"
MAX_WORD_LEN = 6


def report(name: str, ok: bool, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}{suffix}", flush=True)
    assert ok, f"{name}{suffix}"


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(SEED)
    return [random_automaton(rng) for _ in range(CORPUS_SIZE)]


def test_bundled_example_reproduction():
    automaton = automaton_from_document(list_examples()["example1DFA"])
    started = time.perf_counter()
    accepted = accepts(automaton, "aba")
    rejected = accepts(automaton, "abaa")
    visited = [sorted(c.active) for c in trace(automaton, "aba").configs]
    elapsed = time.perf_counter() - started
    ok = (
        accepted is True
        and rejected is False
        and visited == [["START"], ["A"], ["B"], ["C"]]
        and elapsed < 1.0
    )
    report("bundled-example-reproduction", ok, f"{elapsed * 1000:.1f} ms")


def test_oracle_equivalence(corpus):
    words = all_words(WORD_ALPHABET, MAX_WORD_LEN)
    started = time.perf_counter()
    mismatches = 0
    for automaton in corpus:
        oracle_accepted = accepted_words_by_enumeration(automaton, MAX_WORD_LEN)
        for word in words:
            if accepts(automaton, word) != (word in oracle_accepted):
                mismatches += 1
    elapsed = time.perf_counter() - started
    ok = mismatches == 0 and elapsed < 60.0
    report(
        "oracle-equivalence",
        ok,
        f"{len(corpus)} automata x {len(words)} words, {mismatches} mismatches, {elapsed:.1f} s",
    )


def test_classification_oracle(corpus):
    mismatches = 0
    for automaton in corpus:
        accessible = accessible_states(automaton)
        productive = productive_states(automaton)
        useful = useful_states(automaton)
        if accessible != forward_bfs(automaton):
            mismatches += 1
        if productive != backward_bfs(automaton):
            mismatches += 1
        if useful != accessible & productive:
            mismatches += 1
    report("classification-oracle", mismatches == 0, f"{len(corpus)} automata, {mismatches} mismatches")


def test_undo_soundness():
    rng = random.Random(SEED + 4)
    mismatches = 0
    walks = 400
    for _ in range(walks):
        automaton = random_automaton(rng)
        word = "".join(rng.choice("abc") for _ in range(rng.randint(0, 8)))
        session = start_session(automaton, word)
        for _ in range(rng.randint(0, 100)):
            if rng.random() < 0.6:
                step_forward(session)
            else:
                step_back(session)
        fresh = start_session(automaton, word)
        for _ in range(session.position):
            step_forward(fresh)
        if (
            color_view(fresh) != color_view(session)
            or current_word_view(fresh) != current_word_view(session)
            or fresh.status is not session.status
        ):
            mismatches += 1
    report("undo-soundness", mismatches == 0, f"{walks} random walks, {mismatches} mismatches")


def _random_jsonish(rng: random.Random, depth: int = 0):
    kinds = ["str", "int", "float", "bool", "null"]
    if depth < 2:
        kinds += ["list", "dict"]
    kind = rng.choice(kinds)
    if kind == "str":
        return "".join(rng.choice("ab\"\\{}[]:,\u00e9") for _ in range(rng.randint(0, 6)))
    if kind == "int":
        return rng.randint(-5, 5)
    if kind == "float":
        return rng.random()
    if kind == "bool":
        return rng.random() < 0.5
    if kind == "null":
        return None
    if kind == "list":
        return [_random_jsonish(rng, depth + 1) for _ in range(rng.randint(0, 4))]
    keys = ["initialState", "transitions", "acceptStates", "states", "name", "junk"]
    return {rng.choice(keys): _random_jsonish(rng, depth + 1) for _ in range(rng.randint(0, 4))}


def test_round_trip_and_parser_totality():
    rng = random.Random(SEED + 5)
    round_trip_failures = 0
    cases = 1000
    for _ in range(cases):
        automaton = random_unicode_automaton(rng)
        if parse_automaton(serialize_automaton(automaton)) != automaton:
            round_trip_failures += 1
    crashes = 0
    for _ in range(2000):
        blob = bytes(rng.randrange(256) for _ in range(rng.randint(0, 80)))
        try:
            parse_automaton(blob)
        except AutomatonError:
            pass
        except Exception:
            crashes += 1
    for _ in range(500):
        try:
            parse_automaton(json.dumps(_random_jsonish(rng)))
        except AutomatonError:
            pass
        except Exception:
            crashes += 1
    ok = round_trip_failures == 0 and crashes == 0
    report(
        "round-trip",
        ok,
        f"{cases} round trips, {round_trip_failures} failures; 2500 fuzz inputs, {crashes} crashes",
    )


def test_service_contract(m1):
    client = TestClient(create_app(ui_dir=""))
    document = json.loads(serialize_automaton(m1))
    checks = []

    assert client.put("/automaton", json=document).status_code == 200
    created = client.post("/sessions", json={"word": "aba"}).json()
    session_id = created["sessionId"]
    mirror = start_session(m1, "aba")

    def expected():
        view = color_view(mirror)
        payload = {
            "position": mirror.position,
            "remaining": view.remaining,
            "colors": {s: c.value for s, c in sorted(view.colors.items())},
            "status": mirror.status.value,
            "wordView": current_word_view(mirror),
            "caption": view.caption,
        }
        if mirror.status is SessionStatus.FINISHED:
            payload["verdict"] = mirror.trace.verdict.value
        return payload

    checks.append(created["view"] == expected())
    for op in ["forward", "forward", "forward", "back", "forward"]:
        api_view = client.post(f"/sessions/{session_id}/{op}").json()
        step_forward(mirror) if op == "forward" else step_back(mirror)
        checks.append(api_view == expected())

    # any edit must retire previously issued sessions
    assert client.put("/automaton", json=document).status_code == 200
    stale_forward = client.post(f"/sessions/{session_id}/forward")
    stale_get = client.get(f"/sessions/{session_id}")
    checks.append(stale_forward.status_code == 410)
    checks.append(stale_get.status_code == 410)

    report("service-contract", all(checks), f"{sum(checks)}/{len(checks)} checks")
