#!/usr/bin/env python3
"""Regenerate frontend/tests/fixtures from the real service responses.

The frontend test suite replays these recorded payloads through a fake
fetch, so it checks the UI against the actual wire contract without
running the Python server under node.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from fa_workbench.persistence import list_examples
from fa_workbench.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {path}")


def record_views(client: TestClient, word: str) -> list[dict]:
    created = client.post("/sessions", json={"word": word}).json()
    views = [created["view"]]
    while views[-1]["status"] == "RUNNING":
        views.append(client.post(f"/sessions/{created['sessionId']}/forward").json())
    return views


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(ui_dir=""))

    dump("examples.json", client.get("/examples").json())

    catalog = list_examples()
    summary_m1 = client.put("/automaton", json=catalog["example1DFA"]).json()
    dump("summary_example1DFA.json", summary_m1)
    dump("views_aba.json", record_views(client, "aba"))
    dump("views_abaa.json", record_views(client, "abaa"))

    session = client.post("/sessions", json={"word": "abaa"}).json()
    stream = client.post(f"/sessions/{session['sessionId']}/run", json={"delayMs": 0})
    (FIXTURES / "sse_abaa.txt").write_text(stream.text, encoding="utf-8")
    print(f"wrote {FIXTURES / 'sse_abaa.txt'}")

    summary_trap = client.put("/automaton", json=catalog["trap"]).json()
    dump("summary_trap.json", summary_trap)
    dump(
        "nature_trap.json",
        {
            kind: client.get("/automaton/nature", params={"kind": kind}).json()["states"]
            for kind in ("productive", "accessible", "useful")
        },
    )


if __name__ == "__main__":
    main()
