"""Acceptance gate: each criterion runs at its stated tolerance and prints
one PASS/FAIL line (visible with `pytest -s` or `-rA`)."""

from __future__ import annotations

import itertools
import json
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient
from hypothesis import given, settings
from hypothesis import strategies as st

from quizhost.api import create_app
from quizhost.auth import Principal
from quizhost.cli import main
from quizhost.config import ServerConfig
from quizhost.engine import ExpiredNotice, FinishedNotice, QuestionView, TestEngine
from quizhost.errors import ForwardOnly, SessionFinished, UnknownOption
from quizhost.model import Role
from quizhost.store import StoreConfig, open_store

from conftest import FakeClock, make_store, seed_figure8_test, seed_uniform_test
from test_api import AUTH_ROUTES, ADMIN_ROUTES, auth_header, login, register
from test_store import make_user, result_for

T0 = 1_700_000_000


@contextmanager
def criterion(number: int, description: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} FAIL {description}")
        raise
    print(f"ACCEPTANCE {number} PASS {description}")


def fresh_client(store=None, clock=None, time_limit=600, n_questions=3, n_options=4):
    store = store if store is not None else make_store()
    seeded = seed_uniform_test(
        store, n_questions=n_questions, n_options=n_options, time_limit=time_limit
    )
    config = ServerConfig(store=StoreConfig(location=":memory:", database_name="x"))
    app = create_app(config, store=store, clock=clock or FakeClock(T0))
    return TestClient(app), store, seeded


EXPECTED_FKS = {
    ("subdomains", "domain_id", "domains"),
    ("tests", "subdomain_id", "subdomains"),
    ("questions", "test_id", "tests"),
    ("answer_options", "question_id", "questions"),
    ("sessions", "user_id", "users"),
    ("sessions", "test_id", "tests"),
    ("session_answers", "session_id", "sessions"),
    ("session_answers", "question_id", "questions"),
    ("session_answers", "chosen_option_id", "answer_options"),
    ("results", "user_id", "users"),
    ("results", "test_id", "tests"),
    ("results", "session_id", "sessions"),
    ("auth_tokens", "user_id", "users"),
}


def test_criterion_1_schema_count_and_fk_graph(tmp_path):
    with criterion(1, "migrate yields exactly 10 tables with the expected FK graph in < 1 s"):
        config_path = tmp_path / "config.json"
        config_path.write_text(
            json.dumps({"store": {"location": str(tmp_path), "database_name": "tests"}})
        )
        started = time.perf_counter()
        assert main(["--config", str(config_path), "migrate"]) == 0
        store = open_store(StoreConfig(location=str(tmp_path), database_name="tests"))
        tables = store.table_names()
        assert len(tables) == 10
        actual_fks = set()
        for table in tables:
            for row in store._query(f"PRAGMA foreign_key_list({table})"):
                actual_fks.add((table, row["from"], row["table"]))
        elapsed = time.perf_counter() - started
        store.close()
        assert actual_fks == EXPECTED_FKS
        assert elapsed < 1.0, f"schema check took {elapsed:.3f}s"


@settings(max_examples=1000, deadline=None)
@given(
    n_questions=st.integers(min_value=3, max_value=9),
    positions=st.lists(st.integers(min_value=1, max_value=11), min_size=1, max_size=14),
)
def forward_only_property(n_questions, positions):
    store = make_store()
    seeded = seed_uniform_test(store, n_questions=n_questions, n_options=3)
    engine = TestEngine(store)
    principal = Principal(user_id=make_user(store), role=Role.REGULAR)
    started = engine.start_session(principal, seeded.test_id, now=T0)
    accepted: list[int] = []
    now = T0
    for position in positions:
        now += 1
        try:
            qid = seeded.question_ids[position - 1] if position <= n_questions else None
            option_id = seeded.correct[qid] if qid else 1
            outcome = engine.submit_answer(started.session_id, position, option_id, now)
            accepted.append(position)
            if isinstance(outcome.next, FinishedNotice):
                break
        except ForwardOnly:
            # Any out-of-order submission must land here, never be recorded.
            assert position != len(accepted) + 1
            continue
        except (UnknownOption, SessionFinished):
            continue
    assert accepted == list(range(1, len(accepted) + 1)), "accepted set must be a prefix"
    assert len(set(accepted)) == len(accepted), "no position accepted twice"
    store.close()


def test_criterion_2_forward_only_discipline():
    with criterion(2, ">=1000 random call sequences keep a duplicate-free 1..k prefix"):
        forward_only_property()


def test_criterion_3_expiry_semantics():
    with criterion(3, "2s limit: t=0,1 accepted; t=3 expired scoring prior answers; t=deadline accepted"):
        store = make_store()
        seeded = seed_uniform_test(store, n_questions=3, n_options=4, time_limit=2)
        engine = TestEngine(store)
        principal = Principal(user_id=make_user(store), role=Role.REGULAR)

        started = engine.start_session(principal, seeded.test_id, now=T0)
        q1, q2, q3 = seeded.question_ids
        first = engine.submit_answer(started.session_id, 1, seeded.correct[q1], T0)
        assert first.correct is True
        second = engine.submit_answer(started.session_id, 2, seeded.correct[q2], T0 + 1)
        assert second.correct is True
        late = engine.submit_answer(started.session_id, 3, seeded.correct[q3], T0 + 3)
        assert isinstance(late.next, ExpiredNotice)
        assert late.correct is None
        result = store.get_result(late.next.result_id)
        assert result.score == 2, "score counts exactly the two prior answers"
        assert result.answered_count == 2
        assert result.outcome.value == "expired"

        # Boundary: an answer exactly at the deadline is still accepted.
        boundary = engine.start_session(principal, seeded.test_id, now=T0 + 100)
        engine.submit_answer(boundary.session_id, 1, seeded.correct[q1], T0 + 100)
        engine.submit_answer(boundary.session_id, 2, seeded.correct[q2], T0 + 101)
        at_deadline = engine.submit_answer(
            boundary.session_id, 3, seeded.correct[q3], T0 + 102
        )
        assert at_deadline.correct is True
        assert isinstance(at_deadline.next, FinishedNotice)
        assert at_deadline.next.score == 3
        store.close()


def test_criterion_4_scoring_oracle_end_to_end():
    with criterion(4, "all 64 answer vectors over HTTP match the brute-force oracle; mean exactly 0.75; < 10 s"):
        started_at = time.perf_counter()
        client, store, seeded = fresh_client()
        register(client, "oracle")
        token = login(client, "oracle")["token"]
        correct_index = 0  # seed_uniform_test puts the correct option first
        total_score = 0
        for vector in itertools.product(range(4), repeat=3):
            session = client.post(
                "/api/sessions",
                json={"test_id": seeded.test_id},
                headers=auth_header(token),
            ).json()
            sid = session["session_id"]
            engine_score = None
            for position, choice in enumerate(vector, start=1):
                qid = seeded.question_ids[position - 1]
                outcome = client.post(
                    f"/api/sessions/{sid}/answer",
                    json={
                        "position": position,
                        "option_id": seeded.options[qid][choice],
                    },
                    headers=auth_header(token),
                ).json()
                if outcome["next"]["kind"] == "finished":
                    engine_score = outcome["next"]["score"]
            # Independent oracle: per-question comparison, no engine code.
            oracle_score = sum(1 for choice in vector if choice == correct_index)
            assert engine_score == oracle_score, f"vector {vector}"
            total_score += engine_score
        assert Fraction(total_score, 64) == Fraction(3, 4), "mean score must be exactly 0.75"
        elapsed = time.perf_counter() - started_at
        assert elapsed < 10.0, f"end-to-end oracle run took {elapsed:.2f}s"


def test_criterion_5_history_cap():
    with criterion(5, "25 stored results; GET /api/results?limit=20 returns the 20 newest descending"):
        client, store, seeded = fresh_client()
        register(client, "historian")
        user_id = login(client, "historian")["user"]["id"]
        token = login(client, "historian")["token"]
        for i in range(25):
            store.save_result(result_for(user_id, seeded.test_id, 9000 + i), [])
        listed = client.get(
            "/api/results", params={"limit": 20}, headers=auth_header(token)
        ).json()
        assert len(listed) == 20
        finished = [row["finished_at"] for row in listed]
        assert finished == sorted(finished, reverse=True)
        assert finished == list(range(9024, 9004, -1))


def test_criterion_6_access_control_and_leak_scan():
    with criterion(6, "401 without token, 403 on admin routes for Regular, no correctness data in question payloads"):
        client, store, seeded = fresh_client()
        for method, path in AUTH_ROUTES + ADMIN_ROUTES:
            response = client.request(method, path, json={})
            assert response.status_code == 401, f"{method} {path}"
        register(client, "regular")
        token = login(client, "regular")["token"]
        for method, path in ADMIN_ROUTES:
            response = client.request(method, path, json={}, headers=auth_header(token))
            assert response.status_code == 403, f"{method} {path}"

        recorded = []
        session = client.post(
            "/api/sessions", json={"test_id": seeded.test_id}, headers=auth_header(token)
        ).json()
        sid = session["session_id"]
        view = client.get(
            f"/api/sessions/{sid}/question", headers=auth_header(token)
        ).json()
        recorded.append(view)
        for position in (1, 2):
            view = client.post(
                f"/api/sessions/{sid}/answer",
                json={"position": position, "option_id": view["options"][0]["option_id"]},
                headers=auth_header(token),
            ).json()["next"]
            recorded.append(view)
        for payload in recorded:
            assert payload["kind"] == "question"
            for option in payload["options"]:
                assert set(option) == {"option_id", "text"}, "option leaks extra fields"
            text = json.dumps(payload)
            assert "is_correct" not in text
            assert "correct_option_id" not in text


def test_criterion_7_annotation_fidelity():
    with criterion(7, "wrong choice names the correct answer, correct option flagged, unanswered unflagged"):
        clock = FakeClock(T0)
        store = make_store()
        seeded = seed_figure8_test(store, time_limit=300)
        config = ServerConfig(store=StoreConfig(location=":memory:", database_name="x"))
        client = TestClient(create_app(config, store=store, clock=clock))
        register(client, "flory")
        token = login(client, "flory")["token"]
        sid = client.post(
            "/api/sessions", json={"test_id": seeded.test_id}, headers=auth_header(token)
        ).json()["session_id"]
        q1, q2, _ = seeded.question_ids
        karate = seeded.options[q1][1]
        damasc = seeded.options[q2][2]
        client.post(
            f"/api/sessions/{sid}/answer",
            json={"position": 1, "option_id": karate},
            headers=auth_header(token),
        )
        client.post(
            f"/api/sessions/{sid}/answer",
            json={"position": 2, "option_id": damasc},
            headers=auth_header(token),
        )
        clock.advance(301)
        notice = client.get(
            f"/api/sessions/{sid}/question", headers=auth_header(token)
        ).json()
        assert notice["kind"] == "expired"
        detail = client.get(
            f"/api/results/{notice['result_id']}", headers=auth_header(token)
        ).json()

        flags_q1 = {o["text"]: o["flag"] for o in detail["questions"][0]["options"]}
        assert flags_q1["Karate"] == "Raspunsul corect este: Baseball"
        assert flags_q1["Baseball"] == "Acesta este raspunsul corect"
        assert flags_q1["Tae Kwon Do"] is None and flags_q1["Inot"] is None

        flags_q2 = {o["text"]: o["flag"] for o in detail["questions"][1]["options"]}
        assert flags_q2["Damasc"] == "Acesta este raspunsul corect"
        assert flags_q2["Atena"] is None and flags_q2["Roma"] is None

        q3 = detail["questions"][2]
        assert q3["chosen_option_id"] is None
        assert all(o["flag"] is None for o in q3["options"])
        assert detail["score"] == 1


def test_criterion_8_startup_errors(tmp_path, capsys):
    with criterion(8, "unreachable store / unknown database exit 1 with the verbatim messages"):
        unreachable = tmp_path / "unreachable.json"
        unreachable.write_text(
            json.dumps({"store": {"location": str(tmp_path / "void"), "database_name": "t"}})
        )
        assert main(["--config", str(unreachable), "serve"]) == 1
        assert "Connection error" in capsys.readouterr().err

        unknown = tmp_path / "unknown.json"
        unknown.write_text(
            json.dumps({"store": {"location": str(tmp_path), "database_name": "nope"}})
        )
        assert main(["--config", str(unknown), "serve"]) == 1
        assert "Database selection Error" in capsys.readouterr().err


def test_criterion_9_end_to_end_matches_engine():
    with criterion(9, "scripted register->login->catalog->session->9 answers->result over HTTP < 5 s, equal to direct engine run"):
        started_at = time.perf_counter()
        # Fixed answer pattern over 9 questions: right, wrong, right, wrong...
        choices = [0 if i % 2 == 0 else 1 for i in range(9)]

        client, store, seeded = fresh_client(n_questions=9, n_options=4)
        register(client, "flory")
        token = login(client, "flory")["token"]

        domains = client.get("/api/catalog/domains", headers=auth_header(token)).json()
        subdomains = client.get(
            f"/api/catalog/domains/{domains[0]['id']}/subdomains",
            headers=auth_header(token),
        ).json()
        tests = client.get(
            f"/api/catalog/subdomains/{subdomains[0]['id']}/tests",
            headers=auth_header(token),
        ).json()
        assert tests[0]["id"] == seeded.test_id
        assert tests[0]["question_count"] == 9

        sid = client.post(
            "/api/sessions", json={"test_id": seeded.test_id}, headers=auth_header(token)
        ).json()["session_id"]
        final = None
        for position, choice in enumerate(choices, start=1):
            qid = seeded.question_ids[position - 1]
            outcome = client.post(
                f"/api/sessions/{sid}/answer",
                json={"position": position, "option_id": seeded.options[qid][choice]},
                headers=auth_header(token),
            ).json()
            final = outcome["next"]
        assert final["kind"] == "finished"
        http_detail = client.get(
            f"/api/results/{final['result_id']}", headers=auth_header(token)
        ).json()

        # Direct engine invocation on an identically seeded store.
        engine_store = make_store()
        engine_seeded = seed_uniform_test(engine_store, n_questions=9, n_options=4)
        engine = TestEngine(engine_store)
        principal = Principal(user_id=make_user(engine_store), role=Role.REGULAR)
        session = engine.start_session(principal, engine_seeded.test_id, now=T0)
        outcome = None
        for position, choice in enumerate(choices, start=1):
            qid = engine_seeded.question_ids[position - 1]
            outcome = engine.submit_answer(
                session.session_id,
                position,
                engine_seeded.options[qid][choice],
                T0 + position,
            )
        assert isinstance(outcome.next, FinishedNotice)
        engine_detail = engine.result_detail(outcome.next.result_id)

        assert http_detail["score"] == engine_detail.score == 5
        assert http_detail["answered_count"] == engine_detail.answered_count == 9
        assert http_detail["outcome"] == engine_detail.outcome.value == "completed"
        http_flags = [
            [o["flag"] for o in q["options"]] for q in http_detail["questions"]
        ]
        engine_flags = [
            [o.flag for o in q.options] for q in engine_detail.questions
        ]
        assert http_flags == engine_flags
        elapsed = time.perf_counter() - started_at
        assert elapsed < 5.0, f"end-to-end flow took {elapsed:.2f}s"
        engine_store.close()
