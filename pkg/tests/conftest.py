"""Shared fixtures: in-memory stores, seeded catalogs, synthetic clock."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import pytest

from quizhost.admin import AdminService
from quizhost.auth import AuthService, Principal
from quizhost.engine import TestEngine
from quizhost.model import AnswerOption, Domain, Question, Role, Subdomain, Test
from quizhost.store import Store, StoreConfig, open_store

START_TIME = 1_700_000_000


class FakeClock:
    def __init__(self, now: float = START_TIME):
        self.now = float(now)

    def __call__(self) -> float:
        return self.now

    def advance(self, seconds: float) -> None:
        self.now += seconds


@dataclass
class SeededTest:
    domain_id: int
    subdomain_id: int
    test_id: int
    question_ids: list[int] = field(default_factory=list)
    options: dict[int, list[int]] = field(default_factory=dict)
    correct: dict[int, int] = field(default_factory=dict)


def make_store() -> Store:
    store = open_store(StoreConfig(location=":memory:", database_name="tests"))
    store.init_schema()
    return store


def seed_uniform_test(
    store: Store,
    n_questions: int = 3,
    n_options: int = 4,
    correct_index: int = 0,
    time_limit: int = 600,
    title: str = "Testul nr 1",
    ordinal: int = 1,
    subdomain_id: int | None = None,
) -> SeededTest:
    """Seed a test where question i's correct option sits at correct_index."""
    if subdomain_id is None:
        domain_id = store.put_entity("domain", Domain(name="Teste grila"))
        subdomain_id = store.put_entity(
            "subdomain", Subdomain(domain_id=domain_id, name="Cultura generala")
        )
    else:
        domain = store.get_entity("subdomain", subdomain_id)
        domain_id = domain.domain_id
    test_id = store.put_entity(
        "test",
        Test(
            subdomain_id=subdomain_id,
            title=title,
            time_limit_seconds=time_limit,
            ordinal=ordinal,
        ),
    )
    seeded = SeededTest(domain_id=domain_id, subdomain_id=subdomain_id, test_id=test_id)
    for position in range(1, n_questions + 1):
        question_id = store.put_entity(
            "question",
            Question(test_id=test_id, text=f"Intrebarea {position}?", position=position),
        )
        seeded.question_ids.append(question_id)
        seeded.options[question_id] = []
        for index in range(n_options):
            option_id = store.put_entity(
                "option",
                AnswerOption(
                    question_id=question_id,
                    text=f"Varianta {position}.{index + 1}",
                    is_correct=index == correct_index,
                ),
            )
            seeded.options[question_id].append(option_id)
            if index == correct_index:
                seeded.correct[question_id] = option_id
    return seeded


FIGURE8_QUESTIONS = [
    (
        "Care este cel mai popular sport in Jamaica ?",
        ["Tae Kwon Do", "Karate", "Baseball", "Inot"],
        2,
    ),
    (
        "Care este cea mai veche capitala din lume ?",
        ["Atena", "Roma", "Damasc"],
        2,
    ),
    (
        "Cate lacuri intra in componenta Marilor Lacuri ?",
        ["2", "7", "5"],
        2,
    ),
]


def seed_figure8_test(store: Store, time_limit: int = 600) -> SeededTest:
    domain_id = store.put_entity("domain", Domain(name="Teste grila"))
    subdomain_id = store.put_entity(
        "subdomain", Subdomain(domain_id=domain_id, name="Cultura generala")
    )
    test_id = store.put_entity(
        "test",
        Test(
            subdomain_id=subdomain_id,
            title="Testul nr 3",
            time_limit_seconds=time_limit,
            ordinal=3,
        ),
    )
    seeded = SeededTest(domain_id=domain_id, subdomain_id=subdomain_id, test_id=test_id)
    for position, (text, options, correct_idx) in enumerate(FIGURE8_QUESTIONS, start=1):
        question_id = store.put_entity(
            "question", Question(test_id=test_id, text=text, position=position)
        )
        seeded.question_ids.append(question_id)
        seeded.options[question_id] = []
        for index, option_text in enumerate(options):
            option_id = store.put_entity(
                "option",
                AnswerOption(
                    question_id=question_id,
                    text=option_text,
                    is_correct=index == correct_idx,
                ),
            )
            seeded.options[question_id].append(option_id)
            if index == correct_idx:
                seeded.correct[question_id] = option_id
    return seeded


def fake_hash(password: str) -> str:
    # Cheap stand-in for seeding rows that never go through login.
    return "pbkdf2_sha256$1$00$" + hashlib.sha256(password.encode()).hexdigest()


def store_digest(store: Store) -> str:
    """Stable fingerprint of every row in every table."""
    parts: list[str] = []
    for table in sorted(store.table_names()):
        for row in store._query(f"SELECT * FROM {table} ORDER BY 1"):
            parts.append(f"{table}:{tuple(row)}")
    return hashlib.sha256("\n".join(parts).encode()).hexdigest()


@pytest.fixture
def store() -> Store:
    return make_store()


@pytest.fixture
def clock() -> FakeClock:
    return FakeClock()


@pytest.fixture
def auth(store, clock) -> AuthService:
    return AuthService(store, token_ttl=3600, clock=clock, hash_iterations=1000)


@pytest.fixture
def engine(store) -> TestEngine:
    return TestEngine(store)


@pytest.fixture
def admin(store) -> AdminService:
    return AdminService(store)


@pytest.fixture
def regular_user(auth) -> Principal:
    view = auth.register("flory", "parola123", "Popescu", "Florina", "flory@example.ro")
    return Principal(user_id=view.id, role=Role.REGULAR)


@pytest.fixture
def supervisor_user(auth) -> Principal:
    view = auth.register(
        "prof", "parola-prof", "Ionescu", "Mihai", "prof@example.ro",
        role=Role.SUPERVISOR,
    )
    return Principal(user_id=view.id, role=Role.SUPERVISOR)
