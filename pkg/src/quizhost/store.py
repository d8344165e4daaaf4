"""Relational store: schema, transactional CRUD, and result history queries.

The backing engine is embedded SQLite. A Store serializes transactions
behind one lock, so a single handle can be shared by request-handling
threads; every multi-row operation happens inside one transaction and
either commits whole or leaves the store untouched.
"""

from __future__ import annotations

import sqlite3
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterator

from .errors import (
    ConfigError,
    ConstraintError,
    SelectionError,
    StorageError,
    StoreConnectionError,
)
from .model import (
    AnswerOption,
    AnswerRecord,
    Domain,
    Outcome,
    Question,
    Role,
    Subdomain,
    Test,
    TestResult,
    UserAccount,
)

CONNECTION_ERROR_MESSAGE = "Connection error"
SELECTION_ERROR_MESSAGE = "Database selection Error"

TABLE_DDL: dict[str, str] = {
    "users": """
        CREATE TABLE users (
            id INTEGER PRIMARY KEY,
            username TEXT NOT NULL UNIQUE,
            email TEXT NOT NULL UNIQUE,
            password_hash TEXT NOT NULL,
            name TEXT NOT NULL DEFAULT '',
            first_name TEXT NOT NULL DEFAULT '',
            role TEXT NOT NULL DEFAULT 'regular',
            active INTEGER NOT NULL DEFAULT 1,
            created_at INTEGER NOT NULL DEFAULT 0
        )""",
    "domains": """
        CREATE TABLE domains (
            id INTEGER PRIMARY KEY,
            name TEXT NOT NULL
        )""",
    "subdomains": """
        CREATE TABLE subdomains (
            id INTEGER PRIMARY KEY,
            domain_id INTEGER NOT NULL REFERENCES domains(id) ON DELETE CASCADE,
            name TEXT NOT NULL
        )""",
    "tests": """
        CREATE TABLE tests (
            id INTEGER PRIMARY KEY,
            subdomain_id INTEGER NOT NULL REFERENCES subdomains(id) ON DELETE CASCADE,
            title TEXT NOT NULL,
            time_limit_seconds INTEGER NOT NULL,
            ordinal INTEGER NOT NULL DEFAULT 1
        )""",
    "questions": """
        CREATE TABLE questions (
            id INTEGER PRIMARY KEY,
            test_id INTEGER NOT NULL REFERENCES tests(id) ON DELETE CASCADE,
            text TEXT NOT NULL,
            position INTEGER NOT NULL
        )""",
    "answer_options": """
        CREATE TABLE answer_options (
            id INTEGER PRIMARY KEY,
            question_id INTEGER NOT NULL REFERENCES questions(id) ON DELETE CASCADE,
            text TEXT NOT NULL,
            is_correct INTEGER NOT NULL DEFAULT 0
        )""",
    "sessions": """
        CREATE TABLE sessions (
            id INTEGER PRIMARY KEY,
            user_id INTEGER NOT NULL REFERENCES users(id) ON DELETE CASCADE,
            test_id INTEGER NOT NULL REFERENCES tests(id) ON DELETE CASCADE,
            started_at INTEGER NOT NULL,
            deadline INTEGER NOT NULL,
            cursor INTEGER NOT NULL DEFAULT 1,
            state TEXT NOT NULL DEFAULT 'active'
        )""",
    "session_answers": """
        CREATE TABLE session_answers (
            id INTEGER PRIMARY KEY,
            session_id INTEGER NOT NULL REFERENCES sessions(id) ON DELETE CASCADE,
            question_id INTEGER NOT NULL REFERENCES questions(id) ON DELETE CASCADE,
            chosen_option_id INTEGER NOT NULL REFERENCES answer_options(id) ON DELETE CASCADE,
            correct INTEGER NOT NULL,
            answered_at INTEGER NOT NULL,
            UNIQUE (session_id, question_id)
        )""",
    "results": """
        CREATE TABLE results (
            id INTEGER PRIMARY KEY,
            user_id INTEGER NOT NULL REFERENCES users(id) ON DELETE CASCADE,
            test_id INTEGER NOT NULL REFERENCES tests(id) ON DELETE CASCADE,
            session_id INTEGER REFERENCES sessions(id) ON DELETE CASCADE,
            score INTEGER NOT NULL,
            total_questions INTEGER NOT NULL,
            answered_count INTEGER NOT NULL,
            started_at INTEGER NOT NULL,
            finished_at INTEGER NOT NULL,
            outcome TEXT NOT NULL
        )""",
    "auth_tokens": """
        CREATE TABLE auth_tokens (
            token TEXT PRIMARY KEY,
            user_id INTEGER NOT NULL REFERENCES users(id) ON DELETE CASCADE,
            expires_at INTEGER NOT NULL,
            kind TEXT NOT NULL DEFAULT 'session'
        )""",
}

INDEX_DDL = [
    "CREATE INDEX IF NOT EXISTS idx_sessions_user_state ON sessions(user_id, state)",
    "CREATE INDEX IF NOT EXISTS idx_results_user_finished ON results(user_id, finished_at)",
    "CREATE INDEX IF NOT EXISTS idx_tokens_user ON auth_tokens(user_id)",
]


@dataclass(frozen=True)
class StoreConfig:
    location: str
    database_name: str

    def __post_init__(self) -> None:
        if not self.location or not self.database_name:
            raise ConfigError("store location and database name must be nonempty")


@dataclass
class SchemaReport:
    created: list[str] = field(default_factory=list)
    existing: list[str] = field(default_factory=list)

    @property
    def table_count(self) -> int:
        return len(self.created) + len(self.existing)


def _domain_row(row: sqlite3.Row) -> Domain:
    return Domain(name=row["name"], id=row["id"])


def _subdomain_row(row: sqlite3.Row) -> Subdomain:
    return Subdomain(domain_id=row["domain_id"], name=row["name"], id=row["id"])


def _test_row(row: sqlite3.Row) -> Test:
    return Test(
        subdomain_id=row["subdomain_id"],
        title=row["title"],
        time_limit_seconds=row["time_limit_seconds"],
        ordinal=row["ordinal"],
        id=row["id"],
    )


def _question_row(row: sqlite3.Row) -> Question:
    return Question(
        test_id=row["test_id"], text=row["text"], position=row["position"], id=row["id"]
    )


def _option_row(row: sqlite3.Row) -> AnswerOption:
    return AnswerOption(
        question_id=row["question_id"],
        text=row["text"],
        is_correct=bool(row["is_correct"]),
        id=row["id"],
    )


def _user_row(row: sqlite3.Row) -> UserAccount:
    return UserAccount(
        username=row["username"],
        password_hash=row["password_hash"],
        name=row["name"],
        first_name=row["first_name"],
        email=row["email"],
        role=Role(row["role"]),
        created_at=row["created_at"],
        active=bool(row["active"]),
        id=row["id"],
    )


def _result_row(row: sqlite3.Row) -> TestResult:
    return TestResult(
        user_id=row["user_id"],
        test_id=row["test_id"],
        score=row["score"],
        total_questions=row["total_questions"],
        answered_count=row["answered_count"],
        started_at=row["started_at"],
        finished_at=row["finished_at"],
        outcome=Outcome(row["outcome"]),
        id=row["id"],
    )


def _record_row(row: sqlite3.Row) -> AnswerRecord:
    return AnswerRecord(
        session_id=row["session_id"],
        question_id=row["question_id"],
        chosen_option_id=row["chosen_option_id"],
        correct=bool(row["correct"]),
        answered_at=row["answered_at"],
    )


def _check_domain(e: Domain) -> str | None:
    return None if e.name.strip() else "domain name must be nonempty"


def _check_subdomain(e: Subdomain) -> str | None:
    return None if e.name.strip() else "subdomain name must be nonempty"


def _check_test(e: Test) -> str | None:
    if not e.title.strip():
        return "test title must be nonempty"
    if e.time_limit_seconds < 1:
        return "test time limit must be at least 1 second"
    if e.ordinal < 1:
        return "test ordinal must be positive"
    return None


def _check_question(e: Question) -> str | None:
    if not e.text.strip():
        return "question text must be nonempty"
    if e.position < 1:
        return "question position must be positive"
    return None


def _check_option(e: AnswerOption) -> str | None:
    return None if e.text.strip() else "option text must be nonempty"


@dataclass(frozen=True)
class _KindSpec:
    table: str
    columns: tuple[str, ...]
    from_row: Callable[[sqlite3.Row], Any]
    to_values: Callable[[Any], tuple]
    check: Callable[[Any], str | None]


CATALOG_KINDS: dict[str, _KindSpec] = {
    "domain": _KindSpec(
        "domains", ("name",), _domain_row, lambda e: (e.name,), _check_domain
    ),
    "subdomain": _KindSpec(
        "subdomains",
        ("domain_id", "name"),
        _subdomain_row,
        lambda e: (e.domain_id, e.name),
        _check_subdomain,
    ),
    "test": _KindSpec(
        "tests",
        ("subdomain_id", "title", "time_limit_seconds", "ordinal"),
        _test_row,
        lambda e: (e.subdomain_id, e.title, e.time_limit_seconds, e.ordinal),
        _check_test,
    ),
    "question": _KindSpec(
        "questions",
        ("test_id", "text", "position"),
        _question_row,
        lambda e: (e.test_id, e.text, e.position),
        _check_question,
    ),
    "option": _KindSpec(
        "answer_options",
        ("question_id", "text", "is_correct"),
        _option_row,
        lambda e: (e.question_id, e.text, int(e.is_correct)),
        _check_option,
    ),
}


class Store:
    """Open handle on a selected database. Obtain via open_store()."""

    def __init__(self, conn: sqlite3.Connection):
        self._conn = conn
        self._lock = threading.RLock()
        self._depth = 0

    def close(self) -> None:
        self._conn.close()

    @contextmanager
    def transaction(self) -> Iterator[sqlite3.Connection]:
        """Reentrant transaction scope; only the outermost frame commits."""
        with self._lock:
            if self._depth == 0:
                self._conn.execute("BEGIN IMMEDIATE")
            self._depth += 1
            try:
                yield self._conn
            except BaseException:
                self._depth -= 1
                if self._depth == 0:
                    self._conn.execute("ROLLBACK")
                raise
            else:
                self._depth -= 1
                if self._depth == 0:
                    self._conn.execute("COMMIT")

    def _query(self, sql: str, params: tuple = ()) -> list[sqlite3.Row]:
        with self._lock:
            try:
                return self._conn.execute(sql, params).fetchall()
            except sqlite3.Error as exc:
                raise StorageError(str(exc)) from exc

    # -- schema ---------------------------------------------------------

    def table_names(self) -> list[str]:
        rows = self._query(
            "SELECT name FROM sqlite_master"
            " WHERE type = 'table' AND name NOT LIKE 'sqlite_%' ORDER BY name"
        )
        return [r["name"] for r in rows]

    def init_schema(self) -> SchemaReport:
        """Create any missing tables; idempotent and transactional."""
        report = SchemaReport()
        try:
            with self.transaction() as conn:
                present = set(self.table_names())
                for name, ddl in TABLE_DDL.items():
                    if name in present:
                        report.existing.append(name)
                    else:
                        conn.execute(ddl)
                        report.created.append(name)
                for ddl in INDEX_DDL:
                    conn.execute(ddl)
        except sqlite3.Error as exc:
            raise StorageError(str(exc)) from exc
        return report

    def row_counts(self) -> dict[str, int]:
        return {
            name: self._query(f"SELECT COUNT(*) AS n FROM {name}")[0]["n"]
            for name in TABLE_DDL
        }

    def total_rows(self) -> int:
        return sum(self.row_counts().values())

    # -- catalog entities -------------------------------------------------

    def put_entity(self, kind: str, entity: Any) -> int:
        """Insert-or-update by id; returns the persistent id."""
        spec = self._spec(kind)
        message = spec.check(entity)
        if message:
            raise ConstraintError(message)
        cols = ", ".join(spec.columns)
        marks = ", ".join("?" for _ in spec.columns)
        updates = ", ".join(f"{c} = excluded.{c}" for c in spec.columns)
        try:
            with self.transaction() as conn:
                if entity.id is None:
                    cur = conn.execute(
                        f"INSERT INTO {spec.table} ({cols}) VALUES ({marks})",
                        spec.to_values(entity),
                    )
                    return int(cur.lastrowid)
                conn.execute(
                    f"INSERT INTO {spec.table} (id, {cols}) VALUES (?, {marks})"
                    f" ON CONFLICT(id) DO UPDATE SET {updates}",
                    (entity.id, *spec.to_values(entity)),
                )
                return int(entity.id)
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc
        except sqlite3.Error as exc:
            raise StorageError(str(exc)) from exc

    def get_entity(self, kind: str, entity_id: int) -> Any | None:
        spec = self._spec(kind)
        rows = self._query(
            f"SELECT * FROM {spec.table} WHERE id = ?", (entity_id,)
        )
        return spec.from_row(rows[0]) if rows else None

    def delete_entity(self, kind: str, entity_id: int) -> int:
        """Delete an entity, cascading to dependents; returns rows removed."""
        spec = self._spec(kind)
        try:
            with self.transaction() as conn:
                before = self.total_rows()
                conn.execute(f"DELETE FROM {spec.table} WHERE id = ?", (entity_id,))
                return before - self.total_rows()
        except sqlite3.Error as exc:
            raise StorageError(str(exc)) from exc

    def list_children(self, parent_kind: str, parent_id: int) -> list[Any]:
        queries = {
            "domain": (
                "SELECT * FROM subdomains WHERE domain_id = ? ORDER BY name, id",
                _subdomain_row,
            ),
            "subdomain": (
                "SELECT * FROM tests WHERE subdomain_id = ? ORDER BY title, ordinal, id",
                _test_row,
            ),
            "test": (
                "SELECT * FROM questions WHERE test_id = ? ORDER BY position",
                _question_row,
            ),
            "question": (
                "SELECT * FROM answer_options WHERE question_id = ? ORDER BY id",
                _option_row,
            ),
        }
        if parent_kind not in queries:
            raise StorageError(f"unknown parent kind: {parent_kind}")
        sql, from_row = queries[parent_kind]
        return [from_row(r) for r in self._query(sql, (parent_id,))]

    def list_domains(self) -> list[Domain]:
        return [_domain_row(r) for r in self._query("SELECT * FROM domains ORDER BY name, id")]

    def _spec(self, kind: str) -> _KindSpec:
        try:
            return CATALOG_KINDS[kind]
        except KeyError:
            raise StorageError(f"unknown entity kind: {kind}") from None

    # -- users ----------------------------------------------------------

    def insert_user(self, account: UserAccount) -> int:
        try:
            with self.transaction() as conn:
                cur = conn.execute(
                    "INSERT INTO users"
                    " (username, email, password_hash, name, first_name, role, active, created_at)"
                    " VALUES (?, ?, ?, ?, ?, ?, ?, ?)",
                    (
                        account.username,
                        account.email,
                        account.password_hash,
                        account.name,
                        account.first_name,
                        account.role.value,
                        int(account.active),
                        account.created_at,
                    ),
                )
                return int(cur.lastrowid)
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc

    def get_user(self, user_id: int) -> UserAccount | None:
        rows = self._query("SELECT * FROM users WHERE id = ?", (user_id,))
        return _user_row(rows[0]) if rows else None

    def get_user_by_username(self, username: str) -> UserAccount | None:
        rows = self._query("SELECT * FROM users WHERE username = ?", (username,))
        return _user_row(rows[0]) if rows else None

    def get_user_by_email(self, email: str) -> UserAccount | None:
        rows = self._query("SELECT * FROM users WHERE email = ?", (email,))
        return _user_row(rows[0]) if rows else None

    def list_users(self) -> list[UserAccount]:
        return [_user_row(r) for r in self._query("SELECT * FROM users ORDER BY username")]

    def set_user_active(self, user_id: int, active: bool) -> None:
        with self.transaction() as conn:
            conn.execute(
                "UPDATE users SET active = ? WHERE id = ?", (int(active), user_id)
            )

    def set_user_password(self, user_id: int, password_hash: str) -> None:
        with self.transaction() as conn:
            conn.execute(
                "UPDATE users SET password_hash = ? WHERE id = ?",
                (password_hash, user_id),
            )

    # -- tokens (login sessions and reset tickets share one table) -------

    def put_token(self, token: str, user_id: int, expires_at: int, kind: str) -> None:
        try:
            with self.transaction() as conn:
                conn.execute(
                    "INSERT INTO auth_tokens (token, user_id, expires_at, kind)"
                    " VALUES (?, ?, ?, ?)",
                    (token, user_id, expires_at, kind),
                )
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc

    def get_token(self, token: str, kind: str) -> sqlite3.Row | None:
        rows = self._query(
            "SELECT * FROM auth_tokens WHERE token = ? AND kind = ?", (token, kind)
        )
        return rows[0] if rows else None

    def delete_token(self, token: str) -> None:
        with self.transaction() as conn:
            conn.execute("DELETE FROM auth_tokens WHERE token = ?", (token,))

    def delete_user_tokens(self, user_id: int, kind: str | None = None) -> None:
        with self.transaction() as conn:
            if kind is None:
                conn.execute("DELETE FROM auth_tokens WHERE user_id = ?", (user_id,))
            else:
                conn.execute(
                    "DELETE FROM auth_tokens WHERE user_id = ? AND kind = ?",
                    (user_id, kind),
                )

    # -- live sessions -----------------------------------------------------

    def insert_session(
        self, user_id: int, test_id: int, started_at: int, deadline: int
    ) -> int:
        try:
            with self.transaction() as conn:
                cur = conn.execute(
                    "INSERT INTO sessions (user_id, test_id, started_at, deadline, cursor, state)"
                    " VALUES (?, ?, ?, ?, 1, 'active')",
                    (user_id, test_id, started_at, deadline),
                )
                return int(cur.lastrowid)
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc

    def get_session_row(self, session_id: int) -> sqlite3.Row | None:
        rows = self._query("SELECT * FROM sessions WHERE id = ?", (session_id,))
        return rows[0] if rows else None

    def active_sessions(self, user_id: int | None = None) -> list[sqlite3.Row]:
        if user_id is None:
            return self._query("SELECT * FROM sessions WHERE state = 'active'")
        return self._query(
            "SELECT * FROM sessions WHERE state = 'active' AND user_id = ?", (user_id,)
        )

    def update_session(
        self, session_id: int, *, cursor: int | None = None, state: str | None = None
    ) -> None:
        with self.transaction() as conn:
            if cursor is not None:
                conn.execute(
                    "UPDATE sessions SET cursor = ? WHERE id = ?", (cursor, session_id)
                )
            if state is not None:
                conn.execute(
                    "UPDATE sessions SET state = ? WHERE id = ?", (state, session_id)
                )

    def insert_answer(self, record: AnswerRecord) -> None:
        try:
            with self.transaction() as conn:
                conn.execute(
                    "INSERT INTO session_answers"
                    " (session_id, question_id, chosen_option_id, correct, answered_at)"
                    " VALUES (?, ?, ?, ?, ?)",
                    (
                        record.session_id,
                        record.question_id,
                        record.chosen_option_id,
                        int(record.correct),
                        record.answered_at,
                    ),
                )
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc

    def list_session_answers(self, session_id: int) -> list[AnswerRecord]:
        rows = self._query(
            "SELECT * FROM session_answers WHERE session_id = ? ORDER BY id",
            (session_id,),
        )
        return [_record_row(r) for r in rows]

    def count_correct(self, session_id: int) -> int:
        rows = self._query(
            "SELECT COUNT(*) AS n FROM session_answers WHERE session_id = ? AND correct = 1",
            (session_id,),
        )
        return rows[0]["n"]

    # -- results -----------------------------------------------------------

    def save_result(
        self,
        result: TestResult,
        records: list[AnswerRecord],
        session_id: int | None = None,
    ) -> int:
        """Persist a result and its answer records atomically."""
        if not (0 <= result.score <= result.answered_count <= result.total_questions):
            raise ConstraintError(
                "result must satisfy 0 <= score <= answered_count <= total_questions"
            )
        if result.total_questions < 1:
            raise ConstraintError("result total_questions must be positive")
        if result.finished_at < result.started_at:
            raise ConstraintError("result finished_at must be >= started_at")
        if session_id is None and records:
            session_id = records[0].session_id
        try:
            with self.transaction() as conn:
                cur = conn.execute(
                    "INSERT INTO results"
                    " (user_id, test_id, session_id, score, total_questions,"
                    "  answered_count, started_at, finished_at, outcome)"
                    " VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?)",
                    (
                        result.user_id,
                        result.test_id,
                        session_id,
                        result.score,
                        result.total_questions,
                        result.answered_count,
                        result.started_at,
                        result.finished_at,
                        result.outcome.value,
                    ),
                )
                result_id = int(cur.lastrowid)
                for rec in records:
                    conn.execute(
                        "INSERT INTO session_answers"
                        " (session_id, question_id, chosen_option_id, correct, answered_at)"
                        " VALUES (?, ?, ?, ?, ?)"
                        " ON CONFLICT(session_id, question_id) DO UPDATE SET"
                        " chosen_option_id = excluded.chosen_option_id,"
                        " correct = excluded.correct,"
                        " answered_at = excluded.answered_at",
                        (
                            rec.session_id,
                            rec.question_id,
                            rec.chosen_option_id,
                            int(rec.correct),
                            rec.answered_at,
                        ),
                    )
                return result_id
        except sqlite3.IntegrityError as exc:
            raise ConstraintError(str(exc)) from exc
        except sqlite3.Error as exc:
            raise StorageError(str(exc)) from exc

    def get_result(self, result_id: int) -> TestResult | None:
        rows = self._query("SELECT * FROM results WHERE id = ?", (result_id,))
        return _result_row(rows[0]) if rows else None

    def result_session_id(self, result_id: int) -> int | None:
        rows = self._query(
            "SELECT session_id FROM results WHERE id = ?", (result_id,)
        )
        return rows[0]["session_id"] if rows else None

    def list_result_records(self, result_id: int) -> list[AnswerRecord]:
        rows = self._query(
            "SELECT sa.* FROM session_answers sa"
            " JOIN results r ON r.session_id = sa.session_id"
            " WHERE r.id = ? ORDER BY sa.id",
            (result_id,),
        )
        return [_record_row(r) for r in rows]

    def list_recent_results(self, user_id: int, limit: int) -> list[TestResult]:
        """A user's results, newest first by finish time, capped at limit."""
        if limit < 1:
            raise StorageError("limit must be >= 1")
        rows = self._query(
            "SELECT * FROM results WHERE user_id = ?"
            " ORDER BY finished_at DESC, id DESC LIMIT ?",
            (user_id, limit),
        )
        return [_result_row(r) for r in rows]

    def list_results(
        self, user_id: int | None = None
    ) -> list[tuple[str, TestResult]]:
        sql = (
            "SELECT u.username AS username, r.* FROM results r"
            " JOIN users u ON u.id = r.user_id"
        )
        params: tuple = ()
        if user_id is not None:
            sql += " WHERE r.user_id = ?"
            params = (user_id,)
        sql += " ORDER BY r.finished_at DESC, r.id DESC"
        return [(r["username"], _result_row(r)) for r in self._query(sql, params)]

    def delete_result(self, result_id: int) -> bool:
        """Remove a result plus its session and answer records; True if it existed."""
        with self.transaction() as conn:
            session_id = self.result_session_id(result_id)
            cur = conn.execute("DELETE FROM results WHERE id = ?", (result_id,))
            removed = cur.rowcount > 0
            if removed and session_id is not None:
                conn.execute("DELETE FROM sessions WHERE id = ?", (session_id,))
            return removed


def open_store(config: StoreConfig, create: bool = False) -> Store:
    """Connect to the configured location and select the named database.

    The location is a directory holding database files (":memory:" gives a
    private throwaway store). With create=False the database must already
    exist; `migrate` passes create=True to provision a fresh one.
    """
    if config.location == ":memory:":
        conn = _connect(":memory:")
        return Store(conn)
    location = Path(config.location)
    if not location.is_dir():
        raise StoreConnectionError(CONNECTION_ERROR_MESSAGE)
    db_path = location / f"{config.database_name}.db"
    if not db_path.exists() and not create:
        raise SelectionError(SELECTION_ERROR_MESSAGE)
    try:
        conn = _connect(str(db_path))
    except sqlite3.Error as exc:
        raise SelectionError(SELECTION_ERROR_MESSAGE) from exc
    return Store(conn)


def _connect(path: str) -> sqlite3.Connection:
    conn = sqlite3.connect(path, check_same_thread=False, isolation_level=None)
    conn.row_factory = sqlite3.Row
    conn.execute("PRAGMA foreign_keys = ON")
    return conn
