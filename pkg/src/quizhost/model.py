"""Domain types, validation, and scoring for the assessment catalog.

Pure values and pure functions only: nothing in this module touches
storage or transport, so everything here is safe to share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Role(str, enum.Enum):
    SUPERVISOR = "supervisor"
    REGULAR = "regular"


class Outcome(str, enum.Enum):
    COMPLETED = "completed"
    EXPIRED = "expired"


class SessionState(str, enum.Enum):
    ACTIVE = "active"
    COMPLETED = "completed"
    EXPIRED = "expired"


# Canonical result-annotation strings (Romanian), with an English
# translation table for display layers.
FLAG_CORRECT_ANSWER_IS = "Raspunsul corect este: {answer}"
FLAG_THIS_IS_CORRECT = "Acesta este raspunsul corect"
SCORE_HEADER = "Raspunsuri corecte=> {count}"
TIME_EXPIRED = "Time expired"
FORWARD_ONLY_WARNING = (
    "Atentie: nu puteti reveni la o intrebare dupa ce ati trecut mai departe."
)

TRANSLATIONS = {
    "en": {
        FLAG_CORRECT_ANSWER_IS: "The correct answer is: {answer}",
        FLAG_THIS_IS_CORRECT: "This is the correct answer",
        SCORE_HEADER: "Correct answers=> {count}",
        FORWARD_ONLY_WARNING: (
            "Warning: you cannot return to a question once you have moved on."
        ),
    }
}


@dataclass
class UserAccount:
    username: str
    password_hash: str
    name: str
    first_name: str
    email: str
    role: Role = Role.REGULAR
    created_at: int = 0
    active: bool = True
    id: int | None = None


@dataclass
class Domain:
    name: str
    id: int | None = None


@dataclass
class Subdomain:
    domain_id: int
    name: str
    id: int | None = None


@dataclass
class Test:
    subdomain_id: int
    title: str
    time_limit_seconds: int
    ordinal: int = 1
    id: int | None = None


@dataclass
class Question:
    test_id: int | None
    text: str
    position: int
    id: int | None = None


@dataclass
class AnswerOption:
    question_id: int | None
    text: str
    is_correct: bool = False
    id: int | None = None


@dataclass(frozen=True)
class AnswerRecord:
    session_id: int
    question_id: int
    chosen_option_id: int
    correct: bool
    answered_at: int


@dataclass
class TestResult:
    user_id: int
    test_id: int
    score: int
    total_questions: int
    answered_count: int
    started_at: int
    finished_at: int
    outcome: Outcome
    id: int | None = None


@dataclass
class ValidationReport:
    """Outcome of structural test validation; violations are data, not faults."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_test(
    test: Test,
    questions: list[Question],
    options: list[AnswerOption],
) -> ValidationReport:
    """Check a test and its questions/options against the catalog invariants.

    Every violation names the offending entity id. The check is pure,
    idempotent, and insensitive to the order of the input lists; the
    returned violation list is sorted for determinism.
    """
    violations: list[str] = []
    tid = test.id if test.id is not None else "<new>"

    if not test.title.strip():
        violations.append(f"test {tid}: empty title")
    if test.time_limit_seconds < 1:
        violations.append(f"test {tid}: time limit must be at least 1 second")
    if not questions:
        violations.append(f"test {tid}: no questions")

    positions = sorted(q.position for q in questions)
    if questions and positions != list(range(1, len(questions) + 1)):
        violations.append(
            f"test {tid}: question positions {positions} do not form 1..{len(questions)}"
        )

    seen_ids: set[object] = set()
    for q in questions:
        if q.id in seen_ids:
            violations.append(
                f"test {tid}: duplicate or missing question ids prevent option matching"
            )
            return ValidationReport(violations=sorted(violations))
        seen_ids.add(q.id)

    by_question: dict[object, list[AnswerOption]] = {q.id: [] for q in questions}
    for opt in options:
        if opt.question_id in by_question:
            by_question[opt.question_id].append(opt)
        else:
            oid = opt.id if opt.id is not None else "<new>"
            violations.append(
                f"option {oid}: references unknown question {opt.question_id}"
            )
        if not opt.text.strip():
            oid = opt.id if opt.id is not None else "<new>"
            violations.append(f"option {oid}: empty text")

    for q in questions:
        qid = q.id if q.id is not None else f"at position {q.position}"
        if not q.text.strip():
            violations.append(f"question {qid}: empty text")
        if q.test_id is not None and test.id is not None and q.test_id != test.id:
            violations.append(f"question {qid}: does not belong to test {tid}")
        opts = by_question.get(q.id, [])
        if len(opts) < 2:
            violations.append(f"question {qid}: fewer than 2 options")
        correct = sum(1 for o in opts if o.is_correct)
        if correct == 0:
            violations.append(f"no correct option for question {qid}")
        elif correct > 1:
            violations.append(f"multiple correct options for question {qid}")

    return ValidationReport(violations=sorted(violations))


def compute_score(records: list[AnswerRecord]) -> int:
    """Count correct answers: one point each, no penalties, no weights."""
    return sum(1 for r in records if r.correct)
