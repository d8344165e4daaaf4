"""Live test sessions: forward-only cursor, server-side deadline, scoring.

Time is always an explicit argument (UTC integer seconds); the HTTP layer
passes wall-clock time and tests pass synthetic time. A session leaves the
Active state exactly once, either Completed or Expired, and the deadline
boundary is inclusive: an answer at now == deadline still counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .auth import Principal
from .errors import (
    ForwardOnly,
    IncompleteSession,
    InvalidTest,
    SessionAlreadyActive,
    SessionFinished,
    Unauthenticated,
    UnknownOption,
    UnknownResult,
    UnknownSession,
    UnknownTest,
)
from .model import (
    FLAG_CORRECT_ANSWER_IS,
    FLAG_THIS_IS_CORRECT,
    FORWARD_ONLY_WARNING,
    TIME_EXPIRED,
    AnswerRecord,
    Outcome,
    Question,
    SessionState,
    TestResult,
    compute_score,
    validate_test,
)
from .store import Store


@dataclass
class TestSession:
    id: int
    user_id: int
    test_id: int
    started_at: int
    deadline: int
    cursor: int
    running_score: int
    state: SessionState


@dataclass(frozen=True)
class OptionChoice:
    option_id: int
    text: str


@dataclass(frozen=True)
class QuestionView:
    """What an active test-taker may see: never any correctness data."""

    text: str
    position: int
    total_questions: int
    options: list[OptionChoice]
    remaining_seconds: int


@dataclass(frozen=True)
class StartedSession:
    session_id: int
    test_id: int
    test_title: str
    total_questions: int
    started_at: int
    deadline: int
    time_limit_seconds: int
    warning: str = FORWARD_ONLY_WARNING


@dataclass(frozen=True)
class FinishedNotice:
    result_id: int
    score: int
    answered_count: int
    total_questions: int


@dataclass(frozen=True)
class ExpiredNotice:
    result_id: int
    score: int
    answered_count: int
    total_questions: int
    message: str = TIME_EXPIRED


@dataclass(frozen=True)
class AnswerOutcome:
    correct: bool | None
    running_score: int
    next: QuestionView | FinishedNotice | ExpiredNotice


@dataclass(frozen=True)
class AnnotatedOption:
    option_id: int
    text: str
    flag: str | None = None


@dataclass(frozen=True)
class AnnotatedQuestion:
    position: int
    text: str
    options: list[AnnotatedOption]
    chosen_option_id: int | None
    correct_option_id: int | None


@dataclass(frozen=True)
class AnnotatedResult:
    result_id: int
    username: str
    name: str
    first_name: str
    score: int
    total_questions: int
    answered_count: int
    outcome: Outcome
    questions: list[AnnotatedQuestion] = field(default_factory=list)


class TestEngine:
    """Session state machine over the persistence layer.

    Holds no cross-request state of its own; the store's transaction lock
    serializes writers, so per-session operations never interleave.
    """

    def __init__(self, store: Store):
        self._store = store

    # -- session lifecycle ------------------------------------------------

    def start_session(
        self, principal: Principal | None, test_id: int, now: int
    ) -> StartedSession:
        if principal is None:
            raise Unauthenticated("account required to take a test")
        test = self._store.get_entity("test", test_id)
        if test is None:
            raise UnknownTest(f"no test with id {test_id}")
        questions = self._store.list_children("test", test_id)
        options = [
            o for q in questions for o in self._store.list_children("question", q.id)
        ]
        report = validate_test(test, questions, options)
        if not report.ok:
            raise InvalidTest("; ".join(report.violations))
        with self._store.transaction():
            for row in self._store.active_sessions(principal.user_id):
                if now > row["deadline"]:
                    self._finalize_row(row, now, Outcome.EXPIRED)
            if self._store.active_sessions(principal.user_id):
                raise SessionAlreadyActive("finish the current test first")
            deadline = now + test.time_limit_seconds
            session_id = self._store.insert_session(
                principal.user_id, test_id, now, deadline
            )
        return StartedSession(
            session_id=session_id,
            test_id=test_id,
            test_title=test.title,
            total_questions=len(questions),
            started_at=now,
            deadline=deadline,
            time_limit_seconds=test.time_limit_seconds,
        )

    def current_question(
        self, session_id: int, now: int
    ) -> QuestionView | ExpiredNotice:
        with self._store.transaction():
            session = self._load(session_id)
            if session.state is not SessionState.ACTIVE:
                raise SessionFinished(f"session is {session.state.value}")
            if now > session.deadline:
                result = self._finalize(session, now, Outcome.EXPIRED)
                return self._expired_notice(result)
            questions = self._questions(session.test_id)
            if session.cursor > len(questions):
                # Test shrank under a live session; close it out.
                self._finalize(session, now, Outcome.COMPLETED)
                raise SessionFinished("no questions left; session finalized")
            return self._question_view(session, questions, now)

    def submit_answer(
        self, session_id: int, question_position: int, chosen_option_id: int, now: int
    ) -> AnswerOutcome:
        with self._store.transaction():
            session = self._load(session_id)
            if session.state is not SessionState.ACTIVE:
                raise SessionFinished(f"session is {session.state.value}")
            if now > session.deadline:
                result = self._finalize(session, now, Outcome.EXPIRED)
                return AnswerOutcome(
                    correct=None,
                    running_score=result.score,
                    next=self._expired_notice(result),
                )
            if question_position != session.cursor:
                raise ForwardOnly(
                    f"question {question_position} is not the current question"
                    f" ({session.cursor}); turning back or skipping is not allowed"
                )
            questions = self._questions(session.test_id)
            if session.cursor > len(questions):
                self._finalize(session, now, Outcome.COMPLETED)
                raise SessionFinished("no questions left; session finalized")
            question = questions[session.cursor - 1]
            options = self._store.list_children("question", question.id)
            chosen = next((o for o in options if o.id == chosen_option_id), None)
            if chosen is None:
                raise UnknownOption(
                    f"option {chosen_option_id} does not belong to the current question"
                )
            assert question.id is not None and chosen.id is not None
            record = AnswerRecord(
                session_id=session.id,
                question_id=question.id,
                chosen_option_id=chosen.id,
                correct=chosen.is_correct,
                answered_at=now,
            )
            self._store.insert_answer(record)
            session.cursor += 1
            session.running_score += 1 if chosen.is_correct else 0
            self._store.update_session(session.id, cursor=session.cursor)
            if session.cursor > len(questions):
                result = self._finalize(session, now, Outcome.COMPLETED)
                next_view: QuestionView | FinishedNotice | ExpiredNotice = (
                    FinishedNotice(
                        result_id=result.id if result.id is not None else 0,
                        score=result.score,
                        answered_count=result.answered_count,
                        total_questions=result.total_questions,
                    )
                )
            else:
                next_view = self._question_view(session, questions, now)
            return AnswerOutcome(
                correct=chosen.is_correct,
                running_score=session.running_score,
                next=next_view,
            )

    def finalize_session(self, session_id: int, now: int, cause: Outcome) -> TestResult:
        """Close an Active session. Normally invoked by the answer/read
        transitions; callable directly for abandonment cleanup."""
        with self._store.transaction():
            session = self._load(session_id)
            if session.state is not SessionState.ACTIVE:
                raise SessionFinished(f"session is {session.state.value}")
            if cause is Outcome.COMPLETED:
                total = len(self._questions(session.test_id))
                if session.cursor <= total:
                    raise IncompleteSession(
                        f"{total - session.cursor + 1} questions unanswered"
                    )
            return self._finalize(session, now, cause)

    def sweep_expired(self, now: int) -> int:
        """Expire every Active session past its deadline; returns the count."""
        expired = 0
        with self._store.transaction():
            for row in self._store.active_sessions():
                if now > row["deadline"]:
                    self._finalize_row(row, now, Outcome.EXPIRED)
                    expired += 1
        return expired

    # -- results -----------------------------------------------------------

    def result_detail(self, result_id: int) -> AnnotatedResult:
        result = self._store.get_result(result_id)
        if result is None:
            raise UnknownResult(f"no result with id {result_id}")
        user = self._store.get_user(result.user_id)
        records = {
            r.question_id: r for r in self._store.list_result_records(result_id)
        }
        questions = self._questions(result.test_id)
        annotated: list[AnnotatedQuestion] = []
        for question in questions:
            options = self._store.list_children("question", question.id)
            correct = next((o for o in options if o.is_correct), None)
            correct_id = correct.id if correct is not None else None
            record = records.get(question.id)
            chosen_id = record.chosen_option_id if record is not None else None
            rendered: list[AnnotatedOption] = []
            for option in options:
                flag = None
                if record is not None and correct is not None:
                    if option.id == chosen_id and chosen_id != correct_id:
                        flag = FLAG_CORRECT_ANSWER_IS.format(answer=correct.text)
                    elif option.id == correct_id:
                        flag = FLAG_THIS_IS_CORRECT
                assert option.id is not None
                rendered.append(
                    AnnotatedOption(option_id=option.id, text=option.text, flag=flag)
                )
            annotated.append(
                AnnotatedQuestion(
                    position=question.position,
                    text=question.text,
                    options=rendered,
                    chosen_option_id=chosen_id,
                    correct_option_id=correct_id,
                )
            )
        assert result.id is not None
        return AnnotatedResult(
            result_id=result.id,
            username=user.username if user else "",
            name=user.name if user else "",
            first_name=user.first_name if user else "",
            score=result.score,
            total_questions=result.total_questions,
            answered_count=result.answered_count,
            outcome=result.outcome,
            questions=annotated,
        )

    # -- internals -----------------------------------------------------------

    def _load(self, session_id: int) -> TestSession:
        row = self._store.get_session_row(session_id)
        if row is None:
            raise UnknownSession(f"no session with id {session_id}")
        return TestSession(
            id=row["id"],
            user_id=row["user_id"],
            test_id=row["test_id"],
            started_at=row["started_at"],
            deadline=row["deadline"],
            cursor=row["cursor"],
            running_score=self._store.count_correct(row["id"]),
            state=SessionState(row["state"]),
        )

    def _questions(self, test_id: int) -> list[Question]:
        return self._store.list_children("test", test_id)

    def _question_view(
        self, session: TestSession, questions: list[Question], now: int
    ) -> QuestionView:
        question = questions[session.cursor - 1]
        options = self._store.list_children("question", question.id)
        return QuestionView(
            text=question.text,
            position=question.position,
            total_questions=len(questions),
            options=[OptionChoice(option_id=o.id, text=o.text) for o in options],
            remaining_seconds=max(0, session.deadline - now),
        )

    def _finalize(self, session: TestSession, now: int, cause: Outcome) -> TestResult:
        answered = session.cursor - 1
        score = compute_score(self._store.list_session_answers(session.id))
        total = max(len(self._questions(session.test_id)), answered, 1)
        finished_at = now if cause is Outcome.COMPLETED else min(now, session.deadline)
        result = TestResult(
            user_id=session.user_id,
            test_id=session.test_id,
            score=score,
            total_questions=total,
            answered_count=answered,
            started_at=session.started_at,
            finished_at=max(finished_at, session.started_at),
            outcome=cause,
        )
        with self._store.transaction():
            result.id = self._store.save_result(result, [], session_id=session.id)
            self._store.update_session(session.id, state=cause.value)
        session.state = SessionState(cause.value)
        return result

    def _finalize_row(self, row, now: int, cause: Outcome) -> TestResult:
        return self._finalize(
            TestSession(
                id=row["id"],
                user_id=row["user_id"],
                test_id=row["test_id"],
                started_at=row["started_at"],
                deadline=row["deadline"],
                cursor=row["cursor"],
                running_score=self._store.count_correct(row["id"]),
                state=SessionState(row["state"]),
            ),
            now,
            cause,
        )

    def _expired_notice(self, result: TestResult) -> ExpiredNotice:
        assert result.id is not None
        return ExpiredNotice(
            result_id=result.id,
            score=result.score,
            answered_count=result.answered_count,
            total_questions=result.total_questions,
        )
