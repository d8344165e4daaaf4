"""Supervisor-only operations: catalog authoring and result oversight."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .auth import Principal
from .errors import Forbidden, UnknownEntity, UnknownResult, ValidationFailed
from .model import (
    AnswerOption,
    Question,
    Role,
    Test,
    TestResult,
    UserAccount,
    validate_test,
)
from .store import Store


@dataclass
class OptionSpec:
    text: str
    is_correct: bool = False


@dataclass
class QuestionSpec:
    text: str
    options: list[OptionSpec] = field(default_factory=list)


@dataclass
class TestBundle:
    """A whole test as authored: metadata plus questions with their options."""

    subdomain_id: int
    title: str
    time_limit_seconds: int
    ordinal: int = 1
    questions: list[QuestionSpec] = field(default_factory=list)


# Fields a supervisor may patch, per entity kind. Users are deliberately
# narrow: activation toggling only.
PATCHABLE = {
    "domain": {"name"},
    "subdomain": {"name", "domain_id"},
    "test": {"title", "time_limit_seconds", "ordinal", "subdomain_id"},
    "question": {"text", "position"},
    "option": {"text", "is_correct"},
}


def _require_supervisor(principal: Principal) -> None:
    if principal.role is not Role.SUPERVISOR:
        raise Forbidden("supervisor role required")


class AdminService:
    def __init__(self, store: Store):
        self._store = store

    def create_test(self, principal: Principal, bundle: TestBundle) -> int:
        """Validate and persist a whole bundle atomically under its subdomain."""
        _require_supervisor(principal)
        test = Test(
            subdomain_id=bundle.subdomain_id,
            title=bundle.title,
            time_limit_seconds=bundle.time_limit_seconds,
            ordinal=bundle.ordinal,
        )
        # Provisional negative ids associate options with questions before
        # the store assigns real ones.
        questions: list[Question] = []
        options: list[AnswerOption] = []
        for index, spec in enumerate(bundle.questions, start=1):
            questions.append(
                Question(test_id=None, text=spec.text, position=index, id=-index)
            )
            for opt in spec.options:
                options.append(
                    AnswerOption(
                        question_id=-index, text=opt.text, is_correct=opt.is_correct
                    )
                )
        report = validate_test(test, questions, options)
        if not report.ok:
            raise ValidationFailed(report.violations)
        with self._store.transaction():
            test_id = self._store.put_entity("test", test)
            for question in questions:
                stored = replace(question, id=None, test_id=test_id)
                question_id = self._store.put_entity("question", stored)
                for option in options:
                    if option.question_id == question.id:
                        self._store.put_entity(
                            "option", replace(option, question_id=question_id)
                        )
        return test_id

    def update_registration(self, principal: Principal, kind: str, entity_id: int, patch: dict):
        """Field-level update; the patched test must still validate."""
        _require_supervisor(principal)
        allowed = PATCHABLE.get(kind)
        if allowed is None:
            raise ValidationFailed([f"unknown registration kind: {kind}"])
        unknown = set(patch) - allowed
        if unknown:
            raise ValidationFailed(
                [f"field not patchable on {kind}: {name}" for name in sorted(unknown)]
            )
        with self._store.transaction():
            entity = self._store.get_entity(kind, entity_id)
            if entity is None:
                raise UnknownEntity(f"no {kind} with id {entity_id}")
            for name, value in patch.items():
                setattr(entity, name, value)
            self._store.put_entity(kind, entity)
            self._revalidate(kind, entity)
            return self._store.get_entity(kind, entity_id)

    def _revalidate(self, kind: str, entity) -> None:
        """Run bundle validation on whichever test the edit touched."""
        test_id = None
        if kind == "test":
            test_id = entity.id
        elif kind == "question":
            test_id = entity.test_id
        elif kind == "option":
            question = self._store.get_entity("question", entity.question_id)
            test_id = question.test_id if question else None
        if test_id is None:
            return
        test = self._store.get_entity("test", test_id)
        if test is None:
            return
        questions = self._store.list_children("test", test_id)
        options = [
            o for q in questions for o in self._store.list_children("question", q.id)
        ]
        report = validate_test(test, questions, options)
        if not report.ok:
            raise ValidationFailed(report.violations)

    def delete_test(self, principal: Principal, test_id: int) -> int:
        _require_supervisor(principal)
        if self._store.get_entity("test", test_id) is None:
            raise UnknownEntity(f"no test with id {test_id}")
        return self._store.delete_entity("test", test_id)

    def delete_catalog_entity(self, principal: Principal, kind: str, entity_id: int) -> int:
        _require_supervisor(principal)
        if self._store.get_entity(kind, entity_id) is None:
            raise UnknownEntity(f"no {kind} with id {entity_id}")
        return self._store.delete_entity(kind, entity_id)

    def list_all_results(
        self, principal: Principal, user_id: int | None = None
    ) -> list[tuple[str, TestResult]]:
        """Every user's results, newest first; unlimited, unlike user history."""
        _require_supervisor(principal)
        return self._store.list_results(user_id)

    def delete_user_result(self, principal: Principal, result_id: int) -> None:
        _require_supervisor(principal)
        if not self._store.delete_result(result_id):
            raise UnknownResult(f"no result with id {result_id}")

    def list_users(self, principal: Principal) -> list[UserAccount]:
        _require_supervisor(principal)
        return self._store.list_users()

    def set_user_active(self, principal: Principal, user_id: int, active: bool) -> UserAccount:
        _require_supervisor(principal)
        account = self._store.get_user(user_id)
        if account is None:
            raise UnknownEntity(f"no user with id {user_id}")
        self._store.set_user_active(user_id, active)
        account.active = active
        return account
