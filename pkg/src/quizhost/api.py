"""HTTP service boundary: JSON routes over auth, engine, catalog, admin.

All timestamps in payloads are UTC integer seconds. Error bodies share one
shape, {"error": code, "message": text}, with codes mapped 1:1 from the
service error classes. Tokens travel in the Authorization: Bearer header.
"""

from __future__ import annotations

import logging
import threading
import time
from contextlib import asynccontextmanager
from typing import Callable

from fastapi import Depends, FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .admin import AdminService, OptionSpec, QuestionSpec, TestBundle
from .auth import AccountView, AuthService, Principal
from .config import ServerConfig
from .engine import (
    AnnotatedResult,
    AnswerOutcome,
    ExpiredNotice,
    FinishedNotice,
    QuestionView,
    TestEngine,
)
from .errors import Forbidden, QuizHostError, Unauthenticated, UnknownResult, UnknownSession
from .model import Domain, Role, Subdomain, TestResult
from .store import Store, open_store

log = logging.getLogger(__name__)

SWEEP_INTERVAL_SECONDS = 30.0
RECOVERY_WINDOW_SECONDS = 300
RECOVERY_MAX_PER_WINDOW = 5


class RegisterBody(BaseModel):
    username: str
    password: str
    name: str = ""
    first_name: str = ""
    email: str


class LoginBody(BaseModel):
    username: str
    password: str


class RecoverBody(BaseModel):
    email: str


class ResetBody(BaseModel):
    ticket: str
    new_password: str


class StartSessionBody(BaseModel):
    test_id: int


class AnswerBody(BaseModel):
    position: int
    option_id: int


class DomainBody(BaseModel):
    name: str


class SubdomainBody(BaseModel):
    domain_id: int
    name: str


class OptionBody(BaseModel):
    text: str
    is_correct: bool = False


class QuestionBody(BaseModel):
    text: str
    options: list[OptionBody] = Field(default_factory=list)


class TestBundleBody(BaseModel):
    subdomain_id: int
    title: str
    time_limit_seconds: int
    ordinal: int = 1
    questions: list[QuestionBody] = Field(default_factory=list)


class UserPatchBody(BaseModel):
    active: bool


def account_payload(view: AccountView) -> dict:
    return {
        "id": view.id,
        "username": view.username,
        "name": view.name,
        "first_name": view.first_name,
        "email": view.email,
        "role": view.role.value,
        "created_at": view.created_at,
        "active": view.active,
    }


def question_payload(view: QuestionView) -> dict:
    # Deliberately narrow: an active session must never see correctness data.
    return {
        "kind": "question",
        "text": view.text,
        "position": view.position,
        "total_questions": view.total_questions,
        "remaining_seconds": view.remaining_seconds,
        "options": [{"option_id": o.option_id, "text": o.text} for o in view.options],
    }


def finished_payload(notice: FinishedNotice) -> dict:
    return {
        "kind": "finished",
        "result_id": notice.result_id,
        "score": notice.score,
        "answered_count": notice.answered_count,
        "total_questions": notice.total_questions,
    }


def expired_payload(notice: ExpiredNotice) -> dict:
    return {
        "kind": "expired",
        "message": notice.message,
        "result_id": notice.result_id,
        "score": notice.score,
        "answered_count": notice.answered_count,
        "total_questions": notice.total_questions,
    }


def outcome_payload(outcome: AnswerOutcome) -> dict:
    if isinstance(outcome.next, QuestionView):
        next_payload = question_payload(outcome.next)
    elif isinstance(outcome.next, FinishedNotice):
        next_payload = finished_payload(outcome.next)
    else:
        next_payload = expired_payload(outcome.next)
    return {
        "correct": outcome.correct,
        "running_score": outcome.running_score,
        "next": next_payload,
    }


def result_payload(result: TestResult, test_title: str | None = None) -> dict:
    payload = {
        "id": result.id,
        "test_id": result.test_id,
        "score": result.score,
        "total_questions": result.total_questions,
        "answered_count": result.answered_count,
        "started_at": result.started_at,
        "finished_at": result.finished_at,
        "outcome": result.outcome.value,
    }
    if test_title is not None:
        payload["test_title"] = test_title
    return payload


def annotated_payload(detail: AnnotatedResult) -> dict:
    return {
        "result_id": detail.result_id,
        "username": detail.username,
        "name": detail.name,
        "first_name": detail.first_name,
        "score": detail.score,
        "total_questions": detail.total_questions,
        "answered_count": detail.answered_count,
        "outcome": detail.outcome.value,
        "questions": [
            {
                "position": q.position,
                "text": q.text,
                "chosen_option_id": q.chosen_option_id,
                "correct_option_id": q.correct_option_id,
                "options": [
                    {"option_id": o.option_id, "text": o.text, "flag": o.flag}
                    for o in q.options
                ],
            }
            for q in detail.questions
        ],
    }


def create_app(
    config: ServerConfig,
    store: Store | None = None,
    clock: Callable[[], float] = time.time,
) -> FastAPI:
    store = store if store is not None else open_store(config.store)
    auth = AuthService(store, token_ttl=config.token_ttl_seconds, clock=lambda: app.state.clock())
    engine = TestEngine(store)
    admin = AdminService(store)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        stop = threading.Event()

        def sweep_loop() -> None:
            while not stop.wait(SWEEP_INTERVAL_SECONDS):
                try:
                    engine.sweep_expired(int(app.state.clock()))
                except Exception:
                    log.exception("session sweep failed")

        thread = threading.Thread(target=sweep_loop, daemon=True, name="session-sweep")
        thread.start()
        try:
            yield
        finally:
            stop.set()
            thread.join(timeout=2)

    app = FastAPI(title="quizhost", lifespan=lifespan)
    app.state.store = store
    app.state.clock = clock
    app.state.auth = auth
    app.state.engine = engine
    app.state.admin = admin
    recovery_hits: dict[str, list[float]] = {}

    def now() -> int:
        return int(app.state.clock())

    @app.exception_handler(QuizHostError)
    async def service_error(request: Request, exc: QuizHostError):
        return JSONResponse(
            status_code=exc.http_status,
            content={"error": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": "invalid_request", "message": str(exc.errors())},
        )

    def bearer_token(request: Request) -> str:
        header = request.headers.get("authorization", "")
        if not header.lower().startswith("bearer "):
            raise Unauthenticated("missing bearer token")
        return header[7:].strip()

    def current_principal(request: Request) -> Principal:
        return auth.authorize(bearer_token(request))

    def supervisor_principal(request: Request) -> Principal:
        return auth.authorize(bearer_token(request), Role.SUPERVISOR)

    def owned_session(session_id: int, principal: Principal) -> None:
        row = store.get_session_row(session_id)
        if row is None:
            raise UnknownSession(f"no session with id {session_id}")
        if row["user_id"] != principal.user_id:
            raise Forbidden("not your session")

    # -- public ------------------------------------------------------------

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/links")
    def links():
        return [
            {"label": link.label, "url": link.url} for link in config.education_links
        ]

    @app.post("/api/register", status_code=201)
    def register(body: RegisterBody):
        view = auth.register(
            username=body.username,
            password=body.password,
            name=body.name,
            first_name=body.first_name,
            email=body.email,
        )
        return account_payload(view)

    @app.post("/api/login")
    def login(body: LoginBody):
        issued = auth.login(body.username, body.password)
        return {
            "token": issued.token,
            "expires_at": issued.expires_at,
            "user": account_payload(issued.account),
        }

    @app.post("/api/recover")
    def recover(body: RecoverBody, request: Request):
        client = request.client.host if request.client else "unknown"
        window_start = app.state.clock() - RECOVERY_WINDOW_SECONDS
        hits = [t for t in recovery_hits.get(client, []) if t >= window_start]
        if len(hits) >= RECOVERY_MAX_PER_WINDOW:
            return JSONResponse(
                status_code=429,
                content={"error": "too_many_requests", "message": "retry later"},
            )
        hits.append(app.state.clock())
        recovery_hits[client] = hits
        return auth.recover_password(body.email)

    @app.post("/api/reset")
    def reset(body: ResetBody):
        auth.reset_password(body.ticket, body.new_password)
        return {"status": "ok"}

    # -- catalog (any authenticated account) --------------------------------

    @app.get("/api/catalog/domains")
    def catalog_domains(principal: Principal = Depends(current_principal)):
        return [{"id": d.id, "name": d.name} for d in store.list_domains()]

    @app.get("/api/catalog/domains/{domain_id}/subdomains")
    def catalog_subdomains(
        domain_id: int, principal: Principal = Depends(current_principal)
    ):
        return [
            {"id": s.id, "domain_id": s.domain_id, "name": s.name}
            for s in store.list_children("domain", domain_id)
        ]

    @app.get("/api/catalog/subdomains/{subdomain_id}/tests")
    def catalog_tests(
        subdomain_id: int, principal: Principal = Depends(current_principal)
    ):
        tests = store.list_children("subdomain", subdomain_id)
        return [
            {
                "id": t.id,
                "title": t.title,
                "time_limit_seconds": t.time_limit_seconds,
                "ordinal": t.ordinal,
                "question_count": len(store.list_children("test", t.id)),
            }
            for t in tests
        ]

    # -- test sessions --------------------------------------------------------

    @app.post("/api/sessions", status_code=201)
    def start_session(
        body: StartSessionBody, principal: Principal = Depends(current_principal)
    ):
        started = engine.start_session(principal, body.test_id, now())
        return {
            "session_id": started.session_id,
            "test_id": started.test_id,
            "test_title": started.test_title,
            "total_questions": started.total_questions,
            "started_at": started.started_at,
            "deadline": started.deadline,
            "time_limit_seconds": started.time_limit_seconds,
            "warning": started.warning,
        }

    @app.get("/api/sessions/{session_id}/question")
    def current_question(
        session_id: int, principal: Principal = Depends(current_principal)
    ):
        owned_session(session_id, principal)
        view = engine.current_question(session_id, now())
        if isinstance(view, QuestionView):
            return question_payload(view)
        return expired_payload(view)

    @app.post("/api/sessions/{session_id}/answer")
    def submit_answer(
        session_id: int,
        body: AnswerBody,
        principal: Principal = Depends(current_principal),
    ):
        owned_session(session_id, principal)
        outcome = engine.submit_answer(session_id, body.position, body.option_id, now())
        return outcome_payload(outcome)

    # -- results ---------------------------------------------------------------

    @app.get("/api/results")
    def own_results(
        principal: Principal = Depends(current_principal),
        limit: int = Query(default=20, ge=1),
    ):
        results = store.list_recent_results(principal.user_id, limit)
        payloads = []
        for result in results:
            test = store.get_entity("test", result.test_id)
            payloads.append(result_payload(result, test.title if test else None))
        return payloads

    @app.get("/api/results/{result_id}")
    def result_detail(
        result_id: int, principal: Principal = Depends(current_principal)
    ):
        result = store.get_result(result_id)
        if result is None:
            raise UnknownResult(f"no result with id {result_id}")
        if result.user_id != principal.user_id and principal.role is not Role.SUPERVISOR:
            raise Forbidden("not your result")
        return annotated_payload(engine.result_detail(result_id))

    # -- supervisor console -------------------------------------------------------

    @app.post("/api/admin/domains", status_code=201)
    def admin_create_domain(
        body: DomainBody, principal: Principal = Depends(supervisor_principal)
    ):
        domain_id = store.put_entity("domain", Domain(name=body.name))
        return {"id": domain_id, "name": body.name}

    @app.put("/api/admin/domains/{domain_id}")
    def admin_update_domain(
        domain_id: int,
        patch: dict,
        principal: Principal = Depends(supervisor_principal),
    ):
        entity = admin.update_registration(principal, "domain", domain_id, patch)
        return {"id": entity.id, "name": entity.name}

    @app.delete("/api/admin/domains/{domain_id}")
    def admin_delete_domain(
        domain_id: int, principal: Principal = Depends(supervisor_principal)
    ):
        return {"deleted_rows": admin.delete_catalog_entity(principal, "domain", domain_id)}

    @app.post("/api/admin/subdomains", status_code=201)
    def admin_create_subdomain(
        body: SubdomainBody, principal: Principal = Depends(supervisor_principal)
    ):
        subdomain_id = store.put_entity(
            "subdomain", Subdomain(domain_id=body.domain_id, name=body.name)
        )
        return {"id": subdomain_id, "domain_id": body.domain_id, "name": body.name}

    @app.put("/api/admin/subdomains/{subdomain_id}")
    def admin_update_subdomain(
        subdomain_id: int,
        patch: dict,
        principal: Principal = Depends(supervisor_principal),
    ):
        entity = admin.update_registration(principal, "subdomain", subdomain_id, patch)
        return {"id": entity.id, "domain_id": entity.domain_id, "name": entity.name}

    @app.delete("/api/admin/subdomains/{subdomain_id}")
    def admin_delete_subdomain(
        subdomain_id: int, principal: Principal = Depends(supervisor_principal)
    ):
        return {
            "deleted_rows": admin.delete_catalog_entity(principal, "subdomain", subdomain_id)
        }

    @app.post("/api/admin/tests", status_code=201)
    def admin_create_test(
        body: TestBundleBody, principal: Principal = Depends(supervisor_principal)
    ):
        bundle = TestBundle(
            subdomain_id=body.subdomain_id,
            title=body.title,
            time_limit_seconds=body.time_limit_seconds,
            ordinal=body.ordinal,
            questions=[
                QuestionSpec(
                    text=q.text,
                    options=[
                        OptionSpec(text=o.text, is_correct=o.is_correct)
                        for o in q.options
                    ],
                )
                for q in body.questions
            ],
        )
        return {"id": admin.create_test(principal, bundle)}

    @app.put("/api/admin/tests/{test_id}")
    def admin_update_test(
        test_id: int,
        patch: dict,
        principal: Principal = Depends(supervisor_principal),
    ):
        entity = admin.update_registration(principal, "test", test_id, patch)
        return {
            "id": entity.id,
            "subdomain_id": entity.subdomain_id,
            "title": entity.title,
            "time_limit_seconds": entity.time_limit_seconds,
            "ordinal": entity.ordinal,
        }

    @app.delete("/api/admin/tests/{test_id}")
    def admin_delete_test(
        test_id: int, principal: Principal = Depends(supervisor_principal)
    ):
        return {"deleted_rows": admin.delete_test(principal, test_id)}

    @app.put("/api/admin/questions/{question_id}")
    def admin_update_question(
        question_id: int,
        patch: dict,
        principal: Principal = Depends(supervisor_principal),
    ):
        entity = admin.update_registration(principal, "question", question_id, patch)
        return {
            "id": entity.id,
            "test_id": entity.test_id,
            "text": entity.text,
            "position": entity.position,
        }

    @app.put("/api/admin/options/{option_id}")
    def admin_update_option(
        option_id: int,
        patch: dict,
        principal: Principal = Depends(supervisor_principal),
    ):
        entity = admin.update_registration(principal, "option", option_id, patch)
        return {
            "id": entity.id,
            "question_id": entity.question_id,
            "text": entity.text,
            "is_correct": entity.is_correct,
        }

    @app.get("/api/admin/results")
    def admin_results(
        principal: Principal = Depends(supervisor_principal),
        user_id: int | None = Query(default=None),
    ):
        rows = admin.list_all_results(principal, user_id)
        return [
            {"username": username, **result_payload(result)}
            for username, result in rows
        ]

    @app.delete("/api/admin/results/{result_id}")
    def admin_delete_result(
        result_id: int, principal: Principal = Depends(supervisor_principal)
    ):
        admin.delete_user_result(principal, result_id)
        return {"status": "deleted"}

    @app.get("/api/admin/users")
    def admin_users(principal: Principal = Depends(supervisor_principal)):
        return [
            {
                "id": u.id,
                "username": u.username,
                "email": u.email,
                "name": u.name,
                "first_name": u.first_name,
                "role": u.role.value,
                "active": u.active,
                "created_at": u.created_at,
            }
            for u in admin.list_users(principal)
        ]

    @app.put("/api/admin/users/{user_id}")
    def admin_set_user_active(
        user_id: int,
        body: UserPatchBody,
        principal: Principal = Depends(supervisor_principal),
    ):
        account = admin.set_user_active(principal, user_id, body.active)
        return {"id": account.id, "username": account.username, "active": account.active}

    if config.static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
