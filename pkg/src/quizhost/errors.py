"""Service error hierarchy.

Every error carries a stable machine code; the HTTP layer maps codes 1:1
onto response bodies of the shape {"error": code, "message": text}.
"""

from __future__ import annotations


class QuizHostError(Exception):
    code = "error"
    http_status = 500

    def __init__(self, message: str | None = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__


# -- persistence ------------------------------------------------------------

class StoreConnectionError(QuizHostError):
    code = "connection_error"


class SelectionError(QuizHostError):
    code = "database_selection_error"


class StorageError(QuizHostError):
    code = "storage_error"


class ConstraintError(QuizHostError):
    code = "constraint_error"
    http_status = 409


# -- auth --------------------------------------------------------------------

class DuplicateIdentity(QuizHostError):
    code = "duplicate_identity"
    http_status = 409


class WeakInput(QuizHostError):
    code = "weak_input"
    http_status = 400


class AuthFailed(QuizHostError):
    code = "auth_failed"
    http_status = 401


class InvalidTicket(QuizHostError):
    code = "invalid_ticket"
    http_status = 400


class Unauthenticated(QuizHostError):
    code = "unauthenticated"
    http_status = 401


class Forbidden(QuizHostError):
    code = "forbidden"
    http_status = 403


# -- test engine ---------------------------------------------------------------

class UnknownTest(QuizHostError):
    code = "unknown_test"
    http_status = 404


class InvalidTest(QuizHostError):
    code = "invalid_test"
    http_status = 400


class SessionAlreadyActive(QuizHostError):
    code = "session_already_active"
    http_status = 409


class UnknownSession(QuizHostError):
    code = "unknown_session"
    http_status = 404


class SessionFinished(QuizHostError):
    code = "session_finished"
    http_status = 409


class ForwardOnly(QuizHostError):
    code = "forward_only"
    http_status = 409


class UnknownOption(QuizHostError):
    code = "unknown_option"
    http_status = 400


class IncompleteSession(QuizHostError):
    code = "incomplete_session"
    http_status = 409


class UnknownResult(QuizHostError):
    code = "unknown_result"
    http_status = 404


# -- admin ---------------------------------------------------------------------

class UnknownEntity(QuizHostError):
    code = "unknown_entity"
    http_status = 404


class ValidationFailed(QuizHostError):
    code = "validation_failed"
    http_status = 400

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations) or "validation failed")
        self.violations = violations


# -- config ----------------------------------------------------------------------

class ConfigError(QuizHostError):
    code = "config_error"
