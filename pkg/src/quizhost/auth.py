"""Account lifecycle and role-based authorization.

Passwords are stored only as salted PBKDF2 digests. Recovery never reveals
whether an email is registered: the caller-visible acknowledgment is a
constant, and the one-time reset ticket travels through the operator's
delivery channel (the server log at this deployment scale).
"""

from __future__ import annotations

import hashlib
import hmac
import logging
import secrets
import time
from dataclasses import dataclass
from typing import Callable

from .errors import (
    AuthFailed,
    DuplicateIdentity,
    Forbidden,
    InvalidTicket,
    Unauthenticated,
    WeakInput,
)
from .model import Role, UserAccount
from .store import Store

log = logging.getLogger(__name__)

TOKEN_KIND_SESSION = "session"
TOKEN_KIND_RESET = "reset"

DEFAULT_TOKEN_TTL = 24 * 3600
RESET_TICKET_TTL = 3600

RECOVERY_ACK = {"status": "ok"}


def hash_password(password: str, iterations: int = 200_000) -> str:
    salt = secrets.token_hex(16)
    digest = hashlib.pbkdf2_hmac(
        "sha256", password.encode("utf-8"), bytes.fromhex(salt), iterations
    )
    return f"pbkdf2_sha256${iterations}${salt}${digest.hex()}"


def verify_password(password: str, stored: str) -> bool:
    try:
        scheme, iterations, salt, digest = stored.split("$")
        if scheme != "pbkdf2_sha256":
            return False
        candidate = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"), bytes.fromhex(salt), int(iterations)
        )
        return hmac.compare_digest(candidate.hex(), digest)
    except (ValueError, TypeError):
        return False


@dataclass(frozen=True)
class Principal:
    user_id: int
    role: Role


@dataclass(frozen=True)
class AccountView:
    """Public projection of an account; never carries credential material."""

    id: int
    username: str
    name: str
    first_name: str
    email: str
    role: Role
    created_at: int
    active: bool


def account_view(account: UserAccount) -> AccountView:
    assert account.id is not None
    return AccountView(
        id=account.id,
        username=account.username,
        name=account.name,
        first_name=account.first_name,
        email=account.email,
        role=account.role,
        created_at=account.created_at,
        active=account.active,
    )


@dataclass(frozen=True)
class IssuedToken:
    token: str
    expires_at: int
    account: AccountView


class AuthService:
    """Stateless auth operations over the persistence layer."""

    def __init__(
        self,
        store: Store,
        token_ttl: int = DEFAULT_TOKEN_TTL,
        clock: Callable[[], float] = time.time,
        hash_iterations: int = 200_000,
    ):
        self._store = store
        self._token_ttl = token_ttl
        self._clock = clock
        self._hash_iterations = hash_iterations

    def _now(self) -> int:
        return int(self._clock())

    def register(
        self,
        username: str,
        password: str,
        name: str,
        first_name: str,
        email: str,
        role: Role = Role.REGULAR,
    ) -> AccountView:
        """Create an account. Self-registration is always Regular; the
        Supervisor role is reachable only through the server CLI."""
        if not username.strip() or not password or not email.strip():
            raise WeakInput("username, password, and email must be nonempty")
        with self._store.transaction():
            if self._store.get_user_by_username(username) is not None:
                raise DuplicateIdentity("username already taken")
            if self._store.get_user_by_email(email) is not None:
                raise DuplicateIdentity("email already taken")
            account = UserAccount(
                username=username,
                password_hash=hash_password(password, self._hash_iterations),
                name=name,
                first_name=first_name,
                email=email,
                role=role,
                created_at=self._now(),
            )
            account.id = self._store.insert_user(account)
        log.info("registered account %s (role %s)", username, role.value)
        return account_view(account)

    def login(self, username: str, password: str) -> IssuedToken:
        """Issue a fresh bearer token on credential match.

        A single AuthFailed covers unknown user, wrong password, and
        deactivated account alike.
        """
        account = self._store.get_user_by_username(username)
        if account is None or not verify_password(password, account.password_hash):
            raise AuthFailed("invalid credentials")
        if not account.active:
            raise AuthFailed("invalid credentials")
        token = secrets.token_urlsafe(32)
        expires_at = self._now() + self._token_ttl
        assert account.id is not None
        self._store.put_token(token, account.id, expires_at, TOKEN_KIND_SESSION)
        return IssuedToken(token=token, expires_at=expires_at, account=account_view(account))

    def logout(self, token: str) -> None:
        self._store.delete_token(token)

    def recover_password(self, email: str) -> dict:
        """Start password recovery; the response never varies with account
        existence. At most one live reset ticket per account."""
        account = self._store.get_user_by_email(email)
        if account is not None and account.id is not None:
            with self._store.transaction():
                self._store.delete_user_tokens(account.id, TOKEN_KIND_RESET)
                ticket = secrets.token_urlsafe(32)
                self._store.put_token(
                    ticket, account.id, self._now() + RESET_TICKET_TTL, TOKEN_KIND_RESET
                )
            log.info("password reset ticket for %s: %s", account.username, ticket)
        return dict(RECOVERY_ACK)

    def reset_password(self, ticket: str, new_password: str) -> None:
        """Consume a one-time ticket, set the new password, revoke all live
        login tokens for the user."""
        if not new_password:
            raise WeakInput("new password must be nonempty")
        with self._store.transaction():
            row = self._store.get_token(ticket, TOKEN_KIND_RESET)
            if row is None or row["expires_at"] < self._now():
                if row is not None:
                    self._store.delete_token(ticket)
                raise InvalidTicket("unknown, expired, or already used ticket")
            user_id = row["user_id"]
            self._store.delete_token(ticket)
            self._store.set_user_password(
                user_id, hash_password(new_password, self._hash_iterations)
            )
            self._store.delete_user_tokens(user_id, TOKEN_KIND_SESSION)

    def authorize(self, token: str | None, required_role: Role | None = None) -> Principal:
        """Resolve a live token into a principal with a sufficient role.

        required_role=None accepts any authenticated account; Supervisor
        satisfies every requirement.
        """
        if not token:
            raise Unauthenticated("missing token")
        row = self._store.get_token(token, TOKEN_KIND_SESSION)
        if row is None or row["expires_at"] < self._now():
            raise Unauthenticated("invalid or expired token")
        account = self._store.get_user(row["user_id"])
        if account is None or not account.active:
            raise Unauthenticated("account unavailable")
        if (
            required_role is Role.SUPERVISOR
            and account.role is not Role.SUPERVISOR
        ):
            raise Forbidden("supervisor role required")
        assert account.id is not None
        return Principal(user_id=account.id, role=account.role)
