"""Server configuration: JSON config file with environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Mapping

from .errors import ConfigError
from .store import StoreConfig

ENV_PREFIX = "QUIZHOST"


@dataclass(frozen=True)
class EducationLink:
    label: str
    url: str


@dataclass
class ServerConfig:
    store: StoreConfig
    host: str = "127.0.0.1"
    port: int = 8000
    token_ttl_seconds: int = 86400
    static_dir: str | None = None
    education_links: list[EducationLink] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ConfigError(f"port must be in [1, 65535], got {self.port}")
        if self.token_ttl_seconds < 60:
            raise ConfigError(
                f"token TTL must be at least 60 seconds, got {self.token_ttl_seconds}"
            )


def load_config(
    path: str | None = None, env: Mapping[str, str] | None = None
) -> ServerConfig:
    """Build a ServerConfig from an optional JSON file, then apply
    QUIZHOST_* environment overrides (uppercase, underscore-joined field
    names; nested store fields as QUIZHOST_STORE_<FIELD>)."""
    env = os.environ if env is None else env
    raw: dict = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config file {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc

    store_raw = dict(raw.get("store", {}))
    store_raw.setdefault("location", ".")
    store_raw.setdefault("database_name", "tests")
    if f"{ENV_PREFIX}_STORE_LOCATION" in env:
        store_raw["location"] = env[f"{ENV_PREFIX}_STORE_LOCATION"]
    if f"{ENV_PREFIX}_STORE_DATABASE_NAME" in env:
        store_raw["database_name"] = env[f"{ENV_PREFIX}_STORE_DATABASE_NAME"]

    host = env.get(f"{ENV_PREFIX}_HOST", raw.get("host", "127.0.0.1"))
    port = env.get(f"{ENV_PREFIX}_PORT", raw.get("port", 8000))
    ttl = env.get(f"{ENV_PREFIX}_TOKEN_TTL_SECONDS", raw.get("token_ttl_seconds", 86400))
    static_dir = env.get(f"{ENV_PREFIX}_STATIC_DIR", raw.get("static_dir"))

    links_raw = raw.get("education_links", [])
    if f"{ENV_PREFIX}_EDUCATION_LINKS" in env:
        try:
            links_raw = json.loads(env[f"{ENV_PREFIX}_EDUCATION_LINKS"])
        except json.JSONDecodeError as exc:
            raise ConfigError(
                f"{ENV_PREFIX}_EDUCATION_LINKS must be a JSON array: {exc}"
            ) from exc

    try:
        links = [EducationLink(label=l["label"], url=l["url"]) for l in links_raw]
    except (KeyError, TypeError) as exc:
        raise ConfigError(
            "education_links entries need 'label' and 'url' fields"
        ) from exc

    try:
        port = int(port)
        ttl = int(ttl)
    except ValueError as exc:
        raise ConfigError(f"port and token TTL must be integers: {exc}") from exc

    return ServerConfig(
        store=StoreConfig(**store_raw),
        host=str(host),
        port=port,
        token_ttl_seconds=ttl,
        static_dir=str(static_dir) if static_dir else None,
        education_links=links,
    )
