"""Operator command line: serve, migrate, seed, create-supervisor.

Exit codes: 0 success, 1 operational failure (message on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import getpass
import json
import logging
import sys

from .admin import AdminService, OptionSpec, QuestionSpec, TestBundle
from .auth import AuthService, Principal
from .config import ServerConfig, load_config
from .errors import QuizHostError
from .model import Domain, Role, Subdomain
from .store import Store, open_store


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quizhost", description="Self-hosted assessment service"
    )
    parser.add_argument("--config", metavar="PATH", help="JSON config file")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("serve", help="run the HTTP service")
    sub.add_parser("migrate", help="create any missing tables")

    seed = sub.add_parser("seed", help="import a domain tree of tests")
    seed.add_argument("file", help="JSON seed file (one domain tree)")

    sup = sub.add_parser(
        "create-supervisor", help="provision a supervisor account (prompts for password)"
    )
    sup.add_argument("username")
    sup.add_argument("email")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = load_config(args.config)
    except QuizHostError as exc:
        print(exc.message, file=sys.stderr)
        return 1

    handlers = {
        "serve": cmd_serve,
        "migrate": cmd_migrate,
        "seed": cmd_seed,
        "create-supervisor": cmd_create_supervisor,
    }
    try:
        return handlers[args.command](config, args)
    except QuizHostError as exc:
        print(exc.message, file=sys.stderr)
        return 1


def cmd_serve(config: ServerConfig, args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    logging.basicConfig(level=logging.INFO)
    store = open_store(config.store)
    store.init_schema()
    app = create_app(config, store=store)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_migrate(config: ServerConfig, args: argparse.Namespace) -> int:
    store = open_store(config.store, create=True)
    try:
        report = store.init_schema()
        print(
            f"{report.table_count} tables present"
            f" ({len(report.created)} created, {len(report.existing)} existing)"
        )
    finally:
        store.close()
    return 0


def cmd_seed(config: ServerConfig, args: argparse.Namespace) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            tree = json.load(fh)
    except OSError as exc:
        print(f"cannot read seed file: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"seed file is not valid JSON: {exc}", file=sys.stderr)
        return 1

    store = open_store(config.store)
    try:
        store.init_schema()
        created, skipped = seed_catalog(store, tree)
        print(f"seeded {created} tests ({skipped} already present)")
    finally:
        store.close()
    return 0


def seed_catalog(store: Store, tree: dict) -> tuple[int, int]:
    """Import one domain tree. Domains and subdomains are matched by name;
    a test whose title already exists under its subdomain is skipped.
    The whole file is applied in one transaction."""
    admin = AdminService(store)
    supervisor = Principal(user_id=0, role=Role.SUPERVISOR)
    created = 0
    skipped = 0
    with store.transaction():
        domain_name = tree.get("domain", "")
        domain = next(
            (d for d in store.list_domains() if d.name == domain_name), None
        )
        domain_id = (
            domain.id
            if domain is not None
            else store.put_entity("domain", Domain(name=domain_name))
        )
        for sub_tree in tree.get("subdomains", []):
            sub_name = sub_tree.get("name", "")
            existing = next(
                (
                    s
                    for s in store.list_children("domain", domain_id)
                    if s.name == sub_name
                ),
                None,
            )
            subdomain_id = (
                existing.id
                if existing is not None
                else store.put_entity(
                    "subdomain", Subdomain(domain_id=domain_id, name=sub_name)
                )
            )
            present_titles = {
                t.title for t in store.list_children("subdomain", subdomain_id)
            }
            for test_tree in sub_tree.get("tests", []):
                if test_tree.get("title") in present_titles:
                    skipped += 1
                    continue
                bundle = TestBundle(
                    subdomain_id=subdomain_id,
                    title=test_tree.get("title", ""),
                    time_limit_seconds=int(test_tree.get("time_limit_seconds", 0)),
                    ordinal=int(test_tree.get("ordinal", 1)),
                    questions=[
                        QuestionSpec(
                            text=q.get("text", ""),
                            options=[
                                OptionSpec(
                                    text=o.get("text", ""),
                                    is_correct=bool(o.get("is_correct", False)),
                                )
                                for o in q.get("options", [])
                            ],
                        )
                        for q in test_tree.get("questions", [])
                    ],
                )
                admin.create_test(supervisor, bundle)
                created += 1
    return created, skipped


def cmd_create_supervisor(config: ServerConfig, args: argparse.Namespace) -> int:
    if sys.stdin.isatty():
        password = getpass.getpass("Password: ")
    else:
        password = sys.stdin.readline().rstrip("\n")
    store = open_store(config.store)
    try:
        store.init_schema()
        auth = AuthService(store, token_ttl=config.token_ttl_seconds)
        view = auth.register(
            username=args.username,
            password=password,
            name="",
            first_name="",
            email=args.email,
            role=Role.SUPERVISOR,
        )
        print(f"supervisor account created: {view.username} (id {view.id})")
    finally:
        store.close()
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
