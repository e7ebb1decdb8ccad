"""Command line entry points: serve, analytics, profile lint."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .model import LogStore


def _default_ui_dir() -> str | None:
    """The built chat UI, when the frontend has been compiled."""
    candidate = Path.cwd() / "frontend" / "dist"
    return str(candidate) if (candidate / "index.html").is_file() else None


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import build_live_stack, build_mock_stack, create_app

    if args.mock:
        stack = build_mock_stack(
            log_path=args.logs,
            profile_path=args.profile,
            lexicon_path=args.lexicon,
            corpus_dir=args.corpus,
            admin_token=os.environ.get("ADMIN_TOKEN", "dev-token"),
        )
    else:
        stack = build_live_stack()
    app = create_app(stack, ui_dir=args.ui_dir or _default_ui_dir())
    bind = args.bind or os.environ.get("BIND_ADDR", "127.0.0.1:8000")
    host, _, port = bind.partition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000))
    return 0


def _cmd_analytics(args: argparse.Namespace) -> int:
    from . import analytics

    store = LogStore(args.logs)
    written = analytics.write_reports(list(store), args.report, args.zone)
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_profile_lint(args: argparse.Namespace) -> int:
    from .cultural import lint_report, load_profile

    profile = load_profile(args.profile)
    corpus_tags = None
    if args.corpus:
        from .gateway import MockGateway
        from .knowledge import ingest_corpus

        gateway = MockGateway()
        index = ingest_corpus(args.corpus, embed=gateway.embed, dimension=gateway.dimension)
        corpus_tags = set()
        for chunk in index.chunks():
            corpus_tags.update(chunk.tags)
    print(lint_report(profile, corpus_tags))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="sehatbot")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--mock", action="store_true", help="deterministic offline stack")
    serve.add_argument("--bind", default=None, help="host:port (or BIND_ADDR env)")
    serve.add_argument("--profile", default=os.environ.get("PROFILE_PATH"))
    serve.add_argument("--lexicon", default=os.environ.get("LEXICON_PATH"))
    serve.add_argument("--corpus", default=os.environ.get("CORPUS_DIR"))
    serve.add_argument("--logs", default=os.environ.get("LOG_PATH"))
    serve.add_argument("--ui-dir", default=os.environ.get("UI_DIR"))
    serve.set_defaults(func=_cmd_serve)

    report = sub.add_parser("analytics", help="render report files from a log file")
    report.add_argument("--logs", required=True, help="line-delimited JSON log file")
    report.add_argument("--report", required=True, help="output directory")
    report.add_argument("--zone", default="Asia/Kolkata", help="IANA zone for binning")
    report.set_defaults(func=_cmd_analytics)

    profile = sub.add_parser("profile", help="cultural profile tools")
    profile_sub = profile.add_subparsers(dest="profile_command", required=True)
    lint = profile_sub.add_parser("lint", help="validate and print the action plan")
    lint.add_argument("--profile", required=True)
    lint.add_argument("--corpus", default=None, help="check corpus tag coverage")
    lint.set_defaults(func=_cmd_profile_lint)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
