"""Command-line frontend; a thin client over the analysis service.

By default commands run the service in-process. Point them at a running
server with ``--server URL`` or the ``VOICELEADING_SERVER`` environment
variable. Data goes to stdout (or ``--out``); diagnostics go to stderr;
the exit status is 0 only on success.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .client import Backend, ClientError, HttpBackend, LocalBackend
from .cloud import normalise_axes
from .errors import FixtureError, VoiceLeadingError
from .fixtures import fixture_path, list_fixtures

SERVER_ENV = "VOICELEADING_SERVER"


def _read_score_arg(arg: str) -> str:
    """Resolve a score argument: an existing file path, else a fixture name."""
    path = Path(arg)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    try:
        return fixture_path(arg).read_text(encoding="utf-8")
    except FixtureError:
        raise ClientError(f"no such score file or fixture: {arg}")


def _emit(data: str, out: str | None) -> None:
    if out:
        Path(out).write_text(data, encoding="utf-8")
    else:
        sys.stdout.write(data)


def _cmd_analyze(args: argparse.Namespace, backend: Backend) -> int:
    text = _read_score_arg(args.score)
    if args.format == "text":
        _emit(backend.analyze_listing(text), args.out)
    else:
        report = backend.analyze_records(text)
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def _cmd_cloud(args: argparse.Namespace, backend: Backend) -> int:
    text = _read_score_arg(args.score)
    if args.format == "csv":
        _emit(backend.cloud_csv(text, args.axes), args.out)
    else:
        _emit(
            json.dumps(backend.cloud_records(text, args.axes), indent=2) + "\n",
            args.out,
        )
    return 0


def _cmd_dtw(args: argparse.Namespace, backend: Backend) -> int:
    texts = [_read_score_arg(score) for score in args.scores]
    if args.format == "csv":
        _emit(backend.dtw_csv(texts, normalised=args.normalised), args.out)
    else:
        _emit(
            json.dumps(
                backend.dtw_records(texts, include_paths=args.paths), indent=2
            )
            + "\n",
            args.out,
        )
    return 0


def _cmd_fixtures(args: argparse.Namespace, backend: Backend) -> int:
    if args.action == "list":
        for name in list_fixtures():
            sys.stdout.write(name + "\n")
        return 0
    sys.stdout.write(backend.fixture_text(args.name))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voiceleading",
        description="Voice-leading complexity analysis of scores.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help=f"base URL of a running service (default: ${SERVER_ENV} or in-process)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", help="per-transition complexity analysis of one score"
    )
    analyze.add_argument("score", help="score file path or bundled fixture name")
    analyze.add_argument(
        "--format", choices=("text", "records"), default="text",
        help="text listing (default) or a JSON report",
    )
    analyze.add_argument("--out", default=None, help="write output to a file")
    analyze.set_defaults(handler=_cmd_analyze)

    cloud = commands.add_parser(
        "cloud", help="complexity-cloud projection export"
    )
    cloud.add_argument("score", help="score file path or bundled fixture name")
    cloud.add_argument(
        "--axes", default=None,
        help="three comma-separated axes (e.g. up,down,constant); "
        "default exports the drop-crossings and drop-constant views",
    )
    cloud.add_argument(
        "--format", choices=("csv", "records"), default="csv",
        help="CSV (default) or JSON records",
    )
    cloud.add_argument("--out", default=None, help="write output to a file")
    cloud.set_defaults(handler=_cmd_cloud)

    dtw = commands.add_parser(
        "dtw", help="pairwise DTW distance matrix over two or more scores"
    )
    dtw.add_argument("scores", nargs="+", help="score files or fixture names")
    dtw.add_argument(
        "--normalised", action="store_true",
        help="render per-step normalised distances in CSV output",
    )
    dtw.add_argument(
        "--format", choices=("csv", "records"), default="csv",
        help="CSV (default) or JSON records with full precision",
    )
    dtw.add_argument(
        "--paths", action="store_true",
        help="include optimal warping paths in records output",
    )
    dtw.add_argument("--out", default=None, help="write output to a file")
    dtw.set_defaults(handler=_cmd_dtw)

    fixtures_cmd = commands.add_parser("fixtures", help="bundled fixture scores")
    fixtures_sub = fixtures_cmd.add_subparsers(dest="action", required=True)
    fixtures_sub.add_parser("list", help="list fixture names")
    cat = fixtures_sub.add_parser("cat", help="print a fixture file")
    cat.add_argument("name")
    fixtures_cmd.set_defaults(handler=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if getattr(args, "axes", None) is not None:
        axes = [part for part in args.axes.split(",") if part]
        try:
            args.axes = list(normalise_axes(axes))
        except VoiceLeadingError as exc:
            parser.error(str(exc))
    if args.command == "dtw" and len(args.scores) < 2:
        parser.error("dtw needs at least two scores")

    server = args.server or os.environ.get(SERVER_ENV)
    backend: Backend = HttpBackend(server) if server else LocalBackend()

    try:
        return args.handler(args, backend)
    except (ClientError, VoiceLeadingError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
