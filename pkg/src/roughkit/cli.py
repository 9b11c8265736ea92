"""Batch front end: ingest tables and configs, run any registered model,
emit deterministic JSON reports, and replay the bundled fixture corpus.

Exit codes: 0 success, 1 usage/parse error, 2 model precondition failure,
3 fixture failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from roughkit.dispatch import FAMILIES, MODELS, run_model
from roughkit.verify import verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MODEL = 2
EXIT_FIXTURE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roughkit", description="rough approximation operators over finite universes")
    sub = parser.add_subparsers(dest="family", required=True)
    for family in FAMILIES:
        models = sorted(model for fam, model in MODELS if fam == family)
        p = sub.add_parser(family, help=f"models: {', '.join(models)}")
        p.add_argument("--model", required=True, choices=models)
        p.add_argument("--table", help="CSV table path (first column = element id)")
        p.add_argument("--config", help="JSON payload path")
        p.add_argument("--target", help="target spec: 'a,b,c' or 'Attr=Value'")
        p.add_argument("--out", help="write the report to this path instead of stdout")
    v = sub.add_parser("verify", help="replay the bundled paper-fixture corpus")
    v.add_argument("--section", help="only fixtures for this section id, e.g. 2.30")
    v.add_argument("--corpus", help="fixture directory (defaults to the bundled corpus)")
    v.add_argument("--out", help="write the summary to this path instead of stdout")
    return parser


def _load_payload(args) -> dict:
    payload: dict = {}
    if args.config:
        try:
            payload = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except FileNotFoundError:
            print(f"roughkit: config not found: {args.config}", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        except json.JSONDecodeError as exc:
            print(f"roughkit: config parse error at line {exc.lineno}, column {exc.colno}", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        if not isinstance(payload, dict):
            print("roughkit: config must be a JSON object", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
    if args.table:
        if not Path(args.table).exists():
            print(f"roughkit: table not found: {args.table}", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        table_spec = dict(payload.get("table") or {})
        table_spec.pop("rows", None)
        table_spec.pop("csv", None)
        table_spec["path"] = args.table
        payload["table"] = table_spec
    if args.target:
        payload["target"] = args.target
    return payload


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _run(args) -> int:
    payload = _load_payload(args)
    try:
        report = run_model(args.family, args.model, payload)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"roughkit: {exc}", file=sys.stderr)
        return EXIT_MODEL
    _emit(json.dumps(report, sort_keys=True, default=str), args.out)
    return EXIT_OK


def _verify(args) -> int:
    try:
        summary = verify(section=args.section, corpus_dir=args.corpus)
    except (FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"roughkit: fixture corpus problem: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = []
    for r in summary.results:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status} [{r.section}] {r.fixture_id}"
        if not r.ok:
            line += f" -- {r.message}"
        lines.append(line)
    lines.append(f"{summary.passed} passed, {summary.failed} failed, {len(summary.results)} total")
    _emit("\n".join(lines), args.out)
    if not summary.results:
        print("roughkit: no fixtures matched", file=sys.stderr)
        return EXIT_FIXTURE
    return EXIT_OK if summary.ok else EXIT_FIXTURE


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.family == "verify":
        return _verify(args)
    return _run(args)


if __name__ == "__main__":
    raise SystemExit(main())
