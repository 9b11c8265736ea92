"""Replay the bundled fixture corpus and report pass/fail per fixture.

Each fixture file carries a model payload plus the expected slice of the
report.  Expected dicts are matched as subsets (extra report keys are fine);
lists must match exactly; floats compare within 1e-9.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from roughkit.dispatch import run_model

FLOAT_TOL = 1e-9


def _mismatches(expected, actual, path: str, out: list[str]) -> None:
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            out.append(f"{path}: expected object, got {type(actual).__name__}")
            return
        for key, sub in expected.items():
            if key not in actual:
                out.append(f"{path}.{key}: missing from report")
            else:
                _mismatches(sub, actual[key], f"{path}.{key}", out)
        return
    if isinstance(expected, list):
        if not isinstance(actual, (list, tuple)):
            out.append(f"{path}: expected list, got {type(actual).__name__}")
            return
        if len(expected) != len(actual):
            out.append(f"{path}: expected {len(expected)} entries, got {len(actual)}")
            return
        for i, (e, a) in enumerate(zip(expected, actual)):
            _mismatches(e, a, f"{path}[{i}]", out)
        return
    if isinstance(expected, bool) or isinstance(actual, bool):
        if expected is not actual:
            out.append(f"{path}: expected {expected!r}, got {actual!r}")
        return
    if isinstance(expected, (int, float)) and isinstance(actual, (int, float)):
        if isinstance(expected, float) or isinstance(actual, float):
            if abs(float(expected) - float(actual)) > FLOAT_TOL:
                out.append(f"{path}: expected {expected!r}, got {actual!r}")
        elif expected != actual:
            out.append(f"{path}: expected {expected!r}, got {actual!r}")
        return
    if expected != actual:
        out.append(f"{path}: expected {expected!r}, got {actual!r}")


def compare(expected, actual) -> list[str]:
    out: list[str] = []
    _mismatches(expected, actual, "$", out)
    return out


@dataclass(frozen=True)
class FixtureResult:
    fixture_id: str
    section: str
    ok: bool
    message: str


@dataclass(frozen=True)
class VerifySummary:
    results: tuple[FixtureResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.ok)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if not r.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0


def load_fixtures(corpus_dir: "str | Path | None" = None) -> list[dict]:
    fixtures = []
    if corpus_dir is not None:
        paths = sorted(Path(corpus_dir).glob("*.json"))
        if not paths:
            raise FileNotFoundError(f"no fixture files found under {corpus_dir}")
        for p in paths:
            fixtures.append(json.loads(p.read_text(encoding="utf-8")))
    else:
        root = resources.files("roughkit") / "fixtures"
        names = sorted(entry.name for entry in root.iterdir() if entry.name.endswith(".json"))
        if not names:
            raise FileNotFoundError("bundled fixture corpus is missing")
        for name in names:
            fixtures.append(json.loads((root / name).read_text(encoding="utf-8")))
    fixtures.sort(key=lambda f: (f["section"], f["id"]))
    return fixtures


def run_fixture(fixture: dict) -> FixtureResult:
    try:
        report = run_model(fixture["family"], fixture["model"], fixture["payload"])
    except Exception as exc:  # surfaced verbatim in the summary
        return FixtureResult(fixture["id"], fixture["section"], False, f"error: {exc}")
    problems = compare(fixture["expected"], report)
    if problems:
        return FixtureResult(fixture["id"], fixture["section"], False, "; ".join(problems))
    return FixtureResult(fixture["id"], fixture["section"], True, "ok")


def verify(section: str | None = None, corpus_dir: "str | Path | None" = None) -> VerifySummary:
    fixtures = load_fixtures(corpus_dir)
    if section is not None:
        fixtures = [f for f in fixtures if f["section"] == section or f["section"].startswith(section + ".")]
    return VerifySummary(tuple(run_fixture(f) for f in fixtures))
