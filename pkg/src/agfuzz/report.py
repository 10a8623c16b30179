"""Structured check records and their text / JSON rendering."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import errors
from .grades import format_grade

SCHEMA_VERSION = 1


@dataclass
class Check:
    """Outcome of one theorem or lemma on one instance.

    ``witness`` holds element indices (or index tuples) for a failure;
    ``detail`` carries any extra data worth reporting.
    """

    theorem: str
    instance: str
    passed: bool
    witness: object = None
    detail: dict = field(default_factory=dict)

    def require(self, exc=errors.TheoremViolation):
        if not self.passed:
            raise exc(f"{self.theorem} fails on {self.instance}: witness {self.witness}",
                      witness=self.witness)
        return self

    def sort_key(self):
        return (self.theorem, self.instance, repr(self.witness))


@dataclass
class Report:
    command: str
    records: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    @property
    def ok(self):
        return not self.failures

    def add(self, check):
        if isinstance(check, Check):
            self.records.append(check)
        else:
            self.records.extend(check)
        return self


def to_jsonable(obj):
    """Recursively convert grades to ``"p/q"`` strings and tuples to lists.

    Floats are refused: no grade may leave the process inexact.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_grade(obj)
    if isinstance(obj, float):
        raise TypeError("floating point value in report")
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_jsonable(v) for v in obj)
    if hasattr(obj, "item"):  # numpy scalar
        return to_jsonable(obj.item())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _text_value(v):
    v = to_jsonable(v)
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def emit_report(report, fmt="text"):
    """Render ``report`` deterministically; records are sorted by
    (theorem, instance, witness) so aggregation order never shows."""
    records = sorted(report.records, key=Check.sort_key)
    n_fail = sum(not r.passed for r in records)
    if fmt == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": report.command,
            "info": to_jsonable(report.info),
            "records": [
                {
                    "theorem": r.theorem,
                    "instance": r.instance,
                    "status": "PASS" if r.passed else "FAIL",
                    "witness": to_jsonable(r.witness),
                    "detail": to_jsonable(r.detail),
                }
                for r in records
            ],
            "summary": {"pass": len(records) - n_fail, "fail": n_fail},
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"# agfuzz {report.command}: {len(records) - n_fail} pass, {n_fail} fail"]
    for key in sorted(report.info):
        lines.append(f"{key}: {_text_value(report.info[key])}")
    for r in records:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.theorem} {r.instance}"
        if not r.passed:
            line += f" witness={_text_value(r.witness)}"
        lines.append(line)
    return "\n".join(lines) + "\n"
