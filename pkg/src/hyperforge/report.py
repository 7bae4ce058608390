"""Verdicts and axiom reports shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of a single quantified check.

    ``witness`` is the lexicographically least failing tuple (or ``None``).
    ``details`` carries whatever the check wants to surface (computed sets,
    budgets, counts) and is what ends up in JSON output.
    """

    passed: bool
    witness: Any = None
    checked: int = 0
    note: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "witness": _jsonable(self.witness),
            "checked": self.checked,
            "note": self.note,
            "details": _jsonable(self.details),
        }


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None
    checked: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "witness": _jsonable(self.witness),
            "checked": self.checked,
            "note": self.note,
        }


class AxiomReport:
    """Ordered collection of axiom verdicts plus informational facts.

    Informational entries (``info``) never affect :attr:`passed`.
    """

    def __init__(self, subject: str = ""):
        self.subject = subject
        self.results: dict[str, AxiomResult] = {}
        self.info: dict[str, Any] = {}

    def record(self, name, passed, witness=None, checked=0, note=""):
        self.results[name] = AxiomResult(name, passed, witness, checked, note)
        return self.results[name]

    def merge(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for name, res in other.results.items():
            self.results[prefix + name] = res
        for key, val in other.info.items():
            self.info.setdefault(prefix + key, val)
        return self

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results.values() if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        return self.results[name]

    def __contains__(self, name: str) -> bool:
        return name in self.results

    def __bool__(self) -> bool:
        return self.passed

    def __repr__(self) -> str:
        bad = ", ".join(r.name for r in self.failures())
        state = "pass" if self.passed else f"fail [{bad}]"
        return f"AxiomReport({self.subject!r}: {state})"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "axioms": {k: v.to_dict() for k, v in self.results.items()},
            "info": _jsonable(self.info),
        }


def _jsonable(obj):
    from fractions import Fraction

    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_jsonable(v) for v in obj), key=repr)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and obj in (float("inf"), float("-inf")):
        return "-inf" if obj < 0 else "inf"
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return obj
