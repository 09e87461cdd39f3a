"""Verification reports: structured pass/fail evidence with witnesses.

Every failure carries the witness matrices that produced it, so feeding the
witnesses back through the named check reproduces the violation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .matio import matrix_from_dict, matrix_to_dict
from .substrate import SymMatrix

__all__ = ["Failure", "VerificationReport"]


@dataclass(frozen=True)
class Failure:
    check: str
    magnitude: float
    witnesses: tuple[SymMatrix, ...]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "magnitude": float(self.magnitude),
            "witnesses": [matrix_to_dict(w) for w in self.witnesses],
        }

    @staticmethod
    def from_dict(obj: dict) -> "Failure":
        witnesses = tuple(matrix_from_dict(w)[0] for w in obj["witnesses"])
        return Failure(str(obj["check"]), float(obj["magnitude"]), witnesses)


@dataclass
class VerificationReport:
    suite: str
    order: str
    dim: int
    trials: int
    seed: int
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, check: str, magnitude: float, witnesses) -> None:
        self.failures.append(Failure(check, float(magnitude), tuple(witnesses)))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "order": self.order,
            "dim": self.dim,
            "trials": self.trials,
            "seed": self.seed,
            "passed": self.passed,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed": float(self.elapsed),
            "notes": list(self.notes),
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @staticmethod
    def from_dict(obj: dict) -> "VerificationReport":
        report = VerificationReport(
            suite=str(obj["suite"]),
            order=str(obj["order"]),
            dim=int(obj["dim"]),
            trials=int(obj["trials"]),
            seed=int(obj["seed"]),
            failures=[Failure.from_dict(f) for f in obj.get("failures", [])],
            elapsed=float(obj.get("elapsed", 0.0)),
            notes=[str(n) for n in obj.get("notes", [])],
        )
        return report

    @staticmethod
    def from_json(text: str) -> "VerificationReport":
        return VerificationReport.from_dict(json.loads(text))
