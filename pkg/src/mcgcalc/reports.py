"""Verification reports: named checks with per-generator word diffs.

Failures are data, not exceptions: every verifier returns a report whose
cases hold exactly when their mismatch lists are empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .endos import FreeEndomorphism
from .words import Word, format_word


@dataclass(frozen=True)
class Mismatch:
    """One failed comparison: what was produced (lhs) vs expected (rhs)."""

    generator: str
    lhs: Word
    rhs: Optional[Word]

    def to_json_item(self) -> list:
        return [
            self.generator,
            format_word(self.lhs),
            None if self.rhs is None else format_word(self.rhs),
        ]


@dataclass(frozen=True)
class CheckCase:
    name: str
    mismatches: tuple[Mismatch, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "mismatches": [m.to_json_item() for m in self.mismatches],
        }


@dataclass(frozen=True)
class VerificationReport:
    genus: int
    cases: tuple[CheckCase, ...]

    @property
    def all_hold(self) -> bool:
        return all(case.holds for case in self.cases)

    def case(self, name: str) -> CheckCase:
        for case in self.cases:
            if case.name == name:
                return case
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "cases": [case.to_json_dict() for case in self.cases],
        }


def case_from_endos(
    name: str, lhs: FreeEndomorphism, rhs: FreeEndomorphism
) -> CheckCase:
    """Compare two maps generator by generator; record every difference."""
    mismatches = tuple(
        Mismatch(sym.name, left, right)
        for sym, left, right in zip(lhs.basis.symbols, lhs.images, rhs.images)
        if left != right
    )
    return CheckCase(name, mismatches)
