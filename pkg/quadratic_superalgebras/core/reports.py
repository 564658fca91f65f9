# Validation reports: immutable lists of axiom violations with witnesses

from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class Violation:
    # One failed axiom instance; witness holds basis labels
    axiom: str
    witness: Tuple[str, ...]
    detail: str = ""

    def describe(self) -> str:
        text = f"{self.axiom} violated at ({', '.join(self.witness)})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def axioms(self) -> Tuple[str, ...]:
        return tuple(sorted({v.axiom for v in self.violations}))

    def merged(self, *others: "ValidationReport") -> "ValidationReport":
        violations = list(self.violations)
        for other in others:
            violations.extend(other.violations)
        return ValidationReport(self.subject, tuple(violations))

    def lines(self, limit: int = 10) -> Iterable[str]:
        for violation in self.violations[:limit]:
            yield violation.describe()
        if len(self.violations) > limit:
            yield f"... {len(self.violations) - limit} more"
