"""Check report model - the result of a verification operation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable


class CheckStatus(Enum):
    """Outcome of a check."""

    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True, slots=True)
class CheckReport:
    """Result of a verification: never raised, always returned."""

    name: str
    status: CheckStatus
    message: str = ""
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def ok(cls, name: str, message: str = "", **detail: Any) -> "CheckReport":
        return cls(name=name, status=CheckStatus.PASS, message=message, detail=detail)

    @classmethod
    def fail(cls, name: str, message: str, **detail: Any) -> "CheckReport":
        return cls(name=name, status=CheckStatus.FAIL, message=message, detail=detail)

    def to_dict(self) -> dict[str, Any]:
        """Convert to JSON-serializable dict."""
        return {
            "name": self.name,
            "status": self.status.value,
            "message": self.message,
            "detail": self.detail,
        }

    def render(self) -> str:
        tag = "[PASS]" if self.passed else "[FAIL]"
        return f"{tag} {self.name}" + (f": {self.message}" if self.message else "")


def combine_reports(name: str, reports: Iterable[CheckReport]) -> CheckReport:
    """Fold several reports into one; the first failure wins."""
    count = 0
    for report in reports:
        count += 1
        if not report.passed:
            return CheckReport.fail(
                name,
                f"{report.name}: {report.message}",
                **report.detail,
            )
    return CheckReport.ok(name, f"{count} check(s) passed", checks=count)
