"""Report type shared by all check-style operations."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

MAX_WITNESSES = 10


@dataclass
class IdentityReport:
    """Outcome of an exhaustive identity check."""

    name: str
    passed: bool = True
    checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, ok: bool, **witness: Any) -> bool:
        """Count one instance; keep a witness when it fails.

        Returns:
            ok, so callers can write ``if not report.record(...)``
        """
        self.checked += 1
        if not ok:
            self.passed = False
            if len(self.failures) < MAX_WITNESSES:
                self.failures.append(witness)
        return ok

    def absorb(self, other: "IdentityReport") -> None:
        """Fold another report's counts and witnesses into this one."""
        self.checked += other.checked
        if not other.passed:
            self.passed = False
            room = MAX_WITNESSES - len(self.failures)
            for failure in other.failures[:room]:
                self.failures.append({"check": other.name, **failure})

    def first_failure(self) -> Dict[str, Any]:
        return self.failures[0] if self.failures else {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        result: Dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
        }
        if self.failures:
            result["failures"] = [_plain(f) for f in self.failures]
        if self.details:
            result["details"] = _plain(self.details)
        return result


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, list):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value
