"""Report objects shared by the verification entry points."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

__all__ = ['CheckReport']


@dataclass
class CheckReport:
    """Outcome of one verification run.

    `witness` holds machine-readable evidence: for passes, the realized
    permutation and similar data; for failures, the first offending
    column, entry, or pair.  `signs` maps a class label to the constant
    sign on that class, when the check establishes one.  `timing` is
    wall-clock seconds; it is reported as null in structured output so
    identical runs stay byte-identical.
    """

    theorem: str
    passed: bool
    shape: tuple[int, ...] | None = None
    ordering: tuple[str, ...] | None = None
    witness: dict[str, Any] = field(default_factory=dict)
    signs: dict[str, int] | None = None
    failures: list[str] = field(default_factory=list)
    timing: float | None = None

    def record(self) -> dict[str, Any]:
        """JSON-ready dict with the interface field names."""
        return {
            'theorem': self.theorem,
            'shape': list(self.shape) if self.shape is not None else None,
            'ordering': list(self.ordering) if self.ordering is not None else None,
            'passed': self.passed,
            'witness': self.witness,
            'signs': self.signs,
            'failures': self.failures,
            'timing': None,
        }
