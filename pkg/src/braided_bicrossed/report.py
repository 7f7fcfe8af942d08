"""Pass/fail bookkeeping shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import AlgebraError


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exhaustive sweep.

    ``checked`` counts the tuples examined, ``failures`` how many of them
    violate the identity and ``witness`` is the first violating tuple in
    lexicographic order (named by ``axes``).
    """

    name: str
    passed: bool
    checked: int = 0
    failures: int = 0
    witness: tuple | None = None
    axes: tuple[str, ...] = ()
    note: str = ""
    error: type[AlgebraError] | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.checked} checked"
        if not self.passed:
            text += f", {self.failures} failing"
        text += ")"
        if self.witness is not None and not self.passed:
            if self.axes and len(self.axes) == len(self.witness):
                pairs = ", ".join(f"{a}={w}" for a, w in zip(self.axes, self.witness))
                text += f" witness: {pairs}"
            else:
                text += f" witness: {self.witness}"
        if self.note:
            text += f" [{self.note}]"
        return text

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "witness": None if self.witness is None else [int(w) for w in self.witness],
            "axes": list(self.axes),
            "note": self.note,
        }


def sweep(
    name: str,
    bad: np.ndarray,
    axes: tuple[str, ...] = (),
    error: type[AlgebraError] | None = None,
    note: str = "",
) -> CheckResult:
    """Summarize a boolean array of violations (True marks a failure)."""
    bad = np.asarray(bad, dtype=bool)
    failures = int(bad.sum())
    witness = None
    if failures:
        witness = tuple(int(i) for i in np.argwhere(bad)[0])
    return CheckResult(
        name=name,
        passed=failures == 0,
        checked=int(bad.size),
        failures=failures,
        witness=witness,
        axes=axes,
        note=note,
        error=error,
    )


@dataclass
class Report:
    """An ordered collection of check results."""

    title: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: "Report", prefix: str = "") -> None:
        for r in other.results:
            if prefix:
                r = CheckResult(
                    name=f"{prefix}{r.name}",
                    passed=r.passed,
                    checked=r.checked,
                    failures=r.failures,
                    witness=r.witness,
                    axes=r.axes,
                    note=r.note,
                    error=r.error,
                )
            self.results.append(r)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def __getitem__(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def first_failure(self) -> CheckResult | None:
        return next((r for r in self.results if not r.passed), None)

    def raise_on_failure(self) -> None:
        bad = self.first_failure()
        if bad is None:
            return
        exc = bad.error or AlgebraError
        raise exc(f"{self.title}: {bad.line()}", bad.witness)

    def format(self) -> str:
        lines = [f"== {self.title}: {'PASS' if self.passed else 'FAIL'}"]
        lines += ["  " + r.line() for r in self.results]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }
