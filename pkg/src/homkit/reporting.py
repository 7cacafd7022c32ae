"""Check reports: named identities with pass flags and failure witnesses.

A witness records the lexicographically first basis tuple on which an
identity fails, together with the nonzero residual vector (left side minus
right side of the identity, except for membership checks where it is the
offending value itself).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .linalg import Vector, format_lincomb


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    residual: Vector

    def render(self) -> str:
        where = ", ".join(str(i + 1) for i in self.indices)
        return f"at ({where}): residual = {format_lincomb(self.residual)}"


@dataclass(frozen=True)
class CheckResult:
    identity: str
    passed: bool
    witness: Witness | None = None

    def render(self) -> str:
        if self.passed:
            return f"PASS {self.identity}"
        tail = f" {self.witness.render()}" if self.witness is not None else ""
        return f"FAIL {self.identity}{tail}"


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def result(self, identity: str) -> CheckResult:
        for c in self.checks:
            if c.identity == identity:
                return c
        raise KeyError(identity)

    def prefixed(self, prefix: str) -> "CheckReport":
        return CheckReport(tuple(
            CheckResult(f"{prefix}{c.identity}", c.passed, c.witness)
            for c in self.checks))

    def render(self) -> str:
        return "\n".join(c.render() for c in self.checks)

    def __iter__(self) -> Iterator[CheckResult]:
        return iter(self.checks)


def concat(*reports: CheckReport) -> CheckReport:
    checks: list[CheckResult] = []
    for r in reports:
        checks.extend(r.checks)
    return CheckReport(tuple(checks))


def scan_identity(name: str, indices: Iterable[tuple[int, ...]],
                  residual: Callable[..., Vector]) -> CheckResult:
    """Evaluate ``residual`` on every index tuple; record the first failure.

    The scan order of ``indices`` must be lexicographic so that reported
    witnesses are deterministic.
    """
    for idx in indices:
        r = residual(*idx)
        if not r.is_zero():
            return CheckResult(name, False, Witness(tuple(idx), r))
    return CheckResult(name, True)


def scan_operator_identity(name: str, indices: Iterable[tuple[int, ...]],
                           difference: Callable) -> CheckResult:
    """Like :func:`scan_identity` for operator equalities.

    ``difference`` returns a matrix; on failure the witness appends the
    first carrier index whose column is nonzero.
    """
    for idx in indices:
        d = difference(*idx)
        for k in range(d.cols):
            col = d.col(k)
            if not col.is_zero():
                return CheckResult(name, False, Witness(tuple(idx) + (k,), col))
    return CheckResult(name, True)
