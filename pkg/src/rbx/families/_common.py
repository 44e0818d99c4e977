from __future__ import annotations

from ..algebra import FiniteDimAlgebra
from ..checks import DEFAULT_BUDGET, CheckResult
from ..hopf import HopfAlgebra


class FamilyError(ValueError):
    """Unsupported family descriptor or parameter."""


class FamilyCheckError(ArithmeticError):
    """A builder's output failed one of its axiom checks."""

    def __init__(self, name: str, failures: list[CheckResult]):
        self.failures = failures
        what = ", ".join(
            f"{r.name} at {list(r.labels or r.witness or [])}" for r in failures
        )
        super().__init__(f"{name}: failed {what}")


def self_check(obj: FiniteDimAlgebra | HopfAlgebra, budget=DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
    if isinstance(obj, HopfAlgebra):
        results = obj.check_all(budget, seed)
    else:
        results = [obj.check_associativity(budget, seed), obj.check_unit()]
    failures = [r for r in results if not r]
    if failures:
        raise FamilyCheckError(obj.name or repr(obj), failures)
    return results
