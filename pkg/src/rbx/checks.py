"""Verdict objects and basis-tuple enumeration shared by every axiom checker."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

# Carriers above this dimension are sampled unless the caller asks for an
# exhaustive run (budget=None).
SAMPLING_THRESHOLD = 64
DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive or sampled identity check.

    ``witness`` is the lexicographically first violating basis tuple among
    those examined (indices), ``None`` on success.  ``labels`` carries the
    same tuple rendered with basis labels.
    """

    name: str
    passed: bool
    checked: int
    total: int
    sampled: bool = False
    seed: int | None = None
    witness: tuple | None = None
    labels: tuple | None = None
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.passed

    def as_dict(self) -> dict:
        out = {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "total": self.total,
            "sampled": self.sampled,
        }
        if self.sampled:
            out["seed"] = self.seed
        if not self.passed:
            out["witness"] = list(self.labels if self.labels is not None else self.witness)
            if self.detail:
                out["detail"] = self.detail
        return out


def basis_tuples(dim: int, arity: int, budget: int | None = DEFAULT_BUDGET, seed: int = 0):
    """Basis index tuples to check, in lexicographic order.

    Returns ``(tuples, total, sampled)``.  All ``dim**arity`` tuples are used
    when ``budget`` is None, when ``dim`` is at most the sampling threshold,
    or when the full set fits within the budget; otherwise ``budget``
    distinct tuples are drawn with a seeded generator.
    """
    total = dim**arity
    if budget is None or dim <= SAMPLING_THRESHOLD or total <= budget:
        return itertools.product(range(dim), repeat=arity), total, False
    rng = random.Random(seed)
    picked: set[tuple] = set()
    while len(picked) < budget:
        picked.add(tuple(rng.randrange(dim) for _ in range(arity)))
    return sorted(picked), total, True
