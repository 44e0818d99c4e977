"""Finite groups given by Cayley tables, and their group Hopf algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..algebra import FiniteDimAlgebra
from ..checks import DEFAULT_BUDGET
from ..hopf import HopfAlgebra
from ..scalars import QQ
from ._common import FamilyError, self_check

__all__ = ["FiniteGroup", "builtin_group", "group_algebra"]

MAX_GROUP_ORDER = 120


@dataclass(frozen=True)
class FiniteGroup:
    """A group law on ``range(order)``: ``table[g][h]`` is the index of ``gh``."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise FamilyError("a group needs at least one element")
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise FamilyError("group labels must be distinct, one per element")
        if any(len(row) != n or any(not 0 <= x < n for x in row) for row in self.table):
            raise FamilyError("Cayley table is not an n x n table on range(n)")
        t = self.table
        e = self.identity
        if any(t[e][g] != g or t[g][e] != g for g in range(n)):
            raise FamilyError("claimed identity is not two-sided")
        for g in range(n):
            if e not in t[g]:
                raise FamilyError(f"element {self.labels[g]} has no inverse")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise FamilyError(f"Cayley table not associative at {(a, b, c)}")

    @classmethod
    def from_operation(cls, elements, op, labels, name: str = "") -> FiniteGroup:
        elements = list(elements)
        index = {g: i for i, g in enumerate(elements)}
        table = tuple(tuple(index[op(g, h)] for h in elements) for g in elements)
        ident = next(
            i for i, g in enumerate(elements) if all(op(g, h) == h for h in elements)
        )
        return cls(table, ident, tuple(labels), name)

    @property
    def order(self) -> int:
        return len(self.table)

    def inverse(self, g: int) -> int:
        return self.table[g].index(self.identity)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(n))


def _power_label(sym: str, k: int) -> str:
    return sym if k == 1 else f"{sym}{k}"


@lru_cache(maxsize=None)
def builtin_group(name: str) -> FiniteGroup:
    """``cyclic:n``, ``dihedral:m`` (order 2m) or ``symmetric:n`` (n <= 5)."""
    kind, _, arg = name.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise FamilyError(f"group descriptor {name!r} needs an integer parameter") from None
    if kind == "cyclic":
        if not 1 <= n <= MAX_GROUP_ORDER:
            raise FamilyError(f"cyclic:n supports 1 <= n <= {MAX_GROUP_ORDER}")
        labels = ["e"] + [_power_label("g", k) for k in range(1, n)]
        return FiniteGroup.from_operation(range(n), lambda a, b: (a + b) % n, labels, name)
    if kind == "dihedral":
        if not 1 <= n <= MAX_GROUP_ORDER // 2:
            raise FamilyError(f"dihedral:m supports 1 <= m <= {MAX_GROUP_ORDER // 2}")
        # (k, f) stands for r^k s^f, with s r = r^-1 s
        elements = [(k, f) for f in (0, 1) for k in range(n)]

        def op(a, b):
            return ((a[0] + (-1) ** a[1] * b[0]) % n, a[1] ^ b[1])

        def label(g):
            k, f = g
            rot = "" if k == 0 else _power_label("r", k)
            if not f:
                return rot or "e"
            return rot + "s"

        return FiniteGroup.from_operation(elements, op, [label(g) for g in elements], name)
    if kind == "symmetric":
        if not 1 <= n <= 5:
            raise FamilyError("symmetric:n supports 1 <= n <= 5")
        perms = list(itertools.permutations(range(n)))

        def compose(p, r):
            # (p r)(x) = p(r(x))
            return tuple(p[r[x]] for x in range(n))

        labels = ["[" + "".join(str(x + 1) for x in p) + "]" for p in perms]
        return FiniteGroup.from_operation(perms, compose, labels, name)
    raise FamilyError(f"unknown group family {kind!r} (expected cyclic, dihedral or symmetric)")


def group_algebra(G: FiniteGroup, check: bool = True, budget=DEFAULT_BUDGET, seed: int = 0) -> HopfAlgebra:
    """QQ[G] with Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1."""
    n = G.order
    mult = {(g, h): {G.table[g][h]: 1} for g in range(n) for h in range(n)}
    name = f"group:{G.name}" if G.name else "group"
    A = FiniteDimAlgebra(G.labels, mult, {G.identity: 1}, QQ, name=name)
    H = HopfAlgebra(
        A,
        {g: {(g, g): 1} for g in range(n)},
        [1] * n,
        {g: {G.inverse(g): 1} for g in range(n)},
        name=name,
    )
    if check:
        self_check(H, budget=budget, seed=seed)
    return H
