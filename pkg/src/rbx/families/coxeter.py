"""Finite Coxeter systems of type A_n and I_2(m), enumerated breadth-first."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from ._common import FamilyError

__all__ = ["CoxeterSystem", "coxeter_system"]


@dataclass(frozen=True)
class CoxeterSystem:
    """Element table of a finite Coxeter group in a faithful realization.

    Elements are indexed in breadth-first order from the identity (index 0)
    under right multiplication by the generators, so ``lengths`` are BFS
    depths and ``words[w]`` is the reduced word reached through BFS parents
    (generator indices, 0-based).  ``right[w][s]`` and ``left[w][s]`` are
    the indices of ``w s`` and ``s w``.
    """

    descriptor: str
    generators: tuple[str, ...]
    elements: tuple
    lengths: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    left: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def longest_length(self) -> int:
        return max(self.lengths)

    def word_label(self, w: int) -> str:
        return "".join(str(s + 1) for s in self.words[w])

    def multiply_word(self, word) -> int:
        w = 0
        for s in word:
            w = self.right[w][s]
        return w

    def generator_index(self, s) -> int:
        if isinstance(s, int):
            if not 0 <= s < self.rank:
                raise FamilyError(f"generator index {s} out of range")
            return s
        if s in self.generators:
            return self.generators.index(s)
        raise FamilyError(f"unknown generator {s!r}; expected one of {', '.join(self.generators)}")


def _type_a(n: int):
    size = n + 1
    ident = tuple(range(size))

    def compose(p, r):
        return tuple(p[r[x]] for x in range(size))

    gens = []
    for i in range(n):
        g = list(range(size))
        g[i], g[i + 1] = g[i + 1], g[i]
        gens.append(tuple(g))
    return ident, gens, compose


def _dihedral(m: int):
    # (k, f) stands for r^k t^f with t a reflection; s1 = t, s2 = r t, so s1 s2 = r^-1 has order m
    def compose(a, b):
        return ((a[0] + (-1) ** a[1] * b[0]) % m, a[1] ^ b[1])

    return (0, 0), [(0, 1), (1, 1)], compose


@lru_cache(maxsize=None)
def coxeter_system(descriptor: str) -> CoxeterSystem:
    """``"A:n"`` (1 <= n <= 4, the symmetric group S_{n+1}) or ``"I2:m"`` (2 <= m <= 12)."""
    kind, _, arg = descriptor.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise FamilyError(f"Coxeter descriptor {descriptor!r} needs an integer parameter") from None
    if kind == "A":
        if not 1 <= n <= 4:
            raise FamilyError("A:n supports 1 <= n <= 4")
        ident, gens, compose = _type_a(n)
    elif kind == "I2":
        if not 2 <= n <= 12:
            raise FamilyError("I2:m supports 2 <= m <= 12")
        ident, gens, compose = _dihedral(n)
    else:
        raise FamilyError(f"unknown Coxeter type {kind!r} (expected A or I2)")

    elements = [ident]
    index = {ident: 0}
    lengths = [0]
    words: list[tuple[int, ...]] = [()]
    queue = deque([0])
    while queue:
        w = queue.popleft()
        for s, g in enumerate(gens):
            ws = compose(elements[w], g)
            if ws not in index:
                index[ws] = len(elements)
                elements.append(ws)
                lengths.append(lengths[w] + 1)
                words.append(words[w] + (s,))
                queue.append(index[ws])
    right = tuple(tuple(index[compose(x, g)] for g in gens) for x in elements)
    left = tuple(tuple(index[compose(g, x)] for g in gens) for x in elements)
    W = CoxeterSystem(
        descriptor,
        tuple(f"s{i + 1}" for i in range(len(gens))),
        tuple(elements),
        tuple(lengths),
        tuple(words),
        right,
        left,
    )
    _validate(W)
    return W


def _validate(W: CoxeterSystem) -> None:
    if W.lengths[0] != 0:
        raise FamilyError("identity must have length 0")
    for w in range(W.order):
        if len(W.words[w]) != W.lengths[w] or W.multiply_word(W.words[w]) != w:
            raise FamilyError(f"stored reduced word of element {w} is inconsistent")
        for s in range(W.rank):
            if abs(W.lengths[W.left[w][s]] - W.lengths[w]) != 1:
                raise FamilyError(f"|l(sw) - l(w)| != 1 at w={w}, s={s}")
            if abs(W.lengths[W.right[w][s]] - W.lengths[w]) != 1:
                raise FamilyError(f"|l(ws) - l(w)| != 1 at w={w}, s={s}")
