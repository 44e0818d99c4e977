"""Iwahori-Hecke algebras over QQ[v, v^-1] with q = v^2."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..algebra import AlgebraElement, FiniteDimAlgebra, add_into
from ..checks import DEFAULT_BUDGET
from ..scalars import QQ, LaurentPoly, LaurentRing, specialize
from ._common import FamilyError, self_check
from .coxeter import CoxeterSystem, coxeter_system

__all__ = ["HeckeAlgebra", "hecke_algebra", "hecke_specialize", "kl_generator"]


class HeckeAlgebra(FiniteDimAlgebra):
    """Hecke algebra on the standard basis ``T[w]`` (``w`` a reduced word, 1-based)."""

    coxeter: CoxeterSystem

    def label(self, w: int) -> str:
        return f"T[{self.coxeter.word_label(w)}]"

    def T(self, w) -> AlgebraElement:
        if isinstance(w, str):
            w = self.coxeter.multiply_word(int(ch) - 1 for ch in w)
        elif not isinstance(w, int):
            w = self.coxeter.multiply_word(w)
        return self.basis_element(w)


def _right_mul_T(W: CoxeterSystem, vec: dict, s: int, q, qm1) -> dict:
    # T_x T_s = T_xs if l(xs) > l(x), else (q - 1) T_x + q T_xs
    out: dict = {}
    for x, c in vec.items():
        xs = W.right[x][s]
        if W.lengths[xs] > W.lengths[x]:
            add_into(out, c, {xs: 1})
        else:
            add_into(out, c, {x: qm1, xs: q})
    return out


@lru_cache(maxsize=None)
def hecke_algebra(W: CoxeterSystem | str, var: str = "v", budget=DEFAULT_BUDGET, seed: int = 0) -> HeckeAlgebra:
    if isinstance(W, str):
        W = coxeter_system(W)
    ring = LaurentRing(var)
    v = ring.generator()
    q = v * v
    qm1 = q - 1
    n = W.order
    mult = {}
    for u in range(n):
        # T_u T_w built along BFS parents: word(w) = word(parent) + (s,)
        prods: list[dict] = [dict() for _ in range(n)]
        prods[0] = {u: ring.one}
        for w in range(1, n):
            word = W.words[w]
            parent = W.multiply_word(word[:-1])
            prods[w] = _right_mul_T(W, prods[parent], word[-1], q, qm1)
        for w in range(n):
            mult[(u, w)] = prods[w]
    labels = [f"T[{W.word_label(w)}]" for w in range(n)]
    H = HeckeAlgebra(labels, mult, {0: 1}, ring, name=f"hecke:{W.descriptor}")
    H.coxeter = W
    for s in range(W.rank):
        H._named[f"C[{W.generators[s]}]"] = kl_generator(H, s)
    self_check(H, budget=budget, seed=seed)
    return H


def kl_generator(H: HeckeAlgebra, s) -> AlgebraElement:
    """``C_s = v^-1 T_s - v``, i.e. q^{-1/2}(T_s - q)."""
    W = H.coxeter
    if isinstance(s, str) and s.startswith("C[") and s.endswith("]"):
        s = s[2:-1]
    idx = W.generator_index(s)
    var = H.ring.var
    ts = W.right[0][idx]
    return H.element({ts: LaurentPoly({-1: 1}, var), 0: LaurentPoly({1: -1}, var)})


def hecke_specialize(H: FiniteDimAlgebra, t) -> FiniteDimAlgebra:
    """Specialize v -> t (nonzero rational); the result is re-checked for associativity."""
    t = Fraction(t)
    if not t:
        raise FamilyError("cannot specialize the Hecke algebra at v = 0")
    S = H.change_ring(lambda c: specialize(c, t), QQ, name=f"{H.name}@v={t}")
    self_check(S)
    return S
