"""The small quantum group of sl(2) at a root of unity, on the PBW basis E^i F^j K^l.

Multiplication comes from a rewriting engine.  A normal-form monomial is
multiplied on the right by one generator at a time:

* ``m K``: raise the K exponent (mod e);
* ``m F``: ``K^l F = q^{-2l} F K^l``, then raise the F exponent (``F^e = 0``);
* ``m E``: ``K^l E = q^{2l} E K^l``, and ``E^i F^j E`` is straightened by
  induction on ``j`` with ``F E = E F - (K - K^-1)/(q - q^-1)``.

Products of monomials iterate over the generators of the right factor.
Nothing here uses closed-form q-binomial straightening; the exhaustive
associativity and bialgebra checks certify the tables the engine produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra import AlgebraElement, FiniteDimAlgebra, add_into
from ..checks import DEFAULT_BUDGET
from ..hopf import HopfAlgebra, tensor_mul
from ..scalars import CyclotomicNumber, cyclotomic_field, zeta
from ._common import FamilyError, self_check

__all__ = [
    "QuantumGroupParams",
    "SmallQuantumGroup",
    "integral_times_e_closed_form",
    "uq_left_integral",
    "uq_sl2_bar",
]


@dataclass(frozen=True)
class QuantumGroupParams:
    d: int

    def __post_init__(self):
        if self.d <= 2:
            raise FamilyError(f"the small quantum group needs d > 2, got {self.d}")

    @property
    def e(self) -> int:
        return self.d if self.d % 2 else self.d // 2

    @property
    def q(self) -> CyclotomicNumber:
        return zeta(self.d)

    @property
    def dim(self) -> int:
        return self.e**3


def _label(i: int, j: int, l: int) -> str:
    return f"E{i}F{j}K{l}"


class _Rewriter:
    """Right multiplication of normal-form monomials ``(i, j, l)`` by E, F, K."""

    def __init__(self, params: QuantumGroupParams):
        self.e = params.e
        ring = cyclotomic_field(params.d)
        q = params.q
        self.qpow = [q**k for k in range(params.d)]  # q^k, indices mod d
        self.d = params.d
        self.c = (q - q.inverse()).inverse()  # 1/(q - q^-1)
        self.one = ring.one
        self._efe: dict[tuple[int, int], dict] = {}

    def q_(self, k: int) -> CyclotomicNumber:
        return self.qpow[k % self.d]

    def times_k(self, vec: dict) -> dict:
        e = self.e
        return {(i, j, (l + 1) % e): c for (i, j, l), c in vec.items()}

    def times_f(self, vec: dict) -> dict:
        out: dict = {}
        for (i, j, l), c in vec.items():
            if j + 1 < self.e:
                add_into(out, c * self.q_(-2 * l), {(i, j + 1, l): 1})
        return out

    def _e_f_e(self, i: int, j: int) -> dict:
        """E^i F^j E as a normal-form vector."""
        key = (i, j)
        if key in self._efe:
            return self._efe[key]
        if j == 0:
            out = {(i + 1, 0, 0): self.one} if i + 1 < self.e else {}
        else:
            # E^i F^{j-1} (F E) = (E^i F^{j-1} E) F - c E^i F^{j-1} (K - K^{e-1})
            out = self.times_f(self._e_f_e(i, j - 1))
            add_into(out, -self.c, {(i, j - 1, 1 % self.e): 1})
            add_into(out, self.c, {(i, j - 1, (self.e - 1) % self.e): 1})
        self._efe[key] = out
        return out

    def times_e(self, vec: dict) -> dict:
        e = self.e
        out: dict = {}
        for (i, j, l), c in vec.items():
            coeff = c * self.q_(2 * l)
            shifted = {(a, b, (k + l) % e): x for (a, b, k), x in self._e_f_e(i, j).items()}
            add_into(out, coeff, shifted)
        return out


class SmallQuantumGroup(HopfAlgebra):
    params: QuantumGroupParams

    def index(self, i: int, j: int, l: int) -> int:
        e = self.params.e
        return (i * e + j) * e + l

    def monomial(self, i: int, j: int, l: int) -> AlgebraElement:
        return self.algebra.basis_element(self.index(i, j, l))

    @property
    def E(self) -> AlgebraElement:
        return self.monomial(1, 0, 0)

    @property
    def F(self) -> AlgebraElement:
        return self.monomial(0, 1, 0)

    @property
    def K(self) -> AlgebraElement:
        return self.monomial(0, 0, 1 % self.params.e)

    @property
    def K_inv(self) -> AlgebraElement:
        return self.monomial(0, 0, (self.params.e - 1) % self.params.e)


@lru_cache(maxsize=None)
def uq_sl2_bar(d: int, check: bool = True, budget=DEFAULT_BUDGET, seed: int = 0) -> SmallQuantumGroup:
    """The e^3-dimensional Hopf algebra at q = zeta_d (e = d, or d/2 for even d).

    With ``check`` every algebra and Hopf axiom is run; a failure raises
    :class:`~rbx.families.FamilyCheckError` naming the violating basis data.
    """
    params = QuantumGroupParams(d)
    e = params.e
    ring = cyclotomic_field(d)
    rw = _Rewriter(params)
    monos = [(i, j, l) for i in range(e) for j in range(e) for l in range(e)]
    idx = {m: n for n, m in enumerate(monos)}

    mult = {}
    for m in monos:
        # right factor E^a F^b K^l: build E^a F^b incrementally, then shift by K^l
        row: dict[tuple[int, int], dict] = {}
        cur = {m: ring.one}
        for a in range(e):
            if a:
                cur = rw.times_e(row[(a - 1, 0)])
            row[(a, 0)] = cur
            for b in range(1, e):
                row[(a, b)] = rw.times_f(row[(a, b - 1)])
        for (a, b), vec in row.items():
            shifted = dict(vec)
            for l in range(e):
                mult[(idx[m], idx[(a, b, l)])] = {idx[key]: c for key, c in shifted.items()}
                shifted = rw.times_k(shifted)
    name = f"uqsl2:{d}"
    A = FiniteDimAlgebra([_label(*m) for m in monos], mult, {idx[(0, 0, 0)]: 1}, ring, name=name)
    table = A.table

    one, E, F, K = idx[(0, 0, 0)], idx[(1, 0, 0)], idx[(0, 1, 0)], idx[(0, 0, 1 % e)]
    K_inv = idx[(0, 0, (e - 1) % e)]
    delta_e = {(one, E): ring.one, (E, K): ring.one}
    delta_f = {(K_inv, F): ring.one, (F, one): ring.one}
    delta_k = {(K, K): ring.one}
    cop = {}
    for i in range(e):
        for j in range(e):
            t = {(one, one): ring.one}
            for _ in range(i):
                t = tensor_mul(table, t, delta_e)
            for _ in range(j):
                t = tensor_mul(table, t, delta_f)
            for l in range(e):
                cop[idx[(i, j, l)]] = t
                t = tensor_mul(table, t, delta_k)
    counit = [ring.one if (i, j) == (0, 0) else ring.zero for (i, j, l) in monos]

    # S is an anti-homomorphism: S(E^i F^j K^l) = S(K)^l S(F)^j S(E)^i
    s_e = {idx[(1, 0, (e - 1) % e)]: -ring.one}            # -E K^-1
    s_f = A.mul_sparse({K: ring.one}, {F: -ring.one})      # -K F
    s_k = {K_inv: ring.one}
    antipode = {}
    for (i, j, l) in monos:
        x = {one: ring.one}
        for _ in range(l):
            x = A.mul_sparse(x, s_k)
        for _ in range(j):
            x = A.mul_sparse(x, s_f)
        for _ in range(i):
            x = A.mul_sparse(x, s_e)
        antipode[idx[(i, j, l)]] = x

    H = SmallQuantumGroup(A, cop, counit, antipode, name=name)
    H.params = params
    if check:
        self_check(H, budget=budget, seed=seed)
    return H


def uq_left_integral(H: SmallQuantumGroup, verify: bool = True) -> AlgebraElement:
    """``E^{e-1} F^{e-1} (1 + K + ... + K^{e-1})``, checked against every basis element."""
    e = H.params.e
    xi = H.algebra.zero
    for l in range(e):
        xi = xi + H.monomial(e - 1, e - 1, l)
    if verify:
        for a in H.algebra.gens():
            if a * xi != H.counit(a) * xi:
                raise FamilyError(f"left integral check failed at {H.algebra.render(a)}")
        if H.counit(xi):
            raise FamilyError("the left integral should have counit 0")
    return xi


def integral_times_e_closed_form(H: SmallQuantumGroup) -> AlgebraElement:
    """The double-sum expression quoted in the literature for ``xi E``.

    ``sum_n q^{2n+e-2}/(q-q^-1) [e-1] E^{e-1}F^{e-2}K^{n+1}
    - sum_n q^{2n+2-e}/(q-q^-1) [e-1] E^{e-1}F^{e-2}K^{n-1}`` with
    ``[e-1] = (q^{e-1} - q^{1-e})/(q - q^-1)``.  Kept separate from the
    direct product so the two can be compared.
    """
    p = H.params
    e, q = p.e, p.q
    qi = q.inverse()
    denom = (q - qi).inverse()
    bracket = (q ** (e - 1) - q ** (1 - e)) * denom
    out = H.algebra.zero
    for n in range(e):
        out = out + (q ** (2 * n + e - 2) * denom * bracket) * H.monomial(e - 1, e - 2, (n + 1) % e)
        out = out - (q ** (2 * n + 2 - e) * denom * bracket) * H.monomial(e - 1, e - 2, (n - 1) % e)
    return out
