"""Hopf structures on finite-dimensional algebras.

Tensors in ``H (x) H`` are sparse dicts keyed by index pairs ``(a, b)``;
:func:`tensor_to_vector` gives the dense layout ``a * dim + b``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from .algebra import AlgebraElement, FiniteDimAlgebra, add_into
from .checks import DEFAULT_BUDGET, CheckResult, basis_tuples
from .linalg import Matrix, common_nullspace
from .scalars import LaurentRing

__all__ = [
    "HopfAlgebra",
    "HopfStructureError",
    "check_antipode",
    "check_bialgebra",
    "check_coassociativity",
    "check_counit",
    "dual_algebra",
    "integrals",
    "is_cocommutative_element",
    "tensor_mul",
    "tensor_to_vector",
    "trace_element",
]


class HopfStructureError(ArithmeticError):
    """A computed quantity contradicts the Hopf axioms (e.g. the trace element identities)."""


def tensor_to_vector(t: Mapping[tuple[int, int], object], dim: int, ring) -> list:
    out = [ring.zero] * (dim * dim)
    for (a, b), c in t.items():
        out[a * dim + b] = c
    return out


def tensor_mul(table, s: Mapping, t: Mapping) -> dict:
    """Product in ``H (x) H``: ``(a (x) b)(c (x) d) = ac (x) bd``."""
    out: dict = {}
    for (a, b), x in s.items():
        ta, tb = table[a], table[b]
        for (c, d), y in t.items():
            left, right = ta[c], tb[d]
            if not left or not right:
                continue
            xy = x * y
            for p, u in left.items():
                xyu = xy * u
                for q, w in right.items():
                    key = (p, q)
                    val = xyu * w
                    prev = out.get(key)
                    if prev is not None:
                        val = prev + val
                    if val:
                        out[key] = val
                    else:
                        del out[key]
    return out


class HopfAlgebra:
    """A :class:`FiniteDimAlgebra` with coproduct, counit and antipode.

    ``coproduct[k]`` is ``{(a, b): c}`` with ``Delta(e_k) = sum c e_a (x) e_b``;
    ``counit`` is the row of values ``eps(e_k)``; ``antipode[k]`` is the
    sparse coordinate dict of ``S(e_k)`` (a :class:`Matrix` whose column k is
    ``S(e_k)`` is accepted too).  Axioms are not checked here.
    """

    def __init__(self, algebra: FiniteDimAlgebra, coproduct, counit: Sequence, antipode, name: str = ""):
        n = algebra.dim
        ring = algebra.ring
        self.algebra = algebra
        self.name = name or algebra.name
        cop: list[dict] = [{} for _ in range(n)]
        for k, terms in dict(coproduct).items():
            if not 0 <= k < n:
                raise ValueError(f"coproduct index {k} out of range")
            clean = {}
            for (a, b), c in terms.items():
                if not (0 <= a < n and 0 <= b < n):
                    raise ValueError(f"coproduct term ({a}, {b}) out of range")
                c = ring(c)
                if c:
                    clean[(a, b)] = c
            cop[k] = clean
        self._cop = cop
        counit = list(counit)
        if len(counit) != n:
            raise ValueError(f"counit needs {n} values, got {len(counit)}")
        self._eps = tuple(ring(c) for c in counit)
        if isinstance(antipode, Matrix):
            if antipode.shape != (n, n):
                raise ValueError("antipode matrix has the wrong shape")
            antipode = {
                k: {i: antipode[i, k] for i in range(n) if antipode[i, k]} for k in range(n)
            }
        anti: list[dict] = [{} for _ in range(n)]
        for k, terms in dict(antipode).items():
            anti[k] = {i: ring(c) for i, c in terms.items() if c}
        self._anti = anti

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def basis(self) -> tuple[str, ...]:
        return self.algebra.basis

    def coproduct_of(self, k: int) -> dict:
        return dict(self._cop[k])

    @property
    def counit_values(self) -> tuple:
        return self._eps

    @property
    def antipode_matrix(self) -> Matrix:
        n, ring = self.dim, self.ring
        z = ring.zero
        return Matrix.from_columns(
            [[self._anti[k].get(i, z) for i in range(n)] for k in range(n)], ring, n
        )

    def coproduct_data(self) -> dict[int, dict]:
        return {k: dict(t) for k, t in enumerate(self._cop) if t}

    def antipode_data(self) -> dict[int, dict]:
        return {k: dict(t) for k, t in enumerate(self._anti) if t}

    def replace(self, *, coproduct=None, counit=None, antipode=None) -> HopfAlgebra:
        """Copy with some structure maps swapped out (used to inject faults)."""
        return HopfAlgebra(
            self.algebra,
            self.coproduct_data() if coproduct is None else coproduct,
            self._eps if counit is None else counit,
            self.antipode_data() if antipode is None else antipode,
            self.name,
        )

    # -- maps on elements --------------------------------------------------

    def delta_sparse(self, u: Mapping) -> dict:
        out: dict = {}
        for k, c in u.items():
            add_into(out, c, self._cop[k])
        return out

    def coproduct(self, x: AlgebraElement) -> dict:
        return self.delta_sparse(x.sparse())

    def counit(self, x: AlgebraElement):
        acc = self.ring.zero
        for k, c in x.sparse().items():
            acc = acc + c * self._eps[k]
        return self.ring(acc)

    def antipode(self, x: AlgebraElement) -> AlgebraElement:
        out: dict = {}
        for k, c in x.sparse().items():
            add_into(out, c, self._anti[k])
        return self.algebra.from_sparse(out)

    def tensor_mul(self, s: Mapping, t: Mapping) -> dict:
        return tensor_mul(self.algebra.table, s, t)

    # -- axiom checks --------------------------------------------------------

    def _fail(self, name, checked, total, k, detail="") -> CheckResult:
        return CheckResult(name, False, checked, total, witness=(k,), labels=(self.basis[k],), detail=detail)

    def check_coassociativity(self) -> CheckResult:
        """``(Delta (x) id) Delta = (id (x) Delta) Delta`` on every basis element."""
        n = self.dim
        for k in range(n):
            left: dict = {}
            right: dict = {}
            for (a, b), c in self._cop[k].items():
                add_into(left, c, {(x, y, b): v for (x, y), v in self._cop[a].items()})
                add_into(right, c, {(a, x, y): v for (x, y), v in self._cop[b].items()})
            if left != right:
                return self._fail("coassociativity", k + 1, n, k)
        return CheckResult("coassociativity", True, n, n)

    def check_counit(self) -> CheckResult:
        """``(eps (x) id) Delta = id = (id (x) eps) Delta`` on every basis element."""
        n = self.dim
        for k in range(n):
            left: dict = {}
            right: dict = {}
            for (a, b), c in self._cop[k].items():
                add_into(left, c * self._eps[a], {b: 1})
                add_into(right, c * self._eps[b], {a: 1})
            target = {k: self.ring.one}
            if left != target or right != target:
                return self._fail("counit", k + 1, n, k)
        return CheckResult("counit", True, n, n)

    def check_bialgebra(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
        """Delta and eps are unital algebra maps; basis pairs suffice by bilinearity."""
        one = self.ring.one
        u = self.algebra.unit.sparse()
        du = self.delta_sparse(u)
        uu = {(a, b): x * y for a, x in u.items() for b, y in u.items()}
        uu = {key: c for key, c in uu.items() if c}
        eps_u = sum((c * self._eps[k] for k, c in u.items()), self.ring.zero)
        if du != uu or eps_u != one:
            return CheckResult("bialgebra", False, 0, 0, detail="Delta(1) != 1 (x) 1 or eps(1) != 1", witness=("unit",), labels=("unit",))
        tuples, total, sampled = basis_tuples(self.dim, 2, budget, seed)
        table = self.algebra.table
        checked = 0
        for i, j in tuples:
            checked += 1
            prod = table[i][j]
            lhs = self.delta_sparse(prod)
            rhs = self.tensor_mul(self._cop[i], self._cop[j])
            eps_prod = sum((c * self._eps[k] for k, c in prod.items()), self.ring.zero)
            if lhs != rhs or eps_prod != self._eps[i] * self._eps[j]:
                return CheckResult(
                    "bialgebra", False, checked, total, sampled, seed if sampled else None,
                    witness=(i, j), labels=(self.basis[i], self.basis[j]),
                )
        return CheckResult("bialgebra", True, checked, total, sampled, seed if sampled else None)

    def check_antipode(self) -> CheckResult:
        """``sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)`` on every basis element."""
        n = self.dim
        table = self.algebra.table
        unit = self.algebra.unit.sparse()
        for k in range(n):
            left: dict = {}
            right: dict = {}
            for (a, b), c in self._cop[k].items():
                for m, s in self._anti[a].items():
                    if table[m][b]:
                        add_into(left, c * s, table[m][b])
                for m, s in self._anti[b].items():
                    if table[a][m]:
                        add_into(right, c * s, table[a][m])
            target: dict = {}
            add_into(target, self._eps[k], unit)
            if left != target or right != target:
                side = "S(h1) h2" if left != target else "h1 S(h2)"
                return self._fail("antipode", k + 1, n, k, detail=f"{side} != eps(h) 1")
        return CheckResult("antipode", True, n, n)

    def check_all(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
        return [
            self.algebra.check_associativity(budget, seed),
            self.algebra.check_unit(),
            self.check_coassociativity(),
            self.check_counit(),
            self.check_bialgebra(budget, seed),
            self.check_antipode(),
        ]

    # -- derived objects ---------------------------------------------------

    def dual_algebra(self) -> FiniteDimAlgebra:
        """The algebra ``H*`` on the dual basis ``f1..fn``: ``f_i f_j = sum_k Delta_k^{ij} f_k``.

        Its unit is the counit.
        """
        n = self.dim
        mult: dict = {}
        for k, terms in enumerate(self._cop):
            for (a, b), c in terms.items():
                mult.setdefault((a, b), {})[k] = c
        labels = [f"f{i + 1}" for i in range(n)]
        return FiniteDimAlgebra(labels, mult, list(self._eps), self.ring, name=f"dual({self.name})" if self.name else "dual")

    def trace_element_coordinates(self) -> list:
        """Closed formula: coordinate i of x_H is ``sum_j Delta_j^{ij}``."""
        ring = self.ring
        out = []
        for i in range(self.dim):
            acc = ring.zero
            for j in range(self.dim):
                c = self._cop[j].get((i, j))
                if c:
                    acc = acc + c
            out.append(ring(acc))
        return out

    def trace_element_via_traces(self) -> list:
        """Independent route: literally build each ``l_{f_i}`` on ``H*`` and take its trace."""
        dual = self.dual_algebra()
        return [dual.left_mult_matrix(dual.basis_element(i)).trace() for i in range(self.dim)]

    def trace_element(self, cross_check: bool = True) -> AlgebraElement:
        """The element x_H pairing with every ``a*`` to ``Tr(l_{a*})``.

        Both ``eps(x_H) = dim H`` and ``x_H^2 = eps(x_H) x_H`` are verified
        before returning; a failure raises :class:`HopfStructureError`.
        """
        coords = self.trace_element_coordinates()
        if cross_check and coords != self.trace_element_via_traces():
            raise HopfStructureError("closed-form trace element disagrees with explicit traces")
        x = self.algebra.element(coords)
        eps = self.counit(x)
        if eps != self.dim:
            raise HopfStructureError(f"eps(x_H) = {eps}, expected dim H = {self.dim}")
        if x * x != eps * x:
            raise HopfStructureError("x_H^2 != eps(x_H) x_H")
        return x

    def integrals(self, side: str = "left") -> list[AlgebraElement]:
        """Basis of the left (``a L = eps(a) L``) or right (``L a = eps(a) L``) integrals.

        Over a Laurent ring the computation runs in the rational-function
        field and the returned elements belong to the lifted algebra.
        """
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        A = self.algebra
        if isinstance(A.ring, LaurentRing):
            field = A.ring.fraction_field()
            A = A.change_ring(field, field)
        ring = A.ring
        n = A.dim
        ident = Matrix.identity(n, ring)

        def blocks():
            for i in range(n):
                e = A.basis_element(i)
                op = A.left_mult_matrix(e) if side == "left" else A.right_mult_matrix(e)
                yield op - ident.scale(self._eps[i])

        basis = common_nullspace(blocks(), n, ring)
        out = [A.element(v.flat) for v in basis]
        for lam in out:
            for i in range(n):
                e = A.basis_element(i)
                prod = e * lam if side == "left" else lam * e
                if prod != self._eps[i] * lam:
                    raise HopfStructureError(f"{side} integral failed verification at {A.basis[i]}")
        return out

    def is_cocommutative_element(self, c: AlgebraElement) -> bool:
        """True iff ``Delta(c)`` is invariant under the tensor flip."""
        t = self.coproduct(c)
        return t == {(b, a): v for (a, b), v in t.items()}

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<HopfAlgebra{label} dim={self.dim} over {self.ring.name}>"


def check_coassociativity(H: HopfAlgebra) -> CheckResult:
    return H.check_coassociativity()


def check_counit(H: HopfAlgebra) -> CheckResult:
    return H.check_counit()


def check_bialgebra(H: HopfAlgebra, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
    return H.check_bialgebra(budget, seed)


def check_antipode(H: HopfAlgebra) -> CheckResult:
    return H.check_antipode()


def dual_algebra(H: HopfAlgebra) -> FiniteDimAlgebra:
    return H.dual_algebra()


def trace_element(H: HopfAlgebra) -> AlgebraElement:
    return H.trace_element()


def integrals(H: HopfAlgebra, side: str = "left") -> list[AlgebraElement]:
    return H.integrals(side)


def is_cocommutative_element(H: HopfAlgebra, c: AlgebraElement) -> bool:
    return H.is_cocommutative_element(c)
