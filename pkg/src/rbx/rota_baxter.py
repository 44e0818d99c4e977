"""Rota-Baxter operators, quasi-idempotent elements and the derived
tridendriform / dendriform structures.

An operator ``P`` on an algebra ``A`` is Rota-Baxter of weight ``lam`` when

    P(a) P(b) = P(a P(b)) + P(P(a) b) + lam P(a b)

for all ``a, b``.  Left multiplication by an element ``xi`` with
``xi^2 = -lam xi`` is such an operator, and it induces a tridendriform
structure ``a < b = lam^-1 a xi b``, ``a > b = lam^-1 xi a b``, ``a . b = a b``
when ``lam`` is invertible, or a dendriform one when ``lam = 0``.

Operator matrices follow the linear-algebra convention: column ``j`` holds
the coordinates of ``P(e_j)``.
"""

from __future__ import annotations

from collections.abc import Mapping

from .algebra import (
    AlgebraElement,
    FiniteDimAlgebra,
    _table_left,
    _table_right,
    add_into,
    table_associativity,
    table_product,
)
from .checks import DEFAULT_BUDGET, CheckResult, basis_tuples
from .linalg import Matrix
from .scalars import (
    LaurentPoly,
    LaurentRing,
    RationalFunction,
    common_ring,
    invert,
    ring_of,
)

__all__ = [
    "DENDRIFORM_AXIOMS",
    "DendriformStructure",
    "NotQuasiIdempotentError",
    "RotaBaxterError",
    "RotaBaxterOperator",
    "TRIDENDRIFORM_AXIOMS",
    "TridendriformStructure",
    "check_dendriform",
    "check_quasi_idempotent_operator",
    "check_rb_identity",
    "check_star_associativity",
    "check_tridendriform",
    "derive_dendriform",
    "derive_tridendriform",
    "first_failure",
    "identity_rb",
    "operator_from_json",
    "operator_to_json",
    "quasi_idempotent_weight",
    "rb_from_element",
    "rescale",
    "star_product",
    "tridendriform_from_operator",
]


class RotaBaxterError(ArithmeticError):
    pass


class NotQuasiIdempotentError(RotaBaxterError):
    """``xi^2`` is not a scalar multiple of ``xi``; the square is kept for diagnosis."""

    def __init__(self, message: str, square: AlgebraElement | None = None):
        super().__init__(message)
        self.square = square


def _ratio(a, b, ring):
    """Exact ``a / b`` inside ``ring``; Laurent quotients go through the fraction field."""
    if isinstance(ring, LaurentRing):
        q = RationalFunction.from_laurent(ring(a)) / RationalFunction.from_laurent(ring(b))
        lp = q.to_laurent()
        if lp is None:
            return None
        return lp
    return ring(a) * invert(ring(b))


def quasi_idempotent_weight(A: FiniteDimAlgebra, xi: AlgebraElement):
    """The scalar ``lam`` with ``xi^2 = -lam xi``.

    Proportionality is decided exactly: the candidate ratio is read off the
    first nonzero coordinate of ``xi`` and then confirmed on all coordinates.
    """
    if not xi:
        raise RotaBaxterError("the zero element has no weight")
    sq = A.multiply(xi, xi)
    k = next(i for i, c in enumerate(xi.coeffs) if c)
    r = _ratio(sq.coeffs[k], xi.coeffs[k], A.ring)
    if r is None:
        raise NotQuasiIdempotentError(
            f"{A.render(xi)} squares to {A.render(sq)}; the ratio is not in {A.ring.name}", sq
        )
    if sq != r * xi:
        raise NotQuasiIdempotentError(
            f"{A.render(xi)} is not quasi-idempotent: its square {A.render(sq)} is not proportional to it", sq
        )
    return A.ring(-r)


class RotaBaxterOperator:
    """A linear operator on ``algebra`` together with a claimed weight."""

    def __init__(self, algebra: FiniteDimAlgebra, matrix: Matrix, weight, element: AlgebraElement | None = None):
        n = algebra.dim
        if matrix.shape != (n, n):
            raise RotaBaxterError(f"operator must be {n}x{n}, got {matrix.shape[0]}x{matrix.shape[1]}")
        self.algebra = algebra
        self.matrix = matrix
        self.weight = algebra.ring(weight)
        self.element = element
        self._cols = [{i: c for i, c in enumerate(matrix.column(j)) if c} for j in range(n)]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def column(self, j: int) -> dict:
        return self._cols[j]

    def apply_sparse(self, vec: Mapping) -> dict:
        out: dict = {}
        for j, c in vec.items():
            add_into(out, c, self._cols[j])
        return out

    def apply(self, a: AlgebraElement) -> AlgebraElement:
        return self.algebra.from_sparse(self.apply_sparse(a.sparse()))

    __call__ = apply

    def action_table(self) -> list[tuple[str, AlgebraElement]]:
        """``(label, P(e_i))`` for every basis element."""
        A = self.algebra
        return [(A.basis[j], A.from_sparse(self._cols[j])) for j in range(A.dim)]

    def check(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
        return check_rb_identity(self.algebra, self.matrix, self.weight, budget, seed)

    def check_quasi_idempotent(self) -> CheckResult:
        return check_quasi_idempotent_operator(self.matrix, self.weight)

    def __repr__(self) -> str:
        return f"<RotaBaxterOperator on {self.algebra.name or 'algebra'} weight={self.algebra.ring.render(self.weight)}>"


def check_rb_identity(A: FiniteDimAlgebra, P, weight, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
    """``P(a)P(b) = P(aP(b)) + P(P(a)b) + lam P(ab)`` on basis pairs.

    ``P`` may be a :class:`Matrix` or a :class:`RotaBaxterOperator`.
    Bilinearity of both sides makes basis pairs sufficient.
    """
    op = P if isinstance(P, RotaBaxterOperator) else RotaBaxterOperator(A, P, weight)
    lam = A.ring(weight)
    table = A.table
    pairs, total, sampled = basis_tuples(A.dim, 2, budget, seed)
    checked = 0
    for i, j in pairs:
        checked += 1
        pa, pb = op._cols[i], op._cols[j]
        lhs = table_product(table, pa, pb)
        inner = _table_right(table, i, pb)
        add_into(inner, A.ring.one, _table_left(table, pa, j))
        if lam:
            add_into(inner, lam, table[i][j])
        rhs = op.apply_sparse(inner)
        if lhs != rhs:
            return CheckResult(
                "rota-baxter", False, checked, total, sampled, seed if sampled else None,
                witness=(i, j), labels=(A.basis[i], A.basis[j]),
            )
    return CheckResult("rota-baxter", True, checked, total, sampled, seed if sampled else None)


def check_quasi_idempotent_operator(P, weight) -> CheckResult:
    """The matrix identity ``P^2 = -lam P``."""
    M = P.matrix if isinstance(P, RotaBaxterOperator) else P
    ok = M @ M == M.scale(-weight)
    return CheckResult("quasi-idempotent operator", ok, 1, 1)


def _verified(op: RotaBaxterOperator, budget, seed) -> RotaBaxterOperator:
    res = op.check(budget, seed)
    if not res:
        raise RotaBaxterError(
            f"Rota-Baxter identity fails at ({', '.join(res.labels)}) for weight "
            f"{op.algebra.ring.render(op.weight)}"
        )
    return op


def rb_from_element(A: FiniteDimAlgebra, xi: AlgebraElement, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> RotaBaxterOperator:
    """``P_xi(a) = xi a`` with its detected weight, verified on basis pairs."""
    lam = quasi_idempotent_weight(A, xi)
    return _verified(RotaBaxterOperator(A, A.left_mult_matrix(xi), lam, element=xi), budget, seed)


def identity_rb(A: FiniteDimAlgebra, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> RotaBaxterOperator:
    return _verified(RotaBaxterOperator(A, Matrix.identity(A.dim, A.ring), -A.ring.one), budget, seed)


def rescale(P: RotaBaxterOperator, mu) -> RotaBaxterOperator:
    """``mu P`` has weight ``mu lam`` (unverified; call :meth:`check`)."""
    A = P.algebra
    ring = common_ring(A.ring, ring_of(mu))
    if ring != A.ring:
        raise RotaBaxterError(f"scalar {mu} does not belong to {A.ring.name}")
    mu = A.ring(mu)
    elem = mu * P.element if P.element is not None else None
    return RotaBaxterOperator(A, P.matrix.scale(mu), mu * P.weight, element=elem)


# ---------------------------------------------------------------------------
# tridendriform and dendriform structures

TRIDENDRIFORM_AXIOMS = (
    "(x<y)<z = x<(y*z)",
    "(x>y)<z = x>(y<z)",
    "(x*y)>z = x>(y>z)",
    "(x>y).z = x>(y.z)",
    "(x<y).z = x.(y>z)",
    "(x.y)<z = x.(y<z)",
    "(x.y).z = x.(y.z)",
)

DENDRIFORM_AXIOMS = TRIDENDRIFORM_AXIOMS[:3]


def _empty_table(n: int) -> list[list[dict]]:
    return [[{} for _ in range(n)] for _ in range(n)]


def _sum_tables(n: int, *tables) -> list[list[dict]]:
    out = _empty_table(n)
    for t in tables:
        for i in range(n):
            for j in range(n):
                if t[i][j]:
                    add_into(out[i][j], 1, t[i][j])
    return out


def _scaled(c, vec: Mapping) -> dict:
    out: dict = {}
    add_into(out, c, vec)
    return out


class _ProductStructure:
    _products: tuple[str, ...] = ()

    def __init__(self, algebra: FiniteDimAlgebra, tables: dict, weight=None, element=None, lifted: bool = False):
        self.algebra = algebra
        self.tables = tables
        self.weight = weight
        self.element = element
        self.lifted = lifted

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def ring(self):
        return self.algebra.ring

    def product(self, which: str, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        t = self.tables[which]
        return self.algebra.from_sparse(table_product(t, a.sparse(), b.sparse()))

    def star_table(self) -> list[list[dict]]:
        return _sum_tables(self.dim, *(self.tables[k] for k in self._products))

    def structure_constants(self, which: str) -> dict[tuple[int, int], dict]:
        t = self.tables[which]
        n = self.dim
        return {(i, j): dict(t[i][j]) for i in range(n) for j in range(n) if t[i][j]}


class TridendriformStructure(_ProductStructure):
    """Three products ``<``, ``>``, ``.`` stored as ``dim x dim`` tables of sparse vectors."""

    _products = ("prec", "succ", "dot")

    @property
    def prec(self):
        return self.tables["prec"]

    @property
    def succ(self):
        return self.tables["succ"]

    @property
    def dot(self):
        return self.tables["dot"]

    def check(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
        return check_tridendriform(self, budget, seed)


class DendriformStructure(_ProductStructure):
    _products = ("prec", "succ")

    @property
    def prec(self):
        return self.tables["prec"]

    @property
    def succ(self):
        return self.tables["succ"]

    def check(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
        return check_dendriform(self, budget, seed)


def _axiom_sides(T: _ProductStructure, star):
    p, r = T.tables["prec"], T.tables["succ"]
    m = T.tables.get("dot")
    # each axiom: (outer product on the left side, inner table on the left side,
    #              outer product on the right side, inner table on the right side)
    sides = [
        (p, p, p, star),
        (p, r, r, p),
        (r, star, r, r),
    ]
    if m is not None:
        sides += [
            (m, r, r, m),
            (m, p, m, r),
            (p, m, m, p),
            (m, m, m, m),
        ]
    return sides


def _check_axioms(T: _ProductStructure, names, kind: str, budget, seed) -> list[CheckResult]:
    star = T.star_table()
    labels = T.algebra.basis
    results = []
    for num, ((lo, li, ro, ri), text) in enumerate(zip(_axiom_sides(T, star), names), start=1):
        tuples, total, sampled = basis_tuples(T.dim, 3, budget, seed)
        checked = 0
        failure = None
        for i, j, k in tuples:
            checked += 1
            if _table_left(lo, li[i][j], k) != _table_right(ro, i, ri[j][k]):
                failure = (i, j, k)
                break
        name = f"{kind} axiom {num}"
        s = seed if sampled else None
        if failure is None:
            results.append(CheckResult(name, True, checked, total, sampled, s, detail=text))
        else:
            results.append(CheckResult(
                name, False, checked, total, sampled, s,
                witness=failure, labels=tuple(labels[t] for t in failure), detail=text,
            ))
    return results


def check_tridendriform(T: TridendriformStructure, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
    """One verdict per axiom, numbered 1-7 in the standard display order.

    Each axiom is run over all basis triples (or a seeded sample above the
    sampling threshold) and stops at its first violating triple.
    """
    return _check_axioms(T, TRIDENDRIFORM_AXIOMS, "tridendriform", budget, seed)


def check_dendriform(T: DendriformStructure, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> list[CheckResult]:
    return _check_axioms(T, DENDRIFORM_AXIOMS, "dendriform", budget, seed)


def first_failure(results: list[CheckResult]) -> CheckResult | None:
    return next((r for r in results if not r), None)


def star_product(T: _ProductStructure) -> dict[tuple[int, int], dict]:
    """Structure constants of ``x * y``, the sum of all the structure's products."""
    star = T.star_table()
    n = T.dim
    return {(i, j): dict(star[i][j]) for i in range(n) for j in range(n) if star[i][j]}


def check_star_associativity(T: _ProductStructure, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
    return table_associativity(T.star_table(), T.dim, budget, seed, T.algebra.basis, name="star associativity")


def _require(results: list[CheckResult], what: str) -> None:
    bad = first_failure(results)
    if bad is not None:
        raise RotaBaxterError(f"{what}: {bad.name} ({bad.detail}) fails at ({', '.join(bad.labels)})")


def _lift(A: FiniteDimAlgebra, xi: AlgebraElement):
    field = A.ring.fraction_field()
    L = A.change_ring(field, field, name=A.name)
    return L, L.element([field(c) for c in xi.coeffs])


def derive_tridendriform(
    A: FiniteDimAlgebra,
    xi: AlgebraElement,
    weight=None,
    *,
    budget: int | None = DEFAULT_BUDGET,
    seed: int = 0,
    verify: bool = True,
) -> TridendriformStructure:
    """``a < b = lam^-1 a xi b``, ``a > b = lam^-1 xi a b``, ``a . b = a b``.

    When the weight is not a unit of a Laurent carrier, the algebra and
    ``xi`` are lifted to rational functions first and the result has
    ``lifted=True``.  All seven axioms are checked before returning.
    """
    lam = quasi_idempotent_weight(A, xi) if weight is None else A.ring(weight)
    if weight is not None and A.multiply(xi, xi) != (-lam) * xi:
        raise NotQuasiIdempotentError(f"xi^2 != -({A.ring.render(lam)}) xi")
    if not lam:
        raise RotaBaxterError("weight 0 has no tridendriform structure; use derive_dendriform")
    lifted = False
    if isinstance(lam, LaurentPoly) and not lam.is_unit():
        A, xi = _lift(A, xi)
        lam = A.ring(lam)
        lifted = True
    inv = invert(lam)
    n = A.dim
    table = A.table
    x = xi.sparse()
    prec, succ = _empty_table(n), _empty_table(n)
    for i in range(n):
        e_i_xi = _table_right(table, i, x)
        xi_e_i = _table_left(table, x, i)
        for j in range(n):
            prec[i][j] = _scaled(inv, _table_left(table, e_i_xi, j))
            succ[i][j] = _scaled(inv, _table_left(table, xi_e_i, j))
    dot = [[dict(table[i][j]) for j in range(n)] for i in range(n)]
    T = TridendriformStructure(A, {"prec": prec, "succ": succ, "dot": dot}, lam, xi, lifted)
    if verify:
        _require(check_tridendriform(T, budget, seed), "derived tridendriform structure")
    return T


def tridendriform_from_operator(P: RotaBaxterOperator, *, budget: int | None = DEFAULT_BUDGET, seed: int = 0, verify: bool = True) -> TridendriformStructure:
    """``a < b = a P(b)``, ``a > b = P(a) b``, ``a . b = lam a b`` for an RB operator of weight lam."""
    A, lam = P.algebra, P.weight
    n = A.dim
    table = A.table
    prec, succ, dot = _empty_table(n), _empty_table(n), _empty_table(n)
    for i in range(n):
        for j in range(n):
            prec[i][j] = _table_right(table, i, P._cols[j])
            succ[i][j] = _table_left(table, P._cols[i], j)
            dot[i][j] = _scaled(lam, table[i][j]) if lam else {}
    T = TridendriformStructure(A, {"prec": prec, "succ": succ, "dot": dot}, lam, P.element)
    if verify:
        _require(check_tridendriform(T, budget, seed), "operator tridendriform structure")
    return T


def derive_dendriform(
    A: FiniteDimAlgebra,
    P: RotaBaxterOperator,
    *,
    budget: int | None = DEFAULT_BUDGET,
    seed: int = 0,
    verify: bool = True,
) -> DendriformStructure:
    """``a < b = a P(b)`` and ``a > b = P(a) b`` for a weight-0 operator."""
    if P.weight:
        raise RotaBaxterError(f"dendriform structures need weight 0, got {A.ring.render(P.weight)}")
    n = A.dim
    table = A.table
    prec, succ = _empty_table(n), _empty_table(n)
    for i in range(n):
        for j in range(n):
            prec[i][j] = _table_right(table, i, P._cols[j])
            succ[i][j] = _table_left(table, P._cols[i], j)
    D = DendriformStructure(A, {"prec": prec, "succ": succ}, P.weight, P.element)
    if verify:
        _require(check_dendriform(D, budget, seed), "derived dendriform structure")
    return D


# ---------------------------------------------------------------------------
# JSON exchange: "matrix" lists columns, so matrix[j] = coordinates of P(e_j)


def operator_to_json(P: RotaBaxterOperator) -> dict:
    ring = P.algebra.ring
    return {
        "dim": P.dim,
        "weight": ring.to_json(P.weight),
        "matrix": [[ring.to_json(c) for c in P.matrix.column(j)] for j in range(P.dim)],
    }


def operator_from_json(A: FiniteDimAlgebra, obj: Mapping) -> RotaBaxterOperator:
    ring = A.ring
    if obj.get("dim") != A.dim:
        raise RotaBaxterError(f"operator dimension {obj.get('dim')} does not match the algebra ({A.dim})")
    cols = obj["matrix"]
    if len(cols) != A.dim or any(len(c) != A.dim for c in cols):
        raise RotaBaxterError("operator matrix must list dim columns of dim entries")
    M = Matrix.from_columns([[ring.from_json(c) for c in col] for col in cols], ring, A.dim)
    return RotaBaxterOperator(A, M, ring.from_json(obj["weight"]))
