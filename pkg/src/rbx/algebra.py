"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from .checks import DEFAULT_BUDGET, CheckResult, basis_tuples
from .linalg import Matrix, column_vector
from .scalars import QQ, ScalarParseError, ScalarRing, ring_of

__all__ = [
    "AlgebraElement",
    "AlgebraError",
    "ElementParseError",
    "FiniteDimAlgebra",
    "add_into",
    "check_associativity",
    "check_unit",
    "left_mult_matrix",
    "multiply",
    "parse_element",
    "power",
    "table_product",
]


class AlgebraError(ValueError):
    pass


class ElementParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


# ---------------------------------------------------------------------------
# sparse vector helpers: dict index -> nonzero scalar


def add_into(acc: dict, c, vec: Mapping) -> None:
    """``acc += c * vec`` in place, dropping entries that cancel."""
    for k, x in vec.items():
        y = acc.get(k)
        y = c * x if y is None else y + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def table_product(table, u: Mapping, v: Mapping) -> dict:
    """Bilinear extension of a ``dim x dim`` table of sparse products."""
    out: dict = {}
    for i, a in u.items():
        row = table[i]
        for j, b in v.items():
            prod = row[j]
            if prod:
                add_into(out, a * b, prod)
    return out


def _table_left(table, vec: Mapping, k: int) -> dict:
    out: dict = {}
    for m, c in vec.items():
        prod = table[m][k]
        if prod:
            add_into(out, c, prod)
    return out


def _table_right(table, i: int, vec: Mapping) -> dict:
    out: dict = {}
    row = table[i]
    for m, c in vec.items():
        prod = row[m]
        if prod:
            add_into(out, c, prod)
    return out


def table_associativity(table, dim: int, budget=DEFAULT_BUDGET, seed: int = 0, labels=None, name="associativity") -> CheckResult:
    """Check ``(e_i e_j) e_k == e_i (e_j e_k)`` for a product table."""
    tuples, total, sampled = basis_tuples(dim, 3, budget, seed)
    checked = 0
    for i, j, k in tuples:
        checked += 1
        lhs = _table_left(table, table[i][j], k)
        rhs = _table_right(table, i, table[j][k])
        if lhs != rhs:
            return CheckResult(
                name, False, checked, total, sampled, seed if sampled else None,
                witness=(i, j, k),
                labels=tuple(labels[t] for t in (i, j, k)) if labels else None,
            )
    return CheckResult(name, True, checked, total, sampled, seed if sampled else None)


# ---------------------------------------------------------------------------


class FiniteDimAlgebra:
    """An associative algebra with a named basis and sparse structure constants.

    ``mult`` maps index pairs ``(i, j)`` to ``{k: c}`` meaning
    ``e_i e_j = sum_k c e_k``; missing pairs are zero products.  The unit is
    given as a coefficient sequence or sparse mapping.  Construction only
    validates shapes and rings; use :meth:`check_associativity` and
    :meth:`check_unit` to certify the data.
    """

    def __init__(
        self,
        basis: Sequence[str],
        mult: Mapping[tuple[int, int], Mapping[int, object]],
        unit,
        ring: ScalarRing = QQ,
        name: str = "",
        named_elements: Mapping[str, object] | None = None,
    ):
        basis = tuple(basis)
        if not basis:
            raise AlgebraError("an algebra needs at least one basis element")
        if len(set(basis)) != len(basis):
            raise AlgebraError("basis labels must be distinct")
        if any(not isinstance(b, str) or not b for b in basis):
            raise AlgebraError("basis labels must be non-empty strings")
        n = len(basis)
        self.basis = basis
        self.dim = n
        self.ring = ring
        self.name = name
        self._index = {b: i for i, b in enumerate(basis)}
        empty: dict = {}
        table = [[empty] * n for _ in range(n)]
        for (i, j), terms in mult.items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"structure constant index ({i}, {j}) out of range")
            clean = {}
            for k, c in terms.items():
                if not 0 <= k < n:
                    raise AlgebraError(f"structure constant target {k} out of range")
                c = ring(c)
                if c:
                    clean[k] = c
            table[i][j] = clean
        self._table = table
        self._unit = self._coerce_coeffs(unit)
        self._named: dict[str, AlgebraElement] = {}
        for label, value in (named_elements or {}).items():
            self._named[label] = value if isinstance(value, AlgebraElement) else self.element(value)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_labels(cls, basis, products: Mapping[tuple[str, str], Mapping[str, object]], unit, ring=QQ, **kw) -> FiniteDimAlgebra:
        idx = {b: i for i, b in enumerate(basis)}
        mult = {
            (idx[a], idx[b]): {idx[k]: c for k, c in terms.items()}
            for (a, b), terms in products.items()
        }
        if isinstance(unit, str):
            unit = {idx[unit]: 1}
        elif isinstance(unit, Mapping):
            unit = {idx[k] if isinstance(k, str) else k: c for k, c in unit.items()}
        return cls(basis, mult, unit, ring, **kw)

    def _coerce_coeffs(self, coeffs) -> tuple:
        ring = self.ring
        out = [ring.zero] * self.dim
        if isinstance(coeffs, AlgebraElement):
            coeffs = coeffs.coeffs
        if isinstance(coeffs, Mapping):
            for k, c in coeffs.items():
                i = self.index(k) if isinstance(k, str) else k
                if not 0 <= i < self.dim:
                    raise AlgebraError(f"coefficient index {i} out of range")
                out[i] = ring(c)
        else:
            coeffs = list(coeffs)
            if len(coeffs) != self.dim:
                raise AlgebraError(f"expected {self.dim} coefficients, got {len(coeffs)}")
            out = [ring(c) for c in coeffs]
        return tuple(out)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise AlgebraError(f"unknown basis label {label!r}") from None

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, self._coerce_coeffs(coeffs))

    def basis_element(self, i) -> AlgebraElement:
        if isinstance(i, str):
            i = self.index(i)
        z, o = self.ring.zero, self.ring.one
        return AlgebraElement(self, tuple(o if k == i else z for k in range(self.dim)))

    def gens(self) -> list[AlgebraElement]:
        return [self.basis_element(i) for i in range(self.dim)]

    @property
    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, (self.ring.zero,) * self.dim)

    @property
    def unit(self) -> AlgebraElement:
        return AlgebraElement(self, self._unit)

    @property
    def named_elements(self) -> dict[str, AlgebraElement]:
        return dict(self._named)

    def with_unit(self, unit) -> FiniteDimAlgebra:
        """Same structure constants, different claimed unit."""
        return FiniteDimAlgebra(self.basis, self.structure_constants(), unit, self.ring, self.name)

    def structure_constants(self) -> dict[tuple[int, int], dict[int, object]]:
        return {
            (i, j): dict(self._table[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
            if self._table[i][j]
        }

    @property
    def table(self):
        """Read-only ``dim x dim`` nested list of sparse products (do not mutate)."""
        return self._table

    def product_of_basis(self, i: int, j: int) -> dict:
        return dict(self._table[i][j])

    def change_ring(self, fn, ring: ScalarRing, name: str | None = None) -> FiniteDimAlgebra:
        """Map every scalar through ``fn`` into ``ring`` (embedding or specialization)."""
        mult = {
            key: {k: fn(c) for k, c in terms.items()}
            for key, terms in self.structure_constants().items()
        }
        unit = [fn(c) for c in self._unit]
        named = {k: [fn(c) for c in e.coeffs] for k, e in self._named.items()}
        return FiniteDimAlgebra(self.basis, mult, unit, ring, name or self.name, named)

    # -- arithmetic ----------------------------------------------------------

    def mul_sparse(self, u: Mapping, v: Mapping) -> dict:
        return table_product(self._table, u, v)

    def from_sparse(self, vec: Mapping) -> AlgebraElement:
        z = self.ring.zero
        ring = self.ring
        return AlgebraElement(self, tuple(ring(vec[k]) if k in vec else z for k in range(self.dim)))

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        self._own(a)
        self._own(b)
        return self.from_sparse(self.mul_sparse(a.sparse(), b.sparse()))

    def power(self, a: AlgebraElement, n: int) -> AlgebraElement:
        if n < 0:
            raise ValueError("negative powers are not defined")
        self._own(a)
        result = self.unit
        for _ in range(n):
            result = self.multiply(result, a)
        return result

    def _own(self, a: AlgebraElement) -> None:
        if not isinstance(a, AlgebraElement):
            raise TypeError(f"expected an AlgebraElement, got {type(a).__name__}")
        if a.algebra is not self and (a.algebra.basis != self.basis or a.algebra.ring != self.ring):
            raise AlgebraError("element belongs to a different algebra")

    def left_mult_matrix(self, a: AlgebraElement) -> Matrix:
        """Matrix of ``b -> a b``; column j holds the coordinates of ``a e_j``."""
        self._own(a)
        u = a.sparse()
        cols = []
        for j in range(self.dim):
            cols.append(self._column(_table_left(self._table, u, j)))
        return Matrix.from_columns(cols, self.ring, self.dim)

    def right_mult_matrix(self, a: AlgebraElement) -> Matrix:
        """Matrix of ``b -> b a``."""
        self._own(a)
        u = a.sparse()
        cols = [self._column(_table_right(self._table, j, u)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.ring, self.dim)

    def _column(self, vec: Mapping) -> list:
        z = self.ring.zero
        return [vec.get(k, z) for k in range(self.dim)]

    # -- checks --------------------------------------------------------------

    def check_associativity(self, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
        """``(e_i e_j) e_k == e_i (e_j e_k)`` over basis triples (bilinearity makes this sufficient)."""
        return table_associativity(self._table, self.dim, budget, seed, self.basis)

    def check_unit(self) -> CheckResult:
        u = {k: c for k, c in enumerate(self._unit) if c}
        for i in range(self.dim):
            e = {i: self.ring.one}
            if self.mul_sparse(u, e) != e or self.mul_sparse(e, u) != e:
                return CheckResult("unit", False, i + 1, self.dim, witness=(i,), labels=(self.basis[i],))
        return CheckResult("unit", True, self.dim, self.dim)

    # -- text ----------------------------------------------------------------

    def parse_element(self, text: str) -> AlgebraElement:
        return _ElementParser(self, text).parse()

    def render(self, a: AlgebraElement) -> str:
        return render_element(a)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteDimAlgebra{label} dim={self.dim} over {self.ring.name}>"


class AlgebraElement:
    """A coefficient vector over the basis of a :class:`FiniteDimAlgebra`."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: FiniteDimAlgebra, coeffs: tuple):
        self.algebra = algebra
        self.coeffs = coeffs

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    @property
    def vector(self) -> Matrix:
        return column_vector(self.coeffs, self.algebra.ring)

    def __getitem__(self, key):
        if isinstance(key, str):
            key = self.algebra.index(key)
        return self.coeffs[key]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _same(self, other) -> bool:
        return isinstance(other, AlgebraElement) and (
            other.algebra is self.algebra or other.algebra.basis == self.algebra.basis
        )

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        ring = self.algebra.ring
        return AlgebraElement(self.algebra, tuple(ring(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        ring = self.algebra.ring
        return AlgebraElement(self.algebra, tuple(ring(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        try:
            ring_of(other)
        except TypeError:
            return NotImplemented
        ring = self.algebra.ring
        return AlgebraElement(self.algebra, tuple(ring(other * a) for a in self.coeffs))

    def __rmul__(self, other):
        try:
            ring_of(other)
        except TypeError:
            return NotImplemented
        ring = self.algebra.ring
        return AlgebraElement(self.algebra, tuple(ring(other * a) for a in self.coeffs))

    def __pow__(self, n: int):
        return self.algebra.power(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.algebra.basis == other.algebra.basis and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.algebra.basis, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({render_element(self)})"


# module-level spellings of the core operations


def multiply(A: FiniteDimAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return A.multiply(a, b)


def power(A: FiniteDimAlgebra, a: AlgebraElement, n: int) -> AlgebraElement:
    return A.power(a, n)


def left_mult_matrix(A: FiniteDimAlgebra, a: AlgebraElement) -> Matrix:
    return A.left_mult_matrix(a)


def check_associativity(A: FiniteDimAlgebra, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> CheckResult:
    return A.check_associativity(budget, seed)


def check_unit(A: FiniteDimAlgebra) -> CheckResult:
    return A.check_unit()


def parse_element(A: FiniteDimAlgebra, text: str) -> AlgebraElement:
    return A.parse_element(text)


# ---------------------------------------------------------------------------
# rendering and parsing of element expressions

_RATIONAL_WORD = re.compile(r"\d+(?:/\d+)?\Z")


def render_scalar(c, ring: ScalarRing) -> str:
    """Coefficient text usable in an element expression."""
    try:
        r = QQ(c)
    except TypeError:
        return f"({ring.render(c)})"
    return QQ.render(r)


def render_element(a: AlgebraElement) -> str:
    """``"2*1 + 2*x"``-style rendering: every term carries an explicit coefficient."""
    ring = a.algebra.ring
    parts: list[str] = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        label = a.algebra.basis[i]
        try:
            r = QQ(c)
        except TypeError:
            text = f"({ring.render(c)})*{label}"
            parts.append(text if not parts else f" + {text}")
            continue
        sign = "-" if r < 0 else "+"
        text = f"{QQ.render(abs(r))}*{label}"
        if not parts:
            parts.append(text if sign == "+" else f"-{text}")
        else:
            parts.append(f" {sign} {text}")
    return "".join(parts) or "0"


class _ElementParser:
    # expr := term (('+'|'-') term)* ; term := factor ('*' factor)*
    # factor := rational | '(' scalar-expression ')' | label
    def __init__(self, algebra: FiniteDimAlgebra, text: str):
        self.A = algebra
        self.text = text
        self.tokens = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str, int]]:
        tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            ch = text[pos]
            if ch.isspace():
                pos += 1
            elif ch in "+-*":
                tokens.append(("op", ch, pos))
                pos += 1
            elif ch == "(":
                depth, start = 0, pos
                while pos < n:
                    if text[pos] == "(":
                        depth += 1
                    elif text[pos] == ")":
                        depth -= 1
                        if depth == 0:
                            break
                    pos += 1
                if pos >= n:
                    raise ElementParseError("unbalanced '('", start)
                tokens.append(("paren", text[start + 1 : pos], start))
                pos += 1
            elif ch == ")":
                raise ElementParseError("unbalanced ')'", pos)
            else:
                start = pos
                while pos < n and not text[pos].isspace() and text[pos] not in "+-*()":
                    pos += 1
                tokens.append(("word", text[start:pos], start))
        return tokens

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def parse(self) -> AlgebraElement:
        if not self.tokens:
            raise ElementParseError("empty element expression", 0)
        total = self.A.zero
        sign = 1
        while True:
            kind, tok, pos = self._peek()
            if kind == "op" and tok in "+-":
                self.i += 1
                if tok == "-":
                    sign = -sign
                continue
            if kind == "end":
                raise ElementParseError("expected a term", pos)
            term = self._term()
            total = total + (term if sign > 0 else -term)
            sign = 1
            kind, tok, pos = self._peek()
            if kind == "end":
                return total
            if kind != "op" or tok not in "+-":
                raise ElementParseError(f"expected '+' or '-', found {tok!r}", pos)

    def _term(self) -> AlgebraElement:
        factors = [self._factor_token()]
        while self._peek()[:2] == ("op", "*"):
            self.i += 1
            factors.append(self._factor_token())
        ring = self.A.ring
        scalar = ring.one
        element: AlgebraElement | None = None
        for idx, (kind, tok, pos) in enumerate(factors):
            last = idx == len(factors) - 1
            if kind == "paren":
                try:
                    scalar = scalar * ring.parse(tok)
                except (ScalarParseError, TypeError, ArithmeticError) as exc:
                    raise ElementParseError(f"malformed scalar literal ({tok}): {exc}", pos) from exc
                continue
            is_label = tok in self.A._index or tok in self.A._named
            if _RATIONAL_WORD.match(tok) and not (is_label and last):
                num, _, den = tok.partition("/")
                if den and int(den) == 0:
                    raise ElementParseError("zero denominator", pos)
                scalar = scalar * Fraction(int(num), int(den) if den else 1)
                continue
            if tok in self.A._named:
                value = self.A._named[tok]
            elif tok in self.A._index:
                value = self.A.basis_element(tok)
            else:
                raise ElementParseError(f"unknown basis label {tok!r}", pos)
            element = value if element is None else element * value
        if element is None:
            element = self.A.unit
        return scalar * element

    def _factor_token(self):
        kind, tok, pos = self._peek()
        if kind not in ("word", "paren"):
            raise ElementParseError(f"expected a coefficient or basis label, found {tok!r}" if tok else "unexpected end of expression", pos)
        self.i += 1
        return kind, tok, pos
