"""Exact coefficient rings.

Four rings are supported, all exact:

* ``QQ``: the rationals, with values represented by :class:`fractions.Fraction`
  (plain ``int`` is accepted wherever a rational is expected);
* ``cyclotomic_field(d)``: Q(zeta_d), values are :class:`CyclotomicNumber`
  in the power basis modulo the d-th cyclotomic polynomial;
* ``LaurentRing(var)``: Laurent polynomials with rational coefficients,
  values are :class:`LaurentPoly`;
* ``RationalFunctionField(var)``: its fraction field, values are
  :class:`RationalFunction`.

Values of different rings never mix silently.  The only implicit
embeddings are rational -> any ring and Laurent -> rational functions
(with the same variable name); everything else raises
:class:`RingMismatchError`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from . import _poly

__all__ = [
    "QQ",
    "CyclotomicNumber",
    "CyclotomicField",
    "LaurentPoly",
    "LaurentRing",
    "NotInvertibleError",
    "RationalField",
    "RationalFunction",
    "RationalFunctionField",
    "RingMismatchError",
    "ScalarParseError",
    "ScalarRing",
    "common_ring",
    "cyclotomic_field",
    "cyclotomic_reduce",
    "embed",
    "invert",
    "is_zero",
    "ring_from_spec",
    "ring_of",
    "specialize",
    "zeta",
]


class RingMismatchError(TypeError):
    """Arithmetic was attempted between values of incompatible rings."""


class NotInvertibleError(ArithmeticError):
    """The value has no inverse in its ring."""


class ScalarParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _is_rational(x) -> bool:
    t = type(x)
    if t is Fraction or t is int:
        return True
    return isinstance(x, _RationalABC) and t is not bool


def _frac_json(c: Fraction) -> list[int]:
    c = Fraction(c)
    return [c.numerator, c.denominator]


def _frac_from_json(obj) -> Fraction:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if (
        isinstance(obj, list)
        and len(obj) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) for v in obj)
    ):
        if obj[1] == 0:
            raise ScalarParseError("zero denominator in rational literal")
        return Fraction(obj[0], obj[1])
    raise ScalarParseError(f"malformed rational literal {obj!r}")


def _render_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_terms(terms: list[tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs; an empty monomial means 1."""
    if not terms:
        return "0"
    parts = []
    for idx, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _render_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_render_rational(a)}*{mono}"
        if idx == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def _power_name(var: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


# ---------------------------------------------------------------------------
# cyclotomic numbers
#
# Elements are stored as integer numerators over one positive common
# denominator, reduced so that gcd(numerators, denominator) = 1.  Integer
# arithmetic keeps the quantum-group tables fast; ``coeffs`` exposes the
# rational coordinates.


@lru_cache(maxsize=None)
def _cyclo_data(d: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Degree phi(d) and the reduced power-basis vector of zeta^k for 0 <= k < d.

    Phi_d is monic with integer coefficients, so every reduced power of zeta
    has integer coordinates.
    """
    phi = [int(c) for c in _poly.cyclotomic_polynomial(d)]
    n = len(phi) - 1
    powers = []
    vec = [0] * n
    vec[0] = 1
    for _ in range(d):
        powers.append(tuple(vec))
        # multiply by zeta: shift up, then fold the top term using Phi (monic)
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(n):
                vec[i] -= top * phi[i]
    return n, tuple(powers)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def cyclotomic_reduce(d: int, terms) -> CyclotomicNumber:
    """Reduce ``sum c_k zeta_d^k`` to the power basis.

    ``terms`` is a mapping exponent -> rational coefficient, or a sequence
    of coefficients indexed by exponent.  Exponents may be negative or
    exceed ``d``; zeta_d^d is 1.
    """
    if d < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {d}")
    n, powers = _cyclo_data(d)
    items = [(k, Fraction(c)) for k, c in (terms.items() if hasattr(terms, "items") else enumerate(terms)) if c]
    den = 1
    for _, c in items:
        den = _lcm(den, c.denominator)
    out = [0] * n
    for k, c in items:
        m = c.numerator * (den // c.denominator)
        for i, x in enumerate(powers[k % d]):
            if x:
                out[i] += m * x
    return CyclotomicNumber._make(d, out, den)


class CyclotomicNumber:
    """An element of Q(zeta_d) in the reduced power basis."""

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, coeffs):
        reduced = cyclotomic_reduce(order, list(coeffs))
        self.order = order
        self._num = reduced._num
        self._den = reduced._den

    @classmethod
    def _make(cls, order: int, num, den: int) -> CyclotomicNumber:
        g = gcd(den, *num)
        if g != 1:
            num = [a // g for a in num]
            den //= g
        obj = object.__new__(cls)
        obj.order = order
        obj._num = tuple(num)
        obj._den = den
        return obj

    @classmethod
    def _rational(cls, order: int, c) -> CyclotomicNumber:
        c = Fraction(c)
        n = _cyclo_data(order)[0]
        return cls._make(order, [c.numerator] + [0] * (n - 1), c.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        den = self._den
        return tuple(Fraction(a, den) for a in self._num)

    @property
    def ring(self) -> CyclotomicField:
        return cyclotomic_field(self.order)

    def _coerce(self, other) -> CyclotomicNumber | None:
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise RingMismatchError(
                    f"cannot combine Q(zeta_{self.order}) with Q(zeta_{other.order})"
                )
            return other
        if _is_rational(other):
            return CyclotomicNumber._rational(self.order, other)
        if isinstance(other, (LaurentPoly, RationalFunction)):
            raise RingMismatchError(
                f"cannot combine Q(zeta_{self.order}) with {type(other).__name__}"
            )
        return None

    def _combine(self, o: CyclotomicNumber, sign: int) -> CyclotomicNumber:
        da, db = self._den, o._den
        if da == db:
            return CyclotomicNumber._make(self.order, [a + sign * b for a, b in zip(self._num, o._num)], da)
        return CyclotomicNumber._make(
            self.order, [a * db + sign * b * da for a, b in zip(self._num, o._num)], da * db
        )

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._combine(o, 1)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(CyclotomicNumber)
        obj.order, obj._num, obj._den = self.order, tuple(-a for a in self._num), self._den
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._combine(o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o._combine(self, -1)

    def __mul__(self, other):
        if _is_rational(other):
            c = Fraction(other)
            return CyclotomicNumber._make(self.order, [c.numerator * a for a in self._num], c.denominator * self._den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.order
        n, powers = _cyclo_data(d)
        acc = [0] * (2 * n)
        b_items = [(j, b) for j, b in enumerate(o._num) if b]
        for i, a in enumerate(self._num):
            if a:
                for j, b in b_items:
                    acc[i + j] += a * b
        out = acc[:n]
        for k in range(n, 2 * n - 1):
            c = acc[k]
            if c:
                for i, x in enumerate(powers[k % d]):
                    if x:
                        out[i] += c * x
        return CyclotomicNumber._make(d, out, self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        phi = _poly.cyclotomic_polynomial(self.order)
        g, s, _ = _poly.xgcd(_poly.trim(self.coeffs), phi)
        # Phi_d is irreducible, so any nonzero reduced element is coprime to it
        assert g == _poly.ONE
        return cyclotomic_reduce(self.order, s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = self.ring.one
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return any(self._num)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.order == other.order and self._num == other._num and self._den == other._den
        if _is_rational(other):
            return not any(self._num[1:]) and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self._num[1:]):
            return hash(Fraction(self._num[0], self._den))
        return hash(("cyc", self.order, self._num, self._den))

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.order}, {self})"

    def __str__(self) -> str:
        var = f"z{self.order}"
        return _render_terms(
            [(c, _power_name(var, k)) for k, c in enumerate(self.coeffs) if c]
        )


def zeta(d: int) -> CyclotomicNumber:
    """The primitive root zeta_d as an element of Q(zeta_d)."""
    return cyclotomic_reduce(d, {1: 1})


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """A Laurent polynomial in one variable with rational coefficients."""

    __slots__ = ("var", "_terms", "_key")

    def __init__(self, terms=None, var: str = "v"):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                if c:
                    clean[int(k)] = Fraction(c)
        self.var = var
        self._terms = clean
        self._key = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "v") -> LaurentPoly:
        return cls({k: c}, var)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def ring(self) -> LaurentRing:
        return LaurentRing(self.var)

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise RingMismatchError(
                    f"Laurent variables differ: {self.var!r} vs {other.var!r}"
                )
            return other
        if _is_rational(other):
            return LaurentPoly({0: other}, self.var)
        if isinstance(other, CyclotomicNumber):
            raise RingMismatchError("cannot combine a Laurent polynomial with a cyclotomic number")
        return None  # RationalFunction handles the embedding on its side

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in o._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def inverse(self) -> LaurentPoly:
        if not self._terms:
            raise ZeroDivisionError("inverse of the zero Laurent polynomial")
        if len(self._terms) != 1:
            raise NotInvertibleError(
                f"{self} is not a unit in the Laurent ring; lift to rational functions"
            )
        ((k, c),) = self._terms.items()
        return LaurentPoly({-k: 1 / c}, self.var)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = LaurentPoly({0: 1}, self.var)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.var == other.var and self._key == other._key
        if _is_rational(other):
            if not other:
                return not self._terms
            return self._key == ((0, Fraction(other)),)
        return NotImplemented

    def __hash__(self) -> int:
        if not self._terms:
            return hash(0)
        if len(self._key) == 1 and self._key[0][0] == 0:
            return hash(self._key[0][1])
        return hash(("lau", self.var, self._key))

    def valuation(self) -> int:
        return min(self._terms) if self._terms else 0

    def degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def specialize(self, t) -> Fraction:
        return specialize(self, t)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return _render_terms(
            [(self._terms[k], _power_name(self.var, k)) for k in sorted(self._terms, reverse=True)]
        )


# ---------------------------------------------------------------------------
# rational functions


@lru_cache(maxsize=65536)
def _lowest_terms(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    # the same few denominators recur constantly in table computations
    g = _poly.gcd(num, den)
    if len(g) > 1:
        num = _poly.divmod_(num, g)[0]
        den = _poly.divmod_(den, g)[0]
    lead = den[-1]
    if lead != 1:
        num = _poly.scale(1 / lead, num)
        den = _poly.scale(1 / lead, den)
    return num, den


class RationalFunction:
    """A quotient of polynomials in one variable, kept in lowest terms.

    The denominator is monic and coprime to the numerator, so equality is
    structural.
    """

    __slots__ = ("var", "num", "den")

    def __init__(self, num, den=_poly.ONE, var: str = "v"):
        num = _poly.trim(num)
        den = _poly.trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = _poly.ONE
        elif len(den) == 1 or not any(den[:-1]):
            # constant or monomial denominator: only a power of v can cancel
            shift = min(len(den) - 1, next(k for k, c in enumerate(num) if c))
            num, den = num[shift:], den[shift:]
            lead = den[-1]
            if lead != 1:
                num = _poly.scale(1 / lead, num)
                den = _poly.ONE if len(den) == 1 else den[:-1] + (Fraction(1),)
        else:
            num, den = _lowest_terms(num, den)
        self.var = var
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num, den, var):
        obj = object.__new__(cls)
        obj.var = var
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RationalFunction:
        if not p:
            return cls._raw(_poly.ZERO, _poly.ONE, p.var)
        low = min(0, p.valuation())
        num = [Fraction(0)] * (p.degree() - low + 1)
        for k, c in p.terms.items():
            num[k - low] = c
        den = [Fraction(0)] * (-low) + [Fraction(1)]
        return cls(num, den, p.var)

    @property
    def ring(self) -> RationalFunctionField:
        return RationalFunctionField(self.var)

    def _coerce(self, other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            if other.var != self.var:
                raise RingMismatchError(
                    f"rational-function variables differ: {self.var!r} vs {other.var!r}"
                )
            return other
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise RingMismatchError(
                    f"variables differ: {self.var!r} vs {other.var!r}"
                )
            return RationalFunction.from_laurent(other)
        if _is_rational(other):
            c = Fraction(other)
            return RationalFunction._raw((c,) if c else _poly.ZERO, _poly.ONE, self.var)
        if isinstance(other, CyclotomicNumber):
            raise RingMismatchError("cannot combine a rational function with a cyclotomic number")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(_poly.add(self.num, o.num), self.den, self.var)
        num = _poly.add(_poly.mul(self.num, o.den), _poly.mul(o.num, self.den))
        return RationalFunction(num, _poly.mul(self.den, o.den), self.var)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(_poly.neg(self.num), self.den, self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RationalFunction._raw(_poly.ZERO, _poly.ONE, self.var)
        return RationalFunction(
            _poly.mul(self.num, o.num), _poly.mul(self.den, o.den), self.var
        )

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, self.num, self.var)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = RationalFunction._raw((Fraction(1),), _poly.ONE, self.var)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.var == other.var and self.num == other.num and self.den == other.den
        if isinstance(other, LaurentPoly):
            return other.var == self.var and self == RationalFunction.from_laurent(other)
        if _is_rational(other):
            if not other:
                return not self.num
            return self.den == _poly.ONE and self.num == (Fraction(other),)
        return NotImplemented

    def __hash__(self) -> int:
        if self.den == _poly.ONE and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash(("rf", self.var, self.num, self.den))

    def to_laurent(self) -> LaurentPoly | None:
        """The equal Laurent polynomial, or None when the denominator is not a monomial."""
        if any(self.den[:-1]):
            return None
        shift = len(self.den) - 1
        return LaurentPoly({k - shift: c for k, c in enumerate(self.num) if c}, self.var)

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        num = _render_poly(self.num, self.var)
        if self.den == _poly.ONE:
            return num
        return f"({num})/({_render_poly(self.den, self.var)})"


def _render_poly(p, var: str) -> str:
    return _render_terms([(p[k], _power_name(var, k)) for k in range(len(p) - 1, -1, -1) if p[k]])


# ---------------------------------------------------------------------------
# rings


class ScalarRing:
    """Uniform interface over the four coefficient rings."""

    tag: str = ""
    is_field: bool = True

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def __call__(self, x):
        """Coerce ``x`` into this ring (rationals embed everywhere)."""
        raise NotImplementedError

    def contains(self, x) -> bool:
        try:
            return ring_of(x) == self
        except TypeError:
            return False

    def spec(self) -> dict:
        raise NotImplementedError

    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, obj):
        return self(_scalar_from_json(obj))

    def render(self, x) -> str:
        return str(self(x))

    def parse(self, text: str):
        """Evaluate a scalar expression such as ``"v + v^-1"`` or ``"-1/3"``."""
        return _ScalarParser(self, text).parse()

    def generator_name(self) -> str | None:
        return None

    def generator(self):
        raise ScalarParseError(f"{self} has no generator")

    def __repr__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        raise NotImplementedError


class RationalField(ScalarRing):
    tag = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __call__(self, x):
        if _is_rational(x):
            return Fraction(x)
        if isinstance(x, CyclotomicNumber) and x.is_rational():
            return x.coeffs[0]
        if isinstance(x, LaurentPoly) and (not x or x.terms.keys() == {0}):
            return x.terms.get(0, Fraction(0))
        if isinstance(x, RationalFunction) and x.den == _poly.ONE and len(x.num) <= 1:
            return x.num[0] if x.num else Fraction(0)
        raise RingMismatchError(f"{x!r} is not a rational number")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def spec(self) -> dict:
        return {"type": "rational"}

    def to_json(self, x):
        return {"rat": _frac_json(self(x))}

    def render(self, x) -> str:
        return _render_rational(self(x))

    @property
    def name(self) -> str:
        return "QQ"


QQ = RationalField()


class CyclotomicField(ScalarRing):
    tag = "cyclotomic"

    def __init__(self, d: int):
        if d < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {d}")
        self.d = d
        self.degree = _cyclo_data(d)[0]

    @property
    def zero(self):
        return CyclotomicNumber._make(self.d, [0] * self.degree, 1)

    @property
    def one(self):
        return CyclotomicNumber._make(self.d, [1] + [0] * (self.degree - 1), 1)

    def __call__(self, x):
        if isinstance(x, CyclotomicNumber):
            if x.order != self.d:
                raise RingMismatchError(f"Q(zeta_{x.order}) is not Q(zeta_{self.d})")
            return x
        if _is_rational(x):
            return CyclotomicNumber._rational(self.d, x)
        raise RingMismatchError(f"{x!r} does not embed in Q(zeta_{self.d})")

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.d == self.d

    def __hash__(self):
        return hash(("cyclotomic", self.d))

    def spec(self) -> dict:
        return {"type": "cyclotomic", "d": self.d}

    def to_json(self, x):
        x = self(x)
        return {"cyc": {"d": self.d, "coeffs": [_frac_json(c) for c in x.coeffs]}}

    def generator_name(self) -> str:
        return f"z{self.d}"

    def generator(self):
        return zeta(self.d)

    @property
    def name(self) -> str:
        return f"Q(zeta_{self.d})"


@lru_cache(maxsize=None)
def cyclotomic_field(d: int) -> CyclotomicField:
    return CyclotomicField(d)


class LaurentRing(ScalarRing):
    tag = "laurent"
    is_field = False

    def __init__(self, var: str = "v"):
        self.var = var

    @property
    def zero(self):
        return LaurentPoly({}, self.var)

    @property
    def one(self):
        return LaurentPoly({0: 1}, self.var)

    def __call__(self, x):
        if isinstance(x, LaurentPoly):
            if x.var != self.var:
                raise RingMismatchError(f"variable {x.var!r} is not {self.var!r}")
            return x
        if _is_rational(x):
            return LaurentPoly({0: x}, self.var)
        if isinstance(x, RationalFunction):
            lp = x.to_laurent()
            if lp is not None and x.var == self.var:
                return lp
        raise RingMismatchError(f"{x!r} is not a Laurent polynomial in {self.var}")

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and other.var == self.var

    def __hash__(self):
        return hash(("laurent", self.var))

    def spec(self) -> dict:
        return {"type": "laurent", "var": self.var}

    def to_json(self, x):
        x = self(x)
        t = x.terms
        return {"lau": {str(k): _frac_json(t[k]) for k in sorted(t)}}

    def generator_name(self) -> str:
        return self.var

    def generator(self):
        return LaurentPoly({1: 1}, self.var)

    def fraction_field(self) -> RationalFunctionField:
        return RationalFunctionField(self.var)

    @property
    def name(self) -> str:
        return f"QQ[{self.var}, {self.var}^-1]"


class RationalFunctionField(ScalarRing):
    tag = "ratfun"

    def __init__(self, var: str = "v"):
        self.var = var

    @property
    def zero(self):
        return RationalFunction._raw(_poly.ZERO, _poly.ONE, self.var)

    @property
    def one(self):
        return RationalFunction._raw((Fraction(1),), _poly.ONE, self.var)

    def __call__(self, x):
        if isinstance(x, RationalFunction):
            if x.var != self.var:
                raise RingMismatchError(f"variable {x.var!r} is not {self.var!r}")
            return x
        if isinstance(x, LaurentPoly):
            if x.var != self.var:
                raise RingMismatchError(f"variable {x.var!r} is not {self.var!r}")
            return RationalFunction.from_laurent(x)
        if _is_rational(x):
            return RationalFunction._raw(_poly.trim([x]), _poly.ONE, self.var)
        raise RingMismatchError(f"{x!r} does not embed in QQ({self.var})")

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self):
        return hash(("ratfun", self.var))

    def spec(self) -> dict:
        return {"type": "ratfun", "var": self.var}

    def to_json(self, x):
        x = self(x)
        return {
            "rf": {
                "num": [_frac_json(c) for c in x.num],
                "den": [_frac_json(c) for c in x.den],
            }
        }

    def generator_name(self) -> str:
        return self.var

    def generator(self):
        return RationalFunction((0, 1), (1,), self.var)

    @property
    def name(self) -> str:
        return f"QQ({self.var})"


def ring_from_spec(block: dict) -> ScalarRing:
    kind = block.get("type")
    if kind == "rational":
        return QQ
    if kind == "cyclotomic":
        d = block.get("d")
        if not isinstance(d, int) or d < 1:
            raise ScalarParseError(f"cyclotomic ring needs a positive integer 'd', got {d!r}")
        return cyclotomic_field(d)
    if kind == "laurent":
        return LaurentRing(block.get("var", "v"))
    if kind == "ratfun":
        return RationalFunctionField(block.get("var", "v"))
    raise ScalarParseError(f"unknown scalar ring type {kind!r}")


def _scalar_from_json(obj):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ScalarParseError(f"malformed scalar literal {obj!r}")
    ((kind, body),) = obj.items()
    if kind == "rat":
        return _frac_from_json(body)
    if kind == "cyc":
        if not isinstance(body, dict) or "d" not in body or "coeffs" not in body:
            raise ScalarParseError(f"malformed cyclotomic literal {body!r}")
        return cyclotomic_reduce(body["d"], [_frac_from_json(c) for c in body["coeffs"]])
    if kind == "lau":
        if not isinstance(body, dict):
            raise ScalarParseError(f"malformed Laurent literal {body!r}")
        try:
            return LaurentPoly({int(k): _frac_from_json(c) for k, c in body.items()})
        except ValueError as exc:
            raise ScalarParseError(f"malformed Laurent exponent in {body!r}") from exc
    if kind == "rf":
        if not isinstance(body, dict) or "num" not in body or "den" not in body:
            raise ScalarParseError(f"malformed rational-function literal {body!r}")
        den = [_frac_from_json(c) for c in body["den"]]
        if not any(den):
            raise ScalarParseError("rational-function literal with zero denominator")
        return RationalFunction([_frac_from_json(c) for c in body["num"]], den)
    raise ScalarParseError(f"unknown scalar literal tag {kind!r}")


# ---------------------------------------------------------------------------
# free functions


def ring_of(x) -> ScalarRing:
    if _is_rational(x):
        return QQ
    if isinstance(x, CyclotomicNumber):
        return cyclotomic_field(x.order)
    if isinstance(x, LaurentPoly):
        return LaurentRing(x.var)
    if isinstance(x, RationalFunction):
        return RationalFunctionField(x.var)
    raise TypeError(f"{x!r} is not a scalar")


def common_ring(a: ScalarRing, b: ScalarRing) -> ScalarRing:
    """The ring both ``a`` and ``b`` embed into via the canonical embeddings."""
    if a == b or b == QQ:
        return a
    if a == QQ:
        return b
    if isinstance(a, LaurentRing) and isinstance(b, RationalFunctionField) and a.var == b.var:
        return b
    if isinstance(b, LaurentRing) and isinstance(a, RationalFunctionField) and a.var == b.var:
        return a
    raise RingMismatchError(f"no common ring for {a.name} and {b.name}")


def is_zero(x) -> bool:
    return not x


def invert(x):
    """Multiplicative inverse; Laurent polynomials must be monomials."""
    if not x:
        raise ZeroDivisionError("cannot invert zero")
    if _is_rational(x):
        return 1 / Fraction(x)
    return x.inverse()


def embed(x, ring: ScalarRing):
    """Apply one of the canonical embeddings (rational -> any, Laurent -> ratfun)."""
    return ring(x)


def specialize(p: LaurentPoly, t) -> Fraction:
    """Evaluate a Laurent polynomial at the nonzero rational ``t``."""
    t = Fraction(t)
    if not t:
        raise ZeroDivisionError("cannot specialize a Laurent polynomial at 0")
    if _is_rational(p):
        return Fraction(p)
    return sum((c * t**k for k, c in p.terms.items()), Fraction(0))


# ---------------------------------------------------------------------------
# scalar expression parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class _ScalarParser:
    def __init__(self, ring: ScalarRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None or m.end() == pos:
                break
            if m.group(1):
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("id", m.group(2), m.start(2)))
            elif m.group(3):
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ScalarParseError("empty scalar expression", 0)
        value = self._expr()
        kind, text, pos = self._peek()
        if kind != "end":
            raise ScalarParseError(f"unexpected {text!r}", pos)
        return self.ring(value)

    def _expr(self):
        value = self._term()
        while self._peek()[1] in ("+", "-") and self._peek()[0] == "op":
            op = self._take()[1]
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self):
        value = self._unary()
        while self._peek()[0] == "op" and self._peek()[1] in ("*", "/"):
            _, op, pos = self._take()
            rhs = self._unary()
            if op == "*":
                value = value * rhs
            else:
                try:
                    value = value * invert(rhs)
                except (ZeroDivisionError, NotInvertibleError) as exc:
                    raise ScalarParseError(str(exc), pos) from exc
        return value

    def _unary(self):
        kind, text, _ = self._peek()
        if kind == "op" and text in ("+", "-"):
            self._take()
            inner = self._unary()
            return -inner if text == "-" else inner
        return self._power()

    def _power(self):
        base = self._atom()
        kind, text, pos = self._peek()
        if kind == "op" and text == "^":
            self._take()
            sign = 1
            kind, text, pos = self._peek()
            if kind == "op" and text in ("+", "-"):
                self._take()
                sign = -1 if text == "-" else 1
                kind, text, pos = self._peek()
            if kind != "num":
                raise ScalarParseError("expected an integer exponent", pos)
            self._take()
            k = sign * int(text)
            try:
                if _is_rational(base):
                    return Fraction(base) ** k
                return base**k
            except (ZeroDivisionError, NotInvertibleError) as exc:
                raise ScalarParseError(str(exc), pos) from exc
        return base

    def _atom(self):
        kind, text, pos = self._take()
        if kind == "num":
            return Fraction(int(text))
        if kind == "id":
            if text != self.ring.generator_name():
                raise ScalarParseError(f"unknown symbol {text!r} for ring {self.ring.name}", pos)
            return self.ring.generator()
        if kind == "op" and text == "(":
            value = self._expr()
            kind, text, pos2 = self._take()
            if text != ")":
                raise ScalarParseError("expected ')'", pos2)
            return value
        if kind == "end":
            raise ScalarParseError("unexpected end of expression", pos)
        raise ScalarParseError(f"unexpected {text!r}", pos)
