"""Dense univariate polynomials over Q, stored constant term first.

These are plain tuples of ``Fraction`` with no trailing zeros; the zero
polynomial is ``()``.  Only what the cyclotomic and rational-function
rings need lives here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Poly = tuple  # tuple[Fraction, ...]

ZERO: Poly = ()
ONE: Poly = (Fraction(1),)


def trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return tuple(x if type(x) is Fraction else Fraction(x) for x in c)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, r: Poly) -> Poly:
    n = max(len(p), len(r))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(r):
        out[i] += c
    return trim(out)


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, r: Poly) -> Poly:
    return add(p, neg(r))


def scale(c, p: Poly) -> Poly:
    if not c:
        return ZERO
    return tuple(c * x for x in p)


def mul(p: Poly, r: Poly) -> Poly:
    if not p or not r:
        return ZERO
    out = [Fraction(0)] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(r):
            if b:
                out[i + j] += a * b
    return trim(out)


def divmod_(p: Poly, r: Poly) -> tuple[Poly, Poly]:
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dr = len(r) - 1
    lead = r[-1]
    if len(rem) - 1 < dr:
        return ZERO, trim(rem)
    quo = [Fraction(0)] * (len(rem) - dr)
    for k in range(len(rem) - 1 - dr, -1, -1):
        c = rem[k + dr] / lead
        quo[k] = c
        if c:
            for i, b in enumerate(r):
                rem[k + i] -= c * b
    return trim(quo), trim(rem[:dr])


def monic(p: Poly) -> Poly:
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def gcd(p: Poly, r: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while r:
        p, r = r, divmod_(p, r)[1]
    return monic(p)


def xgcd(p: Poly, r: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*p + t*r == g`` and ``g`` monic."""
    r0, r1 = p, r
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    lead = r0[-1]
    return monic(r0), scale(1 / lead, s0), scale(1 / lead, t0)


def evaluate(p: Poly, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> Poly:
    """Phi_d, computed as (x^d - 1) divided by Phi_k for every proper divisor k."""
    if d < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {d}")
    num = trim([Fraction(-1)] + [Fraction(0)] * (d - 1) + [Fraction(1)])
    for k in range(1, d):
        if d % k == 0:
            num, rem = divmod_(num, cyclotomic_polynomial(k))
            assert not rem
    return num
