"""Sweedler's four-dimensional Hopf algebra over QQ."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..algebra import AlgebraElement, FiniteDimAlgebra
from ..hopf import HopfAlgebra, tensor_mul
from ..scalars import QQ
from ._common import FamilyError, self_check

__all__ = ["sweedler", "sweedler_family_element"]

BASIS = ("1", "x", "y", "xy")
# basis element x^a y^b sits at index 2*b + a
_MONO = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}


def _product(m1: tuple[int, int], m2: tuple[int, int]) -> dict[int, int]:
    # x^a y^b . x^c y^d = (-1)^(b c) x^(a+c) y^(b+d), using yx = -xy, x^2 = 1, y^2 = 0
    (a, b), (c, d) = m1, m2
    if b + d > 1:
        return {}
    return {_MONO[((a + c) % 2, b + d)]: (-1) ** (b * c)}


@lru_cache(maxsize=None)
def sweedler() -> HopfAlgebra:
    monos = sorted(_MONO, key=_MONO.get)
    mult = {(_MONO[m1], _MONO[m2]): _product(m1, m2) for m1 in monos for m2 in monos}
    A = FiniteDimAlgebra(BASIS, mult, {0: 1}, QQ, name="sweedler")
    one, x, y, xy = range(4)
    delta_x = {(x, x): 1}
    delta_y = {(one, y): 1, (y, x): 1}
    cop = {
        one: {(one, one): 1},
        x: delta_x,
        y: delta_y,
        xy: tensor_mul(A.table, delta_x, delta_y),
    }
    counit = [1, 1, 0, 0]
    antipode = {one: {one: 1}, x: {x: 1}, y: {xy: 1}, xy: {y: -1}}
    H = HopfAlgebra(A, cop, counit, antipode, name="sweedler")
    self_check(H)
    return H


def sweedler_family_element(mu1, mu2, mu3, H: HopfAlgebra | None = None) -> AlgebraElement:
    """``mu1 (1 + x) + mu2 y + mu3 xy``."""
    mu = [Fraction(m) for m in (mu1, mu2, mu3)]
    if not any(mu):
        raise FamilyError("at least one of mu1, mu2, mu3 must be nonzero")
    H = H or sweedler()
    return H.algebra.element([mu[0], mu[0], mu[1], mu[2]])
