"""Builders for the example families and the descriptor syntax the CLI accepts.

Descriptors: ``sweedler``, ``group:cyclic:n``, ``group:symmetric:n``,
``group:dihedral:m``, ``uqsl2:d``, ``hecke:A:n``, ``hecke:I2:m``.
"""

from __future__ import annotations

from ..algebra import FiniteDimAlgebra
from ..checks import DEFAULT_BUDGET
from ..hopf import HopfAlgebra
from ._common import FamilyCheckError, FamilyError, self_check
from .coxeter import CoxeterSystem, coxeter_system
from .groups import FiniteGroup, builtin_group, group_algebra
from .hecke import HeckeAlgebra, hecke_algebra, hecke_specialize, kl_generator
from .quantum import (
    QuantumGroupParams,
    SmallQuantumGroup,
    integral_times_e_closed_form,
    uq_left_integral,
    uq_sl2_bar,
)
from .sweedler import sweedler, sweedler_family_element

__all__ = [
    "BUILTIN_DESCRIPTORS",
    "CoxeterSystem",
    "FamilyCheckError",
    "FamilyError",
    "FiniteGroup",
    "HeckeAlgebra",
    "QuantumGroupParams",
    "SmallQuantumGroup",
    "build_family",
    "builtin_group",
    "coxeter_system",
    "group_algebra",
    "hecke_algebra",
    "hecke_specialize",
    "integral_times_e_closed_form",
    "kl_generator",
    "self_check",
    "sweedler",
    "sweedler_family_element",
    "uq_left_integral",
    "uq_sl2_bar",
]

# default-sized instances of every family
BUILTIN_DESCRIPTORS = ("sweedler", "group:symmetric:3", "group:cyclic:3", "uqsl2:3", "hecke:A:2")


def build_family(descriptor: str, budget=DEFAULT_BUDGET, seed: int = 0) -> FiniteDimAlgebra | HopfAlgebra:
    """Build and self-check a family; ``budget`` and ``seed`` bound the self-check."""
    head, _, rest = descriptor.partition(":")
    if head == "sweedler" and not rest:
        return sweedler()
    if head == "group":
        return group_algebra(builtin_group(rest), budget=budget, seed=seed)
    if head == "uqsl2":
        try:
            d = int(rest)
        except ValueError:
            raise FamilyError(f"uqsl2:d needs an integer d, got {rest!r}") from None
        return uq_sl2_bar(d, budget=budget, seed=seed)
    if head == "hecke":
        return hecke_algebra(coxeter_system(rest), budget=budget, seed=seed)
    raise FamilyError(
        f"unknown family {descriptor!r}; expected sweedler, group:<kind>:<n>, uqsl2:<d>, hecke:A:<n> or hecke:I2:<m>"
    )
