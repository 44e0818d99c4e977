"""Exact Rota-Baxter operators on finite-dimensional algebras.

Four exact coefficient rings (rationals, cyclotomic fields, Laurent
polynomials and rational functions in ``v``), algebras given by structure
constants, Hopf algebras with trace elements and integrals, Rota-Baxter
operators built from quasi-idempotent elements, and the tridendriform and
dendriform structures they induce.
"""

from .algebra import AlgebraElement, FiniteDimAlgebra, parse_element
from .checks import DEFAULT_BUDGET, CheckResult
from .families import (
    build_family,
    builtin_group,
    coxeter_system,
    group_algebra,
    hecke_algebra,
    hecke_specialize,
    kl_generator,
    sweedler,
    sweedler_family_element,
    uq_left_integral,
    uq_sl2_bar,
)
from .hopf import HopfAlgebra
from .linalg import Matrix, nullspace, rank, rref, solve
from .rota_baxter import (
    DendriformStructure,
    RotaBaxterOperator,
    TridendriformStructure,
    check_dendriform,
    check_quasi_idempotent_operator,
    check_rb_identity,
    check_tridendriform,
    derive_dendriform,
    derive_tridendriform,
    identity_rb,
    quasi_idempotent_weight,
    rb_from_element,
    rescale,
    star_product,
)
from .scalars import (
    QQ,
    CyclotomicNumber,
    LaurentPoly,
    LaurentRing,
    RationalFunction,
    RationalFunctionField,
    cyclotomic_field,
    specialize,
    zeta,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "CheckResult",
    "CyclotomicNumber",
    "DEFAULT_BUDGET",
    "DendriformStructure",
    "FiniteDimAlgebra",
    "HopfAlgebra",
    "LaurentPoly",
    "LaurentRing",
    "Matrix",
    "QQ",
    "RationalFunction",
    "RationalFunctionField",
    "RotaBaxterOperator",
    "TridendriformStructure",
    "build_family",
    "builtin_group",
    "check_dendriform",
    "check_quasi_idempotent_operator",
    "check_rb_identity",
    "check_tridendriform",
    "coxeter_system",
    "cyclotomic_field",
    "derive_dendriform",
    "derive_tridendriform",
    "group_algebra",
    "hecke_algebra",
    "hecke_specialize",
    "identity_rb",
    "kl_generator",
    "nullspace",
    "parse_element",
    "quasi_idempotent_weight",
    "rank",
    "rb_from_element",
    "rescale",
    "rref",
    "solve",
    "specialize",
    "star_product",
    "sweedler",
    "sweedler_family_element",
    "uq_left_integral",
    "uq_sl2_bar",
    "zeta",
]
