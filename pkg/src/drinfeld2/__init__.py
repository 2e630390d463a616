"""Exact arithmetic for rank-2 Drinfeld F_q[T]-modules over finite fields."""

from .ff import (
    AUTO,
    ExtensionField,
    FieldError,
    FiniteField,
    IncompatibleFieldError,
    PrimeField,
    ext_make,
    field_make,
)
from .polyring import (
    Poly,
    PolyDomainError,
    count_monic_irreducibles,
    gcd,
    is_irreducible,
    least_irreducible_poly,
    monic_irreducibles,
    poly_from_human,
    poly_from_machine,
    poly_from_str,
    squarefree_decomposition,
    squarefree_split,
)
from .ore import OreDomainError, OrePoly, height, is_separable, kernel_size_exp, rgcd
from .drinfeld import DrinfeldModule, RankError, all_modules, minimal_polynomial
from .frobenius import (
    CharPoly,
    CharPolyError,
    charpoly,
    conductor_split,
    euler_poincare,
    minpoly,
    verify,
)
from .classify import (
    ClassificationReport,
    ConsistencyError,
    EndRingKind,
    Verdict,
    classify,
    endomorphism_order,
    supersingular,
    weil_admissible,
)
from .census import (
    CensusReport,
    RealizationBoundError,
    chi_census,
    chi_formula,
    enumerate_census,
    formula_total,
    full_report,
    realize,
)

__version__ = "0.1.0"

__all__ = [
    "AUTO",
    "CensusReport",
    "CharPoly",
    "CharPolyError",
    "ClassificationReport",
    "ConsistencyError",
    "DrinfeldModule",
    "EndRingKind",
    "ExtensionField",
    "FieldError",
    "FiniteField",
    "IncompatibleFieldError",
    "OreDomainError",
    "OrePoly",
    "Poly",
    "PolyDomainError",
    "PrimeField",
    "RankError",
    "RealizationBoundError",
    "Verdict",
    "all_modules",
    "charpoly",
    "chi_census",
    "chi_formula",
    "classify",
    "conductor_split",
    "count_monic_irreducibles",
    "endomorphism_order",
    "enumerate_census",
    "euler_poincare",
    "ext_make",
    "field_make",
    "formula_total",
    "full_report",
    "gcd",
    "height",
    "is_irreducible",
    "is_separable",
    "kernel_size_exp",
    "least_irreducible_poly",
    "minimal_polynomial",
    "minpoly",
    "monic_irreducibles",
    "poly_from_human",
    "poly_from_machine",
    "poly_from_str",
    "realize",
    "rgcd",
    "squarefree_decomposition",
    "squarefree_split",
    "supersingular",
    "verify",
    "weil_admissible",
]
