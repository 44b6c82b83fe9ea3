"""Exact cohomology invariants of commuting varieties in compact Lie groups.

The generic component of the space of commuting n-tuples in a compact simple
Lie group G (the component whose tuples lie in a common maximal torus) has
cohomology computable from the Weyl group alone.  This package carries out
that computation in exact rational arithmetic: Poincare polynomials, Betti
numbers, equivariant Hilbert series, W-isotypic decompositions with
character-valued coefficients, and torsion-prime reports, for the classical
Cartan families A, B, C and D.
"""

__version__ = "0.1.0"

from .chartab import (
    CharacterTable,
    GradedClassFunction,
    NotACharacterError,
    character_table,
    decompose_graded,
    inner_product,
    mn_character,
    recombine_graded,
)
from .cohomology import (
    EngineConsistencyError,
    EquivariantResult,
    PoincareResult,
    WDecomposition,
    betti,
    coinvariant_graded_char,
    equivariant_hilbert,
    equivariant_series_by_classes,
    exterior_char,
    graded_w_decomposition,
    isotypic_poincare,
    poincare_poly,
    su2_betti_oracle,
    torsion_primes,
)
from .exact_poly import (
    ExactPoly,
    InexactDivisionError,
    PoleAtOriginError,
    RationalFunction,
    series_expand,
)
from .weyl import (
    CartanType,
    ClassDescriptor,
    ConjClassData,
    WeylData,
    conjugacy_classes,
    invariant_degrees,
    parse_cartan_type,
    reflection_det_poly,
    weyl_data,
    weyl_order,
)

__all__ = [
    "CartanType",
    "CharacterTable",
    "ClassDescriptor",
    "ConjClassData",
    "EngineConsistencyError",
    "EquivariantResult",
    "ExactPoly",
    "GradedClassFunction",
    "InexactDivisionError",
    "NotACharacterError",
    "PoincareResult",
    "PoleAtOriginError",
    "RationalFunction",
    "WDecomposition",
    "WeylData",
    "betti",
    "character_table",
    "coinvariant_graded_char",
    "conjugacy_classes",
    "decompose_graded",
    "equivariant_hilbert",
    "equivariant_series_by_classes",
    "exterior_char",
    "graded_w_decomposition",
    "inner_product",
    "invariant_degrees",
    "isotypic_poincare",
    "mn_character",
    "parse_cartan_type",
    "poincare_poly",
    "recombine_graded",
    "reflection_det_poly",
    "series_expand",
    "su2_betti_oracle",
    "torsion_primes",
    "weyl_data",
    "weyl_order",
    "__version__",
]
