"""Finite monoidal, braided and 2-monoidal categories: checkers and transport."""

from .core import (
    CategoryError,
    FiniteCategory,
    Functor,
    MonoidalData,
    MonoidalFunctor,
    TwoMonoidalData,
    TwoMonoidalFunctor,
    braiding,
    check_monoidal,
    check_monoidal_functor,
    check_two_monoidal,
    check_two_monoidal_functor,
    compose_functors,
    compose_two_monoidal,
    identity_functor,
    identity_two_monoidal_functor,
)
from .transport import (
    AdjointEquivalence,
    default_witness,
    doctrinal,
    doctrinal_two,
    lift_dual,
    lift_through_equivalence,
    preimage,
    same_cells,
    strict_structure,
    transport_equivalence,
    transport_iso,
)

__all__ = [
    "AdjointEquivalence", "CategoryError", "FiniteCategory", "Functor", "MonoidalData",
    "MonoidalFunctor", "TwoMonoidalData", "TwoMonoidalFunctor", "braiding", "check_monoidal",
    "check_monoidal_functor", "check_two_monoidal", "check_two_monoidal_functor",
    "compose_functors", "compose_two_monoidal", "default_witness", "doctrinal", "doctrinal_two",
    "identity_functor", "identity_two_monoidal_functor", "lift_dual", "lift_through_equivalence",
    "preimage", "same_cells", "strict_structure", "transport_equivalence", "transport_iso",
]
