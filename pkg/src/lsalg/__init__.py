"""Finite pointed algebras with a family of self-maps, and the monoid operations compatible with them."""

__version__ = "0.1.0"

from .algebra import (
    Check,
    FamilyReport,
    FiniteLSAlgebra,
    family_report,
    invariant_closure,
    is_minimal,
    minimal_core,
)
from .morphisms import (
    find_morphism,
    is_isomorphism,
    quotient,
    quotient_regularity,
    verify_monoid_homomorphism,
    verify_morphism,
)
from .synthesis import (
    MonoidOp,
    Reflection,
    SynthesisResult,
    allowable_maps,
    brute_force_operation_search,
    classify_monoid,
    derive_reflection,
    reflect_operation,
    synthesize,
    synthesize_from_reflection,
    verify_compatible,
    verify_reflection,
)
from .transmonoid import (
    TransformationMonoid,
    centraliser,
    compose,
    equivalence_report,
    evaluate_at_base,
    generate_monoid,
)
from .words import (
    boundary_algebra,
    boundary_regular_by_theorem,
    concat,
    fold,
    project,
    reverse,
    validate_boundary_set,
)
