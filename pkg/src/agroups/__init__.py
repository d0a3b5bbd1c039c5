"""Finite group engine for metabelian all-abelian-Sylow counterexamples.

The package builds a family of metabelian groups whose Sylow subgroups
are all abelian yet which sit outside the inductive class generated by
abelian groups, normal-Hall extensions, and direct products.  It also
implements the constructive two-prime decomposition for groups inside
the class, and classifies prime-order elements against the
kernel/complement splitting the family carries.
"""
from .classify import (
    RecognizerResult,
    StructureReport,
    SylowInfo,
    TwoPrimeDecomposition,
    direct_factor_pairs,
    is_a_group,
    is_a_prime_group,
    normal_hall,
    structure_report,
    two_prime_decompose,
)
from .constructions import (
    FamilyParams,
    additive_group,
    build_family_group,
    cr_coordinate_ids,
    cr_coordinate_subgroup,
    cyclic,
    direct_product,
    field_semidirect,
    gamma_coordinate_ids,
    kernel_coordinate_ids,
    make_action,
    power_action,
    scalar_action,
    search_family,
    semidirect_product,
)
from .errors import (
    AGroupsError,
    BadParams,
    DecompositionInvariantFailed,
    GeneratorsDoNotGenerate,
    InvalidAction,
    LatticeCapExceeded,
    MixedFields,
    NonPrime,
    NotAGroup,
    NotFamilyGroup,
    NotNormal,
    OrderDoesNotDivide,
    PrimeDoesNotDivide,
    SizeCapExceeded,
    TooManyPrimes,
    UnknownElement,
    WrongOrder,
)
from .fields import (
    FieldSpec,
    canonical_generator,
    element_of_order,
    make_field,
)
from .groups import (
    Action,
    CyclicGroup,
    DirectProductGroup,
    FieldAddGroup,
    FiniteGroup,
    QuotientGroup,
    SemidirectProductGroup,
    Subgroup,
    trivial_action,
)
from .steinitz import (
    FamilyProjection,
    SteinitzReport,
    SteinitzRow,
    class_weight,
    family_projection,
    order_ell_classification,
    steinitz_exponent_table,
    steinitz_report,
    sylow_exponent_report,
)

__version__ = "1.0.0"

__all__ = [
    "AGroupsError",
    "Action",
    "BadParams",
    "CyclicGroup",
    "DecompositionInvariantFailed",
    "DirectProductGroup",
    "FamilyParams",
    "FamilyProjection",
    "FieldAddGroup",
    "FieldSpec",
    "FiniteGroup",
    "GeneratorsDoNotGenerate",
    "InvalidAction",
    "LatticeCapExceeded",
    "MixedFields",
    "NonPrime",
    "NotAGroup",
    "NotFamilyGroup",
    "NotNormal",
    "OrderDoesNotDivide",
    "PrimeDoesNotDivide",
    "QuotientGroup",
    "RecognizerResult",
    "SemidirectProductGroup",
    "SizeCapExceeded",
    "SteinitzReport",
    "SteinitzRow",
    "StructureReport",
    "Subgroup",
    "SylowInfo",
    "TooManyPrimes",
    "TwoPrimeDecomposition",
    "UnknownElement",
    "WrongOrder",
    "additive_group",
    "build_family_group",
    "canonical_generator",
    "class_weight",
    "cr_coordinate_ids",
    "cr_coordinate_subgroup",
    "cyclic",
    "direct_factor_pairs",
    "direct_product",
    "element_of_order",
    "family_projection",
    "field_semidirect",
    "gamma_coordinate_ids",
    "is_a_group",
    "is_a_prime_group",
    "kernel_coordinate_ids",
    "make_action",
    "make_field",
    "normal_hall",
    "order_ell_classification",
    "power_action",
    "scalar_action",
    "search_family",
    "semidirect_product",
    "steinitz_exponent_table",
    "steinitz_report",
    "structure_report",
    "sylow_exponent_report",
    "trivial_action",
    "two_prime_decompose",
]
