"""Exhaustive universality and universal-mapping-property checks over
finite carriers and finite categories."""

from .category import (
    Arrow,
    FiniteCategory,
    ValidationReport,
    Violation,
    hom_set,
    identity_name,
    is_isomorphism,
    opposite_category,
    validate_category,
)
from .dsl import (
    Bundle,
    builtin_fixture_names,
    fixture_text,
    load_builtin_bundle,
    parse_document,
    serialize,
)
from .errors import AxiomError, InputError, ParseError
from .genlab import (
    SplitMix64,
    base_object,
    divisor_poset_category,
    element_names,
    gen_doubled_poset_category,
    gen_monoid_category,
    gen_poset_category,
    gen_predicate,
    gen_preorder,
    gen_relation,
)
from .orders import (
    BinaryRelation,
    Carrier,
    EquivalenceClasses,
    Preorder,
    equality_preorder,
    induced_equivalence,
    preorder_from_quotient_order,
    reflexive_transitive_closure,
    reverse,
    total_relation,
    validate_partial_order,
    validate_preorder,
)
from .products import (
    Cone,
    ProductCertificate,
    ProductFailure,
    check_coproduct,
    check_product,
    cocone,
    cone,
    enumerate_cones,
    is_initial,
    is_terminal,
    mediating_arrows,
    product_uniqueness_certificate,
)
from .universality import (
    PhiFormula,
    Predicate,
    UniversalityVerdict,
    find_universal,
    is_p_universal,
    is_p_universal_compact,
    is_q_ump_universal,
    is_r_universal_preorder,
    is_r_universal_strict,
    is_unique_arrow_universal,
    parse_phi,
    relation_from_property,
    unique_isomorphism_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "AxiomError",
    "BinaryRelation",
    "Bundle",
    "Carrier",
    "Cone",
    "EquivalenceClasses",
    "FiniteCategory",
    "InputError",
    "ParseError",
    "PhiFormula",
    "Predicate",
    "Preorder",
    "ProductCertificate",
    "ProductFailure",
    "SplitMix64",
    "UniversalityVerdict",
    "ValidationReport",
    "Violation",
    "base_object",
    "builtin_fixture_names",
    "check_coproduct",
    "check_product",
    "cocone",
    "cone",
    "divisor_poset_category",
    "element_names",
    "enumerate_cones",
    "equality_preorder",
    "find_universal",
    "fixture_text",
    "gen_doubled_poset_category",
    "gen_monoid_category",
    "gen_poset_category",
    "gen_predicate",
    "gen_preorder",
    "gen_relation",
    "hom_set",
    "identity_name",
    "induced_equivalence",
    "is_initial",
    "is_isomorphism",
    "is_p_universal",
    "is_p_universal_compact",
    "is_q_ump_universal",
    "is_r_universal_preorder",
    "is_r_universal_strict",
    "is_terminal",
    "is_unique_arrow_universal",
    "load_builtin_bundle",
    "mediating_arrows",
    "opposite_category",
    "parse_document",
    "parse_phi",
    "preorder_from_quotient_order",
    "product_uniqueness_certificate",
    "reflexive_transitive_closure",
    "relation_from_property",
    "reverse",
    "serialize",
    "total_relation",
    "unique_isomorphism_witness",
    "validate_category",
    "validate_partial_order",
    "validate_preorder",
]
