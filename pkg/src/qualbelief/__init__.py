"""Quantitative belief measures, qualitative preference relations, and the bridges between them."""

from .frame import Frame, characteristic_vector, enumerate_subsets, max_frame_size, set_max_frame_size
from .measures import (
    MassFunction,
    MeasureReport,
    SetFunction,
    SignedMoebius,
    belief_from_mass,
    check_belief,
    check_generalized,
    check_measure,
    check_monotonic,
    check_probability,
    classify_measure,
    mass_from_set_function,
)
from .relations import (
    PreferenceRelation,
    RankedPartition,
    RelationReport,
    check_axioms,
    check_relation,
    check_weak_order,
    classify_relation,
    from_ranking,
    from_statements,
    partition,
)
from .representation import (
    CompatibilityVerdict,
    construct_belief,
    construct_generalized_belief,
    construct_monotonic_belief,
    construct_probability_scott,
    induce_relation,
    ordinal_representation,
    verify_compatibility,
)

__version__ = "0.1.0"

__all__ = [
    "MassFunction",
    "MeasureReport",
    "SetFunction",
    "SignedMoebius",
    "belief_from_mass",
    "check_belief",
    "check_generalized",
    "check_measure",
    "check_monotonic",
    "check_probability",
    "classify_measure",
    "mass_from_set_function",
    "PreferenceRelation",
    "RankedPartition",
    "RelationReport",
    "check_axioms",
    "check_relation",
    "check_weak_order",
    "classify_relation",
    "from_ranking",
    "from_statements",
    "partition",
    "CompatibilityVerdict",
    "construct_belief",
    "construct_generalized_belief",
    "construct_monotonic_belief",
    "construct_probability_scott",
    "induce_relation",
    "ordinal_representation",
    "verify_compatibility",
    "Frame",
    "characteristic_vector",
    "enumerate_subsets",
    "max_frame_size",
    "set_max_frame_size",
]
