"""Exact combinatorics of symplectic interlacing patterns with partition
overlays: enumeration, graded Weyl-module characters by two independent
methods, basis words, classical oracles, and branching identities."""

from .branching import (
    FiltrationTerm,
    Report,
    shtepin_branch_l,
    shtepin_branch_v,
    verify_identities,
    weyl_filtration,
)
from .characters import (
    GradedCharacter,
    QPolynomial,
    box_generating_function,
    character_direct,
    character_fermionic,
    character_from_json,
    character_to_json,
    q_binomial,
    restrict_drop_last,
    specialize_q1,
    total_dim,
    zeroth_piece,
)
from .oracle import (
    CharacterTable,
    dominant_weights_below,
    freudenthal_character,
    weyl_dim,
)
from .patterns import (
    DiffArray,
    PatternC,
    RestrictedPattern,
    differences,
    enumerate_patterns,
    enumerate_restricted_patterns,
    pattern_from_json,
    pattern_to_json,
    pattern_weight,
    reconstruct_pattern,
    validate_pattern,
)
from .pops import (
    PbwMonomial,
    Pop,
    RestrictedPop,
    enumerate_f,
    enumerate_pops,
    enumerate_restricted_pops,
    partitions_in_box,
    pop_boxes,
    pop_count_formula,
    pop_from_json,
    pop_monomial,
    pop_to_json,
    pop_weight,
    restricted_pop_count_formula,
)
from .rootsys import (
    DominantWeight,
    RootLabel,
    inner,
    lambda_to_omegas,
    omegas_to_lambda,
    positive_roots,
    root_vector,
    sweep_dominant_weights,
)

__all__ = [
    "CharacterTable",
    "DiffArray",
    "DominantWeight",
    "FiltrationTerm",
    "GradedCharacter",
    "PatternC",
    "PbwMonomial",
    "Pop",
    "QPolynomial",
    "Report",
    "RestrictedPattern",
    "RestrictedPop",
    "RootLabel",
    "box_generating_function",
    "character_direct",
    "character_fermionic",
    "character_from_json",
    "character_to_json",
    "differences",
    "dominant_weights_below",
    "enumerate_f",
    "enumerate_patterns",
    "enumerate_pops",
    "enumerate_restricted_patterns",
    "enumerate_restricted_pops",
    "freudenthal_character",
    "inner",
    "lambda_to_omegas",
    "omegas_to_lambda",
    "partitions_in_box",
    "pattern_from_json",
    "pattern_to_json",
    "pattern_weight",
    "pop_boxes",
    "pop_count_formula",
    "pop_from_json",
    "pop_monomial",
    "pop_to_json",
    "pop_weight",
    "positive_roots",
    "q_binomial",
    "reconstruct_pattern",
    "restrict_drop_last",
    "restricted_pop_count_formula",
    "root_vector",
    "shtepin_branch_l",
    "shtepin_branch_v",
    "specialize_q1",
    "sweep_dominant_weights",
    "total_dim",
    "validate_pattern",
    "verify_identities",
    "weyl_dim",
    "weyl_filtration",
    "zeroth_piece",
]
