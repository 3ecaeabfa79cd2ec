"""Abstract finite-group machinery: multiplication tables, recognizers,
abelian groups with pairings, balanced semidirect products, and the binary
icosahedral construction."""

from .abelian import (
    AbelianPairedGroup,
    GammaResult,
    complement_of_cyclic,
    enumerate_pairings,
    gamma_subgroup,
    invariant_factor_shapes,
    max_isotropic_order,
    pairing_count,
    subgroup_invariants,
    subgroup_order,
)
from .icosahedral import binary_icosahedral
from .sdp import (
    BalancedSdpDescriptor,
    action_multipliers,
    balanced_build,
    balanced_exists,
    balanced_multipliers,
    embeds_theorem_shape,
    find_monomorphism,
    multiplier_classes,
    sdp_isomorphic,
    sdp_table,
    shape_table,
)
from .tables import (
    FiniteGroupTable,
    abelian_invariants,
    all_subgroups,
    has_normal_cyclic,
    recognize,
)

__all__ = [
    "AbelianPairedGroup",
    "BalancedSdpDescriptor",
    "FiniteGroupTable",
    "GammaResult",
    "abelian_invariants",
    "action_multipliers",
    "all_subgroups",
    "balanced_build",
    "balanced_exists",
    "balanced_multipliers",
    "binary_icosahedral",
    "complement_of_cyclic",
    "embeds_theorem_shape",
    "enumerate_pairings",
    "find_monomorphism",
    "gamma_subgroup",
    "has_normal_cyclic",
    "invariant_factor_shapes",
    "max_isotropic_order",
    "multiplier_classes",
    "pairing_count",
    "recognize",
    "sdp_isomorphic",
    "sdp_table",
    "shape_table",
    "subgroup_invariants",
    "subgroup_order",
]
