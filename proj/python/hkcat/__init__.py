"""Homogeneity, Hochschild, and orbifold Euler computations for
hyper-Kähler categories of Hilbert-scheme type."""

from ._core import (
    FiniteField,
    HochschildNumbers,
    HodgeDiamond,
    Permutation,
    PermutationGroup,
    alternating_group,
    blow_up_opc4_points,
    burnside_invariant_dims,
    category_euler_series,
    commuting_pair_orbit_histogram,
    cyclic_group,
    dihedral_group,
    goettsche_coefficients,
    group,
    guan_b2_admissible,
    hk4_betti_from_hochschild,
    hkr_homology,
    homogeneity_profile,
    hyperkahler_unit_verdict,
    invariant_dims_subset_model,
    k3_unit,
    kunneth_tensor,
    orbifold_euler,
    orbits_on_k_subsets,
    projective_group,
    salamon_check,
    serre_shift_cohomology,
    sod_subtract_exceptional,
    subgroup_scan,
    symmetric_group,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteField",
    "HochschildNumbers",
    "HodgeDiamond",
    "Permutation",
    "PermutationGroup",
    "alternating_group",
    "blow_up_opc4_points",
    "burnside_invariant_dims",
    "category_euler_series",
    "commuting_pair_orbit_histogram",
    "cyclic_group",
    "dihedral_group",
    "goettsche_coefficients",
    "group",
    "guan_b2_admissible",
    "hk4_betti_from_hochschild",
    "hkr_homology",
    "homogeneity_profile",
    "hyperkahler_unit_verdict",
    "invariant_dims_subset_model",
    "k3_unit",
    "kunneth_tensor",
    "orbifold_euler",
    "orbits_on_k_subsets",
    "projective_group",
    "salamon_check",
    "serre_shift_cohomology",
    "sod_subtract_exceptional",
    "subgroup_scan",
    "symmetric_group",
]
