"""Tropical critical points of affine matroids, counted two ways against beta(M)."""

from .bergman import (
    AffineMatroid,
    bergman_membership_via_flags,
    complete_flags,
    in_affine_bergman,
    in_bergman_fan,
    in_flag_cone,
)
from .critical import (
    CriticalPoint,
    VerificationReport,
    critical_points_fast,
    critical_points_oracle,
    degree,
    verify_theorem,
)
from .invariants import (
    FlagOfFlats,
    IntegerPolynomial,
    beta,
    bnbc_bases,
    char_poly,
    flag_of_basis,
    is_nbc_basis,
)
from .matroid import Matroid, from_bases, graphic, uniform
from .partitions import (
    SetPartition,
    classify,
    generic_infeasibility_witness,
    intersection_graph,
    is_rapidly_increasing,
    near_index,
    solve_tree,
)

__all__ = [
    "AffineMatroid",
    "CriticalPoint",
    "FlagOfFlats",
    "IntegerPolynomial",
    "Matroid",
    "SetPartition",
    "VerificationReport",
    "bergman_membership_via_flags",
    "beta",
    "bnbc_bases",
    "char_poly",
    "classify",
    "complete_flags",
    "critical_points_fast",
    "critical_points_oracle",
    "degree",
    "flag_of_basis",
    "from_bases",
    "generic_infeasibility_witness",
    "graphic",
    "in_affine_bergman",
    "in_bergman_fan",
    "in_flag_cone",
    "intersection_graph",
    "is_nbc_basis",
    "is_rapidly_increasing",
    "near_index",
    "solve_tree",
    "uniform",
    "verify_theorem",
]

__version__ = "0.1.0"
