"""Spherical rectangles with angles (3/2, 1/2, 3/2, 1/2)."""

from ._sphrect import (
    AccessorySolution,
    AccuracyError,
    BelyiViolation,
    BracketError,
    DomainError,
    SingularPointError,
    agm,
    belyi_report,
    bethe_h,
    boundary_check,
    critical_constants,
    dihedral_invariant,
    ellip_E,
    ellip_K,
    extract_alpha,
    k_of_modulus,
    L_eval,
    modulus_of_k,
    modulus_oracle,
    solve,
    solve_family1,
    solve_family2,
)

__all__ = [
    "AccessorySolution",
    "AccuracyError",
    "BelyiViolation",
    "BracketError",
    "DomainError",
    "SingularPointError",
    "agm",
    "belyi_report",
    "bethe_h",
    "boundary_check",
    "critical_constants",
    "dihedral_invariant",
    "ellip_E",
    "ellip_K",
    "extract_alpha",
    "k_of_modulus",
    "L_eval",
    "modulus_of_k",
    "modulus_oracle",
    "solve",
    "solve_family1",
    "solve_family2",
]
