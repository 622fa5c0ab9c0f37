"""Computational group theory for fundamental groups of plane curve
complements: presentations, subgroups, Alexander invariants, finite
quotients and topological calculators."""

__version__ = "0.1.0"

from .errors import CurveGroupsError, MathError, UsageError
from .presentation import (AbelianInvariants, OrbifoldSignature, Presentation, abelianization,
                           cyclic_group, free_group, free_product, orbifold_presentation,
                           quotient_by_normal_closure)
from .words import BraidWord, FreeEndomorphism, Word, artin_automorphism, commutator

__all__ = [
    "AbelianInvariants",
    "BraidWord",
    "CurveGroupsError",
    "FreeEndomorphism",
    "MathError",
    "OrbifoldSignature",
    "Presentation",
    "UsageError",
    "Word",
    "abelianization",
    "artin_automorphism",
    "commutator",
    "cyclic_group",
    "free_group",
    "free_product",
    "orbifold_presentation",
    "quotient_by_normal_closure",
]
