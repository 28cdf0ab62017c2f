"""Auslander-Reiten theory of monomorphism categories S(C) and epimorphism
categories F(C) over finite dimensional bound quiver algebras, with every
computed almost split sequence certified against a definitional oracle."""

from .fields import GF, QQ
from .algebra import Arrow, BoundQuiverAlgebra, Path, Quiver, Relation, build_algebra
from .reps import ModMap, Rep, direct_sum, hom_basis, simple, standard_inj, standard_proj

__all__ = [
    "GF",
    "QQ",
    "Arrow",
    "BoundQuiverAlgebra",
    "Path",
    "Quiver",
    "Relation",
    "build_algebra",
    "ModMap",
    "Rep",
    "direct_sum",
    "hom_basis",
    "simple",
    "standard_inj",
    "standard_proj",
]
