"""Exact combinatorics of affine Coxeter complexes and flat groups of buildings."""

from .affine import (
    Gem,
    SectorRef,
    TranslationElem,
    enumerate_translations,
    fundamental_translation,
    gems,
    lattice_basis,
    make_gem,
    parallel_dist,
    pushed_root,
    roots_cutting_gem,
    sector_membership,
    sector_translation,
    translation,
    translation_test,
)
from .chambers import (
    Gallery,
    ResidueRef,
    RootVec,
    ball,
    convex_hull,
    enumerate_roots_meeting_ball,
    is_minimal,
    proj,
    root_contains,
    root_vector,
    separating_roots,
    weyl_distance,
)
from .coxeter import (
    CoxSystem,
    Elem,
    act_on_root,
    build_system,
    descents,
    extend_diagram_automorphism,
    identity,
    inverse,
    length,
    multiply,
    reduced_word,
)
from .flat import (
    EigenfactorLabel,
    FlatRoot,
    Thickness,
    eigenfactor_census,
    eigenfactor_label,
    flat_root_system,
    moller_tidiness_check,
    q_length,
    scale_with_factorization,
    stabilizer_index,
)

__version__ = "0.1.0"

__all__ = [
    "CoxSystem",
    "EigenfactorLabel",
    "Elem",
    "FlatRoot",
    "Gallery",
    "Gem",
    "ResidueRef",
    "RootVec",
    "SectorRef",
    "Thickness",
    "TranslationElem",
    "act_on_root",
    "ball",
    "build_system",
    "convex_hull",
    "descents",
    "eigenfactor_census",
    "eigenfactor_label",
    "enumerate_roots_meeting_ball",
    "enumerate_translations",
    "extend_diagram_automorphism",
    "flat_root_system",
    "fundamental_translation",
    "gems",
    "identity",
    "inverse",
    "is_minimal",
    "lattice_basis",
    "length",
    "make_gem",
    "moller_tidiness_check",
    "multiply",
    "parallel_dist",
    "proj",
    "pushed_root",
    "q_length",
    "reduced_word",
    "root_contains",
    "root_vector",
    "roots_cutting_gem",
    "scale_with_factorization",
    "sector_membership",
    "sector_translation",
    "separating_roots",
    "stabilizer_index",
    "translation",
    "translation_test",
    "weyl_distance",
]
