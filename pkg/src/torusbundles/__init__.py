"""Torus bundles over the circle: coverings, Heegaard genus and representations."""

from .bundle import (
    TorusBundle,
    genus,
    homeomorphic,
    homology,
    is_double_branched,
    sakuma_matrix,
    sakuma_pairs,
)
from .covers import (
    FiberCover,
    LatticeNotInvariant,
    PowerCover,
    construct_lowering_cover,
    extends,
    fiber_cover,
    find_genus_lowering,
    power_cover,
    power_cover_certificate,
    restrict_monodromy,
)
from .fox import fox_derivative, rank3_certificate
from .intlat import Lattice, Mat2, conjugate_gl2z, normal_form, snf, sublattices
from .permrep import (
    BundleRep,
    Perm,
    TorusRep,
    classify_rep,
    covering_lattice,
    factor_bundle_rep,
    omega_rep,
)
from .seifert import SeifertSymbol, cyclic_cover, find_lowering, seifert_genus

__version__ = "0.1.0"

__all__ = [
    "BundleRep",
    "FiberCover",
    "Lattice",
    "LatticeNotInvariant",
    "Mat2",
    "Perm",
    "PowerCover",
    "SeifertSymbol",
    "TorusBundle",
    "TorusRep",
    "classify_rep",
    "conjugate_gl2z",
    "construct_lowering_cover",
    "covering_lattice",
    "cyclic_cover",
    "extends",
    "factor_bundle_rep",
    "fiber_cover",
    "find_genus_lowering",
    "find_lowering",
    "fox_derivative",
    "genus",
    "homeomorphic",
    "homology",
    "is_double_branched",
    "normal_form",
    "omega_rep",
    "power_cover",
    "power_cover_certificate",
    "rank3_certificate",
    "restrict_monodromy",
    "sakuma_matrix",
    "sakuma_pairs",
    "seifert_genus",
    "snf",
    "sublattices",
]
