"""Finite-scale toolkit for beta-paths, duals, skeletons and increasing loose paths."""

from .beta import (
    BetaSequence,
    CanonicalCycle,
    canonical,
    dual_transform,
    enumerate_beta_cycles,
    induced_labeling,
    is_beta_cycle,
    is_beta_path,
    is_increasing_beta,
    iter_beta_paths,
    reduce_paths_to_cycle,
    splice_reduce,
)
from .core import (
    DualCorrespondence,
    Hypergraph,
    Isomorphism,
    ValidationReport,
    double_dual_correspondence,
    dual,
    validate,
)
from .errors import BetapathError
from .generators import FamilySpec, make
from .pathsearch import (
    Labeling,
    LoosePath,
    adversarial_min_max,
    derive_edges,
    is_edge_increasing,
    is_increasing,
    longest_increasing_path,
)
from .properties import PeelResult, p2_duality_check, peel_P2_star, peel_P_ell
from .skeleton import (
    GeneratorSet,
    SkeletonGraph,
    build_skeleton,
    canonical_generator,
    extract_witness,
    generator_cycle_certificates,
)

__version__ = "0.1.0"

__all__ = [
    "BetaSequence",
    "CanonicalCycle",
    "canonical",
    "dual_transform",
    "enumerate_beta_cycles",
    "induced_labeling",
    "is_beta_cycle",
    "is_beta_path",
    "is_increasing_beta",
    "iter_beta_paths",
    "reduce_paths_to_cycle",
    "splice_reduce",
    "DualCorrespondence",
    "Hypergraph",
    "Isomorphism",
    "ValidationReport",
    "double_dual_correspondence",
    "dual",
    "validate",
    "BetapathError",
    "FamilySpec",
    "make",
    "Labeling",
    "LoosePath",
    "adversarial_min_max",
    "derive_edges",
    "is_edge_increasing",
    "is_increasing",
    "longest_increasing_path",
    "PeelResult",
    "p2_duality_check",
    "peel_P2_star",
    "peel_P_ell",
    "GeneratorSet",
    "SkeletonGraph",
    "build_skeleton",
    "canonical_generator",
    "extract_witness",
    "generator_cycle_certificates",
]
