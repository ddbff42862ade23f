"""Painted trees, lighted shades, and their polytopes.

Exact combinatorics and polyhedral geometry of the two object families: the
rotation and refinement lattices, the shadow map between them, multiplihedra
and Hochschild polytopes with certificates, cubic realizations, and the
enumeration formulas with their regression tables.

Everything is exact (integers, fractions, bitmask relations); all public
objects are immutable and all operations are pure functions, so the library
is safe to use from concurrent workers without locking.
"""

from .cubic import (
    HochschildWord,
    bracket_vector,
    cubic_vector_painted,
    cubic_vector_shade,
    enum_words,
    lehmer_code,
    shade_to_word,
    verify_cubic_realization,
    word_to_shade,
)
from .geometry import (
    CertificationReport,
    Halfspace,
    MinkowskiData,
    barycenter,
    certify_polytope,
    facet_of_lighted_shade,
    facet_of_painted_tree,
    freehedron_report,
    minkowski_data,
    omega,
    oriented_skeleton,
    shared_facet_report,
    vertex_of_lighted_shade,
    vertex_of_painted_tree,
)
from .painted import PaintedTree, binary_painted_trees, enum_painted_trees
from .posets import (
    FinitePoset,
    MorphismCheckReport,
    build_refinement_poset,
    build_rotation_poset,
    check_congruence_projection,
    check_meet_morphism,
    lattice_analytics,
    word_subposet,
)
from .preposets import Preposet
from .series import (
    TruncatedSeries,
    count_binary_painted_trees,
    count_facet_objects,
    count_singletons,
    count_unary_lighted_shades,
    face_generating_function,
    gf_face_count,
    surjection_count,
)
from .shades import LightedShade, enum_lighted_shades, unary_lighted_shades
from .shadow import fiber_max, fiber_min, is_singleton, shadow, shadow_fibers
from .tables import reproduce_tables

__all__ = [
    "PaintedTree",
    "LightedShade",
    "Preposet",
    "FinitePoset",
    "HochschildWord",
    "Halfspace",
    "MinkowskiData",
    "CertificationReport",
    "MorphismCheckReport",
    "TruncatedSeries",
    "enum_painted_trees",
    "binary_painted_trees",
    "enum_lighted_shades",
    "unary_lighted_shades",
    "shadow",
    "shadow_fibers",
    "fiber_min",
    "fiber_max",
    "is_singleton",
    "build_rotation_poset",
    "build_refinement_poset",
    "check_meet_morphism",
    "check_congruence_projection",
    "lattice_analytics",
    "word_subposet",
    "vertex_of_painted_tree",
    "vertex_of_lighted_shade",
    "facet_of_painted_tree",
    "facet_of_lighted_shade",
    "minkowski_data",
    "certify_polytope",
    "oriented_skeleton",
    "shared_facet_report",
    "freehedron_report",
    "barycenter",
    "omega",
    "lehmer_code",
    "bracket_vector",
    "cubic_vector_painted",
    "cubic_vector_shade",
    "enum_words",
    "shade_to_word",
    "word_to_shade",
    "verify_cubic_realization",
    "count_binary_painted_trees",
    "count_unary_lighted_shades",
    "count_facet_objects",
    "count_singletons",
    "surjection_count",
    "gf_face_count",
    "face_generating_function",
    "reproduce_tables",
]
