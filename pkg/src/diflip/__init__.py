"""Sphere embeddings of 2-regular digraphs.

A 2-regular digraph (indegree = outdegree = 2 everywhere) embeds in an
orientable surface with all faces bounded by directed walks exactly when
its rotation system alternates in-ends and out-ends at every vertex.
This package provides the combinatorial embedding machinery, planarity
testing with doubled-triangle immersion certificates, constructive
peripheral cycles, and synthesis of Whitney-flip sequences between
sphere embeddings.
"""

from .connectivity import (
    EdgeCut2,
    check_cut,
    enumerate_2cuts,
    is_strongly_connected,
    is_strongly_k_edge_connected,
    minimal_one_out_set,
    strong_components,
    weak_components,
)
from .digraph import (
    HEAD,
    TAIL,
    Arc,
    ArcEnd,
    DegreeReport,
    Digraph,
    FIXTURE_NAMES,
    SplitChoice,
    generate_random_2regular,
    generate_random_eulerian,
    medial_fixture,
    split_choices,
    split_vertex,
    split_vertex_maps,
    validate,
)
from .embedding import (
    EmbeddingClass,
    FaceSet,
    RotationSystem,
    all_rotation_systems,
    alternating_rotations,
    canonical_walk,
    enumerate_embeddings,
    equivalent,
    euler_genus,
    faces_to_rotation,
    trace_faces,
    validate_rotation,
)
from .errors import (
    DiflipError,
    FormatError,
    InternalError,
    NotStronglyTwoEdgeConnectedError,
    PreconditionError,
    StructuralError,
)
from .immersion import (
    ImmersionCertificate,
    PlanarityResult,
    immerses,
    planar_or_obstruction,
    verify_immersion,
)
from .peripheral import (
    directed_cycles,
    is_directed_cycle,
    is_peripheral,
    peripheral_cycles,
    peripheral_embedder,
    two_peripheral_cycles,
)
from .whitney import (
    ContractionPair,
    FlipMove,
    apply_moves,
    canonical_move,
    contract_at_cut,
    flip_sequence,
    induce_rotation,
    splice_rotation,
    whitney_flip,
)

__version__ = "0.1.0"
