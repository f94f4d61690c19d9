"""Hole finding, cycle stretching, triangle contraction, and desk-scale
census verification for power-of-two cycle lengths in claw-free graphs."""

from .canon import CanonicalCert, are_isomorphic, canonical_cert, canonical_form
from .correspondence import (
    ContractionResult,
    TriangleDecomposition,
    contract,
    expand,
    lift_cycle,
    triangle_decomposition,
)
from .errors import (
    C4Found,
    ClawFound,
    CutVertexFound,
    Graph6Error,
    MinDegreeTooLow,
    MultiLink,
    NoTriangleAt,
    NotCubic,
    PreconditionFailed,
    StructureViolation,
    TargetMissing,
)
from .generate import clawfree_min_degree3_graphs, enumerate_cubic_graphs
from .graph6 import parse_graph6, write_graph6
from .graphs import (
    Cycle,
    Graph,
    Path,
    bfs_distances,
    connected_components,
    cut_vertices,
    graph_from_edges,
    is_connected,
    is_cycle_in,
    is_path_in,
    shortest_path,
)
from .holes import (
    Hole,
    MarkedHole,
    chordless_descend,
    is_hole_in,
    long_cycle_min_degree,
    mark_hole,
    smallest_hole,
    smallest_hole_through,
    stretched_cycle,
)
from .recognizers import (
    ClawWitness,
    CycleSpectrum,
    TriangulationStatus,
    cycle_spectrum,
    find_c4,
    find_claw,
    girth,
    has_cycle_of_length,
    power_of_two_cycle,
    triangulation_status,
)
from .survey import (
    FORBIDDEN_LENGTHS,
    MIN_QUOTIENT_ORDER,
    AuditEntry,
    AuditReport,
    LevelProfile,
    ScanRecord,
    ScanReport,
    bfs_levels,
    level_structure_audit,
    scan_corpus,
)
from .witnesses import (
    CycleWitness,
    Form,
    pow2_in_interval,
    pow2_window_check,
    target_in_interval,
    two_power_cycle_through,
    two_power_or_triple_cycle,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Path",
    "Cycle",
    "graph_from_edges",
    "parse_graph6",
    "write_graph6",
    "is_connected",
    "connected_components",
    "cut_vertices",
    "shortest_path",
    "bfs_distances",
    "is_path_in",
    "is_cycle_in",
    "ClawWitness",
    "CycleSpectrum",
    "TriangulationStatus",
    "find_claw",
    "find_c4",
    "girth",
    "has_cycle_of_length",
    "cycle_spectrum",
    "power_of_two_cycle",
    "triangulation_status",
    "Hole",
    "MarkedHole",
    "is_hole_in",
    "long_cycle_min_degree",
    "chordless_descend",
    "smallest_hole",
    "smallest_hole_through",
    "mark_hole",
    "stretched_cycle",
    "TriangleDecomposition",
    "ContractionResult",
    "triangle_decomposition",
    "contract",
    "expand",
    "lift_cycle",
    "Form",
    "CycleWitness",
    "target_in_interval",
    "pow2_in_interval",
    "two_power_or_triple_cycle",
    "two_power_cycle_through",
    "pow2_window_check",
    "CanonicalCert",
    "canonical_cert",
    "canonical_form",
    "are_isomorphic",
    "enumerate_cubic_graphs",
    "clawfree_min_degree3_graphs",
    "LevelProfile",
    "AuditEntry",
    "AuditReport",
    "ScanRecord",
    "ScanReport",
    "bfs_levels",
    "level_structure_audit",
    "scan_corpus",
    "FORBIDDEN_LENGTHS",
    "MIN_QUOTIENT_ORDER",
    "PreconditionFailed",
    "MinDegreeTooLow",
    "NotCubic",
    "ClawFound",
    "C4Found",
    "CutVertexFound",
    "StructureViolation",
    "NoTriangleAt",
    "MultiLink",
    "TargetMissing",
    "Graph6Error",
]
