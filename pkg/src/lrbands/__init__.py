"""Finite left regular bands: face posets, supports, chamber graphs, thin LRB graphs."""
from .adjacency import ChamberGraph, LrbClassification, chamber_graph, classify, simple_cycles, support_parity_ok
from .constructions import (
    LineArrangement,
    compose_signs,
    covector_lrb,
    free_lrb,
    line_arrangement_faces,
    line_arrangement_lrb,
    path_example,
)
from .core import LrbTable, ValidationReport, adjoin_identity, are_isomorphic, product, validate_lrb
from .errors import ClosureError, CycleOverflowError, InputError, LrbError, PreconditionError, StructureError
from .lrbgraph import ThinLrbGraph, from_lrb, path_label_parity, roundtrip_check, to_lrb, validate_graph
from .order import FacePoset, face_leq, face_poset, is_meet_semilattice, meet, meet_criterion
from .support import FiberLabel, SupportStructure, fiber_labels, principal_ideal, support_structure

__version__ = "0.1.0"
