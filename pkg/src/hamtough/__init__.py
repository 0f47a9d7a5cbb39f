"""Hamiltonicity in tough graphs: exact solvers, degree-sequence condition
checkers, a t-closure engine, and certificate extractors that end every run
in a validated Hamilton cycle or a toughness-violating cutset."""

__version__ = "0.1.0"

from .certificates import (
    Certificate,
    CertificateError,
    Extraction,
    HamiltonCycle,
    ToughnessViolation,
    closure_certificate,
    parse_certificate,
    serialize_certificate,
    successor_certificate,
    validate_certificate,
)
from .conditions import (
    CliqueAnalysis,
    ClosureResult,
    ConditionReport,
    bauer_check,
    chvatal_condition,
    hoang_condition,
    minimal_defect_index,
    t_closure,
    universal_cliques,
)
from .graph import DegreeSequence, Graph, degree_sequence
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .intervals import IntervalDecomposition, assemble_cutset, decompose_intervals
from .rational import INFINITY, format_value, parse_rational
from .solvers import (
    CutsetWitness,
    CycleCertificate,
    components_after_removal,
    hamilton_cycle,
    hamilton_path_between,
    is_t_tough,
    pancyclic,
    toughness_exact,
)
from .successor import SuccessorConfig, build_config

__all__ = [
    "Certificate",
    "CertificateError",
    "CliqueAnalysis",
    "ClosureResult",
    "ConditionReport",
    "CutsetWitness",
    "CycleCertificate",
    "DegreeSequence",
    "Extraction",
    "Graph",
    "Graph6Error",
    "HamiltonCycle",
    "INFINITY",
    "IntervalDecomposition",
    "SuccessorConfig",
    "ToughnessViolation",
    "assemble_cutset",
    "bauer_check",
    "build_config",
    "chvatal_condition",
    "closure_certificate",
    "components_after_removal",
    "decompose_intervals",
    "degree_sequence",
    "emit_graph6",
    "format_value",
    "hamilton_cycle",
    "hamilton_path_between",
    "hoang_condition",
    "is_t_tough",
    "minimal_defect_index",
    "pancyclic",
    "parse_certificate",
    "parse_graph6",
    "parse_rational",
    "serialize_certificate",
    "successor_certificate",
    "t_closure",
    "toughness_exact",
    "universal_cliques",
    "validate_certificate",
]
