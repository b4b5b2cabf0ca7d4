"""Implication hypergraphs with exact information-content solving.

A hypergraph of propositions and tail-implies-head hyperedges induces a
linear system whose solution assigns each proposition an information form
``a*nu + b*eps`` over two positive parameters: ``nu``, the base value of a
leaf, and ``eps``, the increment paid per implication.  This package builds
and validates such hypergraphs, solves the system exactly over the
rationals, checks solvability conditions, and reads/writes a small DSL, a
JSON schema, and DOT.
"""

from .model import (
    DuplicatePropositionId,
    EmptyTailOrHead,
    Finding,
    Hyperedge,
    HypergraphError,
    ImplicationHypergraph,
    InvalidPropositionId,
    Proposition,
    SelfIntersectingEdge,
    UnknownProposition,
    ValidationReport,
    build,
    dependency_digraph,
    is_acyclic,
    leaves,
    validate,
)
from .rationals import Rational, parse_rational, render_decimal
from .solver import (
    AdjacencyMatrix,
    Diagnostics,
    InfoForm,
    NonPositiveParams,
    NotWellDefined,
    Params,
    adjacency_matrix,
    diagnostics,
    evaluate,
    is_configured,
    leaf_vector,
    solve_symbolic,
    solve_values,
)
from .testkit import CyclicInput, GenSpec, InfeasibleSpec, fixed_point_oracle, generate
from .textio import (
    DocEdge,
    DocProposition,
    DslError,
    DslSyntaxError,
    HypergraphDocument,
    SchemaError,
    document_of,
    emit_dot,
    emit_dsl,
    emit_json,
    parse_dsl,
    parse_json,
    to_hypergraph,
)

__version__ = "0.1.0"

__all__ = [
    "AdjacencyMatrix",
    "CyclicInput",
    "Diagnostics",
    "DocEdge",
    "DocProposition",
    "DslError",
    "DslSyntaxError",
    "DuplicatePropositionId",
    "EmptyTailOrHead",
    "Finding",
    "GenSpec",
    "Hyperedge",
    "HypergraphDocument",
    "HypergraphError",
    "ImplicationHypergraph",
    "InfeasibleSpec",
    "InfoForm",
    "InvalidPropositionId",
    "NonPositiveParams",
    "NotWellDefined",
    "Params",
    "Proposition",
    "Rational",
    "SchemaError",
    "SelfIntersectingEdge",
    "UnknownProposition",
    "ValidationReport",
    "adjacency_matrix",
    "build",
    "dependency_digraph",
    "diagnostics",
    "document_of",
    "emit_dot",
    "emit_dsl",
    "emit_json",
    "evaluate",
    "fixed_point_oracle",
    "generate",
    "is_acyclic",
    "is_configured",
    "leaf_vector",
    "leaves",
    "parse_dsl",
    "parse_json",
    "parse_rational",
    "render_decimal",
    "solve_symbolic",
    "solve_values",
    "to_hypergraph",
    "validate",
]
