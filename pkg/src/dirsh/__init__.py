"""dirsh: divide-and-conquer randomized swap-insertion routing for quantum
circuits on constrained coupling graphs."""

from .baseline import exhaustive_optimal, greedy_route
from .circuit import BINARY, SWAP, UNARY, Circuit, ChunkPlan, Gate, compute_levels, depth, split_chunks
from .errors import (
    AdjacencyError,
    CapacityError,
    CircuitError,
    DirshError,
    QasmParseError,
    TopologyError,
)
from .estimator import DirshRouter
from .generator import Solution, generate_solution
from .optimizer import RunConfig, RunReport, chunk_count, optimize
from .placement import Assignment, GateState, apply_swap, classify, default_assignment
from .qasm import emit_routed, parse_circuit
from .reporting import benchmark_report, delta, stats_record
from .topology import Topology, builtin_tokyo, load_coupling
from .validation import ValidationReport, recompute_metrics, validate

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "BINARY",
    "Circuit",
    "ChunkPlan",
    "DirshRouter",
    "Gate",
    "GateState",
    "RunConfig",
    "RunReport",
    "SWAP",
    "Solution",
    "Topology",
    "UNARY",
    "ValidationReport",
    "apply_swap",
    "benchmark_report",
    "builtin_tokyo",
    "chunk_count",
    "classify",
    "compute_levels",
    "default_assignment",
    "delta",
    "depth",
    "emit_routed",
    "exhaustive_optimal",
    "generate_solution",
    "greedy_route",
    "load_coupling",
    "optimize",
    "parse_circuit",
    "recompute_metrics",
    "split_chunks",
    "stats_record",
    "validate",
    "AdjacencyError",
    "CapacityError",
    "CircuitError",
    "DirshError",
    "QasmParseError",
    "TopologyError",
]
