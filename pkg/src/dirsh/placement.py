"""Logical-to-physical assignment tracking, gate readiness, and the front-set
distance functions that drive swap selection."""

from __future__ import annotations

import enum
from typing import Iterable

from .circuit import SWAP, UNARY, Gate
from .errors import AdjacencyError, CapacityError
from .topology import Topology


class Assignment:
    """Injective map from logical qubits to physical qubits, mutated in place
    by swap application."""

    __slots__ = ("log_to_phys", "phys_to_log")

    def __init__(self, log_to_phys: Iterable[int], num_physical: int):
        self.log_to_phys = list(log_to_phys)
        self.phys_to_log = [-1] * num_physical
        for q, p in enumerate(self.log_to_phys):
            if not 0 <= p < num_physical:
                raise CapacityError(f"physical qubit {p} outside [0, {num_physical})")
            if self.phys_to_log[p] != -1:
                raise ValueError(f"physical qubit {p} assigned twice")
            self.phys_to_log[p] = q

    @property
    def num_physical(self) -> int:
        return len(self.phys_to_log)

    def phys(self, q: int) -> int:
        """Physical position of logical qubit ``q``."""
        return self.log_to_phys[q]

    def logical_at(self, p: int) -> int:
        """Logical qubit on physical qubit ``p``, or -1 if unoccupied."""
        return self.phys_to_log[p]

    def swap_phys(self, a: int, b: int) -> None:
        """Exchange the occupants of physical qubits ``a`` and ``b``."""
        la, lb = self.phys_to_log[a], self.phys_to_log[b]
        self.phys_to_log[a], self.phys_to_log[b] = lb, la
        if la != -1:
            self.log_to_phys[la] = b
        if lb != -1:
            self.log_to_phys[lb] = a

    def copy(self) -> "Assignment":
        new = Assignment.__new__(Assignment)
        new.log_to_phys = list(self.log_to_phys)
        new.phys_to_log = list(self.phys_to_log)
        return new

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Assignment)
            and self.log_to_phys == other.log_to_phys
            and self.phys_to_log == other.phys_to_log
        )

    def __repr__(self) -> str:
        return f"Assignment({self.log_to_phys})"


def default_assignment(num_logical: int, topology: Topology) -> Assignment:
    """Identity mapping: each logical qubit on the homonymous physical qubit."""
    if num_logical > topology.num_qubits:
        raise CapacityError(
            f"circuit uses {num_logical} qubits but the machine has only {topology.num_qubits}"
        )
    return Assignment(range(num_logical), topology.num_qubits)


def apply_swap(assignment: Assignment, pair: tuple[int, int], topology: Topology) -> Assignment:
    """Apply a swap on a topology edge, updating the assignment in place."""
    a, b = pair
    if not topology.adjacent(a, b):
        raise AdjacencyError(f"({a}, {b}) is not a coupling edge (distance {topology.dist[a][b]})")
    assignment.swap_phys(a, b)
    return assignment


class GateState(enum.Enum):
    NOT_SUPPORTED = "not_supported"
    SUPPORTED = "supported"
    EXECUTABLE = "executable"


def classify(
    gate: Gate,
    placed_ids: set[int],
    preds: dict[int, set[int]],
    assignment: Assignment,
    topology: Topology,
) -> GateState:
    """Readiness of an unplaced gate under the current assignment.

    Swaps are always executable; unary gates are executable as soon as their
    predecessors are placed; binary gates additionally need their operands on
    adjacent physical qubits.
    """
    if gate.kind == SWAP:
        return GateState.EXECUTABLE
    if any(p not in placed_ids for p in preds.get(gate.gate_id, ())):
        return GateState.NOT_SUPPORTED
    if gate.kind == UNARY:
        return GateState.EXECUTABLE
    qa, qb = gate.qubits
    if topology.dist[assignment.phys(qa)][assignment.phys(qb)] == 1:
        return GateState.EXECUTABLE
    return GateState.SUPPORTED


def front_distance_sum(
    assignment: Assignment, pairs: Iterable[tuple[int, int]], dist: list[list[int]]
) -> int:
    """Sum of physical distances over the front pairs (0 for an empty front)."""
    return sum(dist[assignment.phys(qa)][assignment.phys(qb)] for qa, qb in pairs)


def front_distance_min(
    assignment: Assignment, pairs: Iterable[tuple[int, int]], dist: list[list[int]]
) -> float:
    """Minimum physical distance over the front pairs; +inf for an empty front."""
    return min(
        (dist[assignment.phys(qa)][assignment.phys(qb)] for qa, qb in pairs),
        default=float("inf"),
    )
