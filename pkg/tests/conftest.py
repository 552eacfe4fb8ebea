import random

import pytest

from dirsh.circuit import BINARY, UNARY, Circuit, Gate
from dirsh.topology import Topology, builtin_tokyo


def path_topology(n: int) -> Topology:
    return Topology(n, [(i, i + 1) for i in range(n - 1)])


def ring_topology(n: int) -> Topology:
    return Topology(n, [(i, (i + 1) % n) for i in range(n)])


def grid_topology(rows: int, cols: int) -> Topology:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Topology(rows * cols, edges)


def random_circuit(num_qubits: int, num_gates: int, rng: random.Random, p_binary=0.6) -> Circuit:
    gates = []
    for i in range(num_gates):
        if num_qubits >= 2 and rng.random() < p_binary:
            a, b = rng.sample(range(num_qubits), 2)
            gates.append(Gate(i, BINARY, label="cx", qubits=(a, b)))
        else:
            gates.append(Gate(i, UNARY, label="h", qubits=(rng.randrange(num_qubits),)))
    return Circuit(num_qubits, gates)


def cx(gate_id: int, a: int, b: int) -> Gate:
    return Gate(gate_id, BINARY, label="cx", qubits=(a, b))


def h(gate_id: int, q: int) -> Gate:
    return Gate(gate_id, UNARY, label="h", qubits=(q,))


@pytest.fixture
def line3() -> Topology:
    return path_topology(3)


@pytest.fixture
def line4() -> Topology:
    return path_topology(4)


@pytest.fixture
def tokyo() -> Topology:
    return builtin_tokyo()
