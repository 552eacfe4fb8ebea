"""Coupling graph of the target machine, with cached all-pairs distances.

The graph is undirected and must be connected. One swap gate per edge forms
the swap set used by the router.
"""

from __future__ import annotations

import json
from collections import deque
from pathlib import Path
from typing import Iterable

from .circuit import SWAP, Gate
from .errors import TopologyError

# ibmq_tokyo: 20 qubits, 43 undirected couplings (86 directed connections).
TOKYO_EDGES: tuple[tuple[int, int], ...] = (
    (0, 1), (0, 5), (1, 2), (1, 6), (1, 7), (2, 3), (2, 6), (2, 7),
    (3, 4), (3, 8), (3, 9), (4, 8), (4, 9), (5, 6), (5, 10), (5, 11),
    (6, 7), (6, 10), (6, 11), (7, 8), (7, 12), (7, 13), (8, 9), (8, 12),
    (8, 13), (9, 14), (10, 11), (10, 15), (11, 12), (11, 16), (11, 17),
    (12, 13), (12, 16), (12, 17), (13, 14), (13, 18), (13, 19), (14, 18),
    (14, 19), (15, 16), (16, 17), (17, 18), (18, 19),
)


class Topology:
    """Undirected physical-qubit graph. Immutable after construction."""

    def __init__(self, num_qubits: int, edges: Iterable[tuple[int, int]]):
        self.num_qubits = num_qubits
        normalized = []
        seen = set()
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise TopologyError(f"self-loop edge ({a}, {b})")
            if not (0 <= a < num_qubits and 0 <= b < num_qubits):
                raise TopologyError(f"edge ({a}, {b}) outside [0, {num_qubits})")
            pair = (min(a, b), max(a, b))
            if pair in seen:
                raise TopologyError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(normalized))

        self.adjacency: list[list[int]] = [[] for _ in range(num_qubits)]
        for a, b in self.edges:
            self.adjacency[a].append(b)
            self.adjacency[b].append(a)
        for nbrs in self.adjacency:
            nbrs.sort()

        comps = self._components()
        if len(comps) != 1:
            raise TopologyError(f"graph is disconnected; components: {comps}")

        self.dist: list[list[int]] = all_pairs_distance(num_qubits, self.adjacency)
        # One swap gate per edge; instances are shared templates, identity of
        # a placed swap is positional in the solution sequence.
        self.swap_gates: tuple[Gate, ...] = tuple(
            Gate(gate_id=-(i + 1), kind=SWAP, label="swap", phys=pair)
            for i, pair in enumerate(self.edges)
        )

    def _components(self) -> list[list[int]]:
        unseen = set(range(self.num_qubits))
        comps = []
        while unseen:
            start = min(unseen)
            comp = [start]
            unseen.discard(start)
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adjacency[v]:
                    if w in unseen:
                        unseen.discard(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacent(self, a: int, b: int) -> bool:
        return self.dist[a][b] == 1

    def neighbors(self, a: int) -> list[int]:
        return self.adjacency[a]

    @classmethod
    def from_json(cls, source) -> "Topology":
        """Load from a coupling-map JSON object, path, or JSON text.

        Schema: {"num_qubits": int, "edges": [[a, b], ...]}; pairs are
        unordered and duplicates are rejected.
        """
        if isinstance(source, dict):
            obj = source
        else:
            path = Path(source)
            text = path.read_text() if path.exists() else str(source)
            obj = json.loads(text)
        if "num_qubits" not in obj or "edges" not in obj:
            raise TopologyError('coupling map needs "num_qubits" and "edges" fields')
        return cls(int(obj["num_qubits"]), [tuple(e) for e in obj["edges"]])

    def __repr__(self) -> str:
        return f"Topology(num_qubits={self.num_qubits}, edges={self.num_edges})"


def all_pairs_distance(num_qubits: int, adjacency: list[list[int]]) -> list[list[int]]:
    """Unweighted shortest-path hop counts via one BFS per source."""
    dist = []
    for src in range(num_qubits):
        row = [-1] * num_qubits
        row[src] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if row[w] < 0:
                    row[w] = row[v] + 1
                    queue.append(w)
        if any(d < 0 for d in row):
            raise TopologyError("graph is disconnected")
        dist.append(row)
    return dist


def builtin_tokyo() -> Topology:
    """The ibmq_tokyo coupling graph (20 qubits, 86 directed connections)."""
    topo = Topology(20, TOKYO_EDGES)
    assert 2 * topo.num_edges == 86
    return topo


def load_coupling(spec: str) -> Topology:
    """Resolve a CLI coupling argument: builtin name or a JSON file path."""
    if spec == "tokyo":
        return builtin_tokyo()
    return Topology.from_json(spec)
