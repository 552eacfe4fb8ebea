"""Gate-level circuit model: DAG of gates, level computation, chunk splitting.

A circuit is a set of unary/binary gates over logical qubits plus an acyclic
precedence relation. Levels follow the longest-path rule: gates with no
predecessor sit at level 0, every other gate at 1 + max predecessor level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable

from .errors import CircuitError

UNARY = "unary"
BINARY = "binary"
SWAP = "swap"


@dataclass(frozen=True)
class Gate:
    """One gate. Originals carry logical operands; inserted swaps carry a
    physical pair. Routed originals carry both (``phys`` filled at placement).
    """

    gate_id: int
    kind: str
    label: str = ""
    params: str = ""
    qubits: tuple[int, ...] = ()
    phys: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind == UNARY and len(self.qubits) != 1:
            raise CircuitError(f"unary gate {self.gate_id} needs exactly 1 logical operand")
        if self.kind == BINARY and (len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]):
            raise CircuitError(f"binary gate {self.gate_id} needs 2 distinct logical operands")
        if self.kind == SWAP and (
            self.phys is None or len(self.phys) != 2 or self.phys[0] == self.phys[1]
        ):
            raise CircuitError(f"swap gate {self.gate_id} needs 2 distinct physical operands")
        if self.kind not in (UNARY, BINARY, SWAP):
            raise CircuitError(f"unknown gate kind {self.kind!r}")

    def routed(self, phys: Iterable[int]) -> "Gate":
        """Copy of this gate with physical operands attached."""
        return replace(self, phys=tuple(phys))


class Circuit:
    """Logical circuit: gates plus acyclic precedence and per-gate levels.

    If ``precedence`` is omitted it is built from the gate list order: per
    logical qubit, each gate precedes the next gate touching that qubit.
    A supplied precedence must contain those per-qubit chain edges (extra
    transitive edges are accepted; levels are invariant under them).
    """

    def __init__(
        self,
        num_qubits: int,
        gates: Iterable[Gate],
        precedence: Iterable[tuple[int, int]] | None = None,
    ):
        self.num_qubits = num_qubits
        self.gates: list[Gate] = list(gates)
        self.by_id = {g.gate_id: g for g in self.gates}
        if len(self.by_id) != len(self.gates):
            raise CircuitError("duplicate gate ids")
        for g in self.gates:
            if g.kind == SWAP:
                raise CircuitError(f"gate {g.gate_id}: source circuits contain no inserted swaps")
            for q in g.qubits:
                if not 0 <= q < num_qubits:
                    raise CircuitError(f"gate {g.gate_id}: qubit {q} outside [0, {num_qubits})")

        if precedence is None:
            precedence = qubit_chain_precedence(self.gates)
        self.precedence: frozenset[tuple[int, int]] = frozenset(
            (int(a), int(b)) for a, b in precedence
        )
        self.preds: dict[int, set[int]] = {g.gate_id: set() for g in self.gates}
        self.succs: dict[int, set[int]] = {g.gate_id: set() for g in self.gates}
        for a, b in self.precedence:
            if a not in self.by_id or b not in self.by_id:
                raise CircuitError(f"precedence edge ({a}, {b}) references unknown gate")
            self.preds[b].add(a)
            self.succs[a].add(b)

        self.levels = compute_levels(self)
        self._check_per_qubit_chains()

    def _check_per_qubit_chains(self):
        # Per logical qubit the touching gates must be totally ordered; we
        # require the direct chain edges between level-consecutive gates.
        on_qubit: dict[int, list[Gate]] = {}
        order = {g.gate_id: i for i, g in enumerate(self.gates)}
        for g in self.gates:
            for q in g.qubits:
                on_qubit.setdefault(q, []).append(g)
        for q, gs in on_qubit.items():
            gs.sort(key=lambda g: (self.levels[g.gate_id], order[g.gate_id]))
            for a, b in zip(gs, gs[1:]):
                if (a.gate_id, b.gate_id) not in self.precedence:
                    raise CircuitError(
                        f"gates {a.gate_id} and {b.gate_id} both act on qubit {q} "
                        "but are not ordered by precedence"
                    )

    def qubit_order(self, q: int) -> list[int]:
        """Gate ids acting on logical qubit ``q`` in circuit order."""
        order = {g.gate_id: i for i, g in enumerate(self.gates)}
        ids = [g.gate_id for g in self.gates if q in g.qubits]
        ids.sort(key=lambda gid: (self.levels[gid], order[gid]))
        return ids

    def __len__(self) -> int:
        return len(self.gates)

    def __repr__(self) -> str:
        return f"Circuit(num_qubits={self.num_qubits}, gates={len(self.gates)})"


def qubit_chain_precedence(gates: Iterable[Gate]) -> set[tuple[int, int]]:
    """Precedence from list order: per qubit, each gate precedes the next one."""
    last: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    for g in gates:
        for q in g.qubits:
            if q in last:
                edges.add((last[q], g.gate_id))
            last[q] = g.gate_id
    return edges


def compute_levels(circuit: Circuit) -> dict[int, int]:
    """Longest-path level per gate; raises on a precedence cycle."""
    indeg = {gid: len(ps) for gid, ps in circuit.preds.items()}
    ready = [gid for gid, d in indeg.items() if d == 0]
    levels: dict[int, int] = {}
    while ready:
        gid = ready.pop()
        ps = circuit.preds[gid]
        levels[gid] = 1 + max(levels[p] for p in ps) if ps else 0
        for s in circuit.succs[gid]:
            indeg[s] -= 1
            if indeg[s] == 0:
                ready.append(s)
    if len(levels) < len(circuit.gates):
        raise CircuitError(f"precedence cycle through edge {_cycle_edge(circuit, levels)}")
    return levels


def _cycle_edge(circuit: Circuit, done: dict[int, int]) -> tuple[int, int]:
    # Walk predecessors among unfinished gates until a repeat closes a cycle.
    stuck = next(gid for gid in circuit.by_id if gid not in done)
    seen: list[int] = []
    cur = stuck
    while cur not in seen:
        seen.append(cur)
        cur = next(p for p in circuit.preds[cur] if p not in done)
    return (cur, seen[-1])


def depth(obj) -> int:
    """Max gate level; -1 for an empty gate set (documented sentinel).

    Accepts anything exposing ``levels`` as a mapping or sequence of ints.
    """
    levels = obj.levels
    values = levels.values() if isinstance(levels, dict) else levels
    return max(values, default=-1)


@dataclass(frozen=True)
class ChunkPlan:
    """Level-contiguous split of a circuit. Empty trailing chunks are dropped;
    ``effective`` is the surviving chunk count."""

    chunks: tuple[Circuit, ...]
    boundary_levels: tuple[int, ...]
    requested: int

    @property
    def effective(self) -> int:
        return len(self.chunks)


def split_chunks(circuit: Circuit, n_c: int) -> ChunkPlan:
    """Split into ``n_c`` level bands of span ceil(layers / n_c); the last
    chunk takes all remaining gates."""
    if n_c < 1:
        raise ValueError(f"chunk count must be >= 1, got {n_c}")
    if not circuit.gates:
        return ChunkPlan((), (), n_c)

    layers = depth(circuit) + 1
    span = math.ceil(layers / n_c)
    buckets: list[list[Gate]] = [[] for _ in range(n_c)]
    for g in circuit.gates:
        j = min(circuit.levels[g.gate_id] // span, n_c - 1)
        buckets[j].append(g)

    chunks = []
    cuts = []
    for j, bucket in enumerate(buckets):
        if not bucket:
            continue
        ids = {g.gate_id for g in bucket}
        edges = [(a, b) for a, b in circuit.precedence if a in ids and b in ids]
        chunks.append(Circuit(circuit.num_qubits, bucket, edges))
        cuts.append(j * span)
    return ChunkPlan(tuple(chunks), tuple(cuts), n_c)
