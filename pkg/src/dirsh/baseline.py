"""Deterministic greedy router and an exhaustive optimal oracle for tiny
instances. Both are comparison anchors, not production paths."""

from __future__ import annotations

import itertools

from .circuit import BINARY, SWAP, Circuit, Gate
from .generator import Solution, replay_levels
from .placement import default_assignment
from .topology import Topology

ORACLE_MAX_QUBITS = 5
ORACLE_MAX_BINARY = 4
ORACLE_MAX_SWAP_CAP = 4


def _topological_order(circuit: Circuit) -> list[Gate]:
    indeg = {gid: len(ps) for gid, ps in circuit.preds.items()}
    order_index = {g.gate_id: i for i, g in enumerate(circuit.gates)}
    ready = sorted((gid for gid, d in indeg.items() if d == 0), key=order_index.get)
    out = []
    while ready:
        gid = ready.pop(0)
        out.append(circuit.by_id[gid])
        for s in sorted(circuit.succs[gid], key=order_index.get):
            indeg[s] -= 1
            if indeg[s] == 0:
                ready.append(s)
    ready.sort(key=order_index.get)
    return out


def greedy_route(circuit: Circuit, topology: Topology) -> Solution:
    """Route gates in fixed topological order, walking one operand of each
    non-adjacent binary gate along a shortest path (lowest-index tie-break)."""
    assign = default_assignment(circuit.num_qubits, topology)
    placed: list[Gate] = []
    sw = 0
    swap_by_edge = {g.phys: g for g in topology.swap_gates}

    for g in _topological_order(circuit):
        if g.kind == BINARY:
            qa, qb = g.qubits
            while topology.dist[assign.phys(qa)][assign.phys(qb)] > 1:
                a, b = assign.phys(qa), assign.phys(qb)
                step = min(n for n in topology.neighbors(a) if topology.dist[n][b] < topology.dist[a][b])
                placed.append(swap_by_edge[(min(a, step), max(a, step))])
                assign.swap_phys(a, step)
                sw += 1
        placed.append(g.routed(assign.phys(q) for q in g.qubits))

    levels = replay_levels(placed, topology.num_qubits)
    return Solution(
        placed=placed,
        levels=levels,
        final_assignment=assign,
        sw=sw,
        de=max(levels, default=-1),
    )


def _check_oracle_bounds(circuit: Circuit, topology: Topology, swap_budget_cap: int) -> None:
    binary = sum(1 for g in circuit.gates if g.kind == BINARY)
    if topology.num_qubits > ORACLE_MAX_QUBITS:
        raise ValueError(f"oracle refuses machines larger than {ORACLE_MAX_QUBITS} qubits")
    if binary > ORACLE_MAX_BINARY:
        raise ValueError(f"oracle refuses more than {ORACLE_MAX_BINARY} binary gates")
    if swap_budget_cap > ORACLE_MAX_SWAP_CAP:
        raise ValueError(f"oracle refuses swap caps above {ORACLE_MAX_SWAP_CAP}")


def exhaustive_optimal(
    circuit: Circuit,
    topology: Topology,
    objective: str = "swaps",
    swap_budget_cap: int = ORACLE_MAX_SWAP_CAP,
) -> int:
    """Minimum swap count (or depth) over all feasible solutions, by
    iterative-deepening enumeration. Only for tiny, bounded instances."""
    _check_oracle_bounds(circuit, topology, swap_budget_cap)
    if objective == "swaps":
        return _optimal_swaps(circuit, topology, swap_budget_cap)
    if objective == "depth":
        return _optimal_depth(circuit, topology, swap_budget_cap)
    raise ValueError(f"unknown objective {objective!r}")


def _optimal_swaps(circuit: Circuit, topology: Topology, cap: int) -> int:
    # Placing an executable original never changes the assignment, so the
    # search closes over executables and branches only on swaps.
    init_assign = tuple(default_assignment(circuit.num_qubits, topology).log_to_phys)
    all_ids = frozenset(circuit.by_id)

    def closure(assign: tuple[int, ...], placed: frozenset[int]) -> frozenset[int]:
        placed = set(placed)
        changed = True
        while changed:
            changed = False
            for g in circuit.gates:
                gid = g.gate_id
                if gid in placed or any(p not in placed for p in circuit.preds[gid]):
                    continue
                if g.kind == BINARY:
                    qa, qb = g.qubits
                    if topology.dist[assign[qa]][assign[qb]] != 1:
                        continue
                placed.add(gid)
                changed = True
        return frozenset(placed)

    for budget in range(cap + 1):
        seen: set[tuple] = set()

        def search(assign: tuple[int, ...], placed: frozenset[int], left: int) -> bool:
            placed = closure(assign, placed)
            if placed == all_ids:
                return True
            if left == 0:
                return False
            key = (assign, placed, left)
            if key in seen:
                return False
            seen.add(key)
            for a, b in topology.edges:
                new = list(assign)
                for q, p in enumerate(new):
                    if p == a:
                        new[q] = b
                    elif p == b:
                        new[q] = a
                if search(tuple(new), placed, left - 1):
                    return True
            return False

        if search(init_assign, frozenset(), budget):
            return budget
    raise ValueError(f"no feasible solution within {cap} swaps")


def _optimal_depth(circuit: Circuit, topology: Topology, cap: int) -> int:
    if not circuit.gates:
        return -1
    init_assign = tuple(default_assignment(circuit.num_qubits, topology).log_to_phys)
    all_ids = frozenset(circuit.by_id)
    n = topology.num_qubits

    for target in itertools.count(0):
        if target > 2 * (len(circuit.gates) + cap) + n:
            raise ValueError(f"no feasible solution within {cap} swaps")
        seen: set[tuple] = set()

        def search(
            assign: tuple[int, ...],
            placed: frozenset[int],
            phys_level: tuple[int, ...],
            swaps_left: int,
        ) -> bool:
            if placed == all_ids:
                return True
            key = (assign, placed, phys_level, swaps_left)
            if key in seen:
                return False
            seen.add(key)
            for g in circuit.gates:
                gid = g.gate_id
                if gid in placed or any(p not in placed for p in circuit.preds[gid]):
                    continue
                phys = tuple(assign[q] for q in g.qubits)
                if g.kind == BINARY and topology.dist[phys[0]][phys[1]] != 1:
                    continue
                lvl = 1 + max(phys_level[p] for p in phys)
                if lvl > target:
                    continue
                new_levels = list(phys_level)
                for p in phys:
                    new_levels[p] = lvl
                if search(assign, placed | {gid}, tuple(new_levels), swaps_left):
                    return True
            if swaps_left > 0:
                for a, b in topology.edges:
                    lvl = 1 + max(phys_level[a], phys_level[b])
                    if lvl > target:
                        continue
                    new = list(assign)
                    for q, p in enumerate(new):
                        if p == a:
                            new[q] = b
                        elif p == b:
                            new[q] = a
                    new_levels = list(phys_level)
                    new_levels[a] = new_levels[b] = lvl
                    if search(tuple(new), placed, tuple(new_levels), swaps_left - 1):
                        return True
            return False

        if search(init_assign, frozenset(), (-1,) * n, cap):
            return target
