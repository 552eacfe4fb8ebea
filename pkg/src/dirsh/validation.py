"""Independent feasibility checker for routed solutions.

Replays the placed sequence from the default assignment against the problem
definition only: gate conservation, precedence, adjacency of binary gates,
swap legality, per-qubit order, and metric agreement. Shares no code with
the generator heuristics so it can serve as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import SWAP, UNARY, Circuit
from .topology import Topology


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    gate_id: int | None = None

    def __str__(self) -> str:
        where = f" (gate {self.gate_id})" if self.gate_id is not None else ""
        return f"[{self.code}]{where} {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation]
    sw: int
    de: int

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return f"pass (sw={self.sw}, de={self.de})"
        return "\n".join(str(v) for v in self.violations)


def validate(circuit: Circuit, topology: Topology, solution) -> ValidationReport:
    """Check a routed solution against its source circuit and topology."""
    violations: list[Violation] = []

    log_to_phys = list(range(circuit.num_qubits))
    phys_to_log = [-1] * topology.num_qubits
    for q in range(circuit.num_qubits):
        phys_to_log[q] = q

    seen: dict[int, int] = {}
    position: dict[int, int] = {}
    phys_level = [-1] * topology.num_qubits
    orig_level: dict[int, int] = {}
    placement_on_qubit: dict[int, list[int]] = {}
    sw = 0
    de = -1

    for pos, g in enumerate(solution.placed):
        if g.kind == SWAP:
            a, b = g.phys
            if not (0 <= a < topology.num_qubits and 0 <= b < topology.num_qubits):
                violations.append(
                    Violation("swap-edge", f"swap at position {pos} uses qubits ({a}, {b}) "
                              f"outside the machine")
                )
                continue
            if topology.dist[a][b] != 1:
                violations.append(
                    Violation("swap-edge", f"swap at position {pos} acts on non-adjacent ({a}, {b})")
                )
            sw += 1
            lvl = 1 + max(phys_level[a], phys_level[b])
            phys_level[a] = phys_level[b] = lvl
            la, lb = phys_to_log[a], phys_to_log[b]
            phys_to_log[a], phys_to_log[b] = lb, la
            if la != -1:
                log_to_phys[la] = b
            if lb != -1:
                log_to_phys[lb] = a
        else:
            gid = g.gate_id
            if gid not in circuit.by_id:
                violations.append(Violation("unknown-gate", "not in the source circuit", gid))
                continue
            seen[gid] = seen.get(gid, 0) + 1
            for p in circuit.preds[gid]:
                if p not in position:
                    violations.append(
                        Violation("precedence", f"placed before its predecessor {p}", gid)
                    )
            phys = tuple(log_to_phys[q] for q in g.qubits)
            if g.phys is not None and tuple(g.phys) != phys:
                violations.append(
                    Violation("operand-mismatch", f"recorded {g.phys} but replay gives {phys}", gid)
                )
            if g.kind != UNARY:
                pa, pb = phys
                if topology.dist[pa][pb] != 1:
                    violations.append(
                        Violation(
                            "adjacency",
                            f"binary gate executes at distance {topology.dist[pa][pb]} "
                            f"({pa}, {pb})",
                            gid,
                        )
                    )
            deps = [phys_level[p] for p in phys]
            deps.extend(orig_level[p] for p in circuit.preds[gid] if p in orig_level)
            lvl = 1 + max(deps, default=-1)
            for p in phys:
                phys_level[p] = lvl
            orig_level[gid] = lvl
            position[gid] = pos
            for q in g.qubits:
                placement_on_qubit.setdefault(q, []).append(gid)
        de = max(de, lvl)

    for gid in circuit.by_id:
        if gid not in seen:
            violations.append(Violation("missing-gate", "never placed", gid))
    for gid, count in seen.items():
        if count > 1:
            violations.append(Violation("duplicate-gate", f"placed {count} times", gid))

    # Per logical qubit the placement order must match circuit order.
    for q in range(circuit.num_qubits):
        expected = circuit.qubit_order(q)
        got = placement_on_qubit.get(q, [])
        if got != [gid for gid in expected if gid in position]:
            violations.append(
                Violation("qubit-order", f"qubit {q}: placed {got}, circuit order {expected}")
            )

    if sw != solution.sw:
        violations.append(Violation("metric-sw", f"recorded sw={solution.sw}, recomputed {sw}"))
    if de != solution.de:
        violations.append(Violation("metric-de", f"recorded de={solution.de}, recomputed {de}"))

    return ValidationReport(violations=violations, sw=sw, de=de)


def recompute_metrics(solution, circuit: Circuit | None = None) -> tuple[int, int]:
    """(sw, de) recomputed by replay: each gate depends on the prior gates
    touching its physical qubits, plus its source-circuit predecessors."""
    phys_level: dict[int, int] = {}
    orig_level: dict[int, int] = {}
    sw = 0
    de = -1
    for g in solution.placed:
        if g.phys is None:
            raise ValueError(f"gate {g.gate_id} has no physical operands")
        if g.kind == SWAP:
            sw += 1
        deps = [phys_level.get(p, -1) for p in g.phys]
        if circuit is not None and g.kind != SWAP:
            deps.extend(orig_level[p] for p in circuit.preds.get(g.gate_id, ()) if p in orig_level)
        lvl = 1 + max(deps, default=-1)
        for p in g.phys:
            phys_level[p] = lvl
        if g.kind != SWAP:
            orig_level[g.gate_id] = lvl
        de = max(de, lvl)
    return sw, de
