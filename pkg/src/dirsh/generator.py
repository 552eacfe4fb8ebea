"""Randomized construction of one routed solution for a chunk.

Each step gathers the candidate gates (executable originals plus the swap
set), scores them with the front-set distance heuristics, prunes unpromising
swaps, and draws one candidate by roulette wheel with bandit-chosen
exponents. With low probability a construction restarts from the bottom half
of the incumbent solution instead of from scratch.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

from .circuit import BINARY, SWAP, UNARY, Circuit, Gate
from .placement import Assignment, front_distance_min, front_distance_sum
from .topology import Topology

logger = logging.getLogger(__name__)

WEIGHT_FLOOR = 1e-6
RESTART_PROB = 0.1
INF = float("inf")


@dataclass
class Solution:
    """A routed gate sequence: originals (with physical operands resolved at
    placement time) interleaved with inserted swaps.

    ``levels`` is positional, parallel to ``placed``. Swap entries may share
    template gate objects; a placed swap's identity is its position.
    """

    placed: list[Gate]
    levels: list[int]
    final_assignment: Assignment
    sw: int
    de: int

    def objective(self, mode: str) -> tuple[int, int]:
        """(primary, secondary) metric pair for incumbent comparison."""
        return (self.sw, self.de) if mode == "swaps" else (self.de, self.sw)


class Candidate(NamedTuple):
    gate: Gate
    d_sum: float
    d_min: float


def default_step_cap(chunk_gates: int, num_physical: int) -> int:
    """Placement cap guarding against runaway swap insertion."""
    return 20 * chunk_gates + 50 * num_physical


def evaluate_heuristics(
    gate: Gate,
    assignment: Assignment,
    front_pairs: list[tuple[int, int]],
    dist: list[list[int]],
) -> tuple[float, float]:
    """From-scratch (d_sum, d_min) for one candidate.

    Swaps are scored under the assignment they would produce; unary gates
    score (D_sum, 1); executable binary gates score (D_sum - 1, 1) since
    executing them removes a distance-1 pair from the front.
    """
    if gate.kind == SWAP:
        trial = assignment.copy()
        trial.swap_phys(*gate.phys)
        return (
            front_distance_sum(trial, front_pairs, dist),
            front_distance_min(trial, front_pairs, dist),
        )
    d_sum = front_distance_sum(assignment, front_pairs, dist)
    if gate.kind == BINARY:
        return (d_sum - 1, 1.0)
    return (d_sum, 1.0)


def prune_swaps(
    candidates: list[Candidate], d_sum_cur: float, d_min_cur: float, strict: bool = False
) -> list[Candidate]:
    """Drop swap candidates that neither improve D_sum nor hold both metrics
    steady. Non-swap candidates are never pruned.

    ``strict`` switches the equality branch to strict D_min improvement.
    """
    kept = []
    for c in candidates:
        if c.gate.kind != SWAP:
            kept.append(c)
        elif c.d_sum < d_sum_cur:
            kept.append(c)
        elif c.d_sum == d_sum_cur and (
            c.d_min < d_min_cur if strict else c.d_min == d_min_cur
        ):
            kept.append(c)
    return kept


def _normalize(values: list[float]) -> list[float]:
    # Min-max into [0, 1]; +inf maps to 1, a degenerate range maps to 0.
    finite = [v for v in values if v != INF]
    lo = min(finite, default=0.0)
    hi = max(finite, default=0.0)
    span = hi - lo
    return [1.0 if v == INF else ((v - lo) / span if span else 0.0) for v in values]


def selection_weights(candidates: list[Candidate], beta1: float, beta2: float) -> list[float]:
    """Unnormalized roulette weights (1 - d_sum_bar + eps)^b1 (1 - d_min_bar + eps)^b2.

    The epsilon floor keeps the worst candidate at nonzero mass so the wheel
    total stays positive even when every candidate ties at the worst value.
    """
    ds_bar = _normalize([c.d_sum for c in candidates])
    dm_bar = _normalize([c.d_min for c in candidates])
    return [
        (1.0 - ds + WEIGHT_FLOOR) ** beta1 * (1.0 - dm + WEIGHT_FLOOR) ** beta2
        for ds, dm in zip(ds_bar, dm_bar)
    ]


def select_gate(candidates: list[Candidate], beta1: float, beta2: float, rng) -> Candidate:
    """Roulette-wheel draw over normalized heuristic weights."""
    if not candidates:
        raise RuntimeError("empty candidate set reached the roulette wheel")
    if len(candidates) == 1:
        return candidates[0]
    weights = selection_weights(candidates, beta1, beta2)
    r = rng.random() * sum(weights)
    acc = 0.0
    for c, w in zip(candidates, weights):
        acc += w
        if r < acc:
            return c
    return candidates[-1]


def replay_levels(placed: list[Gate], num_physical: int) -> list[int]:
    """Levels of an already-routed sequence from physical last-writer chains."""
    phys_level = [-1] * num_physical
    levels = []
    for g in placed:
        lvl = 1 + max(phys_level[p] for p in g.phys)
        levels.append(lvl)
        for p in g.phys:
            phys_level[p] = lvl
    return levels


class _Builder:
    """Mutable state of one solution construction over a chunk."""

    def __init__(self, chunk: Circuit, topology: Topology, initial_assignment: Assignment):
        self.chunk = chunk
        self.topo = topology
        self.dist = topology.dist
        self.assign = initial_assignment.copy()

        self.indeg = {gid: len(ps) for gid, ps in chunk.preds.items()}
        self.ready_unary: dict[int, bool] = {}
        self.front: dict[int, tuple[int, int]] = {}
        self.front_by_logical: dict[int, set[int]] = {}
        self.d_sum = 0
        for g in chunk.gates:
            if self.indeg[g.gate_id] == 0:
                self._activate(g)

        self.placed: list[Gate] = []
        self.levels: list[int] = []
        self.placed_ids: set[int] = set()
        self.phys_level = [-1] * topology.num_qubits
        self.num_swaps = 0

    # -- front bookkeeping -------------------------------------------------

    def _activate(self, g: Gate) -> None:
        if g.kind == UNARY:
            self.ready_unary[g.gate_id] = True
        else:
            qa, qb = g.qubits
            self.front[g.gate_id] = (qa, qb)
            self.front_by_logical.setdefault(qa, set()).add(g.gate_id)
            self.front_by_logical.setdefault(qb, set()).add(g.gate_id)
            self.d_sum += self.pair_dist(qa, qb)

    def pair_dist(self, qa: int, qb: int) -> int:
        return self.dist[self.assign.phys(qa)][self.assign.phys(qb)]

    def front_pairs(self) -> list[tuple[int, int]]:
        return list(self.front.values())

    def d_min(self) -> float:
        return min((self.pair_dist(qa, qb) for qa, qb in self.front.values()), default=INF)

    # -- candidate evaluation ----------------------------------------------

    def swap_heuristics(self, a: int, b: int) -> tuple[int, float]:
        """(d_sum, d_min) under the assignment produced by swap (a, b),
        computed incrementally from the pairs touching the moved qubits."""
        la = self.assign.logical_at(a)
        lb = self.assign.logical_at(b)
        affected = set()
        if la != -1:
            affected |= self.front_by_logical.get(la, set())
        if lb != -1:
            affected |= self.front_by_logical.get(lb, set())

        def new_phys(q: int) -> int:
            if q == la:
                return b
            if q == lb:
                return a
            return self.assign.phys(q)

        d_sum_new = self.d_sum
        changed: dict[int, int] = {}
        for gid in affected:
            qa, qb = self.front[gid]
            d_new = self.dist[new_phys(qa)][new_phys(qb)]
            d_sum_new += d_new - self.pair_dist(qa, qb)
            changed[gid] = d_new
        d_min_new = min(
            (changed.get(gid, self.pair_dist(qa, qb)) for gid, (qa, qb) in self.front.items()),
            default=INF,
        )
        return d_sum_new, d_min_new

    def executable_candidates(self) -> list[Candidate]:
        cands = [
            Candidate(self.chunk.by_id[gid], float(self.d_sum), 1.0)
            for gid in self.ready_unary
        ]
        for gid, (qa, qb) in self.front.items():
            if self.pair_dist(qa, qb) == 1:
                cands.append(Candidate(self.chunk.by_id[gid], float(self.d_sum - 1), 1.0))
        return cands

    def swap_candidates(self) -> list[Candidate]:
        return [
            Candidate(g, *self.swap_heuristics(*g.phys)) for g in self.topo.swap_gates
        ]

    def tentative_level(self, gate: Gate) -> int:
        phys = gate.phys if gate.kind == SWAP else tuple(
            self.assign.phys(q) for q in gate.qubits
        )
        return 1 + max(self.phys_level[p] for p in phys)

    # -- placement ----------------------------------------------------------

    def place(self, gate: Gate) -> int:
        if gate.kind == SWAP:
            return self._place_swap(gate)
        return self._place_original(gate)

    def _place_original(self, gate: Gate) -> int:
        gid = gate.gate_id
        phys = tuple(self.assign.phys(q) for q in gate.qubits)
        level = 1 + max(self.phys_level[p] for p in phys)
        self.placed.append(gate.routed(phys))
        self.levels.append(level)
        self.placed_ids.add(gid)
        for p in phys:
            self.phys_level[p] = level
        if gate.kind == UNARY:
            del self.ready_unary[gid]
        else:
            qa, qb = self.front.pop(gid)
            self.front_by_logical[qa].discard(gid)
            self.front_by_logical[qb].discard(gid)
            self.d_sum -= self.pair_dist(qa, qb)
        for s in self.chunk.succs[gid]:
            self.indeg[s] -= 1
            if self.indeg[s] == 0:
                self._activate(self.chunk.by_id[s])
        return level

    def _place_swap(self, gate: Gate) -> int:
        a, b = gate.phys
        self.d_sum, _ = self.swap_heuristics(a, b)
        self.assign.swap_phys(a, b)
        level = 1 + max(self.phys_level[a], self.phys_level[b])
        self.placed.append(gate)
        self.levels.append(level)
        self.phys_level[a] = self.phys_level[b] = level
        self.num_swaps += 1
        return level

    def complete(self) -> bool:
        return len(self.placed_ids) == len(self.chunk.gates)

    def finish(self) -> Solution:
        return Solution(
            placed=self.placed,
            levels=self.levels,
            final_assignment=self.assign,
            sw=self.num_swaps,
            de=max(self.levels, default=-1),
        )


def _gather_candidates(
    builder: _Builder, objective: str, t: int, strict_prune: bool
) -> tuple[list[Candidate], int]:
    """Candidate set for the next decision; in depth mode advances the layer
    index until some gate fits."""
    execs = builder.executable_candidates()
    swaps = builder.swap_candidates()
    d_min_cur = builder.d_min()
    pruned = prune_swaps(swaps, builder.d_sum, d_min_cur, strict=strict_prune)

    if objective != "depth":
        cands = execs + pruned
        if not cands:
            logger.debug("swap pruning emptied the candidate set; using unpruned swaps")
            cands = execs + swaps
        return cands, t

    while True:
        cands = [c for c in execs + pruned if builder.tentative_level(c.gate) <= t]
        if cands:
            return cands, t
        unpruned = [c for c in execs + swaps if builder.tentative_level(c.gate) <= t]
        if unpruned:
            logger.debug("swap pruning emptied layer %d; using unpruned swaps", t)
            return unpruned, t
        t += 1


def generate_solution(
    chunk: Circuit,
    topology: Topology,
    initial_assignment: Assignment,
    s_best: Solution | None,
    bandit,
    rng,
    *,
    objective: str = "swaps",
    restart_prob: float = RESTART_PROB,
    strict_prune: bool = False,
    step_cap: int | None = None,
) -> tuple[Solution | None, list[int]]:
    """Build one complete solution for the chunk.

    Returns (solution, pulled arm indices); the solution is None when the
    step cap was exceeded and the attempt must be discarded.
    """
    if step_cap is None:
        step_cap = default_step_cap(len(chunk.gates), topology.num_qubits)

    builder = _Builder(chunk, topology, initial_assignment)
    t = 0
    if s_best is not None and rng.random() < restart_prob:
        # Restart from the bottom half of the incumbent: levels are formula
        # levels, so the prefix is downward-closed and replays legally.
        cutoff = 0.5 * s_best.de
        for g, lvl in zip(s_best.placed, s_best.levels):
            if lvl <= cutoff:
                builder.place(g)
        t = max(builder.levels, default=0)

    pulled: list[int] = []
    steps = len(builder.placed)
    while not builder.complete():
        if steps >= step_cap:
            return None, pulled
        candidates, t = _gather_candidates(builder, objective, t, strict_prune)
        arm_idx, (beta1, beta2) = bandit.select_arm()
        pulled.append(arm_idx)
        choice = select_gate(candidates, beta1, beta2, rng)
        builder.place(choice.gate)
        steps += 1

    return builder.finish(), pulled
