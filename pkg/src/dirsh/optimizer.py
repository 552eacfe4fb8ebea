"""Chunked, time-boxed optimization: per-chunk incumbent search, solution
concatenation, and assignment propagation across chunk boundaries."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .bandit import DEFAULT_BETAS, UcbBandit, beta_grid
from .circuit import SWAP, Circuit, split_chunks
from .generator import Solution, default_step_cap, generate_solution, replay_levels
from .placement import Assignment, default_assignment
from .topology import Topology

# (upper bound exclusive, chunk count); None closes the last band.
CHUNK_BANDS = ((500, 1), (1000, 10), (10000, 20), (20000, 50), (50000, 100), (None, 150))

OBJECTIVES = ("swaps", "depth")


def chunk_count(num_gates: int, override: int | None = None) -> int:
    """Chunk count from circuit size; an explicit override wins."""
    if override is not None:
        if override < 1:
            raise ValueError(f"chunk override must be >= 1, got {override}")
        return override
    if num_gates < 0:
        raise ValueError("gate count must be nonnegative")
    for bound, n_c in CHUNK_BANDS:
        if bound is None or num_gates < bound:
            return n_c
    raise AssertionError("unreachable")


def chunk_budget(budget_seconds: float, n_chunks: int) -> float:
    """Per-chunk time slice floor(T / n_c), floored at one second."""
    return max(1.0, float(math.floor(budget_seconds / max(1, n_chunks))))


@dataclass
class RunConfig:
    """Everything that determines one optimization run.

    ``generation_cap`` switches from wall-clock budgeting to a fixed number
    of generations per chunk, making runs reproducible byte for byte.
    """

    objective: str = "swaps"
    budget_seconds: float = 10.0
    seed: int = 0
    chunk_override: int | None = None
    restart_prob: float = 0.1
    exploration_c: float = math.sqrt(2.0)
    beta_values: tuple[float, ...] = DEFAULT_BETAS
    strict_prune: bool = False
    step_cap: int | None = None
    generation_cap: int | None = None
    carry_forward: bool = False

    def validate(self) -> None:
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}, got {self.objective!r}")
        if self.budget_seconds <= 0:
            raise ValueError("time budget must be positive")
        if not 0.0 <= self.restart_prob <= 1.0:
            raise ValueError("restart probability must lie in [0, 1]")
        if self.generation_cap is not None and self.generation_cap < 1:
            raise ValueError("generation cap must be >= 1")
        if not self.beta_values:
            raise ValueError("beta grid must be nonempty")


@dataclass
class ChunkStats:
    index: int
    num_gates: int
    generations: int = 0
    discards: int = 0
    best_sw: int = 0
    best_de: int = -1
    elapsed: float = 0.0
    max_attempt_seconds: float = 0.0
    # Primary objective of the incumbent after each completed generation.
    incumbent_trace: list[int] = field(default_factory=list)


@dataclass
class RunReport:
    solution: Solution
    chunk_stats: list[ChunkStats]
    effective_chunks: int
    requested_chunks: int
    wall_seconds: float
    config: RunConfig

    @property
    def generations(self) -> int:
        return sum(s.generations for s in self.chunk_stats)

    @property
    def discards(self) -> int:
        return sum(s.discards for s in self.chunk_stats)


def optimize_chunk(
    chunk: Circuit,
    topology: Topology,
    assignment: Assignment,
    delta_t: float,
    config: RunConfig,
    rng: random.Random,
    index: int = 0,
) -> tuple[Solution, ChunkStats]:
    """Repeatedly generate solutions for one chunk, keeping the best under
    lexicographic (primary, secondary) comparison. At least one generation
    attempt is always made; discarded attempts settle with zero reward."""
    bandit = UcbBandit(beta_grid(config.beta_values), config.exploration_c)
    stats = ChunkStats(index=index, num_gates=len(chunk.gates))
    step_cap = config.step_cap
    if step_cap is None:
        step_cap = default_step_cap(len(chunk.gates), topology.num_qubits)

    start = time.monotonic()
    best: Solution | None = None
    f_best = f_worst = None

    def attempt(cap: int) -> Solution | None:
        nonlocal best, f_best, f_worst
        t0 = time.monotonic()
        sol, pulled = generate_solution(
            chunk,
            topology,
            assignment,
            best,
            bandit,
            rng,
            objective=config.objective,
            restart_prob=config.restart_prob,
            strict_prune=config.strict_prune,
            step_cap=cap,
        )
        stats.generations += 1
        stats.max_attempt_seconds = max(stats.max_attempt_seconds, time.monotonic() - t0)
        if sol is None:
            stats.discards += 1
            bandit.settle_episode(pulled, 0.0)
            return None
        f = sol.objective(config.objective)[0]
        f_best = f if f_best is None else min(f_best, f)
        f_worst = f if f_worst is None else max(f_worst, f)
        bandit.settle_episode(pulled, UcbBandit.episode_reward(f, f_best, f_worst))
        if best is None or sol.objective(config.objective) < best.objective(config.objective):
            best = sol
        stats.incumbent_trace.append(best.objective(config.objective)[0])
        return sol

    while True:
        attempt(step_cap)
        if config.generation_cap is not None:
            if stats.generations >= config.generation_cap:
                break
        elif time.monotonic() - start >= delta_t:
            break

    # Guarantee a feasible result even if every budgeted attempt hit the
    # step cap: retry with progressively relaxed caps.
    relaxed = step_cap
    for _ in range(3):
        if best is not None:
            break
        relaxed *= 10
        attempt(relaxed)
    if best is None:
        raise RuntimeError(f"chunk {index}: no feasible solution within relaxed step caps")

    stats.elapsed = time.monotonic() - start
    stats.best_sw = best.sw
    stats.best_de = best.de
    return best, stats


def optimize(circuit: Circuit, topology: Topology, config: RunConfig) -> RunReport:
    """Route a whole circuit: split into chunks, optimize each for its time
    slice, concatenate, and recompute global levels."""
    config.validate()
    start = time.monotonic()
    rng = random.Random(config.seed)
    assignment = default_assignment(circuit.num_qubits, topology)

    requested = chunk_count(len(circuit.gates), config.chunk_override)
    plan = split_chunks(circuit, requested)
    delta_t = chunk_budget(config.budget_seconds, plan.effective)

    placed = []
    chunk_stats = []
    carry = 0.0
    for j, chunk in enumerate(plan.chunks):
        budget_j = delta_t + (carry if config.carry_forward else 0.0)
        sol, stats = optimize_chunk(chunk, topology, assignment, budget_j, config, rng, index=j)
        carry = max(0.0, budget_j - stats.elapsed)
        placed.extend(sol.placed)
        assignment = sol.final_assignment
        chunk_stats.append(stats)

    levels = replay_levels(placed, topology.num_qubits)
    solution = Solution(
        placed=placed,
        levels=levels,
        final_assignment=assignment,
        sw=sum(1 for g in placed if g.kind == SWAP),
        de=max(levels, default=-1),
    )
    return RunReport(
        solution=solution,
        chunk_stats=chunk_stats,
        effective_chunks=plan.effective,
        requested_chunks=requested,
        wall_seconds=time.monotonic() - start,
        config=config,
    )
