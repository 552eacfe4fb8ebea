"""Scikit-learn style transformer wrapping the router, so routing composes
with pipelines and parameter search utilities."""

from __future__ import annotations

import math

from sklearn.base import BaseEstimator, TransformerMixin

from .circuit import Circuit
from .errors import CapacityError
from .optimizer import OBJECTIVES, RunConfig, RunReport, optimize
from .qasm import parse_circuit
from .topology import Topology, load_coupling


class DirshRouter(TransformerMixin, BaseEstimator):
    """Route logical circuits onto a coupling graph by swap insertion.

    Parameters follow the run configuration: ``coupling`` is a builtin name,
    a path to a coupling JSON, or a Topology; ``objective`` is "swaps" or
    "depth". ``transform`` accepts a Circuit, an OpenQASM string, or a list
    of either, and returns the corresponding routed Solution(s). Run reports
    are kept on ``reports_``.
    """

    def __init__(
        self,
        coupling="tokyo",
        objective: str = "swaps",
        budget_seconds: float = 10.0,
        seed: int = 0,
        chunks: int | None = None,
        restart_prob: float = 0.1,
        exploration_c: float = math.sqrt(2.0),
        strict_prune: bool = False,
        generation_cap: int | None = None,
    ):
        self.coupling = coupling
        self.objective = objective
        self.budget_seconds = budget_seconds
        self.seed = seed
        self.chunks = chunks
        self.restart_prob = restart_prob
        self.exploration_c = exploration_c
        self.strict_prune = strict_prune
        self.generation_cap = generation_cap

    def _resolve_topology(self) -> Topology:
        if isinstance(self.coupling, Topology):
            return self.coupling
        return load_coupling(self.coupling)

    def _config(self) -> RunConfig:
        cfg = RunConfig(
            objective=self.objective,
            budget_seconds=self.budget_seconds,
            seed=self.seed,
            chunk_override=self.chunks,
            restart_prob=self.restart_prob,
            exploration_c=self.exploration_c,
            strict_prune=self.strict_prune,
            generation_cap=self.generation_cap,
        )
        cfg.validate()
        return cfg

    @staticmethod
    def _as_circuits(X) -> tuple[list[Circuit], bool]:
        if isinstance(X, (Circuit, str)):
            items, single = [X], True
        else:
            items, single = list(X), False
        circuits = [parse_circuit(c) if isinstance(c, str) else c for c in items]
        return circuits, single

    def fit(self, X, y=None):
        """Validate parameters and that every circuit fits on the machine."""
        if self.objective not in OBJECTIVES:
            raise ValueError(f"objective must be one of {OBJECTIVES}")
        self._config()
        topology = self._resolve_topology()
        circuits, _ = self._as_circuits(X)
        for c in circuits:
            if c.num_qubits > topology.num_qubits:
                raise CapacityError(
                    f"circuit needs {c.num_qubits} qubits, machine has {topology.num_qubits}"
                )
        self.topology_ = topology
        self.n_features_in_ = len(circuits)
        return self

    def transform(self, X):
        """Route circuit(s); returns Solution(s) in input order."""
        if not hasattr(self, "topology_"):
            self.fit(X)
        circuits, single = self._as_circuits(X)
        config = self._config()
        self.reports_: list[RunReport] = [optimize(c, self.topology_, config) for c in circuits]
        solutions = [r.solution for r in self.reports_]
        return solutions[0] if single else solutions
