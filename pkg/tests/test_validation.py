import random

from dirsh.circuit import Circuit
from dirsh.generator import Solution, replay_levels
from dirsh.optimizer import RunConfig, optimize
from dirsh.placement import Assignment
from dirsh.topology import builtin_tokyo
from dirsh.validation import recompute_metrics, validate

from conftest import cx, h, path_topology, random_circuit


def manual_solution(placed, num_physical, num_logical, sw=None, de=None):
    levels = replay_levels(placed, num_physical)
    return Solution(
        placed=placed,
        levels=levels,
        final_assignment=Assignment(range(num_logical), num_physical),
        sw=sw if sw is not None else sum(1 for g in placed if g.kind == "swap"),
        de=de if de is not None else max(levels, default=-1),
    )


def swap_gate(topo, a, b):
    return next(g for g in topo.swap_gates if g.phys == (min(a, b), max(a, b)))


class TestValidate:
    def test_generated_solutions_pass(self):
        topo = builtin_tokyo()
        rng = random.Random(1)
        for seed in range(6):
            circuit = random_circuit(20, 35, rng)
            config = RunConfig(budget_seconds=1, generation_cap=3, seed=seed)
            report = optimize(circuit, topo, config)
            check = validate(circuit, topo, report.solution)
            assert check.ok, str(check)

    def test_non_adjacent_binary_flagged(self, line3):
        circuit = Circuit(3, [cx(0, 0, 2)])
        bad = manual_solution([circuit.gates[0].routed((0, 2))], 3, 3)
        report = validate(circuit, line3, bad)
        assert any(v.code == "adjacency" and v.gate_id == 0 for v in report.violations)

    def test_transposed_precedence_flagged(self, line3):
        circuit = Circuit(3, [cx(0, 0, 1), h(1, 0)])
        bad = manual_solution(
            [circuit.gates[1].routed((0,)), circuit.gates[0].routed((0, 1))], 3, 3
        )
        report = validate(circuit, line3, bad)
        assert any(v.code == "precedence" and v.gate_id == 1 for v in report.violations)

    def test_missing_and_duplicate_gates_flagged(self, line3):
        circuit = Circuit(3, [cx(0, 0, 1), h(1, 2)])
        g0 = circuit.gates[0].routed((0, 1))
        bad = manual_solution([g0, g0], 3, 3)
        report = validate(circuit, line3, bad)
        codes = {v.code for v in report.violations}
        assert "missing-gate" in codes and "duplicate-gate" in codes

    def test_swap_on_non_edge_flagged(self, line4):
        topo_full = builtin_tokyo()
        circuit = Circuit(4, [cx(0, 0, 1)])
        # A (0, 5) swap exists on tokyo but not on the 4-qubit line.
        bad = manual_solution(
            [swap_gate(topo_full, 0, 5), circuit.gates[0].routed((0, 1))], 20, 4, sw=1
        )
        # placing that swap doesn't touch qubits 0/1 occupancy mapping here
        report = validate(circuit, line4, bad)
        assert any(v.code == "swap-edge" for v in report.violations)

    def test_metric_mismatch_flagged(self, line3):
        circuit = Circuit(3, [cx(0, 0, 1)])
        sol = manual_solution([circuit.gates[0].routed((0, 1))], 3, 3, sw=5, de=9)
        report = validate(circuit, line3, sol)
        codes = {v.code for v in report.violations}
        assert "metric-sw" in codes and "metric-de" in codes

    def test_recorded_operands_cross_checked(self, line3):
        circuit = Circuit(3, [cx(0, 0, 1)])
        sol = manual_solution([circuit.gates[0].routed((1, 2))], 3, 3)
        report = validate(circuit, line3, sol)
        assert any(v.code == "operand-mismatch" for v in report.violations)


class TestRecomputeMetrics:
    def test_dependent_chain(self):
        circuit = Circuit(1, [h(i, 0) for i in range(3)])
        sol = manual_solution([g.routed((0,)) for g in circuit.gates], 3, 1)
        assert recompute_metrics(sol, circuit) == (0, 2)

    def test_swap_count(self, line3):
        topo = path_topology(3)
        circuit = Circuit(3, [cx(0, 0, 1)])
        placed = [swap_gate(topo, 1, 2), circuit.gates[0].routed((0, 1))]
        sol = manual_solution(placed, 3, 3)
        assert recompute_metrics(sol, circuit)[0] == 1

    def test_routed_line_cx(self, line3):
        # swap(1,2) at level 0, then cx on (0,1) at level 1.
        circuit = Circuit(3, [cx(0, 0, 2)])
        placed = [swap_gate(line3, 1, 2), circuit.gates[0].routed((0, 1))]
        sol = manual_solution(placed, 3, 3)
        assert recompute_metrics(sol, circuit) == (1, 1)

    def test_metrics_match_optimizer_recording(self):
        topo = builtin_tokyo()
        rng = random.Random(2)
        for seed in range(5):
            circuit = random_circuit(20, 30, rng)
            report = optimize(
                circuit, topo, RunConfig(budget_seconds=1, generation_cap=3, seed=seed)
            )
            assert recompute_metrics(report.solution, circuit) == (
                report.solution.sw,
                report.solution.de,
            )
