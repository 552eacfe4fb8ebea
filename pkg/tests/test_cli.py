import csv
import json

import pytest

from dirsh.cli import main
from dirsh.qasm import parse_circuit
from dirsh.topology import builtin_tokyo

QASM = (
    'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[5];\n'
    "cx q[0],q[4];\nh q[2];\ncx q[1],q[3];\ncx q[0],q[2];\n"
)


@pytest.fixture
def circuit_file(tmp_path):
    path = tmp_path / "inst.qasm"
    path.write_text(QASM)
    return path


def run_route(circuit_file, tmp_path, *extra):
    out = tmp_path / "routed.qasm"
    stats = tmp_path / "stats.jsonl"
    code = main([
        "route", "--circuit", str(circuit_file), "--out", str(out),
        "--stats", str(stats), "--budget", "1", "--generations", "4", *extra,
    ])
    assert code == 0
    return out, stats


class TestRoute:
    def test_emits_valid_routed_circuit(self, circuit_file, tmp_path):
        out, _ = run_route(circuit_file, tmp_path)
        routed = parse_circuit(out.read_text())
        topo = builtin_tokyo()
        for g in routed.gates:
            if g.kind == "binary":
                assert topo.dist[g.qubits[0]][g.qubits[1]] == 1

    def test_stats_record_schema(self, circuit_file, tmp_path):
        _, stats = run_route(circuit_file, tmp_path, "--seed", "2")
        record = json.loads(stats.read_text().splitlines()[-1])
        assert record["instance"] == "inst"
        assert record["seed"] == 2
        assert record["layers"] == record["depth"] + 1
        assert record["wall_seconds"] is None

    def test_deterministic_output_and_stats(self, circuit_file, tmp_path):
        dir_a, dir_b = tmp_path / "a", tmp_path / "b"
        dir_a.mkdir()
        dir_b.mkdir()
        out_a, stats_a = run_route(circuit_file, dir_a, "--seed", "5")
        out_b, stats_b = run_route(circuit_file, dir_b, "--seed", "5")
        assert out_a.read_bytes() == out_b.read_bytes()
        assert stats_a.read_bytes() == stats_b.read_bytes()

    def test_stdout_when_no_out(self, circuit_file, capsys):
        code = main(["route", "--circuit", str(circuit_file),
                     "--budget", "1", "--generations", "2"])
        assert code == 0
        assert "OPENQASM 2.0;" in capsys.readouterr().out

    def test_custom_coupling_json(self, tmp_path):
        coupling = tmp_path / "line5.json"
        coupling.write_text(json.dumps(
            {"num_qubits": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}))
        circuit = tmp_path / "c.qasm"
        circuit.write_text(QASM)
        out = tmp_path / "routed.qasm"
        code = main(["route", "--circuit", str(circuit), "--coupling", str(coupling),
                     "--out", str(out), "--budget", "1", "--generations", "8"])
        assert code == 0
        routed = parse_circuit(out.read_text())
        assert routed.num_qubits == 5

    def test_depth_objective(self, circuit_file, tmp_path):
        out, stats = run_route(circuit_file, tmp_path, "--objective", "depth")
        record = json.loads(stats.read_text().splitlines()[-1])
        assert record["objective"] == "depth"


class TestBench:
    def _setup(self, tmp_path, n_instances=2):
        names = []
        for i in range(n_instances):
            path = tmp_path / f"inst{i}.qasm"
            path.write_text(QASM)
            names.append(path.name)
        manifest = tmp_path / "manifest.txt"
        manifest.write_text("# tiny corpus\n" + "\n".join(names) + "\n")
        return manifest

    def test_end_to_end_with_reference(self, tmp_path, capsys):
        manifest = self._setup(tmp_path)
        reference = tmp_path / "reference.csv"
        with reference.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["instance", "objective", "budget", "value"])
            writer.writerow(["inst0", "swaps", 1.0, 100])
            writer.writerow(["inst1", "swaps", 1.0, 1])
        report = tmp_path / "report.csv"
        summary = tmp_path / "summary.csv"
        code = main([
            "bench", "--manifest", str(manifest), "--objectives", "swaps",
            "--seeds", "2", "--budgets", "1", "--generations", "3",
            "--reference", str(reference), "--report", str(report),
            "--summary", str(summary),
        ])
        assert code == 0
        with report.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert {r["instance"] for r in rows} == {"inst0", "inst1"}
        with summary.open(newline="") as fh:
            (summary_row,) = list(csv.DictReader(fh))
        counted = int(summary_row["wins"]) + int(summary_row["ties"]) + int(summary_row["losses"])
        assert counted == 2
        assert "swaps:" in capsys.readouterr().out

    def test_without_reference_emits_best_of_seeds(self, tmp_path):
        manifest = self._setup(tmp_path, n_instances=1)
        report = tmp_path / "report.csv"
        code = main([
            "bench", "--manifest", str(manifest), "--objectives", "swaps,depth",
            "--seeds", "1", "--budgets", "1", "--generations", "2",
            "--report", str(report),
        ])
        assert code == 0
        with report.open(newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert {r["objective"] for r in rows} == {"swaps", "depth"}

    def test_stats_jsonl_one_record_per_run(self, tmp_path):
        manifest = self._setup(tmp_path, n_instances=2)
        stats = tmp_path / "stats.jsonl"
        code = main([
            "bench", "--manifest", str(manifest), "--objectives", "swaps",
            "--seeds", "3", "--budgets", "1", "--generations", "2",
            "--stats", str(stats),
        ])
        assert code == 0
        records = [json.loads(l) for l in stats.read_text().splitlines()]
        assert len(records) == 2 * 3
        assert {r["seed"] for r in records} == {0, 1, 2}
