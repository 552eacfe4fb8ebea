from collections import Counter

import pytest

from dirsh.errors import QasmParseError
from dirsh.optimizer import RunConfig, optimize
from dirsh.qasm import emit_routed, parse_circuit
from dirsh.topology import builtin_tokyo
from dirsh.validation import validate

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


class TestParse:
    def test_shared_qubit_creates_edge(self):
        c = parse_circuit(HEADER + "qreg q[2];\ncx q[0],q[1];\nh q[1];\n")
        assert len(c.gates) == 2
        assert c.precedence == {(0, 1)}

    def test_disjoint_qubits_no_edge(self):
        c = parse_circuit(HEADER + "qreg q[3];\ncx q[0],q[1];\nh q[2];\n")
        assert len(c.gates) == 2
        assert c.precedence == set()

    def test_measure_rejected_with_line(self):
        with pytest.raises(QasmParseError, match="line 4"):
            parse_circuit(HEADER + "qreg q[2];\nmeasure q[0] -> c[0];\n")

    @pytest.mark.parametrize("stmt", ["creg c[2];", "reset q[0];", "if(c==0) x q[0];",
                                      "gate foo a { h a; }", "opaque bar q;"])
    def test_unsupported_constructs(self, stmt):
        with pytest.raises(QasmParseError, match="unsupported construct"):
            parse_circuit(HEADER + "qreg q[2];\n" + stmt + "\n")

    def test_multiple_registers_rejected(self):
        with pytest.raises(QasmParseError, match="multiple quantum registers"):
            parse_circuit(HEADER + "qreg q[2];\nqreg r[2];\n")

    def test_unknown_register_rejected(self):
        with pytest.raises(QasmParseError, match="unknown register"):
            parse_circuit(HEADER + "qreg q[2];\nh r[0];\n")

    def test_index_out_of_range(self):
        with pytest.raises(QasmParseError, match="outside register"):
            parse_circuit(HEADER + "qreg q[2];\nh q[5];\n")

    def test_three_operand_gate_rejected(self):
        with pytest.raises(QasmParseError, match="unsupported gate"):
            parse_circuit(HEADER + "qreg q[3];\nccx q[0],q[1],q[2];\n")

    def test_unknown_two_qubit_name_rejected(self):
        with pytest.raises(QasmParseError, match="unsupported gate"):
            parse_circuit(HEADER + "qreg q[2];\nfoo q[0],q[1];\n")

    def test_missing_register_rejected(self):
        with pytest.raises(QasmParseError, match="no quantum register"):
            parse_circuit(HEADER)

    def test_params_preserved(self):
        c = parse_circuit(HEADER + "qreg q[1];\nrz(pi/4) q[0];\nu3(0.1,0.2,0.3) q[0];\n")
        assert c.gates[0].params == "pi/4"
        assert c.gates[1].label == "u3"

    def test_comments_and_barriers_ignored(self):
        text = HEADER + "qreg q[2];\n// comment\nbarrier q[0],q[1];\n/* block\ncomment */\nh q[0];\n"
        c = parse_circuit(text)
        assert len(c.gates) == 1

    def test_swap_parsed_as_binary_gate(self):
        c = parse_circuit(HEADER + "qreg q[2];\nswap q[0],q[1];\n")
        assert c.gates[0].kind == "binary"
        assert c.gates[0].label == "swap"


def route(text, objective="swaps", seed=0):
    topo = builtin_tokyo()
    circuit = parse_circuit(text)
    report = optimize(circuit, topo, RunConfig(
        objective=objective, budget_seconds=1, generation_cap=4, seed=seed))
    assert validate(circuit, topo, report.solution).ok
    return circuit, report.solution


class TestEmit:
    def test_swap_free_solution_keeps_gate_count(self):
        circuit, sol = route(HEADER + "qreg q[2];\ncx q[0],q[1];\nh q[0];\n")
        assert sol.sw == 0
        body = [l for l in emit_routed(sol, 20).splitlines()
                if l and not l.startswith(("OPENQASM", "include", "qreg"))]
        assert len(body) == len(circuit.gates)

    def test_roundtrip_gate_multiset(self):
        text = HEADER + "qreg q[5];\ncx q[0],q[4];\nh q[2];\nrz(0.5) q[1];\ncx q[1],q[3];\n"
        circuit, sol = route(text)
        reparsed = parse_circuit(emit_routed(sol, 20))
        original = Counter((g.label, g.params) for g in circuit.gates)
        emitted = Counter((g.label, g.params) for g in reparsed.gates if g.label != "swap")
        assert emitted == original
        assert sum(1 for g in reparsed.gates if g.label == "swap") == sol.sw

    def test_reparsed_output_is_hardware_compliant(self):
        topo = builtin_tokyo()
        text = HEADER + "qreg q[6];\ncx q[0],q[5];\ncx q[2],q[4];\nh q[1];\n"
        _, sol = route(text)
        reparsed = parse_circuit(emit_routed(sol, 20))
        for g in reparsed.gates:
            if g.kind == "binary":
                assert topo.dist[g.qubits[0]][g.qubits[1]] == 1
