"""OpenQASM 2 subset: parsing of logical circuits and emission of routed ones.

Supported input: the version header, includes, a single quantum register,
named single-qubit gates with optional parameters, and the two-qubit gates
cx/cz/swap. Comments and barriers are ignored; classical registers,
measurements, and control flow are rejected.
"""

from __future__ import annotations

import re

from .circuit import BINARY, SWAP, UNARY, Circuit, Gate
from .errors import CircuitError, QasmParseError
from .generator import Solution

BINARY_GATES = {"cx", "cz", "swap"}
UNSUPPORTED = {"creg", "measure", "reset", "if", "gate", "opaque"}

_APPLICATION = re.compile(r"^([a-zA-Z_][\w]*)\s*(?:\(([^)]*)\))?\s*(.*)$", re.S)
_QREG = re.compile(r"^qreg\s+([a-zA-Z_][\w]*)\s*\[\s*(\d+)\s*\]$")
_OPERAND = re.compile(r"^([a-zA-Z_][\w]*)\s*\[\s*(\d+)\s*\]$")


def _statements(text: str):
    """Yield (statement, line number) with comments stripped."""
    buf = ""
    start_line = None
    in_block_comment = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw
        if in_block_comment:
            if "*/" in line:
                line = line.split("*/", 1)[1]
                in_block_comment = False
            else:
                continue
        while "/*" in line:
            head, rest = line.split("/*", 1)
            if "*/" in rest:
                line = head + rest.split("*/", 1)[1]
            else:
                line = head
                in_block_comment = True
        line = line.split("//", 1)[0]
        for ch in line:
            if ch == ";":
                stmt = buf.strip()
                if stmt:
                    yield stmt, start_line if start_line is not None else lineno
                buf = ""
                start_line = None
            else:
                if buf.strip() == "" and not ch.isspace():
                    start_line = lineno if start_line is None else start_line
                buf += ch
    if buf.strip():
        yield buf.strip(), start_line if start_line is not None else 1


def parse_circuit(text: str) -> Circuit:
    """Parse the supported OpenQASM 2 subset into a logical circuit.

    Precedence is built per qubit: each gate precedes the next gate touching
    that qubit (file order).
    """
    register: tuple[str, int] | None = None
    gates: list[Gate] = []

    for stmt, line in _statements(text):
        head_match = re.match(r"[a-zA-Z_]\w*", stmt)
        head = head_match.group(0) if head_match else stmt
        if head == "OPENQASM" or head == "include":
            continue
        if head == "barrier":
            continue
        if head == "qreg":
            m = _QREG.match(stmt)
            if not m:
                raise QasmParseError(f"malformed qreg statement {stmt!r}", line)
            if register is not None:
                raise QasmParseError("multiple quantum registers are not supported", line)
            register = (m.group(1), int(m.group(2)))
            continue
        if head in UNSUPPORTED:
            raise QasmParseError(f"unsupported construct {head!r}", line)

        m = _APPLICATION.match(stmt)
        if not m or not m.group(3).strip():
            raise QasmParseError(f"cannot parse statement {stmt!r}", line)
        if register is None:
            raise QasmParseError("gate application before qreg declaration", line)
        name, params, args_text = m.group(1), m.group(2) or "", m.group(3)
        operands = []
        for arg in args_text.split(","):
            om = _OPERAND.match(arg.strip())
            if not om:
                raise QasmParseError(f"malformed operand {arg.strip()!r}", line)
            reg, idx = om.group(1), int(om.group(2))
            if reg != register[0]:
                raise QasmParseError(f"unknown register {reg!r}", line)
            if idx >= register[1]:
                raise QasmParseError(f"qubit index {idx} outside register of size {register[1]}", line)
            operands.append(idx)

        if len(operands) == 1:
            kind = UNARY
        elif len(operands) == 2 and name in BINARY_GATES:
            kind = BINARY
        else:
            raise QasmParseError(
                f"unsupported gate {name!r} with {len(operands)} operands", line
            )
        try:
            gates.append(
                Gate(
                    gate_id=len(gates),
                    kind=kind,
                    label=name,
                    params=params.strip(),
                    qubits=tuple(operands),
                )
            )
        except CircuitError as exc:
            raise QasmParseError(str(exc), line) from exc

    if register is None:
        raise QasmParseError("no quantum register declared")
    return Circuit(register[1], gates)


def emit_routed(solution: Solution, num_physical: int) -> str:
    """Serialize a routed solution over physical qubits, with inserted swaps."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{num_physical}];"]
    for g in solution.placed:
        if g.kind == SWAP:
            a, b = g.phys
            lines.append(f"swap q[{a}],q[{b}];")
        else:
            params = f"({g.params})" if g.params else ""
            operands = ",".join(f"q[{p}]" for p in g.phys)
            lines.append(f"{g.label}{params} {operands};")
    return "\n".join(lines) + "\n"
