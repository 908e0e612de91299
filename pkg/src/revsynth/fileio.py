"""Text formats for permutation specs and circuits.

Spec files: the first non-comment line is the line count n, followed by the
2^n output values in truth-table order, whitespace separated across any
number of lines.  ``#`` starts a comment anywhere.

Circuit files use the gate-list style::

    .version 2.0
    .numvars 3
    .variables x0 x1 x2
    .begin
    t3 x0 -x1 x2
    f2 x1 x0 x2
    .end

``t<k>`` is a k-line Toffoli gate whose last variable is the target and the
rest are controls; ``f<k>`` is a k-line Fredkin (controlled swap) whose last
two variables are the exchanged lines.  A leading ``-`` marks a negative
control.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from revsynth.circuit import Circuit, Control, Gate, McSwap, Mpmct
from revsynth.permutation import MAX_WIDTH, Permutation


class FormatError(ValueError):
    """Parse failure with a line number in the message."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _tokens(stream: TextIO) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(stream, start=1):
        body = line.split("#", 1)[0]
        for token in body.split():
            yield lineno, token


def parse_spec(stream: TextIO) -> Permutation:
    """Read a permutation spec; raises FormatError on malformed input."""
    tokens = _tokens(stream)
    try:
        lineno, token = next(tokens)
    except StopIteration:
        raise FormatError(0, "empty spec file") from None
    try:
        width = int(token)
    except ValueError:
        raise FormatError(lineno, f"expected the line count, got {token!r}") from None
    if not 1 <= width <= MAX_WIDTH:
        raise FormatError(lineno, f"line count {width} out of range 1..{MAX_WIDTH}")
    size = 1 << width
    outputs = []
    for lineno, token in tokens:
        try:
            value = int(token)
        except ValueError:
            raise FormatError(lineno, f"expected an output value, got {token!r}") from None
        if not 0 <= value < size:
            raise FormatError(lineno, f"output value {value} out of range 0..{size - 1}")
        outputs.append(value)
        if len(outputs) > size:
            raise FormatError(lineno, f"more than {size} output values")
    if len(outputs) < size:
        raise FormatError(lineno if outputs else 0, f"expected {size} output values, got {len(outputs)}")
    try:
        return Permutation(width, tuple(outputs))
    except ValueError as exc:
        raise FormatError(0, str(exc)) from None


def write_spec(spec: Permutation, stream: TextIO) -> None:
    stream.write(f"{spec.width}\n")
    stream.write(" ".join(str(v) for v in spec.outputs) + "\n")


def _variable(line: int) -> str:
    return f"x{line}"


def _gate_line(gate: Gate) -> str:
    controls = sorted(gate.controls)
    parts = [("" if c.positive else "-") + _variable(c.line) for c in controls]
    if isinstance(gate, Mpmct):
        parts.append(_variable(gate.target))
        return f"t{len(parts)} " + " ".join(parts)
    parts.append(_variable(gate.a))
    parts.append(_variable(gate.b))
    return f"f{len(parts)} " + " ".join(parts)


def write_circuit(circuit: Circuit, stream: TextIO) -> None:
    stream.write(".version 2.0\n")
    stream.write(f".numvars {circuit.width}\n")
    stream.write(".variables " + " ".join(_variable(j) for j in range(circuit.width)) + "\n")
    stream.write(".begin\n")
    for gate in circuit.gates:
        stream.write(_gate_line(gate) + "\n")
    stream.write(".end\n")


def _parse_operand(token: str, width: int, lineno: int) -> tuple[int, bool]:
    positive = not token.startswith("-")
    name = token if positive else token[1:]
    if not name.startswith("x"):
        raise FormatError(lineno, f"unknown variable {token!r}")
    try:
        line = int(name[1:])
    except ValueError:
        raise FormatError(lineno, f"unknown variable {token!r}") from None
    if not 0 <= line < width:
        raise FormatError(lineno, f"variable {token!r} out of range for {width} lines")
    return line, positive


def _parse_gate(fields: list[str], width: int, lineno: int) -> Gate:
    head = fields[0]
    kind, count = head[0], head[1:]
    if kind not in ("t", "f") or not count.isdigit():
        raise FormatError(lineno, f"unknown gate {head!r}")
    if int(count) != len(fields) - 1:
        raise FormatError(
            lineno, f"gate {head!r} lists {len(fields) - 1} variables, expected {count}"
        )
    operands = [_parse_operand(tok, width, lineno) for tok in fields[1:]]
    targets = 1 if kind == "t" else 2
    if len(operands) < targets:
        raise FormatError(lineno, f"gate {head!r} has too few variables")
    for line, positive in operands[-targets:]:
        if not positive:
            raise FormatError(lineno, "target lines cannot be negated")
    controls = frozenset(Control(line, pos) for line, pos in operands[:-targets])
    try:
        if kind == "t":
            return Mpmct(controls, operands[-1][0])
        return McSwap(controls, operands[-2][0], operands[-1][0])
    except ValueError as exc:
        raise FormatError(lineno, str(exc)) from None


def read_circuit(stream: TextIO) -> Circuit:
    """Read a circuit file; raises FormatError on malformed input."""
    width = None
    gates: list[Gate] = []
    in_body = False
    ended = False
    lineno = 0
    for lineno, line in enumerate(stream, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        key = fields[0]
        if key == ".version":
            continue
        if key == ".numvars":
            if len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(lineno, ".numvars expects one integer")
            width = int(fields[1])
            if not 1 <= width <= MAX_WIDTH:
                raise FormatError(lineno, f"line count {width} out of range 1..{MAX_WIDTH}")
            continue
        if key == ".variables":
            if width is None:
                raise FormatError(lineno, ".variables before .numvars")
            if fields[1:] != [_variable(j) for j in range(width)]:
                raise FormatError(lineno, "variables must be x0..x<n-1> in order")
            continue
        if key == ".begin":
            if width is None:
                raise FormatError(lineno, ".begin before .numvars")
            in_body = True
            continue
        if key == ".end":
            if not in_body:
                raise FormatError(lineno, ".end outside of a gate list")
            in_body = False
            ended = True
            continue
        if key.startswith("."):
            raise FormatError(lineno, f"unknown directive {key!r}")
        if not in_body:
            raise FormatError(lineno, "gate outside of .begin/.end")
        gates.append(_parse_gate(fields, width, lineno))
    if width is None:
        raise FormatError(lineno, "missing .numvars")
    if in_body or not ended:
        raise FormatError(lineno, "missing .end")
    return Circuit(width, tuple(gates))
