"""Gate and circuit model: mixed-polarity multi-control Toffoli and
multi-control swap gates, simulation, verification, control addition and
sub-circuit embedding.

Circuits are applied leftmost-gate-first: the circuit [g1, ..., gk]
realizes the permutation gk o ... o g1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Union

from revsynth import kernels
from revsynth.permutation import Permutation


class Control(NamedTuple):
    line: int
    positive: bool


def _control_masks(controls: frozenset[Control]) -> tuple[int, int]:
    cmask = 0
    pmask = 0
    for line, positive in controls:
        bit = 1 << line
        if cmask & bit:
            raise ValueError(f"conflicting controls on line {line}")
        cmask |= bit
        if positive:
            pmask |= bit
    return cmask, pmask


@dataclass(frozen=True)
class Mpmct:
    """Mixed-polarity multi-control Toffoli: flips the target bit iff every
    positive control reads 1 and every negative control reads 0.

    With no controls this is NOT, with one a CNOT, with two a Toffoli.
    """

    controls: frozenset[Control]
    target: int
    _enc: tuple[int, int, int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        cmask, pmask = _control_masks(self.controls)
        if cmask & (1 << self.target):
            raise ValueError(f"target line {self.target} is also a control")
        object.__setattr__(self, "_enc", (0, cmask, pmask, 1 << self.target, 0))

    @property
    def lines(self) -> frozenset[int]:
        return frozenset(c.line for c in self.controls) | {self.target}

    def sort_key(self) -> tuple:
        return (0, self.target, 0, tuple(sorted(self.controls)))


@dataclass(frozen=True)
class McSwap:
    """Multi-control swap: exchanges lines a and b iff the controls are
    satisfied.  No controls is a plain SWAP, one control a Fredkin."""

    controls: frozenset[Control]
    a: int
    b: int
    _enc: tuple[int, int, int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError("swap lines must differ")
        cmask, pmask = _control_masks(self.controls)
        if cmask & ((1 << self.a) | (1 << self.b)):
            raise ValueError("swap line is also a control")
        object.__setattr__(self, "_enc", (1, cmask, pmask, 1 << self.a, 1 << self.b))

    @property
    def lines(self) -> frozenset[int]:
        return frozenset(c.line for c in self.controls) | {self.a, self.b}

    def sort_key(self) -> tuple:
        return (1, min(self.a, self.b), max(self.a, self.b), tuple(sorted(self.controls)))


Gate = Union[Mpmct, McSwap]


def x_gate(target: int) -> Mpmct:
    return Mpmct(frozenset(), target)


def cnot(control: int, target: int, positive: bool = True) -> Mpmct:
    return Mpmct(frozenset({Control(control, positive)}), target)


def toffoli(c1: int, c2: int, target: int) -> Mpmct:
    return Mpmct(frozenset({Control(c1, True), Control(c2, True)}), target)


def swap(a: int, b: int) -> McSwap:
    return McSwap(frozenset(), a, b)


def support_mask(gate: Gate) -> int:
    """Bitmask of all lines the gate touches (controls and targets)."""
    _, cmask, _, m1, m2 = gate._enc
    return cmask | m1 | m2


def gate_apply(gate: Gate, x: int) -> int:
    """Apply a single gate to a truth value."""
    kind, cmask, pmask, m1, m2 = gate._enc
    if x & cmask == pmask:
        if kind == 0:
            return x ^ m1
        if (x & m1 != 0) != (x & m2 != 0):
            return x ^ (m1 | m2)
    return x


def encode_gates(gates: Iterable[Gate]) -> tuple[tuple[int, int, int, int, int], ...]:
    return tuple(g._enc for g in gates)


@dataclass(frozen=True)
class Circuit:
    width: int
    gates: tuple[Gate, ...]

    def __post_init__(self) -> None:
        limit = 1 << self.width
        for g in self.gates:
            if support_mask(g) >= limit:
                raise ValueError(f"gate uses line >= width {self.width}: {g}")

    def __len__(self) -> int:
        return len(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.width != other.width:
            raise ValueError("circuit widths differ")
        return Circuit(self.width, self.gates + other.gates)

    def reversed(self) -> "Circuit":
        return Circuit(self.width, self.gates[::-1])

    def simulate(self, x: int) -> int:
        """Left-to-right fold of gate application over the gate list."""
        return kernels.simulate_value(encode_gates(self.gates), x)

    def to_permutation(self) -> Permutation:
        """Simulate all 2^width inputs; the result is always a bijection."""
        return Permutation(self.width, kernels.simulate_table(encode_gates(self.gates), self.width))

    def sort_key(self) -> tuple:
        """Canonical serialization used only for deterministic tie-breaking."""
        return tuple(g.sort_key() for g in self.gates)


def verify(circuit: Circuit, spec: Permutation) -> bool:
    """True iff the circuit realizes exactly the given permutation."""
    if circuit.width != spec.width:
        return False
    return kernels.simulate_table(encode_gates(circuit.gates), circuit.width) == spec.outputs


def first_mismatch(circuit: Circuit, spec: Permutation) -> int | None:
    """Smallest input where the circuit and the spec disagree, or None."""
    table = kernels.simulate_table(encode_gates(circuit.gates), circuit.width)
    for x, (got, want) in enumerate(zip(table, spec.outputs)):
        if got != want:
            return x
    return None


def _with_control(gate: Gate, control: Control) -> Gate:
    controls = gate.controls | {control}
    if isinstance(gate, Mpmct):
        return Mpmct(controls, gate.target)
    return McSwap(controls, gate.a, gate.b)


def add_control(circuit: Circuit, line: int, positive: bool) -> Circuit:
    """Add one control to every gate.  The line must be unused by the circuit."""
    for g in circuit.gates:
        if line in g.lines:
            raise ValueError(f"line {line} is already used by {g}")
    ctl = Control(line, positive)
    return Circuit(circuit.width, tuple(_with_control(g, ctl) for g in circuit.gates))


def _remap_gate(gate: Gate, line_map: Mapping[int, int]) -> Gate:
    controls = frozenset(Control(line_map[c.line], c.positive) for c in gate.controls)
    if isinstance(gate, Mpmct):
        return Mpmct(controls, line_map[gate.target])
    return McSwap(controls, line_map[gate.a], line_map[gate.b])


def embed(circuit: Circuit, line_map: Mapping[int, int], new_width: int) -> Circuit:
    """Relabel the circuit's lines through an injective map into [0, new_width)."""
    if len(set(line_map.values())) != len(line_map):
        raise ValueError("line map is not injective")
    if any(not 0 <= v < new_width for v in line_map.values()):
        raise ValueError("line map exceeds new width")
    return Circuit(new_width, tuple(_remap_gate(g, line_map) for g in circuit.gates))
