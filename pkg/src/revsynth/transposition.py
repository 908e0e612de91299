"""Circuits realizing exactly one transposition (u v) on n lines.

Two constructions are provided, both with gate count 2h - 1 where h is the
Hamming distance between the endpoints:

* cascade: a palindrome of fully controlled Toffolis, each hop flipping one
  differing bit with the other n-1 lines as controls matching the current
  intermediate value;
* aba: a sandwich A B A where A is a layer of CNOTs (one per differing
  non-pivot line, controlled by the pivot) and B is a single fully
  controlled Toffoli targeting the pivot.  Same gate count, far lower
  quantum cost since only one gate carries n-1 controls.
"""

from __future__ import annotations

from revsynth.circuit import Circuit, Control, Gate, Mpmct
from revsynth.permutation import hamming_distance


def _differing_lines(u: int, v: int, width: int) -> list[int]:
    d = (u ^ v) & ((1 << width) - 1)
    return [j for j in range(width) if d >> j & 1]


def _full_control_gate(value: int, target: int, width: int) -> Mpmct:
    """Toffoli targeting ``target`` whose other width-1 controls match
    ``value``'s bits, so it fires only on value and value ^ (1 << target)."""
    controls = frozenset(
        Control(j, bool(value >> j & 1)) for j in range(width) if j != target
    )
    return Mpmct(controls, target)


def cascade_gates(u: int, v: int, width: int) -> tuple[Gate, ...]:
    if u == v:
        raise ValueError("transposition endpoints must differ")
    forward: list[Gate] = []
    cur = u
    for j in _differing_lines(u, v, width):
        forward.append(_full_control_gate(cur, j, width))
        cur ^= 1 << j
    return tuple(forward) + tuple(forward[-2::-1])


def synth_transposition_cascade(u: int, v: int, width: int) -> Circuit:
    """2h - 1 fully controlled Toffolis: forward hops u -> v, then the same
    hops mirrored to undo every intermediate change."""
    return Circuit(width, cascade_gates(u, v, width))


def aba_gates(u: int, v: int, width: int, pivot: int | None = None) -> tuple[Gate, ...]:
    if u == v:
        raise ValueError("transposition endpoints must differ")
    diff = _differing_lines(u, v, width)
    if pivot is None:
        pivot = diff[0]
    elif pivot not in diff:
        raise ValueError(f"pivot line {pivot} does not differ between endpoints")
    pivot_polarity = bool(u >> pivot & 1)
    part_a = tuple(
        Mpmct(frozenset({Control(pivot, pivot_polarity)}), j) for j in diff if j != pivot
    )
    part_b = _full_control_gate(v, pivot, width)
    return part_a + (part_b,) + part_a


def synth_transposition_aba(u: int, v: int, width: int, pivot: int | None = None) -> Circuit:
    """A B A construction: CNOT layer, one fully controlled Toffoli on the
    pivot line, CNOT layer again.  The default pivot is the lowest differing
    line."""
    return Circuit(width, aba_gates(u, v, width, pivot))


def transposition_gates(u: int, v: int, width: int, mode: str = "aba") -> tuple[Gate, ...]:
    if mode == "aba":
        return aba_gates(u, v, width)
    if mode == "cascade":
        return cascade_gates(u, v, width)
    raise ValueError(f"unknown transposition mode {mode!r}")


def expected_gate_count(u: int, v: int, width: int) -> int:
    return 2 * hamming_distance(u, v, width) - 1
