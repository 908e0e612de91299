"""Circuit cost metrics: gate count, quantum cost, logical depth.

The quantum-cost table follows the widely used ancilla-free figures
(NOT/CNOT = 1, Toffoli = 5, SWAP = 3, Fredkin = 5); a multi-control
Toffoli with c >= 2 controls costs 2^(c+1) - 3, and a multi-control swap
with c >= 2 controls costs 2 plus the (c+1)-control Toffoli.  Negative
controls cost the same as positive ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from revsynth.circuit import Circuit, Gate, McSwap, Mpmct, support_mask


def mpmct_cost(num_controls: int) -> int:
    if num_controls <= 1:
        return 1
    return (1 << (num_controls + 1)) - 3


def mcswap_cost(num_controls: int) -> int:
    if num_controls == 0:
        return 3
    if num_controls == 1:
        return 5
    return 2 + mpmct_cost(num_controls + 1)


def gate_cost(gate: Gate) -> int:
    if isinstance(gate, Mpmct):
        return mpmct_cost(len(gate.controls))
    return mcswap_cost(len(gate.controls))


def quantum_cost(circuit: Circuit) -> int:
    return sum(gate_cost(g) for g in circuit.gates)


def _depth(gates: Iterable[Gate], width: int) -> int:
    levels = [0] * width
    depth = 0
    for g in gates:
        mask = support_mask(g)
        lines = [ln for ln in range(width) if mask >> ln & 1]
        level = 1 + max(levels[ln] for ln in lines)
        for ln in lines:
            levels[ln] = level
        if level > depth:
            depth = level
    return depth


def logical_depth(circuit: Circuit) -> int:
    """Greedy ASAP leveling: a gate sits one level above the deepest earlier
    gate sharing any line with its support.  No commutation analysis."""
    return _depth(circuit.gates, circuit.width)


@dataclass(frozen=True)
class CostReport:
    gate_count: int
    quantum_cost: int
    logical_depth: int


def cost_report(circuit: Circuit) -> CostReport:
    return CostReport(len(circuit.gates), quantum_cost(circuit), logical_depth(circuit))


def objective(gates: tuple[Gate, ...], width: int) -> tuple[int, int, int]:
    """Lexicographic synthesis objective: (gate count, quantum cost, depth)."""
    return (len(gates), sum(gate_cost(g) for g in gates), _depth(gates, width))
