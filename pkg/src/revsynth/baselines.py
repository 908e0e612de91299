"""Baseline synthesizers: sorting by transpositions, and the
transformation-based method (unidirectional / bidirectional, optional
mixed-polarity controls).
"""

from __future__ import annotations

from typing import Callable, Sequence

from revsynth import kernels
from revsynth.circuit import (
    Circuit,
    Control,
    Gate,
    McSwap,
    Mpmct,
    gate_apply,
    verify,
)
from revsynth.permutation import Permutation
from revsynth.transposition import transposition_gates

Sorter = Callable[[Permutation], list[tuple[int, int]]]


def bubble_sorter(spec: Permutation) -> list[tuple[int, int]]:
    """Transpositions (u, v) of a plain bubble sort of the output table,
    recorded as value pairs in the order they are exchanged."""
    arr = list(spec.outputs)
    steps: list[tuple[int, int]] = []
    for end in range(len(arr) - 1, 0, -1):
        for j in range(end):
            if arr[j] > arr[j + 1]:
                steps.append((arr[j], arr[j + 1]))
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
    return steps


def sort_synth(
    spec: Permutation, sorter: Sorter = bubble_sorter, mode: str = "aba"
) -> Circuit:
    """Synthesize by sorting: the sorter returns value transpositions
    T1..Tm whose successive application to the output table yields the
    identity; the circuit cascades their transposition circuits in reverse
    emission order."""
    steps = sorter(spec)
    table = spec.outputs
    for u, v in steps:
        table = kernels.swap_values(table, u, v)
    if table != tuple(range(len(table))):
        raise ValueError("sorter did not sort the table to the identity")
    gates: list[Gate] = []
    for u, v in reversed(steps):
        gates.extend(transposition_gates(u, v, spec.width, mode))
    circuit = Circuit(spec.width, tuple(gates))
    if not verify(circuit, spec):
        raise RuntimeError("internal error: sorting circuit failed verification")
    return circuit


# --------------------------------------------------------------------------
# transformation-based synthesis

def _control_lines(mask: int, width: int) -> list[int]:
    return [j for j in range(width) if mask >> j & 1]


def _fires_below(cmask: int, pmask: int, limit: int) -> bool:
    return any((z & cmask) == pmask for z in range(limit))


def _swap_touches_below(cmask: int, pmask: int, m1: int, m2: int, limit: int) -> bool:
    return any(
        (z & cmask) == pmask and (z & m1 != 0) != (z & m2 != 0) for z in range(limit)
    )


def _reduce_controls(
    cmask: int, pmask: int, limit: int, width: int, unsafe
) -> tuple[int, int]:
    """Greedily drop controls while no value below ``limit`` is disturbed
    (mixed-polarity control reduction)."""
    for j in range(width):
        bit = 1 << j
        if not cmask & bit:
            continue
        trial = cmask & ~bit
        if not unsafe(trial, pmask & trial, limit):
            cmask = trial
            pmask &= trial
    return cmask, pmask


def _make_controls(cmask: int, pmask: int, width: int) -> frozenset[Control]:
    return frozenset(
        Control(j, bool(pmask >> j & 1)) for j in _control_lines(cmask, width)
    )


def _row_gates(
    start: int, goal: int, limit: int, width: int, mixed_polarity: bool, fredkin: bool
) -> list[Gate]:
    """Gates transforming the value ``start`` into ``goal`` without
    disturbing any value below ``limit``.

    A Toffoli that sets a missing bit controls on the 1-bits of the current
    value (the value only grows, staying above ``limit``); one that clears a
    surplus bit controls on the 1-bits of ``goal``.  With ``fredkin``, a
    missing bit and a surplus bit are fixed together by one controlled swap
    whenever the intermediate value stays at or above ``goal``.  With
    ``mixed_polarity`` each gate instead starts fully controlled on the
    current value and drops controls greedily.
    """
    gates: list[Gate] = []
    cur = start
    all_lines = (1 << width) - 1
    while cur != goal:
        need_set = [t for t in range(width) if (goal & ~cur) >> t & 1]
        need_clr = [t for t in range(width) if (cur & ~goal) >> t & 1]
        pair = None
        if fredkin:
            pair = next(
                (
                    (j, k)
                    for j in need_set
                    for k in need_clr
                    if cur ^ (1 << j) ^ (1 << k) >= goal
                ),
                None,
            )
        if pair is not None:
            j, k = pair
            mask = (1 << j) | (1 << k)
            if mixed_polarity:
                cmask = all_lines & ~mask
                pmask = cur & cmask
                cmask, pmask = _reduce_controls(
                    cmask,
                    pmask,
                    limit,
                    width,
                    lambda c, p, lim: _swap_touches_below(c, p, 1 << j, 1 << k, lim),
                )
            else:
                cmask = cur & ~mask
                pmask = cmask
            assert (cur & cmask) == pmask
            gates.append(McSwap(_make_controls(cmask, pmask, width), j, k))
            cur ^= mask
            continue
        if need_set:
            target, base = need_set[0], cur
        else:
            target, base = need_clr[0], goal
        tbit = 1 << target
        if mixed_polarity:
            cmask = all_lines & ~tbit
            pmask = cur & cmask
            cmask, pmask = _reduce_controls(cmask, pmask, limit, width, _fires_below)
        else:
            cmask = base & ~tbit
            pmask = cmask
        assert (cur & cmask) == pmask, "gate must activate on the current value"
        gates.append(Mpmct(_make_controls(cmask, pmask, width), target))
        cur ^= tbit
    return gates


def _plan_cost(gates: Sequence[Gate]) -> tuple[int, int]:
    return (len(gates), sum(len(g.controls) for g in gates))


def mmd_synth(
    spec: Permutation,
    bidirectional: bool = True,
    mixed_polarity: bool = True,
    fredkin: bool = True,
) -> Circuit:
    """Transformation-based synthesis.

    Rows of the truth table are settled in ascending order; each row is
    repaired from the output side (mapping the current output value back to
    the input value) or, when ``bidirectional``, from whichever side gives
    the cheaper step (the input-side step maps the row's preimage in the
    inverse table).  The final circuit is the input-side gates followed by
    the output-side gates in reverse emission order.
    """
    width = spec.width
    size = 1 << width
    table = list(spec.outputs)
    out_gates: list[Gate] = []
    in_gates: list[Gate] = []

    for x in range(size):
        if table[x] == x:
            continue
        out_plan = _row_gates(table[x], x, x, width, mixed_polarity, fredkin)
        in_plan = None
        if bidirectional:
            in_plan = _row_gates(table.index(x), x, x, width, mixed_polarity, fredkin)
        if in_plan is not None and _plan_cost(in_plan) < _plan_cost(out_plan):
            for gate in in_plan:
                # f <- f . g: permute the table's rows.
                table = [table[gate_apply(gate, z)] for z in range(size)]
                in_gates.append(gate)
        else:
            for gate in out_plan:
                table = [gate_apply(gate, w) for w in table]
                out_gates.append(gate)
        assert all(table[y] == y for y in range(x + 1)), "settled rows must stay fixed"
    circuit = Circuit(width, tuple(in_gates) + tuple(reversed(out_gates)))
    if not verify(circuit, spec):
        raise RuntimeError("internal error: transformation circuit failed verification")
    return circuit
