"""Pure-Python implementations of the hot truth-table kernels.

These are the fallback twins of the compiled ``revsynth._speedups`` module.
Both operate on a compact gate encoding, a tuple per gate:

    (kind, cmask, pmask, m1, m2)

kind 0 is a mixed-polarity multi-control Toffoli: it fires on x iff
``x & cmask == pmask`` and then flips the target bit ``m1``.  kind 1 is a
multi-control swap: under the same firing condition it exchanges the two
line bits ``m1`` and ``m2``.
"""

from __future__ import annotations

from typing import Sequence

GateEnc = tuple[int, int, int, int, int]


def simulate_value(gates: Sequence[GateEnc], x: int) -> int:
    """Apply the encoded gate list to a single truth value, leftmost first."""
    for kind, cmask, pmask, m1, m2 in gates:
        if x & cmask == pmask:
            if kind == 0:
                x ^= m1
            elif (x & m1 != 0) != (x & m2 != 0):
                x ^= m1 | m2
    return x


def simulate_table(gates: Sequence[GateEnc], width: int) -> tuple[int, ...]:
    """Full truth table of the encoded circuit: entry x is the image of x."""
    table = list(range(1 << width))
    for kind, cmask, pmask, m1, m2 in gates:
        if kind == 0:
            for i, x in enumerate(table):
                if x & cmask == pmask:
                    table[i] = x ^ m1
        else:
            both = m1 | m2
            for i, x in enumerate(table):
                if x & cmask == pmask and (x & m1 != 0) != (x & m2 != 0):
                    table[i] = x ^ both
    return tuple(table)


def apply_gate_table(outputs: Sequence[int], gate: GateEnc) -> tuple[int, ...]:
    """Apply one encoded gate to every entry of an output table."""
    kind, cmask, pmask, m1, m2 = gate
    if kind == 0:
        return tuple(x ^ m1 if x & cmask == pmask else x for x in outputs)
    both = m1 | m2
    return tuple(
        x ^ both if x & cmask == pmask and (x & m1 != 0) != (x & m2 != 0) else x
        for x in outputs
    )


def swap_values(outputs: Sequence[int], u: int, v: int) -> tuple[int, ...]:
    """Exchange the values u and v wherever they occur in the table."""
    return tuple(u if w == v else v if w == u else w for w in outputs)


def flip_column(outputs: Sequence[int], line: int) -> tuple[int, ...]:
    """Invert bit ``line`` of every entry."""
    bit = 1 << line
    return tuple(w ^ bit for w in outputs)

def mismatch_sides(outputs: Sequence[int], line: int) -> tuple[list[int], list[int]]:
    """Split the mismatched entries of a table by their bit at ``line``.

    Entry x mismatches when bit ``line`` of outputs[x] differs from bit
    ``line`` of x.  Returns (zeros, ones): the mismatched values whose own
    bit is 0 resp. 1, in ascending input order.
    """
    zeros: list[int] = []
    ones: list[int] = []
    bit = 1 << line
    for x, w in enumerate(outputs):
        if (w ^ x) & bit:
            (ones if w & bit else zeros).append(w)
    return zeros, ones
