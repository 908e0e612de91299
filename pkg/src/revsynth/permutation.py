"""Permutations over {0, ..., 2^n - 1}: the truth-table view of a reversible function.

A reversible n-line function is stored explicitly as the tuple of its 2^n
output values.  Line j of a value is bit j (line 0 is the least significant
bit); when values are printed as bitstrings, line n-1 is the leftmost
character.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

#: Hard cap on the line count: the explicit output table has 2^n entries.
MAX_WIDTH = 24


def hamming_distance(u: int, v: int, width: int) -> int:
    """Number of bit positions in [0, width) where u and v differ."""
    return ((u ^ v) & ((1 << width) - 1)).bit_count()


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., 2^width - 1}, stored as its output table.

    ``outputs[x]`` is the image of the truth value ``x``.  Instances are
    immutable and safe to share between concurrent workers.
    """

    width: int
    outputs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {self.width}")
        size = 1 << self.width
        if len(self.outputs) != size:
            raise ValueError(
                f"expected {size} outputs for width {self.width}, got {len(self.outputs)}"
            )
        seen = bytearray(size)
        for v in self.outputs:
            if not 0 <= v < size or seen[v]:
                raise ValueError(f"outputs are not a bijection: value {v}")
            seen[v] = 1

    @staticmethod
    def identity(width: int) -> "Permutation":
        return Permutation(width, tuple(range(1 << width)))

    @staticmethod
    def random(width: int, rng: random.Random) -> "Permutation":
        values = list(range(1 << width))
        rng.shuffle(values)
        return Permutation(width, tuple(values))

    def __call__(self, x: int) -> int:
        return self.outputs[x]

    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.outputs))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.outputs)
        for x, v in enumerate(self.outputs):
            inv[v] = x
        return Permutation(self.width, tuple(inv))

    def apply_transposition(self, u: int, v: int) -> "Permutation":
        """Exchange the values u and v wherever they occur in the output table."""
        if u == v:
            raise ValueError("transposition endpoints must differ")
        size = len(self.outputs)
        if not (0 <= u < size and 0 <= v < size):
            raise ValueError("transposition endpoints out of range")
        swapped = tuple(u if w == v else v if w == u else w for w in self.outputs)
        return Permutation(self.width, swapped)

    def cycle_decomposition(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each rotated to start at its minimum
        element, sorted by that minimum.  Fixed points are omitted."""
        size = len(self.outputs)
        seen = bytearray(size)
        cycles: list[tuple[int, ...]] = []
        for start in range(size):
            if seen[start] or self.outputs[start] == start:
                seen[start] = 1
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = 1
                cycle.append(x)
                x = self.outputs[x]
            cycles.append(tuple(cycle))
        return cycles


def compose(g: Permutation, f: Permutation) -> Permutation:
    """(g o f)(x) = g(f(x))."""
    if g.width != f.width:
        raise ValueError(f"width mismatch: {g.width} != {f.width}")
    return Permutation(g.width, tuple(g.outputs[v] for v in f.outputs))
