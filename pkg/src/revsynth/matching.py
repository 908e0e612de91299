"""Minimum-weight perfect matching of mismatched truth values.

The mismatched elements of a column form two equal-size value sets; pairing
an element from each side costs 2 * HammingDistance - 1 (the gate count of
the transposition circuit that swaps the pair).  A minimum-weight perfect
matching picks the cheapest pairing.

Ties on total weight are broken toward the matching whose individual
weights are most balanced (minimal sum of squared weights), encoded as an
exact integer secondary term in the assignment costs; this keeps the
worst single transposition as cheap as possible and makes results
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from revsynth.permutation import hamming_distance


@dataclass(frozen=True)
class BipartiteInstance:
    """Complete weighted bipartite instance over two equal-size value sets.

    ``left`` holds the mismatched values whose column bit is 0, ``right``
    those whose bit is 1; ``weights[i][j] = 2 * HD(left[i], right[j]) - 1``.
    """

    width: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    weights: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    total_weight: int


def build_instance(zeros: Sequence[int], ones: Sequence[int], width: int) -> BipartiteInstance:
    if len(zeros) != len(ones) or not zeros:
        raise ValueError(
            f"sides must be equal-size and nonempty, got {len(zeros)} and {len(ones)}"
        )
    weights = tuple(
        tuple(2 * hamming_distance(u, v, width) - 1 for v in ones) for u in zeros
    )
    return BipartiteInstance(width, tuple(zeros), tuple(ones), weights)


def _composite(w: int, scale: int) -> int:
    return w * scale + w * w


def min_weight_perfect_matching(inst: BipartiteInstance) -> Matching:
    """Perfect matching of minimum total weight, deterministic under ties.

    Small instances are solved by exact enumeration with a lexicographic
    final tie-break; larger ones go through scipy's assignment solver on
    exact integer composite costs (all values stay far below 2^53, so the
    float path is exact).
    """
    k = len(inst.left)
    # Secondary term must never overturn a strict total-weight ordering.
    scale = k * (2 * inst.width - 1) ** 2 + 1
    if k == 1:
        return Matching(((inst.left[0], inst.right[0]),), inst.weights[0][0])
    if k <= 4:
        best = None
        for perm in permutations(range(k)):
            cost = sum(_composite(inst.weights[i][perm[i]], scale) for i in range(k))
            if best is None or (cost, perm) < best:
                best = (cost, perm)
        cols = best[1]
    else:
        costs = np.array(
            [[_composite(w, scale) for w in row] for row in inst.weights],
            dtype=np.int64,
        )
        rows, assigned = linear_sum_assignment(costs)
        cols = [0] * k
        for i, j in zip(rows, assigned):
            cols[i] = j
    pairs = tuple((inst.left[i], inst.right[cols[i]]) for i in range(k))
    total = sum(inst.weights[i][cols[i]] for i in range(k))
    return Matching(pairs, total)
