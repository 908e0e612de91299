"""Column-wise reversible logic synthesis.

The synthesizer sorts the output table toward the identity one column
(line) at a time: the mismatched values of a column are paired by a
minimum-weight matching, each pair is swapped by a transposition circuit,
and the two half-tables obtained by fixing the matched column are solved
recursively one line narrower.  Gates produced while matching a column end
up at the output side of the circuit, so every level appends its
transposition gates after the recursively synthesized prefix.

Optimizations (all individually switchable, see RevColConfig):

* partial match: equal cofactors share a single uncontrolled sub-circuit;
* swap gates: the 2-line column-exchange table is a single SWAP gate;
* inverted column: a NOT on the column flips it wholesale when more than a
  quarter of the table mismatches, leaving fewer pairs to swap;
* output permutation: match input columns against a relabeling of the
  output columns and fix the labels afterwards with SWAP gates.

Search is exhaustive over the column choice at every recursion level (and
over output-column relabelings) up to the configured widths, then greedy.
Results are deterministic; candidates are compared by the lexicographic
objective (gate count, quantum cost, logical depth) with a canonical
serialization as the final tie-break.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations
from typing import Callable, Iterator, Optional

from revsynth import kernels
from revsynth.circuit import (
    Circuit,
    Control,
    Gate,
    McSwap,
    Mpmct,
    swap,
    verify,
    x_gate,
)
from revsynth.matching import build_instance, min_weight_perfect_matching
from revsynth.metrics import objective
from revsynth.permutation import Permutation
from revsynth.transposition import transposition_gates


@dataclass(frozen=True)
class RevColConfig:
    partial_match: bool = True
    swap_gates: bool = True
    inverted_column: bool = True
    output_permutation: bool = True
    transposition_mode: str = "aba"  # "aba" | "cascade"
    column_orders: str = "exhaustive"  # "exhaustive" | "greedy" | "fixed"
    fixed_order: Optional[tuple[int, ...]] = None
    # Widths above these fall back to greedy search.
    exhaustive_order_limit: int = 5
    exhaustive_output_perm_limit: int = 4

    def __post_init__(self) -> None:
        if self.column_orders == "fixed" and self.fixed_order is None:
            raise ValueError("fixed column order requested but none given")
        if self.transposition_mode not in ("aba", "cascade"):
            raise ValueError(f"unknown transposition mode {self.transposition_mode!r}")


#: Named optimization levels used by the 3-bit benchmark harness: each adds
#: one optimization to the previous one.
CONFIGS: dict[str, RevColConfig] = {
    "a": RevColConfig(
        partial_match=False, swap_gates=False, inverted_column=False, output_permutation=False
    ),
    "b": RevColConfig(swap_gates=False, inverted_column=False, output_permutation=False),
    "c": RevColConfig(inverted_column=False, output_permutation=False),
    "d": RevColConfig(inverted_column=False),
    "e": RevColConfig(),
}


def worst_case_bound(n: int) -> int:
    """Gate-count upper bound 2^(n-2) * (n^2 - 2n + 2) for n >= 2."""
    if n < 2:
        raise ValueError("bound defined for n >= 2")
    return (1 << (n - 2)) * (n * n - 2 * n + 2)


def drop_bit(x: int, line: int) -> int:
    """Delete bit ``line`` from x, shifting higher bits down."""
    return (x & ((1 << line) - 1)) | ((x >> (line + 1)) << line)


# --------------------------------------------------------------------------
# column matching

def _match_variants(
    outputs: tuple[int, ...], width: int, line: int, cfg: RevColConfig, threshold: int
) -> Iterator[tuple[tuple[Gate, ...], tuple[int, ...]]]:
    """Yield (tail_gates, matched_table) alternatives for one column.

    Each alternative satisfies: the circuit realizing ``matched_table``
    followed by ``tail_gates`` realizes ``outputs``, and bit ``line`` of
    ``matched_table[x]`` equals bit ``line`` of x for every x.  With the
    inverted-column optimization, whenever more than ``threshold`` pairs
    mismatch the whole column is first flipped by a NOT, which leaves the
    complement set (fewer pairs) to swap.  The threshold is 2^(n-2) for the
    n of the function being synthesized, so it stays fixed down the
    recursion.
    """
    zeros, ones = kernels.mismatch_sides(outputs, line)
    if cfg.inverted_column and len(zeros) > threshold:
        flipped = kernels.flip_column(outputs, line)
        z2, o2 = kernels.mismatch_sides(flipped, line)
        plans = [(flipped, z2, o2, True)]
    else:
        plans = [(outputs, zeros, ones, False)]
    for table, zs, os, inverted in plans:
        gates: list[Gate] = []
        if zs:
            matching = min_weight_perfect_matching(build_instance(zs, os, width))
            for u, v in sorted(matching.pairs):
                gates.extend(transposition_gates(u, v, width, cfg.transposition_mode))
                table = kernels.swap_values(table, u, v)
        if inverted:
            gates.append(x_gate(line))
        yield tuple(gates), table


def _threshold(width: int) -> int:
    return (1 << (width - 2)) if width >= 2 else 0


def match_column(
    residual: Permutation, line: int, cfg: RevColConfig
) -> tuple[Circuit, Permutation]:
    """Match one column.

    Returns (tail, matched) such that the circuit for ``matched`` followed
    by ``tail`` realizes ``residual``, and column ``line`` of ``matched`` is
    fixed (bit ``line`` of matched(x) equals bit ``line`` of x).  When the
    inverted-column optimization is enabled and more than 2^(n-2) pairs
    mismatch, the column is flipped by a NOT before pairing.
    """
    width = residual.width
    [(gates, table)] = _match_variants(
        residual.outputs, width, line, cfg, _threshold(width)
    )
    return Circuit(width, gates), Permutation(width, table)


def split_cofactors(matched: Permutation, line: int) -> tuple[Permutation, Permutation]:
    """Cofactors of a table whose column ``line`` is fully matched."""
    cof0, cof1 = _split_tables(matched.outputs, line)
    return (
        Permutation(matched.width - 1, cof0),
        Permutation(matched.width - 1, cof1),
    )


def _split_tables(
    outputs: tuple[int, ...], line: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    half = len(outputs) // 2
    bit = 1 << line
    cof0 = [0] * half
    cof1 = [0] * half
    for x, v in enumerate(outputs):
        if (v ^ x) & bit:
            raise RuntimeError(f"internal error: column {line} is not matched")
        (cof1 if x & bit else cof0)[drop_bit(x, line)] = drop_bit(v, line)
    for cof in (cof0, cof1):
        seen = 0
        for v in cof:
            seen |= 1 << v
        if seen != (1 << half) - 1:
            raise RuntimeError("internal error: cofactor is not a bijection")
    return tuple(cof0), tuple(cof1)


def _embed_gate(gate: Gate, line: int, control: Optional[Control]) -> Gate:
    """Lift a gate from the (n-1)-line cofactor into n lines, skipping
    ``line`` and optionally adding a control on it."""

    def up(j: int) -> int:
        return j if j < line else j + 1

    controls = frozenset(Control(up(c.line), c.positive) for c in gate.controls)
    if control is not None:
        controls |= {control}
    if isinstance(gate, Mpmct):
        return Mpmct(controls, up(gate.target))
    return McSwap(controls, up(gate.a), up(gate.b))


def recombine(
    sub0: Circuit, sub1: Circuit, line: int, equal: bool
) -> Circuit:
    """Lift cofactor circuits back to n lines around the matched column.

    Equal cofactors (partial match) share one uncontrolled sub-circuit;
    otherwise sub0 gains a negative and sub1 a positive control on the
    matched line, concatenated sub0 first.
    """
    width = sub0.width + 1
    if equal:
        gates = tuple(_embed_gate(g, line, None) for g in sub0.gates)
    else:
        neg = Control(line, False)
        pos = Control(line, True)
        gates = tuple(_embed_gate(g, line, neg) for g in sub0.gates) + tuple(
            _embed_gate(g, line, pos) for g in sub1.gates
        )
    return Circuit(width, gates)


def detect_swap_case(spec: Permutation) -> Optional[Gate]:
    """SWAP(0, 1) iff the 2-line table is exactly the column exchange."""
    if spec.width != 2:
        raise ValueError("swap-case detection is defined for width 2 only")
    if spec.outputs == (0, 2, 1, 3):
        return swap(0, 1)
    return None


# --------------------------------------------------------------------------
# recursive search

SubSolver = Callable[..., tuple[Gate, ...]]

_IDENTITIES: dict[int, tuple[int, ...]] = {}


def _identity_table(size: int) -> tuple[int, ...]:
    table = _IDENTITIES.get(size)
    if table is None:
        table = _IDENTITIES[size] = tuple(range(size))
    return table


def _gates_sort_key(gates: tuple[Gate, ...]) -> tuple:
    return tuple(g.sort_key() for g in gates)


def _solve_cofactors(
    matched: tuple[int, ...],
    width: int,
    line: int,
    cfg: RevColConfig,
    threshold: int,
    suborder: Optional[tuple[int, ...]],
    cache: dict,
    subsolver: SubSolver,
) -> tuple[Gate, ...]:
    cof0, cof1 = _split_tables(matched, line)
    if cfg.partial_match and cof0 == cof1:
        sub = subsolver(cof0, cfg, threshold, suborder, cache, subsolver)
        return tuple(_embed_gate(g, line, None) for g in sub)
    sub0 = subsolver(cof0, cfg, threshold, suborder, cache, subsolver)
    sub1 = subsolver(cof1, cfg, threshold, suborder, cache, subsolver)
    neg = Control(line, False)
    pos = Control(line, True)
    return tuple(_embed_gate(g, line, neg) for g in sub0) + tuple(
        _embed_gate(g, line, pos) for g in sub1
    )


def _greedy_column(
    outputs: tuple[int, ...], width: int, cfg: RevColConfig, threshold: int
) -> int:
    best = None
    for line in range(width):
        for gates, _ in _match_variants(outputs, width, line, cfg, threshold):
            cand = (objective(gates, width), line)
            if best is None or cand < best:
                best = cand
    return best[1]


def _synth(
    outputs: tuple[int, ...],
    cfg: RevColConfig,
    threshold: int,
    order: Optional[tuple[int, ...]],
    cache: dict,
    subsolver: SubSolver,
) -> tuple[Gate, ...]:
    """Synthesize gates realizing the map x -> outputs[x]."""
    size = len(outputs)
    if outputs == _identity_table(size):
        return ()
    width = size.bit_length() - 1
    key = (outputs, order, threshold)
    cached = cache.get(key)
    if cached is not None:
        return cached
    if width == 2 and cfg.swap_gates and outputs == (0, 2, 1, 3):
        result = (swap(0, 1),)
        cache[key] = result
        return result
    if order is not None:
        columns: tuple[int, ...] = (order[0],)
    elif cfg.column_orders != "greedy" and width <= cfg.exhaustive_order_limit:
        columns = tuple(range(width))
    else:
        columns = (_greedy_column(outputs, width, cfg, threshold),)
    best = None
    for line in columns:
        suborder = (
            tuple(l if l < line else l - 1 for l in order[1:]) if order is not None else None
        )
        for tail, matched in _match_variants(outputs, width, line, cfg, threshold):
            gates = (
                _solve_cofactors(
                    matched, width, line, cfg, threshold, suborder, cache, subsolver
                )
                + tail
            )
            cand = (objective(gates, width), _gates_sort_key(gates), gates)
            if best is None or cand[:2] < best[:2]:
                best = cand
    cache[key] = best[2]
    return best[2]


# --------------------------------------------------------------------------
# output-column relabeling

def _relabel_outputs(
    outputs: tuple[int, ...], width: int, sigma: tuple[int, ...]
) -> tuple[int, ...]:
    """Read output column sigma[i] as column i: bit i of the result is bit
    sigma[i] of the original value."""
    return tuple(
        sum((v >> sigma[i] & 1) << i for i in range(width)) for v in outputs
    )


def swap_network(sigma: tuple[int, ...]) -> tuple[Gate, ...]:
    """SWAP gates realizing the line relabeling: bit i moves to line sigma[i]."""
    gates: list[Gate] = []
    seen: set[int] = set()
    for start in range(len(sigma)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        j = sigma[start]
        while j != start:
            cycle.append(j)
            seen.add(j)
            j = sigma[j]
        for nxt in cycle[1:]:
            gates.append(swap(cycle[0], nxt))
    return tuple(gates)


def _synth_for_sigma(
    outputs: tuple[int, ...],
    width: int,
    sigma: tuple[int, ...],
    cfg: RevColConfig,
    threshold: int,
    order: Optional[tuple[int, ...]],
    cache: dict,
    subsolver: SubSolver,
) -> tuple[Gate, ...]:
    relabeled = _relabel_outputs(outputs, width, sigma)
    return _synth(relabeled, cfg, threshold, order, cache, subsolver) + swap_network(sigma)


def synthesize(
    outputs: tuple[int, ...],
    width: int,
    cfg: RevColConfig,
    cache: Optional[dict] = None,
    subsolver: Optional[SubSolver] = None,
) -> tuple[Gate, ...]:
    """Top-level search: column orders plus, when enabled, output-column
    relabelings.  Returns gates realizing the map x -> outputs[x]."""
    if cache is None:
        cache = {}
    if subsolver is None:
        subsolver = _synth
    order = cfg.fixed_order if cfg.column_orders == "fixed" else None
    threshold = _threshold(width)
    identity_sigma = tuple(range(width))
    if not cfg.output_permutation or width < 2:
        return _synth(outputs, cfg, threshold, order, cache, subsolver)

    def evaluate(sigma: tuple[int, ...]) -> tuple:
        gates = _synth_for_sigma(
            outputs, width, sigma, cfg, threshold, order, cache, subsolver
        )
        return (objective(gates, width), _gates_sort_key(gates), gates)

    if width <= cfg.exhaustive_output_perm_limit:
        best = None
        for sigma in permutations(range(width)):
            cand = evaluate(sigma)
            if best is None or cand[:2] < best[:2]:
                best = cand
        return best[2]
    # Hill climbing over single line exchanges, steepest descent.
    best_sigma = identity_sigma
    best = evaluate(best_sigma)
    improved = True
    while improved:
        improved = False
        for i, j in combinations(range(width), 2):
            sigma = list(best_sigma)
            sigma[i], sigma[j] = sigma[j], sigma[i]
            cand = evaluate(tuple(sigma))
            if cand[:2] < best[:2]:
                best = cand
                best_sigma = tuple(sigma)
                improved = True
    return best[2]


def revcol_synth(
    spec: Permutation,
    cfg: Optional[RevColConfig] = None,
    cache: Optional[dict] = None,
) -> Circuit:
    """Synthesize and verify a circuit realizing ``spec``.

    ``cache`` may be shared between calls with the same config to reuse
    sub-table solutions across a benchmark run.
    """
    if cfg is None:
        cfg = RevColConfig()
    if cfg.column_orders == "fixed" and len(cfg.fixed_order) != spec.width:
        raise ValueError("fixed order length must equal the spec width")
    circuit = Circuit(spec.width, synthesize(spec.outputs, spec.width, cfg, cache))
    if not verify(circuit, spec):
        raise RuntimeError("internal error: synthesized circuit failed verification")
    return circuit
