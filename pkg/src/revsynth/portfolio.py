"""Hybrid synthesis: run several methods, keep the cheapest circuit.

Besides comparing whole-circuit results, the column-wise synthesizer can
hand every cofactor sub-table to the other methods and continue with
whichever wins there, so the portfolio also explores mixed circuits.
"""

from __future__ import annotations

from typing import Optional, Sequence

from revsynth import revcol
from revsynth.baselines import bubble_sorter, mmd_synth, sort_synth
from revsynth.circuit import Circuit, Gate, verify
from revsynth.metrics import objective
from revsynth.permutation import Permutation
from revsynth.revcol import RevColConfig

METHODS = ("revcol", "mmd", "bubble")

# Preference on equal objective: column-wise, then transformation, sorting.
_PRIORITY = {name: i for i, name in enumerate(METHODS)}


def _method_gates(
    name: str, outputs: tuple[int, ...], width: int, cfg: RevColConfig
) -> tuple[Gate, ...]:
    spec = Permutation(width, outputs)
    if name == "mmd":
        return mmd_synth(spec).gates
    if name == "bubble":
        return sort_synth(spec, bubble_sorter, cfg.transposition_mode).gates
    raise ValueError(f"unknown method {name!r}")


def _make_hook(methods: Sequence[str], memo: dict):
    """Sub-solver for the column-wise recursion that lets every alternative
    method bid on each cofactor sub-table."""
    others = [m for m in methods if m != "revcol"]

    def hook(outputs, cfg, threshold, order, cache, subsolver):
        key = (outputs, order, threshold)
        cached = memo.get(key)
        if cached is not None:
            return cached
        size = len(outputs)
        width = size.bit_length() - 1
        candidates = [
            ("revcol", revcol._synth(outputs, cfg, threshold, order, cache, subsolver))
        ]
        for name in others:
            # Sorting circuits grow quadratically with table size and never
            # win on wide sub-tables; skip them there to keep bids cheap.
            if width < 1 or (name == "bubble" and width > 3):
                continue
            candidates.append((name, _method_gates(name, outputs, width, cfg)))
        best = min(
            candidates,
            key=lambda c: (objective(c[1], width), _PRIORITY[c[0]]),
        )[1]
        memo[key] = best
        return best

    return hook


def hybrid_synth(
    spec: Permutation,
    methods: Sequence[str] = METHODS,
    cfg: Optional[RevColConfig] = None,
    cache: Optional[dict] = None,
) -> Circuit:
    """Synthesize with every requested method (plus the mixed column-wise
    variant when several are requested) and return the cheapest circuit by
    (gate count, quantum cost, logical depth).

    ``cache`` may be reused across calls to share sub-table solutions, but
    only with identical ``methods`` and ``cfg``.
    """
    if not methods:
        raise ValueError("at least one method is required")
    for name in methods:
        if name not in METHODS:
            raise ValueError(f"unknown method {name!r}")
    if cfg is None:
        cfg = RevColConfig()
    if cache is None:
        cache = {}
    width = spec.width
    candidates: list[tuple[int, int, tuple[Gate, ...]]] = []

    def add(rank: int, priority: int, gates: tuple[Gate, ...]) -> None:
        candidates.append((rank, priority, gates))

    if "revcol" in methods:
        if len(methods) > 1:
            hook = _make_hook(methods, cache.setdefault("hook-memo", {}))
            add(
                0,
                _PRIORITY["revcol"],
                revcol.synthesize(
                    spec.outputs, width, cfg, cache.setdefault("hook-synth", {}), hook
                ),
            )
        add(
            0,
            _PRIORITY["revcol"],
            revcol.synthesize(spec.outputs, width, cfg, cache.setdefault("pure", {})),
        )
    for name in methods:
        if name != "revcol":
            add(1, _PRIORITY[name], _method_gates(name, spec.outputs, width, cfg))
    _, _, best = min(
        candidates, key=lambda c: (objective(c[2], width), c[0], c[1])
    )
    circuit = Circuit(width, best)
    if not verify(circuit, spec):
        raise RuntimeError("internal error: hybrid circuit failed verification")
    return circuit
