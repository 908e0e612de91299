"""Benchmark harnesses.

``bench3`` synthesizes every 3-line permutation (40320 functions) with the
named optimization levels plus the transformation baseline and tallies a
gate-count histogram per column.  ``run_suite`` synthesizes a small set of
well-known 4-line benchmark functions.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional, Sequence

from revsynth.baselines import mmd_synth
from revsynth.circuit import Circuit
from revsynth.metrics import cost_report
from revsynth.permutation import Permutation
from revsynth.portfolio import hybrid_synth
from revsynth.revcol import CONFIGS, revcol_synth

BENCH3_COLUMNS = ("a", "b", "c", "d", "e", "mmd")


def _synth_column(column: str, spec: Permutation, cache: dict) -> Circuit:
    if column == "mmd":
        return mmd_synth(spec, bidirectional=True)
    if column == "hybrid":
        return hybrid_synth(spec, cache=cache)
    return revcol_synth(spec, CONFIGS[column], cache)


@dataclass
class Bench3Result:
    columns: tuple[str, ...]
    histograms: dict[str, Counter]

    def average(self, column: str) -> float:
        hist = self.histograms[column]
        return sum(gc * n for gc, n in hist.items()) / sum(hist.values())

    def total(self, column: str) -> int:
        return sum(self.histograms[column].values())

    def max_gate_count(self, column: str) -> int:
        return max(self.histograms[column])


def _bench3_chunk(args: tuple[Sequence[str], int, int]) -> dict[str, Counter]:
    columns, start, step = args
    caches: dict[str, dict] = {c: {} for c in columns}
    histograms: dict[str, Counter] = {c: Counter() for c in columns}
    tables = list(permutations(range(8)))
    for i in range(start, len(tables), step):
        spec = Permutation(3, tables[i])
        for column in columns:
            circuit = _synth_column(column, spec, caches[column])
            histograms[column][len(circuit.gates)] += 1
    return histograms


def bench3(
    columns: Sequence[str] = BENCH3_COLUMNS,
    jobs: int = 1,
    progress: Optional[Callable[[int, int], None]] = None,
) -> Bench3Result:
    """Synthesize all 40320 3-line permutations; histogram per column."""
    for column in columns:
        if column not in CONFIGS and column not in ("mmd", "hybrid"):
            raise ValueError(f"unknown bench column {column!r}")
    histograms: dict[str, Counter] = {c: Counter() for c in columns}
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(
                _bench3_chunk, [(tuple(columns), k, jobs) for k in range(jobs)]
            )
        for part in parts:
            for column, hist in part.items():
                histograms[column].update(hist)
    else:
        caches: dict[str, dict] = {c: {} for c in columns}
        total = 40320
        for i, table in enumerate(permutations(range(8))):
            spec = Permutation(3, table)
            for column in columns:
                circuit = _synth_column(column, spec, caches[column])
                histograms[column][len(circuit.gates)] += 1
            if progress is not None and (i + 1) % 2520 == 0:
                progress(i + 1, total)
    return Bench3Result(tuple(columns), histograms)


#: 4-line benchmark functions (truth-table output columns).  Functions
#: whose published tables are not bijections are omitted.
SUITE_SPECS: dict[str, tuple[int, ...]] = {
    "decode42": (1, 2, 4, 8, 0, 3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15),
    "imark": (4, 5, 2, 14, 0, 3, 6, 10, 11, 8, 15, 1, 12, 13, 7, 9),
    "oc5": (6, 0, 12, 15, 7, 1, 5, 2, 4, 10, 13, 3, 11, 8, 14, 9),
    "oc6": (9, 0, 2, 15, 11, 6, 7, 8, 14, 3, 4, 13, 5, 1, 12, 10),
    "oc7": (6, 15, 9, 5, 13, 12, 3, 7, 2, 10, 1, 11, 0, 14, 4, 8),
    "oc8": (11, 3, 9, 2, 7, 13, 15, 14, 8, 1, 4, 10, 0, 12, 6, 5),
    "rd32": (0, 7, 6, 9, 4, 11, 10, 13, 8, 15, 14, 1, 12, 3, 2, 5),
    "shift4": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0),
    "4_49": (15, 1, 12, 3, 5, 6, 8, 7, 0, 10, 13, 9, 2, 4, 14, 11),
}


@dataclass
class SuiteEntry:
    name: str
    spec: Permutation
    circuits: dict[str, Circuit]

    def report(self, method: str):
        return cost_report(self.circuits[method])


def run_suite(
    names: Optional[Sequence[str]] = None,
    methods: Sequence[str] = ("revcol", "mmd", "hybrid"),
) -> list[SuiteEntry]:
    if names is None:
        names = list(SUITE_SPECS)
    entries = []
    for name in names:
        if name not in SUITE_SPECS:
            raise ValueError(f"unknown benchmark {name!r}")
        spec = Permutation(4, SUITE_SPECS[name])
        circuits: dict[str, Circuit] = {}
        for method in methods:
            if method == "revcol":
                circuits[method] = revcol_synth(spec)
            elif method == "mmd":
                circuits[method] = mmd_synth(spec)
            elif method == "hybrid":
                circuits[method] = hybrid_synth(spec)
            else:
                raise ValueError(f"unknown method {method!r}")
        entries.append(SuiteEntry(name, spec, circuits))
    return entries
