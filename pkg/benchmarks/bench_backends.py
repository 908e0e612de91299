#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallbacks.

The package selects its kernel backend at import time; setting
REVSYNTH_BACKEND=python forces the fallback.  This script times both
implementations directly on the same workloads:

* raw kernel micro-benchmarks (simulation, table operations), and
* end-to-end synthesis of a fixed batch of random permutations.

Usage: python3 benchmarks/bench_backends.py [--widths 3,4] [--specs 50]
"""

import argparse
import random
import time

from revsynth import _kernels_py, kernels
from revsynth.circuit import Circuit, encode_gates
from revsynth.permutation import Permutation
from revsynth.revcol import RevColConfig, synthesize

try:
    from revsynth import _speedups
except ImportError:
    _speedups = None


def _time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernels(width: int, rounds: int):
    rng = random.Random(0)
    size = 1 << width
    spec = Permutation.random(width, rng)
    circuit = Circuit(width, synthesize(spec.outputs, width, RevColConfig()))
    enc = encode_gates(circuit.gates)
    outputs = spec.outputs
    u, v = rng.sample(range(size), 2)

    cases = {
        "simulate_table": lambda mod: mod.simulate_table(enc, width),
        "swap_values": lambda mod: mod.swap_values(outputs, u, v),
        "flip_column": lambda mod: mod.flip_column(outputs, 0),
        "mismatch_sides": lambda mod: mod.mismatch_sides(outputs, 0),
    }
    print(f"kernel micro-benchmarks (width {width}, {rounds} calls per timing):")
    for name, call in cases.items():
        py = _time(lambda: [call(_kernels_py) for _ in range(rounds)])
        line = f"  {name:<16} python {py * 1e3:8.2f} ms"
        if _speedups is not None:
            cy = _time(lambda: [call(_speedups) for _ in range(rounds)])
            line += f"   compiled {cy * 1e3:8.2f} ms   speedup {py / cy:5.1f}x"
        print(line)


def bench_synthesis(width: int, count: int):
    rng = random.Random(1)
    specs = [Permutation.random(width, rng) for _ in range(count)]
    cfg = RevColConfig(column_orders="greedy" if width > 4 else "exhaustive")

    def run():
        cache: dict = {}
        for spec in specs:
            synthesize(spec.outputs, width, cfg, cache)

    saved = kernels.set_backend("python")
    py = _time(run, repeat=3)
    kernels.set_backend(saved)
    line = (
        f"  synthesis  n={width} x{count:<4} python {py:7.3f} s"
    )
    if kernels.backend() == "compiled":
        cy = _time(run, repeat=3)
        line += f"   compiled {cy:7.3f} s   speedup {py / cy:5.1f}x"
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--widths", default="3,4", help="comma-separated line counts")
    parser.add_argument("--specs", type=int, default=50, help="specs per width")
    parser.add_argument("--rounds", type=int, default=2000, help="kernel calls per timing")
    args = parser.parse_args()

    print(f"active backend: {kernels.backend()}")
    if _speedups is None:
        print("compiled backend not available; timing the fallback only")
    widths = [int(w) for w in args.widths.split(",")]
    for width in widths:
        bench_kernels(width, args.rounds)
    print("end-to-end synthesis:")
    for width in widths:
        bench_synthesis(width, args.specs)


if __name__ == "__main__":
    main()
