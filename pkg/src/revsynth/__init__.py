"""revsynth: ancilla-free reversible circuit synthesis from permutations."""

from revsynth.baselines import bubble_sorter, mmd_synth, sort_synth
from revsynth.circuit import (
    Circuit,
    Control,
    McSwap,
    Mpmct,
    cnot,
    swap,
    toffoli,
    verify,
    x_gate,
)
from revsynth.kernels import backend
from revsynth.metrics import CostReport, cost_report, logical_depth, quantum_cost
from revsynth.permutation import Permutation
from revsynth.portfolio import hybrid_synth
from revsynth.revcol import CONFIGS, RevColConfig, revcol_synth, worst_case_bound

__version__ = "0.1.0"

__all__ = [
    "CONFIGS",
    "Circuit",
    "Control",
    "CostReport",
    "McSwap",
    "Mpmct",
    "Permutation",
    "RevColConfig",
    "backend",
    "bubble_sorter",
    "cnot",
    "cost_report",
    "hybrid_synth",
    "logical_depth",
    "mmd_synth",
    "quantum_cost",
    "revcol_synth",
    "sort_synth",
    "swap",
    "toffoli",
    "verify",
    "worst_case_bound",
    "x_gate",
]
