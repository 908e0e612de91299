"""Backend selection for the truth-table kernels.

The compiled Cython module ``revsynth._speedups`` is used when available;
otherwise the pure-Python twins from ``revsynth._kernels_py`` take over.
Set ``REVSYNTH_BACKEND=python`` to force the fallback (useful for the
backend comparison benchmark and for debugging).
"""

from __future__ import annotations

import os

from revsynth import _kernels_py

_forced = os.environ.get("REVSYNTH_BACKEND", "").lower()

if _forced == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from revsynth import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _kernels_py
        BACKEND = "python"

simulate_value = _impl.simulate_value
simulate_table = _impl.simulate_table
apply_gate_table = _impl.apply_gate_table
swap_values = _impl.swap_values
flip_column = _impl.flip_column
mismatch_sides = _impl.mismatch_sides


def backend() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return BACKEND


def set_backend(name: str) -> str:
    """Switch the active backend at runtime; returns the previous name.

    Used by the backend comparison benchmark; everything else should rely
    on the import-time selection.
    """
    global _impl, BACKEND
    global simulate_value, simulate_table, apply_gate_table
    global swap_values, flip_column, mismatch_sides
    previous = BACKEND
    if name == "python":
        _impl = _kernels_py
    elif name == "compiled":
        from revsynth import _speedups as _impl  # type: ignore[no-redef]
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name
    simulate_value = _impl.simulate_value
    simulate_table = _impl.simulate_table
    apply_gate_table = _impl.apply_gate_table
    swap_values = _impl.swap_values
    flip_column = _impl.flip_column
    mismatch_sides = _impl.mismatch_sides
    return previous
