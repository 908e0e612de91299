import random

import pytest

from revsynth.circuit import Circuit
from revsynth.metrics import quantum_cost
from revsynth.permutation import hamming_distance
from revsynth.transposition import (
    aba_gates,
    expected_gate_count,
    synth_transposition_aba,
    synth_transposition_cascade,
    transposition_gates,
)


def _is_transposition(circuit: Circuit, u: int, v: int) -> bool:
    table = circuit.to_permutation().outputs
    return all(
        w == (v if x == u else u if x == v else x) for x, w in enumerate(table)
    )


def test_single_bit_transposition_is_one_gate():
    for mode in ("cascade", "aba"):
        gates = transposition_gates(0b000, 0b100, 3, mode)
        assert len(gates) == 1
        assert _is_transposition(Circuit(3, gates), 0, 4)


def test_cascade_is_palindrome():
    gates = synth_transposition_cascade(0b010, 0b101, 3).gates
    assert len(gates) == 5
    assert gates == gates[::-1]


def test_aba_structure():
    # paper example: 010 <-> 111 on 3 lines, pivot = lowest differing line 0
    gates = aba_gates(0b010, 0b111, 3)
    assert len(gates) == 3
    a1, b, a2 = gates
    assert a1 == a2
    assert len(b.controls) == 2  # fully controlled on the other lines


def test_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        transposition_gates(3, 3, 3)
    with pytest.raises(ValueError):
        aba_gates(1, 1, 2)


def test_explicit_pivot():
    gates = aba_gates(0b010, 0b111, 3, pivot=2)
    assert _is_transposition(Circuit(3, gates), 0b010, 0b111)
    with pytest.raises(ValueError):
        aba_gates(0b010, 0b111, 3, pivot=1)  # line 1 does not differ


def test_random_transpositions_realized_exactly():
    rng = random.Random(42)
    for _ in range(500):
        width = rng.randrange(1, 7)
        u, v = rng.sample(range(1 << width), 2)
        h = hamming_distance(u, v, width)
        cascade = synth_transposition_cascade(u, v, width)
        aba = synth_transposition_aba(u, v, width)
        assert _is_transposition(cascade, u, v)
        assert _is_transposition(aba, u, v)
        assert len(cascade.gates) == len(aba.gates) == 2 * h - 1
        assert len(aba.gates) == expected_gate_count(u, v, width)
        assert quantum_cost(aba) <= quantum_cost(cascade)
        if h >= 2 and width >= 3:
            assert quantum_cost(aba) < quantum_cost(cascade)
