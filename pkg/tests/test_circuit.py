import random

import pytest

from revsynth.circuit import (
    Circuit,
    Control,
    McSwap,
    Mpmct,
    add_control,
    cnot,
    embed,
    first_mismatch,
    gate_apply,
    swap,
    toffoli,
    verify,
    x_gate,
)
from revsynth.permutation import Permutation


def test_gate_validation():
    with pytest.raises(ValueError):
        Mpmct(frozenset({Control(1, True)}), 1)  # target is a control
    with pytest.raises(ValueError):
        Mpmct(frozenset({Control(0, True), Control(0, False)}), 1)
    with pytest.raises(ValueError):
        McSwap(frozenset(), 2, 2)
    with pytest.raises(ValueError):
        McSwap(frozenset({Control(1, True)}), 0, 1)


def test_gate_apply_basics():
    assert gate_apply(x_gate(0), 0b110) == 0b111
    assert gate_apply(cnot(2, 0), 0b100) == 0b101
    assert gate_apply(cnot(2, 0), 0b000) == 0b000
    assert gate_apply(cnot(2, 0, positive=False), 0b000) == 0b001
    assert gate_apply(toffoli(0, 1, 2), 0b011) == 0b111
    assert gate_apply(swap(0, 2), 0b001) == 0b100
    assert gate_apply(swap(0, 2), 0b101) == 0b101
    fredkin = McSwap(frozenset({Control(1, True)}), 0, 2)
    assert gate_apply(fredkin, 0b011) == 0b110
    assert gate_apply(fredkin, 0b001) == 0b001


def test_gates_are_involutions():
    rng = random.Random(5)
    gates = [
        x_gate(1),
        cnot(0, 3),
        toffoli(1, 2, 0),
        swap(1, 3),
        McSwap(frozenset({Control(0, False)}), 1, 2),
        Mpmct(frozenset({Control(2, True), Control(3, False)}), 1),
    ]
    for g in gates:
        for _ in range(20):
            x = rng.randrange(16)
            assert gate_apply(g, gate_apply(g, x)) == x


def test_circuit_semantics_leftmost_first():
    # NOT(0) then CNOT(0 -> 1): on input 0, NOT first gives 1, CNOT gives 3.
    c = Circuit(2, (x_gate(0), cnot(0, 1)))
    assert c.simulate(0) == 3
    # the reversed order gives 1
    assert Circuit(2, (cnot(0, 1), x_gate(0))).simulate(0) == 1


def test_circuit_width_validation():
    with pytest.raises(ValueError):
        Circuit(2, (x_gate(2),))
    with pytest.raises(ValueError):
        Circuit(1, (swap(0, 1),))


def test_to_permutation_and_verify():
    c = Circuit(2, (swap(0, 1),))
    assert c.to_permutation().outputs == (0, 2, 1, 3)
    assert verify(c, Permutation(2, (0, 2, 1, 3)))
    assert not verify(c, Permutation.identity(2))
    assert first_mismatch(c, Permutation.identity(2)) == 1
    assert first_mismatch(c, c.to_permutation()) is None


def test_concatenation():
    a = Circuit(2, (x_gate(0),))
    b = Circuit(2, (cnot(0, 1),))
    assert (a + b).gates == (x_gate(0), cnot(0, 1))
    with pytest.raises(ValueError):
        a + Circuit(3, ())


def test_add_control():
    base = Circuit(3, (x_gate(0), cnot(0, 1)))
    gated = add_control(base, 2, True)
    # with line 2 low, nothing happens
    assert gated.simulate(0b000) == 0b000
    # with line 2 high, behaves like the base circuit
    assert gated.simulate(0b100) == 0b100 | base.simulate(0)
    with pytest.raises(ValueError):
        add_control(base, 1, True)


def test_embed():
    base = Circuit(2, (cnot(0, 1),))
    wide = embed(base, {0: 2, 1: 0}, 3)
    assert wide.width == 3
    assert gate_apply(wide.gates[0], 0b100) == 0b101
    with pytest.raises(ValueError):
        embed(base, {0: 1, 1: 1}, 3)
    with pytest.raises(ValueError):
        embed(base, {0: 0, 1: 3}, 3)


def test_random_circuit_is_reversible():
    rng = random.Random(11)
    for _ in range(20):
        gates = []
        for _ in range(rng.randrange(1, 12)):
            lines = rng.sample(range(4), rng.randrange(1, 4))
            target, controls = lines[0], lines[1:]
            gates.append(
                Mpmct(frozenset(Control(c, rng.random() < 0.5) for c in controls), target)
            )
        c = Circuit(4, tuple(gates))
        p = c.to_permutation()  # validates bijectivity
        inverse = c.reversed()
        assert verify(inverse, p.inverse())
