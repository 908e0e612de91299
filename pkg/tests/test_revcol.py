"""Tests for the column-wise synthesizer."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revsynth.circuit import Circuit, McSwap, Mpmct, swap, verify
from revsynth.permutation import Permutation, compose
from revsynth.revcol import (
    CONFIGS,
    RevColConfig,
    detect_swap_case,
    drop_bit,
    match_column,
    recombine,
    revcol_synth,
    split_cofactors,
    swap_network,
    synthesize,
    worst_case_bound,
)

# A hard 3-line example: worked through by hand, it needs 13 gates without
# the inverted-column optimization and 8 with it, under the column order
# (1, 2, 0).
HARD3 = Permutation(3, (6, 7, 4, 2, 5, 3, 0, 1))


def _fixed_cfg(**kwargs) -> RevColConfig:
    return RevColConfig(
        output_permutation=False,
        column_orders="fixed",
        fixed_order=(1, 2, 0),
        **kwargs,
    )


class TestWorstCaseBound:
    def test_values(self):
        assert worst_case_bound(2) == 2
        assert worst_case_bound(3) == 10
        assert worst_case_bound(4) == 40
        assert worst_case_bound(5) == 136

    def test_rejects_width_below_two(self):
        with pytest.raises(ValueError):
            worst_case_bound(1)


class TestDropBit:
    def test_examples(self):
        assert drop_bit(0b1011, 0) == 0b101
        assert drop_bit(0b1011, 1) == 0b101
        assert drop_bit(0b1011, 2) == 0b111
        assert drop_bit(0b1011, 3) == 0b011

    @given(st.integers(0, 255), st.integers(0, 7))
    def test_inserting_back_recovers(self, x, line):
        stripped = drop_bit(x, line)
        low = stripped & ((1 << line) - 1)
        rebuilt = low | ((x >> line & 1) << line) | ((stripped >> line) << (line + 1))
        assert rebuilt == x


class TestMatchColumn:
    def test_fixes_the_column(self):
        rng = random.Random(7)
        cfg = RevColConfig(inverted_column=False)
        for _ in range(50):
            spec = Permutation.random(3, rng)
            line = rng.randrange(3)
            tail, matched = match_column(spec, line, cfg)
            bit = 1 << line
            assert all((matched(x) ^ x) & bit == 0 for x in range(8))
            # circuit(matched) followed by tail realizes the spec
            recombined = compose(tail.to_permutation(), matched)
            assert recombined == spec

    def test_inverted_column_kicks_in(self):
        # Column 0 of the complement table mismatches everywhere: 8 values,
        # 4 pairs > threshold 2, so one NOT fixes it entirely.
        spec = Permutation(3, tuple(x ^ 1 for x in range(8)))
        tail, matched = match_column(spec, 0, RevColConfig())
        assert matched.is_identity()
        assert list(tail.gates) == [Mpmct(frozenset(), 0)]

    def test_no_inversion_at_threshold(self):
        # Exactly 2 mismatched pairs on a 3-line table: at the threshold,
        # not above it, so no NOT may appear.
        spec = Permutation(3, (1, 0, 3, 2, 4, 5, 6, 7))
        tail, matched = match_column(spec, 0, RevColConfig())
        assert not any(
            isinstance(g, Mpmct) and not g.controls for g in tail.gates
        )
        assert compose(tail.to_permutation(), matched) == spec


class TestSplitRecombine:
    def test_split_cofactors(self):
        # table with column 0 matched
        spec = Permutation(3, (0, 1, 6, 3, 4, 7, 2, 5))
        cof0, cof1 = split_cofactors(spec, 0)
        assert cof0.outputs == (0, 3, 2, 1)
        assert cof1.outputs == (0, 1, 3, 2)

    def test_split_rejects_unmatched_column(self):
        spec = Permutation(3, (1, 0, 2, 3, 4, 5, 6, 7))
        with pytest.raises(RuntimeError):
            split_cofactors(spec, 0)

    @given(st.integers(0, 2 ** 31 - 1), st.integers(0, 2))
    @settings(max_examples=60)
    def test_recombine_inverts_split(self, seed, line):
        rng = random.Random(seed)
        cof0 = Permutation.random(2, rng)
        cof1 = Permutation.random(2, rng)
        sub0 = revcol_synth(cof0)
        sub1 = revcol_synth(cof1)
        lifted = recombine(sub0, sub1, line, equal=False)
        back0, back1 = split_cofactors(lifted.to_permutation(), line)
        assert back0 == cof0
        assert back1 == cof1

    def test_recombine_partial_match_shares_circuit(self):
        sub = revcol_synth(Permutation(2, (1, 0, 3, 2)))
        lifted = recombine(sub, sub, 1, equal=True)
        assert len(lifted) == len(sub)
        assert all(not g.controls for g in lifted.gates)


class TestSwapCase:
    def test_detects_column_exchange(self):
        gate = detect_swap_case(Permutation(2, (0, 2, 1, 3)))
        assert gate == swap(0, 1)

    def test_rejects_other_tables(self):
        assert detect_swap_case(Permutation(2, (1, 0, 2, 3))) is None
        with pytest.raises(ValueError):
            detect_swap_case(Permutation(3, tuple(range(8))))

    def test_swap_gate_saves_gates(self):
        spec = Permutation(2, (0, 2, 1, 3))
        with_swap = revcol_synth(spec, CONFIGS["c"])
        without = revcol_synth(spec, CONFIGS["b"])
        assert len(with_swap) == 1
        assert isinstance(with_swap.gates[0], McSwap)
        assert len(without) == 3


class TestSwapNetwork:
    def test_identity_is_empty(self):
        assert swap_network((0, 1, 2)) == ()

    def test_transposition(self):
        assert swap_network((1, 0)) == (swap(0, 1),)

    @given(st.permutations(list(range(5))))
    def test_realizes_relabeling(self, sigma):
        sigma = tuple(sigma)
        circuit = Circuit(5, swap_network(sigma))
        for i in range(5):
            assert circuit.simulate(1 << i) == 1 << sigma[i]


class TestHardThreeLineExample:
    def test_without_inverted_column(self):
        cfg = _fixed_cfg(inverted_column=False)
        circuit = revcol_synth(HARD3, cfg)
        assert len(circuit) == 13

    def test_with_inverted_column(self):
        cfg = _fixed_cfg(inverted_column=True)
        circuit = revcol_synth(HARD3, cfg)
        assert len(circuit) == 8

    def test_full_search_is_no_worse(self):
        circuit = revcol_synth(HARD3, RevColConfig(output_permutation=False))
        assert len(circuit) <= 8


class TestPartialMatchExample:
    # Both cofactors of column 2 are equal, so the partial match halves the
    # recursive work on this bitwise-complement-style table.
    SPEC = Permutation(3, (7, 5, 3, 1, 6, 4, 2, 0))

    def test_partial_match_gate_count(self):
        circuit = revcol_synth(self.SPEC, CONFIGS["b"])
        assert len(circuit) == 10

    def test_partial_match_never_hurts(self):
        base = revcol_synth(self.SPEC, CONFIGS["a"])
        with_partial = revcol_synth(self.SPEC, CONFIGS["b"])
        assert len(base) >= len(with_partial)


class TestSynthesis:
    @pytest.mark.parametrize("name", sorted(CONFIGS))
    def test_configs_verify_on_random_specs(self, name):
        rng = random.Random(123)
        cfg = CONFIGS[name]
        for _ in range(20):
            spec = Permutation.random(3, rng)
            circuit = revcol_synth(spec, cfg)
            assert verify(circuit, spec)

    def test_identity_yields_empty_circuit(self):
        for n in range(1, 5):
            assert len(revcol_synth(Permutation.identity(n))) == 0

    def test_bound_respected(self):
        rng = random.Random(99)
        cfg = CONFIGS["e"]
        for n in (3, 4):
            for _ in range(10):
                spec = Permutation.random(n, rng)
                circuit = revcol_synth(spec, cfg)
                assert len(circuit) <= worst_case_bound(n)

    def test_greedy_verifies_on_wider_specs(self):
        rng = random.Random(5)
        cfg = RevColConfig(column_orders="greedy", output_permutation=False)
        for _ in range(5):
            spec = Permutation.random(5, rng)
            assert verify(revcol_synth(spec, cfg), spec)

    def test_cascade_mode_verifies(self):
        rng = random.Random(6)
        cfg = RevColConfig(transposition_mode="cascade", output_permutation=False)
        for _ in range(10):
            spec = Permutation.random(3, rng)
            assert verify(revcol_synth(spec, cfg), spec)

    def test_shared_cache_is_consistent(self):
        rng = random.Random(17)
        cfg = RevColConfig()
        cache: dict = {}
        specs = [Permutation.random(3, rng) for _ in range(15)]
        shared = [revcol_synth(s, cfg, cache) for s in specs]
        fresh = [revcol_synth(s, cfg) for s in specs]
        assert [c.gates for c in shared] == [c.gates for c in fresh]

    def test_fixed_order_length_checked(self):
        with pytest.raises(ValueError):
            revcol_synth(HARD3, RevColConfig(column_orders="fixed", fixed_order=(0, 1)))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            RevColConfig(column_orders="fixed")
        with pytest.raises(ValueError):
            RevColConfig(transposition_mode="zigzag")

    def test_synthesize_matches_revcol_synth(self):
        cfg = RevColConfig()
        gates = synthesize(HARD3.outputs, 3, cfg)
        assert Circuit(3, gates).to_permutation() == HARD3
