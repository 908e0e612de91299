import random
from itertools import permutations

import pytest

from revsynth.matching import BipartiteInstance, build_instance, min_weight_perfect_matching


def test_build_instance_weights():
    inst = build_instance([0b000, 0b100], [0b111, 0b010], 3)
    assert inst.weights == ((5, 1), (3, 3))
    with pytest.raises(ValueError):
        build_instance([1], [2, 3], 3)
    with pytest.raises(ValueError):
        build_instance([], [], 3)


def test_fig3_instance():
    # mismatched sides {111, 100} and {010, 000}: optimal pairs
    # (111,010) and (100,000), total weight 4
    inst = build_instance([0b111, 0b100], [0b010, 0b000], 3)
    m = min_weight_perfect_matching(inst)
    assert set(m.pairs) == {(0b111, 0b010), (0b100, 0b000)}
    assert m.total_weight == 4


def test_singleton():
    inst = build_instance([3], [4], 3)
    m = min_weight_perfect_matching(inst)
    assert m.pairs == ((3, 4),)
    assert m.total_weight == 2 * 3 - 1


def _brute_force_minimum(inst: BipartiteInstance) -> int:
    k = len(inst.left)
    return min(
        sum(inst.weights[i][perm[i]] for i in range(k))
        for perm in permutations(range(k))
    )


def test_matches_brute_force_on_random_instances():
    rng = random.Random(99)
    for _ in range(200):
        width = rng.randrange(2, 7)
        k = rng.randrange(1, 7)
        size = 1 << width
        values = rng.sample(range(size), min(2 * k, size))
        k = len(values) // 2
        zeros, ones = values[:k], values[k:2 * k]
        inst = build_instance(zeros, ones, width)
        m = min_weight_perfect_matching(inst)
        assert m.total_weight == _brute_force_minimum(inst)
        assert sorted(u for u, _ in m.pairs) == sorted(zeros)
        assert sorted(v for _, v in m.pairs) == sorted(ones)
        assert m.total_weight == sum(
            2 * bin(u ^ v).count("1") - 1 for u, v in m.pairs
        )


def test_tie_break_prefers_balanced_weights():
    # two matchings of equal total weight 6: weights (1+5) vs (3+3); squared
    # sums 26 vs 18, so the balanced one must win.
    inst = build_instance([0b000, 0b100], [0b001, 0b011], 3)
    m = min_weight_perfect_matching(inst)
    assert m.total_weight == 6
    weights = sorted(2 * bin(u ^ v).count("1") - 1 for u, v in m.pairs)
    assert weights == [3, 3]
    assert set(m.pairs) == {(0b000, 0b011), (0b100, 0b001)}
