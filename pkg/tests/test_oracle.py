import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lipgames import (
    BudgetExceededError,
    CountDistribution,
    count_distribution,
    count_vector_rank,
    count_vectors,
    lipschitz_oracle,
    perturbed_action_law,
    shifted_tv,
)

import brute


def test_count_vectors_examples():
    assert count_vectors(0, 3) == ((0, 0, 0),)
    assert count_vectors(1, 2) == ((0, 1), (1, 0))
    assert count_vectors(2, 2) == ((0, 2), (1, 1), (2, 0))


def test_count_vectors_order_and_size():
    for m, k in ((3, 3), (5, 2), (4, 4)):
        vecs = count_vectors(m, k)
        assert len(vecs) == math.comb(m + k - 1, k - 1)
        assert list(vecs) == sorted(vecs)
        assert all(sum(v) == m for v in vecs)


@settings(max_examples=50, deadline=None)
@given(m=st.integers(0, 8), k=st.integers(2, 5))
def test_rank_agrees_with_enumeration(m, k):
    for idx, vec in enumerate(count_vectors(m, k)):
        assert count_vector_rank(vec) == idx


def test_action_law_examples():
    assert np.allclose(perturbed_action_law(0, 2, 0.5), [0.75, 0.25])
    assert np.allclose(perturbed_action_law(2, 3, 0.3), [0.1, 0.1, 0.8])
    assert np.allclose(perturbed_action_law(0, 4, 0.8), [0.4, 0.2, 0.2, 0.2])
    assert perturbed_action_law(1, 3, 0.4).sum() == pytest.approx(1.0, abs=1e-15)


def test_action_law_rejects_bad_input():
    with pytest.raises(ValueError):
        perturbed_action_law(3, 3, 0.5)
    with pytest.raises(ValueError):
        perturbed_action_law(0, 3, 0.0)
    with pytest.raises(ValueError):
        perturbed_action_law(0, 1, 0.5)


def test_count_distribution_trivial():
    dist = count_distribution([], 3, 0.4)
    assert dist.m == 0
    assert dist.prob((0, 0, 0)) == 1.0


def test_count_distribution_single_player():
    dist = count_distribution([0], 2, 0.5)
    assert dist.prob((1, 0)) == pytest.approx(0.75, abs=1e-15)
    assert dist.prob((0, 1)) == pytest.approx(0.25, abs=1e-15)


def test_count_distribution_witness_pair():
    dist = count_distribution([2, 2], 3, 0.3)
    assert dist.prob((0, 0, 2)) == pytest.approx(0.64, abs=1e-15)


@pytest.mark.parametrize(
    "profile,k,delta",
    [([0, 1], 3, 0.3), ([2, 2, 1], 3, 0.5), ([0, 1, 1, 0], 2, 0.25)],
)
def test_count_distribution_matches_enumeration(profile, k, delta):
    dist = count_distribution(profile, k, delta)
    law = brute.count_law(profile, k, delta)
    for vec in count_vectors(len(profile), k):
        assert dist.prob(vec) == pytest.approx(law.get(vec, 0.0), abs=1e-14)


def test_count_distribution_permutation_invariant_bitwise():
    base = count_distribution([0, 2, 1, 2], 3, 0.37)
    for perm in itertools.permutations([0, 2, 1, 2]):
        other = count_distribution(list(perm), 3, 0.37)
        assert np.array_equal(base.probs, other.probs)


def test_count_distribution_normalised():
    dist = count_distribution([0, 1, 2, 3, 3], 4, 0.6)
    assert abs(dist.probs.sum() - 1.0) <= 1e-12


def test_distribution_validation():
    with pytest.raises(ValueError):
        CountDistribution(2, 2, np.array([1.0]))
    with pytest.raises(ValueError):
        CountDistribution(1, 2, np.array([0.7, 0.7]))


def test_shifted_tv_trivial_cases():
    point = count_distribution([], 3, 0.5)
    assert shifted_tv(point, 0, 1) == 1.0
    assert shifted_tv(point, 1, 1) == 0.0


def test_shifted_tv_hand_case():
    # single player on action 2, law (0.1, 0.1, 0.8): six-point support
    dist = count_distribution([2], 3, 0.3)
    assert shifted_tv(dist, 0, 1) == pytest.approx(0.9, abs=1e-15)
    assert shifted_tv(dist, 0, 1) == pytest.approx(
        brute.shifted_tv([2], 3, 0.3, 0, 1), abs=1e-14
    )


def test_shifted_tv_bounded():
    for profile in ([0], [1, 2], [2, 2, 0]):
        dist = count_distribution(profile, 3, 0.45)
        for j1 in range(3):
            for j2 in range(3):
                assert 0.0 <= shifted_tv(dist, j1, j2) <= 1.0


def test_oracle_examples():
    assert lipschitz_oracle(2, 3, 0.5).value == pytest.approx(0.5, abs=1e-15)
    result = lipschitz_oracle(4, 2, 0.5)
    assert result.value == pytest.approx(0.3125, abs=1e-15)
    assert result.worst_class == (1, 1)


def test_oracle_witness_all_on_spare_action():
    for n, k in ((4, 3), (6, 3), (5, 4)):
        witness = lipschitz_oracle(n, k, 0.5).worst_class
        assert witness[0] == 0 and witness[1] == 0
        assert sorted(witness[2:], reverse=True)[0] == n - 2


def test_oracle_relabel_symmetry():
    # swapping the roles of actions 2 and 3 leaves every class value unchanged
    for counts in count_vectors(3, 4):
        profile = [j for j, c in enumerate(counts) for _ in range(c)]
        swapped = [{2: 3, 3: 2}.get(a, a) for a in profile]
        tv = shifted_tv(count_distribution(profile, 4, 0.3), 0, 1)
        tv_swapped = shifted_tv(count_distribution(swapped, 4, 0.3), 0, 1)
        assert tv == pytest.approx(tv_swapped, abs=1e-14)


def test_oracle_budget():
    with pytest.raises(BudgetExceededError):
        lipschitz_oracle(40, 4, 0.3, cell_budget=1000)


def test_oracle_rejects_bad_arguments():
    with pytest.raises(ValueError):
        lipschitz_oracle(1, 3, 0.5)
    with pytest.raises(ValueError):
        lipschitz_oracle(4, 3, 1.0)
    with pytest.raises(ValueError):
        count_distribution([0, 3], 3, 0.5)
