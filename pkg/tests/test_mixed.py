import itertools
import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polardet.errors import BudgetExceeded, InvalidArgument
from polardet.exact import det_exact
from polardet.matrix import ExactMat, weighted_sum
from polardet.mixed import (
    GammaTable,
    binet_cauchy_terms,
    compositions,
    gamma_binet_cauchy,
    gamma_from_mixed,
    gamma_multilinear,
    mixed_discriminant,
    multinomial,
)
from polardet.poly import dirichlet
from polardet.toeplitz import gram, toeplitz_rect

from conftest import random_gauss_matrix

A1 = ExactMat([[2, 1], [1, 2]])
I2 = ExactMat.identity(2)


def test_compositions():
    assert compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert compositions(3, 1) == [(3,)]
    for n in range(5):
        for K in range(1, 4):
            cs = compositions(n, K)
            assert len(cs) == comb(n + K - 1, K - 1) == len(set(cs))
            assert all(sum(c) == n for c in cs)


def test_binet_cauchy_examples():
    M = toeplitz_rect(dirichlet(2), 2)
    assert gamma_binet_cauchy([M, I2], (1, 1)) == 4
    terms = [abs(d) ** 2 for _, d in binet_cauchy_terms([M, I2], (1, 1))]
    assert sorted(terms) == [0, 0, 1, 1, 1, 1]
    assert gamma_binet_cauchy([toeplitz_rect(dirichlet(3), 2)], (2,)) == 5
    assert gamma_binet_cauchy([I2, I2], (0, 2)) == 1
    assert gamma_binet_cauchy([ExactMat([[1], [0]]), I2], (2, 0)) == 0  # empty sum


def test_multilinear_examples():
    assert gamma_multilinear([A1, I2]).entries == {(2, 0): 3, (1, 1): 4, (0, 2): 1}
    assert gamma_multilinear([A1]).entries == {(2,): 3}
    t = gamma_multilinear([A1, ExactMat.zeros(2), I2])
    assert all(v == 0 for idx, v in t.entries.items() if idx[1] > 0)


def test_mixed_examples():
    assert mixed_discriminant([I2, I2]) == 1
    assert mixed_discriminant([A1, I2]) == 2
    assert mixed_discriminant([A1, ExactMat.zeros(2)]) == 0
    assert gamma_from_mixed([A1, I2], (1, 1)) == 4
    assert gamma_from_mixed([A1, I2], (2, 0)) == det_exact(A1)
    assert gamma_from_mixed([A1, I2], (0, 2)) == 1


def test_mixed_needs_n_arguments():
    with pytest.raises(InvalidArgument):
        mixed_discriminant([A1])


def test_budgets():
    with pytest.raises(BudgetExceeded):
        gamma_multilinear([A1, I2], budget=3)
    with pytest.raises(BudgetExceeded):
        mixed_discriminant([A1, I2], budget=2)
    with pytest.raises(BudgetExceeded):
        gamma_binet_cauchy([toeplitz_rect(dirichlet(3), 2)], (2,), budget=5)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("POLARDET_MAX_EVALS", "3")
    with pytest.raises(BudgetExceeded):
        gamma_multilinear([A1, I2])
    monkeypatch.setenv("POLARDET_MAX_EVALS", "4")
    assert gamma_multilinear([A1, I2])[(1, 1)] == 4


def _random_factors(rng, n, K):
    return [ExactMat(random_gauss_matrix(rng, n, rng.randint(1, n + 2), bound=2)) for _ in range(K)]


def test_triple_agreement():
    rng = random.Random(3)
    for _ in range(60):
        n, K = rng.randint(1, 3), rng.randint(1, 3)
        Ms = _random_factors(rng, n, K)
        As = [M @ M.H() for M in Ms]
        table = gamma_multilinear(As)
        for idx in compositions(n, K):
            g = table[idx]
            assert g == gamma_binet_cauchy(Ms, idx) == gamma_from_mixed(As, idx)
            assert isinstance(g, int) and g >= 0


@given(st.integers(1, 4), st.integers(1, 3), st.integers(0, 10**6), st.lists(st.fractions(0, 5, max_denominator=7), min_size=3, max_size=3))
def test_table_evaluates_to_determinant(n, K, seed, ts):
    rng = random.Random(seed)
    As = [M @ M.H() for M in _random_factors(rng, n, K)]
    table = gamma_multilinear(As)
    assert table.evaluate([1] * K) == det_exact(weighted_sum([1] * K, As))
    assert table.evaluate(ts[:K]) == det_exact(weighted_sum(ts[:K], As))


def test_mixed_discriminant_symmetric():
    rng = random.Random(4)
    for _ in range(10):
        As = [M @ M.H() for M in _random_factors(rng, 3, 3)]
        vals = {mixed_discriminant(list(p)) for p in itertools.permutations(As)}
        assert len(vals) == 1


def test_mixed_discriminant_cross_check_and_multilinearity():
    rng = random.Random(5)
    As = [M @ M.H() for M in _random_factors(rng, 3, 4)]
    d1 = mixed_discriminant([As[0], As[1], As[2]], cross_check=True)
    d2 = mixed_discriminant([As[3], As[1], As[2]])
    d12 = mixed_discriminant([weighted_sum([2, Fraction(1, 3)], [As[0], As[3]]), As[1], As[2]])
    assert d12 == 2 * d1 + Fraction(1, 3) * d2
    assert mixed_discriminant([As[0]] * 3) == det_exact(As[0])


def test_gamma_is_multinomial_times_mixed():
    assert multinomial((1, 1)) == 2 and multinomial((2, 1, 0)) == 3
    rng = random.Random(6)
    As = [M @ M.H() for M in _random_factors(rng, 3, 2)]
    t = gamma_multilinear(As)
    assert t[(1, 2)] == 3 * mixed_discriminant([As[0], As[1], As[1]])
    assert t[(1, 2)] == factorial(3) // (factorial(1) * factorial(2)) * mixed_discriminant([As[1], As[0], As[1]])


def test_table_json_round_trip():
    t = gamma_multilinear([gram(toeplitz_rect(dirichlet(2), 3)), ExactMat.identity(3)])
    back = GammaTable.from_json(t.to_json())
    assert back == t
    assert '"1,2"' in t.to_json()
