import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polardet.errors import InvalidArgument, InvalidPairing, KernelError
from polardet.exact import (
    check_tu_minors,
    det_cofactor,
    det_exact,
    is_interval_col,
    leading_principal_minors,
    maximal_minors,
    minor_count,
    mod2_dominance,
)
from polardet.gaussian import abs2, gauss, to_complex
from polardet.matrix import ExactMat
from polardet.poly import dirichlet, enumerate_littlewood, parse_poly
from polardet.toeplitz import gram, toeplitz_rect

from conftest import random_gauss_matrix


def test_det_examples():
    assert det_exact(ExactMat.identity(3)) == 1
    assert det_exact([[2, 1], [1, 2]]) == 3
    assert det_exact([[1, 1], [0, 0]]) == 0
    assert det_exact([[0, 1], [1, 0]]) == -1


def test_det_rejects_non_square():
    with pytest.raises(InvalidArgument):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_det_rational_entries():
    assert det_exact([[Fraction(1, 2), 0], [0, Fraction(3, 4)]]) == Fraction(3, 8)
    assert det_exact([[Fraction(3, 4), Fraction(1, 2)], [Fraction(1, 2), Fraction(3, 4)]]) == Fraction(5, 16)


def test_det_agrees_with_cofactor_expansion():
    # 1000 random Gaussian-integer matrices, dimension <= 4, |re|, |im| <= 3
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 4)
        a = random_gauss_matrix(rng, n, n, bound=3)
        assert det_exact(a) == det_cofactor(a)


@given(st.integers(1, 5), st.integers(0, 10**6))
def test_det_matches_numpy(n, seed):
    a = random_gauss_matrix(random.Random(seed), n, n, bound=3)
    ref = np.linalg.det(np.array([[to_complex(x) for x in r] for r in a]))
    assert abs(to_complex(det_exact(a)) - ref) <= 1e-8 * max(1.0, abs(ref))


def test_hermitian_imaginary_part_is_a_kernel_error(monkeypatch):
    import polardet.exact as ex

    A = ExactMat([[2, gauss(0, 1)], [gauss(0, -1), 2]], tag="hermitian")
    assert det_exact(A) == 3
    monkeypatch.setattr(ex, "_bareiss", lambda a, pivoting=True: (gauss(3, 1), []))
    with pytest.raises(KernelError):
        ex.det_exact(A)


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_leading_minors(n, seed):
    rng = random.Random(seed)
    M = random_gauss_matrix(rng, n, n + 2, bound=2)
    A = ExactMat(M) @ ExactMat(M).H() + ExactMat.identity(n)  # positive definite
    minors = leading_principal_minors(A)
    assert minors == [det_exact([r[:k] for r in A.rows[:k]]) for k in range(1, n + 1)]


def test_leading_minors_zero_pivot():
    with pytest.raises(InvalidArgument):
        leading_principal_minors([[0, 1], [1, 0]])


def test_binet_cauchy_exhaustive():
    # det(M M*) = sum over maximal minors of |det|^2, all RectToeplitz with n <= 5, cols <= 10
    checked = 0
    for N in range(1, 7):
        for f in enumerate_littlewood(N):
            for n in range(1, 6):
                M = toeplitz_rect(f, n)
                if M.n_cols > 10:
                    continue
                total = sum(abs2(d) for _, d in maximal_minors(M))
                assert det_exact(gram(M)) == total
                checked += 1
    assert checked > 100


def test_binet_cauchy_gaussian_factors():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 4)
        M = ExactMat(random_gauss_matrix(rng, n, rng.randint(n, 6), bound=2))
        assert det_exact(M @ M.H()) == sum(abs2(d) for _, d in maximal_minors(M))


def test_maximal_minor_order_and_slices():
    M = toeplitz_rect(dirichlet(3), 2)
    sels = [s for s, _ in maximal_minors(M)]
    assert sels == list(itertools.combinations(range(4), 2))
    assert minor_count(4, 2) == 6
    assert [s for s, _ in maximal_minors(M, 2, 5)] == sels[2:5]


def test_interval_examples():
    assert is_interval_col(toeplitz_rect(dirichlet(3), 2))
    assert not is_interval_col([[1], [0], [1]])
    assert not is_interval_col([[1, -1], [0, 1]])


def test_tu_examples():
    rep = check_tu_minors(toeplitz_rect(dirichlet(3), 2), 2)
    assert rep.counts == {0: 1, 1: 5} and rep.ok and rep.total == 6
    zero = [s for s, d in maximal_minors(toeplitz_rect(dirichlet(3), 2)) if d == 0]
    assert zero == [(1, 2)]  # the singular pair: second and third columns
    assert check_tu_minors(ExactMat.identity(3)).counts == {1: 1}
    rep = check_tu_minors(toeplitz_rect(dirichlet(2), 2))
    assert rep.counts.get(0, 0) == 0 and rep.total == 3


def test_tu_rejects_non_interval():
    with pytest.raises(InvalidArgument):
        check_tu_minors(toeplitz_rect(parse_poly("1-z"), 2))
    with pytest.raises(InvalidArgument):
        check_tu_minors(toeplitz_rect(dirichlet(2), 2), n=3)


@pytest.mark.parametrize("N", range(1, 7))
def test_tu_kernel_factors(N):
    for n in range(1, 7):
        assert check_tu_minors(toeplitz_rect(dirichlet(N), n)).ok


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 4)), min_size=1, max_size=6), st.integers(1, 5))
def test_random_interval_matrices_are_tu(runs, n):
    cols = []
    for start, length in runs:
        start = min(start, n - 1)
        stop = min(start + length, n)
        cols.append([1 if start <= i < stop else 0 for i in range(n)])
    while len(cols) < n:
        cols.append([0] * n)
    M = ExactMat([list(r) for r in zip(*cols)])
    assert check_tu_minors(M).ok


def test_mod2_dominance_examples():
    d = mod2_dominance([[1, 1], [0, 1]], [[1, -1], [0, 1]])
    assert (d.det_s, d.det_sp) == (1, 1) and d.holds
    S = [[1, 1], [0, 1]]
    assert mod2_dominance(S, S)
    d = mod2_dominance([[1, 1], [1, 1]], [[1, -1], [1, 1]])
    assert (d.det_s, d.det_sp) == (0, 2) and d


def test_mod2_dominance_rejects():
    with pytest.raises(InvalidPairing):
        mod2_dominance([[1, 1], [0, 1]], [[1, 0], [0, 1]])
    with pytest.raises(InvalidPairing):
        mod2_dominance([[1, 0, 1]], [[1, 0, 1]])


def test_termwise_minor_pairs_dominate():
    # every maximal minor of a Littlewood factor dominates the matching kernel minor
    for N in range(1, 6):
        for f in enumerate_littlewood(N):
            for n in range(1, 5):
                S, Sp = toeplitz_rect(dirichlet(N), n), toeplitz_rect(f, n)
                for cols in itertools.combinations(range(S.n_cols), n):
                    assert mod2_dominance(S.select_columns(cols), Sp.select_columns(cols))
