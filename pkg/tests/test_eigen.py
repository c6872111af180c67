import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polardet.eigen import hermitian_eigenvalues, jacobi_symmetric
from polardet.errors import NumericInconclusive


def _sym(seed, n):
    a = np.random.default_rng(seed).normal(size=(n, n))
    return a + a.T


@given(st.integers(1, 8), st.integers(0, 2**31))
def test_jacobi_matches_numpy(n, seed):
    a = _sym(seed, n)
    ev, off, scale = jacobi_symmetric(a)
    ref = np.linalg.eigvalsh(a)
    assert np.allclose(ev, ref, atol=1e-10 * max(scale, 1))
    assert off <= 1e-12 * scale + 1e-300


@given(st.integers(1, 6), st.integers(0, 2**31))
def test_hermitian_embedding(n, seed):
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = z + z.conj().T
    ev, bound = hermitian_eigenvalues(h)
    ref = np.linalg.eigvalsh(h)
    assert np.max(np.abs(ev - ref)) <= bound + 1e-9


def test_examples():
    ev, bound = hermitian_eigenvalues(np.array([[3.0, 2.0], [2.0, 3.0]]))
    assert np.allclose(ev, [1, 5]) and bound < 1e-12
    assert list(jacobi_symmetric(np.zeros((3, 3)))[0]) == [0, 0, 0]


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        jacobi_symmetric(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_non_convergence_is_reported():
    with pytest.raises(NumericInconclusive):
        jacobi_symmetric(_sym(0, 6), max_sweeps=1)
