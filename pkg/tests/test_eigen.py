import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from mealygroup.eigen import EigenError, eigh, eigvalsh, tridiagonalize

from oracles import jacobi_eigenvalues


def random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    return (a + a.T) / 2


@pytest.mark.parametrize("n", [1, 2, 3, 5, 17, 64])
def test_against_jacobi(n):
    a = random_symmetric(n, n)
    w = eigvalsh(a)
    assert np.max(np.abs(w - jacobi_eigenvalues(a))) < 1e-10


@pytest.mark.parametrize("n", [2, 9, 50, 200])
def test_orthogonality_and_residual(n):
    a = random_symmetric(n, 100 + n)
    w, v, _ = eigh(a)
    assert np.max(np.abs(v.T @ v - np.eye(n))) < 1e-12
    assert np.max(np.abs(a @ v - v * w)) < 1e-11 * max(1.0, np.max(np.abs(w)))


def test_tridiagonal_form():
    a = random_symmetric(12, 7)
    t = tridiagonalize(a)
    tri = np.diag(t.diagonal) + np.diag(t.offdiagonal, 1) + np.diag(t.offdiagonal, -1)
    assert np.allclose(t.q.T @ a @ t.q, tri, atol=1e-12)
    assert np.allclose(t.q.T @ t.q, np.eye(12), atol=1e-13)


def test_diagonal_and_degenerate_input():
    d = np.diag([3.0, -1.0, 3.0, 0.0])
    w, v, sweeps = eigh(d)
    assert list(w) == [-1.0, 0.0, 3.0, 3.0]
    assert sweeps == 0
    assert np.allclose(v.T @ d @ v, np.diag(w))
    w = eigvalsh(np.ones((6, 6)))
    assert np.allclose(w, [0, 0, 0, 0, 0, 6], atol=1e-13)


def test_extreme_scales():
    a = random_symmetric(8, 11)
    ref = eigvalsh(a)
    for s in (1e-310, 1e-200, 1e200):
        assert np.allclose(eigvalsh(a * s) / s, ref, rtol=1e-12, atol=1e-12)
    w, v, _ = eigh(np.zeros((3, 3)))
    assert np.array_equal(w, np.zeros(3)) and np.array_equal(v, np.eye(3))


def test_empty_and_shape_errors():
    w, v, _ = eigh(np.zeros((0, 0)))
    assert w.shape == (0,)
    with pytest.raises(ValueError):
        eigh(np.zeros((2, 3)))


def test_sweep_cap_raises():
    a = random_symmetric(30, 3)
    with pytest.raises(EigenError) as err:
        eigh(a, max_sweeps=0)
    assert err.value.index >= 0


@settings(max_examples=40, deadline=None)
@given(arrays(np.float64, (6, 6), elements=st.floats(-10, 10, allow_nan=False)))
def test_trace_and_ascending(m):
    a = (m + m.T) / 2
    w, v, _ = eigh(a)
    assert np.all(np.diff(w) >= 0)
    assert abs(w.sum() - np.trace(a)) < 1e-10 * (1 + np.abs(a).sum())
    assert np.max(np.abs(a @ v - v * w)) < 1e-11 * (1 + np.abs(a).sum())
