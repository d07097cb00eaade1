"""Dense symmetric eigensolver: Householder reduction to tridiagonal form
followed by the implicit-shift QL iteration.

Eigenvectors are accumulated in transposed storage (row i of ``zt`` is the
i-th column of Z) so every plane rotation touches two contiguous rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

DEFAULT_MAX_SWEEPS = 50


class EigenError(RuntimeError):
    def __init__(self, message: str, index: int, sweeps: int):
        super().__init__(message)
        self.index = index
        self.sweeps = sweeps


@njit(cache=True)
def _householder(a):
    """Reduce symmetric ``a`` (scaled so max |a_ij| = 1) in place.  On return the Householder vectors sit
    below the diagonal of ``a`` (column k holds v_k in rows k+1..n-1, with
    a leading 1)."""
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    tau = np.zeros(n)
    p = np.zeros(n)
    w = np.zeros(n)
    v = np.zeros(n)
    # entries this small (relative to max |a_ij| = 1) are dropped; keeping
    # them would overflow 1 / (x0 - beta)
    floor = np.sqrt(np.finfo(np.float64).tiny)
    for k in range(n - 2):
        x0 = a[k + 1, k]
        d[k] = a[k, k]
        # norm of a[k+2:, k], scaled against under/overflow
        big = 0.0
        for i in range(k + 2, n):
            big = max(big, abs(a[i, k]))
        if big < floor:
            e[k] = x0
            tau[k] = 0.0
            a[k + 1, k] = 1.0
            continue
        sigma = 0.0
        for i in range(k + 2, n):
            r = a[i, k] / big
            sigma += r * r
        beta = -np.copysign(np.hypot(x0, big * np.sqrt(sigma)), x0)
        t = (beta - x0) / beta
        tau[k] = t
        e[k] = beta
        # v = (1, x / (x0 - beta)) so H = I - t v v^T
        a[k + 1, k] = 1.0
        f = 1.0 / (x0 - beta)
        for i in range(k + 2, n):
            a[i, k] *= f
        for i in range(k + 1, n):
            v[i] = a[i, k]
        # p = t * A22 v
        for i in range(k + 1, n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * v[j]
            p[i] = t * s
        kk = 0.0
        for i in range(k + 1, n):
            kk += v[i] * p[i]
        kk *= 0.5 * t
        for i in range(k + 1, n):
            w[i] = p[i] - kk * v[i]
        for i in range(k + 1, n):
            vi = v[i]
            wi = w[i]
            for j in range(k + 1, n):
                a[i, j] -= vi * w[j] + wi * v[j]
    if n >= 2:
        d[n - 2] = a[n - 2, n - 2]
        e[n - 2] = a[n - 1, n - 2]
    d[n - 1] = a[n - 1, n - 1]
    return d, e, tau


@njit(cache=True)
def _accumulate(a, tau):
    """Q = H_0 H_1 ... H_{n-3} from the stored reflectors, built backwards."""
    n = a.shape[0]
    q = np.eye(n)
    u = np.zeros(n)
    v = np.zeros(n)
    for k in range(n - 3, -1, -1):
        t = tau[k]
        if t == 0.0:
            continue
        for j in range(k + 1, n):
            u[j] = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
        for i in range(k + 1, n):
            vi = v[i]
            for j in range(k + 1, n):
                u[j] += vi * q[i, j]
        for i in range(k + 1, n):
            f = t * v[i]
            for j in range(k + 1, n):
                q[i, j] -= f * u[j]
    return q


@njit(cache=True)
def _ql(d, e, zt, vectors, max_sweeps):
    """Implicit QL on the tridiagonal (d, e), e[i] coupling i and i+1.
    Returns (total sweeps, index that failed to converge or -1)."""
    n = d.shape[0]
    eps = np.finfo(np.float64).eps
    # input is scaled to max |a_ij| = 1; below sqrt(tiny) the rotations
    # underflow, and the backward error of dropping e is still negligible
    floor = np.sqrt(np.finfo(np.float64).tiny)
    total = 0
    nz = zt.shape[1]
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            if it == max_sweeps:
                return total, l
            it += 1
            total += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = np.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = np.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if vectors:
                    for k in range(nz):
                        f = zt[i + 1, k]
                        zt[i + 1, k] = s * zt[i, k] + c * f
                        zt[i, k] = c * zt[i, k] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return total, -1


@dataclass
class TridiagonalForm:
    diagonal: np.ndarray
    offdiagonal: np.ndarray
    q: np.ndarray | None


def tridiagonalize(a: np.ndarray, want_q: bool = True) -> TridiagonalForm:
    """Q^T A Q = T for symmetric ``a``."""
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    n = work.shape[0]
    scale = float(np.max(np.abs(work))) if n else 0.0
    if scale > 0.0:
        work /= scale
    else:
        scale = 1.0
    d, e, tau = _householder(work)
    q = _accumulate(work, tau) if want_q else None
    return TridiagonalForm(d * scale, e[: max(n - 1, 0)] * scale, q)


def eigh(a: np.ndarray, vectors: bool = True, max_sweeps: int = DEFAULT_MAX_SWEEPS):
    """Eigenvalues (ascending) and, if requested, orthonormal eigenvectors as
    columns.  Also returns the total number of QL sweeps."""
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    n = a.shape[0]
    if n == 0:
        return np.zeros(0), (np.zeros((0, 0)) if vectors else None), 0
    # scale into the normal range so deflation tests behave for tiny or
    # huge entries
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return np.zeros(n), (np.eye(n) if vectors else None), 0
    tri = tridiagonalize(a / scale, want_q=vectors)  # already max |a_ij| = 1
    d = tri.diagonal.copy()
    e = np.zeros(n)
    e[: n - 1] = tri.offdiagonal
    zt = np.ascontiguousarray(tri.q.T) if vectors else np.zeros((n, 0))
    sweeps, failed = _ql(d, e, zt, vectors, max_sweeps)
    if failed >= 0:
        raise EigenError(f"QL iteration did not converge for eigenvalue {failed} within {max_sweeps} sweeps", failed, sweeps)
    order = np.argsort(d, kind="stable")
    w = d[order] * scale
    if not vectors:
        return w, None, sweeps
    return w, np.ascontiguousarray(zt[order].T), sweeps


def eigvalsh(a: np.ndarray, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> np.ndarray:
    return eigh(a, vectors=False, max_sweeps=max_sweeps)[0]
