"""Reference implementations that share no code with the library's
recursion or eigensolver."""

from fractions import Fraction
from functools import lru_cache

import numpy as np


def level_perm(m, n):
    """Level-n image arrays of every state, and of their inverses, computed
    straight from the transition/output tables."""

    @lru_cache(maxsize=None)
    def perm(s, k):
        if k == 0:
            return np.zeros(1, dtype=np.int64)
        size = m.q ** (k - 1)
        out = np.zeros(m.q * size, dtype=np.int64)
        for x in range(m.q):
            sub = perm(m.transition[s][x], k - 1)
            out[x * size:(x + 1) * size] = m.output[s][x] * size + sub
        return out

    fwd = {s: perm(s, n) for s in range(len(m.states))}
    inv = {s: np.argsort(p) for s, p in fwd.items()}
    return fwd, inv


def word_action(m, word, n):
    """Level-n action of a signed word (``+(i+1)`` = state i)."""
    fwd, inv = level_perm(m, n)
    idx = np.arange(m.q**n)
    for g in reversed(word):
        idx = (fwd if g > 0 else inv)[abs(g) - 1][idx]
    return idx


def trivial_up_to(m, word, n):
    return all(np.array_equal(word_action(m, word, k), np.arange(m.q**k)) for k in range(1, n + 1))


def jacobi_eigenvalues(a, tol=1e-12, max_rounds=100):
    """Cyclic Jacobi rotations until the off-diagonal mass is negligible."""
    m = np.array(a, dtype=float)
    n = len(m)
    scale = max(np.linalg.norm(m), 1e-300)
    for _ in range(max_rounds):
        off = np.sqrt(2.0 * np.sum(np.triu(m, 1) ** 2))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(m[p, q]) <= 1e-18 * scale:
                    m[p, q] = m[q, p] = 0.0
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * m[p, q])
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                elif theta != 0:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta**2 + 1.0))
                else:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                mp, mq = m[:, p].copy(), m[:, q].copy()
                m[:, p], m[:, q] = c * mp - s * mq, s * mp + c * mq
                mp, mq = m[p, :].copy(), m[q, :].copy()
                m[p, :], m[q, :] = c * mp - s * mq, s * mp + c * mq
    else:
        raise RuntimeError("Jacobi did not converge")
    return np.sort(np.diag(m))


def charpoly(a):
    """Exact characteristic polynomial of an integer matrix (Faddeev-LeVerrier),
    coefficients from the leading term down."""
    n = len(a)
    a = [[Fraction(int(x)) for x in row] for row in np.asarray(a)]
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        m = [[sum(a[i][t] * m[t][j] for t in range(n)) + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        tr = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        coeffs.append(-tr / k)
    return coeffs


def _trim(p):
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    return p


def _rem(p, q):
    p = list(p)
    while len(p) >= len(q) and p:
        f = p[0] / q[0]
        for i in range(len(q)):
            p[i] -= f * q[i]
        p = p[1:]
    return _trim(p) if p else [Fraction(0)]


def _deriv(p):
    n = len(p) - 1
    return _trim([c * (n - i) for i, c in enumerate(p[:-1])]) or [Fraction(0)]


def _gcd(p, q):
    while any(q):
        p, q = q, _rem(p, q)
    return [c / p[0] for c in p]


def _div(p, q):
    out = []
    p = list(p)
    while len(p) >= len(q):
        f = p[0] / q[0]
        out.append(f)
        for i in range(len(q)):
            p[i] -= f * q[i]
        p = p[1:]
    return out


def _eval(p, x):
    v = Fraction(0)
    for c in p:
        v = v * x + c
    return v


def _sign_changes(seq, x):
    vals = [v for v in (_eval(p, x) for p in seq) if v != 0]
    return sum(1 for u, v in zip(vals, vals[1:]) if (u < 0) != (v < 0))


def _distinct_roots(p, tol):
    """Roots of a square-free polynomial by Sturm-sequence bisection."""
    if len(p) < 2:
        return []
    seq = [p, _deriv(p)]
    while len(seq[-1]) > 1:
        r = _rem(seq[-2], seq[-1])
        if not any(r):
            break
        seq.append([-c for c in r])
    bound = 1 + max(abs(c / p[0]) for c in p[1:])
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if count == 0:
            continue
        if count == 1 and _eval(p, hi) == 0:
            out.append(float(hi))  # intervals are (lo, hi]
            continue
        if count == 1 and hi - lo < tol:
            out.append(float((lo + hi) / 2))
            continue
        mid = (lo + hi) / 2
        stack += [(lo, mid), (mid, hi)]
    return out


def charpoly_eigenvalues(a, scale=1, tol=1e-13):
    """Eigenvalues of ``a / scale`` for an integer matrix ``a``, with
    multiplicity, by bisection on the characteristic polynomial."""
    p = charpoly(a)
    tol = Fraction(tol * scale)
    out = []
    g = p
    while len(g) > 1:
        h = _gcd(g, _deriv(g)) if len(g) > 2 else [Fraction(1)]
        out += _distinct_roots(_div(g, h), tol)
        g = h
    return np.sort(np.array(out)) / scale
