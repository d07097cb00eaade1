"""Level-n operators on the Schreier graphs and their spectra.

Conventions: ``P_s`` is the operator ``(P_s f)(x) = f(s.x)``, so
``P_s[x, s(x)] = 1``.

* markov      = (1 / 2|S|) sum_s (P_s + P_s^T)
* laplacian   = 2|S| I - sum_s (P_s + P_s^T)
* hecke       = sum_i G_i (P_i + P_i^T) / 2
* adjacency-simplicial, laplacian-simplicial use the 0/1 adjacency of the
  simplicial graph (no loops, no multi-edges) and its true degree matrix.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .eigen import DEFAULT_MAX_SWEEPS, eigh
from .group import AutomatonGroup, ResourceLimitExceeded
from .schreier import MULTIGRAPH, SIMPLICIAL, SchreierGraph, build_schreier

KINDS = ("markov", "laplacian", "hecke", "adjacency-simplicial", "laplacian-simplicial")
MULTIGRAPH_KINDS = ("markov", "laplacian", "hecke")
MAX_SPECTRAL_LEVEL = 12
RESIDUAL_TOLERANCE = 1e-8


class SpectralError(RuntimeError):
    pass


@dataclass
class LevelOperator:
    level: int
    kind: str
    matrix: np.ndarray
    weights: Optional[tuple[float, ...]] = None

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


def _generator_actions(source, n: Optional[int]) -> tuple[int, list[np.ndarray]]:
    if isinstance(source, AutomatonGroup):
        if n is None:
            raise ValueError("level is required when building from a group")
        perms = source.level_permutations(n)
        return n, [perms[g] for g in source.generators]
    if isinstance(source, SchreierGraph):
        if source.mode != MULTIGRAPH:
            raise ValueError("permutation operators need a multigraph Schreier graph")
        by_label: dict[str, np.ndarray] = {}
        for u, v, label in source.edges:
            by_label.setdefault(label, np.full(source.order, -1, dtype=np.int64))[u] = v
        return source.level, [by_label[k] for k in by_label]
    raise TypeError("expected an AutomatonGroup or a SchreierGraph")


def _symmetric_sum(actions: Sequence[np.ndarray], size: int, weights: Sequence[float]) -> np.ndarray:
    m = np.zeros((size, size))
    rows = np.arange(size)
    for img, w in zip(actions, weights):
        np.add.at(m, (rows, img), w)
        np.add.at(m, (img, rows), w)
    return m


def build_operator(
    source: Union[AutomatonGroup, SchreierGraph],
    kind: str,
    n: Optional[int] = None,
    weights: Optional[Sequence[float]] = None,
    max_level: int = MAX_SPECTRAL_LEVEL,
) -> LevelOperator:
    if kind not in KINDS:
        raise ValueError(f"unknown operator kind {kind!r}; choose from {', '.join(KINDS)}")
    if kind == "hecke" and weights is None:
        raise ValueError("hecke operator needs one weight per generator")
    if kind != "hecke" and weights is not None:
        raise ValueError(f"weights only apply to the hecke operator, not {kind!r}")
    level = n if n is not None else getattr(source, "level", None)
    if level is not None and level > max_level:
        raise ResourceLimitExceeded(f"level {level} exceeds the dense cap of {max_level}")
    if kind.endswith("simplicial"):
        if isinstance(source, AutomatonGroup):
            source = build_schreier(source, n, SIMPLICIAL)
        if source.mode != SIMPLICIAL:
            raise ValueError(f"{kind} needs a simplicial Schreier graph")
        a = source.adjacency()
        if kind == "adjacency-simplicial":
            return LevelOperator(source.level, kind, a)
        return LevelOperator(source.level, kind, np.diag(a.sum(axis=1)) - a)
    level, actions = _generator_actions(source, n)
    size = len(actions[0]) if actions else 2**level
    k = len(actions)
    if kind == "markov":
        m = _symmetric_sum(actions, size, [1.0 / (2 * k)] * k)
        return LevelOperator(level, kind, m)
    if kind == "laplacian":
        m = 2 * k * np.eye(size) - _symmetric_sum(actions, size, [1.0] * k)
        return LevelOperator(level, kind, m)
    if len(weights) != k:
        raise ValueError(f"hecke operator needs {k} weights, got {len(weights)}")
    w = tuple(float(x) for x in weights)
    return LevelOperator(level, kind, _symmetric_sum(actions, size, [x / 2 for x in w]), w)


# -- decomposition ----------------------------------------------------------


@dataclass
class SpectrumResult:
    eigenvalues: np.ndarray
    eigenvectors: Optional[np.ndarray] = None
    vector_indices: tuple[int, ...] = ()
    residuals: Optional[np.ndarray] = None
    norm: float = 0.0
    sweeps: int = 0

    @property
    def max_residual(self) -> float:
        if self.residuals is None or len(self.residuals) == 0:
            return 0.0
        return float(np.max(self.residuals))


def _selection(select, n: int) -> list[int]:
    if select in (None, "none"):
        return []
    if select == "all":
        return list(range(n))
    which, k = select
    k = min(int(k), n)
    if which == "smallest":
        return list(range(k))
    if which == "largest":
        return list(range(n - k, n))
    raise ValueError(f"unknown selection {select!r}")


def eigen_decompose(
    op: Union[LevelOperator, np.ndarray],
    select="all",
    tolerance: float = RESIDUAL_TOLERANCE,
    residuals: bool = True,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> SpectrumResult:
    """Full spectrum; eigenvectors for ``select`` ("all", "none",
    ("smallest", k) or ("largest", k)).  With ``residuals`` the full
    eigenbasis is computed even if none of it is returned, and every
    residual ||Av - λv|| is checked against ``tolerance * ||A||_2``."""
    a = op.matrix if isinstance(op, LevelOperator) else np.asarray(op, dtype=float)
    n = a.shape[0]
    idx = _selection(select, n)
    want = bool(idx) or residuals
    w, v, sweeps = eigh(a, vectors=want, max_sweeps=max_sweeps)
    norm = float(np.max(np.abs(w))) if n else 0.0
    res = None
    if want and residuals:
        res = np.linalg.norm(a @ v - v * w, axis=0)
        if norm > 0 and res.max() > tolerance * norm:
            raise SpectralError(f"max residual {res.max():.3e} exceeds {tolerance:g}*||A|| = {tolerance * norm:.3e}")
    vecs = v[:, idx] if want and idx else None
    return SpectrumResult(w, vecs, tuple(idx), res, norm, sweeps)


# -- diagnostics --------------------------------------------------------------


def hausdorff_gap(a: np.ndarray, b: np.ndarray) -> float:
    """max over x in a of the distance from x to b (b sorted)."""
    if len(a) == 0:
        return 0.0
    b = np.sort(np.asarray(b))
    pos = np.searchsorted(b, a)
    lo = b[np.clip(pos - 1, 0, len(b) - 1)]
    hi = b[np.clip(pos, 0, len(b) - 1)]
    return float(np.max(np.minimum(np.abs(a - lo), np.abs(a - hi))))


@dataclass
class ConvergenceReport:
    kind: str
    levels: tuple[int, ...]
    gaps: dict = field(default_factory=dict)  # n -> δ_n
    violations: list = field(default_factory=list)  # (n, eigenvalue, distance)
    asserted: bool = False
    tolerance: float = 1e-6

    @property
    def holds(self) -> bool:
        return not (self.asserted and self.violations)


def spectral_convergence(group: AutomatonGroup, kind: str, n_min: int, n_max: int, tolerance: float = 1e-6, weights=None) -> ConvergenceReport:
    """One-sided gaps δ_n between spec(op_n) and spec(op_(n+1)).  For the
    multigraph kinds every level-n eigenvalue must reappear at level n+1."""
    asserted = kind in MULTIGRAPH_KINDS
    report = ConvergenceReport(kind, tuple(range(n_min, n_max + 1)), asserted=asserted, tolerance=tolerance)
    if n_max <= n_min:
        return report
    spectra = {}
    for n in range(n_min, n_max + 1):
        spectra[n] = eigen_decompose(build_operator(group, kind, n, weights), select="none", residuals=False).eigenvalues
    for n in range(n_min, n_max):
        lo, hi = spectra[n], spectra[n + 1]
        report.gaps[n] = hausdorff_gap(lo, hi)
        if asserted:
            for x in lo:
                dist = hausdorff_gap(np.array([x]), hi)
                if dist > tolerance:
                    report.violations.append((n, float(x), dist))
    return report


def kesten_constant(k: int) -> float:
    """2 sqrt(k - 1) / k for a symmetric generating set of size k."""
    return 2.0 * math.sqrt(k - 1) / k


@dataclass
class KestenReport:
    bound: float
    levels: tuple[int, ...]
    second_eigenvalue: tuple[float, ...]
    nontrivial_radius: tuple[float, ...]

    @property
    def second_below_bound(self) -> tuple[int, ...]:
        return tuple(n for n, x in zip(self.levels, self.second_eigenvalue) if x < self.bound)

    @property
    def radius_below_bound(self) -> tuple[int, ...]:
        return tuple(n for n, x in zip(self.levels, self.nontrivial_radius) if x < self.bound)


def kesten_candidates(eigenvalues: np.ndarray) -> tuple[float, float]:
    """(second largest eigenvalue, largest |λ| once the top one is removed)."""
    w = np.sort(np.asarray(eigenvalues))[::-1]
    if len(w) < 2:
        return float("nan"), float("nan")
    rest = w[1:]
    return float(rest[0]), float(np.max(np.abs(rest)))


def kesten_bound_check(group: AutomatonGroup, n_max: int, n_min: int = 1) -> KestenReport:
    bound = kesten_constant(2 * len(group.generators))
    second, radius = [], []
    for n in range(n_min, n_max + 1):
        w = eigen_decompose(build_operator(group, "markov", n), select="none", residuals=False).eigenvalues
        s, r = kesten_candidates(w)
        second.append(s)
        radius.append(r)
    return KestenReport(bound, tuple(range(n_min, n_max + 1)), tuple(second), tuple(radius))


@dataclass
class SchurReport:
    level: int
    gamma: float
    cond_upper: float
    cond_lower: float
    upper_singular: bool
    lower_singular: bool
    matrix_singular: bool
    factorization_error: dict = field(default_factory=dict)  # "upper"/"lower" -> relative error
    blocks: Optional[dict] = None

    @property
    def verified(self) -> bool:
        return bool(self.factorization_error) and all(e <= 1e-6 for e in self.factorization_error.values())


def _relative_det_error(s1, l1, s2, l2) -> float:
    if s1 == 0 or s2 == 0:
        return float("inf") if s1 != s2 else 0.0
    return float(abs(s1 * s2 * math.exp(l1 - l2) - 1.0))


def schur_block_probe(group: AutomatonGroup, n: int, gamma: float, cond_threshold: float = 1e12, include_blocks: Optional[bool] = None) -> SchurReport:
    """Split M_n - γI by first letter into [[A, B], [C, D]] and test whether
    the diagonal blocks are invertible; when a block is, check
    det(M_n - γI) = det(block) det(Schur complement)."""
    if n < 2:
        raise ValueError("level must be >= 2")
    m = build_operator(group, "markov", n).matrix - gamma * np.eye(group.q**n)
    h = m.shape[0] // group.q
    a, b, c, d = m[:h, :h], m[:h, h:], m[h:, :h], m[h:, h:]
    cond_a, cond_d = float(np.linalg.cond(a)), float(np.linalg.cond(d))
    sing_a, sing_d = cond_a > cond_threshold, cond_d > cond_threshold
    sing_m = float(np.linalg.cond(m)) > cond_threshold
    report = SchurReport(n, float(gamma), cond_a, cond_d, sing_a, sing_d, sing_m)
    if (include_blocks is None and n == 2) or include_blocks:
        report.blocks = {"A": a.tolist(), "B": b.tolist(), "C": c.tolist(), "D": d.tolist()}
    if sing_m:
        return report
    sm, lm = np.linalg.slogdet(m)
    if not sing_a:
        s1, l1 = np.linalg.slogdet(a)
        s2, l2 = np.linalg.slogdet(d - c @ np.linalg.solve(a, b))
        report.factorization_error["upper"] = _relative_det_error(s1 * s2, l1 + l2, sm, lm)
    if not sing_d:
        s1, l1 = np.linalg.slogdet(d)
        s2, l2 = np.linalg.slogdet(a - b @ np.linalg.solve(d, c))
        report.factorization_error["lower"] = _relative_det_error(s1 * s2, l1 + l2, sm, lm)
    return report


def block_eigenvalues(group: AutomatonGroup, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Spectra of the two first-letter diagonal blocks of M_n; at these γ the
    blocks of M_n - γI are singular."""
    m = build_operator(group, "markov", n).matrix
    h = m.shape[0] // group.q
    return (
        eigen_decompose(m[:h, :h], select="none", residuals=False).eigenvalues,
        eigen_decompose(m[h:, h:], select="none", residuals=False).eigenvalues,
    )


def spectrum_histogram(eigenvalues, bins: int) -> list[tuple[float, float, int]]:
    if bins < 1:
        raise ValueError("bins must be >= 1")
    w = np.asarray(eigenvalues.eigenvalues if isinstance(eigenvalues, SpectrumResult) else eigenvalues, dtype=float)
    counts, edges = np.histogram(w, bins=bins)
    return [(float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(bins)]


# -- CSV ------------------------------------------------------------------------


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def spectrum_csv(res: SpectrumResult) -> str:
    out = io.StringIO()
    out.write("index,eigenvalue,residual\n")
    res_all = res.residuals
    for i, x in enumerate(res.eigenvalues):
        r = fmt(res_all[i]) if res_all is not None else ""
        out.write(f"{i},{fmt(x)},{r}\n")
    return out.getvalue()


def eigenvector_csv(res: SpectrumResult) -> str:
    if res.eigenvectors is None:
        raise ValueError("no eigenvectors were computed")
    out = io.StringIO()
    out.write(",".join(f"v{i}" for i in res.vector_indices) + "\n")
    for row in res.eigenvectors:
        out.write(",".join(fmt(x) for x in row) + "\n")
    return out.getvalue()


def histogram_csv(hist: Sequence[tuple[float, float, int]]) -> str:
    out = io.StringIO()
    out.write("bin_lo,bin_hi,count\n")
    for lo, hi, c in hist:
        out.write(f"{fmt(lo)},{fmt(hi)},{c}\n")
    return out.getvalue()
