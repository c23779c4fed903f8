"""Root-of-unity twisted adjacency matrices, a Jacobi eigensolver, and the
induced-subgraph degree bounds derived from their spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .gains import GainGraph
from .graphs import Graph

HERMITIAN_TOLERANCE = 1e-10
OFF_DIAGONAL_TARGET = 1e-12
CLUSTER_TOLERANCE = 1e-6
INTEGER_SNAP = 1e-9
MAX_EIGEN_SIZE = 2000


class NotHermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n))
    for u, v in g.edges():
        m[u, v] = 1.0
        m[v, u] = 1.0
    return m


def twisted_adjacency(gg: GainGraph, k: int) -> np.ndarray:
    """Entry (u, v) is the k-th power of the p-th root of unity raised to the
    arc gain; zero off the edge set. k = 0 returns the plain adjacency."""
    if not 0 <= k < gg.p:
        raise ValueError(f"twist must lie in [0, {gg.p})")
    n = gg.base.n
    powers = [np.exp(2j * math.pi * j / gg.p) for j in range(gg.p)]
    m = np.zeros((n, n), dtype=complex)
    for u, v, g in gg.arcs():
        w = powers[(k * g) % gg.p]
        m[u, v] = w
        # Exact conjugate symmetry by construction.
        m[v, u] = w.conjugate()
    return m


def symmetric_jacobi_eigenvalues(
    a: np.ndarray,
    off_target: float = OFF_DIAGONAL_TARGET,
    max_sweeps: int = 60,
) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.

    Sweeps rotate every upper-triangle pair in row order until the Frobenius
    norm of the off-diagonal part drops below off_target. Rotations with a
    pivot too small to affect the target are skipped. Returns ascending
    eigenvalues.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()
    skip = off_target / (4 * n)
    off = _off_norm(a)
    for _ in range(max_sweeps):
        if off < off_target:
            break
        for k in range(n - 1):
            for l in range(k + 1, n):
                pivot = a[k, l]
                if abs(pivot) <= skip:
                    continue
                theta = (a[l, l] - a[k, k]) / (2.0 * pivot)
                if abs(theta) > 1e12:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_k = a[:, k].copy()
                col_l = a[:, l].copy()
                a[:, k] = c * col_k - s * col_l
                a[:, l] = s * col_k + c * col_l
                row_k = a[k, :].copy()
                row_l = a[l, :].copy()
                a[k, :] = c * row_k - s * row_l
                a[l, :] = s * row_k + c * row_l
                a[k, l] = 0.0
                a[l, k] = 0.0
        off = _off_norm(a)
    # Roundoff can floor the off-norm slightly above very tight targets for
    # large inputs; the eigenvalue error stays bounded by the off-norm.
    if off >= off_target and off >= 1e-8:
        raise ConvergenceError(f"Jacobi sweeps stalled at off-norm {off:.3e}")
    return np.sort(np.diag(a))


def _off_norm(a: np.ndarray) -> float:
    # Summing squares of the actual off-diagonal entries avoids the
    # cancellation floor of ||A||_F^2 - ||diag||^2 near convergence.
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def hermitian_eigenvalues(
    m: np.ndarray,
    cluster_tol: float = CLUSTER_TOLERANCE,
    source: str = "",
) -> "SpectrumReport":
    """All real eigenvalues of a Hermitian matrix via the Jacobi kernel.

    Complex input is embedded as the real symmetric block matrix
    [[Re, -Im], [Im, Re]], which doubles every eigenvalue; the doubles are
    paired off. Input must be conjugate-symmetric to 1e-10.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitianError("input must be a square matrix")
    n = m.shape[0]
    if n > MAX_EIGEN_SIZE:
        raise ValueError(f"matrix size {n} exceeds the {MAX_EIGEN_SIZE} limit")
    deviation = float(np.max(np.abs(m - m.conj().T))) if n else 0.0
    if deviation > HERMITIAN_TOLERANCE:
        raise NotHermitianError(f"conjugate-symmetry deviation {deviation:.3e}")
    if np.iscomplexobj(m) and np.any(m.imag):
        re, im = m.real, m.imag
        embedded = np.block([[re, -im], [im, re]])
        doubled = symmetric_jacobi_eigenvalues(embedded)
        pair_gap = float(np.max(np.abs(doubled[0::2] - doubled[1::2]))) if n else 0.0
        if pair_gap > 1e-9:
            raise ConvergenceError(f"embedding pairs split by {pair_gap:.3e}")
        eigenvalues = doubled[0::2]
    else:
        eigenvalues = symmetric_jacobi_eigenvalues(np.real(m))
    descending = tuple(float(x) for x in eigenvalues[::-1])
    return SpectrumReport(descending, _cluster(descending, cluster_tol), n, source)


def _cluster(descending: Sequence[float], tol: float) -> tuple[tuple[float, int], ...]:
    clusters = []
    i = 0
    while i < len(descending):
        j = i
        while j + 1 < len(descending) and descending[j] - descending[j + 1] <= tol:
            j += 1
        block = descending[i: j + 1]
        clusters.append((sum(block) / len(block), len(block)))
        i = j + 1
    return tuple(clusters)


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues in descending order with multiplicity clusters."""

    eigenvalues: tuple[float, ...]
    clusters: tuple[tuple[float, int], ...]
    n: int
    source: str

    def __post_init__(self) -> None:
        if sum(mult for _, mult in self.clusters) != self.n:
            raise ValueError("cluster multiplicities must sum to n")

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "n": self.n,
            "eigenvalues": list(self.eigenvalues),
            "clusters": [{"value": v, "multiplicity": m} for v, m in self.clusters],
        }


@dataclass(frozen=True)
class BoundRow:
    size: int
    bound: float
    integer_bound: int


@dataclass(frozen=True)
class DegreeBoundTable:
    """Per-subgraph-size lower bounds on the maximum degree."""

    rows: tuple[BoundRow, ...]
    ranking: str
    source: str

    def minimal_size_for_degree(self, degree: int) -> Optional[int]:
        for row in self.rows:
            if row.integer_bound >= degree:
                return row.size
        return None

    def to_json_dict(self) -> dict:
        return {
            "source": self.source,
            "ranking": self.ranking,
            "rows": [
                {"size": r.size, "bound": r.bound, "integer_bound": r.integer_bound}
                for r in self.rows
            ],
        }


def snap_ceil(x: float, tol: float = INTEGER_SNAP) -> int:
    """Smallest integer >= x, treating values within tol of an integer as
    exactly that integer."""
    nearest = round(x)
    if abs(x - nearest) <= tol:
        return int(nearest)
    return math.ceil(x)


def huang_degree_bound(report: SpectrumReport, ranking: str = "eigenvalue") -> DegreeBoundTable:
    """Bound the maximum degree of every s-vertex induced subgraph.

    ranking="eigenvalue": bound(s) is the (n-s+1)-th largest eigenvalue; any
    s-vertex principal submatrix B has lambda_1(B) at least that value by
    interlacing, and the max row sum of entry moduli bounds lambda_1(B) by
    the subgraph's maximum degree.

    ranking="magnitude": same table over |eigenvalue| in descending order.
    Stronger when large eigenvalues are negative, but not implied by
    interlacing; use it as a heuristic threshold, not a proof.
    """
    if ranking == "eigenvalue":
        vals = list(report.eigenvalues)
    elif ranking == "magnitude":
        vals = sorted((abs(x) for x in report.eigenvalues), reverse=True)
    else:
        raise ValueError(f"unknown ranking {ranking!r}")
    n = report.n
    rows = []
    for s in range(1, n + 1):
        bound = vals[n - s]
        rows.append(BoundRow(s, float(bound), snap_ceil(bound)))
    return DegreeBoundTable(tuple(rows), ranking, report.source)
