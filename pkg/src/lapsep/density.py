"""Laplacian density matrices and the positive-partial-transpose test.

All matrices carry integer entries with one global denominator 2|E|
(the Laplacian trace), so positivity decisions can be made exactly on the
integer numerator: scaling by a positive constant does not move the PSD
boundary.  The fast path is a floating symmetric eigensolve; anything
within ``tol`` of the boundary is settled by an exact integer
characteristic-polynomial test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _backend
from .errors import CrossValidationError, EmptyGraphError
from .graphs import Graph
from .labeling import VertexLabeling
from .ptgraph import BipartiteSplit, degree_condition

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class LaplacianMatrix:
    """Integer Laplacian with rows/columns in labeling-position order."""

    entries: np.ndarray
    edge_count: int

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> int:
        return int(np.trace(self.entries))


@dataclass(frozen=True)
class DensityMatrix:
    """Exact rational density matrix: numerator / denominator."""

    numerator: np.ndarray
    denominator: int

    @property
    def n(self) -> int:
        return self.numerator.shape[0]

    def as_float(self) -> np.ndarray:
        return self.numerator.astype(np.float64) / self.denominator


def laplacian(g: Graph, lab: VertexLabeling) -> LaplacianMatrix:
    """L = D - A with rows ordered by the labeling's flattened tuples."""
    if g.is_empty:
        raise EmptyGraphError("empty graph has a zero Laplacian")
    if lab.n != g.n:
        raise ValueError("labeling does not cover the graph's vertices")
    pos = lab.position_array()
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        i, j = int(pos[u]), int(pos[v])
        m[i, j] = m[j, i] = -1
        m[i, i] += 1
        m[j, j] += 1
    return LaplacianMatrix(m, g.edge_count)


def normalize(lap: LaplacianMatrix) -> DensityMatrix:
    """L / tr(L); the trace-one identity is exact by construction."""
    trace = lap.trace
    if trace <= 0:
        raise EmptyGraphError("cannot normalize a zero-trace Laplacian")
    assert trace == 2 * lap.edge_count
    return DensityMatrix(lap.entries.copy(), trace)


def density_matrix(g: Graph, lab: VertexLabeling) -> DensityMatrix:
    return normalize(laplacian(g, lab))


def matrix_partial_transpose(m: np.ndarray, split: BipartiteSplit) -> np.ndarray:
    """Transpose the second (q-dimensional) tensor factor.

    Entry at row (u,v), col (w,y) of the result equals entry at row (u,y),
    col (w,v) of m, with flat index (u,v) -> u*q + v.
    """
    n = m.shape[0]
    if m.shape != (n, n) or n != split.n:
        raise ValueError(f"matrix dimension {m.shape} does not match split {split}")
    p, q = split.p, split.q
    return (m.reshape(p, q, p, q)
             .transpose(0, 3, 2, 1)
             .reshape(n, n)
             .copy())


# -- exact PSD test ------------------------------------------------------------


def _int64_safe(m: np.ndarray) -> bool:
    """Conservative bound: every Faddeev-LeVerrier intermediate of an
    integer symmetric matrix fits in int64 when n * 2^n * rho^n < 2^62,
    with rho the maximum absolute row sum (>= spectral radius)."""
    n = m.shape[0]
    rho = int(np.abs(m).sum(axis=1).max())
    if rho == 0:
        return True
    return n * (2 ** n) * (rho ** n) < 2 ** 62


def _charpoly_bigint(m: np.ndarray) -> list[int]:
    """Faddeev-LeVerrier over Python ints; no overflow at any size."""
    n = m.shape[0]
    rows = [[int(x) for x in row] for row in m]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [row[:] for row in rows]
    coeffs[n - 1] = -sum(a[i][i] for i in range(n))
    for k in range(2, n + 1):
        add = coeffs[n - k + 1]
        b = [[a[i][j] + (add if i == j else 0) for j in range(n)] for i in range(n)]
        a = [[sum(rows[i][s] * b[s][j] for s in range(n)) for j in range(n)]
             for i in range(n)]
        tr = sum(a[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -(tr // k)
    return coeffs


def charpoly_exact(m: np.ndarray) -> list[int]:
    """Exact coefficients c_0..c_n of det(xI - M) for integer symmetric M."""
    m = np.asarray(m)
    if not np.array_equal(m, m.T):
        raise ValueError("charpoly_exact expects a symmetric integer matrix")
    if _int64_safe(m):
        return [int(c) for c in _backend.charpoly_int64(m.astype(np.int64))]
    return _charpoly_bigint(m)


def is_psd_exact(m: np.ndarray) -> bool:
    """Exact PSD test: a symmetric integer matrix is PSD iff the
    characteristic polynomial sum c_k x^k has (-1)^(n-k) c_k >= 0 for all k."""
    coeffs = charpoly_exact(m)
    n = len(coeffs) - 1
    return all(c >= 0 if (n - k) % 2 == 0 else c <= 0
               for k, c in enumerate(coeffs))


# -- NPT witnesses -------------------------------------------------------------


@dataclass(frozen=True)
class NptWitness:
    """Rational vector x with x^T N x < 0 for the partial-transpose numerator."""

    vector: tuple[Fraction, ...]
    value: Fraction  # x^T N x, exact, in numerator units (negative)

    def normalized_value(self, denominator: int) -> Fraction:
        return self.value / denominator


def _quadratic_form(m: np.ndarray, x: Sequence[Fraction]) -> Fraction:
    n = m.shape[0]
    total = Fraction(0)
    for i in range(n):
        if x[i] == 0:
            continue
        row = Fraction(0)
        for j in range(n):
            if x[j] != 0:
                row += int(m[i, j]) * x[j]
        total += x[i] * row
    return total


def _witness_from_float(m: np.ndarray, vec: np.ndarray) -> Optional[NptWitness]:
    """Round a floating eigenvector to rationals at increasing precision
    until the quadratic form is exactly negative."""
    for denom_bits in (12, 24, 40, 53):
        limit = 1 << denom_bits
        x = tuple(Fraction(float(c)).limit_denominator(limit) for c in vec)
        if all(c == 0 for c in x):
            continue
        value = _quadratic_form(m, x)
        if value < 0:
            return NptWitness(x, value)
    return None


def _witness_exact(m: np.ndarray) -> NptWitness:
    """Exact LDL-style elimination witness; used if float rounding fails.

    Maintains a basis T of the original space while taking rational Schur
    complements; any negative diagonal (or a zero diagonal with nonzero
    coupling) yields a vector with negative quadratic form.
    """
    n = m.shape[0]
    work = [[Fraction(int(m[i, j])) for j in range(n)] for i in range(n)]
    basis = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
             for i in range(n)]
    alive = list(range(n))

    def vec_combine(i, j, coef):
        return tuple(basis[i][t] + coef * basis[j][t] for t in range(n))

    while alive:
        for i in alive:
            if work[i][i] < 0:
                x = tuple(basis[i])
                return NptWitness(x, _quadratic_form(m, x))
        # all diagonals >= 0; look for a zero diagonal with coupling
        for i in alive:
            if work[i][i] == 0:
                for j in alive:
                    if j != i and work[i][j] != 0:
                        if work[j][j] == 0:
                            coef = Fraction(-1) if work[i][j] > 0 else Fraction(1)
                        else:
                            coef = -work[i][j] / work[j][j]
                        x = vec_combine(i, j, coef)
                        value = _quadratic_form(m, x)
                        assert value < 0
                        return NptWitness(x, value)
        # eliminate a strictly positive pivot
        pivot = next((i for i in alive if work[i][i] > 0), None)
        if pivot is None:
            break  # remaining block is zero: matrix was PSD
        alive.remove(pivot)
        piv = work[pivot][pivot]
        for j in alive:
            factor = work[j][pivot] / piv
            if factor != 0:
                for t in range(n):
                    basis[j][t] -= factor * basis[pivot][t]
                for t in alive:
                    work[j][t] -= factor * work[pivot][t]
        for j in alive:
            work[pivot][j] = work[j][pivot] = Fraction(0)
    raise ValueError("matrix is positive semidefinite; no witness exists")


@dataclass(frozen=True)
class PptResult:
    """Outcome of the PPT test for one split."""

    ppt: bool
    lambda_min: float  # smallest eigenvalue of the normalized partial transpose
    method: str  # "float", "exact", or "float+exact"
    witness: Optional[NptWitness] = None


def is_ppt(rho: DensityMatrix, split: BipartiteSplit,
           method: str = "auto", tol: float = DEFAULT_TOL) -> PptResult:
    """Peres-Horodecki test: is the partial transpose of rho PSD?

    method "auto" trusts the eigensolve away from the boundary and calls
    the exact integer test inside the ±tol band; "exact" and "float" force
    a single tier.  NPT results always carry an exactly verified witness.
    """
    if method not in ("auto", "exact", "float"):
        raise ValueError(f"unknown method {method!r}")
    npt_matrix = matrix_partial_transpose(rho.numerator, split)
    eigvals = np.linalg.eigvalsh(npt_matrix.astype(np.float64))
    lam_min = float(eigvals[0]) / rho.denominator

    if method == "float":
        verdict = lam_min >= -tol
        used = "float"
    elif method == "exact" or abs(lam_min) <= tol:
        verdict = is_psd_exact(npt_matrix)
        used = "exact" if method == "exact" else "float+exact"
    else:
        verdict = lam_min > 0
        used = "float"

    witness = None
    if not verdict:
        vec = np.linalg.eigh(npt_matrix.astype(np.float64))[1][:, 0]
        witness = _witness_from_float(npt_matrix, vec)
        if witness is None:
            witness = _witness_exact(npt_matrix)
    return PptResult(verdict, lam_min, used, witness)


def check_ppt_degree_agreement(g: Graph, lab: VertexLabeling,
                               split: BipartiteSplit) -> tuple[bool, PptResult]:
    """Run both the degree condition and the exact PPT test and insist they
    agree.  A mismatch raises CrossValidationError: the two routes are
    independent and their agreement is the toolkit's main self-check."""
    from .ptgraph import split_labeling

    cond = degree_condition(g, lab, split)
    bip = split_labeling(lab, split)
    result = is_ppt(density_matrix(g, bip), split, method="exact")
    if cond != result.ppt:
        raise CrossValidationError(
            f"degree condition ({cond}) disagrees with exact PPT ({result.ppt}) "
            f"for labeling {lab.as_line()!r} under split {split}")
    return cond, result


def format_rational_matrix(numerator: np.ndarray, denominator: int) -> str:
    """Row-major 'num/den' dump in lowest terms, one row per line."""
    lines = []
    for row in numerator:
        parts = []
        for x in row:
            f = Fraction(int(x), denominator)
            parts.append(f"{f.numerator}/{f.denominator}")
        lines.append(" ".join(parts))
    return "\n".join(lines)
