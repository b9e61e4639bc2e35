"""Pure NumPy kernels; drop-in fallback for the compiled extension.

Both backends expose the same two entry points:

  degree_condition_batch(eu, ev, pos, p, q) -> bool array over the batch
  charpoly_int64(m) -> int64 coefficient array c_0..c_n of det(xI - M)

charpoly_int64 assumes the caller has verified that every intermediate of
the Faddeev-LeVerrier recursion fits in int64 (see density._int64_safe).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def degree_condition_batch(eu: np.ndarray, ev: np.ndarray,
                           pos: np.ndarray, p: int, q: int) -> np.ndarray:
    """Per-labeling test: every position keeps its degree under the edge map
    {(u,v),(w,y)} -> {(u,y),(w,v)}.

    eu, ev: edge endpoint vertex ids, shape (E,).
    pos: flat positions per vertex, shape (B, n) with n = p*q.
    """
    pos = np.ascontiguousarray(pos, dtype=np.int64)
    if pos.ndim != 2 or pos.shape[1] != p * q:
        raise ValueError("pos must have shape (B, p*q)")
    nb, n = pos.shape
    if eu.shape[0] == 0:
        return np.ones(nb, dtype=bool)
    i = pos[:, eu]
    j = pos[:, ev]
    u, v = np.divmod(i, q)
    w, y = np.divmod(j, q)
    ii = u * q + y
    jj = w * q + v
    base = (np.arange(nb, dtype=np.int64) * n)[:, None]
    gdeg = np.bincount(np.concatenate([(base + i).ravel(), (base + j).ravel()]),
                       minlength=nb * n)
    pdeg = np.bincount(np.concatenate([(base + ii).ravel(), (base + jj).ravel()]),
                       minlength=nb * n)
    return (gdeg == pdeg).reshape(nb, n).all(axis=1)


def charpoly_int64(m: np.ndarray) -> np.ndarray:
    """Exact characteristic polynomial of an integer matrix via the
    Faddeev-LeVerrier recursion, entirely in int64.

    Returns c with det(xI - M) = sum_k c[k] x^k, c[n] = 1.
    """
    m = np.asarray(m, dtype=np.int64)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix must be square")
    coeffs = np.zeros(n + 1, dtype=np.int64)
    coeffs[n] = 1
    if n == 0:
        return coeffs
    eye = np.eye(n, dtype=np.int64)
    a = m.copy()
    coeffs[n - 1] = -int(np.trace(a))
    for k in range(2, n + 1):
        a = m @ (a + coeffs[n - k + 1] * eye)
        tr = int(np.trace(a))
        assert tr % k == 0, "Faddeev-LeVerrier trace must divide exactly"
        coeffs[n - k] = -(tr // k)
    return coeffs
