"""Numpy implementations of the hot loops, used when the extension is absent."""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 16


def torus_sweep(coeffs: np.ndarray, r: int):
    """Same contract as the compiled ``torus_sweep``."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
    n = coeffs.shape[1]
    total = r**n
    weights = r ** np.arange(n - 1, -1, -1, dtype=np.int64)
    best, witness, n_best = None, None, 0
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        pts = (idx[:, None] // weights) % r
        zeros = np.count_nonzero((pts @ coeffs.T) % r == 0, axis=1)
        lo = int(zeros.min())
        if best is None or lo < best:
            best = lo
            first = int(np.argmax(zeros == lo))
            witness = tuple(int(v) for v in pts[first])
            n_best = int(np.count_nonzero(zeros == lo))
        elif lo == best:
            n_best += int(np.count_nonzero(zeros == lo))
    return best, witness, n_best


def kac_zero_counts(svec: np.ndarray, coeffs: np.ndarray, r: int) -> np.ndarray:
    """Same contract as the compiled ``kac_zero_counts``."""
    svec = np.asarray(svec, dtype=np.int64)
    coeffs = np.asarray(coeffs, dtype=np.int64)
    out = np.empty(len(svec), dtype=np.int64)
    for start in range(0, len(svec), _CHUNK):
        block = svec[start : start + _CHUNK] @ coeffs.T
        out[start : start + _CHUNK] = np.count_nonzero(block % r == 0, axis=1)
    return out
