from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from topgen import _kernels_py, kernels
from topgen.rootsys import build_root_system

try:
    from topgen import _kernels
except ImportError:  # compiled extension not built
    _kernels = None

needs_compiled = pytest.mark.skipif(_kernels is None, reason="compiled kernels unavailable")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")
    if _kernels is not None:
        assert kernels.BACKEND == "cython" or kernels.torus_sweep is _kernels_py.torus_sweep


def _brute(coeffs: np.ndarray, r: int):
    """Reference sweep written with itertools, for tiny cases."""
    from itertools import product

    best = None
    for x in product(range(r), repeat=coeffs.shape[1]):
        if not any(x):
            continue
        z = int(np.count_nonzero((coeffs @ np.array(x)) % r == 0))
        if best is None or z < best[0]:
            best = (z, x, 1)
        elif z == best[0]:
            best = (z, best[1], best[2] + 1)
    return best


coeff_mats = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 4), min_size=n, max_size=n), min_size=1, max_size=8)
)


@given(coeff_mats, st.sampled_from([2, 3, 5]))
def test_python_sweep_matches_reference(rows, r):
    coeffs = np.ascontiguousarray(np.array(rows, dtype=np.int64))
    z, x, n = _kernels_py.torus_sweep(coeffs, r)
    assert (z, tuple(x), n) == _brute(coeffs, r)


@needs_compiled
@given(coeff_mats, st.sampled_from([2, 3, 5, 7]))
def test_backends_agree_on_sweep(rows, r):
    coeffs = np.ascontiguousarray(np.array(rows, dtype=np.int64))
    a = _kernels_py.torus_sweep(coeffs, r)
    b = _kernels.torus_sweep(coeffs, r)
    assert (a[0], tuple(a[1]), a[2]) == (b[0], tuple(b[1]), b[2])


@needs_compiled
@pytest.mark.parametrize("name, r", [("G2", 7), ("B2", 5), ("F4", 3), ("D4", 5)])
def test_backends_agree_on_root_systems(name, r):
    rs = build_root_system(name)
    pos = np.ascontiguousarray(np.array(rs.positive_roots, dtype=np.int64))
    a, b = _kernels_py.torus_sweep(pos, r), _kernels.torus_sweep(pos, r)
    assert (a[0], tuple(a[1]), a[2]) == (b[0], tuple(b[1]), b[2])


@needs_compiled
@given(st.data())
def test_backends_agree_on_kac_counts(data):
    rs = build_root_system(data.draw(st.sampled_from(["G2", "F4", "E6", "B2"])))
    r = data.draw(st.sampled_from([2, 3, 5, 7]))
    svec = np.array(
        data.draw(st.lists(st.lists(st.integers(0, r), min_size=rs.rank, max_size=rs.rank), min_size=1, max_size=20)),
        dtype=np.int64,
    )
    coeffs = np.ascontiguousarray(rs.coefficient_matrix())
    a = _kernels_py.kac_zero_counts(np.ascontiguousarray(svec), coeffs, r)
    b = _kernels.kac_zero_counts(np.ascontiguousarray(svec), coeffs, r)
    assert np.array_equal(np.asarray(a), np.asarray(b))


def test_forced_fallback(monkeypatch):
    import importlib

    monkeypatch.setenv("TOPGEN_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.torus_sweep is _kernels_py.torus_sweep
    finally:
        monkeypatch.delenv("TOPGEN_PURE_PYTHON")
        importlib.reload(kernels)
