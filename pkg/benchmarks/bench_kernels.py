"""Time the compiled and numpy torus-sweep kernels on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from topgen import _kernels_py
from topgen.rootsys import build_root_system

try:
    from topgen import _kernels
except ImportError:
    _kernels = None

CASES = [("G2", 7), ("F4", 5), ("D4", 7), ("E6", 5), ("E7", 5), ("F4", 7), ("E7", 7)]


def best_time(fn, *args, repeat: int = 3) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':<8}{'points':>12}{'numpy s':>10}{'cython s':>10}{'speedup':>9}  agree")
    for name, r in CASES:
        rs = build_root_system(name)
        pos = np.ascontiguousarray(np.array(rs.positive_roots, dtype=np.int64))
        t_py, res_py = best_time(_kernels_py.torus_sweep, pos, r, repeat=args.repeat)
        if _kernels is None:
            print(f"{name}/{r:<5}{r**rs.rank:>12}{t_py:>10.3f}{'n/a':>10}{'n/a':>9}  n/a")
            continue
        t_c, res_c = best_time(_kernels.torus_sweep, pos, r, repeat=args.repeat)
        agree = (res_py[0], tuple(res_py[1]), res_py[2]) == (res_c[0], tuple(res_c[1]), res_c[2])
        print(f"{name}/{r:<5}{r**rs.rank:>12}{t_py:>10.3f}{t_c:>10.3f}{t_py / t_c:>8.1f}x  {'yes' if agree else 'NO'}")


if __name__ == "__main__":
    main()
