"""Semisimple torsion classes via Kac coordinates, with a brute-force oracle."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .chars import check_characteristic, is_prime
from .errors import BudgetExceeded, InvalidGroupType, InvalidOrder
from .rootsys import (
    TORSION_GROUPS,
    GroupType,
    RootSystem,
    as_group_type,
    build_root_system,
    extended_diagram,
    identify_components,
    roots_from_cartan,
)
from .subsys import SubsystemDescriptor, load_json

DEFAULT_BUDGET = 200_000_000
BUDGET_ENV = "TOPGEN_ORACLE_BUDGET"


@dataclass(frozen=True)
class KacCoordinates:
    s: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return not any(self.s[1:])

    def weighted_sum(self, marks) -> int:
        return sum(a * b for a, b in zip(marks, self.s))


@dataclass(frozen=True)
class TorsionClass:
    order: int
    kac: KacCoordinates
    centralizer_dim: int
    class_dim: int
    centralizer_root_count: int
    centralizer_type: str


@dataclass(frozen=True)
class TorsionSummary:
    group_type: GroupType
    r: int
    max_class_dim: int
    witness: TorsionClass | tuple[int, ...] | None
    class_count: int
    method: str
    centralizer_dim: int
    n_witnesses: int = 0

    @property
    def witness_type(self) -> str | None:
        return self.witness.centralizer_type if isinstance(self.witness, TorsionClass) else None


def _check_order(r: int) -> None:
    if not isinstance(r, (int, np.integer)) or r < 2:
        raise InvalidOrder(f"element order must be an integer >= 2, got {r}")


def kac_solutions(marks, r: int) -> np.ndarray:
    """All s >= 0 with sum(marks[i] * s[i]) = r, in lexicographic order."""
    n = len(marks)
    out: list[tuple[int, ...]] = []
    cur = [0] * n

    def rec(i: int, rest: int) -> None:
        if i == n - 1:
            if rest % marks[i] == 0:
                cur[i] = rest // marks[i]
                out.append(tuple(cur))
            return
        for v in range(rest // marks[i] + 1):
            cur[i] = v
            rec(i + 1, rest - v * marks[i])

    rec(0, r)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


@lru_cache(maxsize=None)
def _zero_node_data(gt: GroupType, mask: int) -> tuple[int, str]:
    """Root count and type label of the subsystem on the extended nodes in ``mask``."""
    ed = extended_diagram(build_root_system(gt))
    nodes = [i for i in range(len(ed.marks)) if mask >> i & 1]
    if not nodes:
        return 0, SubsystemDescriptor((), gt.rank).label
    sub = tuple(tuple(ed.cartan[i][j] for j in nodes) for i in nodes)
    count = len(roots_from_cartan(sub))
    comps = identify_components(ed.cartan, nodes, ed.long_nodes)
    sd = SubsystemDescriptor(tuple(c for c, _ in comps), gt.rank - len(nodes))
    return count, sd.label


def _kac_table(rs: RootSystem, r: int):
    """Non-identity Kac solutions with their pairing-rule root counts."""
    _check_order(r)
    ed = extended_diagram(rs)
    sols = kac_solutions(ed.marks, r)
    sols = sols[sols[:, 1:].any(axis=1)]
    coeffs = np.ascontiguousarray(rs.coefficient_matrix())
    counts = kernels.kac_zero_counts(np.ascontiguousarray(sols[:, 1:]), coeffs, r)
    masks = ((sols == 0).astype(np.int64) << np.arange(sols.shape[1], dtype=np.int64)).sum(axis=1)
    for mask in np.unique(masks):
        expected, _ = _zero_node_data(rs.group_type, int(mask))
        got = np.unique(counts[masks == mask])
        # zero-node rule and pairing rule must agree
        assert got.tolist() == [expected], (rs.group_type, r, int(mask), got, expected)
    return sols, counts, masks


def _make_class(rs: RootSystem, r: int, s, count: int, mask: int) -> TorsionClass:
    cdim = rs.rank + int(count)
    return TorsionClass(
        order=r,
        kac=KacCoordinates(tuple(int(v) for v in s)),
        centralizer_dim=cdim,
        class_dim=rs.dim - cdim,
        centralizer_root_count=int(count),
        centralizer_type=_zero_node_data(rs.group_type, int(mask))[1],
    )


def enumerate_kac(rs: RootSystem, r: int) -> list[TorsionClass]:
    """Every non-identity Kac solution for order r (no symmetry reduction)."""
    sols, counts, masks = _kac_table(rs, r)
    return [_make_class(rs, r, s, c, m) for s, c, m in zip(sols, counts, masks)]


def kac_summary(rs: RootSystem, r: int) -> TorsionSummary:
    sols, counts, masks = _kac_table(rs, r)
    if len(sols) == 0:
        raise InvalidOrder(f"no non-identity Kac solution for r={r}")
    best = int(counts.min())
    idx = int(np.argmax(counts == best))
    witness = _make_class(rs, r, sols[idx], best, masks[idx])
    return TorsionSummary(
        group_type=rs.group_type,
        r=r,
        max_class_dim=witness.class_dim,
        witness=witness,
        class_count=len(sols),
        method="kac",
        centralizer_dim=witness.centralizer_dim,
        n_witnesses=int(np.count_nonzero(counts == best)),
    )


def max_class_types(rs: RootSystem, r: int) -> set[str]:
    """Centralizer types of every class attaining the maximal class dimension."""
    sols, counts, masks = _kac_table(rs, r)
    best = counts.min()
    return {_zero_node_data(rs.group_type, int(m))[1] for m in np.unique(masks[counts == best])}


def configured_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    return int(float(env)) if env else DEFAULT_BUDGET


def brute_force_torsion(rs: RootSystem, r: int, budget: int | None = None) -> TorsionSummary:
    """Sweep the whole r-torsion of the adjoint torus; the independent oracle."""
    _check_order(r)
    limit = configured_budget(budget)
    required = r**rs.rank * len(rs.roots)
    if required > limit:
        raise BudgetExceeded(required, limit)
    pos = np.ascontiguousarray(np.array(rs.positive_roots, dtype=np.int64))
    zeros, point, n_at = kernels.torus_sweep(pos, r)
    cdim = rs.rank + 2 * zeros
    return TorsionSummary(
        group_type=rs.group_type,
        r=r,
        max_class_dim=rs.dim - cdim,
        witness=point,
        class_count=r**rs.rank - 1,
        method=f"brute-force[{kernels.BACKEND}]",
        centralizer_dim=cdim,
        n_witnesses=n_at,
    )


def torsion_summary(rs: RootSystem, r: int) -> TorsionSummary:
    """Maximal semisimple class dimension for order r, with a witness when feasible."""
    _check_order(r)
    return _torsion_summary(rs.group_type, int(r))


@lru_cache(maxsize=None)
def _torsion_summary(gt: GroupType, r: int) -> TorsionSummary:
    rs = build_root_system(gt)
    if r >= rs.coxeter_number:
        return regular_summary(rs, r)
    return kac_summary(rs, r)


def kac_solution_count(marks, r: int) -> int:
    """Number of s >= 0 with sum(marks[i] * s[i]) = r."""
    ways = [1] + [0] * r
    for m in marks:
        for v in range(m, r + 1):
            ways[v] += ways[v - m]
    return ways[r]


def regular_summary(rs: RootSystem, r: int) -> TorsionSummary:
    """For r >= h every node labelled nonzero gives a regular element of order r."""
    _check_order(r)
    h = rs.coxeter_number
    if r < h:
        raise InvalidOrder(f"r={r} is below the Coxeter number {h}")
    s = np.array([[r - h + 1] + [1] * rs.rank], dtype=np.int64)
    coeffs = np.ascontiguousarray(rs.coefficient_matrix())
    count = int(kernels.kac_zero_counts(np.ascontiguousarray(s[:, 1:]), coeffs, r)[0])
    assert count == 0, (rs.group_type, r, count)
    witness = _make_class(rs, r, s[0], 0, 0)
    ed = extended_diagram(rs)
    return TorsionSummary(
        group_type=rs.group_type,
        r=r,
        max_class_dim=witness.class_dim,
        witness=witness,
        class_count=kac_solution_count(ed.marks, r) - 1,
        method="kac-regular",
        centralizer_dim=witness.centralizer_dim,
    )


def dim_torsion_semisimple(rs: RootSystem, r: int) -> int:
    return torsion_summary(rs, r).max_class_dim


def _torsion_data() -> dict:
    return load_json("torsion_dims.json")


def _supported(group_type) -> GroupType:
    gt = as_group_type(group_type)
    if str(gt) not in TORSION_GROUPS:
        raise InvalidGroupType(f"{gt} is not one of {', '.join(TORSION_GROUPS)}")
    return gt


def tabulated_dim_g_r(group_type) -> dict[int, int]:
    gt = _supported(group_type)
    raw = _torsion_data()["dim_g_r"][str(gt)]["values"]
    return {int(k): v for k, v in raw.items()}


def dim_g_r(group_type, r: int) -> int:
    """dim G_[r] for prime r, independent of the characteristic."""
    gt = _supported(group_type)
    rs = build_root_system(gt)
    if r >= rs.coxeter_number:
        return rs.dim - rs.rank
    table = tabulated_dim_g_r(gt)
    if r not in table:
        raise InvalidOrder(f"no tabulated dim G_[r] for {gt}, r={r}")
    return table[r]


def ell(group_type, r: int) -> int:
    gt = _supported(group_type)
    row = _torsion_data()["ell"][str(gt)]
    return row["base"] + row["adjust_at_r"].get(str(r), 0)


def gamma(group_type, r: int, p: int) -> int:
    """dim G_[r] when r = p or r is 2 or 3; otherwise l(G)."""
    gt = _supported(group_type)
    check_characteristic(p)
    if not is_prime(r):
        raise InvalidOrder(f"r must be prime, got {r}")
    if r == p:
        return dim_g_r(gt, r)
    if r in (2, 3):
        return dim_torsion_semisimple(build_root_system(gt), r)
    return ell(gt, r)


def is_relevant(group_type, r: int, p: int) -> bool:
    """Whether r can divide the order of a finite group of this type in characteristic p.

    Every prime qualifies except for B2, which only arises as a Suzuki group
    (p = 2), whose order is prime to 3.
    """
    gt = as_group_type(group_type)
    if str(gt) == "B2":
        return p == 2 and r != 3
    return True


@dataclass(frozen=True)
class Main6Verdict:
    group_type: GroupType
    r: int
    p: int
    relevant: bool
    gamma: int | None
    achieved: int | None
    source: str
    witness: str | None
    passed: bool


def check_main6_i(group_type, r: int, p: int) -> Main6Verdict:
    """Existence of an order-r class of dimension at least gamma(G, r)."""
    gt = _supported(group_type)
    if not is_relevant(gt, r, p):
        return Main6Verdict(gt, r, p, False, None, None, "not relevant", None, True)
    g = gamma(gt, r, p)
    if r != p:
        summ = torsion_summary(build_root_system(gt), r)
        achieved, source, witness = summ.max_class_dim, "semisimple", summ.witness_type
    else:
        from .classdata import unipotent_max_class

        rec = unipotent_max_class(gt, p)
        if rec is not None:
            achieved, source, witness = rec.dim_class, "unipotent", rec.label
        else:
            achieved, source, witness = dim_g_r(gt, r), "tabulated", None
    return Main6Verdict(gt, r, p, True, g, achieved, source, witness, achieved >= g)
