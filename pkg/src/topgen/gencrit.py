"""Generation criteria assembled from the curated fixed point ratios."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .chars import check_characteristic, is_prime
from .classdata import (
    find_alpha,
    find_class,
    find_module,
    kappa,
    large_class_alpha_bound,
)
from .errors import InvalidGroupType, InvalidOrder, NotCurated
from .rootsys import EXCEPTIONAL, GroupType, as_group_type, build_root_system
from .subsys import SubgroupRecord, catalog_maximal, curated_records, parabolic_records

CLOSURE_BOUND = Fraction(2, 3)

# long and short root elements and B4-involutions
T3_EXCLUDED = ("u_a", "u_b", "t")

DENSITY_CAVEAT = (
    "the verdict certifies that tuples avoiding every positive-dimensional maximal "
    "subgroup form a dense set; nonemptiness of the generating set additionally "
    "needs the field not to be algebraic over a finite field and, for t = 2, the "
    "pair of classes to avoid the known exceptional pairs"
)


@dataclass(frozen=True)
class AlphaTerm:
    """One summand: an exact value or a strict upper bound."""

    value: Fraction
    strict: bool
    source: str


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def strictly_below(terms, threshold: Fraction) -> bool:
    """Whether the true sum is certainly below ``threshold``.

    A bound sum equal to the threshold still certifies the strict inequality
    when at least one summand is itself a strict bound.
    """
    total = sum((t.value for t in terms), Fraction(0))
    return total < threshold or (total == threshold and any(t.strict for t in terms))


def _require_exceptional(ambient) -> GroupType:
    gt = as_group_type(ambient)
    if str(gt) not in EXCEPTIONAL:
        raise InvalidGroupType(f"{gt} is not exceptional; expected one of {', '.join(EXCEPTIONAL)}")
    return gt


@dataclass(frozen=True)
class GenerationQuery:
    ambient: GroupType
    p: int
    classes: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ambient", _require_exceptional(self.ambient))
        check_characteristic(self.p)
        object.__setattr__(self, "classes", tuple(self.classes))
        if len(self.classes) < 2:
            raise InvalidOrder(f"need t >= 2 classes, got {len(self.classes)}")

    @property
    def t(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class SubgroupRow:
    subgroup: str
    key: str
    terms: tuple[AlphaTerm, ...]
    threshold: int

    @property
    def sum_alpha(self) -> Fraction:
        return sum((t.value for t in self.terms), Fraction(0))

    @property
    def margin(self) -> Fraction:
        return self.threshold - self.sum_alpha

    @property
    def passed(self) -> bool:
        return strictly_below(self.terms, Fraction(self.threshold))

    @property
    def sources(self) -> tuple[str, ...]:
        return tuple(t.source for t in self.terms)

    def to_dict(self) -> dict:
        return {
            "subgroup": self.subgroup,
            "key": self.key,
            "sum_alpha": fmt(self.sum_alpha),
            "threshold": self.threshold,
            "margin": fmt(self.margin),
            "alpha_sources": list(self.sources),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class GenerationReport:
    query: GenerationQuery
    rows: tuple[SubgroupRow, ...]
    conservative: bool
    caveats: tuple[str, ...] = field(default=())

    @property
    def verdict(self) -> str:
        return "pass" if all(r.passed for r in self.rows) else "fail"

    @property
    def tightest(self) -> SubgroupRow:
        return min(self.rows, key=lambda r: (r.margin, r.passed))

    def failing(self) -> list[SubgroupRow]:
        return [r for r in self.rows if not r.passed]

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.query.ambient),
            "p": self.query.p,
            "classes": list(self.query.classes),
            "t": self.query.t,
            "verdict": self.verdict,
            "conservative": self.conservative,
            "tightest": self.tightest.key,
            "rows": [r.to_dict() for r in self.rows],
            "caveats": list(self.caveats),
        }


def resolve_alpha(gt: GroupType, sub: SubgroupRecord, label: str, p: int) -> AlphaTerm:
    """Exact value if stored; else the strict closure bound for curated classes; else kappa."""
    try:
        rec = find_alpha(gt, sub.label, label, p)
        return AlphaTerm(rec.alpha(p), False, "exact")
    except NotCurated:
        pass
    try:
        find_class(gt, label, p)
    except NotCurated:
        return AlphaTerm(kappa(gt, p), False, "kappa-fallback")
    # every alpha >= 2/3 for such a class is a stored row
    return AlphaTerm(CLOSURE_BOUND, True, "closure-bound")


def check_t_tuple(q: GenerationQuery) -> GenerationReport:
    gt = q.ambient
    rows = []
    for sub in catalog_maximal(gt, q.p):
        terms = tuple(resolve_alpha(gt, sub, c, q.p) for c in q.classes)
        rows.append(SubgroupRow(sub.label, sub.key, terms, q.t - 1))
    conservative = any(t.source == "kappa-fallback" for r in rows for t in r.terms)
    caveats = [DENSITY_CAVEAT]
    if conservative:
        caveats.append("some classes are not curated; kappa(G) was used, so a fail is inconclusive")
    if q.t == 3:
        hit = sorted({c for c in q.classes if _t3_excluded(gt, c, q.p)})
        if hit:
            caveats.append(f"t = 3 with {', '.join(hit)}: such triples are excluded from the t = 3 generation statement")
    return GenerationReport(q, tuple(rows), conservative, tuple(caveats))


def _t3_excluded(gt: GroupType, label: str, p: int) -> bool:
    try:
        name = find_class(gt, label, p).label
    except NotCurated:
        return False
    return name in T3_EXCLUDED


def minimal_t(ambient, p: int = 0) -> int:
    """Least t with t * kappa(G) < t - 1."""
    gt = _require_exceptional(ambient)
    k = kappa(gt, p)
    if k >= 1:
        raise ValueError(f"kappa must be below 1, got {k}")
    # t * k < t - 1  <=>  t > 1 / (1 - k)
    return max(2, math.floor(1 / (1 - k)) + 1)


@dataclass(frozen=True)
class SharpnessVerdict:
    ambient: str
    t: int
    p: int
    module: str
    dim_module: int
    dim_fixed: int
    fixed_is_lower_bound: bool
    codim_sum: int
    forced: bool

    @property
    def status(self) -> str:
        if self.forced:
            return "forced"
        return "not certified" if self.fixed_is_lower_bound else "not forced"

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "t": self.t,
            "p": self.p,
            "module": self.module,
            "dim_module": self.dim_module,
            "dim_fixed": self.dim_fixed,
            "fixed_is_lower_bound": self.fixed_is_lower_bound,
            "codim_sum": self.codim_sum,
            "status": self.status,
        }


def sharpness_fixed_space(ambient, t: int, p: int = 0) -> SharpnessVerdict:
    """t long root elements share a fixed vector when t * codim C_V(u_a) < dim V."""
    gt = as_group_type(ambient)
    check_characteristic(p)
    if t < 1:
        raise InvalidOrder(f"t must be positive, got {t}")
    rec = find_module(gt)
    dim_v, fixed = rec.dim_module(p), rec.dim_fixed(p)
    lhs = t * (dim_v - fixed)
    return SharpnessVerdict(
        str(gt), t, p, rec.module_name, dim_v, fixed, rec.fixed_is_lower_bound, lhs, lhs < dim_v
    )


def d_threshold(ambient) -> int:
    """d(G) = 3 (dim G - rank G)."""
    rs = build_root_system(ambient)
    return 3 * (rs.dim - rs.rank)


@dataclass(frozen=True)
class ClassFreeness:
    label: str
    dim_class: int
    exceptional: bool
    factor: int
    satisfied: bool


@dataclass(frozen=True)
class GenericFreeVerdict:
    ambient: str
    dim_V: int
    dim_V_fixed: int
    d_G: int
    generically_free: bool
    classes: tuple[ClassFreeness, ...] = ()

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "dim_V": self.dim_V,
            "dim_V_fixed": self.dim_V_fixed,
            "d_G": self.d_G,
            "generically_free": self.generically_free,
            "classes": [c.__dict__ for c in self.classes],
        }


def generic_free_check(
    ambient, dim_V: int, dim_V_fixed: int = 0, class_list=(), p: int = 0
) -> GenericFreeVerdict:
    """Sufficient condition dim V - dim V^G > d(G), with optional per-class detail."""
    gt = _require_exceptional(ambient)
    check_characteristic(p)
    if not dim_V > dim_V_fixed >= 0:
        raise ValueError("need dim V > dim V^G >= 0")
    n = dim_V - dim_V_fixed
    d = d_threshold(gt)
    per = []
    for label in class_list:
        rec = find_class(gt, label, p)
        exc = rec.label in T3_EXCLUDED
        factor = 5 if exc else 3
        per.append(ClassFreeness(rec.label, rec.dim_class, exc, factor, n > factor * rec.dim_class))
    return GenericFreeVerdict(str(gt), dim_V, dim_V_fixed, d, n > d, tuple(per))


@dataclass(frozen=True)
class Cor1Row:
    subgroup: str
    key: str
    term_r: AlphaTerm
    term_s: AlphaTerm

    @property
    def total(self) -> Fraction:
        return self.term_r.value + self.term_s.value

    @property
    def passed(self) -> bool:
        return strictly_below((self.term_r, self.term_s), Fraction(1))

    def to_dict(self) -> dict:
        return {
            "subgroup": self.subgroup,
            "key": self.key,
            "alpha_r": fmt(self.term_r.value),
            "alpha_r_strict": self.term_r.strict,
            "alpha_s": fmt(self.term_s.value),
            "alpha_s_strict": self.term_s.strict,
            "total": fmt(self.total),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Cor1Report:
    ambient: str
    r: int
    s: int
    rows: tuple[Cor1Row, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def tightest(self) -> Cor1Row:
        return max(self.rows, key=lambda row: (row.total, not row.term_r.strict or not row.term_s.strict))

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "r": self.r,
            "s": self.s,
            "passed": self.passed,
            "tightest": self.tightest.key,
            "rows": [row.to_dict() for row in self.rows],
        }


def _term(gt: GroupType, label: str, r: int, p) -> AlphaTerm:
    b = large_class_alpha_bound(gt, label, r, 0 if p is None else p)
    return AlphaTerm(b.value, b.strict, "exact" if b.exact else "strict-bound")


def check_cor1(ambient, r: int, s: int, p: int | None = None) -> Cor1Report:
    """alpha(G, M, g_r) + alpha(G, M, g_s) < 1 for every catalog subgroup M.

    With ``p=None`` the catalog rows of every characteristic are included.
    """
    gt = as_group_type(ambient)
    for v in (r, s):
        if not is_prime(v):
            raise InvalidOrder(f"{v} is not prime")
    if (r, s) == (2, 2):
        raise InvalidOrder("the pair (r, s) = (2, 2) is excluded")
    subs = (
        parabolic_records(gt) + curated_records(gt) if p is None else catalog_maximal(gt, p)
    )
    rows = tuple(
        Cor1Row(sub.label, sub.key, _term(gt, sub.label, r, p), _term(gt, sub.label, s, p))
        for sub in subs
    )
    return Cor1Report(str(gt), r, s, rows)
