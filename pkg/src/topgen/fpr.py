"""Fixed-point-space arithmetic on coset varieties G/M."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .chars import check_characteristic
from .classdata import alpha_records, find_class
from .errors import InconsistentDimensions, InvalidOrder, NotCurated
from .rootsys import build_root_system
from .subsys import (
    ParabolicDescriptor,
    SubsystemDescriptor,
    coset_dim_parabolic,
    find_subgroup,
    load_json,
)


@dataclass(frozen=True)
class FixedPointComputation:
    dim_X: int
    dim_class: int
    dim_intersection: int
    dim_fixed: int
    alpha: Fraction
    beta: int


def fixed_space_dim(dim_X: int, dim_class: int, dim_intersection: int) -> FixedPointComputation:
    """dim X(g) = dim X - dim g^G + dim(g^G cap M)."""
    if dim_X <= 0:
        raise InconsistentDimensions(f"dim X must be positive, got {dim_X}")
    if dim_class < 0 or dim_intersection < 0:
        raise InconsistentDimensions("dimensions must be nonnegative")
    if dim_intersection > dim_class:
        raise InconsistentDimensions(
            f"dim(g^G cap M) = {dim_intersection} exceeds dim g^G = {dim_class}"
        )
    fixed = dim_X - dim_class + dim_intersection
    if fixed < 0:
        raise InconsistentDimensions(
            f"negative fixed space: {dim_X} - {dim_class} + {dim_intersection} = {fixed}"
        )
    return FixedPointComputation(
        dim_X, dim_class, dim_intersection, fixed, Fraction(fixed, dim_X), dim_X - fixed
    )


def intersection_from_alpha(alpha: Fraction, dim_X: int, dim_class: int) -> Fraction:
    """Solve the fixed-space identity for dim(g^G cap M)."""
    return alpha * dim_X - dim_X + dim_class


def semisimple_parabolic_bound(centralizer: SubsystemDescriptor, pd: ParabolicDescriptor) -> int:
    """min(#positive roots of D, dim G/P): bounds dim X(g) for C_G(g) = D."""
    return min(centralizer.positive_root_count, coset_dim_parabolic(pd))


@lru_cache(maxsize=None)
def _refinements() -> tuple[dict, ...]:
    return tuple(load_json("refinements.json")["records"])


def refined_semisimple_parabolic_bound(
    centralizer: SubsystemDescriptor, pd: ParabolicDescriptor
) -> tuple[int, str | None]:
    """The generic bound, tightened by a curated adjustment when one is recorded."""
    bound = semisimple_parabolic_bound(centralizer, pd)
    for row in _refinements():
        if (
            row["ambient"] == str(pd.group_type)
            and row["parabolic"] == pd.node
            and SubsystemDescriptor.parse(row["centralizer"]).label == centralizer.label
        ):
            return min(bound, row["bound"]), row["citation"]
    return bound, None


def unipotent_borel_bound(centralizer_dim: int, rank: int) -> int:
    """floor((dim D - rank G)/2) bounds dim X(g) for unipotent g with dim C_G(g) = dim D."""
    if centralizer_dim < rank:
        raise InconsistentDimensions(
            f"centralizer dimension {centralizer_dim} is below the rank {rank}"
        )
    return (centralizer_dim - rank) // 2


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class PermCharPolynomial:
    parabolic_index: int
    factors: tuple[tuple[int, ...], ...]
    citation: str = ""

    @property
    def coefficients(self) -> tuple[int, ...]:
        out = [1]
        for f in self.factors:
            out = _poly_mul(out, list(f))
        return tuple(out)

    @property
    def degree(self) -> int:
        return sum(len(f) - 1 for f in self.factors)

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, q: int) -> int:
        return sum(c * q**k for k, c in enumerate(self.coefficients))

    def factored(self) -> str:
        parts = []
        for f in self.factors:
            terms = []
            for k in range(len(f) - 1, -1, -1):
                c = f[k]
                if not c:
                    continue
                mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
                coef = str(c) if (c != 1 or k == 0) else ""
                terms.append(coef + mono)
            parts.append("(" + "+".join(terms) + ")")
        return "".join(parts)


@lru_cache(maxsize=None)
def perm_char_polynomials() -> dict[int, PermCharPolynomial]:
    out = {}
    for row in load_json("perm_chars.json")["records"]:
        out[row["index"]] = PermCharPolynomial(
            row["index"], tuple(tuple(f) for f in row["factors"]), row["citation"]
        )
    return out


def perm_char_eval(parabolic_index: int, q: int) -> tuple[int, int]:
    """Value at q and degree of the permutation character at a B4-type involution."""
    polys = perm_char_polynomials()
    if parabolic_index not in polys:
        raise InvalidOrder(f"parabolic index must be one of {sorted(polys)}, got {parabolic_index}")
    if q < 2:
        raise InvalidOrder(f"q must be at least 2, got {q}")
    poly = polys[parabolic_index]
    return poly(q), poly.degree


@dataclass(frozen=True)
class AlphaCheckRow:
    ambient: str
    subgroup: str
    class_label: str
    p: int
    alpha: Fraction
    dim_X: int
    dim_M: int
    dim_fixed: Fraction
    dim_class: int | None
    dim_intersection: Fraction | None
    integral: bool
    intersection_ok: bool | None
    verdict: str
    citation: str

    def to_dict(self) -> dict:
        d = asdict(self)
        for k in ("alpha", "dim_fixed", "dim_intersection"):
            v = d[k]
            if isinstance(v, Fraction):
                d[k] = f"{v.numerator}/{v.denominator}"
        return d


def verify_alpha_tables(p: int) -> list[AlphaCheckRow]:
    """Integrality and intersection-range checks for every stored alpha admitted at p."""
    check_characteristic(p)
    rows = []
    for rec in alpha_records():
        if not rec.char_predicate.admits(p):
            continue
        subs = find_subgroup(rec.ambient, rec.subgroup_label, p)
        if not subs:
            continue
        sub = subs[0]
        alpha = rec.alpha(p)
        dim_x = sub.coset_dim
        fixed = alpha * dim_x
        integral = fixed.denominator == 1
        try:
            dim_class = find_class(rec.ambient, rec.class_label, p).dim_class
        except NotCurated:
            dim_class = None
        if dim_class is None:
            inter, inter_ok = None, None
            verdict = "pass" if integral else "fail"
            verdict += " (intersection skipped: class not curated)"
        else:
            inter = intersection_from_alpha(alpha, dim_x, dim_class)
            inter_ok = 0 <= inter <= sub.dim_m0 and inter <= dim_class
            verdict = "pass" if integral and inter_ok else "fail"
        rows.append(
            AlphaCheckRow(
                ambient=str(rec.ambient),
                subgroup=rec.subgroup_label,
                class_label=rec.class_label,
                p=p,
                alpha=alpha,
                dim_X=dim_x,
                dim_M=sub.dim_m0,
                dim_fixed=fixed,
                dim_class=dim_class,
                dim_intersection=inter,
                integral=integral,
                intersection_ok=inter_ok,
                verdict=verdict,
                citation=rec.citation,
            )
        )
    return rows


def group_dim(ambient) -> int:
    return build_root_system(ambient).dim
