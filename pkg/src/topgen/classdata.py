"""Curated class dimensions, fixed point ratios and module fixed spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .chars import CharPredicate, check_characteristic
from .errors import InvalidGroupType, NotCurated
from .rootsys import EXCEPTIONAL, GroupType, as_group_type
from .subsys import canonical_subgroup_label, load_json, normalize_label


def delta(a: int, b: int) -> int:
    return int(a == b)


@dataclass(frozen=True)
class DeltaForm:
    """The integer ``base + coeff * delta(prime, p)``."""

    base: int
    coeff: int = 0
    prime: int = 0

    def at(self, p: int) -> int:
        return self.base + self.coeff * delta(self.prime, p)

    @classmethod
    def from_dict(cls, d: dict) -> DeltaForm:
        return cls(d["base"], d.get("delta_coeff", 0), d.get("delta_prime", 0))

    def __str__(self) -> str:
        if not self.coeff:
            return str(self.base)
        sign = "+" if self.coeff > 0 else "-"
        c = abs(self.coeff)
        return f"{self.base}{sign}{'' if c == 1 else c}d({self.prime},p)"


def canonical_class_label(label: str) -> str:
    s = normalize_label(label)
    for src, dst in (("u_α", "u_a"), ("u_β", "u_b"), ("uα", "u_a"), ("uβ", "u_b"), ("α", "a"), ("β", "b")):
        s = s.replace(src, dst)
    if s in ("ua", "u_{a}"):
        return "u_a"
    if s in ("ub", "u_{b}"):
        return "u_b"
    return s


@dataclass(frozen=True)
class ClassRecord:
    ambient: GroupType
    label: str
    nature: str
    dim_class: int
    char_predicate: CharPredicate
    citation: str
    aliases: tuple[str, ...] = ()
    max_for_r: int | None = None
    note: str = ""

    def names(self) -> tuple[str, ...]:
        return (self.label,) + self.aliases

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "label": self.label,
            "aliases": list(self.aliases),
            "nature": self.nature,
            "dim_class": self.dim_class,
            "char": str(self.char_predicate),
            "max_for_r": self.max_for_r,
            "citation": self.citation,
        }


@dataclass(frozen=True)
class AlphaRecord:
    ambient: GroupType
    subgroup_label: str
    class_label: str
    numerator: DeltaForm
    denominator: int
    char_predicate: CharPredicate
    citation: str

    def alpha(self, p: int) -> Fraction:
        return Fraction(self.numerator.at(p), self.denominator)

    @property
    def form(self) -> str:
        if not self.numerator.coeff:
            return str(Fraction(self.numerator.base, self.denominator))
        return f"({self.numerator})/{self.denominator}"

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "subgroup": self.subgroup_label,
            "class": self.class_label,
            "alpha": self.form,
            "char": str(self.char_predicate),
            "citation": self.citation,
        }


@dataclass(frozen=True)
class ModuleFixRecord:
    ambient: GroupType
    module_name: str
    dim_module_form: DeltaForm
    dim_fixed_form: DeltaForm
    fixed_is_lower_bound: bool
    t: int
    citation: str
    derived: bool = False

    def dim_module(self, p: int) -> int:
        return self.dim_module_form.at(p)

    def dim_fixed(self, p: int) -> int:
        return self.dim_fixed_form.at(p)

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "module": self.module_name,
            "dim_module": str(self.dim_module_form),
            "dim_fixed": str(self.dim_fixed_form),
            "fixed_is_lower_bound": self.fixed_is_lower_bound,
            "t": self.t,
            "derived": self.derived,
            "citation": self.citation,
        }


@dataclass(frozen=True)
class LargeAlphaRow:
    ambient: GroupType
    subgroup_label: str
    class_label: str
    alpha: Fraction
    char_predicate: CharPredicate = field(default_factory=CharPredicate)


@lru_cache(maxsize=None)
def class_records() -> tuple[ClassRecord, ...]:
    out = []
    for raw in load_json("classes.json")["records"]:
        out.append(
            ClassRecord(
                ambient=GroupType.parse(raw["ambient"]),
                label=raw["label"],
                nature=raw["nature"],
                dim_class=raw["dim_class"],
                char_predicate=CharPredicate.parse(raw["char"]),
                citation=raw["citation"],
                aliases=tuple(raw.get("aliases", ())),
                max_for_r=raw.get("max_for_r"),
                note=raw.get("note", ""),
            )
        )
    return tuple(out)


@lru_cache(maxsize=None)
def alpha_records() -> tuple[AlphaRecord, ...]:
    out = []
    for raw in load_json("alpha.json")["records"]:
        if "alpha_form" in raw:
            f = raw["alpha_form"]
            num = DeltaForm(f["base"], f["delta_coeff"], f["delta_prime"])
            den = f["denominator"]
        else:
            q = Fraction(raw["alpha"])
            num, den = DeltaForm(q.numerator), q.denominator
        out.append(
            AlphaRecord(
                ambient=GroupType.parse(raw["ambient"]),
                subgroup_label=raw["subgroup"],
                class_label=raw["class"],
                numerator=num,
                denominator=den,
                char_predicate=CharPredicate.parse(raw["char"]),
                citation=raw["citation"],
            )
        )
    return tuple(out)


@lru_cache(maxsize=None)
def large_alpha_rows() -> tuple[LargeAlphaRow, ...]:
    return tuple(
        LargeAlphaRow(
            GroupType.parse(raw["ambient"]),
            raw["subgroup"],
            raw["class"],
            Fraction(raw["alpha"]),
            CharPredicate.parse(raw["char"]),
        )
        for raw in load_json("large_alpha.json")["records"]
    )


@lru_cache(maxsize=None)
def module_records() -> tuple[ModuleFixRecord, ...]:
    return tuple(
        ModuleFixRecord(
            ambient=GroupType.parse(raw["ambient"]),
            module_name=raw["module"],
            dim_module_form=DeltaForm.from_dict(raw["dim_module"]),
            dim_fixed_form=DeltaForm.from_dict(raw["dim_fixed"]),
            fixed_is_lower_bound=raw["fixed_is_lower_bound"],
            t=raw["t"],
            citation=raw["citation"],
            derived=raw.get("derived", False),
        )
        for raw in load_json("modules.json")["records"]
    )


def find_class(ambient, label: str, p: int) -> ClassRecord:
    """The curated class called ``label`` (or an alias) that exists in characteristic p."""
    gt = as_group_type(ambient)
    check_characteristic(p)
    want = canonical_class_label(label)
    hits = [
        c for c in class_records()
        if c.ambient == gt
        and want in (canonical_class_label(n) for n in c.names())
        and c.char_predicate.admits(p)
    ]
    if not hits:
        raise NotCurated(f"class {label!r} of {gt} is not curated for p={p}")
    return hits[0]


def lookup_class_dim(ambient, label: str, p: int) -> int:
    return find_class(ambient, label, p).dim_class


def class_labels(ambient, p: int | None = None) -> list[str]:
    gt = as_group_type(ambient)
    return [
        c.label for c in class_records()
        if c.ambient == gt and (p is None or c.char_predicate.admits(p))
    ]


def _class_key(ambient: GroupType, label: str, p: int) -> str:
    """Canonical name of a class so that aliases compare equal."""
    try:
        return find_class(ambient, label, p).label
    except NotCurated:
        return canonical_class_label(label)


def find_alpha(ambient, subgroup_label: str, class_label: str, p: int) -> AlphaRecord:
    gt = as_group_type(ambient)
    check_characteristic(p)
    sub = canonical_subgroup_label(subgroup_label)
    cls = _class_key(gt, class_label, p)
    for rec in alpha_records():
        if (
            rec.ambient == gt
            and canonical_subgroup_label(rec.subgroup_label) == sub
            and _class_key(gt, rec.class_label, p) == cls
            and rec.char_predicate.admits(p)
        ):
            return rec
    raise NotCurated(f"alpha({gt}, {subgroup_label}, {class_label}) is not curated for p={p}")


def lookup_alpha(ambient, subgroup_label: str, class_label: str, p: int) -> Fraction:
    return find_alpha(ambient, subgroup_label, class_label, p).alpha(p)


def kappa(ambient, p: int = 0) -> Fraction:
    """Largest stored alpha admitted in characteristic p."""
    gt = as_group_type(ambient)
    if str(gt) not in EXCEPTIONAL:
        raise InvalidGroupType(f"kappa is defined for exceptional groups, not {gt}")
    check_characteristic(p)
    return max(r.alpha(p) for r in alpha_records() if r.ambient == gt and r.char_predicate.admits(p))


def kappa_witnesses(ambient, p: int = 0) -> list[AlphaRecord]:
    gt = as_group_type(ambient)
    k = kappa(gt, p)
    return [r for r in alpha_records() if r.ambient == gt and r.char_predicate.admits(p) and r.alpha(p) == k]


def find_module(ambient) -> ModuleFixRecord:
    gt = as_group_type(ambient)
    for rec in module_records():
        if rec.ambient == gt:
            return rec
    raise NotCurated(f"no module fixed-space record for {gt}")


def unipotent_max_class(ambient, p: int) -> ClassRecord | None:
    """The curated unipotent class of order p with the largest dimension, if stored."""
    gt = as_group_type(ambient)
    for c in class_records():
        if c.ambient == gt and c.nature == "unipotent" and c.max_for_r == p and c.char_predicate.admits(p):
            return c
    return None


def max_classes_for_r(ambient, r: int, nature: str) -> list[ClassRecord]:
    gt = as_group_type(ambient)
    return [c for c in class_records() if c.ambient == gt and c.max_for_r == r and c.nature == nature]


@dataclass(frozen=True)
class LargeClassBound:
    value: Fraction
    strict: bool
    citation: str

    @property
    def exact(self) -> bool:
        return not self.strict


def large_class_alpha_bound(ambient, subgroup_label: str, r: int, p: int = 0) -> LargeClassBound:
    """Bound on alpha(G, M, g_r) for a class attaining gamma(G, r).

    Strict bound (2 + delta(2, r))/5, or the exact exceptional value where one
    is recorded.
    """
    gt = as_group_type(ambient)
    data = load_json("large_class_bounds.json")
    sub = canonical_subgroup_label(subgroup_label)
    for exc in data["exceptions"]:
        if (
            exc["ambient"] == str(gt)
            and r in exc["r"]
            and sub in {canonical_subgroup_label(s) for s in exc["subgroups"]}
        ):
            return LargeClassBound(Fraction(exc["alpha"]), False, exc["citation"])
    return LargeClassBound(Fraction(2 + delta(2, r), 5), True, data["citation"])


def dump_all() -> dict:
    """Every curated row with its citation, for audit."""
    from .subsys import _curated_rows

    return {
        "classes": [c.to_dict() for c in class_records()],
        "alpha": [a.to_dict() for a in alpha_records()],
        "modules": [m.to_dict() for m in module_records()],
        "subgroups": [s.to_dict() for s in _curated_rows()],
        "large_alpha": [
            {
                "ambient": str(t.ambient),
                "subgroup": t.subgroup_label,
                "class": t.class_label,
                "alpha": f"{t.alpha.numerator}/{t.alpha.denominator}",
                "char": str(t.char_predicate),
            }
            for t in large_alpha_rows()
        ],
        "torsion_dims": load_json("torsion_dims.json"),
        "large_class_bounds": load_json("large_class_bounds.json"),
        "perm_chars": load_json("perm_chars.json"),
        "refinements": load_json("refinements.json"),
    }
