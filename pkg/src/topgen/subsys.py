"""Parabolic coset dimensions, maximal-rank subsystems and the subgroup catalog."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .chars import CharPredicate, check_characteristic
from .errors import InvalidGroupType
from .rootsys import (
    Component,
    GroupType,
    RootSystem,
    as_group_type,
    build_root_system,
    component_sort_key,
    extended_diagram,
    identify_components,
    root_count,
)

_TOKEN = re.compile(r"(~?)([A-G])(\d+)(?:\^(\d+))?|T(\d+)")


@dataclass(frozen=True)
class ParabolicDescriptor:
    group_type: GroupType
    node: int

    def __post_init__(self) -> None:
        if not 1 <= self.node <= self.group_type.rank:
            raise InvalidGroupType(f"{self.group_type} has no node {self.node}")

    @property
    def label(self) -> str:
        return f"P{self.node}"


@dataclass(frozen=True)
class SubsystemDescriptor:
    """Type of a reductive subgroup: simple factors plus a central torus."""

    components: tuple[Component, ...] = ()
    torus_rank: int = 0

    def __post_init__(self) -> None:
        if self.torus_rank < 0:
            raise ValueError("torus rank must be nonnegative")
        ordered = tuple(sorted(self.components, key=component_sort_key))
        object.__setattr__(self, "components", ordered)

    @classmethod
    def parse(cls, text: str) -> SubsystemDescriptor:
        return parse_label(text)

    @property
    def label(self) -> str:
        parts: list[str] = []
        i = 0
        comps = self.components
        while i < len(comps):
            j = i
            while j < len(comps) and comps[j] == comps[i]:
                j += 1
            parts.append(str(comps[i]) + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "".join(parts) or "1"

    @property
    def long_short_tag(self) -> tuple[bool, ...]:
        return tuple(c.short for c in self.components)

    @property
    def semisimple_rank(self) -> int:
        return sum(c.group_type.rank for c in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.torus_rank

    @property
    def root_count(self) -> int:
        return sum(root_count(c.group_type) for c in self.components)

    @property
    def positive_root_count(self) -> int:
        return self.root_count // 2

    @property
    def dim(self) -> int:
        return subsystem_dim(self)

    def semisimple_part(self) -> SubsystemDescriptor:
        return SubsystemDescriptor(self.components)

    def __str__(self) -> str:
        return self.label


def normalize_label(text: str) -> str:
    s = text.strip()
    s = s.replace("\\tilde", "~").replace("Ã", "~A").replace("×", "x")
    for ch in " _{}$\\":
        s = s.replace(ch, "")
    return s


def parse_label(text: str) -> SubsystemDescriptor:
    """Parse labels such as ``A1E7``, ``A4^2``, ``A2~A2`` or ``D4T2``."""
    s = normalize_label(text)
    if s == "1":
        return SubsystemDescriptor()
    pos, comps, torus = 0, [], 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise InvalidGroupType(f"cannot parse subsystem label {text!r}")
        tilde, fam, rank, exp, trank = m.groups()
        if trank is not None:
            torus += int(trank)
        else:
            comp = Component(GroupType(fam, int(rank)), bool(tilde))
            comps.extend([comp] * int(exp or 1))
        pos = m.end()
    return SubsystemDescriptor(tuple(comps), torus)


def subsystem_dim(sd: SubsystemDescriptor) -> int:
    return sum(root_count(c.group_type) + c.group_type.rank for c in sd.components) + sd.torus_rank


def coset_dim_parabolic(pd: ParabolicDescriptor) -> int:
    """dim G/P_i: the number of positive roots involving alpha_i."""
    rs = build_root_system(pd.group_type)
    i = pd.node - 1
    return sum(1 for r in rs.positive_roots if r[i] != 0)


def parabolic_dim(pd: ParabolicDescriptor) -> int:
    return build_root_system(pd.group_type).dim - coset_dim_parabolic(pd)


def levi_subsystem(pd: ParabolicDescriptor) -> SubsystemDescriptor:
    """Levi factor type of P_i, read off the diagram with node i removed."""
    rs = build_root_system(pd.group_type)
    nodes = [j for j in range(rs.rank) if j != pd.node - 1]
    comps = identify_components(rs.cartan, nodes, rs.simple_long)
    return SubsystemDescriptor(tuple(c for c, _ in comps), 1)


def _deletions(cartan, marks, long_nodes, prime_only: bool = True):
    out = []
    for k, mark in enumerate(marks):
        if prime_only and not _is_prime(mark):
            continue
        nodes = [j for j in range(len(marks)) if j != k]
        comps = identify_components(cartan, nodes, long_nodes)
        out.append((k, SubsystemDescriptor(tuple(c for c, _ in comps))))
    return out


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % f for f in range(2, int(n**0.5) + 1))


def bds_maximal_subsystems(rs: RootSystem) -> list[SubsystemDescriptor]:
    """Delete each prime-mark node of the extended diagram; dedupe by type."""
    ed = extended_diagram(rs)
    seen: dict[str, SubsystemDescriptor] = {}
    for _, sd in _deletions(ed.cartan, ed.marks, ed.long_nodes):
        seen.setdefault(sd.label, sd)
    return list(seen.values())


@lru_cache(maxsize=None)
def _component_children(comp: Component, ambient_mixed: bool) -> tuple[tuple[Component, ...], ...]:
    rs = build_root_system(comp.group_type)
    ed = extended_diagram(rs)
    long_nodes = ed.long_nodes if not comp.group_type.simply_laced else None
    out = []
    for _, sd in _deletions(ed.cartan, ed.marks, long_nodes or [True] * len(ed.marks)):
        kids = []
        for c in sd.components:
            if comp.group_type.simply_laced:
                short = comp.short
            else:
                short = ambient_mixed and c.short
            kids.append(Component(c.group_type, short))
        out.append(tuple(kids))
    return tuple(out)


def bds_iterated(rs: RootSystem) -> set[str]:
    """Labels of every semisimple maximal-rank subsystem reached by repeated deletion."""
    mixed = not rs.group_type.simply_laced
    start = SubsystemDescriptor((Component(rs.group_type),))
    seen = {start.label: start}
    todo = [start]
    while todo:
        sd = todo.pop()
        comps = list(sd.components)
        for idx, comp in enumerate(comps):
            if idx and comps[idx - 1] == comp:
                continue
            for kids in _component_children(comp, mixed):
                new = SubsystemDescriptor(tuple(comps[:idx] + list(kids) + comps[idx + 1 :]))
                if new.label not in seen:
                    seen[new.label] = new
                    todo.append(new)
    del seen[start.label]
    return set(seen)


KINDS = ("parabolic", "subsystem", "curated")


@dataclass(frozen=True)
class SubgroupRecord:
    ambient: GroupType
    kind: str
    label: str
    descriptor: ParabolicDescriptor | SubsystemDescriptor
    dim_m0: int
    component_group_order: int
    char_predicate: CharPredicate = field(default_factory=CharPredicate)
    citation: str = ""
    component_group: str = ""
    variant: str = ""

    @property
    def coset_dim(self) -> int:
        return build_root_system(self.ambient).dim - self.dim_m0

    @property
    def key(self) -> str:
        return f"{self.label}#{self.variant}" if self.variant else self.label

    def to_dict(self) -> dict:
        return {
            "ambient": str(self.ambient),
            "kind": self.kind,
            "label": self.label,
            "variant": self.variant,
            "dim_m0": self.dim_m0,
            "dim_x": self.coset_dim,
            "component_group": self.component_group,
            "component_group_order": self.component_group_order,
            "char": str(self.char_predicate),
            "citation": self.citation,
        }


@lru_cache(maxsize=None)
def load_json(name: str) -> dict:
    """Parsed contents of a bundled data file; callers must not mutate it."""
    return json.loads(resources.files("topgen").joinpath("data", name).read_text())


@lru_cache(maxsize=None)
def _curated_rows() -> tuple[SubgroupRecord, ...]:
    data = load_json("maximal_subgroups.json")
    rows = []
    for raw in data["records"]:
        gt = GroupType.parse(raw["ambient"])
        desc = parse_label(raw.get("m0", raw["label"]))
        rec = SubgroupRecord(
            ambient=gt,
            kind=raw["kind"],
            label=raw["label"],
            descriptor=desc,
            dim_m0=raw["dim_m0"],
            component_group_order=raw["component_group_order"],
            char_predicate=CharPredicate.parse(raw["char"]),
            citation=raw["citation"],
            component_group=raw.get("component_group", ""),
            variant=raw.get("variant", ""),
        )
        if rec.kind not in KINDS:
            raise ValueError(f"bad kind in catalog row {raw}")
        rows.append(rec)
    return tuple(rows)


@lru_cache(maxsize=None)
def _parabolic_citations() -> dict:
    data = load_json("parabolic_dims.json")
    return {k: v for k, v in data["tables"].items()}


def parabolic_records(group_type: GroupType | str) -> list[SubgroupRecord]:
    gt = as_group_type(group_type)
    cite = _parabolic_citations().get(str(gt), {}).get("citation", "")
    out = []
    for node in range(1, gt.rank + 1):
        pd = ParabolicDescriptor(gt, node)
        out.append(
            SubgroupRecord(
                ambient=gt,
                kind="parabolic",
                label=pd.label,
                descriptor=pd,
                dim_m0=parabolic_dim(pd),
                component_group_order=1,
                citation=cite,
                component_group="1",
            )
        )
    return out


def curated_records(group_type: GroupType | str) -> list[SubgroupRecord]:
    gt = as_group_type(group_type)
    return [r for r in _curated_rows() if r.ambient == gt]


def supported_catalogs() -> list[str]:
    return sorted({str(r.ambient) for r in _curated_rows()})


def catalog_maximal(group_type: GroupType | str, p: int) -> list[SubgroupRecord]:
    """All positive-dimensional maximal closed subgroups admitted in characteristic p."""
    gt = as_group_type(group_type)
    check_characteristic(p)
    if str(gt) not in supported_catalogs():
        raise InvalidGroupType(f"no subgroup catalog for {gt}")
    rows = parabolic_records(gt) + curated_records(gt)
    return [r for r in rows if r.char_predicate.admits(p)]


def find_subgroup(group_type: GroupType | str, label: str, p: int | None = None) -> list[SubgroupRecord]:
    gt = as_group_type(group_type)
    want = canonical_subgroup_label(label)
    rows = parabolic_records(gt) + curated_records(gt)
    return [
        r for r in rows
        if canonical_subgroup_label(r.label) == want and (p is None or r.char_predicate.admits(p))
    ]


def canonical_subgroup_label(label: str) -> str:
    s = normalize_label(label)
    if re.fullmatch(r"P\d+", s):
        return s
    try:
        return parse_label(s).label
    except InvalidGroupType:
        return s
