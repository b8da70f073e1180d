"""Root systems in simple-root coordinates.

Every root is an integer vector of coefficients with respect to the simple
roots, numbered as in Bourbaki.  The Cartan matrix convention is

    cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)

so that the simple reflection s_i acts by
``beta -> beta - (sum_j beta_j * cartan[i][j]) * alpha_i``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import InvalidGroupType

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

FAMILIES = "ABCDEFG"
EXCEPTIONAL = ("E8", "E7", "E6", "F4", "G2")
#: groups covered by the random-generation results (B2 only in characteristic 2)
TORSION_GROUPS = ("E8", "E7", "E6", "F4", "G2", "D4", "B2")

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])_?\{?(\d+)\}?\s*$")


@dataclass(frozen=True, order=True)
class GroupType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam not in FAMILIES or not isinstance(n, int) or n < 1:
            raise InvalidGroupType(f"invalid Dynkin type {fam}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            raise InvalidGroupType(f"invalid Dynkin type {fam}{n}")

    @classmethod
    def parse(cls, text: str) -> GroupType:
        m = _TYPE_RE.match(text)
        if not m:
            raise InvalidGroupType(f"cannot parse group type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_exceptional(self) -> bool:
        return self.family in "EFG"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def as_group_type(g: GroupType | str) -> GroupType:
    return g if isinstance(g, GroupType) else GroupType.parse(g)


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(gt: GroupType) -> Matrix:
    """Cartan matrix with Bourbaki node numbering (0-based indices here)."""
    fam, n = gt.family, gt.rank
    if fam == "A":
        a = _chain(n)
    elif fam == "B":
        # alpha_n short
        a = _chain(n)
        a[n - 1][n - 2] = -2
    elif fam == "C":
        # alpha_n long
        a = _chain(n)
        a[n - 2][n - 1] = -2
    elif fam == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif fam == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        # 1-3-4-5-...-n chain, 2 attached to 4
        edges = [(1, 3), (2, 4), (3, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif fam == "F":
        a = _chain(4)
        a[2][1] = -2  # alpha_3 short, alpha_2 long
    else:  # G2, alpha_1 short
        a = [[2, -3], [-1, 2]]
    return tuple(tuple(row) for row in a)


def _components(cartan: Matrix, nodes: list[int] | None = None) -> list[list[int]]:
    nodes = list(range(len(cartan))) if nodes is None else list(nodes)
    todo = set(nodes)
    comps = []
    for start in nodes:
        if start not in todo:
            continue
        todo.discard(start)
        comp, stack = [start], [start]
        while stack:
            i = stack.pop()
            for j in list(todo):
                if cartan[i][j] != 0:
                    todo.discard(j)
                    comp.append(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def symmetrizer(cartan: Matrix) -> tuple[Fraction, ...]:
    """Half squared lengths d_i with d_i * cartan[i][j] symmetric.

    Each connected component is scaled so that its shortest simple root has
    d = 1.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for comp in _components(cartan):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
        low = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / low
    return tuple(d)  # type: ignore[arg-type]


def reflect(beta: Root, i: int, cartan: Matrix) -> Root:
    pairing = sum(b * c for b, c in zip(beta, cartan[i]))
    if pairing == 0:
        return beta
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def roots_from_cartan(cartan: Matrix, height_cap: int = 64) -> list[Root]:
    """All roots generated from the simple roots by reflection closure."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = reflect(beta, i, cartan)
                if gamma not in seen:
                    if abs(sum(gamma)) > height_cap:
                        raise InvalidGroupType("Cartan matrix is not of finite type")
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return _ordered(seen)


def _ordered(roots) -> list[Root]:
    pos = sorted((r for r in roots if sum(r) > 0), key=lambda r: (sum(r), r))
    return pos + [tuple(-c for c in r) for r in pos]


def _det(matrix) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


@dataclass(frozen=True)
class RootSystem:
    group_type: GroupType
    cartan: Matrix
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    marks: tuple[int, ...]
    simple_long: tuple[bool, ...]
    long_roots: frozenset[Root] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.group_type.rank

    @property
    def coxeter_number(self) -> int:
        return len(self.roots) // self.rank

    @property
    def dim(self) -> int:
        return len(self.roots) + self.rank

    def is_long(self, root: Root) -> bool:
        return root in self.long_roots

    def height(self, root: Root) -> int:
        return sum(root)

    def coefficient_matrix(self) -> np.ndarray:
        """Roots as an ``(n_roots, rank)`` int64 array, in ``roots`` order."""
        return _coeff_array(self.group_type)


@lru_cache(maxsize=None)
def _coeff_array(gt: GroupType) -> np.ndarray:
    arr = np.array(build_root_system(gt).roots, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _gram(cartan: Matrix) -> list[list[Fraction]]:
    d = symmetrizer(cartan)
    return [[d[i] * cartan[i][j] for j in range(len(cartan))] for i in range(len(cartan))]


def root_norm(root: Root, gram) -> Fraction:
    n = len(root)
    return sum(root[i] * root[j] * gram[i][j] for i in range(n) for j in range(n) if root[i] and root[j])


@lru_cache(maxsize=None)
def build_root_system(group_type: GroupType | str) -> RootSystem:
    """Construct the full root system of ``group_type``."""
    gt = as_group_type(group_type)
    cartan = cartan_matrix(gt)
    roots = roots_from_cartan(cartan)
    positive = [r for r in roots if sum(r) > 0]
    highest = max(positive, key=lambda r: (sum(r), r))
    assert all(all(h >= c for h, c in zip(highest, r)) for r in positive)
    gram = _gram(cartan)
    d = symmetrizer(cartan)
    dmax = max(d)
    simple_long = tuple(di == dmax for di in d)
    norms = {r: root_norm(r, gram) for r in positive}
    longest = max(norms.values())
    long_pos = {r for r, v in norms.items() if v == longest}
    long_all = frozenset(long_pos | {tuple(-c for c in r) for r in long_pos})
    return RootSystem(
        group_type=gt,
        cartan=cartan,
        roots=tuple(roots),
        positive_roots=tuple(positive),
        highest_root=highest,
        marks=(1,) + highest,
        simple_long=simple_long,
        long_roots=long_all,
    )


def coxeter_number(rs: RootSystem) -> int:
    return rs.coxeter_number


def dim_group(rs: RootSystem) -> int:
    return rs.dim


def weyl_group_order(rs: RootSystem) -> int:
    """|W| = rank! * (product of highest-root coefficients) * det(Cartan)."""
    det = _det(rs.cartan)
    assert det.denominator == 1
    return math.factorial(rs.rank) * math.prod(rs.highest_root) * int(det)


@dataclass(frozen=True)
class ExtendedDiagram:
    """Affine Dynkin diagram; node 0 is the negative highest root."""

    nodes: tuple[Root, ...]
    marks: tuple[int, ...]
    cartan: Matrix
    long_nodes: tuple[bool, ...]


@lru_cache(maxsize=None)
def _extended(gt: GroupType) -> ExtendedDiagram:
    rs = build_root_system(gt)
    n = rs.rank
    theta = rs.highest_root
    gram = _gram(rs.cartan)
    nodes = (tuple(-c for c in theta),) + tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n)
    )

    def pair(a: Root, b: Root) -> Fraction:
        return sum(a[i] * b[j] * gram[i][j] for i in range(n) for j in range(n) if a[i] and b[j])

    cart = [[0] * (n + 1) for _ in range(n + 1)]
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            v = 2 * pair(a, b) / pair(a, a)
            assert v.denominator == 1
            cart[i][j] = int(v)
    long_nodes = (True,) + rs.simple_long
    return ExtendedDiagram(nodes, rs.marks, tuple(tuple(r) for r in cart), long_nodes)


def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    return _extended(rs.group_type)


@dataclass(frozen=True, order=True)
class Component:
    """A simple factor of a subsystem; ``short`` marks a short-root (tilde) factor."""

    group_type: GroupType
    short: bool = False

    def __str__(self) -> str:
        return ("~" if self.short else "") + str(self.group_type)


def _identify(cartan: Matrix, comp: list[int]) -> GroupType:
    n = len(comp)
    bonds = {}
    deg = {i: 0 for i in comp}
    for a in comp:
        for b in comp:
            if a < b and cartan[a][b] != 0:
                bonds[(a, b)] = cartan[a][b] * cartan[b][a]
                deg[a] += 1
                deg[b] += 1
    if n == 1:
        return GroupType("A", 1)
    mult = set(bonds.values())
    if 3 in mult:
        return GroupType("G", 2)
    if 2 in mult:
        (a, b), = [k for k, v in bonds.items() if v == 2]
        if n == 2:
            return GroupType("B", 2)
        if n == 4 and deg[a] == 2 and deg[b] == 2:
            return GroupType("F", 4)
        short = a if cartan[a][b] == -2 else b
        return GroupType("B" if deg[short] == 1 else "C", n)
    branch = [i for i in comp if deg[i] == 3]
    if not branch:
        return GroupType("A", n)
    center = branch[0]
    arms = []
    for start in (j for j in comp if j != center and cartan[center][j] != 0):
        length, prev, cur = 1, center, start
        while True:
            nxt = [j for j in comp if j not in (prev, cur) and cartan[cur][j] != 0]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return GroupType("D", n)
    return GroupType("E", n)


def identify_components(
    cartan: Matrix, nodes: list[int] | None = None, long_flags=None
) -> list[tuple[Component, list[int]]]:
    """Split the subdiagram on ``nodes`` into simple factors and name each one.

    ``long_flags`` gives the ambient long/short status of each node; a
    simply-laced factor made only of short nodes in a non-simply-laced
    ambient is reported as a tilde factor.
    """
    out = []
    for comp in _components(cartan, nodes):
        gt = _identify(cartan, comp)
        short = False
        if long_flags is not None and gt.simply_laced and not all(long_flags):
            short = not any(long_flags[i] for i in comp)
        out.append((Component(gt, short), comp))
    out.sort(key=lambda item: component_sort_key(item[0]))
    return out


def component_sort_key(c: Component):
    return (c.group_type.rank, c.group_type.family, c.short)


def root_count(gt: GroupType) -> int:
    n = gt.rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(n, 0),
        "F": 48,
        "G": 12,
    }[gt.family]
