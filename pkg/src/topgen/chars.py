"""Characteristic predicates such as ``p!=2,3`` or ``p>=23``.

The characteristic 0 satisfies ``any``, every ``!=`` predicate and every
``>=`` predicate, and nothing else.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

KINDS = ("any", "equals", "not_equals", "at_least", "in_set")

_RE = re.compile(r"^p\s*(=|==|!=|>=|in)\s*\{?\s*([\d,\s]+?)\s*\}?$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [k for k in range(2, n + 1) if is_prime(k)]


def check_characteristic(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


@dataclass(frozen=True)
class CharPredicate:
    kind: str = "any"
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown predicate kind {self.kind!r}")
        if (self.kind == "any") != (not self.values):
            raise ValueError(f"bad values for {self.kind}: {self.values}")
        if self.kind in ("equals", "at_least") and len(self.values) != 1:
            raise ValueError(f"{self.kind} takes exactly one value")

    @classmethod
    def parse(cls, text: str) -> CharPredicate:
        text = text.strip()
        if text in ("", "any"):
            return cls()
        m = _RE.match(text)
        if not m:
            raise ValueError(f"cannot parse characteristic predicate {text!r}")
        op, raw = m.groups()
        vals = tuple(sorted(int(v) for v in raw.replace(" ", "").split(",") if v))
        kind = {"=": "equals", "==": "equals", "!=": "not_equals", ">=": "at_least", "in": "in_set"}[op]
        if kind == "equals" and len(vals) > 1:
            kind = "in_set"
        return cls(kind, vals)

    def admits(self, p: int) -> bool:
        if self.kind == "any":
            return True
        if self.kind == "not_equals":
            return p not in self.values
        if self.kind == "at_least":
            return p == 0 or p >= self.values[0]
        if p == 0:
            return False
        return p in self.values

    def __str__(self) -> str:
        vals = ",".join(map(str, self.values))
        return {
            "any": "any",
            "equals": f"p={vals}",
            "not_equals": f"p!={vals}",
            "at_least": f"p>={vals}",
            "in_set": f"p in {{{vals}}}",
        }[self.kind]


ANY = CharPredicate()
