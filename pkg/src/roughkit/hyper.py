"""Parameterized-family models: parameter-indexed Pawlak pairs, soft rough
approximations, strait partitions, and the depth-limited lifting of a base
equivalence to iterated powersets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from roughkit.approx import ApproximationPair, pawlak_pair
from roughkit.foundation import GuardError, InformationTable, Partition, Subset, Universe

LIFT_GUARDS = {1: 6, 2: 4}

PARAM_FAMILY_KINDS = ("hyper", "bipartite", "soft", "expert", "strait")


@dataclass(frozen=True)
class ParamFamily:
    """Association parameter -> subset of the universe."""

    universe: Universe
    kind: str
    entries: tuple[tuple[str, frozenset[int]], ...]

    def __post_init__(self):
        if self.kind not in PARAM_FAMILY_KINDS:
            raise ValueError(f"unknown parameter family kind {self.kind!r}")
        keys = [k for k, _ in self.entries]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate parameter key")
        n = self.universe.size
        fixed = tuple((k, frozenset(int(i) for i in v)) for k, v in self.entries)
        object.__setattr__(self, "entries", fixed)
        if any(not (0 <= i < n) for _, v in fixed for i in v):
            raise ValueError("image index out of range")
        if self.kind == "strait":
            covered: set[int] = set()
            for _, v in fixed:
                if not v:
                    raise ValueError("strait images must be nonempty")
                if covered & v:
                    raise ValueError("strait images must be pairwise disjoint")
                covered |= v
            if covered != set(range(n)):
                raise ValueError("strait images must cover the universe")

    @classmethod
    def from_mapping(cls, universe: Universe, kind: str, images: Mapping[str, Iterable[str]]) -> ParamFamily:
        return cls(universe, kind, tuple((str(k), frozenset(universe.index(e) for e in v)) for k, v in images.items()))

    @property
    def keys(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.entries)

    def image(self, key: str) -> Subset:
        for k, v in self.entries:
            if k == key:
                return Subset(self.universe, v)
        raise KeyError(key)

    def to_partition(self) -> Partition:
        if self.kind != "strait":
            raise ValueError("only strait families induce a partition")
        return Partition(self.universe, tuple(v for _, v in self.entries))


def hyper_family_from_table(table: InformationTable, attrs: Sequence[str]) -> ParamFamily:
    """Full Cartesian parameter space over the attributes' observed domains,
    mapping each value combination to its matching rows (possibly empty).
    """
    names = tuple(attrs)
    cols = [table.column(a) for a in names]
    domains = [tuple(dict.fromkeys(col)) for col in cols]
    entries = []
    for combo in itertools.product(*domains):
        members = frozenset(
            i for i in range(table.universe.size) if all(col[i] == v for col, v in zip(cols, combo))
        )
        entries.append(("|".join(str(v) for v in combo), members))
    return ParamFamily(table.universe, "hyper", tuple(entries))


def param_family_approx(family: ParamFamily, rel: Partition) -> dict[str, ApproximationPair]:
    """Per parameter, the Pawlak pair of its image; empty images stay (empty, empty)."""
    if rel.universe != family.universe:
        raise ValueError("relation universe does not match the family universe")
    out = {}
    for key, image in family.entries:
        pair = pawlak_pair(rel, Subset(family.universe, image))
        out[key] = ApproximationPair(pair.lower, pair.upper, f"param:{family.kind}")
    return out


def soft_rough(family: ParamFamily, b_target: Subset) -> ApproximationPair:
    """Union form: lower joins images inside B, upper joins images meeting B."""
    if b_target.universe != family.universe:
        raise ValueError("target universe does not match the family universe")
    t = b_target.indices
    lower = frozenset().union(*[v for _, v in family.entries if v and v <= t])
    upper = frozenset().union(*[v for _, v in family.entries if v & t])
    return ApproximationPair(Subset(family.universe, lower), Subset(family.universe, upper), "soft_rough")


@dataclass(frozen=True)
class StraitResult:
    pair: ApproximationPair
    boundary: Subset
    definable: bool


def strait_approx(family: ParamFamily, x_target: Subset) -> StraitResult:
    """Union-form approximations over the blocks of a strait (partition) family."""
    if family.kind != "strait":
        raise ValueError("strait approximation requires a strait family")
    pair = pawlak_pair(family.to_partition(), x_target)
    pair = ApproximationPair(pair.lower, pair.upper, "strait")
    return StraitResult(pair, pair.boundary, pair.is_definable())


# ---------------------------------------------------------------------------
# lifted relations on iterated powersets

Level0 = str
Level1 = frozenset
Level2 = frozenset


def _canonical(value):
    """Canonicalize a level set: strings stay, iterables become frozensets recursively."""
    if isinstance(value, str):
        return value
    return frozenset(_canonical(v) for v in value)


@dataclass(frozen=True)
class LiftedRelation:
    """Equivalence on the k-th iterated powerset via touched-class signatures.

    Two level-k sets are related iff they touch the same level-(k-1) classes,
    which is exactly the mutual-cover condition of the lifting.
    """

    base: Partition
    level: int

    def __post_init__(self):
        if self.level not in (0, 1, 2):
            raise ValueError("lifting is supported for levels 0, 1, 2")
        guard = LIFT_GUARDS.get(self.level)
        if guard is not None and self.base.universe.size > guard:
            raise GuardError(f"level-{self.level} lifting is guarded to |X| <= {guard}")

    def signature(self, value):
        value = _canonical(value)
        return self._sig(value, self.level)

    def _sig(self, value, level: int):
        if level == 0:
            return self.base.block_index[self.base.universe.index(value)]
        return frozenset(self._sig(v, level - 1) for v in value)

    def related(self, a, b) -> bool:
        return self.signature(a) == self.signature(b)

    @cached_property
    def elements(self) -> tuple:
        """All level-k sets over the base universe (guarded sizes keep this finite)."""
        current: list = list(self.base.universe.elements)
        for _ in range(self.level):
            nxt = []
            for r in range(len(current) + 1):
                for combo in itertools.combinations(current, r):
                    nxt.append(frozenset(combo))
            current = nxt
        return tuple(current)

    def equivalence_class(self, value) -> tuple:
        sig = self.signature(value)
        return tuple(v for v in self.elements if self._sig(v, self.level) == sig)


def superhyper_lift(base: Partition, k: int) -> LiftedRelation:
    if k not in (1, 2):
        raise ValueError("lifting level k must be 1 or 2")
    return LiftedRelation(base, k)


def superhyper_approx(c_value: Iterable, lifted: LiftedRelation) -> tuple[frozenset, frozenset]:
    """Approximate a level-n target by level-(n-1) classes of the lifted relation.

    c_value is a collection of level-(n-1) sets; lifted carries the relation at
    that same level.  Returns (lower, upper) as frozensets of level elements.
    """
    target = frozenset(_canonical(v) for v in c_value)
    groups: dict[object, list] = {}
    for element in lifted.elements:
        groups.setdefault(lifted.signature(element), []).append(element)
    lower: set = set()
    upper: set = set()
    for members in groups.values():
        inside = [m in target for m in members]
        if all(inside):
            lower.update(members)
        if any(inside):
            upper.update(members)
    return frozenset(lower), frozenset(upper)
