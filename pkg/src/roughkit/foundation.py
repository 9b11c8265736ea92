"""Finite universes, subsets, relations, partitions, tables, and exact rationals.

Everything downstream consumes these carriers.  All types are immutable after
construction and all operations are pure, so values can be shared freely
across threads.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class GuardError(ValueError):
    """Raised when an input exceeds a documented combinatorial guard."""


Cell = "str | int | Fraction"
_NUMERIC_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+\.?)")


def parse_rational(value) -> Fraction:
    """Exact rational from int, Fraction, 'num/den' or decimal text, or float.

    Floats go through their shortest repr, so 0.8 means the decimal 4/5 and
    threshold comparisons stay knife-edge safe.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Universe:
    """Ordered finite collection of distinct opaque identifiers."""

    elements: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("universe identifiers must be pairwise distinct")

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: str) -> bool:
        return element in self._pos

    def index(self, element: str) -> int:
        try:
            return self._pos[element]
        except KeyError:
            raise KeyError(f"element {element!r} not in universe") from None

    def subset(self, elements: Iterable[str]) -> Subset:
        return Subset(self, frozenset(self.index(e) for e in elements))

    def subset_of_indices(self, indices: Iterable[int]) -> Subset:
        return Subset(self, frozenset(indices))

    def empty(self) -> Subset:
        return Subset(self, frozenset())

    def full(self) -> Subset:
        return Subset(self, frozenset(range(self.size)))


@dataclass(frozen=True)
class Subset:
    """Dense membership index set over a fixed universe."""

    universe: Universe
    indices: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        if any(not (0 <= i < self.universe.size) for i in self.indices):
            raise ValueError("subset index out of range")

    def ids(self) -> tuple[str, ...]:
        """Member identifiers in universe order (the deterministic report order)."""
        return tuple(self.universe.elements[i] for i in sorted(self.indices))

    def contains(self, element: str) -> bool:
        return self.universe.index(element) in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.ids())

    def _check(self, other: Subset) -> None:
        if self.universe != other.universe:
            raise ValueError("subsets live on different universes")

    def union(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.indices | other.indices)

    def intersection(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.indices & other.indices)

    def difference(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.indices - other.indices)

    def complement(self) -> Subset:
        return Subset(self.universe, frozenset(range(self.universe.size)) - self.indices)

    def issubset(self, other: Subset) -> bool:
        self._check(other)
        return self.indices <= other.indices

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def __le__(self, other: Subset) -> bool:
        return self.issubset(other)


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    symmetric: bool
    transitive: bool
    up_directed: bool


@dataclass(frozen=True)
class BinaryRel:
    """Boolean adjacency over ordered pairs of one universe."""

    universe: Universe
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset((int(a), int(b)) for a, b in self.pairs))
        n = self.universe.size
        if any(not (0 <= a < n and 0 <= b < n) for a, b in self.pairs):
            raise ValueError("relation pair out of range")

    @classmethod
    def from_id_pairs(cls, universe: Universe, id_pairs: Iterable[tuple[str, str]]) -> BinaryRel:
        return cls(universe, frozenset((universe.index(a), universe.index(b)) for a, b in id_pairs))

    @classmethod
    def from_predicate(cls, universe: Universe, pred) -> BinaryRel:
        n = universe.size
        es = universe.elements
        return cls(universe, frozenset((i, j) for i in range(n) for j in range(n) if pred(es[i], es[j])))

    def holds(self, a: str, b: str) -> bool:
        return (self.universe.index(a), self.universe.index(b)) in self.pairs

    @cached_property
    def _succ(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.universe.size)]
        for a, b in self.pairs:
            out[a].add(b)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def _pred(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.universe.size)]
        for a, b in self.pairs:
            out[b].add(a)
        return tuple(frozenset(s) for s in out)

    def successors(self, i: int) -> frozenset[int]:
        return self._succ[i]

    def predecessors(self, i: int) -> frozenset[int]:
        return self._pred[i]

    @cached_property
    def reflexive(self) -> bool:
        return all((i, i) in self.pairs for i in range(self.universe.size))

    @cached_property
    def symmetric(self) -> bool:
        return all((b, a) in self.pairs for a, b in self.pairs)

    @cached_property
    def transitive(self) -> bool:
        succ = self._succ
        return all(succ[b] <= succ[a] for a in range(self.universe.size) for b in succ[a])

    @cached_property
    def up_directed(self) -> bool:
        # forall a,b exists c: aRc and bRc
        n = self.universe.size
        succ = self._succ
        return all(succ[a] & succ[b] for a in range(n) for b in range(n))

    def is_equivalence(self) -> bool:
        return self.reflexive and self.symmetric and self.transitive

    def to_partition(self) -> Partition:
        if not self.is_equivalence():
            raise ValueError("relation is not an equivalence")
        seen: set[int] = set()
        blocks = []
        for i in range(self.universe.size):
            if i not in seen:
                cls = self._succ[i] | {i}
                seen |= cls
                blocks.append(cls)
        return Partition(self.universe, tuple(frozenset(b) for b in blocks))


def relation_properties(rel: BinaryRel) -> RelationProperties:
    """Exhaustive quantifier checks for the four cached flags."""
    return RelationProperties(rel.reflexive, rel.symmetric, rel.transitive, rel.up_directed)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering the universe."""

    universe: Universe
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in self.blocks))
        covered: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("partition block is empty")
            if covered & b:
                raise ValueError("partition blocks overlap")
            covered |= b
        if covered != set(range(self.universe.size)):
            raise ValueError("partition blocks do not cover the universe")

    @cached_property
    def block_index(self) -> tuple[int, ...]:
        idx = [0] * self.universe.size
        for k, b in enumerate(self.blocks):
            for i in b:
                idx[i] = k
        return tuple(idx)

    def block_of(self, i: int) -> frozenset[int]:
        return self.blocks[self.block_index[i]]

    def block_of_id(self, element: str) -> Subset:
        return Subset(self.universe, self.block_of(self.universe.index(element)))

    def block_ids(self) -> tuple[tuple[str, ...], ...]:
        return tuple(Subset(self.universe, b).ids() for b in self.blocks)

    @classmethod
    def from_blocks(cls, universe: Universe, groups: Iterable[Iterable[str]]) -> Partition:
        return cls(universe, tuple(frozenset(universe.index(e) for e in g) for g in groups))

    @classmethod
    def from_labels(cls, universe: Universe, labels: Mapping[str, object] | Sequence[object]) -> Partition:
        if isinstance(labels, Mapping):
            seq = [labels[e] for e in universe.elements]
        else:
            seq = list(labels)
            if len(seq) != universe.size:
                raise ValueError("one label per element required")
        groups: dict[object, set[int]] = {}
        for i, lab in enumerate(seq):
            groups.setdefault(lab, set()).add(i)
        return cls(universe, tuple(frozenset(g) for g in groups.values()))

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        return cls(universe, tuple(frozenset({i}) for i in range(universe.size)))

    def to_relation(self) -> BinaryRel:
        pairs = {(i, j) for b in self.blocks for i in b for j in b}
        return BinaryRel(self.universe, frozenset(pairs))

    def meet(self, other: Partition) -> Partition:
        """Common refinement: blocks are nonempty pairwise intersections."""
        if self.universe != other.universe:
            raise ValueError("partitions live on different universes")
        blocks = [b & c for b in self.blocks for c in other.blocks if b & c]
        return Partition(self.universe, tuple(blocks))

    def lower_indices(self, target: frozenset[int]) -> frozenset[int]:
        return frozenset(i for i in range(self.universe.size) if self.block_of(i) <= target)

    def upper_indices(self, target: frozenset[int]) -> frozenset[int]:
        return frozenset(i for i in range(self.universe.size) if self.block_of(i) & target)


def partition_refines(p: Partition, q: Partition) -> bool:
    """True iff every block of p is contained in some block of q."""
    if p.universe != q.universe:
        raise ValueError("partitions live on different universes")
    return all(any(b <= c for c in q.blocks) for b in p.blocks)


def _parse_cell(text: str) -> "str | int | Fraction":
    stripped = text.strip()
    if _NUMERIC_RE.fullmatch(stripped):
        try:
            return int(stripped)
        except ValueError:
            return Fraction(stripped)
    return stripped


@dataclass(frozen=True)
class InformationTable:
    """Rows of categorical or numeric attribute values over a finite universe."""

    universe: Universe
    attributes: tuple[str, ...]
    cells: tuple[tuple["str | int | Fraction", ...], ...]  # cells[attr_pos][row]
    decision: str | None = None

    def __post_init__(self):
        if len(set(self.attributes)) != len(self.attributes):
            raise ValueError("duplicate attribute name")
        if len(self.cells) != len(self.attributes):
            raise ValueError("one column per attribute required")
        for col in self.cells:
            if len(col) != self.universe.size:
                raise ValueError("one value per (element, attribute) required")
        if self.decision is not None and self.decision not in self.attributes:
            raise ValueError(f"decision attribute {self.decision!r} is not a listed attribute")

    @cached_property
    def _attr_pos(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.attributes)}

    def value(self, element: str, attribute: str) -> "str | int | Fraction":
        return self.cells[self._attr_pos[attribute]][self.universe.index(element)]

    def column(self, attribute: str) -> tuple:
        try:
            return self.cells[self._attr_pos[attribute]]
        except KeyError:
            raise KeyError(f"unknown attribute {attribute!r}") from None

    @property
    def condition_attributes(self) -> tuple[str, ...]:
        return tuple(a for a in self.attributes if a != self.decision)

    def decision_concept(self, value) -> Subset:
        if self.decision is None:
            raise ValueError("table has no decision attribute")
        col = self.column(self.decision)
        want = _parse_cell(value) if isinstance(value, str) else value
        return Subset(self.universe, frozenset(i for i, v in enumerate(col) if v == want))

    @classmethod
    def from_rows(
        cls,
        attributes: Sequence[str],
        rows: Mapping[str, Sequence] | Sequence[tuple],
        decision: str | None = None,
    ) -> InformationTable:
        """rows: mapping element -> values, or sequence of (element, *values)."""
        if isinstance(rows, Mapping):
            items = list(rows.items())
        else:
            items = [(r[0], tuple(r[1:])) for r in rows]
        universe = Universe(tuple(e for e, _ in items))
        cols: list[list] = [[] for _ in attributes]
        for _, values in items:
            if len(values) != len(attributes):
                raise ValueError("row width does not match attribute count")
            for k, v in enumerate(values):
                cols[k].append(_parse_cell(v) if isinstance(v, str) else v)
        return cls(universe, tuple(attributes), tuple(tuple(c) for c in cols), decision)

    @classmethod
    def from_csv_text(cls, text: str, decision: str | None = None) -> InformationTable:
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("CSV parse error at line 1: missing header row") from None
        attributes = tuple(h.strip() for h in header[1:])
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise ValueError(f"CSV parse error at line {lineno}: expected {len(header)} fields, got {len(row)}")
            rows.append((row[0].strip(), *row[1:]))
        return cls.from_rows(attributes, rows, decision)

    @classmethod
    def from_csv(cls, path, decision: str | None = None) -> InformationTable:
        with open(path, encoding="utf-8") as fh:
            return cls.from_csv_text(fh.read(), decision)


def indiscernibility(table: InformationTable, attrs: Iterable[str]) -> Partition:
    """Partition where elements share a block iff they agree on every attribute.

    An empty attribute set yields the single-block partition (vacuous agreement).
    """
    names = tuple(attrs)
    for a in names:
        if a not in table.attributes:
            raise KeyError(f"unknown attribute {a!r}")
    if table.universe.size == 0:
        return Partition(table.universe, ())
    if not names:
        return Partition(table.universe, (frozenset(range(table.universe.size)),))
    cols = [table.column(a) for a in names]
    signature = [tuple(col[i] for col in cols) for i in range(table.universe.size)]
    return Partition.from_labels(table.universe, signature)
