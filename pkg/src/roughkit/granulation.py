"""Granulation carriers: per-element neighborhood operators and block families.

Neighborhood kinds cover every granulation mechanism used downstream:
partition blocks, successor images of an arbitrary relation, directed
granules, metric balls, similarity thresholds, interval overlap, preorder
up/down sets, and descriptive tolerance over probe vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from roughkit.foundation import BinaryRel, GuardError, Partition, Subset, Universe

CLIQUE_GUARD = 2**20


def _as_number(v):
    if isinstance(v, (int, Fraction)):
        return v
    if isinstance(v, float):
        return v
    raise TypeError(f"numeric value required, got {v!r}")


@dataclass(frozen=True)
class MetricSpaceData:
    """Per-element numeric probe vectors with a Minkowski norm exponent p in [1, inf]."""

    universe: Universe
    points: tuple[tuple, ...]
    p: float = 2

    def __post_init__(self):
        if len(self.points) != self.universe.size:
            raise ValueError("one feature vector per element required")
        dims = {len(v) for v in self.points}
        if len(dims) > 1:
            raise ValueError("feature vectors have mismatched dimensions")
        if not (self.p == math.inf or self.p >= 1):
            raise ValueError("norm exponent must satisfy p >= 1")
        object.__setattr__(self, "points", tuple(tuple(_as_number(c) for c in v) for v in self.points))

    @classmethod
    def from_mapping(cls, universe: Universe, vectors: Mapping[str, Sequence], p: float = 2) -> MetricSpaceData:
        return cls(universe, tuple(tuple(vectors[e]) for e in universe.elements), p)

    def within(self, i: int, j: int, bound) -> bool:
        """Exact d(i,j) <= bound for p in {1, 2, inf} on rational coordinates."""
        diffs = [a - b for a, b in zip(self.points[i], self.points[j])]
        exact = all(isinstance(d, (int, Fraction)) for d in diffs) and isinstance(bound, (int, Fraction))
        if self.p == math.inf:
            if exact:
                return all(abs(d) <= bound for d in diffs)
            return max((abs(float(d)) for d in diffs), default=0.0) <= float(bound)
        if self.p == 1:
            total = sum(abs(d) for d in diffs)
            return total <= bound if exact else float(total) <= float(bound)
        if self.p == 2 and exact:
            return sum(d * d for d in diffs) <= bound * bound
        return sum(abs(float(d)) ** self.p for d in diffs) ** (1.0 / self.p) <= float(bound)


@dataclass(frozen=True)
class DistanceMatrix:
    """Precomputed symmetric dissimilarities with zero diagonal."""

    universe: Universe
    values: tuple[tuple, ...]

    def __post_init__(self):
        n = self.universe.size
        vals = tuple(tuple(_as_number(v) for v in row) for row in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != n or any(len(r) != n for r in vals):
            raise ValueError("distance matrix must be square over the universe")
        for i in range(n):
            if vals[i][i] != 0:
                raise ValueError("distance matrix diagonal must be zero")
            for j in range(n):
                if vals[i][j] != vals[j][i]:
                    raise ValueError("distance matrix must be symmetric")

    def within(self, i: int, j: int, bound) -> bool:
        return self.values[i][j] <= bound


@dataclass(frozen=True)
class SimilarityMatrix:
    """Square similarity values in [0,1], symmetric with unit diagonal."""

    universe: Universe
    values: tuple[tuple, ...]

    def __post_init__(self):
        n = self.universe.size
        vals = tuple(tuple(_as_number(v) for v in row) for row in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != n or any(len(r) != n for r in vals):
            raise ValueError("similarity matrix must be square over the universe")
        for i in range(n):
            if vals[i][i] != 1:
                raise ValueError("similarity diagonal must be 1")
            for j in range(n):
                v = vals[i][j]
                if not (0 <= v <= 1):
                    raise ValueError("similarity values must lie in [0,1]")
                if v != vals[j][i]:
                    raise ValueError("similarity matrix must be symmetric")


@dataclass(frozen=True)
class IntervalData:
    """Closed interval [lo, hi] per (element, attribute)."""

    universe: Universe
    attributes: tuple[str, ...]
    intervals: tuple[tuple[tuple, ...], ...]  # intervals[attr_pos][row] = (lo, hi)

    def __post_init__(self):
        if len(self.intervals) != len(self.attributes):
            raise ValueError("one interval column per attribute required")
        cols = []
        for col in self.intervals:
            if len(col) != self.universe.size:
                raise ValueError("one interval per element required")
            fixed = []
            for lo, hi in col:
                lo, hi = _as_number(lo), _as_number(hi)
                if lo > hi:
                    raise ValueError("interval lower endpoint exceeds upper endpoint")
                fixed.append((lo, hi))
            cols.append(tuple(fixed))
        object.__setattr__(self, "intervals", tuple(cols))

    def overlaps(self, i: int, j: int, attr_pos: int) -> bool:
        a, b = self.intervals[attr_pos][i], self.intervals[attr_pos][j]
        return max(a[0], b[0]) <= min(a[1], b[1])


@dataclass(frozen=True)
class NeighborhoodOperator:
    """Per-element neighborhood N(x), possibly into a different codomain universe."""

    universe: Universe
    codomain: Universe
    neighborhoods: tuple[frozenset[int], ...]
    kind: str = "custom"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(self.neighborhoods) != self.universe.size:
            raise ValueError("one neighborhood per element required")
        m = self.codomain.size
        fixed = tuple(frozenset(int(i) for i in nb) for nb in self.neighborhoods)
        if any(not (0 <= i < m) for nb in fixed for i in nb):
            raise ValueError("neighborhood index outside codomain")
        object.__setattr__(self, "neighborhoods", fixed)

    @property
    def reflexive(self) -> bool:
        return self.universe == self.codomain and all(i in self.neighborhoods[i] for i in range(self.universe.size))

    @property
    def symmetric(self) -> bool:
        return self.universe == self.codomain and all(
            i in self.neighborhoods[j] for i in range(self.universe.size) for j in self.neighborhoods[i]
        )

    def neighborhood(self, element: str) -> Subset:
        return Subset(self.codomain, self.neighborhoods[self.universe.index(element)])

    def to_relation(self) -> BinaryRel:
        if self.universe != self.codomain:
            raise ValueError("cross-universe operator has no square relation")
        return BinaryRel(self.universe, frozenset((i, j) for i in range(self.universe.size) for j in self.neighborhoods[i]))


def make_neighborhoods(kind: str, **params) -> NeighborhoodOperator:
    """Construct a neighborhood operator by its kind's literal definition.

    Kinds: from_partition, successor, directed_granule, metric_ball,
    descriptive_tolerance, similarity_threshold, interval_overlap,
    preorder_up, preorder_down.
    """
    if kind == "from_partition":
        part: Partition = params["partition"]
        nbs = tuple(part.block_of(i) for i in range(part.universe.size))
        return NeighborhoodOperator(part.universe, part.universe, nbs, kind, params)

    if kind == "successor":
        if "mapping" in params:
            universe: Universe = params["universe"]
            codomain: Universe = params.get("codomain", universe)
            mapping: Mapping[str, Iterable[str]] = params["mapping"]
            nbs = tuple(frozenset(codomain.index(t) for t in mapping.get(e, ())) for e in universe.elements)
            return NeighborhoodOperator(universe, codomain, nbs, kind, params)
        rel: BinaryRel = params["relation"]
        nbs = tuple(rel.successors(i) for i in range(rel.universe.size))
        return NeighborhoodOperator(rel.universe, rel.universe, nbs, kind, params)

    if kind == "directed_granule":
        rel = params["relation"]
        nbs = tuple(rel.predecessors(i) for i in range(rel.universe.size))
        return NeighborhoodOperator(rel.universe, rel.universe, nbs, kind, params)

    if kind in ("metric_ball", "descriptive_tolerance"):
        data: MetricSpaceData = params["data"]
        bound = params["delta"] if kind == "metric_ball" else params["epsilon"]
        if bound < 0:
            raise ValueError("radius must be nonnegative")
        n = data.universe.size
        nbs = tuple(frozenset(j for j in range(n) if data.within(i, j, bound)) for i in range(n))
        return NeighborhoodOperator(data.universe, data.universe, nbs, kind, params)

    if kind == "similarity_threshold":
        matrix: SimilarityMatrix = params["matrix"]
        tau = params["tau"]
        if not (0 < tau <= 1):
            raise ValueError("threshold tau must lie in (0, 1]")
        n = matrix.universe.size
        nbs = tuple(frozenset(j for j in range(n) if matrix.values[i][j] >= tau) for i in range(n))
        return NeighborhoodOperator(matrix.universe, matrix.universe, nbs, kind, params)

    if kind == "interval_overlap":
        data: IntervalData = params["data"]
        attrs = params.get("attrs")
        positions = range(len(data.attributes)) if attrs is None else [data.attributes.index(a) for a in attrs]
        n = data.universe.size
        nbs = tuple(frozenset(j for j in range(n) if all(data.overlaps(i, j, k) for k in positions)) for i in range(n))
        return NeighborhoodOperator(data.universe, data.universe, nbs, kind, params)

    if kind in ("preorder_up", "preorder_down"):
        rel = params["relation"]
        if not (rel.reflexive and rel.transitive):
            raise ValueError("preorder kinds require a reflexive transitive relation")
        if kind == "preorder_up":
            nbs = tuple(rel.successors(i) for i in range(rel.universe.size))
        else:
            nbs = tuple(rel.predecessors(i) for i in range(rel.universe.size))
        return NeighborhoodOperator(rel.universe, rel.universe, nbs, kind, params)

    raise ValueError(f"unknown neighborhood kind {kind!r}")


@dataclass(frozen=True)
class GranuleFamily:
    """Sequence of nonempty blocks, possibly overlapping."""

    universe: Universe
    blocks: tuple[frozenset[int], ...]
    kind: str = "covering"
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        fixed = tuple(frozenset(int(i) for i in b) for b in self.blocks)
        object.__setattr__(self, "blocks", fixed)
        if any(not b for b in fixed):
            raise ValueError("granule family block is empty")
        n = self.universe.size
        if any(not (0 <= i < n) for b in fixed for i in b):
            raise ValueError("block index out of range")

    @cached_property
    def is_covering(self) -> bool:
        covered: set[int] = set()
        for b in self.blocks:
            covered |= b
        return covered == set(range(self.universe.size))

    @cached_property
    def is_partition(self) -> bool:
        seen: set[int] = set()
        for b in self.blocks:
            if seen & b:
                return False
            seen |= b
        return self.is_covering

    def block_id_lists(self) -> tuple[tuple[str, ...], ...]:
        return tuple(Subset(self.universe, b).ids() for b in self.blocks)


def granule_family(kind: str, **params) -> GranuleFamily:
    """Wrap blocks as a flagged family; strait validates partition-ness."""
    if kind == "partition":
        part: Partition = params["partition"]
        return GranuleFamily(part.universe, part.blocks, kind, params)
    if kind in ("covering", "soft"):
        universe: Universe = params["universe"]
        blocks = tuple(frozenset(universe.index(e) for e in b) for b in params["blocks"])
        return GranuleFamily(universe, blocks, kind, params)
    if kind == "strait":
        universe = params["universe"]
        blocks = tuple(frozenset(universe.index(e) for e in b) for b in params["blocks"])
        fam = GranuleFamily(universe, blocks, kind, params)
        if not fam.is_partition:
            raise ValueError("strait family images must partition the universe")
        return fam
    if kind == "directed":
        rel: BinaryRel = params["relation"]
        op = make_neighborhoods("directed_granule", relation=rel)
        blocks = tuple(nb for nb in op.neighborhoods if nb)
        return GranuleFamily(rel.universe, blocks, kind, params)
    raise ValueError(f"unknown granule family kind {kind!r}")


def maximal_tolerance_classes(op: NeighborhoodOperator) -> GranuleFamily:
    """All inclusion-maximal cliques of the tolerance graph, deterministically ordered.

    Pivoting Bron-Kerbosch over the fixed vertex order; aborts past 2^20 cliques
    since the construction is only meant for desk-scale instances.
    """
    if op.universe != op.codomain:
        raise ValueError("tolerance classes need a square relation")
    if not op.reflexive or not op.symmetric:
        raise ValueError("tolerance classes require a reflexive symmetric relation")
    n = op.universe.size
    adj = [set(op.neighborhoods[i]) - {i} for i in range(n)]
    cliques: list[frozenset[int]] = []

    def expand(clique: set[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            if len(cliques) >= CLIQUE_GUARD:
                raise GuardError("tolerance graph exceeds the clique enumeration guard")
            cliques.append(frozenset(clique))
            return
        pivot = min(candidates | excluded, key=lambda v: (-len(adj[v]), v))
        for v in sorted(candidates - adj[pivot]):
            expand(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    expand(set(), set(range(n)), set())
    cliques.sort(key=lambda c: tuple(sorted(c)))
    return GranuleFamily(op.universe, tuple(cliques), "tolerance_classes", {"source": op.kind})
