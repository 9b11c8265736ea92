"""Families of approximations indexed by relation, time, tree node, attribute
subgraph, scale, or meta-level.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Mapping, Sequence

from roughkit.approx import ApproximationPair, pawlak_pair, pointwise_approx
from roughkit.foundation import GuardError, Partition, Subset, Universe, partition_refines
from roughkit.granulation import DistanceMatrix, MetricSpaceData, NeighborhoodOperator

ITERATED_DEPTH_GUARD = 3
META_UNIVERSE_GUARD = 12


@dataclass(frozen=True)
class IndexedRelations:
    """Ordered association key -> Partition, all over one universe."""

    entries: tuple[tuple[str, Partition], ...]

    def __post_init__(self):
        keys = [k for k, _ in self.entries]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate relation key")
        if not self.entries:
            raise ValueError("at least one relation required")
        u = self.entries[0][1].universe
        if any(p.universe != u for _, p in self.entries):
            raise ValueError("relations live on different universes")

    @classmethod
    def from_mapping(cls, relations: Mapping[str, Partition]) -> IndexedRelations:
        return cls(tuple((str(k), p) for k, p in relations.items()))

    @property
    def universe(self) -> Universe:
        return self.entries[0][1].universe

    @property
    def keys(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.entries)

    def partition(self, key: str) -> Partition:
        for k, p in self.entries:
            if k == key:
                return p
        raise KeyError(key)


def multirough(relations: IndexedRelations, targets: "Subset | Mapping[str, Subset]") -> dict[str, ApproximationPair]:
    """Per-key Pawlak pair of the (single or per-key) target."""
    out = {}
    for key, part in relations.entries:
        if isinstance(targets, Subset):
            target = targets
        else:
            if key not in targets:
                raise KeyError(f"no target for relation key {key!r}")
            target = targets[key]
        out[key] = pawlak_pair(part, target)
    if not isinstance(targets, Subset):
        extra = set(targets) - set(relations.keys)
        if extra:
            raise KeyError(f"targets given for unknown keys {sorted(extra)}")
    return out


def mgrs(relations: IndexedRelations, x_target: Subset, mode: str) -> ApproximationPair:
    """Optimistic: exists-inclusion lower, forall-intersection upper.
    Pessimistic: forall-inclusion lower, exists-intersection upper.
    """
    u = relations.universe
    if x_target.universe != u:
        raise ValueError("target universe does not match the relations universe")
    t = x_target.indices
    parts = [p for _, p in relations.entries]
    if mode == "optimistic":
        lower = frozenset(i for i in range(u.size) if any(p.block_of(i) <= t for p in parts))
        upper = frozenset(i for i in range(u.size) if all(p.block_of(i) & t for p in parts))
    elif mode == "pessimistic":
        lower = frozenset(i for i in range(u.size) if all(p.block_of(i) <= t for p in parts))
        upper = frozenset(i for i in range(u.size) if any(p.block_of(i) & t for p in parts))
    else:
        raise ValueError(f"unknown multi-granulation mode {mode!r}")
    return ApproximationPair(Subset(u, lower), Subset(u, upper), f"mgrs:{mode}")


def iterated_multirough(relations: IndexedRelations, x_target: Subset, depth: int):
    """Depth-k recursion: level 0 is the target, level k+1 maps each key to a
    pair of level-k values built from that key's Pawlak lower and upper.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > ITERATED_DEPTH_GUARD:
        raise GuardError(f"iterated depth {depth} exceeds the guard {ITERATED_DEPTH_GUARD}")
    if x_target.universe != relations.universe:
        raise ValueError("target universe does not match the relations universe")
    if depth == 0:
        return x_target
    out = {}
    for key, part in relations.entries:
        pair = pawlak_pair(part, x_target)
        out[key] = (
            iterated_multirough(relations, pair.lower, depth - 1),
            iterated_multirough(relations, pair.upper, depth - 1),
        )
    return out


def in_iterated_type(value, relations: IndexedRelations, depth: int) -> bool:
    """Structural membership check for the depth-k iterated value space."""
    if depth == 0:
        return isinstance(value, Subset) and value.universe == relations.universe
    if not isinstance(value, dict) or set(value) != set(relations.keys):
        return False
    return all(
        isinstance(pair, tuple)
        and len(pair) == 2
        and in_iterated_type(pair[0], relations, depth - 1)
        and in_iterated_type(pair[1], relations, depth - 1)
        for pair in value.values()
    )


# ---------------------------------------------------------------------------
# attribute graphs and clusters


@dataclass(frozen=True)
class AttributeGraph:
    """Attribute vertices carrying partitions, plus undirected edges."""

    vertices: tuple[str, ...]
    relations: tuple[Partition, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        if len(self.vertices) != len(self.relations):
            raise ValueError("one partition per attribute vertex required")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate attribute vertex")
        u = self.relations[0].universe if self.relations else None
        if any(p.universe != u for p in self.relations):
            raise ValueError("vertex partitions live on different universes")
        fixed = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", fixed)
        for e in fixed:
            if len(e) != 2 or not e <= set(self.vertices):
                raise ValueError("edges must join two distinct declared vertices")

    def relation_of(self, vertex: str) -> Partition:
        return self.relations[self.vertices.index(vertex)]

    def validate_subgraph(self, vertex_subset: Sequence[str], edge_subset: Sequence = ()) -> None:
        vs = set(vertex_subset)
        if not vs <= set(self.vertices):
            raise ValueError("subgraph vertices must be declared attribute vertices")
        for e in edge_subset:
            fe = frozenset(e)
            if fe not in self.edges or not fe <= vs:
                raise ValueError("subgraph edge outside the induced edge set")


def graphic_rough(
    graph: AttributeGraph,
    subgraphs: Sequence[Sequence[str]],
    x_target: Subset,
) -> dict[str, ApproximationPair]:
    """Per subgraph H, the Pawlak pair under the meet of H's vertex partitions."""
    out = {}
    for vertex_subset in subgraphs:
        graph.validate_subgraph(vertex_subset)
        if not vertex_subset:
            raise ValueError("subgraph must have at least one vertex")
        combined = graph.relation_of(vertex_subset[0])
        for v in vertex_subset[1:]:
            combined = combined.meet(graph.relation_of(v))
        key = "+".join(vertex_subset)
        pair = pawlak_pair(combined, x_target)
        out[key] = ApproximationPair(pair.lower, pair.upper, "graphic")
    return out


# ---------------------------------------------------------------------------
# refinement chains


@dataclass(frozen=True)
class NestingReport:
    lower_nested: bool
    upper_nested: bool

    @property
    def ok(self) -> bool:
        return self.lower_nested and self.upper_nested


def refined_chain(chain: IndexedRelations, x_target: Subset) -> tuple[dict[str, ApproximationPair], NestingReport]:
    """Per-level Pawlak pairs along a finest-to-coarsest chain, plus nesting checks."""
    parts = [p for _, p in chain.entries]
    for finer, coarser in zip(parts, parts[1:]):
        if not partition_refines(finer, coarser):
            raise ValueError("chain is not nested: each level must refine the next")
    pairs = multirough(chain, x_target)
    ordered = [pairs[k] for k in chain.keys]
    lower_ok = all(a.lower.indices >= b.lower.indices for a, b in zip(ordered, ordered[1:]))
    upper_ok = all(a.upper.indices <= b.upper.indices for a, b in zip(ordered, ordered[1:]))
    return pairs, NestingReport(lower_ok, upper_ok)


# ---------------------------------------------------------------------------
# scale families


@dataclass(frozen=True)
class ScaleFamily:
    """Metric or dissimilarity data with an ascending grid of scales."""

    data: "MetricSpaceData | DistanceMatrix"
    grid: tuple

    def __post_init__(self):
        grid = tuple(self.grid)
        object.__setattr__(self, "grid", grid)
        if not grid:
            raise ValueError("scale grid must be nonempty")
        if any(b < a for a, b in zip(grid, grid[1:])):
            raise ValueError("scale grid must be sorted ascending")
        if any(v < 0 for v in grid):
            raise ValueError("scales must be nonnegative")

    @property
    def universe(self) -> Universe:
        return self.data.universe


def persistent(family: ScaleFamily, x_target: Subset) -> dict[str, ApproximationPair]:
    """Pointwise metric-ball pairs per scale; neighborhoods grow with the scale."""
    u = family.universe
    if x_target.universe != u:
        raise ValueError("target universe does not match the scale family universe")
    out = {}
    for eps in family.grid:
        n = u.size
        nbs = tuple(frozenset(j for j in range(n) if family.data.within(i, j, eps)) for i in range(n))
        op = NeighborhoodOperator(u, u, nbs, "scale_ball", {"epsilon": eps})
        pair = pointwise_approx(op, x_target)
        out[str(eps)] = ApproximationPair(pair.lower, pair.upper, "persistent", {"epsilon": eps})
    return out


# ---------------------------------------------------------------------------
# meta-level rough objects


@dataclass(frozen=True)
class RoughObjectSpace:
    """All distinct approximation pairs over subsets of U, with a descriptor
    inducing a meta-indiscernibility.  Guarded to |U| <= 12.
    """

    partition: Partition
    descriptor: Callable[[ApproximationPair], object] = field(default=None, compare=False)

    def __post_init__(self):
        if self.partition.universe.size > META_UNIVERSE_GUARD:
            raise GuardError(f"meta-level enumeration is guarded to |U| <= {META_UNIVERSE_GUARD}")
        if self.descriptor is None:
            object.__setattr__(self, "descriptor", boundary_cardinality)

    @cached_property
    def objects(self) -> tuple[ApproximationPair, ...]:
        u = self.partition.universe
        seen = {}
        for bits in itertools.product((0, 1), repeat=u.size):
            target = Subset(u, frozenset(i for i, b in enumerate(bits) if b))
            pair = pawlak_pair(self.partition, target)
            seen[(pair.lower.indices, pair.upper.indices)] = pair
        ordered = sorted(seen.values(), key=lambda p: (sorted(p.lower.indices), sorted(p.upper.indices)))
        return tuple(ordered)

    @cached_property
    def classes(self) -> dict[object, tuple[ApproximationPair, ...]]:
        groups: dict[object, list[ApproximationPair]] = {}
        for r in self.objects:
            groups.setdefault(self.descriptor(r), []).append(r)
        return {k: tuple(v) for k, v in groups.items()}

    def contains(self, pair: ApproximationPair) -> bool:
        return any(pair.rough_equal(r) for r in self.objects)


def boundary_cardinality(pair: ApproximationPair) -> int:
    return len(pair.upper) - len(pair.lower)


def metarough(
    space: RoughObjectSpace,
    c_family: Sequence[ApproximationPair],
) -> tuple[tuple[ApproximationPair, ...], tuple[ApproximationPair, ...]]:
    """meta_lower = rough objects whose meta-class sits inside C; meta_upper =
    those whose meta-class meets C.
    """
    keys = []
    for pair in c_family:
        if not space.contains(pair):
            raise ValueError("family member is not a rough object of the space")
        keys.append((pair.lower.indices, pair.upper.indices))
    member = set(keys)
    lower: list[ApproximationPair] = []
    upper: list[ApproximationPair] = []
    for cls in space.classes.values():
        inside = [(r.lower.indices, r.upper.indices) in member for r in cls]
        if all(inside):
            lower.extend(cls)
        if any(inside):
            upper.extend(cls)
    order = lambda p: (sorted(p.lower.indices), sorted(p.upper.indices))
    return tuple(sorted(lower, key=order)), tuple(sorted(upper, key=order))
