"""Rough-set interplay with other finite structures: topologies, graphs,
magmas/groups, matroids, simplicial complexes, functor data, and constant
sheaves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from roughkit.approx import ApproximationPair, pawlak_pair, pointwise_approx
from roughkit.foundation import GuardError, Partition, Subset, Universe
from roughkit.granulation import NeighborhoodOperator
from roughkit.hyper import ParamFamily, soft_rough

MATROID_GUARD = 16


# ---------------------------------------------------------------------------
# finite topologies


@dataclass(frozen=True)
class FiniteTopology:
    """Ground set plus an open-set family closed under binary union/intersection."""

    ground: Universe
    opens: frozenset[frozenset[int]]

    def __post_init__(self):
        opens = frozenset(frozenset(o) for o in self.opens)
        object.__setattr__(self, "opens", opens)
        full = frozenset(range(self.ground.size))
        if frozenset() not in opens or full not in opens:
            raise ValueError("a topology contains the empty set and the ground set")
        for a, b in itertools.combinations(opens, 2):
            if a | b not in opens or a & b not in opens:
                raise ValueError("open sets must be closed under binary union and intersection")

    @classmethod
    def from_id_sets(cls, ground: Universe, opens: Sequence[Sequence[str]]) -> FiniteTopology:
        fam = {frozenset(), frozenset(range(ground.size))}
        fam.update(frozenset(ground.index(e) for e in o) for o in opens)
        return cls(ground, frozenset(fam))

    def is_open(self, subset: Subset) -> bool:
        return subset.indices in self.opens

    def interior(self, subset: Subset) -> Subset:
        inside = [o for o in self.opens if o <= subset.indices]
        return Subset(self.ground, frozenset().union(*inside) if inside else frozenset())

    def closure(self, subset: Subset) -> Subset:
        return self.interior(subset.complement()).complement()


def topological_approx(top: FiniteTopology, y_target: Subset) -> ApproximationPair:
    """(interior, closure) as the lower/upper pair."""
    if y_target.universe != top.ground:
        raise ValueError("target universe does not match the topology ground set")
    return ApproximationPair(top.interior(y_target), top.closure(y_target), "topological")


@dataclass(frozen=True)
class RoughTopology:
    """Open sets are exactly the unions of partition blocks."""

    partition: Partition

    def is_open(self, subset: Subset) -> bool:
        return all(self.partition.block_of(i) <= subset.indices for i in subset.indices)

    def interior(self, subset: Subset) -> Subset:
        return Subset(self.partition.universe, self.partition.lower_indices(subset.indices))

    def closure(self, subset: Subset) -> Subset:
        return Subset(self.partition.universe, self.partition.upper_indices(subset.indices))

    def to_topology(self) -> FiniteTopology:
        blocks = self.partition.blocks
        fam = set()
        for r in range(len(blocks) + 1):
            for combo in itertools.combinations(blocks, r):
                fam.add(frozenset().union(*combo) if combo else frozenset())
        return FiniteTopology(self.partition.universe, frozenset(fam))


def rough_topology(partition: Partition) -> RoughTopology:
    return RoughTopology(partition)


# ---------------------------------------------------------------------------
# graphs


def _edge_name(u: str, v: str) -> str:
    return "-".join(sorted((u, v)))


@dataclass(frozen=True)
class GraphData:
    """Undirected graph with optional edge partition and vertex/edge families."""

    vertices: Universe
    edges: tuple[frozenset[str], ...]
    edge_partition: Partition | None = None
    vertex_family: ParamFamily | None = None
    edge_family: ParamFamily | None = None

    def __post_init__(self):
        fixed = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", fixed)
        names = set()
        for e in fixed:
            if len(e) != 2 or any(v not in self.vertices for v in e):
                raise ValueError("edges must join two distinct declared vertices")
            names.add(self.edge_name(e))
        if len(names) != len(fixed):
            raise ValueError("duplicate edge")

    @staticmethod
    def edge_name(edge: frozenset[str]) -> str:
        u, v = sorted(edge)
        return f"{u}-{v}"

    @cached_property
    def edge_universe(self) -> Universe:
        return Universe(tuple(self.edge_name(e) for e in self.edges))

    def induced_edges(self, vertex_subset: Subset) -> frozenset[str]:
        names = set(vertex_subset.ids())
        return frozenset(self.edge_name(e) for e in self.edges if e <= names)


def rough_graph(g: GraphData, x_edges: Subset) -> ApproximationPair:
    """Pawlak pair of an edge set under the declared edge partition."""
    if g.edge_partition is None:
        raise ValueError("graph has no edge partition")
    if x_edges.universe != g.edge_universe:
        raise ValueError("edge target must live on the graph's edge universe")
    pair = pawlak_pair(g.edge_partition, x_edges)
    return ApproximationPair(pair.lower, pair.upper, "rough_graph")


@dataclass(frozen=True)
class SoftRoughSubgraphs:
    lower_vertices: Subset
    lower_edges: frozenset[str]
    upper_vertices: Subset
    upper_edges: frozenset[str]


def soft_rough_graph(g: GraphData, x_vertices: Subset, y_edges: Subset | None = None) -> SoftRoughSubgraphs:
    """Union-form soft approximations on vertices and edges, intersected with
    the induced edge sets.  Defaults the edge target to the edges induced by X.
    """
    if g.vertex_family is None or g.edge_family is None:
        raise ValueError("graph is missing its vertex or edge soft family")
    if x_vertices.universe != g.vertices:
        raise ValueError("vertex target must live on the graph's vertex universe")
    if y_edges is None:
        y_edges = Subset(g.edge_universe, frozenset(g.edge_universe.index(n) for n in g.induced_edges(x_vertices)))
    v_pair = soft_rough(g.vertex_family, x_vertices)
    e_pair = soft_rough(g.edge_family, y_edges)
    lower_e = frozenset(e_pair.lower.ids()) & g.induced_edges(v_pair.lower)
    upper_e = frozenset(e_pair.upper.ids()) & g.induced_edges(v_pair.upper)
    return SoftRoughSubgraphs(v_pair.lower, lower_e, v_pair.upper, upper_e)


# ---------------------------------------------------------------------------
# magmas and rough groups


@dataclass(frozen=True)
class MagmaTable:
    """Total binary operation on a finite carrier (row-major table)."""

    carrier: Universe
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.carrier.size
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("operation table must be square over the carrier")
        if any(not (0 <= v < n) for r in self.table for v in r):
            raise ValueError("operation table is not closed in the carrier")

    @classmethod
    def from_id_table(cls, carrier: Universe, rows: Mapping[str, Mapping[str, str]]) -> MagmaTable:
        n = carrier.size
        table = tuple(
            tuple(carrier.index(rows[carrier.elements[i]][carrier.elements[j]]) for j in range(n)) for i in range(n)
        )
        return cls(carrier, table)

    @classmethod
    def cyclic(cls, n: int) -> MagmaTable:
        carrier = Universe(tuple(str(i) for i in range(n)))
        return cls(carrier, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]


@dataclass(frozen=True)
class RoughGroupReport:
    upper: Subset
    closure_in_upper: bool
    associative_on_upper: bool
    identity: str | None
    inverses: dict[str, str | None]
    is_rough_group: bool


def rough_group_check(m: MagmaTable, rel: Partition, g: Subset) -> RoughGroupReport:
    """Exhaustively check the four rough-group axioms over the upper approximation."""
    if rel.universe != m.carrier or g.universe != m.carrier:
        raise ValueError("relation and subset must live on the magma carrier")
    if len(g) == 0:
        raise ValueError("rough group candidate must be nonempty")
    upper_idx = rel.upper_indices(g.indices)
    upper = Subset(m.carrier, upper_idx)
    g_idx = sorted(g.indices)
    closure = all(m.op(x, y) in upper_idx for x in g_idx for y in g_idx)
    up = sorted(upper_idx)
    associative = all(m.op(m.op(a, b), c) == m.op(a, m.op(b, c)) for a in up for b in up for c in up)

    identity = None
    for e in up:  # first witness in carrier order
        if all(m.op(x, e) == x and m.op(e, x) == x for x in g_idx):
            identity = e
            break
    inverses: dict[str, str | None] = {}
    inverses_ok = identity is not None
    for x in g_idx:
        witness = None
        if identity is not None:
            for y in up:
                if m.op(x, y) == identity and m.op(y, x) == identity:
                    witness = y
                    break
        inverses[m.carrier.elements[x]] = None if witness is None else m.carrier.elements[witness]
        if witness is None:
            inverses_ok = False
    return RoughGroupReport(
        upper,
        closure,
        associative,
        None if identity is None else m.carrier.elements[identity],
        inverses,
        closure and associative and identity is not None and inverses_ok,
    )


def rough_subgroup_check(m: MagmaTable, rel: Partition, g: Subset, h: Subset) -> RoughGroupReport:
    """h is a rough subgroup of g iff h is nonempty, h <= g, and h is itself a
    rough group in the same approximation space."""
    if not h.issubset(g):
        raise ValueError("candidate subgroup must be contained in the rough group")
    return rough_group_check(m, rel, h)


# ---------------------------------------------------------------------------
# rough matroids


@dataclass(frozen=True)
class RoughMatroid:
    """Independence: the Pawlak lower approximation stays inside the parameter set."""

    partition: Partition
    x_param: Subset

    def __post_init__(self):
        if self.x_param.universe != self.partition.universe:
            raise ValueError("parameter set universe does not match the partition universe")

    def is_independent(self, candidate: Subset) -> bool:
        return self.partition.lower_indices(candidate.indices) <= self.x_param.indices

    def _all_subsets(self):
        n = self.partition.universe.size
        if n > MATROID_GUARD:
            raise GuardError(f"exhaustive matroid checks are guarded to |U| <= {MATROID_GUARD}")
        items = list(range(n))
        for r in range(n + 1):
            for combo in itertools.combinations(items, r):
                yield frozenset(combo)

    def circuits(self) -> tuple[Subset, ...]:
        """Minimal dependent sets, by exhaustive enumeration."""
        dependent = [s for s in self._all_subsets() if not self.partition.lower_indices(s) <= self.x_param.indices]
        minimal = [s for s in dependent if not any(t < s for t in dependent)]
        u = self.partition.universe
        return tuple(Subset(u, s) for s in sorted(minimal, key=sorted))

    def independence_system_check(self) -> bool:
        """Downward closure: removing any element preserves independence."""
        for s in self._all_subsets():
            if self.partition.lower_indices(s) <= self.x_param.indices:
                for e in s:
                    if not self.partition.lower_indices(s - {e}) <= self.x_param.indices:
                        return False
        return True

    def exchange_check(self) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
        """Augmentation-axiom counterexamples (informational; empty means it held)."""
        independent = [s for s in self._all_subsets() if self.partition.lower_indices(s) <= self.x_param.indices]
        by_size: dict[int, list[frozenset[int]]] = {}
        for s in independent:
            by_size.setdefault(len(s), []).append(s)
        failures = []
        u = self.partition.universe
        for small in independent:
            for size in range(len(small) + 1, max(by_size, default=0) + 1):
                for big in by_size.get(size, ()):
                    if not any(
                        self.partition.lower_indices(small | {e}) <= self.x_param.indices for e in big - small
                    ):
                        failures.append((Subset(u, small).ids(), Subset(u, big).ids()))
        return failures


def rough_matroid(partition: Partition, x_param: Subset) -> RoughMatroid:
    return RoughMatroid(partition, x_param)


# ---------------------------------------------------------------------------
# simplicial complexes


@dataclass(frozen=True)
class ComplexData:
    """Vertex set plus facets (maximal simplices, none containing another)."""

    vertices: Universe
    facets: tuple[frozenset[str], ...]

    def __post_init__(self):
        fixed = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", fixed)
        for f in fixed:
            if not f or any(v not in self.vertices for v in f):
                raise ValueError("facets must be nonempty sets of declared vertices")
        if len(set(fixed)) != len(fixed):
            raise ValueError("duplicate facet")
        for a, b in itertools.permutations(fixed, 2):
            if a < b:
                raise ValueError("no facet may contain another")

    def signature(self, vertex: str) -> frozenset[int]:
        return frozenset(k for k, f in enumerate(self.facets) if vertex in f)

    def signature_partition(self) -> Partition:
        return Partition.from_labels(self.vertices, [self.signature(v) for v in self.vertices.elements])


def simplicial_rough(complex_data: ComplexData, x_vertices: Subset) -> ApproximationPair:
    """Pawlak pair under equality of facet-incidence signatures."""
    if x_vertices.universe != complex_data.vertices:
        raise ValueError("target universe does not match the complex vertex set")
    pair = pawlak_pair(complex_data.signature_partition(), x_vertices)
    return ApproximationPair(pair.lower, pair.upper, "simplicial")


# ---------------------------------------------------------------------------
# functorial data


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class CategoryData:
    """Finite category with set fibers, transports, per-object relations, and targets."""

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    identities: dict[str, str]
    composition: dict[tuple[str, str], str]  # (f, g) -> g after f
    fibers: dict[str, Universe]
    transports: dict[str, dict[str, str]]
    relations: dict[str, Partition]
    targets: dict[str, Subset]

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def validate(self) -> None:
        by_name = {a.name: a for a in self.arrows}
        if len(by_name) != len(self.arrows):
            raise ValueError("duplicate arrow name")
        for obj in self.objects:
            ident = self.identities.get(obj)
            if ident is None or by_name[ident].source != obj or by_name[ident].target != obj:
                raise ValueError(f"object {obj!r} lacks a proper identity arrow")
        for f in self.arrows:
            for g in self.arrows:
                if f.target == g.source:
                    h = self.composition.get((f.name, g.name))
                    if h is None:
                        raise ValueError(f"missing composite for ({f.name}, {g.name})")
                    if by_name[h].source != f.source or by_name[h].target != g.target:
                        raise ValueError(f"composite of ({f.name}, {g.name}) has wrong endpoints")
        for f in self.arrows:
            if self.composition[(self.identities[f.source], f.name)] != f.name:
                raise ValueError(f"left identity law fails at arrow {f.name!r}")
            if self.composition[(f.name, self.identities[f.target])] != f.name:
                raise ValueError(f"right identity law fails at arrow {f.name!r}")
        for f in self.arrows:
            for g in self.arrows:
                for h in self.arrows:
                    if f.target == g.source and g.target == h.source:
                        left = self.composition[(self.composition[(f.name, g.name)], h.name)]
                        right = self.composition[(f.name, self.composition[(g.name, h.name)])]
                        if left != right:
                            raise ValueError(f"associativity fails at ({f.name}, {g.name}, {h.name})")
        # transports must be functorial
        for obj in self.objects:
            fiber = self.fibers[obj]
            ident_map = self.transports[self.identities[obj]]
            if any(ident_map[e] != e for e in fiber.elements):
                raise ValueError(f"identity transport at {obj!r} is not the identity map")
        for f in self.arrows:
            src, tgt = self.fibers[f.source], self.fibers[f.target]
            mapping = self.transports[f.name]
            for e in src.elements:
                if mapping[e] not in tgt:
                    raise ValueError(f"transport along {f.name!r} leaves the target fiber")
        for f in self.arrows:
            for g in self.arrows:
                if f.target == g.source:
                    h = self.composition[(f.name, g.name)]
                    for e in self.fibers[f.source].elements:
                        if self.transports[g.name][self.transports[f.name][e]] != self.transports[h][e]:
                            raise ValueError(f"transport does not respect composition at ({f.name}, {g.name})")

    def relation_compatible(self) -> bool:
        for f in self.arrows:
            r_src = self.relations[f.source]
            r_tgt = self.relations[f.target]
            mapping = self.transports[f.name]
            fiber = self.fibers[f.source]
            tgt_fiber = self.fibers[f.target]
            for i in range(fiber.size):
                for j in self.relations[f.source].block_of(i):
                    a = tgt_fiber.index(mapping[fiber.elements[i]])
                    b = tgt_fiber.index(mapping[fiber.elements[j]])
                    if r_tgt.block_index[a] != r_tgt.block_index[b]:
                        return False
        return True


@dataclass(frozen=True)
class FunctorialResult:
    pairs: dict[str, ApproximationPair]
    functor_laws_ok: bool
    relation_compatible: bool


def functorial_rough(cat: CategoryData) -> FunctorialResult:
    """Objectwise Pawlak pairs plus category-law and compatibility reports."""
    cat.validate()
    pairs = {}
    for obj in cat.objects:
        pair = pawlak_pair(cat.relations[obj], cat.targets[obj])
        pairs[obj] = ApproximationPair(pair.lower, pair.upper, "functorial")
    return FunctorialResult(pairs, True, cat.relation_compatible())


# ---------------------------------------------------------------------------
# constant sheaves


@dataclass(frozen=True)
class SheafData:
    """Constant set-valued sheaf with identity restrictions on a finite topology."""

    topology: FiniteTopology
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels) or not self.labels:
            raise ValueError("sheaf labels must be nonempty and distinct")

    @cached_property
    def sections(self) -> tuple[tuple[frozenset[int], str], ...]:
        opens = sorted((o for o in self.topology.opens if o), key=sorted)
        return tuple((o, lab) for o in opens for lab in self.labels)

    @cached_property
    def section_universe(self) -> Universe:
        ground = self.topology.ground
        names = []
        for o, lab in self.sections:
            ids = ",".join(Subset(ground, o).ids())
            names.append(f"({ids})@{lab}")
        return Universe(tuple(names))

    def section_name(self, open_ids: Sequence[str], label: str) -> str:
        ids = ",".join(Subset(self.topology.ground, frozenset(self.topology.ground.index(e) for e in open_ids)).ids())
        return f"({ids})@{label}"

    def related(self, a: tuple[frozenset[int], str], b: tuple[frozenset[int], str]) -> bool:
        """Sections agree on some nonempty open subset of the overlap."""
        if a[1] != b[1]:
            return False
        overlap = a[0] & b[0]
        return any(o and o <= overlap for o in self.topology.opens)

    def tolerance_operator(self) -> NeighborhoodOperator:
        secs = self.sections
        u = self.section_universe
        nbs = tuple(frozenset(j for j in range(len(secs)) if self.related(secs[i], secs[j])) for i in range(len(secs)))
        return NeighborhoodOperator(u, u, nbs, "sheaf_tolerance")


def sheaf_rough_constant(s: SheafData, a_sections: Sequence[tuple[Sequence[str], str]]) -> ApproximationPair:
    """Pointwise tolerance approximations of a set of sections."""
    names = [s.section_name(open_ids, lab) for open_ids, lab in a_sections]
    target = s.section_universe.subset(names)
    pair = pointwise_approx(s.tolerance_operator(), target)
    return ApproximationPair(pair.lower, pair.upper, "sheaf_constant")
