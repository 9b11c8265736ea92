"""Lattice-valued approximations: the generic bounded-De-Morgan-lattice
framework and its instances, granule-wise meet/join models, residuated
chain operators, vague validation, linguistic rough sets, and triangular
memberships.

Degree arithmetic on the unit interval is binary floating point with a
documented comparison tolerance of 1e-9; piecewise-linear and chain
computations are exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from roughkit.approx import ApproximationPair
from roughkit.foundation import Partition, Subset, Universe, parse_rational

FLOAT_TOL = 1e-9


# ---------------------------------------------------------------------------
# degree domains


class DegreeDomain:
    """Bounded De Morgan lattice: leq/meet/join plus an order-reversing involution."""

    name = "degree"

    def canon(self, value):
        return value

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def meet(self, a, b):
        raise NotImplementedError

    def join(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    @property
    def bottom(self):
        raise NotImplementedError

    @property
    def top(self):
        raise NotImplementedError

    def meet_all(self, values: Sequence):
        out = values[0]
        for v in values[1:]:
            out = self.meet(out, v)
        return out

    def join_all(self, values: Sequence):
        out = values[0]
        for v in values[1:]:
            out = self.join(out, v)
        return out

    def implies(self, a, b):
        """Kleene-Dienes form: N(a) join b."""
        return self.join(self.neg(a), b)


@dataclass(frozen=True)
class UnitInterval(DegreeDomain):
    name = "unit"

    def canon(self, value):
        v = float(value)
        if not (0.0 <= v <= 1.0):
            raise ValueError("unit-interval degrees must lie in [0,1]")
        return v

    def leq(self, a, b):
        return a <= b + FLOAT_TOL

    def meet(self, a, b):
        return min(a, b)

    def join(self, a, b):
        return max(a, b)

    def neg(self, a):
        return 1.0 - a

    @property
    def bottom(self):
        return 0.0

    @property
    def top(self):
        return 1.0


@dataclass(frozen=True)
class BooleanDomain(DegreeDomain):
    name = "bool"

    def canon(self, value):
        if value in (0, 1, False, True):
            return int(value)
        raise ValueError("boolean degrees must be 0 or 1")

    def leq(self, a, b):
        return a <= b

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b

    def neg(self, a):
        return 1 - a

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return 1


@dataclass(frozen=True)
class FiniteChain(DegreeDomain):
    """Totally ordered labels; complement reverses the chain."""

    labels: tuple[str, ...]
    name = "chain"

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels) or not self.labels:
            raise ValueError("chain labels must be nonempty and distinct")

    def _pos(self, a) -> int:
        try:
            return self.labels.index(a)
        except ValueError:
            raise ValueError(f"label {a!r} is not on the chain") from None

    def canon(self, value):
        self._pos(value)
        return value

    def leq(self, a, b):
        return self._pos(a) <= self._pos(b)

    def meet(self, a, b):
        return self.labels[min(self._pos(a), self._pos(b))]

    def join(self, a, b):
        return self.labels[max(self._pos(a), self._pos(b))]

    def neg(self, a):
        return self.labels[len(self.labels) - 1 - self._pos(a)]

    @property
    def bottom(self):
        return self.labels[0]

    @property
    def top(self):
        return self.labels[-1]


@dataclass(frozen=True)
class ProductDomain(DegreeDomain):
    """Componentwise product of degree domains; values are tuples."""

    components: tuple[DegreeDomain, ...]
    name = "product"

    def canon(self, value):
        if len(value) != len(self.components):
            raise ValueError("degree tuple width mismatch")
        return tuple(d.canon(v) for d, v in zip(self.components, value))

    def leq(self, a, b):
        return all(d.leq(x, y) for d, x, y in zip(self.components, a, b))

    def meet(self, a, b):
        return tuple(d.meet(x, y) for d, x, y in zip(self.components, a, b))

    def join(self, a, b):
        return tuple(d.join(x, y) for d, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(d.neg(x) for d, x in zip(self.components, a))

    @property
    def bottom(self):
        return tuple(d.bottom for d in self.components)

    @property
    def top(self):
        return tuple(d.top for d in self.components)


def vector_domain(dim: int) -> ProductDomain:
    return ProductDomain(tuple(UnitInterval() for _ in range(dim)))


def check_de_morgan_laws(domain: DegreeDomain, samples: Sequence) -> bool:
    """Spot-check lattice laws and the De Morgan complement on sample values."""
    vals = [domain.canon(v) for v in samples]
    for a in vals:
        if domain.neg(domain.neg(a)) != a:
            return False
        if not (domain.leq(domain.bottom, a) and domain.leq(a, domain.top)):
            return False
    if domain.neg(domain.bottom) != domain.top:
        return False
    for a, b in itertools.product(vals, repeat=2):
        if domain.meet(a, b) != domain.meet(b, a) or domain.join(a, b) != domain.join(b, a):
            return False
        if domain.meet(a, domain.join(a, b)) != a or domain.join(a, domain.meet(a, b)) != a:
            return False
        if domain.leq(a, b) and not domain.leq(domain.neg(b), domain.neg(a)):
            return False
        if domain.neg(domain.meet(a, b)) != domain.join(domain.neg(a), domain.neg(b)):
            return False
    return True


# ---------------------------------------------------------------------------
# valued carriers


@dataclass(frozen=True)
class ValuedSet:
    universe: Universe
    domain: DegreeDomain
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.universe.size:
            raise ValueError("one degree per element required")
        object.__setattr__(self, "values", tuple(self.domain.canon(v) for v in self.values))

    @classmethod
    def from_mapping(cls, universe: Universe, domain: DegreeDomain, mapping: Mapping[str, object]) -> ValuedSet:
        return cls(universe, domain, tuple(mapping[e] for e in universe.elements))

    def value(self, element: str):
        return self.values[self.universe.index(element)]

    def as_dict(self) -> dict:
        return dict(zip(self.universe.elements, self.values))


@dataclass(frozen=True)
class ValuedRelation:
    universe: Universe
    domain: DegreeDomain
    values: tuple[tuple, ...]

    def __post_init__(self):
        n = self.universe.size
        if len(self.values) != n or any(len(r) != n for r in self.values):
            raise ValueError("relation matrix must be square over the universe")
        object.__setattr__(self, "values", tuple(tuple(self.domain.canon(v) for v in row) for row in self.values))

    def value(self, a: str, b: str):
        return self.values[self.universe.index(a)][self.universe.index(b)]

    @property
    def reflexive_at_top(self) -> bool:
        return all(self.values[i][i] == self.domain.top for i in range(self.universe.size))

    @property
    def symmetric(self) -> bool:
        n = self.universe.size
        return all(self.values[i][j] == self.values[j][i] for i in range(n) for j in range(n))


# ---------------------------------------------------------------------------
# the generic uncertain framework


@dataclass(frozen=True)
class UncertainResult:
    lower: ValuedSet
    upper: ValuedSet
    pos: ValuedSet
    neg: ValuedSet
    bnd: ValuedSet


def uncertain_approx(domain: DegreeDomain, rel: ValuedRelation, a: ValuedSet) -> UncertainResult:
    """lower(x) = meet_y (N(R(x,y)) join A(y)); upper(x) = join_y (R(x,y) meet A(y))."""
    if rel.domain != domain or a.domain != domain:
        raise ValueError("relation and set must carry the same degree domain")
    if rel.universe != a.universe:
        raise ValueError("relation and set live on different universes")
    n = a.universe.size
    lower = tuple(domain.meet_all([domain.implies(rel.values[i][j], a.values[j]) for j in range(n)]) for i in range(n))
    upper = tuple(domain.join_all([domain.meet(rel.values[i][j], a.values[j]) for j in range(n)]) for i in range(n))
    neg = tuple(domain.neg(v) for v in upper)
    bnd = tuple(domain.meet(u, domain.neg(l)) for u, l in zip(upper, lower))
    mk = lambda vals: ValuedSet(a.universe, domain, vals)
    return UncertainResult(mk(lower), mk(upper), mk(lower), mk(neg), mk(bnd))


def boolean_instance(universe: Universe, partition: Partition, target: Subset) -> tuple[ValuedRelation, ValuedSet]:
    """Characteristic relation/set of a crisp instance for the Boolean domain."""
    dom = BooleanDomain()
    n = universe.size
    rel = ValuedRelation(
        universe, dom, tuple(tuple(int(partition.block_index[i] == partition.block_index[j]) for j in range(n)) for i in range(n))
    )
    a = ValuedSet(universe, dom, tuple(int(i in target.indices) for i in range(n)))
    return rel, a


# ---------------------------------------------------------------------------
# fuzzy and intuitionistic fuzzy operators


def _tnorm(name: str) -> Callable[[float, float], float]:
    if name == "min":
        return min
    if name == "product":
        return lambda a, b: a * b
    raise ValueError("t-norm must be 'min' or 'product'")


def _conorm_for(tnorm: str, implicator: str) -> Callable[[float, float], float]:
    if implicator == "kd":
        return max
    if implicator == "from_conorm":
        if tnorm == "min":
            return max
        return lambda a, b: a + b - a * b
    raise ValueError("implicator must be 'kd' or 'from_conorm'")


def fuzzy_rough(
    rel: ValuedRelation,
    a: ValuedSet,
    tnorm: str = "min",
    implicator: str = "kd",
) -> tuple[ValuedSet, ValuedSet]:
    """lower(x) = inf_y S(1-R(x,y), mu(y)); upper(x) = sup_y T(R(x,y), mu(y))."""
    if rel.universe != a.universe:
        raise ValueError("relation and set live on different universes")
    T = _tnorm(tnorm)
    S = _conorm_for(tnorm, implicator)
    n = a.universe.size
    lower = tuple(min(S(1.0 - rel.values[i][j], a.values[j]) for j in range(n)) for i in range(n))
    upper = tuple(max(T(rel.values[i][j], a.values[j]) for j in range(n)) for i in range(n))
    dom = UnitInterval()
    return ValuedSet(a.universe, dom, lower), ValuedSet(a.universe, dom, upper)


@dataclass(frozen=True)
class IfSet:
    """Membership/nonmembership pairs with mu + gamma <= 1."""

    universe: Universe
    mu: tuple[float, ...]
    gamma: tuple[float, ...]

    def __post_init__(self):
        if len(self.mu) != self.universe.size or len(self.gamma) != self.universe.size:
            raise ValueError("one (mu, gamma) pair per element required")
        for m, g in zip(self.mu, self.gamma):
            if not (0 <= m <= 1 and 0 <= g <= 1) or m + g > 1 + FLOAT_TOL:
                raise ValueError("intuitionistic pairs require mu, gamma in [0,1] with mu + gamma <= 1")


@dataclass(frozen=True)
class IfRelation:
    universe: Universe
    mu: tuple[tuple[float, ...], ...]
    gamma: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = self.universe.size
        for grid in (self.mu, self.gamma):
            if len(grid) != n or any(len(r) != n for r in grid):
                raise ValueError("relation grids must be square over the universe")
        for i in range(n):
            for j in range(n):
                m, g = self.mu[i][j], self.gamma[i][j]
                if not (0 <= m <= 1 and 0 <= g <= 1) or m + g > 1 + FLOAT_TOL:
                    raise ValueError("intuitionistic relation requires mu + gamma <= 1")


def if_rough(rel: IfRelation, x: IfSet) -> tuple[IfSet, IfSet]:
    """The four displayed min/max formulas over a finite universe."""
    if rel.universe != x.universe:
        raise ValueError("relation and set live on different universes")
    n = x.universe.size
    lower_mu = tuple(min(max(rel.gamma[i][j], x.mu[j]) for j in range(n)) for i in range(n))
    lower_ga = tuple(max(min(rel.mu[i][j], x.gamma[j]) for j in range(n)) for i in range(n))
    upper_mu = tuple(max(min(rel.mu[i][j], x.mu[j]) for j in range(n)) for i in range(n))
    upper_ga = tuple(min(max(rel.gamma[i][j], x.gamma[j]) for j in range(n)) for i in range(n))
    return IfSet(x.universe, lower_mu, lower_ga), IfSet(x.universe, upper_mu, upper_ga)


# ---------------------------------------------------------------------------
# granule-wise meet/join models


def granulewise_lattice(partition: Partition, a: ValuedSet) -> tuple[ValuedSet, ValuedSet]:
    """lower(x) = meet over block(x); upper(x) = join over block(x)."""
    if a.universe != partition.universe:
        raise ValueError("valued set universe does not match the partition universe")
    dom = a.domain
    lower = []
    upper = []
    for i in range(partition.universe.size):
        block_vals = [a.values[j] for j in sorted(partition.block_of(i))]
        lower.append(dom.meet_all(block_vals))
        upper.append(dom.join_all(block_vals))
    return ValuedSet(a.universe, dom, tuple(lower)), ValuedSet(a.universe, dom, tuple(upper))


@dataclass(frozen=True)
class ModResult:
    lower_score: dict[str, float]
    upper_score: dict[str, float]
    lower_tags: dict[str, frozenset]
    upper_tags: dict[str, frozenset]


def mod_approx(partition: Partition, scores: Mapping[str, float], tags: Mapping[str, Sequence]) -> ModResult:
    """Numeric part by min/max; tag part aggregated by join (union) on BOTH sides."""
    u = partition.universe
    lo_s, up_s, lo_t, up_t = {}, {}, {}, {}
    for i, e in enumerate(u.elements):
        block = [u.elements[j] for j in sorted(partition.block_of(i))]
        vals = [float(scores[b]) for b in block]
        if any(not (0 <= v <= 1) for v in vals):
            raise ValueError("scores must lie in [0,1]")
        joined = frozenset().union(*[frozenset(tags[b]) for b in block])
        lo_s[e], up_s[e] = min(vals), max(vals)
        lo_t[e] = up_t[e] = joined
    return ModResult(lo_s, up_s, lo_t, up_t)


def neutrosophic_approx(
    partition: Partition,
    a: Mapping[str, tuple],
) -> tuple[dict[str, tuple], dict[str, tuple]]:
    """lower = (inf T, inf I, sup F) per block; upper = (sup T, sup I, inf F)."""
    u = partition.universe
    for e in u.elements:
        t, i_, f = a[e]
        if not (0 <= t <= 1 and 0 <= i_ <= 1 and 0 <= f <= 1):
            raise ValueError("neutrosophic components must lie in [0,1]")
    lower, upper = {}, {}
    for i, e in enumerate(u.elements):
        block = [u.elements[j] for j in sorted(partition.block_of(i))]
        ts = [a[b][0] for b in block]
        is_ = [a[b][1] for b in block]
        fs = [a[b][2] for b in block]
        lower[e] = (min(ts), min(is_), max(fs))
        upper[e] = (max(ts), max(is_), min(fs))
    return lower, upper


@dataclass(frozen=True)
class PlithogenicData:
    """Appurtenance vectors per (element, attribute value) plus a symmetric
    contradiction function with zero diagonal."""

    universe: Universe
    values: tuple[str, ...]
    pdf: tuple[tuple[tuple[float, ...], ...], ...]  # pdf[value_pos][row] -> vector
    pcf: tuple[tuple[tuple[float, ...], ...], ...]  # pcf[value_pos][value_pos] -> vector

    def __post_init__(self):
        if len(self.pdf) != len(self.values):
            raise ValueError("one pdf column per attribute value required")
        for col in self.pdf:
            if len(col) != self.universe.size:
                raise ValueError("one appurtenance vector per element required")
            if any(not (0 <= c <= 1) for vec in col for c in vec):
                raise ValueError("appurtenance degrees must lie in [0,1]")
        k = len(self.values)
        if len(self.pcf) != k or any(len(r) != k for r in self.pcf):
            raise ValueError("pcf must be square over the attribute values")
        for i in range(k):
            if any(c != 0 for c in self.pcf[i][i]):
                raise ValueError("pcf diagonal must be zero")
            for j in range(k):
                if self.pcf[i][j] != self.pcf[j][i]:
                    raise ValueError("pcf must be symmetric")
                if any(not (0 <= c <= 1) for c in self.pcf[i][j]):
                    raise ValueError("contradiction degrees must lie in [0,1]")


def plithogenic_approx(partition: Partition, data: PlithogenicData) -> tuple[PlithogenicData, PlithogenicData]:
    """Componentwise meet/join of appurtenance vectors per block; pcf unchanged."""
    if data.universe != partition.universe:
        raise ValueError("data universe does not match the partition universe")
    n = data.universe.size
    lower_cols, upper_cols = [], []
    for col in data.pdf:
        lo, up = [], []
        for i in range(n):
            block_vecs = [col[j] for j in sorted(partition.block_of(i))]
            lo.append(tuple(min(v[k] for v in block_vecs) for k in range(len(block_vecs[0]))))
            up.append(tuple(max(v[k] for v in block_vecs) for k in range(len(block_vecs[0]))))
        lower_cols.append(tuple(lo))
        upper_cols.append(tuple(up))
    lower = PlithogenicData(data.universe, data.values, tuple(lower_cols), data.pcf)
    upper = PlithogenicData(data.universe, data.values, tuple(upper_cols), data.pcf)
    return lower, upper


# ---------------------------------------------------------------------------
# residuated chains


@dataclass(frozen=True)
class ResiduatedChain:
    """Finite chain with Godel product (min) and its residuum."""

    levels: tuple[Fraction, ...]

    def __post_init__(self):
        levels = tuple(parse_rational(v) for v in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels or any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError("chain levels must be strictly ascending and nonempty")

    @property
    def bottom(self) -> Fraction:
        return self.levels[0]

    @property
    def top(self) -> Fraction:
        return self.levels[-1]

    def check(self, value) -> Fraction:
        q = parse_rational(value)
        if q not in self.levels:
            raise ValueError(f"value {q} is not on the chain")
        return q

    def prod(self, a: Fraction, b: Fraction) -> Fraction:
        return min(a, b)

    def residuum(self, a: Fraction, b: Fraction) -> Fraction:
        return self.top if a <= b else b

    def check_laws(self) -> bool:
        """Residuation (a*c <= b iff c <= a=>b) and divisibility (a^b = a*(a=>b))."""
        for a, b in itertools.product(self.levels, repeat=2):
            if self.prod(a, self.residuum(a, b)) != min(a, b):
                return False
            for c in self.levels:
                if (self.prod(a, c) <= b) != (c <= self.residuum(a, b)):
                    return False
        return True


def lvalued_approx(
    chain: ResiduatedChain,
    universe: Universe,
    u_val: Mapping[str, object],
    rel: Mapping[tuple[str, str], object],
    q: Mapping[str, object],
) -> tuple[dict[str, Fraction], dict[str, Fraction]]:
    """Chain-valued lower/upper maps; note the transposed relation arguments.

    lower(x) = meet_y (U(x) * (R(y,x) => Q(y)))
    upper(x) = join_y (R(y,x) * (U(y) => Q(y)))
    """
    u_map = {e: chain.check(u_val[e]) for e in universe.elements}
    q_map = {e: chain.check(q[e]) for e in universe.elements}
    r_map = {}
    for x in universe.elements:
        for y in universe.elements:
            v = chain.check(rel[(x, y)])
            if v > min(u_map[x], u_map[y]):
                raise ValueError("relation degree exceeds the universe degrees")
            r_map[(x, y)] = v
    for e in universe.elements:
        if q_map[e] > u_map[e]:
            raise ValueError("target degrees must stay below the universe degrees")
    lower, upper = {}, {}
    for x in universe.elements:
        lower[x] = min(chain.prod(u_map[x], chain.residuum(r_map[(y, x)], q_map[y])) for y in universe.elements)
        upper[x] = max(chain.prod(r_map[(y, x)], chain.residuum(u_map[y], q_map[y])) for y in universe.elements)
    return lower, upper


# ---------------------------------------------------------------------------
# vague validation


def vague_rough(pair: ApproximationPair, mu: Mapping[str, float], nu: Mapping[str, float]) -> dict[str, tuple[float, float]]:
    """Check the crisp-on-regions constraints and return the interval map [mu, 1-nu]."""
    if not pair.lower.issubset(pair.upper):
        raise ValueError("pair is not a rough approximation (lower exceeds upper)")
    u = pair.universe
    violations = []
    for e in u.elements:
        m, v = float(mu[e]), float(nu[e])
        if not (0 <= m <= 1 and 0 <= v <= 1):
            violations.append(f"{e}: values outside [0,1]")
            continue
        if pair.lower.contains(e):
            if abs(m - 1) > FLOAT_TOL or abs(v) > FLOAT_TOL:
                violations.append(f"{e}: certain region requires [1,1]")
        elif not pair.upper.contains(e):
            if abs(m) > FLOAT_TOL or abs(v - 1) > FLOAT_TOL:
                violations.append(f"{e}: excluded region requires [0,0]")
        else:
            if m + v > 1 + FLOAT_TOL:
                violations.append(f"{e}: boundary requires mu + nu <= 1")
    if violations:
        raise ValueError("vague assignment violates region constraints: " + "; ".join(violations))
    return {e: (float(mu[e]), 1 - float(nu[e])) for e in u.elements}


# ---------------------------------------------------------------------------
# linguistic rough sets


@dataclass(frozen=True)
class LinguisticSpace:
    """Ordered labels, concept label vectors, and a decision label vector."""

    universe: Universe
    labels: tuple[str, ...]
    concepts: tuple[tuple[str, tuple[int, ...]], ...]
    decision: tuple[int, ...]

    def __post_init__(self):
        g = len(self.labels)
        if len(set(self.labels)) != g or g == 0:
            raise ValueError("labels must be nonempty and distinct")
        for name, vec in self.concepts:
            if len(vec) != self.universe.size or any(not (0 <= v < g) for v in vec):
                raise ValueError(f"concept {name!r} has labels outside the chain")
        if len(self.decision) != self.universe.size or any(not (0 <= v < g) for v in self.decision):
            raise ValueError("decision labels outside the chain")

    @classmethod
    def from_names(
        cls,
        universe: Universe,
        labels: Sequence[str],
        concepts: Mapping[str, Mapping[str, str]],
        decision: Mapping[str, str],
    ) -> LinguisticSpace:
        lab = tuple(labels)
        pos = {l: i for i, l in enumerate(lab)}
        concept_rows = tuple(
            (name, tuple(pos[vals[e]] for e in universe.elements)) for name, vals in concepts.items()
        )
        dec = tuple(pos[decision[e]] for e in universe.elements)
        return cls(universe, lab, concept_rows, dec)

    def concept_vector(self, name: str) -> tuple[int, ...]:
        for n, vec in self.concepts:
            if n == name:
                return vec
        raise KeyError(name)

    def aggregate_min(self, names: Sequence[str]) -> tuple[int, ...]:
        vecs = [self.concept_vector(n) for n in names]
        return tuple(min(v[i] for v in vecs) for i in range(self.universe.size))

    def aggregate_max(self, names: Sequence[str]) -> tuple[int, ...]:
        vecs = [self.concept_vector(n) for n in names]
        return tuple(max(v[i] for v in vecs) for i in range(self.universe.size))

    def label_vector(self, vec: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.labels[v] for v in vec)


def support(vec: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(vec) if v > 0)


def inclusion_degree(w: Sequence[int], v: Sequence[int]) -> Fraction:
    """D(W, V): fraction of V's support where V(x) <= W(x); needs |supp(V)| > 0."""
    supp = support(v)
    if not supp:
        raise ValueError("inclusion degree is undefined for a concept with empty support")
    return Fraction(sum(1 for i in supp if v[i] <= w[i]), len(supp))


@dataclass(frozen=True)
class LinguisticResult:
    approximable: bool
    k_l: Fraction | None
    k_u: Fraction | None
    k_star: tuple[str, ...] | None
    l_star: tuple[str, ...] | None
    lower: tuple[str, ...] | None
    upper: tuple[str, ...] | None


def linguistic_rough(space: LinguisticSpace, k) -> LinguisticResult:
    """Brute-force the qualifying concept subsets and pick the minimal-excess pair.

    Ties break lexicographically over the subset bitmask encoding (concept
    declaration order).  Subsets whose aggregate has empty support never qualify.
    """
    k_q = parse_rational(k)
    names = [n for n, _ in space.concepts]
    if not names:
        raise ValueError("concept family must be nonempty")
    y = space.decision

    def degree_or_none(w, v):
        try:
            return inclusion_degree(w, v)
        except ValueError:
            return None

    k_l = degree_or_none(y, space.aggregate_min(names))
    k_u = degree_or_none(space.aggregate_max(names), y)

    subsets = []
    for mask in range(1, 2 ** len(names)):
        chosen = tuple(names[i] for i in range(len(names)) if mask >> i & 1)
        subsets.append((mask, chosen))

    p_family = []
    for mask, chosen in subsets:
        agg = space.aggregate_min(chosen)
        d = degree_or_none(y, agg)
        if d is not None and d >= k_q:
            p_family.append((mask, chosen, agg))
    q_family = []
    for mask, chosen in subsets:
        agg = space.aggregate_max(chosen)
        d = degree_or_none(agg, y)
        if d is not None and d >= k_q:
            q_family.append((mask, chosen, agg))

    if not p_family or not q_family:
        return LinguisticResult(False, k_l, k_u, None, None, None, None)

    best = None
    for (pm, pc, pagg), (qm, qc, qagg) in itertools.product(p_family, q_family):
        excess = len(support(qagg) - support(pagg))
        key = (excess, pm, qm)
        if best is None or key < best[0]:
            best = (key, pc, qc, pagg, qagg)
    _, k_star, l_star, lower_vec, upper_vec = best
    return LinguisticResult(True, k_l, k_u, k_star, l_star, space.label_vector(lower_vec), space.label_vector(upper_vec))


# ---------------------------------------------------------------------------
# piecewise-linear memberships and triangular summaries


@dataclass(frozen=True)
class PiecewiseLinearFn:
    """Breakpoints with strictly increasing abscissas; constant beyond the ends."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    domain: str = "real"

    def __post_init__(self):
        pts = tuple((parse_rational(x), parse_rational(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", pts)
        if not pts:
            raise ValueError("at least one breakpoint required")
        if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("abscissas must be strictly increasing")
        if any(not (0 <= y <= 1) for _, y in pts):
            raise ValueError("ordinates must lie in [0,1]")
        if self.domain == "unit" and any(not (0 <= x <= 1) for x, _ in pts):
            raise ValueError("unit-domain abscissas must lie in [0,1]")

    def value(self, x) -> Fraction:
        xq = parse_rational(x)
        pts = self.breakpoints
        if xq <= pts[0][0]:
            return pts[0][1]
        if xq >= pts[-1][0]:
            return pts[-1][1]
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            if x1 <= xq <= x2:
                return y1 + (y2 - y1) * (xq - x1) / (x2 - x1)
        raise AssertionError("unreachable")


def _combine(f: PiecewiseLinearFn, g: PiecewiseLinearFn, pick) -> PiecewiseLinearFn:
    xs = sorted({x for x, _ in f.breakpoints} | {x for x, _ in g.breakpoints})
    crossings = []
    for x1, x2 in zip(xs, xs[1:]):
        f1, f2 = f.value(x1), f.value(x2)
        g1, g2 = g.value(x1), g.value(x2)
        d1, d2 = f1 - g1, f2 - g2
        if d1 * d2 < 0:  # strict sign change inside the interval
            t = d1 / (d1 - d2)
            crossings.append(x1 + (x2 - x1) * t)
    all_xs = sorted(set(xs) | set(crossings))
    pts = tuple((x, pick(f.value(x), g.value(x))) for x in all_xs)
    domain = f.domain if f.domain == g.domain else "real"
    return PiecewiseLinearFn(pts, domain)


def plf_min(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    """Exact pointwise minimum via merged breakpoints plus crossing points."""
    return _combine(f, g, min)


def plf_max(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    return _combine(f, g, max)


@dataclass(frozen=True)
class FunctionLattice(DegreeDomain):
    """Pointwise lattice of piecewise-linear [0,1]-valued functions."""

    name = "plf"

    def canon(self, value):
        if not isinstance(value, PiecewiseLinearFn):
            raise ValueError("function-lattice degrees must be piecewise-linear functions")
        return value

    def leq(self, a, b):
        xs = {x for x, _ in a.breakpoints} | {x for x, _ in b.breakpoints}
        return all(a.value(x) <= b.value(x) for x in xs)

    def meet(self, a, b):
        return plf_min(a, b)

    def join(self, a, b):
        return plf_max(a, b)

    def neg(self, a):
        return PiecewiseLinearFn(tuple((x, 1 - y) for x, y in a.breakpoints), a.domain)

    @property
    def bottom(self):
        return PiecewiseLinearFn(((Fraction(0), Fraction(0)),))

    @property
    def top(self):
        return PiecewiseLinearFn(((Fraction(0), Fraction(1)),))


def z_domain() -> ProductDomain:
    """Z-numbers: value restriction paired with a reliability restriction."""
    return ProductDomain((FunctionLattice(), FunctionLattice()))


@dataclass(frozen=True)
class TriangularFn:
    """Triangular membership with the usual degenerate-endpoint conventions."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (parse_rational(v) for v in (self.a, self.b, self.c))
        if not (a <= b <= c):
            raise ValueError("triangular parameters must satisfy a <= b <= c")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def mu(self, x) -> Fraction:
        xq = parse_rational(x)
        if xq == self.b:
            return Fraction(1)
        if self.a < self.b and self.a <= xq < self.b:
            return (xq - self.a) / (self.b - self.a)
        if self.b < self.c and self.b < xq <= self.c:
            return (self.c - xq) / (self.c - self.b)
        return Fraction(0)

    @property
    def centroid(self) -> Fraction:
        return (self.a + self.b + self.c) / 3

    def to_piecewise(self) -> PiecewiseLinearFn:
        if not (self.a < self.b < self.c):
            raise ValueError("only nondegenerate triangles convert to breakpoint form")
        return PiecewiseLinearFn(((self.a, Fraction(0)), (self.b, Fraction(1)), (self.c, Fraction(0))))


def triangular(a, b, c) -> TriangularFn:
    return TriangularFn(a, b, c)
