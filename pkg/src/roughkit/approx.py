"""Approximation operators: pointwise, block-family, ratio-thresholded,
two-tier, sequential/transfer compositions, regions, coding, and the weak
rough algebra.

Count ratios are exact rationals throughout; the only floating point in this
module is the entropy term of the entropy-regularized scheme.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from roughkit.foundation import Partition, Subset, Universe, parse_rational
from roughkit.granulation import GranuleFamily, NeighborhoodOperator

ENTROPY_EPS = 1e-12


@dataclass(frozen=True)
class ApproximationPair:
    """A (lower, upper) pair of subsets with provenance metadata.

    lower <= upper is a model-level fact, not a structural one (grade-k pairs
    may violate it), so it is checked by regions(), not here.
    """

    lower: Subset
    upper: Subset
    model: str = field(default="", compare=False)
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.lower.universe != self.upper.universe:
            raise ValueError("lower and upper live on different universes")

    @property
    def universe(self) -> Universe:
        return self.lower.universe

    @property
    def boundary(self) -> Subset:
        return self.upper - self.lower

    def rough_equal(self, other: ApproximationPair) -> bool:
        return self.lower == other.lower and self.upper == other.upper

    def is_definable(self) -> bool:
        return self.lower == self.upper


@dataclass(frozen=True)
class ThreeWayRegions:
    pos: Subset
    bnd: Subset
    neg: Subset

    def __post_init__(self):
        u = self.pos.universe
        if self.bnd.universe != u or self.neg.universe != u:
            raise ValueError("regions live on different universes")
        if (self.pos & self.bnd).indices or (self.pos & self.neg).indices or (self.bnd & self.neg).indices:
            raise ValueError("regions overlap")
        if (self.pos | self.bnd | self.neg) != u.full():
            raise ValueError("regions do not cover the universe")


@dataclass(frozen=True)
class ComplexCode:
    """Per-element value in {0, i, 1+i} stored as (real bit, imaginary bit)."""

    universe: Universe
    bits: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.bits) != self.universe.size:
            raise ValueError("one code per element required")
        if any(r == 1 and im == 0 for r, im in self.bits):
            raise ValueError("real bit set without imaginary bit")

    @classmethod
    def from_pair(cls, pair: ApproximationPair) -> ComplexCode:
        low, up = pair.lower.indices, pair.upper.indices
        return cls(pair.universe, tuple((int(i in low), int(i in up)) for i in range(pair.universe.size)))

    def label(self, element: str) -> str:
        r, im = self.bits[self.universe.index(element)]
        return "1+i" if r else ("i" if im else "0")

    def lower_set(self) -> Subset:
        return Subset(self.universe, frozenset(i for i, (r, _) in enumerate(self.bits) if r))

    def upper_set(self) -> Subset:
        return Subset(self.universe, frozenset(i for i, (_, im) in enumerate(self.bits) if im))


@dataclass(frozen=True)
class RegionReport:
    regions: ThreeWayRegions
    accuracy: Fraction
    definable: bool
    code: ComplexCode


def regions(pair: ApproximationPair) -> RegionReport:
    """POS/BND/NEG, accuracy |lower|/|upper|, definability, and complex coding.

    The empty pair gets accuracy 1 (a definable empty set).
    """
    if not pair.lower.issubset(pair.upper):
        raise ValueError("lower approximation is not contained in upper approximation")
    pos = pair.lower
    bnd = pair.upper - pair.lower
    neg = pair.upper.complement()
    accuracy = Fraction(1) if len(pair.upper) == 0 else Fraction(len(pair.lower), len(pair.upper))
    return RegionReport(ThreeWayRegions(pos, bnd, neg), accuracy, pair.is_definable(), ComplexCode.from_pair(pair))


def pointwise_approx(op: NeighborhoodOperator, x_target: Subset) -> ApproximationPair:
    """lower = {x : N(x) <= X}; upper = {x : N(x) meets X}."""
    if x_target.universe != op.codomain:
        raise ValueError("target universe does not match the operator codomain")
    t = x_target.indices
    lower = frozenset(i for i in range(op.universe.size) if op.neighborhoods[i] <= t)
    upper = frozenset(i for i in range(op.universe.size) if op.neighborhoods[i] & t)
    return ApproximationPair(Subset(op.universe, lower), Subset(op.universe, upper), f"pointwise:{op.kind}")


def pawlak_pair(partition: Partition, x_target: Subset) -> ApproximationPair:
    if x_target.universe != partition.universe:
        raise ValueError("target universe does not match the partition universe")
    t = x_target.indices
    return ApproximationPair(
        Subset(partition.universe, partition.lower_indices(t)),
        Subset(partition.universe, partition.upper_indices(t)),
        "pawlak",
    )


def block_approx(family: GranuleFamily, x_target: Subset, mode: str = "generated") -> ApproximationPair:
    """Covering-style approximations.

    tight:     lower = union of blocks inside X, upper = its complement dual
    loose:     upper = union of blocks meeting X, lower = its complement dual
    generated: both sides as unions of blocks
    """
    if x_target.universe != family.universe:
        raise ValueError("target universe does not match the family universe")
    if mode in ("tight", "loose") and not family.is_covering:
        raise ValueError(f"{mode} approximations need a covering family")
    t = x_target.indices
    n = family.universe.size
    union_inside = frozenset().union(*[b for b in family.blocks if b <= t]) if family.blocks else frozenset()
    union_meets = frozenset().union(*[b for b in family.blocks if b & t]) if family.blocks else frozenset()
    if mode == "tight":
        lower = union_inside
        upper = frozenset(i for i in range(n) if all(b & t for b in family.blocks if i in b))
    elif mode == "loose":
        upper = union_meets
        lower = frozenset(i for i in range(n) if all(b <= t for b in family.blocks if i in b))
    elif mode == "generated":
        lower, upper = union_inside, union_meets
    else:
        raise ValueError(f"unknown block approximation mode {mode!r}")
    return ApproximationPair(Subset(family.universe, lower), Subset(family.universe, upper), f"block:{mode}")


# ---------------------------------------------------------------------------
# ratio-thresholded schemes over a partition


@dataclass(frozen=True)
class Graded:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("grade must be a nonnegative integer")


@dataclass(frozen=True)
class Vprs:
    beta: Fraction

    def __post_init__(self):
        beta = parse_rational(self.beta)
        object.__setattr__(self, "beta", beta)
        if not (0 <= beta < Fraction(1, 2)):
            raise ValueError("vprs requires beta in [0, 1/2)")


@dataclass(frozen=True)
class Probabilistic:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        alpha, beta = parse_rational(self.alpha), parse_rational(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if not (0 <= beta < alpha <= 1):
            raise ValueError("probabilistic scheme requires 0 <= beta < alpha <= 1")


@dataclass(frozen=True)
class Local:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        alpha, beta = parse_rational(self.alpha), parse_rational(self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        if not (0 <= beta < alpha <= 1):
            raise ValueError("local scheme requires 0 <= beta < alpha <= 1")


@dataclass(frozen=True)
class Entropy:
    alpha: Fraction
    theta: float

    def __post_init__(self):
        alpha = parse_rational(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if not (Fraction(1, 2) < alpha <= 1):
            raise ValueError("entropy scheme requires alpha in (1/2, 1]")
        if not (0 <= self.theta <= math.log(2) + ENTROPY_EPS):
            raise ValueError("entropy scheme requires theta in [0, ln 2]")


def block_proportion(block: frozenset[int], target: frozenset[int]) -> Fraction:
    return Fraction(len(block & target), len(block))


def binary_entropy(p: Fraction) -> float:
    """Shannon entropy of a two-outcome proportion, natural log, 0*ln(0) = 0."""
    pf = float(p)
    out = 0.0
    if 0 < pf:
        out -= pf * math.log(pf)
    if pf < 1:
        out -= (1 - pf) * math.log(1 - pf)
    return out


def block_entropies(partition: Partition, x_target: Subset) -> dict[int, float]:
    """Binary entropy of |B & X|/|B| for each block, keyed by block position."""
    t = x_target.indices
    return {k: binary_entropy(block_proportion(b, t)) for k, b in enumerate(partition.blocks)}


def ratio_approx(partition: Partition, x_target: Subset, scheme) -> ApproximationPair:
    """Apply a count-ratio scheme literally, with exact rationals for every ratio."""
    if x_target.universe != partition.universe:
        raise ValueError("target universe does not match the partition universe")
    t = x_target.indices
    n = partition.universe.size
    mu = [block_proportion(partition.block_of(i), t) for i in range(n)]

    if isinstance(scheme, Graded):
        lower = frozenset().union(*[b for b in partition.blocks if len(b - t) <= scheme.k], frozenset())
        upper = frozenset().union(*[b for b in partition.blocks if len(b & t) > scheme.k], frozenset())
        tag = "graded"
    elif isinstance(scheme, Vprs):
        lower = frozenset(i for i in range(n) if mu[i] >= 1 - scheme.beta)
        upper = frozenset(i for i in range(n) if mu[i] > scheme.beta)
        tag = "vprs"
    elif isinstance(scheme, Probabilistic):
        lower = frozenset(i for i in range(n) if mu[i] >= scheme.alpha)
        upper = frozenset(i for i in range(n) if mu[i] > scheme.beta)
        tag = "probabilistic"
    elif isinstance(scheme, Local):
        lower = frozenset(i for i in t if mu[i] >= scheme.alpha)
        upper = frozenset(i for i in range(n) if mu[i] > scheme.beta)
        tag = "local"
    elif isinstance(scheme, Entropy):
        lower = frozenset(
            i
            for i in t
            if mu[i] >= scheme.alpha and binary_entropy(mu[i]) <= scheme.theta + ENTROPY_EPS
        )
        upper = partition.upper_indices(t)
        tag = "entropy"
    else:
        raise ValueError(f"unknown ratio scheme {scheme!r}")
    return ApproximationPair(Subset(partition.universe, lower), Subset(partition.universe, upper), tag, {"scheme": scheme})


# ---------------------------------------------------------------------------
# two-tier (definite / possible) approximations


@dataclass(frozen=True)
class TwoTierData:
    """A definite tier inside a possible tier, for both granulation and target."""

    n_def: NeighborhoodOperator
    n_pos: NeighborhoodOperator
    x_def: Subset
    x_pos: Subset

    def __post_init__(self):
        u = self.n_def.universe
        if self.n_pos.universe != u or self.x_def.universe != u or self.x_pos.universe != u:
            raise ValueError("two-tier components live on different universes")
        if not all(self.n_def.neighborhoods[i] <= self.n_pos.neighborhoods[i] for i in range(u.size)):
            raise ValueError("definite neighborhoods must be contained in possible neighborhoods")
        if not self.x_def.issubset(self.x_pos):
            raise ValueError("definite target must be contained in possible target")


def two_tier_approx(data: TwoTierData) -> ApproximationPair:
    """lower = {x : N_def(x) <= X_def}; upper = {x : N_pos(x) meets X_pos}."""
    u = data.n_def.universe
    lower = frozenset(i for i in range(u.size) if data.n_def.neighborhoods[i] <= data.x_def.indices)
    upper = frozenset(i for i in range(u.size) if data.n_pos.neighborhoods[i] & data.x_pos.indices)
    return ApproximationPair(Subset(u, lower), Subset(u, upper), "two_tier")


@dataclass(frozen=True)
class ContraKernels:
    """Contradiction kernels with thresholds (alpha, beta, gamma), beta <= gamma."""

    universe: Universe
    c_r: tuple[tuple, ...]
    c_u: tuple
    alpha: object
    beta: object
    gamma: object

    def __post_init__(self):
        n = self.universe.size
        rows = tuple(tuple(v for v in row) for row in self.c_r)
        object.__setattr__(self, "c_r", rows)
        object.__setattr__(self, "c_u", tuple(self.c_u))
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("relation kernel must be square over the universe")
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError("relation kernel diagonal must be zero")
            for j in range(n):
                if not (0 <= rows[i][j] <= 1) or rows[i][j] != rows[j][i]:
                    raise ValueError("relation kernel must be symmetric with values in [0,1]")
        if len(self.c_u) != n or any(not (0 <= v <= 1) for v in self.c_u):
            raise ValueError("membership kernel must assign one [0,1] value per element")
        if not (self.beta <= self.gamma):
            raise ValueError("thresholds must satisfy beta <= gamma")


def contra_from_kernels(kernels: ContraKernels) -> TwoTierData:
    """Kernel-ball neighborhoods at alpha with definite/possible slices at beta/gamma."""
    u = kernels.universe
    n = u.size
    nbs = tuple(frozenset(j for j in range(n) if kernels.c_r[i][j] <= kernels.alpha) for i in range(n))
    ball = NeighborhoodOperator(u, u, nbs, "contra_kernel_ball", {"alpha": kernels.alpha})
    x_def = Subset(u, frozenset(i for i in range(n) if kernels.c_u[i] <= kernels.beta))
    x_pos = Subset(u, frozenset(i for i in range(n) if kernels.c_u[i] <= kernels.gamma))
    return TwoTierData(ball, ball, x_def, x_pos)


# ---------------------------------------------------------------------------
# composition-style operators


def sequential_approx(partitions: Sequence[Partition], x_target: Subset) -> ApproximationPair:
    """Compose Pawlak lowers in order; upper is the dual of the lower of the complement."""
    if not partitions:
        raise ValueError("sequential approximation needs at least one relation")
    u = partitions[0].universe
    if x_target.universe != u or any(p.universe != u for p in partitions):
        raise ValueError("all relations and the target must share one universe")

    def seq_lower(target: frozenset[int]) -> frozenset[int]:
        current = target
        for part in partitions:
            current = part.lower_indices(current)
        return current

    lower = seq_lower(x_target.indices)
    upper = frozenset(range(u.size)) - seq_lower(frozenset(range(u.size)) - x_target.indices)
    return ApproximationPair(Subset(u, lower), Subset(u, upper), "sequential")


@dataclass(frozen=True)
class STransferResult:
    x_f: Subset
    x_circ: Subset
    pair: ApproximationPair


def s_transfer_approx(partition: Partition, f: Mapping[str, str], x_target: Subset) -> STransferResult:
    """One-directional transfer: extend X along f, then take the Pawlak pair."""
    u = partition.universe
    if x_target.universe != u:
        raise ValueError("target universe does not match the partition universe")
    t = x_target.indices
    fx = {}
    for a, b in f.items():
        if b not in u:
            raise ValueError(f"transfer image {b!r} lies outside the universe")
        fx[u.index(a)] = u.index(b)
    x_f = frozenset(i for i, j in fx.items() if i not in t and j in t)
    x_circ = t | x_f
    pair = pawlak_pair(partition, Subset(u, x_circ))
    return STransferResult(Subset(u, x_f), Subset(u, x_circ), ApproximationPair(pair.lower, pair.upper, "s_transfer"))


def dp_robust(universe: Universe, p_lower: Mapping[str, object], p_upper: Mapping[str, object], eta) -> ApproximationPair:
    """Keep elements whose membership probability is at least 1 - eta, per tier.

    Probabilities and eta are coerced to exact rationals (decimal intent), so
    the >= comparison is knife-edge safe.
    """
    eta_q = parse_rational(eta)
    if not (0 < eta_q < 1):
        raise ValueError("robustness level must lie in (0, 1)")
    lo = {e: parse_rational(p_lower[e]) for e in universe.elements}
    hi = {e: parse_rational(p_upper[e]) for e in universe.elements}
    for e in universe.elements:
        if not (0 <= lo[e] <= 1 and 0 <= hi[e] <= 1):
            raise ValueError("membership probabilities must lie in [0,1]")
        if lo[e] > hi[e]:
            raise ValueError(f"lower membership probability exceeds upper at {e!r}")
    cut = 1 - eta_q
    lower = universe.subset(e for e in universe.elements if lo[e] >= cut)
    upper = universe.subset(e for e in universe.elements if hi[e] >= cut)
    return ApproximationPair(lower, upper, "dp_robust", {"eta": eta_q})


def monte_carlo_membership(
    counts: Mapping[str, float],
    noise_scale: float,
    threshold: float,
    trials: int,
    seed: int = 0,
) -> dict[str, Fraction]:
    """Estimate membership probabilities by repeated Laplace-noisy count thresholding.

    Plumbing only: simulates a noisy-count release, makes no privacy-accounting
    claims.  Returns exact hit ratios.
    """
    if trials <= 0:
        raise ValueError("trials must be positive")
    if noise_scale < 0:
        raise ValueError("noise scale must be nonnegative")
    rng = random.Random(seed)
    out: dict[str, Fraction] = {}
    for element, count in counts.items():
        hits = 0
        for _ in range(trials):
            u = rng.random() - 0.5
            noise = 0.0 if noise_scale == 0 else -noise_scale * math.copysign(1.0, u) * math.log(1 - 2 * abs(u))
            if count + noise >= threshold:
                hits += 1
        out[element] = Fraction(hits, trials)
    return out


# ---------------------------------------------------------------------------
# weak rough algebra


@dataclass(frozen=True)
class WeakRoughSet:
    """Any (lower, upper) pair with lower <= upper; no granulation behind it."""

    a_lower: Subset
    a_upper: Subset

    def __post_init__(self):
        if self.a_lower.universe != self.a_upper.universe:
            raise ValueError("components live on different universes")
        if not self.a_lower.issubset(self.a_upper):
            raise ValueError("weak rough set requires lower <= upper")

    @property
    def universe(self) -> Universe:
        return self.a_lower.universe

    def union(self, other: WeakRoughSet) -> WeakRoughSet:
        return WeakRoughSet(self.a_lower | other.a_lower, self.a_upper | other.a_upper)

    def intersection(self, other: WeakRoughSet) -> WeakRoughSet:
        return WeakRoughSet(self.a_lower & other.a_lower, self.a_upper & other.a_upper)

    def complement(self) -> WeakRoughSet:
        return WeakRoughSet(self.a_upper.complement(), self.a_lower.complement())

    def leq(self, other: WeakRoughSet) -> bool:
        return self.a_lower.issubset(other.a_lower) and self.a_upper.issubset(other.a_upper)


def weak_ops(a: WeakRoughSet, b: WeakRoughSet | None, op: str):
    if op == "union":
        return a.union(b)
    if op == "intersection":
        return a.intersection(b)
    if op == "complement":
        return a.complement()
    if op == "leq":
        return a.leq(b)
    raise ValueError(f"unknown weak rough operation {op!r}")
