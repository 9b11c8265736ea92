"""Probability- and preference-driven decision layers: rough membership,
decision-theoretic thresholds, weighted rough sets, dominance-based rough
sets, D-number descriptions, and the threshold game.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from roughkit.approx import ThreeWayRegions
from roughkit.foundation import InformationTable, Partition, Subset, Universe, indiscernibility, parse_rational


def rough_membership(partition: Partition, x_target: Subset) -> dict[str, Fraction]:
    """mu(x) = |X & block(x)| / |block(x)|, exact."""
    if x_target.universe != partition.universe:
        raise ValueError("target universe does not match the partition universe")
    t = x_target.indices
    out = {}
    for i, e in enumerate(partition.universe.elements):
        b = partition.block_of(i)
        out[e] = Fraction(len(b & t), len(b))
    return out


def threshold_regions(partition: Partition, x_target: Subset, alpha: Fraction, beta: Fraction) -> ThreeWayRegions:
    """POS where mu >= alpha, NEG where mu <= beta, BND strictly between."""
    mu = rough_membership(partition, x_target)
    u = partition.universe
    pos = u.subset(e for e in u.elements if mu[e] >= alpha)
    neg = u.subset(e for e in u.elements if mu[e] <= beta)
    bnd = (pos | neg).complement()
    return ThreeWayRegions(pos, bnd, neg)


@dataclass(frozen=True)
class LossTable:
    """Six nonnegative costs under the standard three-way ordering."""

    l_pp: Fraction
    l_bp: Fraction
    l_np: Fraction
    l_pn: Fraction
    l_bn: Fraction
    l_nn: Fraction

    def __post_init__(self):
        for name in ("l_pp", "l_bp", "l_np", "l_pn", "l_bn", "l_nn"):
            q = parse_rational(getattr(self, name))
            if q < 0:
                raise ValueError("losses must be nonnegative")
            object.__setattr__(self, name, q)
        if not (self.l_pp <= self.l_bp < self.l_np):
            raise ValueError("loss ordering violated: need l_pp <= l_bp < l_np")
        if not (self.l_nn <= self.l_bn < self.l_pn):
            raise ValueError("loss ordering violated: need l_nn <= l_bn < l_pn")
        # the basic ordering alone does not force beta < alpha; this product
        # inequality is exactly the condition that keeps the three regions apart
        if (self.l_bn - self.l_nn) * (self.l_bp - self.l_pp) >= (self.l_pn - self.l_bn) * (self.l_np - self.l_bp):
            raise ValueError("loss ordering violated: deferral is too costly, the three-way thresholds collapse")

    @classmethod
    def from_sequence(cls, values: Sequence) -> LossTable:
        """Order: (l_pp, l_bp, l_np, l_pn, l_bn, l_nn)."""
        if len(values) != 6:
            raise ValueError("a loss table has exactly six entries")
        return cls(*values)


@dataclass(frozen=True)
class DtrsResult:
    alpha: Fraction
    beta: Fraction
    regions: ThreeWayRegions


def dtrs_thresholds(losses: LossTable) -> tuple[Fraction, Fraction]:
    alpha = (losses.l_pn - losses.l_bn) / ((losses.l_pn - losses.l_bn) + (losses.l_bp - losses.l_pp))
    beta = (losses.l_bn - losses.l_nn) / ((losses.l_bn - losses.l_nn) + (losses.l_np - losses.l_bp))
    return alpha, beta


def dtrs(losses: LossTable, partition: Partition, x_target: Subset) -> DtrsResult:
    """Exact-rational three-way thresholds from the loss table, then regions."""
    alpha, beta = dtrs_thresholds(losses)
    return DtrsResult(alpha, beta, threshold_regions(partition, x_target, alpha, beta))


# ---------------------------------------------------------------------------
# weighted rough sets


@dataclass(frozen=True)
class WeightedResult:
    gamma_full: Fraction
    gamma_without: dict[str, Fraction]
    significance: dict[str, Fraction]
    weights: dict[str, Fraction]
    scores: dict[str, Fraction]
    lower: Subset


def _dependency_degree(table: InformationTable, attrs: Sequence[str], decision_attr: str) -> Fraction:
    n = table.universe.size
    if n == 0:
        return Fraction(0)
    cond = indiscernibility(table, attrs)
    dec = indiscernibility(table, [decision_attr])
    pos = 0
    for b in cond.blocks:
        if any(b <= d for d in dec.blocks):
            pos += len(b)
    return Fraction(pos, n)


def weighted_rough(
    table: InformationTable,
    b_attrs: Sequence[str],
    decision_attr: str,
    x_target: Subset,
    alpha,
) -> WeightedResult:
    """Significance-derived attribute weights, then a weighted-inclusion lower set."""
    attrs = tuple(b_attrs)
    if not attrs:
        raise ValueError("attribute set must be nonempty")
    alpha_q = parse_rational(alpha)
    gamma_full = _dependency_degree(table, attrs, decision_attr)
    gamma_without = {a: _dependency_degree(table, [b for b in attrs if b != a], decision_attr) for a in attrs}
    significance = {a: gamma_full - gamma_without[a] for a in attrs}
    total = sum(significance.values(), Fraction(0))
    if total == 0:
        raise ValueError("all attribute significances are zero; weights are undefined")
    weights = {a: significance[a] / total for a in attrs}

    single = {a: indiscernibility(table, [a]) for a in attrs}
    t = x_target.indices
    scores = {}
    for i, e in enumerate(table.universe.elements):
        scores[e] = sum((weights[a] for a in attrs if single[a].block_of(i) <= t), Fraction(0))
    lower = table.universe.subset(e for e in table.universe.elements if scores[e] >= alpha_q)
    return WeightedResult(gamma_full, gamma_without, significance, weights, scores, lower)


# ---------------------------------------------------------------------------
# dominance-based rough sets


@dataclass(frozen=True)
class DominanceData:
    """Benefit-oriented criterion values plus an ordered class label per element.

    Cost-type criteria are negated to benefit form at construction.
    """

    universe: Universe
    criteria: tuple[str, ...]
    values: tuple[tuple, ...]  # values[criterion_pos][row], already benefit-oriented
    classes: tuple[int, ...]
    n_classes: int

    def __post_init__(self):
        if len(self.values) != len(self.criteria):
            raise ValueError("one value column per criterion required")
        for col in self.values:
            if len(col) != self.universe.size:
                raise ValueError("one value per element required")
        if len(self.classes) != self.universe.size:
            raise ValueError("one class label per element required")
        if any(not (1 <= c <= self.n_classes) for c in self.classes):
            raise ValueError("class labels must lie in 1..n")

    @classmethod
    def from_columns(
        cls,
        universe: Universe,
        columns: Mapping[str, Sequence],
        directions: Mapping[str, str],
        classes: Sequence[int],
        n_classes: int | None = None,
    ) -> DominanceData:
        crit = tuple(columns)
        cols = []
        for name in crit:
            direction = directions.get(name, "benefit")
            if direction not in ("benefit", "cost"):
                raise ValueError(f"criterion direction must be 'benefit' or 'cost', got {direction!r}")
            raw = [parse_rational(v) for v in columns[name]]
            cols.append(tuple(-v for v in raw) if direction == "cost" else tuple(raw))
        labels = tuple(int(c) for c in classes)
        return cls(universe, crit, tuple(cols), labels, n_classes or max(labels, default=0))

    def dominates(self, i: int, j: int) -> bool:
        """i is at least as good as j on every criterion."""
        return all(col[i] >= col[j] for col in self.values)

    def cone_plus(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.universe.size) if self.dominates(j, i))

    def cone_minus(self, i: int) -> frozenset[int]:
        return frozenset(j for j in range(self.universe.size) if self.dominates(i, j))

    def upward_union(self, t: int) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.classes) if c >= t)

    def downward_union(self, t: int) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.classes) if c <= t)


@dataclass(frozen=True)
class DrsaResult:
    lower_ge: Subset
    upper_ge: Subset
    bnd_ge: Subset
    lower_le: Subset
    upper_le: Subset
    bnd_le: Subset


def _drsa_lower_ge(data: DominanceData, t: int) -> frozenset[int]:
    union = data.upward_union(t)
    return frozenset(i for i in union if data.cone_plus(i) <= union)


def _drsa_lower_le(data: DominanceData, t: int) -> frozenset[int]:
    union = data.downward_union(t)
    return frozenset(i for i in union if data.cone_minus(i) <= union)


def drsa(data: DominanceData, t: int) -> DrsaResult:
    """Lower approximations of the unions at t; uppers by complementarity.

    The degenerate unions (upward at t=1, downward at t=n) are the whole
    universe, so their uppers are taken as the universe itself.
    """
    if not (1 <= t <= data.n_classes):
        raise ValueError("class index out of range")
    u = data.universe
    full = frozenset(range(u.size))
    lower_ge = _drsa_lower_ge(data, t)
    lower_le = _drsa_lower_le(data, t)
    upper_ge = full - _drsa_lower_le(data, t - 1) if t >= 2 else full
    upper_le = full - _drsa_lower_ge(data, t + 1) if t <= data.n_classes - 1 else full
    mk = lambda s: Subset(u, s)
    return DrsaResult(
        mk(lower_ge), mk(upper_ge), mk(upper_ge - lower_ge),
        mk(lower_le), mk(upper_le), mk(upper_le - lower_le),
    )


# ---------------------------------------------------------------------------
# D-number descriptions


@dataclass(frozen=True)
class DNumber:
    """Partial mass assignment over nonempty subsets of a finite frame."""

    frame: tuple[str, ...]
    masses: tuple[tuple[frozenset[str], Fraction], ...]

    def __post_init__(self):
        fixed = []
        total = Fraction(0)
        for subset, mass in self.masses:
            key = frozenset(subset)
            if not key:
                raise ValueError("the empty set carries no mass")
            if not key <= set(self.frame):
                raise ValueError("mass assigned outside the frame")
            q = parse_rational(mass)
            if not (0 <= q <= 1):
                raise ValueError("masses must lie in [0,1]")
            fixed.append((key, q))
            total += q
        if total > 1:
            raise ValueError("masses must sum to at most one")
        object.__setattr__(self, "masses", tuple(fixed))

    def mass(self, subset) -> Fraction:
        key = frozenset(subset)
        return sum((m for s, m in self.masses if s == key), Fraction(0))


@dataclass(frozen=True)
class DRoughResult:
    description: dict[str, DNumber]
    regions: ThreeWayRegions


def d_rough(partition: Partition, x_target: Subset, alpha, beta) -> DRoughResult:
    """Classwise (+/-) proportions as D-numbers, thresholded into three regions."""
    alpha_q, beta_q = parse_rational(alpha), parse_rational(beta)
    if not (0 <= beta_q < alpha_q <= 1):
        raise ValueError("thresholds must satisfy 0 <= beta < alpha <= 1")
    mu = rough_membership(partition, x_target)
    u = partition.universe
    description = {
        e: DNumber(("+", "-"), ((frozenset({"+"}), mu[e]), (frozenset({"-"}), 1 - mu[e])))
        for e in u.elements
    }
    pos = u.subset(e for e in u.elements if mu[e] >= alpha_q)
    neg = u.subset(e for e in u.elements if mu[e] <= beta_q)
    bnd = (pos | neg).complement()
    return DRoughResult(description, ThreeWayRegions(pos, bnd, neg))


# ---------------------------------------------------------------------------
# game-theoretic threshold selection


@dataclass(frozen=True)
class Strategy:
    name: str
    d_alpha: Fraction
    d_beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d_alpha", parse_rational(self.d_alpha))
        object.__setattr__(self, "d_beta", parse_rational(self.d_beta))


_MEASURES = ("precision", "recall", "neg_boundary")


def _clamp01(q: Fraction) -> Fraction:
    return Fraction(0) if q < 0 else (Fraction(1) if q > 1 else q)


@dataclass(frozen=True)
class GameSpec:
    """Finite threshold-adjustment game around a baseline (alpha0, beta0)."""

    players: tuple[str, ...]
    strategies: tuple[tuple[Strategy, ...], ...]
    baseline_alpha: Fraction
    baseline_beta: Fraction
    measures: tuple[str, ...]
    baseline_profile: tuple[int, ...] = ()
    epsilon: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "baseline_alpha", parse_rational(self.baseline_alpha))
        object.__setattr__(self, "baseline_beta", parse_rational(self.baseline_beta))
        if len(self.strategies) != len(self.players) or len(self.measures) != len(self.players):
            raise ValueError("one strategy grid and one measure per player required")
        if any(not grid for grid in self.strategies):
            raise ValueError("strategy grids must be nonempty")
        if any(m not in _MEASURES for m in self.measures):
            raise ValueError(f"payoff measures must be among {_MEASURES}")
        if not self.baseline_profile:
            object.__setattr__(self, "baseline_profile", tuple(0 for _ in self.players))
        if len(self.baseline_profile) != len(self.players):
            raise ValueError("baseline profile must pick one strategy per player")
        for profile in itertools.product(*[range(len(g)) for g in self.strategies]):
            a, b = self.thresholds(profile)
            if not b < a:
                raise ValueError("every profile must yield beta < alpha after projection")

    def thresholds(self, profile: Sequence[int]) -> tuple[Fraction, Fraction]:
        a = self.baseline_alpha + sum((self.strategies[k][s].d_alpha for k, s in enumerate(profile)), Fraction(0))
        b = self.baseline_beta + sum((self.strategies[k][s].d_beta for k, s in enumerate(profile)), Fraction(0))
        return _clamp01(a), _clamp01(b)


@dataclass(frozen=True)
class GtrsResult:
    profile: tuple[str, ...] | None
    alpha: Fraction | None
    beta: Fraction | None
    regions: ThreeWayRegions | None
    payoffs: dict[tuple[int, ...], tuple[float, ...]]


def gtrs_equilibrium(game: GameSpec, partition: Partition, x_target: Subset) -> GtrsResult:
    """First pure Nash equilibrium in lexicographic profile order, or none.

    Payoffs are measure deltas against the baseline profile, computed from the
    regions each profile induces, with additive smoothing epsilon.
    """
    mu = rough_membership(partition, x_target)
    u = partition.universe
    labels = x_target.indices

    def measure_values(profile: tuple[int, ...]) -> tuple[float, ...]:
        alpha, beta = game.thresholds(profile)
        pos = frozenset(u.index(e) for e in u.elements if mu[e] >= alpha)
        neg = frozenset(u.index(e) for e in u.elements if mu[e] <= beta)
        bnd_size = u.size - len(pos) - len(neg)
        tp = len(pos & labels)
        out = []
        for m in game.measures:
            if m == "precision":
                out.append(tp / (len(pos) + game.epsilon))
            elif m == "recall":
                out.append(tp / (len(labels) + game.epsilon))
            else:
                out.append(-float(bnd_size))
        return tuple(out)

    profiles = list(itertools.product(*[range(len(g)) for g in game.strategies]))
    baseline = measure_values(tuple(game.baseline_profile))
    payoffs = {p: tuple(v - b for v, b in zip(measure_values(p), baseline)) for p in profiles}

    for profile in profiles:
        stable = True
        for k in range(len(game.players)):
            mine = payoffs[profile][k]
            for alt in range(len(game.strategies[k])):
                if alt == profile[k]:
                    continue
                deviated = tuple(alt if j == k else profile[j] for j in range(len(profile)))
                if payoffs[deviated][k] > mine:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            alpha, beta = game.thresholds(profile)
            regions = threshold_regions(partition, x_target, alpha, beta)
            names = tuple(game.strategies[k][s].name for k, s in enumerate(profile))
            return GtrsResult(names, alpha, beta, regions, payoffs)
    return GtrsResult(None, None, None, None, payoffs)
