import itertools
import random
from fractions import Fraction

import pytest

from conftest import random_partition, random_subset, random_universe
from roughkit.approx import pawlak_pair
from roughkit.foundation import GuardError, Partition, Subset, Universe
from roughkit.granulation import DistanceMatrix
from roughkit.multiview import (
    AttributeGraph,
    IndexedRelations,
    RoughObjectSpace,
    ScaleFamily,
    boundary_cardinality,
    graphic_rough,
    in_iterated_type,
    iterated_multirough,
    metarough,
    mgrs,
    multirough,
    persistent,
    refined_chain,
)


def hospital_relations():
    u = Universe(tuple(f"p{i}" for i in range(1, 7)))
    return u, IndexedRelations.from_mapping(
        {
            "vitals": Partition.from_blocks(u, [["p1", "p2"], ["p3", "p4"], ["p5", "p6"]]),
            "imaging": Partition.from_blocks(u, [["p1", "p3"], ["p2", "p4"], ["p5", "p6"]]),
        }
    )


class TestMultirough:
    def test_hospital_views(self):
        u, rels = hospital_relations()
        pairs = multirough(rels, u.subset(["p1", "p3", "p4"]))
        assert pairs["vitals"].lower.ids() == ("p3", "p4")
        assert pairs["vitals"].upper.ids() == ("p1", "p2", "p3", "p4")
        assert pairs["imaging"].lower.ids() == ("p1", "p3")
        assert pairs["imaging"].upper.ids() == ("p1", "p2", "p3", "p4")

    def test_merchant_weeks(self):
        u = Universe(tuple(f"m{i}" for i in range(1, 6)))
        rels = IndexedRelations.from_mapping(
            {
                "t1": Partition.from_blocks(u, [["m1", "m2", "m3"], ["m4", "m5"]]),
                "t2": Partition.from_blocks(u, [["m1"], ["m2", "m3"], ["m4"], ["m5"]]),
            }
        )
        pairs = multirough(rels, u.subset(["m1", "m4"]))
        assert pairs["t1"].lower.ids() == () and pairs["t1"].upper == u.full()
        assert pairs["t2"].lower.ids() == ("m1", "m4") and pairs["t2"].upper.ids() == ("m1", "m4")

    def test_tree_nodes(self):
        u = Universe(tuple(f"p{i}" for i in range(1, 7)))
        rels = IndexedRelations.from_mapping(
            {
                "symptoms": Partition.from_blocks(u, [["p1", "p2"], ["p3", "p5"], ["p4"], ["p6"]]),
                "imaging": Partition.from_blocks(u, [["p1", "p2", "p3"], ["p4", "p5", "p6"]]),
            }
        )
        pairs = multirough(rels, u.subset(["p1", "p2", "p3"]))
        assert pairs["symptoms"].lower.ids() == ("p1", "p2")
        assert pairs["symptoms"].upper.ids() == ("p1", "p2", "p3", "p5")
        assert pairs["imaging"].lower.ids() == ("p1", "p2", "p3")
        assert pairs["imaging"].is_definable()

    def test_single_key_is_pawlak(self):
        rng = random.Random(31)
        for _ in range(20):
            u = random_universe(rng)
            part = random_partition(rng, u)
            rels = IndexedRelations.from_mapping({"only": part})
            x = random_subset(rng, u)
            assert multirough(rels, x)["only"].rough_equal(pawlak_pair(part, x))

    def test_per_key_targets_and_mismatch(self):
        u, rels = hospital_relations()
        targets = {"vitals": u.subset(["p1"]), "imaging": u.subset(["p2"])}
        pairs = multirough(rels, targets)
        assert set(pairs) == {"vitals", "imaging"}
        with pytest.raises(KeyError):
            multirough(rels, {"vitals": u.subset(["p1"])})
        with pytest.raises(KeyError):
            multirough(rels, {**targets, "extra": u.subset(["p1"])})

    def test_componentwise_monotone(self):
        rng = random.Random(37)
        for _ in range(30):
            u = random_universe(rng)
            rels = IndexedRelations.from_mapping(
                {"a": random_partition(rng, u), "b": random_partition(rng, u)}
            )
            small = random_subset(rng, u)
            big = small | random_subset(rng, u)
            p_small, p_big = multirough(rels, small), multirough(rels, big)
            for key in rels.keys:
                assert p_small[key].lower.issubset(p_big[key].lower)
                assert p_small[key].upper.issubset(p_big[key].upper)


class TestMgrs:
    def setup_instance(self):
        u = Universe(tuple(f"p{i}" for i in range(1, 9)))
        rels = IndexedRelations.from_mapping(
            {
                "symptom": Partition.from_blocks(u, [["p1", "p2", "p3"], ["p4", "p5"], ["p6", "p7", "p8"]]),
                "test": Partition.from_blocks(u, [["p1", "p2", "p4", "p6"], ["p3", "p5", "p7", "p8"]]),
            }
        )
        return u, rels, u.subset(["p1", "p2", "p4", "p5"])

    def test_optimistic(self):
        u, rels, x = self.setup_instance()
        pair = mgrs(rels, x, "optimistic")
        assert pair.lower.ids() == ("p4", "p5")
        assert pair.upper.ids() == ("p1", "p2", "p3", "p4", "p5")

    def test_pessimistic(self):
        u, rels, x = self.setup_instance()
        pair = mgrs(rels, x, "pessimistic")
        assert pair.lower.ids() == ()
        assert pair.upper == u.full()

    def test_single_relation_reduces_to_pawlak(self):
        rng = random.Random(41)
        for _ in range(100):
            u = random_universe(rng)
            part = random_partition(rng, u)
            rels = IndexedRelations.from_mapping({"r": part})
            x = random_subset(rng, u)
            pw = pawlak_pair(part, x)
            for mode in ("optimistic", "pessimistic"):
                assert mgrs(rels, x, mode).rough_equal(pw)

    def test_bounds_sandwich(self):
        rng = random.Random(43)
        for _ in range(40):
            u = random_universe(rng)
            rels = IndexedRelations.from_mapping(
                {str(k): random_partition(rng, u) for k in range(rng.randint(1, 3))}
            )
            x = random_subset(rng, u)
            opt = mgrs(rels, x, "optimistic")
            pes = mgrs(rels, x, "pessimistic")
            assert pes.lower.issubset(opt.lower)
            assert opt.lower.issubset(x)
            assert x.issubset(opt.upper)
            assert opt.upper.issubset(pes.upper)

    def test_unknown_mode(self):
        u, rels, x = self.setup_instance()
        with pytest.raises(ValueError):
            mgrs(rels, x, "hopeful")


class TestIterated:
    def test_depth_zero_is_target(self):
        u, rels = hospital_relations()
        x = u.subset(["p1"])
        assert iterated_multirough(rels, x, 0) == x

    def test_depth_one_equals_multirough(self):
        u, rels = hospital_relations()
        x = u.subset(["p1", "p3", "p4"])
        flat = multirough(rels, x)
        nested = iterated_multirough(rels, x, 1)
        for key in rels.keys:
            assert nested[key] == (flat[key].lower, flat[key].upper)

    def test_depth_two_matches_recursive_oracle(self):
        u, rels = hospital_relations()
        x = u.subset(["p1", "p3", "p4"])

        def oracle(target, depth):
            if depth == 0:
                return target
            out = {}
            for key in rels.keys:
                pair = pawlak_pair(rels.partition(key), target)
                out[key] = (oracle(pair.lower, depth - 1), oracle(pair.upper, depth - 1))
            return out

        assert iterated_multirough(rels, x, 2) == oracle(x, 2)

    def test_shape_check_all_depths(self):
        rng = random.Random(47)
        for _ in range(10):
            u = random_universe(rng, 6)
            rels = IndexedRelations.from_mapping(
                {str(k): random_partition(rng, u) for k in range(rng.randint(1, 2))}
            )
            x = random_subset(rng, u)
            for depth in range(4):
                value = iterated_multirough(rels, x, depth)
                assert in_iterated_type(value, rels, depth)
                assert not in_iterated_type(value, rels, depth + 1)

    def test_depth_guard(self):
        u, rels = hospital_relations()
        with pytest.raises(GuardError):
            iterated_multirough(rels, u.full(), 4)


class TestGraphicRough:
    def credit_graph(self):
        u = Universe(tuple(f"p{i}" for i in range(1, 7)))
        inc = Partition.from_labels(u, ["H", "H", "H", "L", "L", "L"])
        debt = Partition.from_labels(u, ["L", "L", "H", "H", "L", "L"])
        cred = Partition.from_labels(u, ["G", "F", "P", "P", "F", "G"])
        graph = AttributeGraph(
            ("Inc", "Debt", "Cred"),
            (inc, debt, cred),
            frozenset([frozenset(["Inc", "Debt"]), frozenset(["Debt", "Cred"])]),
        )
        return u, graph

    def test_subgraph_pairs(self):
        u, graph = self.credit_graph()
        x = u.subset(["p1", "p2", "p6"])
        pairs = graphic_rough(graph, [["Inc", "Debt"], ["Inc", "Debt", "Cred"]], x)
        assert pairs["Inc+Debt"].lower.ids() == ("p1", "p2")
        assert pairs["Inc+Debt"].upper.ids() == ("p1", "p2", "p5", "p6")
        assert pairs["Inc+Debt+Cred"].lower == x and pairs["Inc+Debt+Cred"].upper == x

    def test_cluster_views(self):
        u = Universe(tuple(f"a{i}" for i in range(1, 7)))
        graph = AttributeGraph(
            ("Inc", "Debt", "Late", "Score"),
            (
                Partition.from_labels(u, ["H", "H", "H", "L", "L", "L"]),
                Partition.from_labels(u, ["L", "L", "H", "H", "L", "L"]),
                Partition.from_labels(u, ["N", "N", "Y", "Y", "N", "Y"]),
                Partition.from_labels(u, ["G", "G", "P", "P", "G", "P"]),
            ),
            frozenset(),
        )
        x = u.subset(["a3", "a4", "a6"])
        pairs = graphic_rough(graph, [["Inc", "Debt"], ["Late", "Score"]], x)
        assert pairs["Inc+Debt"].lower.ids() == ("a3", "a4")
        assert pairs["Inc+Debt"].upper.ids() == ("a3", "a4", "a5", "a6")
        assert pairs["Late+Score"].lower == x and pairs["Late+Score"].upper == x

    def test_single_vertex_is_pawlak(self):
        u, graph = self.credit_graph()
        x = u.subset(["p1", "p2", "p6"])
        pair = graphic_rough(graph, [["Cred"]], x)["Cred"]
        assert pair.rough_equal(pawlak_pair(graph.relation_of("Cred"), x))

    def test_vertex_monotonicity(self):
        rng = random.Random(53)
        u, graph = self.credit_graph()
        for _ in range(20):
            x = random_subset(rng, u)
            small = graphic_rough(graph, [["Inc"]], x)["Inc"]
            big = graphic_rough(graph, [["Inc", "Debt"]], x)["Inc+Debt"]
            assert small.lower.issubset(big.lower)
            assert big.upper.issubset(small.upper)

    def test_invalid_subgraph(self):
        u, graph = self.credit_graph()
        with pytest.raises(ValueError):
            graphic_rough(graph, [["Nope"]], u.full())


class TestRefinedChain:
    def fraud_chain(self):
        u = Universe(tuple(f"u{i}" for i in range(1, 7)))
        return u, IndexedRelations.from_mapping(
            {
                "card+merchant": Partition.from_blocks(u, [["u1", "u2"], ["u3"], ["u4", "u5"], ["u6"]]),
                "card": Partition.from_blocks(u, [["u1", "u2", "u3"], ["u4", "u5"], ["u6"]]),
                "country": Partition.from_blocks(u, [["u1", "u2", "u3", "u4", "u5"], ["u6"]]),
            }
        )

    def test_fraud_levels(self):
        # Levels are per-level Pawlak pairs (the definition's formula); the
        # example's displayed level-2/3 lowers contradict its own definition.
        u, chain = self.fraud_chain()
        pairs, report = refined_chain(chain, u.subset(["u1", "u2"]))
        assert pairs["card+merchant"].lower.ids() == ("u1", "u2")
        assert pairs["card+merchant"].upper.ids() == ("u1", "u2")
        assert pairs["card"].lower.ids() == ()
        assert pairs["card"].upper.ids() == ("u1", "u2", "u3")
        assert pairs["country"].lower.ids() == ()
        assert pairs["country"].upper.ids() == ("u1", "u2", "u3", "u4", "u5")
        assert report.ok

    def test_single_level(self):
        rng = random.Random(59)
        u = random_universe(rng)
        part = random_partition(rng, u)
        x = random_subset(rng, u)
        pairs, report = refined_chain(IndexedRelations.from_mapping({"r": part}), x)
        assert pairs["r"].rough_equal(pawlak_pair(part, x)) and report.ok

    def test_random_merged_chains_always_nest(self):
        rng = random.Random(61)
        for _ in range(30):
            u = random_universe(rng, 7, min_size=2)
            fine = random_partition(rng, u)
            # coarsen by merging random pairs of blocks
            blocks = list(fine.blocks)
            while len(blocks) > 1 and rng.random() < 0.7:
                i, j = rng.sample(range(len(blocks)), 2)
                blocks[i] = blocks[i] | blocks[j]
                del blocks[j]
            coarse = Partition(u, tuple(blocks))
            chain = IndexedRelations.from_mapping({"fine": fine, "coarse": coarse})
            _, report = refined_chain(chain, random_subset(rng, u))
            assert report.ok

    def test_unnested_chain_rejected(self):
        u = Universe(("a", "b", "c"))
        chain = IndexedRelations.from_mapping(
            {
                "one": Partition.from_blocks(u, [["a", "b"], ["c"]]),
                "two": Partition.from_blocks(u, [["a"], ["b", "c"]]),
            }
        )
        with pytest.raises(ValueError):
            refined_chain(chain, u.subset(["a"]))


class TestPersistent:
    def churn_family(self, grid):
        u = Universe(tuple(f"c{i}" for i in range(1, 6)))
        names = u.elements
        given = {("c1", "c2"): "0.3", ("c1", "c3"): "0.9", ("c2", "c3"): "0.8", ("c3", "c4"): "0.4", ("c4", "c5"): "0.6"}
        rows = [[Fraction(2)] * 5 for _ in range(5)]
        for i in range(5):
            rows[i][i] = Fraction(0)
        for (a, b), v in given.items():
            i, j = names.index(a), names.index(b)
            rows[i][j] = rows[j][i] = Fraction(v)
        return u, ScaleFamily(DistanceMatrix(u, tuple(tuple(r) for r in rows)), grid)

    def test_churn_scales(self):
        u, family = self.churn_family((Fraction(1, 2), Fraction(9, 10)))
        pairs = persistent(family, u.subset(["c1", "c2"]))
        assert pairs["1/2"].lower.ids() == ("c1", "c2") and pairs["1/2"].upper.ids() == ("c1", "c2")
        assert pairs["9/10"].lower.ids() == ()
        assert pairs["9/10"].upper.ids() == ("c1", "c2", "c3")

    def test_zero_scale_on_distinct_points(self):
        u, family = self.churn_family((Fraction(0),))
        x = u.subset(["c1", "c4"])
        pair = persistent(family, x)["0"]
        assert pair.lower == x and pair.upper == x

    def test_scale_monotonicity(self):
        rng = random.Random(67)
        for _ in range(20):
            n = rng.randint(2, 6)
            u = Universe(tuple(f"x{i}" for i in range(n)))
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    d = Fraction(rng.randint(1, 9), 10)
                    rows[i][j] = rows[j][i] = d
            grid = tuple(sorted(Fraction(k, 10) for k in rng.sample(range(1, 10), 3)))
            family = ScaleFamily(DistanceMatrix(u, tuple(tuple(r) for r in rows)), grid)
            x = random_subset(rng, u)
            pairs = list(persistent(family, x).values())
            for a, b in zip(pairs, pairs[1:]):
                assert b.lower.issubset(a.lower)
                assert a.upper.issubset(b.upper)
            for pair in pairs:  # reflexive balls give the sandwich
                assert pair.lower.issubset(x) and x.issubset(pair.upper)

    def test_unsorted_grid_rejected(self):
        with pytest.raises(ValueError):
            self.churn_family((Fraction(1), Fraction(1, 2)))


class TestMetaRough:
    def hospital_space(self):
        u = Universe(tuple(f"x{i}" for i in range(1, 6)))
        part = Partition.from_blocks(u, [["x1", "x2"], ["x3", "x4"], ["x5"]])
        return u, RoughObjectSpace(part)

    def test_policy_example(self):
        u, space = self.hospital_space()
        definable = [r for r in space.objects if boundary_cardinality(r) == 0]
        assert len(definable) == 8
        family = [r for r in definable if r.lower.contains("x5")]
        assert len(family) == 4
        lower, upper = metarough(space, family)
        assert lower == ()
        assert {(r.lower.indices, r.upper.indices) for r in upper} == {
            (r.lower.indices, r.upper.indices) for r in definable
        }

    def test_identity_descriptor(self):
        u = Universe(("a", "b", "c"))
        part = Partition.from_blocks(u, [["a", "b"], ["c"]])
        space = RoughObjectSpace(part, descriptor=lambda r: (r.lower.indices, r.upper.indices))
        family = list(space.objects[:3])
        lower, upper = metarough(space, family)
        assert list(lower) == list(upper) == sorted(family, key=lambda p: (sorted(p.lower.indices), sorted(p.upper.indices)))

    def test_sandwich_exhaustive_small(self):
        rng = random.Random(71)
        u = Universe(("a", "b", "c", "d"))
        part = Partition.from_blocks(u, [["a", "b"], ["c"], ["d"]])
        space = RoughObjectSpace(part, descriptor=lambda r: len(r.upper) % 2)
        objs = list(space.objects)
        for _ in range(20):
            family = [r for r in objs if rng.random() < 0.5]
            lower, upper = metarough(space, family)
            keys = {(r.lower.indices, r.upper.indices) for r in family}
            assert {(r.lower.indices, r.upper.indices) for r in lower} <= keys
            assert keys <= {(r.lower.indices, r.upper.indices) for r in upper}

    def test_enumeration_matches_direct_powerset(self):
        rng = random.Random(73)
        for _ in range(10):
            u = random_universe(rng, 8, min_size=1)
            part = random_partition(rng, u)
            space = RoughObjectSpace(part)
            direct = set()
            for bits in itertools.product((0, 1), repeat=u.size):
                target = Subset(u, frozenset(i for i, b in enumerate(bits) if b))
                pair = pawlak_pair(part, target)
                direct.add((pair.lower.indices, pair.upper.indices))
            assert {(r.lower.indices, r.upper.indices) for r in space.objects} == direct
            assert len(space.objects) <= 2 ** u.size

    def test_foreign_pair_rejected(self):
        u, space = self.hospital_space()
        foreign = pawlak_pair(Partition.discrete(u), u.subset(["x1"]))
        # a singleton-block pair ({x1}, {x1}) is not a rough object of the coarser space
        with pytest.raises(ValueError):
            metarough(space, [foreign])

    def test_universe_guard(self):
        u = Universe(tuple(f"e{i}" for i in range(13)))
        with pytest.raises(GuardError):
            RoughObjectSpace(Partition.discrete(u))
