"""Acceptance suite: one test per criterion, each printing a PASS line once its
assertions hold.  Tolerances are pinned here: exact set/rational equality for
counting models, 1e-9 per component for unit-interval degrees, 1e-3 for the
quoted entropy value.
"""

import math
import random
from fractions import Fraction

from conftest import random_partition, random_subset, random_universe
from roughkit import approx as ap
from roughkit import decision as dc
from roughkit import multiview as mv
from roughkit import structures as st
from roughkit import valued as vl
from roughkit.cli import main
from roughkit.foundation import BinaryRel, InformationTable, Partition, Universe, indiscernibility
from roughkit.granulation import (
    DistanceMatrix,
    IntervalData,
    MetricSpaceData,
    SimilarityMatrix,
    granule_family,
    make_neighborhoods,
    maximal_tolerance_classes,
)
from roughkit.hyper import ParamFamily, hyper_family_from_table, param_family_approx, soft_rough, superhyper_approx, superhyper_lift

DEG_TOL = 1e-9
ENT_TOL = 1e-3


def report(number, text):
    print(f"[criterion {number:2d}] PASS {text}")


def close(a, b, tol=DEG_TOL):
    return abs(a - b) <= tol


def u_range(prefix, n):
    return Universe(tuple(f"{prefix}{i}" for i in range(1, n + 1)))


def test_criterion_01_pawlak_triage(triage_partition, flu_target):
    pair = ap.pawlak_pair(triage_partition, flu_target)
    assert pair.lower.ids() == ("p3", "p4")
    assert pair.upper.ids() == ("p1", "p2", "p3", "p4")
    assert pair.boundary.ids() == ("p1", "p2")
    report(1, "Pawlak triage fixture exact")


def test_criterion_02_dtrs_thresholds():
    alpha, beta = dc.dtrs_thresholds(dc.LossTable.from_sequence([0, 5, 30, 100, 10, 0]))
    assert alpha == Fraction(18, 19)
    assert beta == Fraction(2, 7)
    report(2, "DTRS thresholds 18/19 and 2/7 exact")


def test_criterion_03_vprs():
    u = u_range("a", 10)
    part = Partition.from_blocks(u, [[f"a{i}" for i in range(1, 6)], ["a6", "a7", "a8"], ["a9", "a10"]])
    rep = ap.regions(ap.ratio_approx(part, u.subset(["a1", "a2", "a3", "a4", "a9"]), ap.Vprs(Fraction(1, 5))))
    assert rep.regions.pos.ids() == tuple(f"a{i}" for i in range(1, 6))
    assert rep.regions.neg.ids() == ("a6", "a7", "a8")
    assert rep.regions.bnd.ids() == ("a9", "a10")
    rng = random.Random(101)
    for _ in range(200):
        uu = random_universe(rng)
        pp = random_partition(rng, uu)
        xx = random_subset(rng, uu)
        assert ap.ratio_approx(pp, xx, ap.Vprs(Fraction(0))).rough_equal(ap.pawlak_pair(pp, xx))
    report(3, "VPRS fixture exact; beta=0 equals Pawlak on 200 random instances")


def test_criterion_04_mgrs():
    u = u_range("p", 8)
    rels = mv.IndexedRelations.from_mapping(
        {
            "symptom": Partition.from_blocks(u, [["p1", "p2", "p3"], ["p4", "p5"], ["p6", "p7", "p8"]]),
            "test": Partition.from_blocks(u, [["p1", "p2", "p4", "p6"], ["p3", "p5", "p7", "p8"]]),
        }
    )
    x = u.subset(["p1", "p2", "p4", "p5"])
    opt = mv.mgrs(rels, x, "optimistic")
    assert opt.lower.ids() == ("p4", "p5")
    assert opt.upper.ids() == ("p1", "p2", "p3", "p4", "p5")
    pes = mv.mgrs(rels, x, "pessimistic")
    assert pes.lower.ids() == ()
    assert pes.upper == u.full()
    rng = random.Random(103)
    for _ in range(100):
        uu = random_universe(rng)
        pp = random_partition(rng, uu)
        xx = random_subset(rng, uu)
        single = mv.IndexedRelations.from_mapping({"r": pp})
        pw = ap.pawlak_pair(pp, xx)
        assert mv.mgrs(single, xx, "optimistic").rough_equal(pw)
        assert mv.mgrs(single, xx, "pessimistic").rough_equal(pw)
    report(4, "MGRS fixture exact; m=1 reduction on 100 random instances")


def test_criterion_05_ratio_schemes():
    u12 = u_range("a", 12)
    p12 = Partition.from_blocks(u12, [["a1", "a2", "a3", "a4"], ["a5", "a6", "a7", "a8", "a9"], ["a10", "a11", "a12"]])
    pair = ap.ratio_approx(p12, u12.subset([f"a{i}" for i in range(1, 8)]), ap.Probabilistic(Fraction(4, 5), Fraction(3, 10)))
    assert pair.lower.ids() == ("a1", "a2", "a3", "a4")
    assert pair.upper.ids() == tuple(f"a{i}" for i in range(1, 10))

    u8 = u_range("u", 8)
    p8 = Partition.from_blocks(u8, [["u1", "u2", "u3", "u4"], ["u5", "u6"], ["u7", "u8"]])
    local = ap.ratio_approx(p8, u8.subset(["u1", "u2", "u3", "u5"]), ap.Local(Fraction(3, 4), Fraction(1, 4)))
    assert local.lower.ids() == ("u1", "u2", "u3")
    assert local.upper.ids() == tuple(f"u{i}" for i in range(1, 7))

    u9 = u_range("p", 9)
    p9 = Partition.from_blocks(u9, [["p1", "p2", "p3"], ["p4", "p5", "p6", "p7"], ["p8", "p9"]])
    graded = ap.ratio_approx(p9, u9.subset(["p1", "p2", "p3", "p4", "p5"]), ap.Graded(1))
    assert graded.lower.ids() == ("p1", "p2", "p3")
    assert graded.upper.ids() == tuple(f"p{i}" for i in range(1, 8))

    u10 = Universe(tuple(str(i) for i in range(1, 11)))
    p10 = Partition.from_blocks(u10, [[str(i) for i in range(1, 6)], [str(i) for i in range(6, 11)]])
    x10 = u10.subset(["1", "2", "3", "4", "6"])
    ent = ap.ratio_approx(p10, x10, ap.Entropy(Fraction(3, 4), 0.55))
    assert ent.lower.ids() == ("1", "2", "3", "4")
    assert ent.upper == u10.full()
    h_b1 = ap.block_entropies(p10, x10)[0]
    recomputed = -0.8 * math.log(0.8) - 0.2 * math.log(0.2)
    assert close(h_b1, recomputed, 1e-12)
    assert close(h_b1, 0.5004, ENT_TOL)
    report(5, "probabilistic/local/graded fixtures exact; entropy regions exact, H within 1e-3")


def test_criterion_06_valued_fixtures():
    dom = vl.UnitInterval()
    # fuzzy customers
    uc = Universe(("c1", "c2", "c3"))
    rel = vl.ValuedRelation(uc, dom, ((1.0, 0.7, 0.3), (0.7, 1.0, 0.6), (0.3, 0.6, 1.0)))
    a = vl.ValuedSet(uc, dom, (0.9, 0.5, 0.2))
    lo, up = vl.fuzzy_rough(rel, a)
    assert all(close(x, y) for x, y in zip(lo.values, (0.5, 0.4, 0.2)))
    assert all(close(x, y) for x, y in zip(up.values, (0.9, 0.7, 0.5)))

    # uncertain servers, including the boundary degrees
    ux = Universe(("x1", "x2", "x3"))
    relx = vl.ValuedRelation(ux, dom, ((1.0, 0.7, 0.3), (0.7, 1.0, 0.5), (0.3, 0.5, 1.0)))
    res = vl.uncertain_approx(dom, relx, vl.ValuedSet(ux, dom, (0.9, 0.6, 0.2)))
    assert all(close(x, y) for x, y in zip(res.lower.values, (0.6, 0.5, 0.2)))
    assert all(close(x, y) for x, y in zip(res.upper.values, (0.9, 0.7, 0.5)))
    assert all(close(x, y) for x, y in zip(res.bnd.values, (0.4, 0.5, 0.5)))

    # intuitionistic fuzzy applicants, full table
    ua = Universe(("a", "b", "c"))
    if_lo, if_up = vl.if_rough(
        vl.IfRelation(
            ua,
            ((1.00, 0.70, 0.30), (0.70, 1.00, 0.50), (0.30, 0.50, 1.00)),
            ((0.00, 0.20, 0.60), (0.20, 0.00, 0.30), (0.60, 0.30, 0.00)),
        ),
        vl.IfSet(ua, (0.80, 0.40, 0.20), (0.10, 0.40, 0.70)),
    )
    want_lo = ((0.40, 0.40), (0.30, 0.50), (0.20, 0.70))
    want_up = ((0.80, 0.10), (0.70, 0.20), (0.40, 0.40))
    for i in range(3):
        assert close(if_lo.mu[i], want_lo[i][0]) and close(if_lo.gamma[i], want_lo[i][1])
        assert close(if_up.mu[i], want_up[i][0]) and close(if_up.gamma[i], want_up[i][1])

    # neutrosophic triage, all three blocks
    un = u_range("p", 5)
    pn = Partition.from_blocks(un, [["p1", "p2"], ["p3", "p4"], ["p5"]])
    an = {
        "p1": (0.80, 0.20, 0.10), "p2": (0.60, 0.40, 0.30), "p3": (0.30, 0.50, 0.40),
        "p4": (0.40, 0.30, 0.50), "p5": (0.10, 0.20, 0.80),
    }
    n_lo, n_up = vl.neutrosophic_approx(pn, an)
    for e, want in (("p1", (0.60, 0.20, 0.30)), ("p3", (0.30, 0.30, 0.50)), ("p5", (0.10, 0.20, 0.80))):
        assert all(close(x, y) for x, y in zip(n_lo[e], want))
    for e, want in (("p1", (0.80, 0.40, 0.10)), ("p3", (0.40, 0.50, 0.40)), ("p5", (0.10, 0.20, 0.80))):
        assert all(close(x, y) for x, y in zip(n_up[e], want))

    # plithogenic colors
    upl = u_range("u", 5)
    ppl = Partition.from_blocks(upl, [["u1", "u2"], ["u3", "u4"], ["u5"]])
    pdf = {
        "Red": [(0.90, 0.80), (0.60, 0.70), (0.10, 0.10), (0.20, 0.10), (0.30, 0.20)],
        "Orange": [(0.20, 0.10), (0.50, 0.40), (0.70, 0.60), (0.60, 0.50), (0.20, 0.30)],
        "Brown": [(0.10, 0.20), (0.20, 0.20), (0.40, 0.50), (0.50, 0.60), (0.80, 0.90)],
    }
    values = ("Red", "Orange", "Brown")
    data = vl.PlithogenicData(
        upl, values, tuple(tuple(pdf[v]) for v in values),
        (((0.0,), (0.2,), (0.8,)), ((0.2,), (0.0,), (0.3,)), ((0.8,), (0.3,), (0.0,))),
    )
    pl_lo, pl_up = vl.plithogenic_approx(ppl, data)
    checks = [
        ("Red", 0, (0.60, 0.70), (0.90, 0.80)),
        ("Orange", 0, (0.20, 0.10), (0.50, 0.40)),
        ("Brown", 2, (0.40, 0.50), (0.50, 0.60)),
    ]
    for value, row, want_lo_vec, want_up_vec in checks:
        k = values.index(value)
        assert all(close(x, y) for x, y in zip(pl_lo.pdf[k][row], want_lo_vec))
        assert all(close(x, y) for x, y in zip(pl_up.pdf[k][row], want_up_vec))

    # L-valued chain, exact
    chain = vl.ResiduatedChain((0, Fraction(1, 2), 1))
    ul = Universe(("u1", "u2", "u3"))
    h = Fraction(1, 2)
    relm = {
        ("u1", "u1"): 1, ("u1", "u2"): h, ("u1", "u3"): 0,
        ("u2", "u1"): h, ("u2", "u2"): 1, ("u2", "u3"): h,
        ("u3", "u1"): 0, ("u3", "u2"): h, ("u3", "u3"): 1,
    }
    l_lo, l_up = vl.lvalued_approx(chain, ul, {e: 1 for e in ul.elements}, relm, {"u1": h, "u2": 1, "u3": 0})
    assert (l_lo["u1"], l_up["u1"]) == (h, h)
    assert (l_lo["u2"], l_up["u2"]) == (0, 1)
    assert (l_lo["u3"], l_up["u3"]) == (0, h)
    report(6, "fuzzy/uncertain/IF/neutrosophic/plithogenic fixtures at 1e-9; L-valued exact")


def test_criterion_07_reduction_theorems():
    rng = random.Random(107)
    dom = vl.UnitInterval()
    for _ in range(100):
        u = random_universe(rng, 6)
        part = random_partition(rng, u)
        x = random_subset(rng, u)
        rel, a = vl.boolean_instance(u, part, x)
        res = vl.uncertain_approx(vl.BooleanDomain(), rel, a)
        pw = ap.pawlak_pair(part, x)
        assert frozenset(i for i, v in enumerate(res.lower.values) if v) == pw.lower.indices
        assert frozenset(i for i, v in enumerate(res.upper.values) if v) == pw.upper.indices
    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    for _ in range(100):
        u = random_universe(rng, 6)
        n = u.size
        rel = vl.ValuedRelation(u, dom, tuple(tuple(rng.choice(grid) for _ in range(n)) for _ in range(n)))
        a = vl.ValuedSet(u, dom, tuple(rng.choice(grid) for _ in range(n)))
        res = vl.uncertain_approx(dom, rel, a)
        lo, up = vl.fuzzy_rough(rel, a, "min", "kd")
        assert all(close(x, y) for x, y in zip(res.lower.values, lo.values))
        assert all(close(x, y) for x, y in zip(res.upper.values, up.values))
    for _ in range(100):
        u = random_universe(rng)
        part = random_partition(rng, u)
        x = random_subset(rng, u)
        res = dc.d_rough(part, x, Fraction(1), Fraction(0))
        pw = ap.pawlak_pair(part, x)
        assert res.regions.pos == pw.lower
        assert (res.regions.pos | res.regions.bnd) == pw.upper
    report(7, "uncertain-Boolean=Pawlak, uncertain-fuzzy=fuzzy, D-rough(1,0)=Pawlak on 100 cases each")


def test_criterion_08_family_fixtures():
    # MultiRough hospital
    u6 = u_range("p", 6)
    rels = mv.IndexedRelations.from_mapping(
        {
            "vitals": Partition.from_blocks(u6, [["p1", "p2"], ["p3", "p4"], ["p5", "p6"]]),
            "imaging": Partition.from_blocks(u6, [["p1", "p3"], ["p2", "p4"], ["p5", "p6"]]),
        }
    )
    pairs = mv.multirough(rels, u6.subset(["p1", "p3", "p4"]))
    assert pairs["vitals"].lower.ids() == ("p3", "p4") and pairs["vitals"].upper.ids() == ("p1", "p2", "p3", "p4")
    assert pairs["imaging"].lower.ids() == ("p1", "p3") and pairs["imaging"].upper.ids() == ("p1", "p2", "p3", "p4")

    # dynamic merchants
    um = u_range("m", 5)
    drels = mv.IndexedRelations.from_mapping(
        {
            "t1": Partition.from_blocks(um, [["m1", "m2", "m3"], ["m4", "m5"]]),
            "t2": Partition.from_blocks(um, [["m1"], ["m2", "m3"], ["m4"], ["m5"]]),
        }
    )
    dpairs = mv.multirough(drels, um.subset(["m1", "m4"]))
    assert dpairs["t1"].lower.ids() == () and dpairs["t1"].upper == um.full()
    assert dpairs["t2"].lower.ids() == ("m1", "m4") and dpairs["t2"].is_definable()

    # tree nodes
    ut = u_range("p", 6)
    trels = mv.IndexedRelations.from_mapping(
        {
            "symptoms": Partition.from_blocks(ut, [["p1", "p2"], ["p3", "p5"], ["p4"], ["p6"]]),
            "imaging": Partition.from_blocks(ut, [["p1", "p2", "p3"], ["p4", "p5", "p6"]]),
        }
    )
    tpairs = mv.multirough(trels, ut.subset(["p1", "p2", "p3"]))
    assert tpairs["symptoms"].lower.ids() == ("p1", "p2")
    assert tpairs["symptoms"].upper.ids() == ("p1", "p2", "p3", "p5")
    assert tpairs["imaging"].lower.ids() == ("p1", "p2", "p3") and tpairs["imaging"].is_definable()

    # refined chain with nesting report
    uf = u_range("u", 6)
    chain = mv.IndexedRelations.from_mapping(
        {
            "card+merchant": Partition.from_blocks(uf, [["u1", "u2"], ["u3"], ["u4", "u5"], ["u6"]]),
            "card": Partition.from_blocks(uf, [["u1", "u2", "u3"], ["u4", "u5"], ["u6"]]),
            "country": Partition.from_blocks(uf, [["u1", "u2", "u3", "u4", "u5"], ["u6"]]),
        }
    )
    rpairs, nest = mv.refined_chain(chain, uf.subset(["u1", "u2"]))
    assert rpairs["card+merchant"].lower.ids() == ("u1", "u2") and rpairs["card+merchant"].upper.ids() == ("u1", "u2")
    assert rpairs["card"].upper.ids() == ("u1", "u2", "u3")
    assert rpairs["country"].upper.ids() == ("u1", "u2", "u3", "u4", "u5")
    assert nest.ok

    # persistent churn
    uc = u_range("c", 5)
    names = uc.elements
    given = {("c1", "c2"): Fraction(3, 10), ("c1", "c3"): Fraction(9, 10), ("c2", "c3"): Fraction(8, 10),
             ("c3", "c4"): Fraction(4, 10), ("c4", "c5"): Fraction(6, 10)}
    rows = [[Fraction(2)] * 5 for _ in range(5)]
    for i in range(5):
        rows[i][i] = Fraction(0)
    for (a, b), v in given.items():
        i, j = names.index(a), names.index(b)
        rows[i][j] = rows[j][i] = v
    family = mv.ScaleFamily(DistanceMatrix(uc, tuple(tuple(r) for r in rows)), (Fraction(1, 2), Fraction(9, 10)))
    ppairs = mv.persistent(family, uc.subset(["c1", "c2"]))
    assert ppairs["1/2"].lower.ids() == ("c1", "c2") and ppairs["1/2"].upper.ids() == ("c1", "c2")
    assert ppairs["9/10"].lower.ids() == () and ppairs["9/10"].upper.ids() == ("c1", "c2", "c3")

    # graphic and cluster views
    ug = u_range("p", 6)
    graph = mv.AttributeGraph(
        ("Inc", "Debt", "Cred"),
        (
            Partition.from_labels(ug, ["H", "H", "H", "L", "L", "L"]),
            Partition.from_labels(ug, ["L", "L", "H", "H", "L", "L"]),
            Partition.from_labels(ug, ["G", "F", "P", "P", "F", "G"]),
        ),
        frozenset([frozenset(["Inc", "Debt"]), frozenset(["Debt", "Cred"])]),
    )
    gx = ug.subset(["p1", "p2", "p6"])
    gpairs = mv.graphic_rough(graph, [["Inc", "Debt"], ["Inc", "Debt", "Cred"]], gx)
    assert gpairs["Inc+Debt"].lower.ids() == ("p1", "p2")
    assert gpairs["Inc+Debt"].upper.ids() == ("p1", "p2", "p5", "p6")
    assert gpairs["Inc+Debt+Cred"].lower == gx and gpairs["Inc+Debt+Cred"].upper == gx

    ua = u_range("a", 6)
    cluster_graph = mv.AttributeGraph(
        ("Inc", "Debt", "Late", "Score"),
        (
            Partition.from_labels(ua, ["H", "H", "H", "L", "L", "L"]),
            Partition.from_labels(ua, ["L", "L", "H", "H", "L", "L"]),
            Partition.from_labels(ua, ["N", "N", "Y", "Y", "N", "Y"]),
            Partition.from_labels(ua, ["G", "G", "P", "P", "G", "P"]),
        ),
        frozenset(),
    )
    ax = ua.subset(["a3", "a4", "a6"])
    cpairs = mv.graphic_rough(cluster_graph, [["Inc", "Debt"], ["Late", "Score"]], ax)
    assert cpairs["Inc+Debt"].lower.ids() == ("a3", "a4")
    assert cpairs["Inc+Debt"].upper.ids() == ("a3", "a4", "a5", "a6")
    assert cpairs["Late+Score"].lower == ax and cpairs["Late+Score"].upper == ax

    # metarough policy space
    u5 = Universe(tuple(f"x{i}" for i in range(1, 6)))
    space = mv.RoughObjectSpace(Partition.from_blocks(u5, [["x1", "x2"], ["x3", "x4"], ["x5"]]))
    definable = [r for r in space.objects if mv.boundary_cardinality(r) == 0]
    assert len(definable) == 8
    family_c = [r for r in definable if r.lower.contains("x5")]
    meta_lower, meta_upper = mv.metarough(space, family_c)
    assert meta_lower == ()
    assert {(r.lower.indices, r.upper.indices) for r in meta_upper} == {
        (r.lower.indices, r.upper.indices) for r in definable
    }
    report(8, "MultiRough/dynamic/tree/refined/persistent/graphic/cluster/MetaRough fixtures exact")


def test_criterion_09_parameterized_fixtures():
    # HyperRough loans, both parameter tuples
    loan = InformationTable.from_rows(
        ("Employment", "Credit", "Income"),
        [
            ("x1", "Stable", "Good", "High"), ("x2", "Stable", "Good", "Low"),
            ("x3", "Stable", "Bad", "High"), ("x4", "Stable", "Bad", "Low"),
            ("x5", "Unstable", "Good", "Low"), ("x6", "Unstable", "Bad", "Low"),
        ],
    )
    fam = hyper_family_from_table(loan, ["Employment", "Credit", "Income"])
    hpairs = param_family_approx(fam, indiscernibility(loan, ["Employment", "Credit"]))
    assert hpairs["Stable|Good|High"].lower.ids() == () and hpairs["Stable|Good|High"].upper.ids() == ("x1", "x2")
    assert hpairs["Unstable|Good|Low"].lower.ids() == ("x5",) and hpairs["Unstable|Good|Low"].is_definable()

    # soft apartments
    u6 = u_range("u", 6)
    soft = ParamFamily.from_mapping(u6, "soft", {"e1": ["u1", "u3", "u5"], "e2": ["u1", "u2", "u4"], "e3": ["u2", "u5", "u6"]})
    spair = soft_rough(soft, u6.subset(["u1", "u2", "u4"]))
    assert spair.lower.ids() == ("u1", "u2", "u4") and spair.upper == u6.full()

    # soft expert smartphones
    up4 = u_range("p", 4)
    expert = ParamFamily.from_mapping(
        up4, "expert",
        {"Battery|Alice|1": ["p1", "p2"], "Camera|Bob|1": ["p2", "p3"], "Price|Alice|1": ["p1", "p3"], "Battery|Bob|0": ["p3"]},
    )
    epair = soft_rough(expert, up4.subset(["p2", "p3"]))
    assert epair.lower.ids() == ("p2", "p3") and epair.upper.ids() == ("p1", "p2", "p3")

    # SuperHyperRough grocery bundles
    ux = Universe(("m_o", "m_r", "b_w", "b_g"))
    lift = superhyper_lift(Partition.from_blocks(ux, [["m_o", "m_r"], ["b_w", "b_g"]]), 1)
    c_value = [frozenset(["m_o", "b_g"]), frozenset(["m_r", "b_g"]), frozenset(["m_o", "b_w"])]
    lower, upper = superhyper_approx(c_value, lift)
    bundles = {frozenset(["m_o", "b_g"]), frozenset(["m_r", "b_g"]), frozenset(["m_o", "b_w"]), frozenset(["m_r", "b_w"])}
    assert len(bundles) == 4 and not (lower & bundles) and bundles <= upper

    # covering tight/loose churn
    ucov = u_range("c", 6)
    cov = granule_family("covering", universe=ucov, blocks=[["c1", "c2", "c3"], ["c3", "c4"], ["c4", "c5"], ["c5"], ["c4", "c6"]])
    xc = ucov.subset(["c4", "c5"])
    tight = ap.block_approx(cov, xc, "tight")
    loose = ap.block_approx(cov, xc, "loose")
    assert tight.lower.ids() == ("c4", "c5") and tight.upper.ids() == ("c4", "c5", "c6")
    assert loose.lower.ids() == ("c5",) and loose.upper.ids() == ("c3", "c4", "c5", "c6")

    # near rough purchases
    uo = u_range("o", 5)
    probes = {"o1": (1.0, 100), "o2": (1.5, 98), "o3": (4.0, 105), "o4": (4.5, 108), "o5": (7.0, 160)}
    near_op = make_neighborhoods("descriptive_tolerance", data=MetricSpaceData.from_mapping(uo, probes, 2), epsilon=3.1)
    classes = maximal_tolerance_classes(near_op)
    assert classes.block_id_lists() == (("o1", "o2"), ("o3", "o4"), ("o5",))
    near = ap.block_approx(classes, uo.subset(["o2", "o3"]), "generated")
    assert near.lower.ids() == () and near.upper.ids() == ("o1", "o2", "o3", "o4")

    # directed tutor concepts
    ud = Universe(("F", "R", "P", "C"))
    outs = {"F": "FRP", "R": "RPC", "P": "FPC", "C": "FRC"}
    rel = BinaryRel.from_id_pairs(ud, [(a, b) for a, bs in outs.items() for b in bs])
    directed = ap.block_approx(granule_family("directed", relation=rel), ud.subset(["F", "R", "P"]), "generated")
    assert directed.lower.ids() == ("F", "R", "P") and directed.upper == ud.full()

    # sequential triage
    us = u_range("p", 6)
    seq = ap.sequential_approx(
        [
            Partition.from_blocks(us, [["p1", "p2", "p3"], ["p4", "p5", "p6"]]),
            Partition.from_blocks(us, [["p1", "p2"], ["p3", "p4"], ["p5", "p6"]]),
        ],
        us.subset(["p1", "p2", "p3"]),
    )
    assert seq.lower.ids() == ("p1", "p2") and seq.upper.ids() == ("p1", "p2", "p3", "p4")

    # s-transfer compliance
    ue = u_range("e", 6)
    strans = ap.s_transfer_approx(
        Partition.from_blocks(ue, [["e1", "e2", "e5"], ["e3", "e4"], ["e6"]]),
        {"e2": "e1", "e4": "e3", "e5": "e2"},
        ue.subset(["e1", "e3"]),
    )
    assert strans.x_f.ids() == ("e2", "e4")
    assert strans.pair.lower.ids() == ("e3", "e4")
    assert strans.pair.upper.ids() == ("e1", "e2", "e3", "e4", "e5")
    assert strans.pair.boundary.ids() == ("e1", "e2", "e5")

    # ContraRough reports
    ur = u_range("r", 6)
    c_r = [[1 if i != j else 0 for j in range(6)] for i in range(6)]
    for i, j, v in [(0, 4, Fraction(3, 20)), (1, 2, Fraction(1, 10)), (3, 5, Fraction(1, 20))]:
        c_r[i][j] = c_r[j][i] = v
    kern = ap.ContraKernels(
        ur, tuple(tuple(r) for r in c_r),
        (Fraction(1, 20), Fraction(1, 4), Fraction(7, 20), Fraction(11, 20), Fraction(2, 25), Fraction(3, 4)),
        Fraction(1, 5), Fraction(1, 10), Fraction(2, 5),
    )
    contra = ap.regions(ap.two_tier_approx(ap.contra_from_kernels(kern)))
    assert contra.regions.pos.ids() == ("r1", "r5")
    assert contra.regions.bnd.ids() == ("r2", "r3")
    assert contra.regions.neg.ids() == ("r4", "r6")

    # IndetermRough flu
    ui = u_range("p", 6)
    indet = ap.two_tier_approx(
        ap.TwoTierData(
            make_neighborhoods("from_partition", partition=Partition.from_blocks(ui, [["p1", "p2"], ["p3", "p4"], ["p5"], ["p6"]])),
            make_neighborhoods("from_partition", partition=Partition.from_blocks(ui, [["p1", "p2", "p5"], ["p3", "p4", "p6"]])),
            ui.subset(["p1", "p2"]),
            ui.subset(["p1", "p2", "p5"]),
        )
    )
    assert indet.lower.ids() == ("p1", "p2") and indet.upper.ids() == ("p1", "p2", "p5")

    # HesiRough fraud
    uh = u_range("t", 5)
    base_pairs = [(f"t{i}", f"t{i}") for i in range(1, 6)]
    definite = base_pairs + [("t1", "t2"), ("t2", "t1"), ("t4", "t5"), ("t5", "t4")]
    possible = definite + [("t1", "t3"), ("t3", "t1"), ("t2", "t3"), ("t3", "t2")]
    hes = ap.regions(
        ap.two_tier_approx(
            ap.TwoTierData(
                make_neighborhoods("successor", relation=BinaryRel.from_id_pairs(uh, definite)),
                make_neighborhoods("successor", relation=BinaryRel.from_id_pairs(uh, possible)),
                uh.subset(["t1", "t2"]),
                uh.subset(["t1", "t2", "t3"]),
            )
        )
    )
    assert hes.regions.pos.ids() == ("t1", "t2")
    assert hes.regions.bnd.ids() == ("t3",)
    assert hes.regions.neg.ids() == ("t4", "t5")

    # D-rough loans
    udr = u_range("u", 6)
    dres = dc.d_rough(
        Partition.from_blocks(udr, [["u1", "u2"], ["u3", "u4", "u5"], ["u6"]]),
        udr.subset(["u1", "u3", "u4"]), Fraction(3, 5), Fraction(2, 5),
    )
    assert dres.description["u1"].mass({"+"}) == Fraction(1, 2)
    assert dres.description["u3"].mass({"+"}) == Fraction(2, 3)
    assert dres.description["u6"].mass({"+"}) == 0
    assert dres.regions.pos.ids() == ("u3", "u4", "u5")
    assert dres.regions.bnd.ids() == ("u1", "u2")
    assert dres.regions.neg.ids() == ("u6",)

    # weighted triage
    wt = InformationTable.from_rows(
        ("F", "Cg", "Fa", "D"),
        [
            ("p1", "H", "Y", "Y", "Flu"), ("p2", "H", "Y", "Y", "Flu"), ("p3", "H", "Y", "N", "Flu"),
            ("p4", "H", "N", "Y", "NonFlu"), ("p5", "N", "N", "N", "NonFlu"), ("p6", "N", "N", "N", "NonFlu"),
        ],
        decision="D",
    )
    wres = dc.weighted_rough(wt, ["F", "Cg", "Fa"], "D", wt.universe.subset(["p1", "p2", "p3"]), 1)
    assert wres.significance == {"F": 0, "Cg": Fraction(1, 2), "Fa": 0}
    assert wres.weights["Cg"] == 1
    assert wres.lower.ids() == ("p1", "p2", "p3")

    # DP hotspots at both robustness levels
    uz = Universe(("z1", "z2", "z3"))
    p_lo = {"z1": "0.95", "z2": "0.92", "z3": "0.08"}
    p_hi = {"z1": "0.98", "z2": "0.97", "z3": "0.40"}
    dp1 = ap.dp_robust(uz, p_lo, p_hi, "0.10")
    assert dp1.lower.ids() == ("z1", "z2") and dp1.upper.ids() == ("z1", "z2")
    dp2 = ap.dp_robust(uz, p_lo, p_hi, "0.60")
    assert dp2.upper.ids() == ("z1", "z2", "z3")

    # interval-valued blood pressure
    uiv = u_range("p", 5)
    ivals = IntervalData(uiv, ("SBP",), (((118, 125), (128, 138), (135, 150), (148, 160), (155, 170)),))
    iv_op = make_neighborhoods("interval_overlap", data=ivals)
    assert iv_op.neighborhood("p3").ids() == ("p2", "p3", "p4")
    iv_pair = ap.pointwise_approx(iv_op, uiv.subset(["p3", "p4", "p5"]))
    assert iv_pair.lower.ids() == ("p4", "p5") and iv_pair.upper.ids() == ("p2", "p3", "p4", "p5")

    # tolerance spending
    utol = u_range("c", 6)
    spend = {"c1": 2, "c2": 3, "c3": 3, "c4": 4, "c5": 5, "c6": 5}
    tol_op = make_neighborhoods("metric_ball", data=MetricSpaceData.from_mapping(utol, {k: (v,) for k, v in spend.items()}, 1), delta=1)
    tol_pair = ap.pointwise_approx(tol_op, utol.subset(["c4", "c5", "c6"]))
    assert tol_pair.lower.ids() == ("c5", "c6") and tol_pair.upper.ids() == ("c2", "c3", "c4", "c5", "c6")

    # similarity loans
    usim = Universe(("a", "b", "c", "d"))
    sim = SimilarityMatrix(
        usim,
        ((1, Fraction(9, 10), Fraction(7, 10), Fraction(1, 5)),
         (Fraction(9, 10), 1, Fraction(4, 5), Fraction(3, 10)),
         (Fraction(7, 10), Fraction(4, 5), 1, Fraction(3, 5)),
         (Fraction(1, 5), Fraction(3, 10), Fraction(3, 5), 1)),
    )
    sim_op = make_neighborhoods("similarity_threshold", matrix=sim, tau=Fraction(4, 5))
    assert sim_op.neighborhood("a").ids() == ("a", "b")
    assert sim_op.neighborhood("b").ids() == ("a", "b", "c")
    assert sim_op.neighborhood("d").ids() == ("d",)
    sim_pair = ap.pointwise_approx(sim_op, usim.subset(["a", "b"]))
    assert sim_pair.lower.ids() == ("a",) and sim_pair.upper.ids() == ("a", "b", "c")

    # preorder severity: lower matches the example; the upper follows the
    # literal up-set definition (see ledger: the displayed {3,4,5} contradicts it)
    upre = Universe(tuple(str(i) for i in range(1, 6)))
    pre_rel = BinaryRel.from_predicate(upre, lambda a, b: int(a) <= int(b))
    pre_pair = ap.pointwise_approx(make_neighborhoods("preorder_up", relation=pre_rel), upre.subset(["4", "5"]))
    assert pre_pair.lower.ids() == ("4", "5")
    assert pre_pair.upper == upre.full()
    down_pair = ap.pointwise_approx(make_neighborhoods("preorder_down", relation=pre_rel), upre.subset(["4", "5"]))
    assert down_pair.lower.ids() == () and down_pair.upper.ids() == ("4", "5")

    # complex coding of fraud blocks
    ucx = u_range("t", 7)
    code = ap.ComplexCode.from_pair(
        ap.pawlak_pair(Partition.from_blocks(ucx, [["t1", "t2"], ["t3", "t4", "t5"], ["t6"], ["t7"]]), ucx.subset(["t2", "t4", "t6"]))
    )
    assert code.label("t6") == "1+i"
    assert all(code.label(f"t{i}") == "i" for i in range(1, 6))
    assert code.label("t7") == "0"
    report(9, "all parameterized fixtures exact (preorder upper per the literal definition)")


def test_criterion_10_structures_fixtures():
    # rough topology verdicts plus interior/closure identities
    ul = u_range("l", 6)
    rt = st.rough_topology(Partition.from_blocks(ul, [["l1", "l2"], ["l3", "l4"], ["l5", "l6"]]))
    assert rt.is_open(ul.subset(["l1", "l2", "l3", "l4"]))
    assert not rt.is_open(ul.subset(["l1", "l3"]))
    rng = random.Random(109)
    for _ in range(100):
        u = random_universe(rng)
        part = random_partition(rng, u)
        a = random_subset(rng, u)
        topo = st.rough_topology(part)
        pw = ap.pawlak_pair(part, a)
        assert topo.interior(a) == pw.lower and topo.closure(a) == pw.upper

    # rough graph congestion
    vg = Universe(("A", "B", "C", "D"))
    edges = tuple(frozenset(e) for e in (("A", "B"), ("B", "C"), ("C", "D"), ("A", "D")))
    probe = st.GraphData(vg, edges)
    g = st.GraphData(vg, edges, edge_partition=Partition.from_blocks(probe.edge_universe, [["A-B", "B-C"], ["C-D", "A-D"]]))
    gp = st.rough_graph(g, g.edge_universe.subset(["A-B", "C-D"]))
    assert gp.lower.ids() == () and gp.upper == g.edge_universe.full()

    # soft rough graph suspicious users
    v5 = Universe(("1", "2", "3", "4", "5"))
    edges5 = tuple(frozenset(e) for e in (("1", "2"), ("1", "3"), ("2", "3"), ("2", "4"), ("3", "4"), ("4", "5")))
    probe5 = st.GraphData(v5, edges5)
    sg = st.GraphData(
        v5, edges5,
        vertex_family=ParamFamily.from_mapping(v5, "soft", {"a1": ["2", "3"], "a2": ["3", "4"], "a3": ["4", "5"]}),
        edge_family=ParamFamily.from_mapping(probe5.edge_universe, "soft", {"a1": ["2-3"], "a2": ["3-4"], "a3": ["4-5"]}),
    )
    sres = st.soft_rough_graph(sg, v5.subset(["3", "4"]))
    assert sres.lower_vertices.ids() == ("3", "4") and sres.lower_edges == {"3-4"}
    assert sres.upper_vertices.ids() == ("2", "3", "4", "5") and sres.upper_edges == {"3-4"}

    # rough group and subgroup
    m8 = st.MagmaTable.cyclic(8)
    rep8 = st.rough_group_check(m8, Partition.from_labels(m8.carrier, [int(e) % 2 for e in m8.carrier.elements]), m8.carrier.subset(["0", "2", "6"]))
    assert rep8.is_rough_group and rep8.closure_in_upper and rep8.associative_on_upper
    assert rep8.upper.ids() == ("0", "2", "4", "6") and rep8.inverses["2"] == "6"
    m12 = st.MagmaTable.cyclic(12)
    rep12 = st.rough_subgroup_check(
        m12, Partition.from_labels(m12.carrier, [int(e) % 4 for e in m12.carrier.elements]),
        m12.carrier.subset(["0", "4"]), m12.carrier.subset(["4"]),
    )
    assert rep12.is_rough_group and rep12.identity == "0" and rep12.inverses["4"] == "8"

    # matroids: queries and partition circuits
    ui = Universe(("a1", "a2", "b1", "b2", "c1"))
    part = Partition.from_blocks(ui, [["a1", "a2"], ["b1", "b2"], ["c1"]])
    mx = st.rough_matroid(part, ui.subset(["a1", "a2", "c1"]))
    assert mx.is_independent(ui.subset(["a1", "a2", "c1", "b1"]))
    assert not mx.is_independent(ui.subset(["b1", "b2"]))
    m0 = st.rough_matroid(part, ui.empty())
    assert [c.ids() for c in m0.circuits()] == [("a1", "a2"), ("b1", "b2"), ("c1",)]

    # simplicial company
    vs = Universe(("A", "B", "C", "D", "E", "F"))
    spair = st.simplicial_rough(
        st.ComplexData(vs, (frozenset("ABC"), frozenset("CDE"), frozenset("ABF"))), vs.subset(["A", "C", "D"])
    )
    assert spair.lower.ids() == ("C",) and spair.upper.ids() == ("A", "B", "C", "D", "E")

    # functorial stores
    fx = Universe(("p1", "p2", "p3", "p4"))
    fy = Universe(("q1", "q2", "q3"))
    cat = st.CategoryData(
        objects=("X", "Y"),
        arrows=(st.Arrow("id_X", "X", "X"), st.Arrow("id_Y", "Y", "Y"), st.Arrow("f", "X", "Y")),
        identities={"X": "id_X", "Y": "id_Y"},
        composition={("id_X", "id_X"): "id_X", ("id_Y", "id_Y"): "id_Y", ("id_X", "f"): "f", ("f", "id_Y"): "f"},
        fibers={"X": fx, "Y": fy},
        transports={
            "id_X": {e: e for e in fx.elements},
            "id_Y": {e: e for e in fy.elements},
            "f": {"p1": "q1", "p2": "q1", "p3": "q2", "p4": "q3"},
        },
        relations={"X": Partition.from_blocks(fx, [["p1", "p2"], ["p3", "p4"]]),
                   "Y": Partition.from_blocks(fy, [["q1"], ["q2", "q3"]])},
        targets={"X": fx.subset(["p2", "p3"]), "Y": fy.subset(["q3"])},
    )
    fres = st.functorial_rough(cat)
    assert fres.pairs["X"].lower.ids() == () and fres.pairs["X"].upper == fx.full()
    assert fres.pairs["Y"].lower.ids() == () and fres.pairs["Y"].upper.ids() == ("q2", "q3")
    assert fres.relation_compatible

    # constant sheaf corridor
    ground = Universe(("N", "C", "S"))
    sheaf = st.SheafData(st.FiniteTopology.from_id_sets(ground, [["C"], ["N", "C"], ["C", "S"], ["N", "C", "S"]]), ("G", "S", "R"))
    sh_pair = st.sheaf_rough_constant(sheaf, [(("N", "C"), "S"), (("C", "S"), "S")])
    assert sh_pair.lower.ids() == ()
    assert set(sh_pair.upper.ids()) == {"(C)@S", "(N,C)@S", "(C,S)@S", "(N,C,S)@S"}
    report(10, "topology/graph/group/matroid/simplicial/functorial/sheaf fixtures exact")


def test_criterion_11_global_property_suite():
    rng = random.Random(111)
    cases = 0
    for _ in range(250):
        # partition-based granulation: sandwich, duality, monotonicity, regions
        u = random_universe(rng)
        part = random_partition(rng, u)
        x = random_subset(rng, u)
        z = x | random_subset(rng, u)
        pair = ap.pawlak_pair(part, x)
        assert pair.lower.issubset(x) and x.issubset(pair.upper)
        dual = ap.pawlak_pair(part, x.complement())
        assert pair.upper == dual.lower.complement()
        bigger = ap.pawlak_pair(part, z)
        assert pair.lower.issubset(bigger.lower) and pair.upper.issubset(bigger.upper)
        rep = ap.regions(pair)
        assert (rep.regions.pos | rep.regions.bnd | rep.regions.neg) == u.full()
        assert isinstance(rep.accuracy, Fraction)
        cases += 1
    for _ in range(250):
        # reflexive tolerance granulation from a random symmetric relation
        u = random_universe(rng)
        pairs = {(i, i) for i in range(u.size)}
        for i in range(u.size):
            for j in range(i + 1, u.size):
                if rng.random() < 0.4:
                    pairs |= {(i, j), (j, i)}
        op = make_neighborhoods("successor", relation=BinaryRel(u, frozenset(pairs)))
        x = random_subset(rng, u)
        z = x | random_subset(rng, u)
        pair = ap.pointwise_approx(op, x)
        assert pair.lower.issubset(x) and x.issubset(pair.upper)
        dual = ap.pointwise_approx(op, x.complement())
        assert pair.upper == dual.lower.complement()
        bigger = ap.pointwise_approx(op, z)
        assert pair.lower.issubset(bigger.lower) and pair.upper.issubset(bigger.upper)
        cases += 1
    for _ in range(250):
        # ratio schemes stay exact-rational and the regions cover the universe
        u = random_universe(rng)
        part = random_partition(rng, u)
        x = random_subset(rng, u)
        mu = dc.rough_membership(part, x)
        assert all(isinstance(v, Fraction) for v in mu.values())
        beta = Fraction(rng.randint(0, 4), 10)
        pair = ap.ratio_approx(part, x, ap.Vprs(beta))
        rep = ap.regions(pair)
        assert (rep.regions.pos | rep.regions.bnd | rep.regions.neg) == u.full()
        assert isinstance(rep.accuracy, Fraction)
        alpha = Fraction(rng.randint(6, 10), 10)
        beta2 = Fraction(rng.randint(0, 5), 10)
        prob = ap.ratio_approx(part, x, ap.Probabilistic(alpha, beta2))
        assert prob.lower.issubset(prob.upper)
        cases += 1
    for _ in range(250):
        # covering families: generated unions nest inside the loose upper
        u = random_universe(rng, 7, min_size=2)
        blocks = [[u.elements[i], u.elements[rng.randrange(u.size)]] for i in range(u.size)]
        fam = granule_family("covering", universe=u, blocks=blocks)
        x = random_subset(rng, u)
        z = x | random_subset(rng, u)
        tight = ap.block_approx(fam, x, "tight")
        loose = ap.block_approx(fam, x, "loose")
        generated = ap.block_approx(fam, x, "generated")
        dual_tight = ap.block_approx(fam, x.complement(), "tight")
        assert tight.upper == dual_tight.lower.complement()
        assert loose.lower.issubset(x) and x.issubset(loose.upper)
        assert generated.upper == ap.block_approx(fam, z, "generated").upper.intersection(generated.upper)
        cases += 1
    assert cases == 1000
    report(11, f"{cases} randomized property cases, zero failures")


def test_criterion_12_verify_replays_fixture_corpus(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "0 failed" in out
    passed = int(out.strip().splitlines()[-1].split()[0])
    assert passed >= 40
    report(12, f"roughkit verify exits 0 with {passed} fixtures passing")
