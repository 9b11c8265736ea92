"""Model dispatch shared by the CLI and the fixture replayer.

A payload is a JSON-able dict describing inputs (tables, partitions,
descriptors, parameters, targets).  Each registered model turns a payload
into a deterministic report dict: element sets as id lists in universe
order, rationals as "num/den" strings, degrees as floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Mapping

from roughkit import approx, decision, granulation, hyper, multiview, structures, valued
from roughkit.foundation import (
    BinaryRel,
    InformationTable,
    Partition,
    Subset,
    Universe,
    format_rational,
    indiscernibility,
    parse_rational,
    relation_properties,
)


def _ids(subset: Subset) -> list[str]:
    return list(subset.ids())


def _rat(q: Fraction) -> str:
    return format_rational(q)


def _pair_report(pair: approx.ApproximationPair, with_regions: bool = True) -> dict:
    out = {"lower": _ids(pair.lower), "upper": _ids(pair.upper)}
    if with_regions and pair.lower.issubset(pair.upper):
        rep = approx.regions(pair)
        out.update(
            pos=_ids(rep.regions.pos),
            bnd=_ids(rep.regions.bnd),
            neg=_ids(rep.regions.neg),
            accuracy=_rat(rep.accuracy),
            definable=rep.definable,
        )
    return out


def _keyed_report(pairs: Mapping[str, approx.ApproximationPair]) -> list[dict]:
    return [{"key": k, "lower": _ids(p.lower), "upper": _ids(p.upper)} for k, p in pairs.items()]


# ---------------------------------------------------------------------------
# payload decoding


def load_table(payload: dict) -> InformationTable | None:
    spec = payload.get("table")
    if spec is None:
        return None
    if isinstance(spec, InformationTable):
        return spec
    decision_attr = spec.get("decision")
    if "csv" in spec:
        return InformationTable.from_csv_text(spec["csv"], decision_attr)
    if "path" in spec:
        return InformationTable.from_csv(spec["path"], decision_attr)
    return InformationTable.from_rows(spec["attributes"], [tuple(r) for r in spec["rows"]], decision_attr)


def get_universe(payload: dict, table: InformationTable | None = None) -> Universe:
    if "universe" in payload:
        return Universe(tuple(payload["universe"]))
    if table is None:
        table = load_table(payload)
    if table is None:
        raise ValueError("payload provides neither a universe nor a table")
    return table.universe


def get_partition(payload: dict, universe: Universe, table: InformationTable | None = None, key: str = "partition") -> Partition:
    spec = payload.get(key)
    if spec is None and table is not None and "attrs" in payload:
        return indiscernibility(table, payload["attrs"])
    if spec is None:
        raise ValueError(f"payload is missing {key!r}")
    if "blocks" in spec:
        return Partition.from_blocks(universe, spec["blocks"])
    if "labels" in spec:
        return Partition.from_labels(universe, spec["labels"])
    if "attrs" in spec:
        if table is None:
            table = load_table(payload)
        return indiscernibility(table, spec["attrs"])
    raise ValueError("partition descriptor needs blocks, labels, or attrs")


def get_target(payload: dict, universe: Universe, table: InformationTable | None = None, key: str = "target") -> Subset:
    spec = payload.get(key)
    if spec is None:
        raise ValueError(f"payload is missing {key!r}")
    return decode_target(spec, universe, table)


def decode_target(spec, universe: Universe, table: InformationTable | None = None) -> Subset:
    if isinstance(spec, str):
        if "=" in spec:
            attr, value = spec.split("=", 1)
            if table is None:
                raise ValueError("attribute-valued targets need a table")
            if table.decision == attr.strip():
                return table.decision_concept(value.strip())
            column = table.column(attr.strip())
            from roughkit.foundation import _parse_cell

            want = _parse_cell(value.strip())
            return Subset(universe, frozenset(i for i, v in enumerate(column) if v == want))
        spec = [s for s in (part.strip() for part in spec.split(",")) if s]
    if isinstance(spec, Mapping) and "decision" in spec:
        if table is None:
            raise ValueError("decision-valued targets need a table")
        return table.decision_concept(spec["decision"])
    return universe.subset(spec)


def relation_from_pairs(universe: Universe, spec) -> BinaryRel:
    if "pairs" in spec:
        pairs = [(a, b) for a, b in spec["pairs"]]
        if spec.get("reflexive"):
            pairs += [(e, e) for e in universe.elements]
        if spec.get("symmetric"):
            pairs += [(b, a) for a, b in list(pairs)]
        return BinaryRel.from_id_pairs(universe, pairs)
    if "out" in spec:
        return BinaryRel.from_id_pairs(universe, [(a, b) for a, outs in spec["out"].items() for b in outs])
    if "order_leq" in spec:
        ranks = {e: parse_rational(v) for e, v in spec["order_leq"].items()}
        return BinaryRel.from_predicate(universe, lambda a, b: ranks[a] <= ranks[b])
    raise ValueError("relation descriptor needs pairs, out, or order_leq")


def neighborhood_operator(payload: dict, universe: Universe, table: InformationTable | None = None) -> granulation.NeighborhoodOperator:
    spec = payload["neighborhood"]
    kind = spec["kind"]
    if kind == "from_partition":
        return granulation.make_neighborhoods("from_partition", partition=get_partition(spec, universe, table))
    if kind in ("metric_ball", "descriptive_tolerance"):
        data = metric_data(spec, universe, table)
        bound = parse_rational(spec["delta"] if kind == "metric_ball" else spec["epsilon"])
        key = "delta" if kind == "metric_ball" else "epsilon"
        return granulation.make_neighborhoods(kind, data=data, **{key: bound})
    if kind == "similarity_threshold":
        if spec.get("matrix") == "table":
            # square CSV: one column per element, rows in universe order
            rows = tuple(
                tuple(parse_rational(table.value(e, other)) for other in universe.elements) for e in universe.elements
            )
        else:
            rows = tuple(tuple(parse_rational(v) for v in row) for row in spec["matrix"])
        matrix = granulation.SimilarityMatrix(universe, rows)
        return granulation.make_neighborhoods(kind, matrix=matrix, tau=parse_rational(spec["tau"]))
    if kind == "interval_overlap":
        attrs = tuple(spec["intervals"])
        cols = tuple(
            tuple((parse_rational(lo), parse_rational(hi)) for lo, hi in (spec["intervals"][a][e] for e in universe.elements))
            for a in attrs
        )
        data = granulation.IntervalData(universe, attrs, cols)
        return granulation.make_neighborhoods(kind, data=data, attrs=spec.get("attrs"))
    if kind == "successor":
        if "mapping" in spec:
            codomain = Universe(tuple(spec["codomain"])) if "codomain" in spec else universe
            return granulation.make_neighborhoods(kind, universe=universe, codomain=codomain, mapping=spec["mapping"])
        return granulation.make_neighborhoods(kind, relation=relation_from_pairs(universe, spec))
    if kind in ("directed_granule", "preorder_up", "preorder_down"):
        return granulation.make_neighborhoods(kind, relation=relation_from_pairs(universe, spec))
    raise ValueError(f"unknown neighborhood kind {kind!r}")


def metric_data(spec: dict, universe: Universe, table: InformationTable | None = None) -> "granulation.MetricSpaceData | granulation.DistanceMatrix":
    if "distances" in spec:
        rows = tuple(tuple(parse_rational(v) for v in row) for row in spec["distances"])
        return granulation.DistanceMatrix(universe, rows)
    p_raw = spec.get("p", 2)
    p = math.inf if p_raw == "inf" else p_raw
    if "points" in spec:
        vectors = {e: tuple(parse_rational(c) for c in spec["points"][e]) for e in universe.elements}
        return granulation.MetricSpaceData.from_mapping(universe, vectors, p)
    if table is not None and "features" in spec:
        vectors = {
            e: tuple(parse_rational(table.value(e, a)) for a in spec["features"]) for e in universe.elements
        }
        return granulation.MetricSpaceData.from_mapping(universe, vectors, p)
    raise ValueError("metric descriptor needs distances, points, or table features")


def granule_blocks(payload: dict, universe: Universe) -> granulation.GranuleFamily:
    spec = payload["family"]
    kind = spec.get("kind", "covering")
    if kind == "directed":
        return granulation.granule_family("directed", relation=relation_from_pairs(universe, spec))
    return granulation.granule_family(kind, universe=universe, blocks=spec["blocks"])


def param_family(payload: dict, universe: Universe) -> hyper.ParamFamily:
    spec = payload["family"]
    images = {p["key"]: p["members"] for p in spec["params"]}
    return hyper.ParamFamily.from_mapping(universe, spec.get("kind", "soft"), images)


# ---------------------------------------------------------------------------
# approx family


def _scheme(model: str, payload: dict):
    p = payload.get("params", {})
    if model == "graded":
        return approx.Graded(int(p["k"]))
    if model == "vprs":
        return approx.Vprs(parse_rational(p["beta"]))
    if model == "probabilistic":
        return approx.Probabilistic(parse_rational(p["alpha"]), parse_rational(p["beta"]))
    if model == "local":
        return approx.Local(parse_rational(p["alpha"]), parse_rational(p["beta"]))
    if model == "entropy":
        return approx.Entropy(parse_rational(p["alpha"]), float(p["theta"]))
    raise ValueError(f"unknown scheme {model!r}")


def run_pawlak(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    pair = approx.pawlak_pair(part, get_target(payload, u, table))
    return _pair_report(pair)


def run_ratio(model: str, payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    target = get_target(payload, u, table)
    pair = approx.ratio_approx(part, target, _scheme(model, payload))
    out = _pair_report(pair, with_regions=pair.lower.issubset(pair.upper))
    if model == "entropy":
        out["block_entropy"] = {str(k): v for k, v in approx.block_entropies(part, target).items()}
    return out


def run_neighborhood(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    op = neighborhood_operator(payload, u, table)
    target = decode_target(payload["target"], op.codomain, table)
    pair = approx.pointwise_approx(op, target)
    out = _pair_report(pair, with_regions=op.universe == op.codomain)
    out["neighborhoods"] = {e: _ids(op.neighborhood(e)) for e in u.elements}
    if op.universe == op.codomain:
        props = relation_properties(op.to_relation())
        out["relation"] = {
            "reflexive": props.reflexive,
            "symmetric": props.symmetric,
            "transitive": props.transitive,
            "up_directed": props.up_directed,
        }
    return out


def run_covering(payload: dict) -> dict:
    u = get_universe(payload)
    fam = granule_blocks(payload, u)
    target = get_target(payload, u)
    mode = payload.get("params", {}).get("mode", "generated")
    pair = approx.block_approx(fam, target, mode)
    out = _pair_report(pair)
    out["is_partition"] = fam.is_partition
    out["is_covering"] = fam.is_covering
    return out


def run_tolerance_classes(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    op = neighborhood_operator(payload, u, table)
    fam = granulation.maximal_tolerance_classes(op)
    out = {"classes": [list(b) for b in fam.block_id_lists()], "is_covering": fam.is_covering}
    if "target" in payload:
        pair = approx.block_approx(fam, get_target(payload, u, table), payload.get("params", {}).get("mode", "generated"))
        out.update(_pair_report(pair))
    return out


def run_sequential(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    parts = [get_partition({"partition": spec}, u, table) for spec in payload["relations"]]
    pair = approx.sequential_approx(parts, get_target(payload, u, table))
    return _pair_report(pair)


def run_s_transfer(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    res = approx.s_transfer_approx(part, payload["transfer"], get_target(payload, u, table))
    out = _pair_report(res.pair)
    out["x_f"] = _ids(res.x_f)
    out["x_circ"] = _ids(res.x_circ)
    return out


def run_dp(payload: dict) -> dict:
    u = get_universe(payload)
    p = payload.get("params", {})
    pair = approx.dp_robust(u, payload["p_lower"], payload["p_upper"], parse_rational(p["eta"]))
    return _pair_report(pair)


def run_two_tier(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    nd = neighborhood_operator({"neighborhood": payload["n_def"]}, u, table)
    np_ = neighborhood_operator({"neighborhood": payload["n_pos"]}, u, table)
    data = approx.TwoTierData(nd, np_, decode_target(payload["x_def"], u, table), decode_target(payload["x_pos"], u, table))
    return _pair_report(approx.two_tier_approx(data))


def run_contra(payload: dict) -> dict:
    u = get_universe(payload)
    p = payload.get("params", {})
    kernels = approx.ContraKernels(
        u,
        tuple(tuple(parse_rational(v) for v in row) for row in payload["c_r"]),
        tuple(parse_rational(v) for v in payload["c_u"]),
        parse_rational(p["alpha"]),
        parse_rational(p["beta"]),
        parse_rational(p["gamma"]),
    )
    return _pair_report(approx.two_tier_approx(approx.contra_from_kernels(kernels)))


def run_complex_code(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    pair = approx.pawlak_pair(part, get_target(payload, u, table))
    code = approx.ComplexCode.from_pair(pair)
    out = _pair_report(pair)
    out["code"] = {e: code.label(e) for e in u.elements}
    return out


def run_weak(payload: dict) -> dict:
    u = get_universe(payload)
    mk = lambda spec: approx.WeakRoughSet(decode_target(spec["lower"], u), decode_target(spec["upper"], u))
    a = mk(payload["a"])
    op = payload.get("params", {}).get("op", "complement")
    b = mk(payload["b"]) if "b" in payload else None
    result = approx.weak_ops(a, b, op)
    if isinstance(result, bool):
        return {"leq": result}
    return {"lower": _ids(result.a_lower), "upper": _ids(result.a_upper)}


# ---------------------------------------------------------------------------
# decision family


def run_membership(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    mu = decision.rough_membership(part, get_target(payload, u, table))
    return {"membership": {e: _rat(q) for e, q in mu.items()}}


def run_dtrs(payload: dict) -> dict:
    losses = decision.LossTable.from_sequence([parse_rational(v) for v in payload["losses"]])
    alpha, beta = decision.dtrs_thresholds(losses)
    out = {"alpha": _rat(alpha), "beta": _rat(beta)}
    if "target" in payload:
        table = load_table(payload)
        u = get_universe(payload, table)
        part = get_partition(payload, u, table)
        res = decision.dtrs(losses, part, get_target(payload, u, table))
        out.update(pos=_ids(res.regions.pos), bnd=_ids(res.regions.bnd), neg=_ids(res.regions.neg))
    return out


def run_weighted(payload: dict) -> dict:
    table = load_table(payload)
    u = table.universe
    p = payload.get("params", {})
    res = decision.weighted_rough(
        table, payload["attrs"], payload["decision_attr"], get_target(payload, u, table), parse_rational(p["alpha"])
    )
    return {
        "gamma": _rat(res.gamma_full),
        "significance": {a: _rat(q) for a, q in res.significance.items()},
        "weights": {a: _rat(q) for a, q in res.weights.items()},
        "scores": {e: _rat(q) for e, q in res.scores.items()},
        "lower": _ids(res.lower),
    }


def run_drsa(payload: dict) -> dict:
    u = get_universe(payload)
    data = decision.DominanceData.from_columns(
        u,
        {c: payload["criteria"][c] for c in payload["criteria"]},
        payload.get("directions", {}),
        payload["classes"],
        payload.get("n_classes"),
    )
    res = decision.drsa(data, int(payload["params"]["t"]))
    return {
        "lower_ge": _ids(res.lower_ge),
        "upper_ge": _ids(res.upper_ge),
        "bnd_ge": _ids(res.bnd_ge),
        "lower_le": _ids(res.lower_le),
        "upper_le": _ids(res.upper_le),
        "bnd_le": _ids(res.bnd_le),
    }


def run_d_rough(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    p = payload.get("params", {})
    res = decision.d_rough(part, get_target(payload, u, table), parse_rational(p["alpha"]), parse_rational(p["beta"]))
    return {
        "plus": {e: _rat(res.description[e].mass({"+"})) for e in u.elements},
        "pos": _ids(res.regions.pos),
        "bnd": _ids(res.regions.bnd),
        "neg": _ids(res.regions.neg),
    }


def run_gtrs(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    spec = payload["game"]
    strategies = tuple(
        tuple(decision.Strategy(s["name"], parse_rational(s.get("d_alpha", 0)), parse_rational(s.get("d_beta", 0))) for s in grid)
        for grid in spec["strategies"]
    )
    game = decision.GameSpec(
        players=tuple(spec["players"]),
        strategies=strategies,
        baseline_alpha=parse_rational(spec["alpha0"]),
        baseline_beta=parse_rational(spec["beta0"]),
        measures=tuple(spec["measures"]),
        baseline_profile=tuple(spec.get("baseline_profile", ())),
    )
    res = decision.gtrs_equilibrium(game, part, get_target(payload, u, table))
    if res.profile is None:
        return {"equilibrium": None, "payoffs": {",".join(map(str, k)): list(v) for k, v in res.payoffs.items()}}
    return {
        "equilibrium": list(res.profile),
        "alpha": _rat(res.alpha),
        "beta": _rat(res.beta),
        "pos": _ids(res.regions.pos),
        "bnd": _ids(res.regions.bnd),
        "neg": _ids(res.regions.neg),
    }


# ---------------------------------------------------------------------------
# multiview family


def _indexed(payload: dict, table: InformationTable | None, u: Universe) -> multiview.IndexedRelations:
    entries = []
    for item in payload["relations"]:
        part = get_partition({"partition": item}, u, table)
        entries.append((str(item["key"]), part))
    return multiview.IndexedRelations(tuple(entries))


def run_multirough(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    rels = _indexed(payload, table, u)
    if "targets" in payload:
        targets = {k: decode_target(v, u, table) for k, v in payload["targets"].items()}
        pairs = multiview.multirough(rels, targets)
    else:
        pairs = multiview.multirough(rels, get_target(payload, u, table))
    return {"keyed": _keyed_report(pairs)}


def run_mgrs(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    rels = _indexed(payload, table, u)
    pair = multiview.mgrs(rels, get_target(payload, u, table), payload.get("params", {}).get("mode", "optimistic"))
    return _pair_report(pair)


def run_graphic(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    vertices = tuple(v["name"] for v in payload["attributes"])
    parts = tuple(get_partition({"partition": v}, u, table) for v in payload["attributes"])
    edges = frozenset(frozenset(e) for e in payload.get("edges", []))
    graph = multiview.AttributeGraph(vertices, parts, edges)
    pairs = multiview.graphic_rough(graph, payload["subgraphs"], get_target(payload, u, table))
    return {"keyed": _keyed_report(pairs)}


def run_iterated(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    rels = _indexed(payload, table, u)
    depth = int(payload.get("params", {}).get("depth", 1))
    value = multiview.iterated_multirough(rels, get_target(payload, u, table), depth)

    def encode(v):
        if isinstance(v, Subset):
            return _ids(v)
        return {k: [encode(pair[0]), encode(pair[1])] for k, pair in v.items()}

    return {"depth": depth, "value": encode(value), "well_typed": multiview.in_iterated_type(value, rels, depth)}


def run_refined(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    rels = _indexed(payload, table, u)
    pairs, report = multiview.refined_chain(rels, get_target(payload, u, table))
    return {"keyed": _keyed_report(pairs), "nested": report.ok}


def run_persistent(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    data = metric_data(payload["metric"], u, table)
    family = multiview.ScaleFamily(data, tuple(parse_rational(v) for v in payload["grid"]))
    pairs = multiview.persistent(family, get_target(payload, u, table))
    return {"keyed": _keyed_report(pairs)}


def run_metarough(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    space = multiview.RoughObjectSpace(part)
    select = payload.get("c_family", {})
    if "definable_containing" in select:
        anchor = select["definable_containing"]
        family = [r for r in space.objects if r.is_definable() and r.lower.contains(anchor)]
    else:
        family = [
            approx.pawlak_pair(part, decode_target(t, u, table)) for t in select.get("targets", [])
        ]
    lower, upper = multiview.metarough(space, family)
    enc = lambda rs: [{"lower": _ids(r.lower), "upper": _ids(r.upper)} for r in rs]
    return {
        "space_size": len(space.objects),
        "family_size": len(family),
        "meta_lower": enc(lower),
        "meta_upper": enc(upper),
        "meta_lower_size": len(lower),
        "meta_upper_size": len(upper),
    }


# ---------------------------------------------------------------------------
# hyper family


def run_param_family(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    if "family" in payload:
        fam = param_family(payload, u)
    else:
        fam = hyper.hyper_family_from_table(table, payload["attrs"])
    part = get_partition(payload, u, table, key="relation")
    pairs = hyper.param_family_approx(fam, part)
    return {"keyed": _keyed_report(pairs)}


def run_soft(payload: dict) -> dict:
    u = get_universe(payload)
    fam = param_family(payload, u)
    pair = hyper.soft_rough(fam, get_target(payload, u))
    return _pair_report(pair)


def run_strait(payload: dict) -> dict:
    u = get_universe(payload)
    fam = param_family(payload, u)
    res = hyper.strait_approx(fam, get_target(payload, u))
    out = _pair_report(res.pair)
    out["definable"] = res.definable
    return out


def run_superhyper(payload: dict) -> dict:
    u = get_universe(payload)
    base = get_partition(payload, u)
    k = int(payload.get("params", {}).get("k", 1))
    lift = hyper.superhyper_lift(base, k)
    c_value = [frozenset(member) for member in payload["c_value"]]
    lower, upper = hyper.superhyper_approx(c_value, lift)
    enc = lambda fam: sorted(sorted(m) for m in fam)
    out = {"lower": enc(lower), "upper": enc(upper)}
    if "probe" in payload:
        probe = {frozenset(m) for m in payload["probe"]}
        out["probe_size"] = len(probe)
        out["probe_in_lower"] = enc(probe & lower)
        out["probe_in_upper"] = bool(probe <= upper)
    if "probe_class" in payload:
        out["probe_class_size"] = len(lift.equivalence_class(frozenset(payload["probe_class"])))
    return out


# ---------------------------------------------------------------------------
# valued family


def _domain(spec) -> valued.DegreeDomain:
    if spec is None or spec.get("domain") == "unit":
        return valued.UnitInterval()
    name = spec["domain"]
    if name == "bool":
        return valued.BooleanDomain()
    if name == "chain":
        return valued.FiniteChain(tuple(spec["labels"]))
    if name == "vector":
        return valued.vector_domain(int(spec["dim"]))
    raise ValueError(f"unknown degree domain {name!r}")


def run_fuzzy(payload: dict) -> dict:
    u = get_universe(payload)
    dom = valued.UnitInterval()
    rel = valued.ValuedRelation(u, dom, tuple(tuple(float(v) for v in row) for row in payload["relation"]))
    a = valued.ValuedSet.from_mapping(u, dom, {e: float(v) for e, v in payload["set"].items()})
    p = payload.get("params", {})
    lo, up = valued.fuzzy_rough(rel, a, p.get("tnorm", "min"), p.get("implicator", "kd"))
    return {"lower": lo.as_dict(), "upper": up.as_dict()}


def run_uncertain(payload: dict) -> dict:
    u = get_universe(payload)
    dom = _domain(payload.get("params"))
    canon = (lambda v: tuple(v)) if isinstance(dom, valued.ProductDomain) else (lambda v: v)
    rel = valued.ValuedRelation(u, dom, tuple(tuple(canon(v) for v in row) for row in payload["relation"]))
    a = valued.ValuedSet.from_mapping(u, dom, {e: canon(v) for e, v in payload["set"].items()})
    res = valued.uncertain_approx(dom, rel, a)
    return {
        "lower": res.lower.as_dict(),
        "upper": res.upper.as_dict(),
        "pos": res.pos.as_dict(),
        "neg": res.neg.as_dict(),
        "bnd": res.bnd.as_dict(),
    }


def run_if(payload: dict) -> dict:
    u = get_universe(payload)
    x = valued.IfSet(
        u,
        tuple(float(payload["set"][e][0]) for e in u.elements),
        tuple(float(payload["set"][e][1]) for e in u.elements),
    )
    rel = valued.IfRelation(
        u,
        tuple(tuple(float(v) for v in row) for row in payload["relation_mu"]),
        tuple(tuple(float(v) for v in row) for row in payload["relation_gamma"]),
    )
    lo, up = valued.if_rough(rel, x)
    pack = lambda s: {e: [s.mu[i], s.gamma[i]] for i, e in enumerate(u.elements)}
    return {"lower": pack(lo), "upper": pack(up)}


def run_granulewise(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    dom = _domain(payload.get("params"))
    canon = (lambda v: tuple(v)) if isinstance(dom, valued.ProductDomain) else (lambda v: v)
    a = valued.ValuedSet.from_mapping(u, dom, {e: canon(v) for e, v in payload["set"].items()})
    lo, up = valued.granulewise_lattice(part, a)
    unpack = (lambda v: list(v)) if isinstance(dom, valued.ProductDomain) else (lambda v: v)
    return {"lower": {e: unpack(v) for e, v in lo.as_dict().items()}, "upper": {e: unpack(v) for e, v in up.as_dict().items()}}


def run_mod(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    res = valued.mod_approx(part, {e: float(v) for e, v in payload["scores"].items()}, payload["tags"])
    return {
        "lower_score": res.lower_score,
        "upper_score": res.upper_score,
        "tags": {e: sorted(res.lower_tags[e]) for e in u.elements},
    }


def run_neutrosophic(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    a = {e: tuple(float(c) for c in payload["set"][e]) for e in u.elements}
    lo, up = valued.neutrosophic_approx(part, a)
    return {"lower": {e: list(v) for e, v in lo.items()}, "upper": {e: list(v) for e, v in up.items()}}


def run_plithogenic(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    part = get_partition(payload, u, table)
    values = tuple(payload["values"])
    pdf = tuple(
        tuple(tuple(float(c) for c in payload["pdf"][v][e]) for e in u.elements) for v in values
    )
    pcf = tuple(tuple(tuple(float(c) for c in cell) for cell in row) for row in payload["pcf"])
    data = valued.PlithogenicData(u, values, pdf, pcf)
    lo, up = valued.plithogenic_approx(part, data)
    pack = lambda d: {v: {e: list(d.pdf[k][i]) for i, e in enumerate(u.elements)} for k, v in enumerate(values)}
    return {"lower": pack(lo), "upper": pack(up)}


def run_lvalued(payload: dict) -> dict:
    u = get_universe(payload)
    chain = valued.ResiduatedChain(tuple(parse_rational(v) for v in payload["levels"]))
    rel = {(a, b): payload["relation"][a][b] for a in u.elements for b in u.elements}
    lo, up = valued.lvalued_approx(chain, u, payload["u_set"], rel, payload["q_set"])
    return {"lower": {e: _rat(lo[e]) for e in u.elements}, "upper": {e: _rat(up[e]) for e in u.elements}}


def run_vague(payload: dict) -> dict:
    u = get_universe(payload)
    pair = approx.ApproximationPair(decode_target(payload["pair"]["lower"], u), decode_target(payload["pair"]["upper"], u))
    intervals = valued.vague_rough(pair, payload["mu"], payload["nu"])
    return {"intervals": {e: list(v) for e, v in intervals.items()}}


def run_linguistic(payload: dict) -> dict:
    u = get_universe(payload)
    space = valued.LinguisticSpace.from_names(u, payload["labels"], payload["concepts"], payload["decision"])
    if "aggregate" in payload:
        agg = payload["aggregate"]
        return {
            "lower": list(space.label_vector(space.aggregate_min(agg["k_star"]))),
            "upper": list(space.label_vector(space.aggregate_max(agg["l_star"]))),
            "k_feasible": _rat(valued.inclusion_degree(space.decision, space.aggregate_min(agg["k_star"]))),
            "l_feasible": _rat(valued.inclusion_degree(space.aggregate_max(agg["l_star"]), space.decision)),
        }
    res = valued.linguistic_rough(space, parse_rational(payload["params"]["k"]))
    if not res.approximable:
        return {"approximable": False}
    return {
        "approximable": True,
        "k_l": _rat(res.k_l),
        "k_u": _rat(res.k_u),
        "k_star": list(res.k_star),
        "l_star": list(res.l_star),
        "lower": list(res.lower),
        "upper": list(res.upper),
    }


def run_triangular(payload: dict) -> dict:
    p = payload["params"]
    fn = valued.triangular(parse_rational(p["a"]), parse_rational(p["b"]), parse_rational(p["c"]))
    points = [parse_rational(x) for x in payload.get("eval", [])]
    return {"centroid": _rat(fn.centroid), "mu": {format_rational(x): _rat(fn.mu(x)) for x in points}}


# ---------------------------------------------------------------------------
# structures family


def run_topology(payload: dict) -> dict:
    table = load_table(payload)
    u = get_universe(payload, table)
    if "partition" in payload or "attrs" in payload:
        rt = structures.rough_topology(get_partition(payload, u, table))
        out = {}
        if "open_queries" in payload:
            out["open"] = {",".join(q): rt.is_open(decode_target(q, u, table)) for q in payload["open_queries"]}
        if "target" in payload:
            target = get_target(payload, u, table)
            out["interior"] = _ids(rt.interior(target))
            out["closure"] = _ids(rt.closure(target))
        return out
    topo = structures.FiniteTopology.from_id_sets(u, payload["opens"])
    pair = structures.topological_approx(topo, get_target(payload, u, table))
    return _pair_report(pair)


def _graph(payload: dict) -> structures.GraphData:
    vertices = Universe(tuple(payload["vertices"]))
    edges = tuple(frozenset(e) for e in payload["edges"])
    probe = structures.GraphData(vertices, edges)
    edge_universe = probe.edge_universe
    edge_partition = None
    if "edge_blocks" in payload:
        edge_partition = Partition.from_blocks(edge_universe, payload["edge_blocks"])
    vertex_family = edge_family = None
    if "vertex_family" in payload:
        vertex_family = hyper.ParamFamily.from_mapping(vertices, "soft", {p["key"]: p["members"] for p in payload["vertex_family"]})
    if "edge_family" in payload:
        edge_family = hyper.ParamFamily.from_mapping(edge_universe, "soft", {p["key"]: p["members"] for p in payload["edge_family"]})
    return structures.GraphData(vertices, edges, edge_partition, vertex_family, edge_family)


def run_graph(payload: dict) -> dict:
    g = _graph(payload)
    pair = structures.rough_graph(g, decode_target(payload["target_edges"], g.edge_universe))
    return _pair_report(pair)


def run_soft_graph(payload: dict) -> dict:
    g = _graph(payload)
    x = decode_target(payload["target_vertices"], g.vertices)
    y = decode_target(payload["target_edges"], g.edge_universe) if "target_edges" in payload else None
    res = structures.soft_rough_graph(g, x, y)
    return {
        "lower_vertices": _ids(res.lower_vertices),
        "lower_edges": sorted(res.lower_edges),
        "upper_vertices": _ids(res.upper_vertices),
        "upper_edges": sorted(res.upper_edges),
    }


def _magma(payload: dict) -> structures.MagmaTable:
    if "cyclic" in payload:
        return structures.MagmaTable.cyclic(int(payload["cyclic"]))
    carrier = Universe(tuple(payload["carrier"]))
    return structures.MagmaTable.from_id_table(carrier, payload["op_table"])


def _group_report(rep: structures.RoughGroupReport) -> dict:
    return {
        "is_rough_group": rep.is_rough_group,
        "upper": _ids(rep.upper),
        "closure_in_upper": rep.closure_in_upper,
        "associative_on_upper": rep.associative_on_upper,
        "identity": rep.identity,
        "inverses": rep.inverses,
    }


def run_group(payload: dict) -> dict:
    m = _magma(payload)
    part = get_partition(payload, m.carrier)
    return _group_report(structures.rough_group_check(m, part, decode_target(payload["g"], m.carrier)))


def run_subgroup(payload: dict) -> dict:
    m = _magma(payload)
    part = get_partition(payload, m.carrier)
    g = decode_target(payload["g"], m.carrier)
    h = decode_target(payload["h"], m.carrier)
    return _group_report(structures.rough_subgroup_check(m, part, g, h))


def run_matroid(payload: dict) -> dict:
    u = get_universe(payload)
    part = get_partition(payload, u)
    m = structures.rough_matroid(part, decode_target(payload["x_param"], u))
    out = {}
    if "queries" in payload:
        out["independent"] = {",".join(q): m.is_independent(decode_target(q, u)) for q in payload["queries"]}
    if payload.get("circuits"):
        out["circuits"] = [list(c.ids()) for c in m.circuits()]
    if payload.get("checks"):
        out["downward_closed"] = m.independence_system_check()
        out["exchange_failures"] = len(m.exchange_check())
    return out


def run_simplicial(payload: dict) -> dict:
    u = get_universe(payload)
    cx = structures.ComplexData(u, tuple(frozenset(f) for f in payload["facets"]))
    pair = structures.simplicial_rough(cx, get_target(payload, u))
    return _pair_report(pair)


def run_functorial(payload: dict) -> dict:
    fibers = {obj: Universe(tuple(ids)) for obj, ids in payload["fibers"].items()}
    cat = structures.CategoryData(
        objects=tuple(payload["objects"]),
        arrows=tuple(structures.Arrow(a["name"], a["source"], a["target"]) for a in payload["arrows"]),
        identities=payload["identities"],
        composition={(f, g): h for f, g, h in payload["composition"]},
        fibers=fibers,
        transports=payload["transports"],
        relations={obj: Partition.from_blocks(fibers[obj], blocks) for obj, blocks in payload["relations"].items()},
        targets={obj: fibers[obj].subset(ids) for obj, ids in payload["targets"].items()},
    )
    res = structures.functorial_rough(cat)
    return {
        "keyed": _keyed_report(res.pairs),
        "functor_laws_ok": res.functor_laws_ok,
        "relation_compatible": res.relation_compatible,
    }


def run_sheaf(payload: dict) -> dict:
    ground = Universe(tuple(payload["ground"]))
    topo = structures.FiniteTopology.from_id_sets(ground, payload["opens"])
    sheaf = structures.SheafData(topo, tuple(payload["labels"]))
    sections = [(tuple(open_ids), label) for open_ids, label in payload["sections"]]
    pair = structures.sheaf_rough_constant(sheaf, sections)
    return {"lower": _ids(pair.lower), "upper": _ids(pair.upper)}


# ---------------------------------------------------------------------------
# registry


MODELS: dict[tuple[str, str], Callable[[dict], dict]] = {
    ("approx", "pawlak"): run_pawlak,
    ("approx", "graded"): lambda p: run_ratio("graded", p),
    ("approx", "vprs"): lambda p: run_ratio("vprs", p),
    ("approx", "probabilistic"): lambda p: run_ratio("probabilistic", p),
    ("approx", "local"): lambda p: run_ratio("local", p),
    ("approx", "entropy"): lambda p: run_ratio("entropy", p),
    ("approx", "neighborhood"): run_neighborhood,
    ("approx", "covering"): run_covering,
    ("approx", "tolerance_classes"): run_tolerance_classes,
    ("approx", "sequential"): run_sequential,
    ("approx", "s_transfer"): run_s_transfer,
    ("approx", "dp_robust"): run_dp,
    ("approx", "two_tier"): run_two_tier,
    ("approx", "contra"): run_contra,
    ("approx", "complex_code"): run_complex_code,
    ("approx", "weak"): run_weak,
    ("decision", "membership"): run_membership,
    ("decision", "dtrs"): run_dtrs,
    ("decision", "weighted"): run_weighted,
    ("decision", "drsa"): run_drsa,
    ("decision", "d_rough"): run_d_rough,
    ("decision", "gtrs"): run_gtrs,
    ("multiview", "multirough"): run_multirough,
    ("multiview", "mgrs"): run_mgrs,
    ("multiview", "graphic"): run_graphic,
    ("multiview", "iterated"): run_iterated,
    ("multiview", "refined"): run_refined,
    ("multiview", "persistent"): run_persistent,
    ("multiview", "metarough"): run_metarough,
    ("hyper", "param_family"): run_param_family,
    ("hyper", "soft"): run_soft,
    ("hyper", "strait"): run_strait,
    ("hyper", "superhyper"): run_superhyper,
    ("valued", "fuzzy"): run_fuzzy,
    ("valued", "uncertain"): run_uncertain,
    ("valued", "if"): run_if,
    ("valued", "granulewise"): run_granulewise,
    ("valued", "mod"): run_mod,
    ("valued", "neutrosophic"): run_neutrosophic,
    ("valued", "plithogenic"): run_plithogenic,
    ("valued", "lvalued"): run_lvalued,
    ("valued", "vague"): run_vague,
    ("valued", "linguistic"): run_linguistic,
    ("valued", "triangular"): run_triangular,
    ("structures", "topology"): run_topology,
    ("structures", "graph"): run_graph,
    ("structures", "soft_graph"): run_soft_graph,
    ("structures", "group"): run_group,
    ("structures", "subgroup"): run_subgroup,
    ("structures", "matroid"): run_matroid,
    ("structures", "simplicial"): run_simplicial,
    ("structures", "functorial"): run_functorial,
    ("structures", "sheaf"): run_sheaf,
}

FAMILIES = tuple(sorted({family for family, _ in MODELS}))


def run_model(family: str, model: str, payload: dict) -> dict:
    fn = MODELS.get((family, model))
    if fn is None:
        raise KeyError(f"no model {model!r} in family {family!r}")
    report = {"family": family, "model": model}
    report.update(fn(payload))
    return report
