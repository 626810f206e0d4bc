import itertools

import pytest

import families
from leavitt_ibn import (
    RULE_DISJOINT_CYCLES,
    RULE_ISOLATED_VERTEX,
    RULE_SOURCE_CYCLE,
    build_graph,
    classify_sufficient,
    cycle_properties,
    cycles_pairwise_disjoint,
    decide_ibn,
    source_free_form,
)
from leavitt_ibn.errors import EmptyGraph


def two_cycle():
    return build_graph(["v1", "v2"], [("a", "v1", "v2"), ("b", "v2", "v1")])


# ── individual rules ─────────────────────────────────────────────────


def test_isolated_vertex_rule_on_path():
    res = classify_sufficient(families.a_path(3))
    assert res.rule == RULE_ISOLATED_VERTEX
    assert (res.isolated_vertex, res.elimination_stage) == ("v3", 2)


def test_isolated_vertex_rule_immediate(triv):
    res = classify_sufficient(triv)
    assert res.rule == RULE_ISOLATED_VERTEX
    assert (res.isolated_vertex, res.elimination_stage) == ("v", 0)


def test_isolated_beats_source_cycle():
    g = build_graph(["v", "u"], [("l", "v", "v")])
    res = classify_sufficient(g)
    assert res.rule == RULE_ISOLATED_VERTEX
    assert (res.isolated_vertex, res.elimination_stage) == ("u", 0)


def test_source_cycle_rule_on_single_loop():
    res = classify_sufficient(families.rose(1))
    assert res.rule == RULE_SOURCE_CYCLE
    assert res.source_cycle == ("l1",)


def test_source_cycle_rule_on_two_cycle():
    res = classify_sufficient(two_cycle())
    assert res.rule == RULE_SOURCE_CYCLE
    assert res.source_cycle == ("a", "b")


def test_source_cycle_found_after_elimination(ex33):
    # the head vertex of ex33 keeps its loop as a source cycle; attaching a
    # feeding chain must not change that because the chain gets eliminated
    from leavitt_ibn import attach_head

    g = attach_head(ex33, "v0", 2)
    res = classify_sufficient(g)
    assert res.rule == RULE_SOURCE_CYCLE
    assert res.source_cycle == ("e0",)


def test_no_rule_on_double_loop_graphs(ex26, e29, f29):
    for g in (ex26, e29, f29, families.rose(2)):
        assert classify_sufficient(g).rule is None


def test_classifier_is_not_necessary(f29):
    # the pinned gap: a graph whose algebra has IBN but no rule fires
    assert classify_sufficient(f29).rule is None
    assert decide_ibn(f29, with_witness=False).has_ibn is True


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        classify_sufficient(build_graph([], []))


# ── pairwise-disjoint cycles ─────────────────────────────────────────


def test_cycles_pairwise_disjoint_fixtures(ex26):
    assert cycles_pairwise_disjoint(families.rose(1)) is True
    assert cycles_pairwise_disjoint(families.rose(2)) is False
    assert cycles_pairwise_disjoint(families.a_path(3)) is True
    assert cycles_pairwise_disjoint(ex26) is False
    assert cycles_pairwise_disjoint(two_cycle()) is True
    two_loops = build_graph(["u", "w"], [("lu", "u", "u"), ("lw", "w", "w")])
    assert cycles_pairwise_disjoint(two_loops) is True
    loop_on_cycle = build_graph(
        ["v1", "v2"], [("a", "v1", "v2"), ("b", "v2", "v1"), ("l", "v1", "v1")]
    )
    assert cycles_pairwise_disjoint(loop_on_cycle) is False


def _brute_disjoint(g):
    cycles = list(families.brute_cycles(g))
    edge_src = {e.id: e.src for e in g.edges}
    verts = [frozenset(edge_src[eid] for eid in c) for c in cycles]
    return all(a.isdisjoint(b) for a, b in itertools.combinations(verts, 2))


def test_cycles_pairwise_disjoint_against_brute_oracle():
    for g in families.all_graphs(max_vertices=2, max_parallel=2):
        assert cycles_pairwise_disjoint(g) == _brute_disjoint(g)
    for g in families.random_graphs(
        150, seed=families.RANDOM_GRAPH_SEED + 13, max_vertices=4, max_edges=8
    ):
        assert cycles_pairwise_disjoint(g) == _brute_disjoint(g)


# ── global properties ────────────────────────────────────────────────


def test_rules_are_sound():
    graphs = itertools.chain(
        families.all_graphs(max_vertices=2, max_parallel=2),
        families.random_graphs(300, seed=families.RANDOM_GRAPH_SEED + 14),
    )
    for g in graphs:
        res = classify_sufficient(g)
        if res.rule is not None:
            assert decide_ibn(g, with_witness=False).has_ibn is True


def test_evidence_matches_rule():
    for g in families.random_graphs(200, seed=families.RANDOM_GRAPH_SEED + 15):
        res = classify_sufficient(g)
        if res.rule == RULE_ISOLATED_VERTEX:
            assert g.has_vertex(res.isolated_vertex)
            assert res.elimination_stage >= 0
        elif res.rule == RULE_SOURCE_CYCLE:
            sf = source_free_form(g).result
            assert cycle_properties(sf, res.source_cycle).is_source_cycle
        elif res.rule == RULE_DISJOINT_CYCLES:
            assert cycles_pairwise_disjoint(g)


def test_disjoint_cycles_rule_is_shadowed():
    # whenever all cycles are pairwise disjoint, one of the earlier rules
    # already fires: a source-free graph with disjoint cycles always has a
    # source cycle at the top of its condensation
    graphs = itertools.chain(
        families.all_graphs(max_vertices=2, max_parallel=2),
        families.random_graphs(400, seed=families.RANDOM_GRAPH_SEED + 16),
    )
    for g in graphs:
        res = classify_sufficient(g)
        assert res.rule != RULE_DISJOINT_CYCLES
        if res.rule is None:
            assert not cycles_pairwise_disjoint(g)
