import random

import pytest

from combsynth.grammar import prune
from combsynth.hypergraph import (
    NodeStatus,
    filter_unproductive,
    from_grammar,
    from_json,
    to_document,
    to_dot,
    to_json,
)
from combsynth.inhabitation import inhabit_type, replay
from combsynth.types import Ctor, organize, parse_type

from test_grammar import random_grammar


@pytest.fixture(scope="module")
def goal1_graph(lab_5x2):
    trace = inhabit_type(lab_5x2, parse_type("Pos(0, 1)"))
    return from_grammar(trace.final)


@pytest.fixture(scope="module")
def goal2_graph(lab_5x2):
    trace = inhabit_type(lab_5x2, parse_type("Pos(2, 0)"))
    return from_grammar(trace.final)


class TestFromGrammar:
    def test_goal1_shape(self, goal1_graph):
        assert len(goal1_graph.nodes) == 2
        assert len(goal1_graph.edges) == 3
        assert all(n.status is NodeStatus.NORMAL for n in goal1_graph.nodes)
        assert not any(e.unproductive for e in goal1_graph.edges)
        start_edge = next(e for e in goal1_graph.edges if e.label == "start")
        assert start_edge.arg_nodes == ()

    def test_goal2_all_edges_unproductive(self, goal2_graph):
        assert len(goal2_graph.nodes) == 3
        assert len(goal2_graph.edges) == 4
        assert all(e.unproductive for e in goal2_graph.edges)
        assert all(n.status is NodeStatus.UNPRODUCTIVE for n in goal2_graph.nodes)

    def test_goal3_step_zero_is_single_todo_node(self, lab_5x2):
        trace = inhabit_type(lab_5x2, parse_type("Pos(4, 1)"))
        grammar, todo = replay(trace, 0)
        graph = from_grammar(grammar, todo)
        assert [(n.type_text, n.status) for n in graph.nodes] == [
            ("Pos(4, omega) & Pos(omega, 1)", NodeStatus.TODO)
        ]
        assert graph.edges == ()

    def test_argument_positions_ordered(self, goal1_graph):
        down = next(e for e in goal1_graph.edges if e.label == "down")
        assert len(down.arg_nodes) == 1
        doc = to_document(goal1_graph)
        down_doc = next(e for e in doc["edges"] if e["label"] == "down")
        assert down_doc["args"][0]["pos"] == 1

    def test_node_and_edge_id_scheme(self, goal1_graph):
        assert [n.id for n in goal1_graph.nodes] == ["n0", "n1"]
        assert [e.id for e in goal1_graph.edges] == ["e0", "e1", "e2"]

    def test_source_annotations_attached(self, lab_5x2):
        trace = inhabit_type(lab_5x2, parse_type("Pos(0, 1)"))
        graph = from_grammar(trace.final, sources={"down": "moves:1"})
        down = next(e for e in graph.edges if e.label == "down")
        assert down.source_info == "moves:1"


class TestFilterUnproductive:
    def test_goal2_keeps_only_the_requested_node(self, goal2_graph):
        filtered = filter_unproductive(goal2_graph)
        assert [n.type_text for n in filtered.nodes] == [
            "Pos(2, omega) & Pos(omega, 0)"
        ]
        assert filtered.edges == ()

    def test_goal1_unchanged(self, goal1_graph):
        assert filter_unproductive(goal1_graph) == goal1_graph

    def test_mixed_graph_keeps_productive_subgraph(self, lab_3x4):
        # the 3x4 labyrinth search passes through unproductive targets
        trace = inhabit_type(lab_3x4, parse_type("Pos(1, 0)"))
        graph = from_grammar(trace.final)
        assert any(e.unproductive for e in graph.edges)
        filtered = filter_unproductive(graph)
        assert not any(e.unproductive for e in filtered.edges)
        assert len(filtered.edges) == len(prune(trace.final).rules)


class TestSerialization:
    def test_empty_graph(self):
        a = organize(Ctor("A"))
        from combsynth.grammar import make_grammar

        g = make_grammar(a, [])
        doc = to_document(from_grammar(g))
        assert doc["edges"] == []
        assert len(doc["nodes"]) == 1

    def test_goal1_document_golden(self, goal1_graph):
        doc = to_document(goal1_graph)
        assert doc == {
            "nodes": [
                {"id": "n0", "type": "Pos(0, omega) & Pos(omega, 1)",
                 "status": "normal"},
                {"id": "n1", "type": "Pos(0, omega) & Pos(omega, 0)",
                 "status": "normal"},
            ],
            "edges": [
                {"id": "e0", "label": "down", "result": "n0",
                 "args": [{"pos": 1, "node": "n1"}], "unproductive": False},
                {"id": "e1", "label": "up", "result": "n1",
                 "args": [{"pos": 1, "node": "n0"}], "unproductive": False},
                {"id": "e2", "label": "start", "result": "n1",
                 "args": [], "unproductive": False},
            ],
        }

    def test_json_round_trip(self, goal1_graph, goal2_graph):
        for graph in (goal1_graph, goal2_graph):
            assert from_json(to_json(graph)) == graph

    def test_json_deterministic(self, lab_5x2):
        a = inhabit_type(lab_5x2, parse_type("Pos(0, 1)"))
        b = inhabit_type(lab_5x2, parse_type("Pos(0, 1)"))
        assert to_json(from_grammar(a.final)) == to_json(from_grammar(b.final))

    def test_dot_output_mentions_all_elements(self, goal2_graph):
        dot = to_dot(goal2_graph)
        assert dot.startswith("digraph")
        for n in goal2_graph.nodes:
            assert n.id in dot
        assert dot.count("color=red") >= 4


@pytest.mark.parametrize("seed", range(15))
def test_edge_unproductive_iff_pruned(seed):
    rng = random.Random(seed)
    g = random_grammar(rng)
    graph = from_grammar(g)
    assert len(graph.edges) == len(g.rules)
    pruned_rules = set(prune(g).rules)
    for rule, edge in zip(g.rules, graph.edges):
        # reachability may drop productive rules; unproductive implies dropped
        if not edge.unproductive and rule.lhs in prune(g).nonterminals:
            assert rule in pruned_rules
        if edge.unproductive:
            assert rule not in pruned_rules
