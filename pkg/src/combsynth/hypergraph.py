"""Directed labeled hypergraph views of tree grammars and trace snapshots.

Nodes are nonterminals; each production rule becomes one labeled hyperedge
with an incoming attachment at its lhs node and numbered outgoing tentacles
at its argument nodes.  Status flags carry the debugger classification
(to-do targets, unproductive content); rendering concerns such as colors are
left to consumers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .grammar import TreeGrammar, productive_nonterminals, prune
from .types import OrganizedType


class NodeStatus(str, Enum):
    NORMAL = "normal"
    TODO = "todo"
    UNPRODUCTIVE = "unproductive"


@dataclass(frozen=True)
class Node:
    id: str
    type_text: str
    status: NodeStatus


@dataclass(frozen=True)
class Hyperedge:
    id: str
    label: str
    result_node: str
    arg_nodes: tuple[str, ...]
    unproductive: bool = False
    source_info: str | None = None


@dataclass(frozen=True)
class Hypergraph:
    nodes: tuple[Node, ...]
    edges: tuple[Hyperedge, ...]

    def __post_init__(self):
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("node ids must be unique")
        known = set(ids)
        for e in self.edges:
            if e.result_node not in known or any(
                a not in known for a in e.arg_nodes
            ):
                raise ValueError(f"edge {e.id} refers to an unknown node")

    def node_by_text(self, text: str) -> Node:
        for n in self.nodes:
            if n.type_text == text:
                return n
        raise KeyError(text)


def from_grammar(
    g: TreeGrammar,
    todo: Iterable[OrganizedType] = (),
    sources: dict[str, str] | None = None,
) -> Hypergraph:
    """One node per nonterminal (plus to-do targets), one edge per rule.

    An edge is unproductive iff pruning would remove its rule; a node is
    unproductive iff the nonterminal is unproductive and not a to-do target.
    Node ids are ``n<k>`` and edge ids ``e<k>`` in first-appearance order:
    start symbol, then rule lhs and arguments in rule order, then any
    remaining nonterminals and to-do targets.
    """
    todo = list(todo)
    todo_set = set(todo)
    productive = productive_nonterminals(g)
    sources = sources or {}

    order: list[OrganizedType] = []
    seen: set[OrganizedType] = set()

    def visit(nt: OrganizedType):
        if nt not in seen:
            seen.add(nt)
            order.append(nt)

    visit(g.start)
    for r in g.rules:
        visit(r.lhs)
        for a in r.args:
            visit(a)
    for nt in sorted(g.nonterminals - seen, key=str):
        visit(nt)
    for nt in todo:
        visit(nt)

    ids = {nt: f"n{i}" for i, nt in enumerate(order)}

    def status(nt: OrganizedType) -> NodeStatus:
        if nt in todo_set:
            return NodeStatus.TODO
        if nt not in productive:
            return NodeStatus.UNPRODUCTIVE
        return NodeStatus.NORMAL

    nodes = tuple(Node(ids[nt], str(nt), status(nt)) for nt in order)
    edges = []
    for i, r in enumerate(g.rules):
        unproductive = r.lhs not in productive or any(
            a not in productive for a in r.args
        )
        edges.append(
            Hyperedge(
                id=f"e{i}",
                label=r.label,
                result_node=ids[r.lhs],
                arg_nodes=tuple(ids[a] for a in r.args),
                unproductive=unproductive,
                source_info=sources.get(r.label),
            )
        )
    return Hypergraph(nodes, tuple(edges))


def filter_unproductive(h: Hypergraph) -> Hypergraph:
    """Drop unproductive edges, then unproductive nodes left without any
    incident edge.  The first-listed node anchors the requested type and is
    always kept."""
    edges = tuple(e for e in h.edges if not e.unproductive)
    used = {e.result_node for e in edges}
    for e in edges:
        used.update(e.arg_nodes)
    anchor = h.nodes[0].id if h.nodes else None
    nodes = tuple(
        n
        for n in h.nodes
        if n.id in used or n.status is not NodeStatus.UNPRODUCTIVE or n.id == anchor
    )
    return Hypergraph(nodes, edges)


# ---------------------------------------------------------------------------
# Serialization

def to_document(h: Hypergraph) -> dict:
    return {
        "nodes": [
            {"id": n.id, "type": n.type_text, "status": n.status.value}
            for n in h.nodes
        ],
        "edges": [
            {
                "id": e.id,
                "label": e.label,
                "result": e.result_node,
                "args": [
                    {"pos": i + 1, "node": a} for i, a in enumerate(e.arg_nodes)
                ],
                "unproductive": e.unproductive,
                **({"source": e.source_info} if e.source_info is not None else {}),
            }
            for e in h.edges
        ],
    }


def to_json(h: Hypergraph) -> str:
    return json.dumps(to_document(h), separators=(",", ":"))


def from_document(doc: dict) -> Hypergraph:
    nodes = tuple(
        Node(n["id"], n["type"], NodeStatus(n["status"])) for n in doc["nodes"]
    )
    edges = tuple(
        Hyperedge(
            id=e["id"],
            label=e["label"],
            result_node=e["result"],
            arg_nodes=tuple(a["node"] for a in sorted(e["args"], key=lambda a: a["pos"])),
            unproductive=e["unproductive"],
            source_info=e.get("source"),
        )
        for e in doc["edges"]
    )
    return Hypergraph(nodes, edges)


def from_json(text: str) -> Hypergraph:
    return from_document(json.loads(text))


def to_dot(h: Hypergraph) -> str:
    """GraphViz rendering: nonterminals as circles, edge labels as boxes with
    numbered argument arrows; to-do nodes green, unproductive content red."""
    lines = ["digraph hypergraph {", "  rankdir=BT;"]
    for n in h.nodes:
        color = {
            NodeStatus.NORMAL: "black",
            NodeStatus.TODO: "green",
            NodeStatus.UNPRODUCTIVE: "red",
        }[n.status]
        lines.append(
            f'  {n.id} [shape=circle, label="{n.type_text}", color={color}];'
        )
    for e in h.edges:
        color = "red" if e.unproductive else "black"
        label = e.label
        if e.source_info:
            label += f"\\n{e.source_info}"
        lines.append(f'  {e.id} [shape=box, label="{label}", color={color}];')
        lines.append(f"  {e.id} -> {e.result_node} [color={color}];")
        for i, a in enumerate(e.arg_nodes):
            lines.append(
                f'  {e.id} -> {a} [style=dashed, label="{i + 1}", color={color}];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
