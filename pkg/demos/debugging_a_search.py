"""
Stepping through a search with hypergraph snapshots
===================================================

The solver records every worklist step it takes.  Replaying the trace turns
any prefix of the search into a hypergraph: nonterminals become nodes,
rules become labeled hyperedges with numbered argument tentacles, and
pending targets are flagged ``todo``.  The DOT export below renders with
plain GraphViz.
"""

from combsynth import (
    filter_unproductive,
    from_grammar,
    inhabit_type,
    labyrinth_repository,
    parse_type,
    replay,
    to_dot,
    to_json,
)

repo = labyrinth_repository(
    rows=2, cols=5, walls={(1, 0), (4, 0), (1, 1), (3, 1)}, start=(0, 0)
)
trace = inhabit_type(repo, parse_type("Pos(2, 0)"))

# Walk the search one step at a time.  Step 0 is the freshly posed request;
# each later snapshot adds the rules found for one target.
for k in range(len(trace.steps) + 1):
    grammar, todo = replay(trace, k)
    graph = from_grammar(grammar, todo)
    todo_text = ", ".join(str(t) for t in todo) or "none"
    print(f"step {k}: {len(graph.edges)} edges, pending: {todo_text}")

# The final graph for this goal is one big unproductive cycle...
final = from_grammar(trace.final)
print(f"\nunproductive edges: {sum(e.unproductive for e in final.edges)}"
      f" of {len(final.edges)}")

# ...so hiding unproductive content leaves just the anchored request node.
print(f"after filtering: {len(filter_unproductive(final).edges)} edges")

# Both serializations are deterministic; the DOT text drops straight into
# `dot -Tsvg`.
print(f"\njson bytes: {len(to_json(final))}")
print(to_dot(final))
