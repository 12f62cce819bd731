"""
Solving a labyrinth by type inhabitation
========================================

A 5x2 grid with four walls becomes a combinator repository: each movement
combinator carries one arrow conjunct per legal one-step move, and a nullary
``start`` combinator marks the entrance at Pos(0, 0).  Asking whether a goal
position is inhabited answers whether the goal is reachable -- and the
resulting tree grammar describes *every* path at once.
"""

from combsynth import (
    enumerate_terms,
    inhabit_type,
    labyrinth_repository,
    parse_type,
    report_for,
)

repo = labyrinth_repository(
    rows=2, cols=5, walls={(1, 0), (4, 0), (1, 1), (3, 1)}, start=(0, 0)
)

for comb in repo.combinators:
    print(f"{comb.name} : {comb.type_scheme}")

# --- A reachable goal -------------------------------------------------------
# Pos(0, 1) sits directly below the entrance.  The computed grammar is
# recursive: the solver may shuttle up and down arbitrarily often before
# committing, so the language of solutions is infinite.
trace = inhabit_type(repo, parse_type("Pos(0, 1)"))
print(f"\nPos(0, 1): {len(trace.final.rules)} rules in {len(trace.steps)} steps")
for rule in trace.final.rules:
    args = ", ".join(str(a) for a in rule.args)
    print(f"  {rule.lhs} -> {rule.label}({args})")

# The first few inhabitants, smallest first.
for term in enumerate_terms(trace.pruned, trace.pruned.start, 3):
    print(f"  solution: {term}")

# --- A walled-off goal ------------------------------------------------------
# Pos(2, 0) is fenced in by walls.  The search still finds candidate rules,
# but they only feed each other: pruning removes the whole cycle and the
# report explains which targets were unproductive.
trace = inhabit_type(repo, parse_type("Pos(2, 0)"))
print(f"\nPos(2, 0): {len(trace.final.rules)} candidate rules,"
      f" {len(trace.pruned.rules)} survive pruning")
for entry in report_for(trace).entries:
    print(f"  {entry.type}: {entry.reason.value}")

# --- A goal no combinator reaches -------------------------------------------
# Pos(4, 1) has walls on both sides; not a single cover exists, so the very
# first step fails.
trace = inhabit_type(repo, parse_type("Pos(4, 1)"))
print(f"\nPos(4, 1): {len(trace.final.rules)} rules,"
      f" failure = {trace.steps[0].failure.value}")
