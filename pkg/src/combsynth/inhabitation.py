"""The search engine: grows a tree grammar from a repository and a target
type with a FIFO worklist over recursive inhabitation targets, recording a
step-wise trace for the debugger.

Nonterminal identity is structural equality of organized forms; the grammar
produced for a target is sound and complete for the typing rules (combinator
axiom with substitution, application, intersection introduction,
subsumption).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .grammar import Rule, TreeGrammar, grammar_to_document, prune
from .repository import Repository
from .types import (
    OrganizedType,
    Path,
    Taxonomy,
    Type,
    _covered,
    intersect,
    organize,
    subtype,
)


class InhabitationError(Exception):
    pass


class Failure(str, Enum):
    NO_USABLE_COMBINATOR = "NoUsableCombinator"


@dataclass(frozen=True)
class InhabitationRequest:
    repository: Repository
    target: Type

    def __post_init__(self):
        if not self.target.is_closed():
            raise InhabitationError("target type must be closed")
        if organize(self.target).is_omega():
            raise InhabitationError("target type must not be omega-equivalent")


@dataclass(frozen=True)
class StepRecord:
    index: int
    processed_target: OrganizedType
    rules_added: tuple[Rule, ...]
    new_targets: tuple[OrganizedType, ...]
    failure: Failure | None = None


@dataclass(frozen=True)
class DebugTrace:
    steps: tuple[StepRecord, ...]
    final: TreeGrammar
    pruned: TreeGrammar


def covers(
    paths: tuple[Path, ...] | list[Path],
    arity: int,
    target: OrganizedType,
    tax: Taxonomy,
) -> list[tuple[OrganizedType, ...]]:
    """Argument vectors of all useful covers of ``target`` at ``arity``.

    A cover is a nonempty set A of paths of arity >= ``arity`` whose
    intersected ``arity``-tails subsume the target; the i-th argument is the
    intersection of the i-th sources over A.  Covers are subset-minimal, and
    covers whose argument vector is pointwise more specific than another
    cover's are dropped: they only derive terms the dominating rule already
    derives, via subsumption, and would spawn redundant recursive targets.
    """
    if arity < 0:
        raise ValueError("arity must be nonnegative")
    usable = [p for p in paths if p.arity >= arity]
    tails = [p.tail(arity) for p in usable]
    minimal: list[frozenset[int]] = []
    vectors: list[tuple[OrganizedType, ...]] = []
    for size in range(1, len(usable) + 1):
        for combo in itertools.combinations(range(len(usable)), size):
            chosen = frozenset(combo)
            if any(found <= chosen for found in minimal):
                continue
            # the organized paths of the intersected tails are the tails
            # themselves, so cover the target path by path
            chosen_tails = tuple(tails[i] for i in combo)
            if not all(_covered(q, chosen_tails, tax) for q in target.paths):
                continue
            minimal.append(chosen)
            vectors.append(
                tuple(
                    organize(intersect([usable[i].args[j] for i in combo]))
                    for j in range(arity)
                )
            )
    return _drop_dominated(vectors, tax)


def _drop_dominated(
    vectors: list[tuple[OrganizedType, ...]], tax: Taxonomy
) -> list[tuple[OrganizedType, ...]]:
    def le(u: tuple[OrganizedType, ...], v: tuple[OrganizedType, ...]) -> bool:
        return all(subtype(a.to_type(), b.to_type(), tax) for a, b in zip(u, v))

    kept: list[tuple[OrganizedType, ...]] = []
    for v in vectors:
        dominated = any(u != v and le(v, u) and not le(u, v) for u in vectors)
        if not dominated and v not in kept:
            kept.append(v)
    return kept


def inhabit(req: InhabitationRequest) -> DebugTrace:
    repo = req.repository
    tax = repo.taxonomy
    start = organize(req.target)

    # substituted organized path sets are target-independent
    path_sets: list[tuple[str, tuple[Path, ...]]] = []
    for comb in repo.combinators:
        for sub in comb.substitutions():
            instantiated = sub.apply(comb.type_scheme)
            path_sets.append((comb.name, organize(instantiated).paths))

    seen: set[OrganizedType] = {start}
    queue: deque[OrganizedType] = deque([start])
    steps: list[StepRecord] = []
    rules: list[Rule] = []
    rule_set: set[Rule] = set()

    while queue:
        target = queue.popleft()
        added: list[Rule] = []
        new_targets: list[OrganizedType] = []
        for name, paths in path_sets:
            if not paths:
                continue
            max_arity = max(p.arity for p in paths)
            for k in range(max_arity + 1):
                for argvec in covers(paths, k, target, tax):
                    rule = Rule(target, name, argvec)
                    if rule in rule_set:
                        continue
                    rule_set.add(rule)
                    rules.append(rule)
                    added.append(rule)
                    for arg in argvec:
                        if arg not in seen:
                            seen.add(arg)
                            queue.append(arg)
                            new_targets.append(arg)
        steps.append(
            StepRecord(
                index=len(steps),
                processed_target=target,
                rules_added=tuple(added),
                new_targets=tuple(new_targets),
                failure=None if added else Failure.NO_USABLE_COMBINATOR,
            )
        )

    terminals = frozenset(r.label for r in rules)
    final = TreeGrammar(start, frozenset(seen), terminals, tuple(rules))
    return DebugTrace(steps=tuple(steps), final=final, pruned=prune(final))


def replay(trace: DebugTrace, up_to: int) -> tuple[TreeGrammar, list[OrganizedType]]:
    """Grammar after the first ``up_to`` steps plus the to-do targets at that
    point (enqueued but not yet processed), in queue order."""
    if not 0 <= up_to <= len(trace.steps):
        raise InhabitationError(f"step ordinal out of range: {up_to}")
    start = trace.final.start
    rules: list[Rule] = []
    todo: list[OrganizedType] = [start]
    for step in trace.steps[:up_to]:
        todo.remove(step.processed_target)
        rules.extend(step.rules_added)
        todo.extend(step.new_targets)
    nts = {start}
    for step in trace.steps[:up_to]:
        nts.add(step.processed_target)
    for r in rules:
        nts.add(r.lhs)
        nts.update(r.args)
    nts.update(todo)
    terminals = frozenset(r.label for r in rules)
    grammar = TreeGrammar(start, frozenset(nts), terminals, tuple(rules))
    return grammar, todo


def trace_to_document(trace: DebugTrace) -> dict:
    def rule_doc(r: Rule) -> dict:
        return {
            "lhs": str(r.lhs),
            "combinator": r.label,
            "args": [str(a) for a in r.args],
        }

    steps = []
    for s in trace.steps:
        doc = {
            "index": s.index,
            "target": str(s.processed_target),
            "rules": [rule_doc(r) for r in s.rules_added],
            "newTargets": [str(t) for t in s.new_targets],
        }
        if s.failure is not None:
            doc["failure"] = s.failure.value
        steps.append(doc)
    return {
        "steps": steps,
        "final": grammar_to_document(trace.final),
        "pruned": grammar_to_document(trace.pruned),
    }


def inhabit_type(repo: Repository, target: Type) -> DebugTrace:
    return inhabit(InhabitationRequest(repo, target))
