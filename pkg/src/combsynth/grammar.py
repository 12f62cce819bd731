"""Regular tree grammars without arity restriction on terminal symbols.

Provides the language semantics (membership, bounded enumeration),
productivity analysis by Kleene iteration and pruning of unproductive rules.
Nonterminals are organized types; terminals are combinator names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .types import OrganizedType


class GrammarError(Exception):
    pass


class UnknownNonterminal(GrammarError):
    def __init__(self, nt: OrganizedType):
        super().__init__(f"unknown nonterminal: {nt}")
        self.nonterminal = nt


@dataclass(frozen=True)
class Term:
    """Applicative term ``f(t_1, ..., t_n)``; a combinator applied to n args."""

    label: str
    children: tuple["Term", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def __str__(self) -> str:
        if not self.children:
            return self.label
        return f"{self.label}({', '.join(str(c) for c in self.children)})"


@dataclass(frozen=True)
class Rule:
    lhs: OrganizedType
    label: str
    args: tuple[OrganizedType, ...] = ()

    def __str__(self) -> str:
        return f"{self.lhs} |-> {self.label}({', '.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class TreeGrammar:
    start: OrganizedType
    nonterminals: frozenset[OrganizedType]
    terminals: frozenset[str]
    rules: tuple[Rule, ...]

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise GrammarError("start symbol must be a nonterminal")
        for r in self.rules:
            if r.lhs not in self.nonterminals:
                raise GrammarError(f"rule lhs not a nonterminal: {r}")
            if any(a not in self.nonterminals for a in r.args):
                raise GrammarError(f"rule argument not a nonterminal: {r}")
            if r.label not in self.terminals:
                raise GrammarError(f"rule label not a terminal: {r}")

    def rules_for(self, nt: OrganizedType) -> list[Rule]:
        return [r for r in self.rules if r.lhs == nt]


def make_grammar(start: OrganizedType, rules) -> TreeGrammar:
    """Grammar from start symbol and rules; nonterminals/terminals inferred."""
    rules = tuple(rules)
    nts = {start}
    terms = set()
    for r in rules:
        nts.add(r.lhs)
        nts.update(r.args)
        terms.add(r.label)
    return TreeGrammar(start, frozenset(nts), frozenset(terms), rules)


def productive_nonterminals(g: TreeGrammar) -> frozenset[OrganizedType]:
    """Least fixed point: a nonterminal is productive iff some rule with that
    lhs has only productive arguments."""
    productive: set[OrganizedType] = set()
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            if r.lhs not in productive and all(a in productive for a in r.args):
                productive.add(r.lhs)
                changed = True
    return frozenset(productive)


def prune(g: TreeGrammar) -> TreeGrammar:
    """Drop unproductive rules, then restrict to the part reachable from the
    start symbol.  The language of every surviving nonterminal is unchanged."""
    productive = productive_nonterminals(g)
    kept = [
        r
        for r in g.rules
        if r.lhs in productive and all(a in productive for a in r.args)
    ]
    reachable = {g.start}
    frontier = [g.start]
    by_lhs: dict[OrganizedType, list[Rule]] = {}
    for r in kept:
        by_lhs.setdefault(r.lhs, []).append(r)
    while frontier:
        nt = frontier.pop()
        for r in by_lhs.get(nt, ()):
            for a in r.args:
                if a not in reachable:
                    reachable.add(a)
                    frontier.append(a)
    final_rules = tuple(r for r in kept if r.lhs in reachable)
    terminals = frozenset(r.label for r in final_rules)
    return TreeGrammar(g.start, frozenset(reachable), terminals, final_rules)


def _compositions(total: int, parts: int):
    """Positive integer compositions of ``total`` into ``parts``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class _Enumerator:
    """Size-stratified term generation with deterministic ordering: terms of
    smaller size first, ties broken by rule order, then row-major over the
    per-argument term lists."""

    def __init__(self, g: TreeGrammar):
        self.g = g
        self.by_lhs: dict[OrganizedType, list[Rule]] = {}
        for r in g.rules:
            self.by_lhs.setdefault(r.lhs, []).append(r)
        self.cache: dict[tuple[OrganizedType, int], list[Term]] = {}

    def terms_of_size(self, nt: OrganizedType, size: int) -> list[Term]:
        key = (nt, size)
        if key in self.cache:
            return self.cache[key]
        out: list[Term] = []
        seen: set[Term] = set()
        if size >= 1:
            for rule in self.by_lhs.get(nt, ()):
                k = len(rule.args)
                for comp in _compositions(size - 1, k):
                    child_lists = [
                        self.terms_of_size(a, s) for a, s in zip(rule.args, comp)
                    ]
                    if any(not lst for lst in child_lists):
                        continue
                    for children in itertools.product(*child_lists):
                        t = Term(rule.label, children)
                        if t not in seen:
                            seen.add(t)
                            out.append(t)
        self.cache[key] = out
        return out

    def language_is_finite(self, nt: OrganizedType) -> bool:
        """Finite iff no productive cycle is reachable from ``nt`` through
        rules whose arguments are all productive."""
        productive = productive_nonterminals(self.g)
        graph: dict[OrganizedType, set[OrganizedType]] = {}
        for r in self.g.rules:
            if r.lhs in productive and all(a in productive for a in r.args):
                graph.setdefault(r.lhs, set()).update(r.args)

        state: dict[OrganizedType, int] = {}  # 1 = on stack, 2 = done

        def visit(v: OrganizedType) -> bool:
            if state.get(v) == 1:
                return False
            if state.get(v) == 2:
                return True
            state[v] = 1
            ok = all(visit(w) for w in graph.get(v, ()))
            state[v] = 2
            return ok

        return visit(nt)

    def max_finite_size(self, nt: OrganizedType) -> int:
        """Largest derivable term size when the language is finite."""
        productive = productive_nonterminals(self.g)
        memo: dict[OrganizedType, int] = {}

        def longest(v: OrganizedType) -> int:
            if v in memo:
                return memo[v]
            best = 0
            for r in self.by_lhs.get(v, ()):
                if r.lhs in productive and all(a in productive for a in r.args):
                    best = max(best, 1 + sum(longest(a) for a in r.args))
            memo[v] = best
            return best

        return longest(nt)


def enumerate_terms(
    g: TreeGrammar,
    nt: OrganizedType,
    max_count: int,
    max_size: int | None = None,
) -> list[Term]:
    """First ``max_count`` terms of the language of ``nt``, smallest first.

    Returns fewer than ``max_count`` iff the language is finite and smaller
    (or ``max_size`` cuts it off); empty iff ``nt`` is unproductive.
    """
    if nt not in g.nonterminals:
        raise UnknownNonterminal(nt)
    if max_count < 0:
        raise ValueError("max_count must be nonnegative")
    enum = _Enumerator(g)
    bound = max_size
    if enum.language_is_finite(nt):
        finite_bound = enum.max_finite_size(nt)
        bound = finite_bound if bound is None else min(bound, finite_bound)
    out: list[Term] = []
    size = 1
    while len(out) < max_count and (bound is None or size <= bound):
        for t in enum.terms_of_size(nt, size):
            out.append(t)
            if len(out) >= max_count:
                break
        size += 1
    return out


def member_of(g: TreeGrammar, nt: OrganizedType, t: Term) -> bool:
    """Decide ``t`` in the language of ``nt`` by recursive rule matching."""
    if nt not in g.nonterminals:
        raise UnknownNonterminal(nt)
    by_lhs: dict[OrganizedType, list[Rule]] = {}
    for r in g.rules:
        by_lhs.setdefault(r.lhs, []).append(r)

    def check(v: OrganizedType, term: Term) -> bool:
        return any(
            r.label == term.label
            and len(r.args) == len(term.children)
            and all(check(a, c) for a, c in zip(r.args, term.children))
            for r in by_lhs.get(v, ())
        )

    return check(nt, t)


# ---------------------------------------------------------------------------
# Serialization

def grammar_to_document(g: TreeGrammar) -> dict:
    return {
        "start": str(g.start),
        "rules": [
            {
                "lhs": str(r.lhs),
                "combinator": r.label,
                "args": [str(a) for a in r.args],
            }
            for r in g.rules
        ],
    }
