"""Independent oracles used by the test suite.

Each oracle takes a deliberately different route than the library code it
checks: subtyping is decided by brute-force derivation search over the
subtyping rules, terms are type-checked top-down against the four typing
rules, grammar languages are expanded by naive fixpoint iteration, and
labyrinth solutions are enumerated by walking the grid.
"""

from __future__ import annotations

import itertools

from combsynth.grammar import Term, TreeGrammar
from combsynth.repository import Repository
from combsynth.types import (
    Arrow,
    Ctor,
    Inter,
    Omega,
    Taxonomy,
    Type,
    intersect,
)


# ---------------------------------------------------------------------------
# Brute-force BCD derivation search

def _members(t: Type) -> list[Type]:
    if isinstance(t, Inter):
        return _members(t.left) + _members(t.right)
    return [t]


def _is_top(t: Type) -> bool:
    # omega, intersections of tops, and arrows into tops are all top
    if isinstance(t, Omega):
        return True
    if isinstance(t, Inter):
        return _is_top(t.left) and _is_top(t.right)
    if isinstance(t, Arrow):
        return _is_top(t.target)
    return False


def bcd_le(s: Type, t: Type, tax: Taxonomy = Taxonomy(), depth: int = 8) -> bool:
    """Bounded derivation search over the subtyping rules: reflexivity,
    omega-top, intersection elimination/introduction, constructor covariance
    with taxonomy lifting, arrow contra/covariance, and distribution of
    constructors and arrows over intersection (transitivity is folded into
    the rule compositions)."""
    if depth <= 0:
        return False
    if s == t:
        return True
    if _is_top(t):
        return True
    if isinstance(t, Inter):
        return bcd_le(s, t.left, tax, depth - 1) and bcd_le(s, t.right, tax, depth - 1)
    members = _members(s)
    # intersection elimination on the left
    if len(members) > 1 and any(bcd_le(m, t, tax, depth - 1) for m in members):
        return True
    if isinstance(t, Ctor):
        ctors = [m for m in members if isinstance(m, Ctor)
                 and len(m.args) == len(t.args) and tax.le(m.name, t.name)]
        for size in range(1, len(ctors) + 1):
            for combo in itertools.combinations(ctors, size):
                # distribute the chosen members into one constructor
                if all(
                    bcd_le(intersect([c.args[i] for c in combo]), t.args[i],
                           tax, depth - 1)
                    for i in range(len(t.args))
                ):
                    return True
        return False
    if isinstance(t, Arrow):
        arrows = [m for m in members if isinstance(m, Arrow)]
        for size in range(1, len(arrows) + 1):
            for combo in itertools.combinations(arrows, size):
                if all(bcd_le(t.source, a.source, tax, depth - 1) for a in combo) \
                        and bcd_le(intersect([a.target for a in combo]), t.target,
                                   tax, depth - 1):
                    return True
        return False
    return False


# ---------------------------------------------------------------------------
# Four-rule term type checker (axiom with substitution, application,
# intersection introduction, subsumption)

def checks_against(
    repo: Repository, term: Term, ty: Type, depth: int = 12
) -> bool:
    """Decide whether the repository derives ``term : ty`` using the four
    typing rules directly, without grammars."""
    memo: dict[tuple[Term, Type], bool] = {}

    def derives(m: Term, target: Type) -> bool:
        key = (m, target)
        if key in memo:
            return memo[key]
        memo[key] = False  # guards accidental cycles; terms shrink anyway
        try:
            comb = repo.combinator(m.label)
        except KeyError:
            return False
        k = len(m.children)
        derived: list[Type] = []
        for sub in comb.substitutions():
            instantiated = sub.apply(comb.type_scheme)
            from combsynth.types import organize

            for p in organize(instantiated).paths:
                if p.arity < k:
                    continue
                if all(derives(m.children[i], p.args[i]) for i in range(k)):
                    derived.append(p.tail(k).to_type())
        ok = bool(derived) and bcd_le(
            intersect(derived), target, repo.taxonomy, depth
        )
        memo[key] = ok
        return ok

    return derives(term, ty)


# ---------------------------------------------------------------------------
# Naive grammar language expansion

def brute_force_language(
    g: TreeGrammar, max_size: int
) -> dict[object, set[Term]]:
    """All derivable terms of size <= max_size per nonterminal, by fixpoint
    iteration over the rules."""
    langs: dict[object, set[Term]] = {nt: set() for nt in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for r in g.rules:
            # children sizes must sum to max_size - 1 at most
            pools = [
                sorted(langs[a], key=lambda t: t.size) for a in r.args
            ]

            def expand(i: int, budget: int, acc: tuple[Term, ...]):
                nonlocal changed
                if i == len(pools):
                    t = Term(r.label, acc)
                    if t not in langs[r.lhs]:
                        langs[r.lhs].add(t)
                        changed = True
                    return
                remaining_children = len(pools) - i - 1
                for child in pools[i]:
                    if child.size > budget - remaining_children:
                        break
                    expand(i + 1, budget - child.size, acc + (child,))

            expand(0, max_size - 1, ())
    return langs


# ---------------------------------------------------------------------------
# Grid walk enumeration for labyrinth repositories

_MOVES = {"up": (0, -1), "down": (0, 1), "left": (-1, 0), "right": (1, 0)}


def grid_walk_terms(
    rows: int,
    cols: int,
    walls: set[tuple[int, int]],
    start: tuple[int, int],
    goal: tuple[int, int],
    max_moves: int,
) -> set[str]:
    """Text of every term whose move sequence walks from start to goal over
    free cells only, using at most ``max_moves`` moves (revisits allowed)."""

    def free(col: int, row: int) -> bool:
        return 0 <= col < cols and 0 <= row < rows and (col, row) not in walls

    out: set[str] = set()

    def walk(pos: tuple[int, int], term: str, budget: int):
        if pos == goal:
            out.add(term)
        if budget == 0:
            return
        for move, (dc, dr) in _MOVES.items():
            nxt = (pos[0] + dc, pos[1] + dr)
            if free(*nxt):
                walk(nxt, f"{move}({term})", budget - 1)

    if free(*start):
        walk(start, "start", max_moves)
    return out


def replay_moves(term: Term) -> list[str]:
    """Move sequence of a labyrinth term, innermost move first."""
    moves = []
    node = term
    while node.children:
        moves.append(node.label)
        (node,) = node.children
    assert node.label == "start"
    return list(reversed(moves))


# ---------------------------------------------------------------------------
# Transitive closure by Floyd-Warshall

def floyd_warshall_closure(edges: set[tuple[str, str]]) -> set[tuple[str, str]]:
    names = sorted({n for e in edges for n in e})
    reach = {(a, b) for a, b in edges} | {(n, n) for n in names}
    for mid in names:
        for a in names:
            for b in names:
                if (a, mid) in reach and (mid, b) in reach:
                    reach.add((a, b))
    return reach
