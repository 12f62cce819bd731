"""Intersection-type AST, parsing/printing, organized normal form and subtyping.

Types are immutable trees built from constructors (a constant is a nullary
constructor), arrows, binary intersections, the universal type ``omega`` and
variables.  The canonical "organized" form rewrites a type into an
intersection of *paths*, each carrying exactly one non-omega leaf; all
structural reasoning (subtyping, nonterminal identity in the search engine)
happens on organized forms.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field


class TypeError_(Exception):
    """Base error for type-level operations."""


class TypeSyntaxError(TypeError_):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OpenTypeError(TypeError_):
    """An operation defined on closed types was given a type with variables."""


class UnboundVariableError(TypeError_):
    def __init__(self, name: str):
        super().__init__(f"unbound type variable: {name}")
        self.name = name


class Type:
    """Abstract base of all type nodes. Instances are immutable and hashable."""

    __slots__ = ()

    def is_closed(self) -> bool:
        return not free_variables(self)

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True, slots=True)
class Ctor(Type):
    name: str
    args: tuple[Type, ...] = ()

    def __post_init__(self):
        if not self.name:
            raise ValueError("constructor name must be nonempty")


@dataclass(frozen=True, slots=True)
class Arrow(Type):
    source: Type
    target: Type


@dataclass(frozen=True, slots=True)
class Inter(Type):
    left: Type
    right: Type


@dataclass(frozen=True, slots=True)
class Omega(Type):
    pass


@dataclass(frozen=True, slots=True)
class Var(Type):
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be nonempty")


OMEGA = Omega()


def free_variables(t: Type) -> frozenset[str]:
    match t:
        case Var(name):
            return frozenset({name})
        case Ctor(_, args):
            out: frozenset[str] = frozenset()
            for a in args:
                out |= free_variables(a)
            return out
        case Arrow(s, r):
            return free_variables(s) | free_variables(r)
        case Inter(l, r):
            return free_variables(l) | free_variables(r)
        case _:
            return frozenset()


def intersect(parts: list[Type] | tuple[Type, ...]) -> Type:
    """Right-nested intersection of ``parts``; omega for the empty list."""
    if not parts:
        return OMEGA
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Inter(p, out)
    return out


# ---------------------------------------------------------------------------
# Printing

def show(t: Type) -> str:
    match t:
        case Omega():
            return "omega"
        case Var(name):
            return name
        case Ctor(name, args):
            if not args:
                return name
            return f"{name}({', '.join(show(a) for a in args)})"
        case Arrow(s, r):
            left = show(s)
            if isinstance(s, Arrow):
                left = f"({left})"
            return f"{left} -> {show(r)}"
        case Inter(l, r):
            parts = []
            for m in _inter_members(t):
                text = show(m)
                if isinstance(m, Arrow):
                    text = f"({text})"
                parts.append(text)
            return " & ".join(parts)
    raise TypeError(f"not a Type: {t!r}")


def _inter_members(t: Type) -> list[Type]:
    if isinstance(t, Inter):
        return _inter_members(t.left) + _inter_members(t.right)
    return [t]


# ---------------------------------------------------------------------------
# Parsing
#
# Grammar (``&`` binds tighter than the right-associative ``->``):
#   Type  := Arrow
#   Arrow := Inter ('->' Arrow)?
#   Inter := Atom ('&' Atom)*
#   Atom  := 'omega' | ident ('(' Type (',' Type)* ')')? | '(' Type ')'

_IDENT_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")


class _Parser:
    def __init__(self, text: str, variables: frozenset[str]):
        self.text = text
        self.pos = 0
        self.variables = variables

    def error(self, message: str):
        raise TypeSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, lit: str):
        self.skip_ws()
        if not self.text.startswith(lit, self.pos):
            self.error(f"expected {lit!r}")
        self.pos += len(lit)

    def try_consume(self, lit: str) -> bool:
        self.skip_ws()
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False

    def ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _IDENT_CHARS:
            self.pos += 1
        if self.pos == start:
            self.error("expected identifier")
        return self.text[start:self.pos]

    def parse_type(self) -> Type:
        return self.parse_arrow()

    def parse_arrow(self) -> Type:
        left = self.parse_inter()
        if self.try_consume("->"):
            return Arrow(left, self.parse_arrow())
        return left

    def parse_inter(self) -> Type:
        parts = [self.parse_atom()]
        while self.try_consume("&"):
            parts.append(self.parse_atom())
        if len(parts) == 1:
            return parts[0]
        return intersect(parts)

    def parse_atom(self) -> Type:
        if self.try_consume("("):
            inner = self.parse_type()
            self.expect(")")
            return inner
        name = self.ident()
        if name == "omega":
            return OMEGA
        if self.peek() == "(":
            self.expect("(")
            args = [self.parse_type()]
            while self.try_consume(","):
                args.append(self.parse_type())
            self.expect(")")
            return Ctor(name, tuple(args))
        if name in self.variables:
            return Var(name)
        return Ctor(name)


def parse_type(text: str, variables: frozenset[str] | set[str] = frozenset()) -> Type:
    p = _Parser(text, frozenset(variables))
    t = p.parse_type()
    p.skip_ws()
    if p.pos != len(text):
        p.error("unexpected trailing input")
    return t


# ---------------------------------------------------------------------------
# Substitution

@dataclass(frozen=True, slots=True)
class Substitution:
    mapping: tuple[tuple[str, Type], ...]

    def __post_init__(self):
        for _, t in self.mapping:
            if not t.is_closed():
                raise OpenTypeError(f"substitution range must be closed: {show(t)}")

    @staticmethod
    def of(mapping: dict[str, Type]) -> "Substitution":
        return Substitution(tuple(mapping.items()))

    def as_dict(self) -> dict[str, Type]:
        return dict(self.mapping)

    def apply(self, t: Type) -> Type:
        table = self.as_dict()

        def go(u: Type) -> Type:
            match u:
                case Var(name):
                    if name not in table:
                        raise UnboundVariableError(name)
                    return table[name]
                case Ctor(name, args):
                    return Ctor(name, tuple(go(a) for a in args))
                case Arrow(s, r):
                    return Arrow(go(s), go(r))
                case Inter(l, r):
                    return Inter(go(l), go(r))
                case _:
                    return u

        return go(t)


def apply_substitution(s: Substitution, t: Type) -> Type:
    return s.apply(t)


# ---------------------------------------------------------------------------
# Taxonomy: user-declared subtype edges between constructor names, queried
# through their reflexive-transitive closure.

@dataclass(frozen=True)
class Taxonomy:
    edges: frozenset[tuple[str, str]] = frozenset()
    _closure: dict = field(default=None, compare=False, repr=False)

    @staticmethod
    def of(edges) -> "Taxonomy":
        return Taxonomy(frozenset(edges))

    def closure(self) -> dict[str, frozenset[str]]:
        if self._closure is None:
            supers: dict[str, set[str]] = {}
            for sub, sup in self.edges:
                supers.setdefault(sub, set()).add(sup)
            changed = True
            while changed:
                changed = False
                for sub in list(supers):
                    reach = supers[sub]
                    for mid in list(reach):
                        for far in supers.get(mid, ()):
                            if far not in reach:
                                reach.add(far)
                                changed = True
            object.__setattr__(
                self, "_closure", {k: frozenset(v) for k, v in supers.items()}
            )
        return self._closure

    def le(self, sub: str, sup: str) -> bool:
        return sub == sup or sup in self.closure().get(sub, frozenset())


EMPTY_TAXONOMY = Taxonomy()


# ---------------------------------------------------------------------------
# Paths and organized form

@dataclass(frozen=True, slots=True)
class Path:
    """An organized atom: ``arg_1 -> ... -> arg_k -> head``.

    The head is a variable or a constructor chain with at most one non-omega
    argument position at each level; it never contains intersections.
    """

    args: tuple[Type, ...]
    head: Type

    @property
    def arity(self) -> int:
        return len(self.args)

    def tail(self, j: int) -> "Path":
        if not 0 <= j <= self.arity:
            raise ValueError(f"tail index {j} out of range")
        return Path(self.args[j:], self.head)

    def to_type(self) -> Type:
        out = self.head
        for a in reversed(self.args):
            out = Arrow(a, out)
        return out

    def __str__(self) -> str:
        return show(self.to_type())


@functools.total_ordering
@dataclass(frozen=True, slots=True)
class OrganizedType:
    """Canonically ordered, duplicate-free intersection of paths.

    The empty path tuple represents omega.  Equality is structural equality
    of the sorted path list; the sort key is the canonical printed string.
    """

    paths: tuple[Path, ...]

    @staticmethod
    def of(paths) -> "OrganizedType":
        uniq: dict[str, Path] = {}
        for p in paths:
            uniq.setdefault(str(p), p)
        return OrganizedType(tuple(uniq[k] for k in sorted(uniq)))

    def to_type(self) -> Type:
        return intersect([p.to_type() for p in self.paths])

    def is_omega(self) -> bool:
        return not self.paths

    def __str__(self) -> str:
        return show(self.to_type())

    def __lt__(self, other: "OrganizedType") -> bool:
        return str(self) < str(other)


def _paths_of(t: Type) -> list[Path]:
    match t:
        case Omega():
            return []
        case Var(_):
            return [Path((), t)]
        case Inter(l, r):
            return _paths_of(l) + _paths_of(r)
        case Arrow(s, r):
            return [Path((s,) + p.args, p.head) for p in _paths_of(r)]
        case Ctor(name, args):
            if not args:
                return [Path((), t)]
            out = []
            n = len(args)
            for i, a in enumerate(args):
                for q in _paths_of(a):
                    wrapped = tuple(
                        q.to_type() if j == i else OMEGA for j in range(n)
                    )
                    out.append(Path((), Ctor(name, wrapped)))
            if not out:
                # every argument is omega-equivalent
                out.append(Path((), Ctor(name, (OMEGA,) * n)))
            return out
    raise TypeError(f"not a Type: {t!r}")


@functools.lru_cache(maxsize=None)
def organize(t: Type) -> OrganizedType:
    return OrganizedType.of(_paths_of(t))


# ---------------------------------------------------------------------------
# Subtyping on closed types

def subtype(s: Type, t: Type, tax: Taxonomy = EMPTY_TAXONOMY) -> bool:
    """Decide ``s <= t``: every path of organize(t) is covered by organize(s)."""
    if not s.is_closed() or not t.is_closed():
        raise OpenTypeError("subtyping is defined on closed types only")
    return _subtype(s, t, tax)


@functools.lru_cache(maxsize=None)
def _subtype(s: Type, t: Type, tax: Taxonomy) -> bool:
    spaths = organize(s).paths
    return all(_covered(q, spaths, tax) for q in organize(t).paths)


@functools.lru_cache(maxsize=None)
def _covered(q: Path, spaths: tuple[Path, ...], tax: Taxonomy) -> bool:
    if q.arity > 0:
        source = q.args[0]
        rest = q.tail(1)
        matching = [
            p for p in spaths if p.arity > 0 and _subtype(source, p.args[0], tax)
        ]
        if not matching:
            return False
        joined = intersect([p.tail(1).to_type() for p in matching])
        return _subtype(joined, rest.to_type(), tax)
    head = q.head
    if not isinstance(head, Ctor):
        raise OpenTypeError("subtyping is defined on closed types only")
    n = len(head.args)
    # group s's constructor paths by head name; covariance plus distribution
    # over intersection make the full same-head group the best candidate set
    by_name: dict[str, list[Ctor]] = {}
    for p in spaths:
        if p.arity == 0 and isinstance(p.head, Ctor) and len(p.head.args) == n:
            by_name.setdefault(p.head.name, []).append(p.head)
    for name, group in by_name.items():
        if not tax.le(name, head.name):
            continue
        if all(
            _subtype(intersect([g.args[i] for g in group]), head.args[i], tax)
            for i in range(n)
        ):
            return True
    return False


def subtype_equal(s: Type, t: Type, tax: Taxonomy = EMPTY_TAXONOMY) -> bool:
    return subtype(s, t, tax) and subtype(t, s, tax)
