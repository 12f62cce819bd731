"""Combinator repositories: named typed components with finite substitution
spaces for their type variables, plus the constant taxonomy.

The on-disk form is JSON (see :func:`load_repository`); all type fields use
the textual type syntax of :mod:`combsynth.types`.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass, field

from .types import (
    Substitution,
    Taxonomy,
    Type,
    TypeSyntaxError,
    free_variables,
    parse_type,
    show,
)


class RepositoryError(Exception):
    """Validation failure while loading a repository document."""


@dataclass(frozen=True)
class Combinator:
    name: str
    type_scheme: Type
    variables: tuple[tuple[str, tuple[Type, ...]], ...] = ()
    explicit_substitutions: tuple[Substitution, ...] | None = None
    source_info: str | None = None

    def __post_init__(self):
        declared = [v for v, _ in self.variables]
        if len(set(declared)) != len(declared):
            raise RepositoryError(
                f"combinator {self.name!r}: duplicate variable declaration"
            )
        used = free_variables(self.type_scheme)
        undeclared = used - set(declared)
        if undeclared:
            raise RepositoryError(
                f"combinator {self.name!r}: undeclared variable(s) "
                f"{', '.join(sorted(undeclared))} in type scheme"
            )
        unused = set(declared) - used
        if unused:
            warnings.warn(
                f"combinator {self.name!r}: declared but unused variable(s) "
                f"{', '.join(sorted(unused))}",
                stacklevel=2,
            )
        for v, domain in self.variables:
            if not domain:
                raise RepositoryError(
                    f"combinator {self.name!r}: empty domain for variable {v!r}"
                )
            for t in domain:
                if not t.is_closed():
                    raise RepositoryError(
                        f"combinator {self.name!r}: open type {show(t)} in the "
                        f"domain of variable {v!r}"
                    )

    def substitutions(self) -> list[Substitution]:
        """Cartesian product of the variable domains, in declaration order.

        An ``explicitSubstitutions`` list in the source document overrides
        the product.  A variable-free combinator yields one empty
        substitution.
        """
        if self.explicit_substitutions is not None:
            return list(self.explicit_substitutions)
        names = [v for v, _ in self.variables]
        domains = [domain for _, domain in self.variables]
        return [
            Substitution(tuple(zip(names, combo)))
            for combo in itertools.product(*domains)
        ]


@dataclass(frozen=True)
class Repository:
    combinators: tuple[Combinator, ...]
    taxonomy: Taxonomy = field(default_factory=Taxonomy)

    def __post_init__(self):
        names = [c.name for c in self.combinators]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise RepositoryError(
                f"duplicate combinator name(s): {', '.join(sorted(dupes))}"
            )

    def combinator(self, name: str) -> Combinator:
        for c in self.combinators:
            if c.name == name:
                return c
        raise KeyError(name)


def substitutions(c: Combinator) -> list[Substitution]:
    return c.substitutions()


def load_repository(document: str | dict) -> Repository:
    """Parse and validate a repository JSON document (text or parsed dict)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise RepositoryError(f"malformed JSON: {e}") from e
    if not isinstance(document, dict):
        raise RepositoryError("repository document must be a JSON object")

    combinators = []
    for entry in document.get("combinators", []):
        name = entry.get("name")
        if not name or not isinstance(name, str):
            raise RepositoryError("combinator entry without a name")
        var_specs = entry.get("variables", []) or []
        var_names = {v["name"] for v in var_specs}

        def parse_in(text: str, where: str) -> Type:
            if not isinstance(text, str):
                raise RepositoryError(
                    f"combinator {name!r}: {where}: expected a type string"
                )
            try:
                return parse_type(text, var_names)
            except TypeSyntaxError as e:
                raise RepositoryError(
                    f"combinator {name!r}: {where}: {e}"
                ) from e

        scheme = parse_in(entry.get("type", ""), "type")
        variables = tuple(
            (
                v["name"],
                tuple(
                    parse_in(d, f"domain of variable {v['name']!r}")
                    for d in v.get("domain", [])
                ),
            )
            for v in var_specs
        )
        explicit = None
        if "explicitSubstitutions" in entry:
            explicit = tuple(
                Substitution(
                    tuple(
                        (var, parse_in(text, f"explicit substitution of {var!r}"))
                        for var, text in sub.items()
                    )
                )
                for sub in entry["explicitSubstitutions"]
            )
        try:
            combinators.append(
                Combinator(
                    name=name,
                    type_scheme=scheme,
                    variables=variables,
                    explicit_substitutions=explicit,
                    source_info=entry.get("source"),
                )
            )
        except RepositoryError:
            raise
    taxonomy = Taxonomy.of(
        (edge["sub"], edge["super"]) for edge in document.get("taxonomy", [])
    )
    return Repository(tuple(combinators), taxonomy)


def repository_to_document(repo: Repository) -> dict:
    """Canonical JSON document for ``repo`` (round-trips through load)."""
    out: dict = {"combinators": [], "taxonomy": []}
    for c in repo.combinators:
        entry: dict = {"name": c.name, "type": show(c.type_scheme)}
        if c.variables:
            entry["variables"] = [
                {"name": v, "domain": [show(t) for t in domain]}
                for v, domain in c.variables
            ]
        if c.explicit_substitutions is not None:
            entry["explicitSubstitutions"] = [
                {var: show(t) for var, t in s.mapping}
                for s in c.explicit_substitutions
            ]
        if c.source_info is not None:
            entry["source"] = c.source_info
        out["combinators"].append(entry)
    out["taxonomy"] = [
        {"sub": sub, "super": sup} for sub, sup in sorted(repo.taxonomy.edges)
    ]
    return out


def print_repository(repo: Repository) -> str:
    return json.dumps(repository_to_document(repo), indent=2)
