"""Type inhabitation for Combinatory Logic with intersection types.

Given a repository of typed combinators and a target type, the engine builds
a regular tree grammar of all well-typed combinator compositions, together
with a step-wise search trace, hypergraph views for debugging, and
non-inhabitation reports.
"""

from .grammar import (
    Rule,
    Term,
    TreeGrammar,
    enumerate_terms,
    make_grammar,
    member_of,
    productive_nonterminals,
    prune,
)
from .hypergraph import (
    Hypergraph,
    filter_unproductive,
    from_grammar,
    to_dot,
    to_json,
)
from .inhabitation import (
    DebugTrace,
    InhabitationRequest,
    StepRecord,
    covers,
    inhabit,
    inhabit_type,
    replay,
)
from .labyrinth import gen_labyrinth, labyrinth_repository
from .reports import Report, Reason, report_for
from .repository import (
    Combinator,
    Repository,
    load_repository,
    print_repository,
    substitutions,
)
from .types import (
    OMEGA,
    Arrow,
    Ctor,
    Inter,
    Omega,
    OrganizedType,
    Path,
    Substitution,
    Taxonomy,
    Type,
    Var,
    organize,
    parse_type,
    show,
    subtype,
)

__all__ = [
    "Arrow", "Combinator", "Ctor", "DebugTrace", "Hypergraph",
    "InhabitationRequest", "Inter", "OMEGA", "Omega", "OrganizedType", "Path",
    "Reason", "Report", "Repository", "Rule", "StepRecord", "Substitution",
    "Taxonomy", "Term", "TreeGrammar", "Type", "Var", "covers",
    "enumerate_terms", "filter_unproductive", "from_grammar", "gen_labyrinth",
    "inhabit", "inhabit_type", "labyrinth_repository", "load_repository",
    "make_grammar", "member_of", "organize", "parse_type",
    "print_repository", "productive_nonterminals", "prune", "replay",
    "report_for", "show", "substitutions", "subtype", "to_dot", "to_json",
]
