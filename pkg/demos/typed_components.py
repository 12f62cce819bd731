"""
Synthesizing pipelines from a typed component repository
========================================================

Combinators do not have to be grid moves.  Here a handful of data-processing
components are described by intersection types; inhabitation then composes
them into every well-typed pipeline producing a report.  Variables with
finite domains give cheap polymorphism, and a taxonomy declares that every
CSV source is also a table source.
"""

from combsynth import enumerate_terms, inhabit_type, load_repository, parse_type

repo = load_repository(
    {
        "combinators": [
            {"name": "sales_csv", "type": "Csv"},
            {"name": "inventory_csv", "type": "Csv"},
            # parse works on any table-shaped source
            {"name": "parse", "type": "Table -> Frame(Raw)"},
            # clean is usable both as a raw->tidy step and a tidy no-op
            {
                "name": "clean",
                "type": "(Frame(Raw) -> Frame(Tidy)) & (Frame(Tidy) -> Frame(Tidy))",
            },
            # summarize is polymorphic over the frame stage it accepts
            {
                "name": "summarize",
                "type": "Frame(s) -> Report",
                "variables": [{"name": "s", "domain": ["Raw", "Tidy"]}],
            },
        ],
        "taxonomy": [{"sub": "Csv", "super": "Table"}],
    }
)

trace = inhabit_type(repo, parse_type("Report"))
print(f"{len(trace.steps)} search steps, {len(trace.pruned.rules)} useful rules")

# Every pipeline of size <= 4, smallest first.  Note that the taxonomy is
# what licenses parse(sales_csv): Csv <= Table.
for term in enumerate_terms(trace.pruned, trace.pruned.start, 100, max_size=4):
    print(f"  {term}")

# A target no component produces fails immediately, with the step record
# carrying the reason.
trace = inhabit_type(repo, parse_type("Chart"))
print(f"\nChart: {trace.steps[0].failure.value}")
