#!/usr/bin/env python3
"""Facets and significance on the breakfast example.

Six of the seven arguments are stable facets (only the expense argument
is settled).  Accepting "sweet" resolves everything at once, so it gets
significance 1; rejecting it still leaves the taco-bell-vs-portion
question open and only scores 2/3.
"""

from argfacets import (
    ArgumentationFramework,
    Constraints,
    Semantics,
    facet_report,
    significance_table,
)

F = ArgumentationFramework(
    ["w", "s", "b", "m", "t", "e", "p"],
    [("w", "s"), ("s", "w"), ("s", "m"), ("w", "b"), ("m", "t"),
     ("t", "e"), ("p", "t"), ("t", "p"), ("p", "e"), ("e", "b")],
)

report = facet_report(F, Semantics.STABLE)
print("credulous:", " ".join(sorted(F.names_of(report.cred))))
print("skeptical:", " ".join(sorted(F.names_of(report.skep))) or "(none)")
print("facets:   ", " ".join(sorted(F.names_of(report.facets))))

print("\nsignificance (literal, remaining facets, score):")
for entry in significance_table(F, Semantics.STABLE):
    print(f"  {entry.literal.render(F):>3}  {entry.remaining_facets}  {entry.score}")

print("\nafter requiring s (savory):")
restricted = facet_report(
    F, Semantics.STABLE, Constraints(require_in=F.argument_set(["s"]))
)
print("facets:", " ".join(sorted(F.names_of(restricted.facets))))
