#!/usr/bin/env python3
"""Build the running breakfast example, parse/render it, inspect attacks.

The framework pits a sweet breakfast (maple syrup) against a savory one
(burrito), with taco bell, portion size, and cost sniping from the side.
"""

from argfacets import ArgumentationFramework, parse_framework, render_framework

F = ArgumentationFramework(
    ["w", "s", "b", "m", "t", "e", "p"],
    [
        ("w", "s"), ("s", "w"),        # sweet vs savory
        ("s", "m"),                    # savory rules out maple syrup
        ("w", "b"),                    # sweet rules out the burrito
        ("m", "t"),                    # no maple syrup at taco bell
        ("t", "e"), ("p", "e"),        # both alternatives dodge the expense
        ("p", "t"), ("t", "p"),        # small portions vs taco bell
        ("e", "b"),                    # expensive ingredients hurt the burrito
    ],
)

print(f"{F.n_arguments} arguments, {F.n_attacks} attacks")
for a in F.arguments:
    attackers = ", ".join(F.names_of(F.attackers_of(a.index))) or "-"
    print(f"  {a.name}: attacked by {attackers}")

print("\napx rendering:")
apx = render_framework(F, "apx")
print(apx)

print("the rendering parses back to an equal framework:",
      parse_framework(apx, "apx") == F)

print("\niccma23 rendering (names become positional):")
print(render_framework(F, "iccma23"))
