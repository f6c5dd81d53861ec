#!/usr/bin/env python3
"""Steer the extension space interactively with a navigation session.

Each approval shrinks the facet set; undo pops back.  Significance is
re-based on the current space after every step, so the scores always
answer "how much of the *remaining* uncertainty does this kill?".
"""

from argfacets import (
    ArgumentationFramework,
    Polarity,
    Semantics,
    session_approve,
    session_create,
    session_state,
    session_undo,
)

F = ArgumentationFramework(
    ["w", "s", "b", "m", "t", "e", "p"],
    [("w", "s"), ("s", "w"), ("s", "m"), ("w", "b"), ("m", "t"),
     ("t", "e"), ("p", "t"), ("t", "p"), ("p", "e"), ("e", "b")],
)


def show(step, s):
    state = session_state(s)
    hist = " ".join(l.render(F) for l in state.history) or "(start)"
    facets = " ".join(sorted(F.names_of(state.facets))) or "(none)"
    sample = s.sample_extension()
    sample_txt = "{" + ",".join(sorted(F.names_of(sample))) + "}" if sample else "-"
    print(f"{step}: history [{hist}]  facets {{{facets}}}  sample {sample_txt}")
    for e in state.significance[:4]:
        print(f"     {e.literal.render(F):>3} -> score {e.score}")


s = session_create(F, Semantics.STABLE)
show("create", s)

s = session_approve(s, "s", Polarity.APPROVE)
show("approve s", s)

s = session_approve(s, "t", Polarity.DISAPPROVE)
show("disapprove t", s)

s = session_undo(s)
s = session_undo(s)
show("undo twice", s)

s = session_approve(s, "w", Polarity.APPROVE)
show("approve w", s)
print("\nno facets remain: the extension space is fully determined.")
