"""Shared test oracles: definition-level reimplementations and builders.

Everything here leans on `brute_force`/`satisfies` or on direct loops
over the attack relation, never on the search engine, so tests that
compare engine output against these helpers are genuine dual routes.
"""

from __future__ import annotations

from argfacets import (
    ArgumentationFramework,
    ArgumentSet,
    Semantics,
    brute_force,
)

EX1_NAMES = ["w", "s", "b", "m", "t", "e", "p"]
EX1_ATTACKS = [
    ("w", "s"), ("s", "w"), ("s", "m"), ("w", "b"), ("m", "t"),
    ("t", "e"), ("p", "t"), ("t", "p"), ("p", "e"), ("e", "b"),
]


def make_ex1() -> ArgumentationFramework:
    return ArgumentationFramework(EX1_NAMES, EX1_ATTACKS)


def names(F: ArgumentationFramework, argset: ArgumentSet) -> set[str]:
    return set(F.names_of(argset))


def ext_names(F: ArgumentationFramework, extensions) -> set[frozenset[str]]:
    return {frozenset(F.names_of(e)) for e in extensions}


def brute_cred_skep(F, sigma, constraints=None) -> tuple[int, int]:
    """(union, intersection) masks over the brute-force extension list;
    an empty list yields the vacuous intersection (all arguments)."""
    exts = brute_force(F, sigma, constraints)
    union, inter = 0, F.all_mask
    for e in exts:
        union |= e.mask
        inter &= e.mask
    if not exts:
        inter = F.all_mask
    return union, inter


def brute_facet_mask(F, sigma, constraints=None) -> int:
    union, inter = brute_cred_skep(F, sigma, constraints)
    return union & ~inter


def brute_is_facet(F, sigma, name: str, constraints=None) -> bool:
    return bool(brute_facet_mask(F, sigma, constraints) >> F.index_of(name) & 1)


def defended_by_definition(F, members: set[str]) -> set[str]:
    """Literal reading of the defense condition, via attack-pair loops."""
    out = set()
    for a in F.names():
        ok = True
        for (x, y) in F.attacks:
            if F.name_of(y) == a:
                attacker = F.name_of(x)
                if not any(
                    F.has_attack(m, attacker) for m in members
                ):
                    ok = False
        if ok:
            out.add(a)
    return out


def range_by_definition(F, members: set[str]) -> set[str]:
    out = set(members)
    for (x, y) in F.attacks:
        if F.name_of(x) in members:
            out.add(F.name_of(y))
    return out


def mutual_pairs_af(k: int) -> ArgumentationFramework:
    """k independent mutually-attacking pairs: 2^k stable extensions."""
    names, attacks = [], []
    for i in range(k):
        a, b = f"p{i}a", f"p{i}b"
        names += [a, b]
        attacks += [(a, b), (b, a)]
    return ArgumentationFramework(names, attacks)


def random_suite(count: int, *, max_n: int = 8, probs=(0.1, 0.25, 0.5), seed0: int = 0):
    """Deterministic stream of (framework, probability) fixtures."""
    from argfacets import random_af

    out = []
    for i in range(count):
        n = 2 + (seed0 + i) % (max_n - 1)
        p = probs[i % len(probs)]
        out.append(random_af(n, p, seed0 + 7919 * i))
    return out
