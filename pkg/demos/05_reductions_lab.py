#!/usr/bin/env python3
"""Run the instance generators and check their facet laws on the spot.

Every construction carries an executable expectation: the standard
translation counts facets by satisfiability, duplication turns credulous
acceptance into facet-hood, and the guarded QBF reduction makes the
formula argument a preferred facet exactly on false formulas.
"""

from argfacets import (
    CnfFormula,
    QbfForallExists,
    Semantics,
    brute_force,
    cnf_satisfiable,
    count_facets,
    duplicate_argument,
    guard_satisfiable,
    is_facet,
    qbf_is_true,
    qbf_reduction,
    random_af,
    random_cnf,
    satunsat_instance,
    standard_translation,
)


def facet_count_by_oracle(F, sigma):
    exts = brute_force(F, sigma)
    union, inter = 0, F.all_mask
    for e in exts:
        union |= e.mask
        inter &= e.mask
    if not exts:
        inter = F.all_mask
    return (union & ~inter).bit_count()


print("== standard translation ==")
for seed in range(4):
    phi = random_cnf(3, 3, 3, seed)
    F = standard_translation(phi)
    k = 2 * phi.n_vars + phi.n_clauses + 1
    sat = cnf_satisfiable(phi)
    got = count_facets(F, Semantics.STABLE)
    print(f"seed {seed}: satisfiable={sat}  facets={got}  "
          f"(law predicts {k if sat else k - 1})")

print("\n== duplication turns credulous acceptance into a facet ==")
F = random_af(5, 0.3, 12)
for a in F.names():
    D = duplicate_argument(F, a)
    cred = any(
        F.index_of(a) in e for e in brute_force(F, Semantics.PREFERRED)
    )
    print(f"  {a}: credulous={cred}  facet-in-duplicate="
          f"{is_facet(D, Semantics.PREFERRED, a)}")

print("\n== SAT-UNSAT as an exact facet count ==")
inst = satunsat_instance(CnfFormula(1, ((1,),)), CnfFormula(1, ((1,), (-1,))))
print(f"target {inst.target_facets}, oracle says "
      f"{facet_count_by_oracle(inst.framework, Semantics.ADMISSIBLE)}")

print("\n== guarded QBF reduction ==")
for clauses, label in [
    (((1, 2), (-1, -2)), "forall y exists z . (y|z)(~y|~z)"),
    (((1,), (2,)), "forall y exists z . (y)(z)"),
]:
    qbf = QbfForallExists(frozenset({1}), frozenset({2}),
                          CnfFormula(2, clauses))
    F = qbf_reduction(guard_satisfiable(qbf))
    print(f"  {label}: true={qbf_is_true(qbf)}  "
          f"phi-is-pref-facet={is_facet(F, Semantics.PREFERRED, 'phi')}")
