"""Instance generators: CNF/QBF translations, gadgets, random fixtures.

Each generator materializes one of the known framework constructions so
its characteristic facet law can be exercised as an executable property:

* `standard_translation` -- CNF formula to framework; satisfiability
  shows up as the facet count 2n+m+1 versus 2n+m (adm/comp/stab).
* `duplicate_argument`   -- clone with mutual attacks; credulous
  acceptance of the original becomes facet-hood of either clone.
* `copy_gadget`          -- n-1 mirrored copies; facet-hood transfers to
  every copy for pref/semi/stag (and provably not for adm).
* `satunsat_instance`    -- disjoint pair encoding SAT-UNSAT as an exact
  facet count.
* `qbf_reduction`        -- forall-exists QBF; with the satisfiability
  guard, the formula argument is a pref-facet iff the QBF is false.

Small exhaustive sweeps (`cnf_satisfiable`, `qbf_is_true`) serve as the
independent truth oracles for those laws.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import FormulaError
from .framework import ArgumentationFramework

MAX_SWEEP_VARS = 24


@dataclass(frozen=True, slots=True)
class CnfFormula:
    """CNF over variables 1..n_vars; clauses are DIMACS-signed tuples."""

    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_vars < 0:
            raise FormulaError("negative variable count")
        for clause in self.clauses:
            if not clause:
                raise FormulaError("empty clause")
            seen = set()
            for lit in clause:
                v = abs(lit)
                if lit == 0 or v > self.n_vars:
                    raise FormulaError(f"literal {lit} out of range 1..{self.n_vars}")
                if -lit in seen:
                    raise FormulaError(f"tautological clause {clause}")
                seen.add(lit)

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True, slots=True)
class QbfForallExists:
    """A forall-exists QBF: universal X, existential Y, CNF matrix."""

    universal: frozenset[int]
    existential: frozenset[int]
    matrix: CnfFormula

    def __post_init__(self):
        if self.universal & self.existential:
            raise FormulaError("universal and existential variables overlap")
        scope = self.universal | self.existential
        for clause in self.matrix.clauses:
            for lit in clause:
                if abs(lit) not in scope:
                    raise FormulaError(f"matrix variable {abs(lit)} is unquantified")


def cnf_satisfiable(phi: CnfFormula) -> bool:
    """Exhaustive assignment sweep; the SAT oracle for the facet laws."""
    if phi.n_vars > MAX_SWEEP_VARS:
        raise FormulaError(f"sweep limited to {MAX_SWEEP_VARS} variables")
    variables = sorted({abs(lit) for c in phi.clauses for lit in c})
    for bits in itertools.product((False, True), repeat=len(variables)):
        assign = dict(zip(variables, bits))
        if all(
            any(assign[abs(lit)] == (lit > 0) for lit in clause)
            for clause in phi.clauses
        ):
            return True
    return not phi.clauses


def qbf_is_true(qbf: QbfForallExists) -> bool:
    """Exhaustive two-level sweep; the truth oracle for the QBF law."""
    uni = sorted(qbf.universal)
    exi = sorted(qbf.existential)
    if len(uni) + len(exi) > MAX_SWEEP_VARS:
        raise FormulaError(f"sweep limited to {MAX_SWEEP_VARS} variables")
    for ubits in itertools.product((False, True), repeat=len(uni)):
        fixed = dict(zip(uni, ubits))
        witness = False
        for ebits in itertools.product((False, True), repeat=len(exi)):
            assign = {**fixed, **dict(zip(exi, ebits))}
            if all(
                any(assign[abs(lit)] == (lit > 0) for lit in clause)
                for clause in qbf.matrix.clauses
            ):
                witness = True
                break
        if not witness:
            return False
    return True


# -- DIMACS / QDIMACS ------------------------------------------------------


def _dimacs_tokens(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(("c", "%")):
            continue
        rows.append(line.split())
    return rows


def parse_dimacs(text: str) -> CnfFormula:
    """Standard ``p cnf n m`` DIMACS; clauses may span lines."""
    rows = _dimacs_tokens(text)
    if not rows or rows[0][:2] != ["p", "cnf"] or len(rows[0]) != 4:
        raise FormulaError("malformed header (expected 'p cnf N M')")
    try:
        n, m = int(rows[0][2]), int(rows[0][3])
    except ValueError:
        raise FormulaError("malformed header (expected 'p cnf N M')") from None
    clauses, current = _read_clauses(rows[1:], n, m)
    if current:
        raise FormulaError("unterminated clause (missing 0)")
    if len(clauses) != m:
        raise FormulaError(f"header promises {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def _read_clauses(rows, n: int, m: int):
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for row in rows:
        if len(clauses) >= m:
            break
        for tok in row:
            try:
                lit = int(tok)
            except ValueError:
                raise FormulaError(f"unexpected token {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
                if len(clauses) >= m:
                    break
            else:
                if abs(lit) > n:
                    raise FormulaError(f"literal {lit} out of range 1..{n}")
                current.append(lit)
    return clauses, current


def parse_qdimacs_ae(text: str) -> QbfForallExists:
    """Restricted QDIMACS: one ``a`` line, then one ``e`` line, then CNF."""
    rows = _dimacs_tokens(text)
    if not rows or rows[0][:2] != ["p", "cnf"] or len(rows[0]) != 4:
        raise FormulaError("malformed header (expected 'p cnf N M')")
    n, m = int(rows[0][2]), int(rows[0][3])
    quant = [row for row in rows[1:] if row[0] in ("a", "e")]
    body = [row for row in rows[1:] if row[0] not in ("a", "e")]
    if len(quant) != 2 or quant[0][0] != "a" or quant[1][0] != "e":
        raise FormulaError("unsupported quantifier prefix (need one 'a' then one 'e')")

    def block(row):
        if row[-1] != "0":
            raise FormulaError("quantifier line must end with 0")
        out = set()
        for tok in row[1:-1]:
            v = int(tok)
            if not 1 <= v <= n:
                raise FormulaError(f"quantified variable {v} out of range 1..{n}")
            out.add(v)
        return frozenset(out)

    universal, existential = block(quant[0]), block(quant[1])
    if universal & existential:
        raise FormulaError("variable quantified twice")
    clauses, current = _read_clauses(body, n, m)
    if current:
        raise FormulaError("unterminated clause (missing 0)")
    if len(clauses) != m:
        raise FormulaError(f"header promises {m} clauses, found {len(clauses)}")
    return QbfForallExists(universal, existential, CnfFormula(n, tuple(clauses)))


# -- framework constructions -------------------------------------------------


def _lit_name(lit: int, prefix: str) -> str:
    v = abs(lit)
    return f"{prefix}x{v}" if lit > 0 else f"{prefix}nx{v}"


def standard_translation(
    phi: CnfFormula, *, prefix: str = ""
) -> ArgumentationFramework:
    """Formula argument, one argument per clause, two per variable.

    Attacks: every clause attacks the formula; complementary literals
    attack each other; each literal attacks the clauses it occurs in.
    Total 2n+m+1 arguments.
    """
    names = [f"{prefix}phi"]
    names += [f"{prefix}c{i}" for i in range(1, phi.n_clauses + 1)]
    for v in range(1, phi.n_vars + 1):
        names += [f"{prefix}x{v}", f"{prefix}nx{v}"]
    attacks: list[tuple[str, str]] = []
    for i in range(1, phi.n_clauses + 1):
        attacks.append((f"{prefix}c{i}", f"{prefix}phi"))
    for v in range(1, phi.n_vars + 1):
        attacks.append((f"{prefix}x{v}", f"{prefix}nx{v}"))
        attacks.append((f"{prefix}nx{v}", f"{prefix}x{v}"))
    for i, clause in enumerate(phi.clauses, start=1):
        for lit in clause:
            attacks.append((_lit_name(lit, prefix), f"{prefix}c{i}"))
    return ArgumentationFramework(names, attacks)


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


def duplicate_argument(
    F: ArgumentationFramework, ref: str | int
) -> ArgumentationFramework:
    """Append a clone of the argument: mutual attacks with the original
    plus mirrored copies of all its incoming and outgoing attacks (a
    self-attack mirrors to a self-attack on the clone)."""
    a = ref if isinstance(ref, int) else F.index_of(ref)
    names = list(F.names())
    clone = _fresh_name(names[a] + "_dup", set(names))
    names.append(clone)
    attacks: list[tuple[str | int, str | int]] = list(F.attacks)
    c = len(names) - 1
    attacks += [(a, c), (c, a)]
    for x, y in F.attacks:
        if x == a:
            attacks.append((c, c if y == a else y))
        elif y == a:
            attacks.append((x, c))
    return ArgumentationFramework(names, attacks)


def copy_gadget(
    F: ArgumentationFramework, ref: str | int, n: int
) -> ArgumentationFramework:
    """Add ``n - 1`` fresh copies of the argument, each mirroring its
    incoming and outgoing attacks; copies neither attack each other nor
    themselves.  ``n = 1`` returns the framework unchanged.

    The facet-transfer law for pref/semi/stag targets non-self-attacking
    arguments: mirroring keeps copies of a self-attacker clean, which
    lets them slip into conflict-free sets the original never joins (the
    same asymmetry the admissible-semantics counterexample exploits).
    """
    if n < 1:
        raise FormulaError("copy count must be >= 1")
    a = ref if isinstance(ref, int) else F.index_of(ref)
    if n == 1:
        return F
    names = list(F.names())
    original_n = len(names)
    for i in range(2, n + 1):
        names.append(_fresh_name(f"{names[a]}_copy{i}", set(names)))
    attacks: list[tuple[int, int]] = list(F.attacks)
    for i in range(n - 1):
        c = original_n + i
        for x, y in F.attacks:
            if x == a:
                attacks.append((c, y))
            if y == a:
                attacks.append((x, c))
    return ArgumentationFramework(names, attacks)


def union_frameworks(
    F1: ArgumentationFramework, F2: ArgumentationFramework
) -> ArgumentationFramework:
    overlap = set(F1.names()) & set(F2.names())
    if overlap:
        raise FormulaError(f"frameworks share argument names: {sorted(overlap)}")
    names = list(F1.names()) + list(F2.names())
    attacks = [(F1.name_of(a), F1.name_of(b)) for a, b in F1.attacks]
    attacks += [(F2.name_of(a), F2.name_of(b)) for a, b in F2.attacks]
    return ArgumentationFramework(names, attacks)


@dataclass(frozen=True, slots=True)
class SatUnsatInstance:
    """Framework plus the facet count reached exactly on positive
    SAT-UNSAT instances (phi satisfiable, psi unsatisfiable)."""

    framework: ArgumentationFramework
    target_facets: int
    phi_argument: str
    psi_argument: str


def satunsat_instance(phi: CnfFormula, psi: CnfFormula) -> SatUnsatInstance:
    """Disjoint union of the duplicated-phi translation and psi's.

    For adm/comp/stab: the duplicated phi part contributes all of its
    2n+m+2 arguments as facets iff phi is satisfiable (2n+m otherwise),
    psi's part contributes 2n+m of its arguments always and the formula
    argument iff psi is satisfiable.  The target is hit exactly on
    positive instances.
    """
    left = duplicate_argument(standard_translation(phi, prefix="p_"), "p_phi")
    right = standard_translation(psi, prefix="q_")
    target = (2 * phi.n_vars + phi.n_clauses + 2) + (
        2 * psi.n_vars + psi.n_clauses + 1
    ) - 1
    return SatUnsatInstance(
        union_frameworks(left, right), target, "p_phi", "q_phi"
    )


def qbf_reduction(qbf: QbfForallExists) -> ArgumentationFramework:
    """Framework whose preferred extensions mirror the QBF's truth.

    Arguments: phi, nphi, one per clause, two per variable.  Clause
    arguments are self-attacking, so they never join an extension; they
    only oblige phi to be defended by a covering assignment.  nphi is
    attacked by phi (one way) and attacks both literals of every
    existential variable, so an existential literal can only be adopted
    alongside phi.  Universal literals defend themselves, hence every
    pure universal assignment is admissible; it is subset-maximal
    exactly when no existential completion satisfies the matrix.  When
    the matrix is satisfiable (see `guard_satisfiable`), phi is a
    pref-facet iff the QBF is false.
    """
    m = qbf.matrix.n_clauses
    variables = sorted(qbf.universal | qbf.existential)
    names = ["phi", "nphi"]
    names += [f"c{i}" for i in range(1, m + 1)]
    for v in variables:
        names += [f"x{v}", f"nx{v}"]
    attacks: list[tuple[str, str]] = []
    for i in range(1, m + 1):
        attacks.append((f"c{i}", "phi"))
        attacks.append((f"c{i}", f"c{i}"))
    for i, clause in enumerate(qbf.matrix.clauses, start=1):
        for lit in clause:
            attacks.append((_lit_name(lit, ""), f"c{i}"))
    for v in variables:
        attacks.append((f"x{v}", f"nx{v}"))
        attacks.append((f"nx{v}", f"x{v}"))
    attacks.append(("phi", "nphi"))
    for v in sorted(qbf.existential):
        attacks.append(("nphi", f"x{v}"))
        attacks.append(("nphi", f"nx{v}"))
    return ArgumentationFramework(names, attacks)


def guard_satisfiable(qbf: QbfForallExists) -> QbfForallExists:
    """Make the matrix satisfiable without changing the QBF's truth.

    Adds a fresh universal variable z and weakens every clause to
    (not-z or clause): setting z false satisfies everything, while the
    z-true branch is the original formula.
    """
    z = qbf.matrix.n_vars + 1
    clauses = tuple((-z,) + clause for clause in qbf.matrix.clauses)
    return QbfForallExists(
        qbf.universal | {z},
        qbf.existential,
        CnfFormula(z, clauses),
    )


# -- random fixtures ---------------------------------------------------------


def random_af(
    n: int, attack_probability: float, seed: int
) -> ArgumentationFramework:
    """Seed-deterministic digraph on ``a1..an``; self-attacks included."""
    if n < 1:
        raise FormulaError("need at least one argument")
    if not 0.0 <= attack_probability <= 1.0:
        raise FormulaError("attack probability must lie in [0, 1]")
    rng = random.Random(seed)
    names = [f"a{i}" for i in range(1, n + 1)]
    attacks = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if rng.random() < attack_probability
    ]
    return ArgumentationFramework(names, attacks)


def random_cnf(n: int, m: int, max_clause_width: int, seed: int) -> CnfFormula:
    """Seed-deterministic CNF; distinct variables per clause, so no
    clause is tautological."""
    if n < 1 or m < 0 or max_clause_width < 1:
        raise FormulaError("need n >= 1, m >= 0, width >= 1")
    rng = random.Random(seed)
    clauses = []
    for _ in range(m):
        width = rng.randint(1, min(max_clause_width, n))
        variables = rng.sample(range(1, n + 1), width)
        clauses.append(
            tuple(v if rng.random() < 0.5 else -v for v in sorted(variables))
        )
    return CnfFormula(n, tuple(clauses))
