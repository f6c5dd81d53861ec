"""Facet reasoning: facet sets, decision problems, significance, sessions.

A facet is an argument that is credulously but not skeptically accepted
under the chosen semantics.  The number of remaining facets after
approving or disapproving an argument measures how much that decision
pins down the extension space; the significance score is the fraction
of facets it eliminates, kept as an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    EmptyHistoryError,
    FrameworkError,
    NotACurrentFacetError,
    NotAFacetError,
)
from .framework import ArgumentationFramework, ArgumentSet, Semantics
from .search import (
    NO_CONSTRAINTS,
    Budget,
    Constraints,
    SearchStats,
    _first_witness,
    _validate,
    enumerate_extensions,
)


class Polarity(str, Enum):
    APPROVE = "approve"
    DISAPPROVE = "disapprove"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True, slots=True)
class Literal:
    """An argument index together with an approve/disapprove polarity."""

    argument: int
    polarity: Polarity

    def applied_to(self, c: Constraints) -> Constraints:
        if self.polarity is Polarity.APPROVE:
            return c.requiring_in(self.argument)
        return c.requiring_out(self.argument)

    def render(self, F: ArgumentationFramework) -> str:
        name = F.name_of(self.argument)
        return name if self.polarity is Polarity.APPROVE else f"~{name}"


def approve(F: ArgumentationFramework, ref: str | int) -> Literal:
    return Literal(_resolve(F, ref), Polarity.APPROVE)


def disapprove(F: ArgumentationFramework, ref: str | int) -> Literal:
    return Literal(_resolve(F, ref), Polarity.DISAPPROVE)


def _resolve(F: ArgumentationFramework, ref: str | int) -> int:
    if isinstance(ref, int):
        if not 0 <= ref < F.n_arguments:
            raise FrameworkError(f"argument index {ref} out of range")
        return ref
    return F.index_of(ref)


@dataclass(frozen=True, slots=True)
class FacetReport:
    """Credulous/skeptical consequence sets and their difference."""

    semantics: Semantics
    constraints: Constraints
    cred: ArgumentSet
    skep: ArgumentSet
    facets: ArgumentSet

    def __post_init__(self):
        if self.facets != self.cred - self.skep:
            raise FrameworkError("facets must equal cred minus skep")


@dataclass(frozen=True, slots=True)
class SignificanceEntry:
    literal: Literal
    remaining_facets: int
    score: Fraction


def _narrowed_report(
    F: ArgumentationFramework,
    sigma: Semantics,
    c: Constraints,
    stats: SearchStats | None,
    deadline_s: float | None,
) -> FacetReport:
    from .search import credulous_set, skeptical_set

    cred = credulous_set(F, sigma, c, stats=stats, deadline_s=deadline_s)
    skep = skeptical_set(F, sigma, c, stats=stats, deadline_s=deadline_s)
    return FacetReport(sigma, c, cred, skep, cred - skep)


def _closed_form_report(
    F: ArgumentationFramework, sigma: Semantics
) -> FacetReport:
    """Unconstrained cnf/nai facet sets in polynomial time.

    cnf: the empty set is always conflict-free, so nothing is skeptical
    and every non-self-attacking argument is a facet.  nai: a clean
    argument is a facet iff it is in conflict with at least one *other*
    clean argument; clean arguments whose only conflicts involve
    self-attackers sit in every naive extension.
    """
    clean = F.all_mask & ~F.self_attack_mask
    if sigma is Semantics.CONFLICT_FREE:
        cred = clean
        skep = 0
    else:
        cred = clean
        skep = 0
        m = clean
        while m:
            low = m & -m
            m ^= low
            i = low.bit_length() - 1
            partners = (F.attackers_mask[i] | F.targets_mask[i]) & clean & ~low
            if partners == 0:
                skep |= low
    return FacetReport(
        sigma,
        NO_CONSTRAINTS,
        ArgumentSet.from_mask(cred),
        ArgumentSet.from_mask(skep),
        ArgumentSet.from_mask(cred & ~skep),
    )


def facet_report(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    *,
    use_closed_form: bool = True,
    stats: SearchStats | None = None,
    deadline_s: float | None = None,
) -> FacetReport:
    """Compute cred, skep and facets under the given constraints.

    Unconstrained cnf/nai take the closed-form fast path unless
    ``use_closed_form=False`` forces the generic narrowing (the two must
    agree; the test suite checks that).
    """
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    if (
        use_closed_form
        and c.is_empty()
        and sigma in (Semantics.CONFLICT_FREE, Semantics.NAIVE)
    ):
        return _closed_form_report(F, sigma)
    return _narrowed_report(F, sigma, c, stats, deadline_s)


def is_facet(
    F: ArgumentationFramework,
    sigma: Semantics,
    ref: str | int,
    constraints: Constraints | None = None,
    *,
    stats: SearchStats | None = None,
) -> bool:
    """Two early-exit witness queries: one containing, one excluding."""
    a = _resolve(F, ref)
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    if a in c.require_in or a in c.require_out:
        return False
    with_a = _first_witness(F, sigma, c.requiring_in(a), [], None, stats)
    if with_a is None:
        return False
    without_a = _first_witness(F, sigma, c.requiring_out(a), [], None, stats)
    return without_a is not None


def count_facets(
    F: ArgumentationFramework,
    sigma: Semantics,
    *,
    stats: SearchStats | None = None,
) -> int:
    return len(facet_report(F, sigma, stats=stats).facets)


def has_at_least(
    F: ArgumentationFramework,
    sigma: Semantics,
    k: int,
    *,
    stats: SearchStats | None = None,
) -> bool:
    """Early exit in both directions once the answer is decided."""
    if k < 0:
        raise FrameworkError("facet count bound must be >= 0")
    if k == 0:
        return True
    sigma = Semantics(sigma)
    if sigma in (Semantics.CONFLICT_FREE, Semantics.NAIVE):
        return len(facet_report(F, sigma).facets) >= k
    n = F.n_arguments
    confirmed = 0
    for a in range(n):
        if confirmed + (n - a) < k:
            return False
        if is_facet(F, sigma, a, stats=stats):
            confirmed += 1
            if confirmed >= k:
                return True
    return False


def has_at_most(
    F: ArgumentationFramework,
    sigma: Semantics,
    k: int,
    *,
    stats: SearchStats | None = None,
) -> bool:
    if k < 0:
        raise FrameworkError("facet count bound must be >= 0")
    return not has_at_least(F, sigma, k + 1, stats=stats)


def has_exactly(
    F: ArgumentationFramework,
    sigma: Semantics,
    k: int,
    *,
    stats: SearchStats | None = None,
) -> bool:
    return has_at_least(F, sigma, k, stats=stats) and has_at_most(
        F, sigma, k, stats=stats
    )


def significance(
    F: ArgumentationFramework,
    sigma: Semantics,
    literal: Literal,
    *,
    stats: SearchStats | None = None,
) -> SignificanceEntry:
    """Fraction of facets eliminated by approving the literal.

    Only defined when the literal's argument is a facet; the score is
    ``(|Facet| - |Facet_literal|) / |Facet|`` as an exact rational.
    """
    report = facet_report(F, sigma, stats=stats)
    return _significance_against(F, sigma, literal, report, NO_CONSTRAINTS, stats)


def _significance_against(
    F: ArgumentationFramework,
    sigma: Semantics,
    literal: Literal,
    report: FacetReport,
    base: Constraints,
    stats: SearchStats | None,
) -> SignificanceEntry:
    if literal.argument not in report.facets:
        raise NotAFacetError(
            f"{F.name_of(literal.argument)!r} is not a {sigma.value}-facet here"
        )
    total = len(report.facets)
    restricted = facet_report(F, sigma, literal.applied_to(base), stats=stats)
    remaining = len(restricted.facets)
    return SignificanceEntry(literal, remaining, Fraction(total - remaining, total))


def significance_table(
    F: ArgumentationFramework,
    sigma: Semantics,
    *,
    stats: SearchStats | None = None,
) -> list[SignificanceEntry]:
    """Both polarities for every facet, canonically ordered.

    Order: descending score, then ascending argument index, approvals
    before disapprovals.  Non-facets are omitted.
    """
    report = facet_report(F, sigma, stats=stats)
    return _table_against(F, sigma, report, NO_CONSTRAINTS, stats)


def _table_against(
    F: ArgumentationFramework,
    sigma: Semantics,
    report: FacetReport,
    base: Constraints,
    stats: SearchStats | None,
) -> list[SignificanceEntry]:
    entries = []
    for a in report.facets:
        for pol in (Polarity.APPROVE, Polarity.DISAPPROVE):
            entries.append(
                _significance_against(
                    F, sigma, Literal(a, pol), report, base, stats
                )
            )
    entries.sort(
        key=lambda e: (
            -e.score,
            e.literal.argument,
            e.literal.polarity is not Polarity.APPROVE,
        )
    )
    return entries


@dataclass(frozen=True, slots=True)
class SessionState:
    history: tuple[Literal, ...]
    facets: ArgumentSet
    significance: tuple[SignificanceEntry, ...]


class NavigationSession:
    """An immutable navigation step: framework, semantics, approvals so far.

    `approve` returns a new session (the old one stays valid), `undo`
    returns the previous one.  Approvals are restricted to facets of the
    *current* constrained space, which keeps that space non-empty.
    Significance inside a session is re-based on the current space: the
    current facet set plays the role of the whole.
    """

    __slots__ = ("framework", "semantics", "history", "report", "_parent")

    def __init__(
        self,
        framework: ArgumentationFramework,
        semantics: Semantics,
        history: tuple[Literal, ...] = (),
        report: FacetReport | None = None,
        parent: "NavigationSession | None" = None,
    ):
        self.framework = framework
        self.semantics = Semantics(semantics)
        self.history = history
        if report is None:
            report = facet_report(framework, self.semantics, self.constraints())
        self.report = report
        self._parent = parent

    def constraints(self) -> Constraints:
        c = NO_CONSTRAINTS
        for lit in self.history:
            c = lit.applied_to(c)
        return c

    def approve(self, literal: Literal | str | int, polarity: Polarity | None = None) -> "NavigationSession":
        if not isinstance(literal, Literal):
            if polarity is None:
                polarity = Polarity.APPROVE
            literal = Literal(_resolve(self.framework, literal), Polarity(polarity))
        if literal.argument not in self.report.facets:
            raise NotACurrentFacetError(
                f"{self.framework.name_of(literal.argument)!r} is not a facet "
                "of the current space"
            )
        history = self.history + (literal,)
        report = facet_report(
            self.framework, self.semantics, literal.applied_to(self.constraints())
        )
        return NavigationSession(
            self.framework, self.semantics, history, report, parent=self
        )

    def undo(self) -> "NavigationSession":
        if self._parent is None:
            raise EmptyHistoryError("nothing to undo")
        return self._parent

    def state(self) -> SessionState:
        table = _table_against(
            self.framework, self.semantics, self.report, self.constraints(), None
        )
        return SessionState(self.history, self.report.facets, tuple(table))

    def sample_extension(self) -> ArgumentSet | None:
        res = enumerate_extensions(
            self.framework, self.semantics, self.constraints(), Budget(max_models=1)
        )
        return res.extensions[0] if res.extensions else None


def session_create(F: ArgumentationFramework, sigma: Semantics) -> NavigationSession:
    return NavigationSession(F, sigma)


def session_approve(
    s: NavigationSession, literal: Literal | str | int, polarity: Polarity | None = None
) -> NavigationSession:
    return s.approve(literal, polarity)


def session_undo(s: NavigationSession) -> NavigationSession:
    return s.undo()


def session_state(s: NavigationSession) -> SessionState:
    return s.state()
