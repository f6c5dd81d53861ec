"""Extension search: enumeration, existence queries, and consequences.

The engine is a backtracking search over in/out labellings with
conflict propagation (choosing an argument forces its attackers and
targets out) and defense-feasibility pruning for admissibility-based
semantics.  Subset-maximal and range-maximal semantics (nai, pref,
semi, stag) emit a candidate only after a nested existence query found
no strictly better witness.

Credulous and skeptical consequence sets are computed by iterative
narrowing: each existence query must touch the complement of the
running union (or drop a member of the running intersection), so at
most ``|A| + 1`` queries are ever issued.

`brute_force` is an independent oracle: a plain subset sweep over the
pointwise `satisfies` predicate, sharing no code with the engine.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BudgetExceededError, FrameworkError, OracleLimitError
from .framework import (
    EMPTY_SET,
    ArgumentationFramework,
    ArgumentSet,
    Semantics,
)
from .semantics import satisfies


@dataclass(frozen=True, slots=True)
class Constraints:
    """Required-in / required-out restrictions on the extension space."""

    require_in: ArgumentSet = EMPTY_SET
    require_out: ArgumentSet = EMPTY_SET

    def __post_init__(self):
        if not self.require_in.isdisjoint(self.require_out):
            raise FrameworkError("require_in and require_out overlap")

    def is_empty(self) -> bool:
        return not self.require_in and not self.require_out

    def requiring_in(self, index: int) -> "Constraints":
        return Constraints(self.require_in.add(index), self.require_out)

    def requiring_out(self, index: int) -> "Constraints":
        return Constraints(self.require_in, self.require_out.add(index))


NO_CONSTRAINTS = Constraints()


@dataclass(frozen=True, slots=True)
class Budget:
    """Bounds on an enumeration: model count and/or wall-clock seconds."""

    max_models: int | None = None
    deadline: float | None = None

    def __post_init__(self):
        if self.max_models is not None and self.max_models < 1:
            raise FrameworkError("max_models must be >= 1 when bounded")
        if self.deadline is not None and self.deadline <= 0:
            raise FrameworkError("deadline must be positive")


@dataclass(frozen=True, slots=True)
class EnumerationResult:
    extensions: tuple[ArgumentSet, ...]
    exhausted: bool


@dataclass(slots=True)
class SearchStats:
    """Counters for instrumentation; shared across nested calls."""

    existence_queries: int = 0
    nested_queries: int = 0
    nodes: int = 0


class _Clause(NamedTuple):
    """Disjunctive side constraint: some pos-bit in, or some neg-bit out."""

    pos: int
    neg: int


_CF_BASE = {Semantics.CONFLICT_FREE, Semantics.NAIVE, Semantics.STAGE, Semantics.STABLE}
_SUBSET_MAXIMAL = {Semantics.NAIVE: Semantics.CONFLICT_FREE,
                   Semantics.PREFERRED: Semantics.ADMISSIBLE}
_RANGE_MAXIMAL = {Semantics.STAGE: Semantics.CONFLICT_FREE,
                  Semantics.SEMI_STABLE: Semantics.ADMISSIBLE}

_TICK_INTERVAL = 256


class _Deadline:
    __slots__ = ("at",)

    def __init__(self, seconds: float):
        self.at = time.monotonic() + seconds


class _Search:
    """One backtracking run; not reusable and not thread-safe."""

    def __init__(
        self,
        F: ArgumentationFramework,
        sigma: Semantics,
        require_in: int,
        require_out: int,
        clauses: list[_Clause],
        deadline: _Deadline | None,
        stats: SearchStats | None,
    ):
        self.F = F
        self.sigma = sigma
        self.att = F.attackers_mask
        self.tgt = F.targets_mask
        self.all_mask = F.all_mask
        self.self_mask = F.self_attack_mask
        self.needs_defense = sigma not in _CF_BASE
        self.require_in = require_in
        self.require_out = require_out
        self.clauses = clauses
        self.deadline = deadline
        self.stats = stats
        self._ticks = 0

    # -- state transitions -------------------------------------------------

    def _initial(self) -> tuple[int, int] | None:
        in_m, out_m = 0, self.require_out
        need = self.require_in
        while need:
            low = need & -need
            need ^= low
            a = low.bit_length() - 1
            if out_m >> a & 1:
                return None
            if not in_m >> a & 1:
                st = self._decide(in_m, out_m, a, True)
                if st is None:
                    return None
                in_m, out_m = st
        if not self._feasible(in_m, out_m):
            return None
        return in_m, out_m

    def _decide(self, in_m: int, out_m: int, a: int, put_in: bool) -> tuple[int, int] | None:
        if put_in:
            if self.self_mask >> a & 1:
                return None
            forced = self.att[a] | self.tgt[a]
            if forced & in_m:
                return None
            in_m |= 1 << a
            out_m |= forced
        else:
            out_m |= 1 << a
        if not self._feasible(in_m, out_m):
            return None
        return in_m, out_m

    def _feasible(self, in_m: int, out_m: int) -> bool:
        # exact at leaves (where avail == in_m), a sound prune elsewhere
        avail = self.all_mask & ~out_m
        att = self.att
        if self.needs_defense:
            m = in_m
            while m:
                low = m & -m
                m ^= low
                atk = att[low.bit_length() - 1]
                while atk:
                    alow = atk & -atk
                    atk ^= alow
                    if att[alow.bit_length() - 1] & avail == 0:
                        return False
        if self.sigma is Semantics.STABLE:
            m = out_m
            while m:
                low = m & -m
                m ^= low
                if att[low.bit_length() - 1] & avail == 0:
                    return False
        not_in = self.all_mask & ~in_m
        for cl in self.clauses:
            if cl.pos & avail == 0 and cl.neg & not_in == 0:
                return False
        return True

    # -- leaf acceptance ---------------------------------------------------

    def _accept(self, in_m: int, out_m: int) -> bool:
        # feasibility already verified exactly; check the closed conditions
        assert self.require_in & ~in_m == 0 and self.require_out & in_m == 0
        if self.sigma is Semantics.COMPLETE:
            hit = 0
            m = in_m
            while m:
                low = m & -m
                m ^= low
                hit |= self.tgt[low.bit_length() - 1]
            defended = 0
            for i in range(self.F.n_arguments):
                if self.att[i] & ~hit == 0:
                    defended |= 1 << i
            if defended != in_m:
                return False
        base = _SUBSET_MAXIMAL.get(self.sigma)
        if base is not None:
            return not self._beaten_subset(in_m, base)
        base = _RANGE_MAXIMAL.get(self.sigma)
        if base is not None:
            return not self._beaten_range(in_m, base)
        return True

    def _beaten_subset(self, in_m: int, base: Semantics) -> bool:
        outside = self.all_mask & ~in_m
        if outside == 0:
            return False
        if self.stats is not None:
            self.stats.nested_queries += 1
        sub = _Search(self.F, base, in_m, 0, [_Clause(outside, 0)],
                      self.deadline, self.stats)
        return sub.first() is not None

    def _beaten_range(self, in_m: int, base: Semantics) -> bool:
        r = 0
        m = in_m
        while m:
            low = m & -m
            m ^= low
            r |= self.tgt[low.bit_length() - 1]
        r |= in_m
        missing = self.all_mask & ~r
        if missing == 0:
            return False
        # witness range must cover r and reach at least one missing argument
        clauses = []
        grow = 0
        m = r
        while m:
            low = m & -m
            m ^= low
            a = low.bit_length() - 1
            clauses.append(_Clause(low | self.att[a], 0))
        m = missing
        while m:
            low = m & -m
            m ^= low
            grow |= low | self.att[low.bit_length() - 1]
        clauses.append(_Clause(grow, 0))
        if self.stats is not None:
            self.stats.nested_queries += 1
        sub = _Search(self.F, base, 0, 0, clauses, self.deadline, self.stats)
        return sub.first() is not None

    # -- driver ------------------------------------------------------------

    def _tick(self):
        if self.stats is not None:
            self.stats.nodes += 1
        if self.deadline is not None:
            self._ticks += 1
            if self._ticks >= _TICK_INTERVAL:
                self._ticks = 0
                if time.monotonic() > self.deadline.at:
                    raise BudgetExceededError("search deadline expired")

    def solutions(self) -> Iterator[int]:
        st = self._initial()
        if st is None:
            return
        in_m, out_m = st
        stack: list[tuple[int, int, int]] = []
        while True:
            self._tick()
            und = self.all_mask & ~(in_m | out_m)
            if und == 0:
                if self._accept(in_m, out_m):
                    yield in_m
                st = None
            else:
                a = (und & -und).bit_length() - 1
                st = self._decide(in_m, out_m, a, True)
                if st is not None:
                    stack.append((in_m, out_m, a))
                else:
                    st = self._decide(in_m, out_m, a, False)
            while st is None:
                if not stack:
                    return
                pin, pout, a = stack.pop()
                st = self._decide(pin, pout, a, False)
            in_m, out_m = st

    def first(self) -> int | None:
        for m in self.solutions():
            return m
        return None


def _validate(F: ArgumentationFramework, c: Constraints) -> Constraints:
    if c.require_in.mask & ~F.all_mask or c.require_out.mask & ~F.all_mask:
        raise FrameworkError("constraints reference arguments outside the framework")
    return c


def enumerate_extensions(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    budget: Budget | None = None,
    *,
    stats: SearchStats | None = None,
) -> EnumerationResult:
    """All sigma-extensions satisfying the constraints, up to the budget.

    ``exhausted`` is False exactly when a budget bound cut the run
    short; the returned list is then a prefix of the full enumeration
    in the engine's deterministic order.
    """
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    deadline = None
    max_models = None
    if budget is not None:
        max_models = budget.max_models
        if budget.deadline is not None:
            deadline = _Deadline(budget.deadline)
    search = _Search(F, sigma, c.require_in.mask, c.require_out.mask, [],
                     deadline, stats)
    found: list[ArgumentSet] = []
    exhausted = True
    try:
        for m in search.solutions():
            found.append(ArgumentSet.from_mask(m))
            if max_models is not None and len(found) >= max_models:
                exhausted = False
                break
    except BudgetExceededError:
        exhausted = False
    return EnumerationResult(tuple(found), exhausted)


def _first_witness(
    F: ArgumentationFramework,
    sigma: Semantics,
    c: Constraints,
    clauses: list[_Clause],
    deadline: _Deadline | None,
    stats: SearchStats | None,
) -> int | None:
    if stats is not None:
        stats.existence_queries += 1
    search = _Search(F, sigma, c.require_in.mask, c.require_out.mask,
                     clauses, deadline, stats)
    return search.first()


def exists_extension(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    *,
    stats: SearchStats | None = None,
) -> bool:
    """Whether some constrained sigma-extension exists (first-witness exit)."""
    c = _validate(F, constraints or NO_CONSTRAINTS)
    return _first_witness(F, Semantics(sigma), c, [], None, stats) is not None


def credulous_set(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    *,
    stats: SearchStats | None = None,
    deadline_s: float | None = None,
) -> ArgumentSet:
    """Union of all constrained sigma-extensions, by iterative narrowing.

    Every query demands a witness touching the complement of the
    running union, so each success strictly grows it: at most
    ``|A| + 1`` existence queries.
    """
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    deadline = _Deadline(deadline_s) if deadline_s is not None else None
    union = 0
    queries = 0
    try:
        while True:
            outside = F.all_mask & ~union
            if outside == 0:
                break
            queries += 1
            w = _first_witness(F, sigma, c, [_Clause(outside, 0)], deadline, stats)
            if w is None:
                break
            union |= w
    except BudgetExceededError as e:
        raise BudgetExceededError(
            "credulous narrowing hit the deadline",
            partial=ArgumentSet.from_mask(union),
        ) from e
    assert queries <= F.n_arguments + 1
    return ArgumentSet.from_mask(union)


def skeptical_set(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    *,
    stats: SearchStats | None = None,
    deadline_s: float | None = None,
) -> ArgumentSet:
    """Intersection of all constrained sigma-extensions.

    When the constrained extension space is empty the intersection is
    vacuous and the full argument set is returned.  Narrowing issues at
    most ``|A| + 1`` existence queries.
    """
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    deadline = _Deadline(deadline_s) if deadline_s is not None else None
    queries = 1
    inter = None
    try:
        w = _first_witness(F, sigma, c, [], deadline, stats)
        if w is None:
            return F.full_set()
        inter = w
        while inter:
            queries += 1
            w = _first_witness(F, sigma, c, [_Clause(0, inter)], deadline, stats)
            if w is None:
                break
            inter &= w
    except BudgetExceededError as e:
        raise BudgetExceededError(
            "skeptical narrowing hit the deadline",
            partial=None if inter is None else ArgumentSet.from_mask(inter),
        ) from e
    assert queries <= F.n_arguments + 1
    return ArgumentSet.from_mask(inter)


DEFAULT_ORACLE_LIMIT = 20


def brute_force(
    F: ArgumentationFramework,
    sigma: Semantics,
    constraints: Constraints | None = None,
    *,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> list[ArgumentSet]:
    """Oracle: all constrained sigma-extensions by direct subset sweep.

    Uses only the pointwise `satisfies` predicate; shares nothing with
    the search engine, so disagreement between the two indicates a bug.
    """
    if F.n_arguments > limit:
        raise OracleLimitError(
            f"{F.n_arguments} arguments exceeds the oracle limit of {limit}"
        )
    c = _validate(F, constraints or NO_CONSTRAINTS)
    sigma = Semantics(sigma)
    need_in = c.require_in.mask
    need_out = c.require_out.mask
    out = []
    for m in range(F.all_mask + 1):
        if m & need_out or need_in & ~m:
            continue
        E = ArgumentSet.from_mask(m)
        if satisfies(F, E, sigma):
            out.append(E)
    return out
