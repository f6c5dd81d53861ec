"""Pointwise semantics predicates: range, defense, and `satisfies`.

Everything here is self-contained and definition-driven; in particular
`satisfies` never consults the backtracking search engine, so it can
serve as one half of a dual-route check against it.  For the four
semantics that quantify over other sets (nai, pref, semi, stag) the
check sweeps candidate witnesses exhaustively, which is exponential in
the number of arguments; it is meant for moderate frameworks and for
oracle duty, not for production-size instances.
"""

from __future__ import annotations

import weakref

from .framework import ArgumentationFramework, ArgumentSet, Semantics


def _check_subset(F: ArgumentationFramework, E: ArgumentSet) -> int:
    mask = E.mask
    if mask & ~F.all_mask:
        raise ValueError("argument set is not a subset of the framework")
    return mask


def range_mask(F: ArgumentationFramework, mask: int) -> int:
    """Bitmask of ``E`` plus everything ``E`` attacks."""
    out = mask
    targets = F.targets_mask
    m = mask
    while m:
        low = m & -m
        out |= targets[low.bit_length() - 1]
        m ^= low
    return out


def range_of(F: ArgumentationFramework, E: ArgumentSet) -> ArgumentSet:
    """The set ``E`` together with all arguments attacked by ``E``."""
    return ArgumentSet.from_mask(range_mask(F, _check_subset(F, E)))


def defended_mask(F: ArgumentationFramework, mask: int) -> int:
    # a is defended iff every attacker of a is attacked by E
    hit = 0
    m = mask
    targets = F.targets_mask
    while m:
        low = m & -m
        hit |= targets[low.bit_length() - 1]
        m ^= low
    out = 0
    for i in range(F.n_arguments):
        if F.attackers_mask[i] & ~hit == 0:
            out |= 1 << i
    return out


def defended(F: ArgumentationFramework, E: ArgumentSet) -> ArgumentSet:
    """All arguments whose every attacker is attacked by ``E``.

    Unattacked arguments are vacuously defended by any set, including
    the empty one.
    """
    return ArgumentSet.from_mask(defended_mask(F, _check_subset(F, E)))


def is_conflict_free_mask(F: ArgumentationFramework, mask: int) -> bool:
    m = mask
    targets = F.targets_mask
    while m:
        low = m & -m
        if targets[low.bit_length() - 1] & mask:
            return False
        m ^= low
    return True


def is_admissible_mask(F: ArgumentationFramework, mask: int) -> bool:
    if not is_conflict_free_mask(F, mask):
        return False
    hit = 0
    m = mask
    targets = F.targets_mask
    while m:
        low = m & -m
        hit |= targets[low.bit_length() - 1]
        m ^= low
    m = mask
    attackers = F.attackers_mask
    while m:
        low = m & -m
        if attackers[low.bit_length() - 1] & ~hit:
            return False
        m ^= low
    return True


_cf_cache: "weakref.WeakKeyDictionary[ArgumentationFramework, tuple[int, ...]]"
_cf_cache = weakref.WeakKeyDictionary()
_adm_cache: "weakref.WeakKeyDictionary[ArgumentationFramework, tuple[int, ...]]"
_adm_cache = weakref.WeakKeyDictionary()


def _conflict_free_masks(F: ArgumentationFramework) -> tuple[int, ...]:
    got = _cf_cache.get(F)
    if got is None:
        got = tuple(
            m for m in range(F.all_mask + 1) if is_conflict_free_mask(F, m)
        )
        _cf_cache[F] = got
    return got


def _admissible_masks(F: ArgumentationFramework) -> tuple[int, ...]:
    got = _adm_cache.get(F)
    if got is None:
        got = tuple(
            m for m in _conflict_free_masks(F) if is_admissible_mask(F, m)
        )
        _adm_cache[F] = got
    return got


def _is_naive(F: ArgumentationFramework, mask: int) -> bool:
    if not is_conflict_free_mask(F, mask):
        return False
    # conflict-freeness is closed downward, so maximality is a local test
    free = F.all_mask & ~mask
    while free:
        low = free & -free
        i = low.bit_length() - 1
        if (
            not F.self_attack_mask >> i & 1
            and F.targets_mask[i] & mask == 0
            and F.attackers_mask[i] & mask == 0
        ):
            return False
        free ^= low
    return True


def _is_preferred(F: ArgumentationFramework, mask: int) -> bool:
    if not is_admissible_mask(F, mask):
        return False
    return not any(m & mask == mask and m != mask for m in _admissible_masks(F))


def _is_semi_stable(F: ArgumentationFramework, mask: int) -> bool:
    if not is_admissible_mask(F, mask):
        return False
    r = range_mask(F, mask)
    for m in _admissible_masks(F):
        rm = range_mask(F, m)
        if rm & r == r and rm != r:
            return False
    return True


def _is_stage(F: ArgumentationFramework, mask: int) -> bool:
    if not is_conflict_free_mask(F, mask):
        return False
    r = range_mask(F, mask)
    for m in _conflict_free_masks(F):
        rm = range_mask(F, m)
        if rm & r == r and rm != r:
            return False
    return True


def satisfies(F: ArgumentationFramework, E: ArgumentSet, sigma: Semantics) -> bool:
    """True iff ``E`` is a ``sigma``-extension of ``F``.

    cnf/adm/comp/stab are polynomial local checks.  nai uses the local
    single-argument maximality criterion (valid because conflict-free
    sets are closed downward).  pref/semi/stag sweep the candidate
    witness space exhaustively (cached per framework).
    """
    mask = _check_subset(F, E)
    sigma = Semantics(sigma)
    if sigma is Semantics.CONFLICT_FREE:
        return is_conflict_free_mask(F, mask)
    if sigma is Semantics.ADMISSIBLE:
        return is_admissible_mask(F, mask)
    if sigma is Semantics.COMPLETE:
        return is_admissible_mask(F, mask) and defended_mask(F, mask) == mask
    if sigma is Semantics.STABLE:
        return is_conflict_free_mask(F, mask) and range_mask(F, mask) == F.all_mask
    if sigma is Semantics.NAIVE:
        return _is_naive(F, mask)
    if sigma is Semantics.PREFERRED:
        return _is_preferred(F, mask)
    if sigma is Semantics.SEMI_STABLE:
        return _is_semi_stable(F, mask)
    if sigma is Semantics.STAGE:
        return _is_stage(F, mask)
    raise ValueError(f"unknown semantics {sigma!r}")  # pragma: no cover
