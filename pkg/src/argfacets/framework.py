"""Core data model: arguments, argument sets, attack graphs, semantics tags.

Frameworks are immutable after construction and safe to share between
threads.  Argument sets are bitmasks over the dense argument indices
``0..n-1``, which keeps the solver hot paths to a handful of integer
operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import FrameworkError

_FORBIDDEN_NAME_CHARS = set("(),%#")


class Semantics(str, Enum):
    """The eight supported extension semantics."""

    CONFLICT_FREE = "cnf"
    NAIVE = "nai"
    ADMISSIBLE = "adm"
    COMPLETE = "comp"
    STABLE = "stab"
    PREFERRED = "pref"
    SEMI_STABLE = "semi"
    STAGE = "stag"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


ALL_SEMANTICS: tuple[Semantics, ...] = tuple(Semantics)


def _valid_name(name: str) -> bool:
    if not name or any(ch.isspace() for ch in name):
        return False
    return not (_FORBIDDEN_NAME_CHARS & set(name))


@dataclass(frozen=True, slots=True)
class Argument:
    """A named argument with its dense index inside one framework."""

    index: int
    name: str


class ArgumentSet:
    """Immutable set of argument indices with extensional equality.

    Wraps a bitmask; iteration yields indices in ascending order.
    """

    __slots__ = ("mask",)

    def __init__(self, indices: Iterable[int] = ()):
        mask = 0
        for i in indices:
            if i < 0:
                raise FrameworkError(f"negative argument index {i}")
            mask |= 1 << i
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "ArgumentSet":
        if mask < 0:
            raise FrameworkError("negative bitmask")
        s = cls.__new__(cls)
        object.__setattr__(s, "mask", mask)
        return s

    def __setattr__(self, *_):
        raise AttributeError("ArgumentSet is immutable")

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, ArgumentSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_mask(self.mask | other.mask)

    def __and__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: "ArgumentSet") -> "ArgumentSet":
        return ArgumentSet.from_mask(self.mask & ~other.mask)

    def __le__(self, other: "ArgumentSet") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ArgumentSet") -> bool:
        return self <= other and self.mask != other.mask

    def isdisjoint(self, other: "ArgumentSet") -> bool:
        return self.mask & other.mask == 0

    def add(self, index: int) -> "ArgumentSet":
        return ArgumentSet.from_mask(self.mask | 1 << index)

    def indices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"ArgumentSet({list(self)})"


EMPTY_SET = ArgumentSet()


class ArgumentationFramework:
    """An immutable directed attack graph over named arguments.

    ``attacks`` may reference arguments by name or by index; every
    endpoint must be declared in ``names``.  Repeated attacks collapse
    (the attack relation is a set).
    """

    __slots__ = (
        "arguments",
        "attacks",
        "attackers_mask",
        "targets_mask",
        "self_attack_mask",
        "all_mask",
        "_index_of",
        "__weakref__",
    )

    def __init__(
        self,
        names: Sequence[str],
        attacks: Iterable[tuple[str | int, str | int]] = (),
    ):
        if not names:
            raise FrameworkError("a framework needs at least one argument")
        index_of: dict[str, int] = {}
        arguments = []
        for i, name in enumerate(names):
            if not _valid_name(name):
                raise FrameworkError(f"invalid argument name {name!r}")
            if name in index_of:
                raise FrameworkError(f"duplicate argument {name!r}")
            index_of[name] = i
            arguments.append(Argument(i, name))
        n = len(arguments)

        def resolve(ref: str | int) -> int:
            if isinstance(ref, int):
                if not 0 <= ref < n:
                    raise FrameworkError(f"attack endpoint index {ref} out of range")
                return ref
            try:
                return index_of[ref]
            except KeyError:
                raise FrameworkError(f"attack references unknown argument {ref!r}") from None

        attack_set = frozenset((resolve(a), resolve(b)) for a, b in attacks)
        attackers = [0] * n
        targets = [0] * n
        self_mask = 0
        for a, b in attack_set:
            targets[a] |= 1 << b
            attackers[b] |= 1 << a
            if a == b:
                self_mask |= 1 << a

        object.__setattr__(self, "arguments", tuple(arguments))
        object.__setattr__(self, "attacks", attack_set)
        object.__setattr__(self, "attackers_mask", tuple(attackers))
        object.__setattr__(self, "targets_mask", tuple(targets))
        object.__setattr__(self, "self_attack_mask", self_mask)
        object.__setattr__(self, "all_mask", (1 << n) - 1)
        object.__setattr__(self, "_index_of", index_of)

    def __setattr__(self, *_):
        raise AttributeError("ArgumentationFramework is immutable")

    @property
    def n_arguments(self) -> int:
        return len(self.arguments)

    @property
    def n_attacks(self) -> int:
        return len(self.attacks)

    def names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.arguments)

    def index_of(self, name: str) -> int:
        try:
            return self._index_of[name]
        except KeyError:
            raise FrameworkError(f"unknown argument {name!r}") from None

    def name_of(self, index: int) -> str:
        return self.arguments[index].name

    def has_attack(self, a: str | int, b: str | int) -> bool:
        ia = a if isinstance(a, int) else self.index_of(a)
        ib = b if isinstance(b, int) else self.index_of(b)
        return (ia, ib) in self.attacks

    def argument_set(self, refs: Iterable[str | int]) -> ArgumentSet:
        """Build an :class:`ArgumentSet` from names and/or indices."""
        return ArgumentSet(
            r if isinstance(r, int) else self.index_of(r) for r in refs
        )

    def names_of(self, argset: ArgumentSet) -> tuple[str, ...]:
        if argset.mask & ~self.all_mask:
            raise FrameworkError("argument set is not a subset of this framework")
        return tuple(self.arguments[i].name for i in argset)

    def full_set(self) -> ArgumentSet:
        return ArgumentSet.from_mask(self.all_mask)

    def attackers_of(self, ref: str | int) -> ArgumentSet:
        i = ref if isinstance(ref, int) else self.index_of(ref)
        return ArgumentSet.from_mask(self.attackers_mask[i])

    def targets_of(self, ref: str | int) -> ArgumentSet:
        i = ref if isinstance(ref, int) else self.index_of(ref)
        return ArgumentSet.from_mask(self.targets_mask[i])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ArgumentationFramework)
            and self.names() == other.names()
            and self.attacks == other.attacks
        )

    def __hash__(self) -> int:
        return hash((self.names(), self.attacks))

    def __repr__(self) -> str:
        return (
            f"ArgumentationFramework({self.n_arguments} arguments, "
            f"{self.n_attacks} attacks)"
        )
