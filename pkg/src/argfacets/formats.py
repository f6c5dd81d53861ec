"""Parsing and rendering of the common argumentation exchange formats.

Supported formats:

* ``apx``      -- ``arg(NAME).`` / ``att(A,B).`` facts, ``%`` comments.
* ``tgf``      -- node ids, a ``#`` separator line, then ``src dst`` edges.
* ``iccma23``  -- ``p af N`` header, arguments implicitly named 1..N,
                  ``i j`` attack lines, ``#`` comments.

Attacks may appear before the argument declarations they reference; the
reference is resolved after the whole stream has been read.  Duplicate
attack lines collapse silently (the attack relation is a set), while a
duplicate argument declaration is an error.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .framework import ArgumentationFramework

FORMATS = ("apx", "tgf", "iccma23")

_APX_FACT = re.compile(
    r"(arg|att)\s*\(\s*([^(),\s]+)\s*(?:,\s*([^(),\s]+)\s*)?\)\s*\."
)


def parse_framework(text: str, format: str = "apx") -> ArgumentationFramework:
    """Parse ``text`` in the given format into a framework."""
    if format == "apx":
        return _parse_apx(text)
    if format == "tgf":
        return _parse_tgf(text)
    if format == "iccma23":
        return _parse_iccma23(text)
    raise ParseError(f"unknown format {format!r} (expected one of {FORMATS})")


def render_framework(F: ArgumentationFramework, format: str = "apx") -> str:
    """Render a framework; parsing the result back yields an equal graph.

    For apx and tgf the original names are preserved.  iccma23 has no
    room for names: arguments are emitted positionally as 1..N.
    """
    if format == "apx":
        lines = [f"arg({a.name})." for a in F.arguments]
        lines += [
            f"att({F.name_of(a)},{F.name_of(b)})."
            for a, b in sorted(F.attacks)
        ]
        return "\n".join(lines) + "\n"
    if format == "tgf":
        lines = [a.name for a in F.arguments]
        lines.append("#")
        lines += [
            f"{F.name_of(a)} {F.name_of(b)}" for a, b in sorted(F.attacks)
        ]
        return "\n".join(lines) + "\n"
    if format == "iccma23":
        lines = [f"p af {F.n_arguments}"]
        lines += [f"{a + 1} {b + 1}" for a, b in sorted(F.attacks)]
        return "\n".join(lines) + "\n"
    raise ParseError(f"unknown format {format!r} (expected one of {FORMATS})")


def _build(
    names: list[str],
    attacks: list[tuple[str, str, int]],
    declared_at: dict[str, int],
) -> ArgumentationFramework:
    for a, b, line in attacks:
        for name in (a, b):
            if name not in declared_at:
                raise ParseError(f"attack references undeclared argument {name!r}", line)
    if not names:
        raise ParseError("no arguments declared")
    return ArgumentationFramework(names, [(a, b) for a, b, _ in attacks])


def _parse_apx(text: str) -> ArgumentationFramework:
    names: list[str] = []
    declared: dict[str, int] = {}
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        pos = 0
        for m in _APX_FACT.finditer(line):
            if line[pos : m.start()].strip():
                raise ParseError(f"unrecognized text {line[pos:m.start()].strip()!r}", lineno)
            pos = m.end()
            kind, first, second = m.group(1), m.group(2), m.group(3)
            if kind == "arg":
                if second is not None:
                    raise ParseError("arg() takes a single name", lineno)
                if first in declared:
                    raise ParseError(f"duplicate argument declaration {first!r}", lineno)
                declared[first] = lineno
                names.append(first)
            else:
                if second is None:
                    raise ParseError("att() needs two names", lineno)
                attacks.append((first, second, lineno))
        if line[pos:].strip():
            raise ParseError(f"unrecognized text {line[pos:].strip()!r}", lineno)
    return _build(names, attacks, declared)


def _parse_tgf(text: str) -> ArgumentationFramework:
    names: list[str] = []
    declared: dict[str, int] = {}
    attacks: list[tuple[str, str, int]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        fields = line.split()
        if not in_edges:
            # node id, optionally followed by a label we ignore
            name = fields[0]
            if name in declared:
                raise ParseError(f"duplicate node id {name!r}", lineno)
            declared[name] = lineno
            names.append(name)
        else:
            if len(fields) < 2:
                raise ParseError("edge line needs two node ids", lineno)
            attacks.append((fields[0], fields[1], lineno))
    return _build(names, attacks, declared)


def _parse_iccma23(text: str) -> ArgumentationFramework:
    n: int | None = None
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p af' header", lineno)
            if len(fields) != 3 or fields[1] != "af" or not fields[2].isdigit():
                raise ParseError("malformed header (expected 'p af N')", lineno)
            n = int(fields[2])
            if n == 0:
                raise ParseError("framework declares zero arguments", lineno)
            continue
        if n is None:
            raise ParseError("attack line before 'p af' header", lineno)
        if len(fields) != 2:
            raise ParseError("attack line needs two indices", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError("attack endpoints must be integers", lineno) from None
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"attack endpoint out of range 1..{n}", lineno)
        attacks.append((str(a), str(b), lineno))
    if n is None:
        raise ParseError("missing 'p af' header")
    names = [str(i) for i in range(1, n + 1)]
    return _build(names, attacks, {name: 0 for name in names})
