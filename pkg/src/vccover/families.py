"""Set families over a ground set [n]: canonical representation and file I/O.

A family is stored as a sorted, deduplicated tuple of integer masks (see
bitsets). The canonical text format is::

    vcfam 1
    n=<n> s=<size or "mixed">
    1 2
    3 4

with one member per line, elements ascending, the empty member written as
"-", and member lines sorted by mask order. The JSON mirror is
``{"n": int, "members": [[int, ...], ...]}`` with the same ordering rules.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bitsets import (
    MAX_GROUND,
    elements_of,
    is_within,
    iter_fixed_size_masks,
    mask_of,
)

FORMAT_HEADER = "vcfam 1"


class FamilyFormatError(ValueError):
    """Raised when family text/JSON violates the canonical format."""


@dataclass(frozen=True)
class Parameters:
    """The (k, s, n) triple: covering arity, member size, ground size."""

    k: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if not (1 <= self.k <= self.s <= self.n):
            raise ValueError(f"need 1 <= k <= s <= n, got k={self.k} s={self.s} n={self.n}")
        if self.n > MAX_GROUND:
            raise ValueError(f"ground size {self.n} exceeds maximum {MAX_GROUND}")


@dataclass(frozen=True)
class SetFamily:
    """An ordered, deduplicated family of subsets of [n].

    Immutable after construction; safe to share across threads.
    ``uniform_size`` is auto-detected metadata: set when every member has
    the same cardinality, None otherwise (and for the empty family).
    """

    n: int
    members: tuple[int, ...]
    uniform_size: int | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def member_elements(self) -> list[tuple[int, ...]]:
        """Members as ascending element tuples, in canonical order."""
        return [elements_of(m) for m in self.members]

    def is_uniform(self) -> bool:
        return self.uniform_size is not None


def family_from_masks(n: int, masks: Iterable[int]) -> SetFamily:
    """Canonicalize masks (sort, dedupe, detect uniformity) into a SetFamily."""
    if n < 1:
        raise ValueError("ground size must be a positive integer")
    if n > MAX_GROUND:
        raise ValueError(f"ground size {n} exceeds maximum {MAX_GROUND}")
    unique = sorted(set(masks))
    for m in unique:
        if not is_within(m, n):
            raise ValueError(f"member {elements_of(m)} has elements outside [{n}]")
    sizes = {m.bit_count() for m in unique}
    uniform = sizes.pop() if len(sizes) == 1 else None
    return SetFamily(n=n, members=tuple(unique), uniform_size=uniform)


def make_family(n: int, members: Iterable[Iterable[int]]) -> SetFamily:
    """Build a canonical family from 1-based element collections.

    Duplicates are dropped silently; element out of [n] is an error.
    """
    if n < 1:
        raise ValueError("ground size must be a positive integer")
    masks = []
    for member in members:
        elems = tuple(member)
        for e in elems:
            if not (1 <= e <= n):
                raise ValueError(f"element {e} out of range [1, {n}]")
        masks.append(mask_of(elems))
    return family_from_masks(n, masks)


def enumerate_subsets(n: int, r: int) -> Iterator[int]:
    """All C(n, r) subsets of [n] as masks, each exactly once, in canonical order."""
    if n < 0 or n > MAX_GROUND:
        raise ValueError(f"ground size {n} out of supported range")
    if r < 0 or r > n:
        raise ValueError(f"subset size {r} out of range for ground size {n}")
    return iter_fixed_size_masks(n, r)


def _format_member(mask: int) -> str:
    if mask == 0:
        return "-"
    return " ".join(str(e) for e in elements_of(mask))


def write_family(f: SetFamily) -> str:
    """Serialize to the canonical text format (LF line endings)."""
    s_field = "mixed" if f.uniform_size is None else str(f.uniform_size)
    lines = [FORMAT_HEADER, f"n={f.n} s={s_field}"]
    lines.extend(_format_member(m) for m in f.members)
    return "\n".join(lines) + "\n"


def _parse_header(lines: list[str]) -> tuple[int, int | None]:
    if not lines or lines[0] != FORMAT_HEADER:
        raise FamilyFormatError(f"malformed header: expected '{FORMAT_HEADER}'")
    if len(lines) < 2:
        raise FamilyFormatError("malformed header: missing parameter line")
    parts = lines[1].split()
    if len(parts) != 2 or not parts[0].startswith("n=") or not parts[1].startswith("s="):
        raise FamilyFormatError(f"malformed header: {lines[1]!r}")
    try:
        n = int(parts[0][2:])
    except ValueError:
        raise FamilyFormatError(f"malformed header: bad n in {lines[1]!r}") from None
    if n < 1 or n > MAX_GROUND:
        raise FamilyFormatError(f"malformed header: n={n} out of range")
    s_text = parts[1][2:]
    if s_text == "mixed":
        return n, None
    try:
        s = int(s_text)
    except ValueError:
        raise FamilyFormatError(f"malformed header: bad s in {lines[1]!r}") from None
    if s < 0:
        raise FamilyFormatError(f"malformed header: s={s} negative")
    return n, s


def _parse_member_line(line: str, n: int) -> int:
    if line == "-":
        return 0
    prev = 0
    mask = 0
    for token in line.split():
        try:
            e = int(token)
        except ValueError:
            raise FamilyFormatError(f"bad element {token!r} in line {line!r}") from None
        if not (1 <= e <= n):
            raise FamilyFormatError(f"element {e} out of range [1, {n}]")
        if e <= prev:
            raise FamilyFormatError(f"unsorted line: {line!r}")
        prev = e
        mask |= 1 << (e - 1)
    return mask


def read_family(text: str) -> SetFamily:
    """Parse canonical text, enforcing the canonical form strictly.

    Rejects unsorted element lines, member lines out of mask order,
    duplicate members, and a size header inconsistent with the members.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    n, declared_s = _parse_header(lines)
    masks: list[int] = []
    for line in lines[2:]:
        mask = _parse_member_line(line, n)
        if masks:
            if mask == masks[-1]:
                raise FamilyFormatError(f"duplicate member: {line!r}")
            if mask < masks[-1]:
                raise FamilyFormatError(f"member lines out of canonical order at {line!r}")
        masks.append(mask)
    if declared_s is not None:
        if not masks:
            raise FamilyFormatError("empty family must declare s=mixed")
        for m in masks:
            if m.bit_count() != declared_s:
                raise FamilyFormatError(
                    f"member {_format_member(m)!r} has size {m.bit_count()}, header says s={declared_s}"
                )
    else:
        sizes = {m.bit_count() for m in masks}
        if len(sizes) == 1:
            raise FamilyFormatError("header says s=mixed but members are uniform")
    return SetFamily(n=n, members=tuple(masks), uniform_size=declared_s)


def write_family_json(f: SetFamily) -> str:
    """Serialize to the JSON mirror format."""
    return json.dumps({"n": f.n, "members": [list(elements_of(m)) for m in f.members]})


def read_family_json(text: str) -> SetFamily:
    """Parse the JSON mirror, enforcing the same ordering rules as the text form."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or set(obj) != {"n", "members"}:
        raise FamilyFormatError("JSON family must be an object with keys 'n' and 'members'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1 or n > MAX_GROUND:
        raise FamilyFormatError(f"bad ground size {n!r}")
    masks: list[int] = []
    for member in obj["members"]:
        if not isinstance(member, list) or not all(isinstance(e, int) for e in member):
            raise FamilyFormatError(f"bad member {member!r}")
        line = "-" if not member else " ".join(str(e) for e in member)
        mask = _parse_member_line(line, n)
        if masks and mask == masks[-1]:
            raise FamilyFormatError(f"duplicate member: {member!r}")
        if masks and mask < masks[-1]:
            raise FamilyFormatError(f"members out of canonical order at {member!r}")
        masks.append(mask)
    sizes = {m.bit_count() for m in masks}
    uniform = sizes.pop() if len(sizes) == 1 else None
    return SetFamily(n=n, members=tuple(masks), uniform_size=uniform)
