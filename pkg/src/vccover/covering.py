"""Deciding the k-covering property and the unique face property.

Both checks return explicit witnesses: the canonically smallest uncovered
k-set, or per-member faces (a proper subset contained in no other member,
minimal by size then mask order). Witness canonicality makes runs
byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitsets import elements_of, iter_fixed_size_masks, iter_submasks
from .families import SetFamily
from .vc import vc_dimension


@dataclass(frozen=True)
class CoverReport:
    """Outcome of a k-covering check; `uncovered` present iff it fails."""

    k: int
    holds: bool
    uncovered: int | None = None

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "holds": self.holds,
            "uncovered": None if self.uncovered is None else list(elements_of(self.uncovered)),
        }


@dataclass(frozen=True)
class FaceReport:
    """Unique-face check: for each member, a witness K contained in no other member."""

    holds: bool
    faces: dict[int, int] = field(default_factory=dict)
    violator: int | None = None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "faces": [
                {"member": list(elements_of(s)), "face": list(elements_of(k))}
                for s, k in self.faces.items()
            ],
            "violator": None if self.violator is None else list(elements_of(self.violator)),
        }


def is_k_covering(f: SetFamily, k: int) -> CoverReport:
    """Check that every k-subset of [n] lies inside some member.

    Probes run in canonical order with early exit per probe, so a failure
    reports the canonically smallest uncovered k-set.
    """
    if not (1 <= k <= f.n):
        raise ValueError(f"need 1 <= k <= n, got k={k} n={f.n}")
    members = f.members
    for probe in iter_fixed_size_masks(f.n, k):
        if not any(probe & m == probe for m in members):
            return CoverReport(k=k, holds=False, uncovered=probe)
    return CoverReport(k=k, holds=True)


def _face_of(member: int, others: list[int]) -> int | None:
    """Smallest proper subset of `member` contained in no other member."""
    size = member.bit_count()
    for r in range(size):
        for candidate in iter_submasks(member, r):
            if not any(candidate & o == candidate for o in others):
                return candidate
    return None


def unique_face(f: SetFamily) -> FaceReport:
    """Find, per member, a proper subset unique to it; fails on the first member without one."""
    if not f.members:
        raise ValueError("unique-face check is undefined for the empty family")
    faces: dict[int, int] = {}
    violator = None
    for i, member in enumerate(f.members):
        others = [m for j, m in enumerate(f.members) if j != i]
        face = _face_of(member, others)
        if face is None:
            if violator is None:
                violator = member
        else:
            faces[member] = face
    return FaceReport(holds=violator is None, faces=faces, violator=violator)


def ufp_implies_vc_bound_check(f: SetFamily) -> bool:
    """Property probe: a uniform family with the unique face property has VC-dimension below its member size."""
    if not f.is_uniform():
        raise ValueError("check requires a uniform family")
    if not unique_face(f).holds:
        return True
    return vc_dimension(f).dimension < f.uniform_size
