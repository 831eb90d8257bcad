"""Exact shattering checks and VC-dimension computation.

A probe A is shattered when every subset of A occurs as A ∩ S for a member
S. The dimension search walks probe sizes upward, keeping the first
(canonically smallest) witness per size; the first size with no shattered
probe is an exhaustive refutation. Probes are drawn only from "active"
elements (present in some member, absent from some member): an element in
every member blocks the empty trace, an element in no member blocks the
full trace, so no other probe can be shattered.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bitsets import elements_of, is_within, iter_fixed_size_masks, spread
from .families import SetFamily


@dataclass(frozen=True)
class TraceSet:
    """The intersections {A ∩ S : S in family} for a probe A."""

    probe: int
    traces: frozenset[int]

    def is_shattering(self) -> bool:
        return len(self.traces) == 1 << self.probe.bit_count()


@dataclass(frozen=True)
class VcReport:
    """Exact VC-dimension with a maximal shattered witness.

    ``refuted_size`` is the smallest probe size at which nothing is
    shattered, always dimension + 1.
    """

    dimension: int
    witness: int
    refuted_size: int

    def as_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "witness": list(elements_of(self.witness)),
            "refuted_size": self.refuted_size,
        }


def trace(f: SetFamily, probe: int) -> TraceSet:
    """Compute the deduplicated trace set of `probe` against the family."""
    if not is_within(probe, f.n):
        raise ValueError(f"probe {elements_of(probe)} not within [{f.n}]")
    return TraceSet(probe=probe, traces=frozenset(probe & m for m in f.members))


def _is_shattered(members: tuple[int, ...], probe: int) -> bool:
    """Short-circuiting shatter test; exact for any member order."""
    want = 1 << probe.bit_count()
    if want > len(members):
        return False
    traces: set[int] = set()
    remaining = len(members)
    for m in members:
        traces.add(probe & m)
        if len(traces) == want:
            return True
        remaining -= 1
        if len(traces) + remaining < want:
            return False
    return False


def shatters(f: SetFamily, probe: int) -> bool:
    """True iff the family realizes all 2^|probe| subsets of the probe."""
    if not f.members:
        raise ValueError("shattering is undefined for the empty family")
    if not is_within(probe, f.n):
        raise ValueError(f"probe {elements_of(probe)} not within [{f.n}]")
    return _is_shattered(f.members, probe)


def _scan_stride(
    members: tuple[int, ...],
    positions: tuple[int, ...],
    size: int,
    stride: int,
    n_strides: int,
) -> int | None:
    """First shattered size-`size` probe over `positions` in one stride.

    Probes are enumerated in canonical order, so the first hit within a
    stride is that stride's minimum.
    """
    for idx, compressed in enumerate(iter_fixed_size_masks(len(positions), size)):
        if idx % n_strides != stride:
            continue
        probe = spread(compressed, positions)
        if _is_shattered(members, probe):
            return probe
    return None


def _first_shattered(
    members: tuple[int, ...],
    positions: tuple[int, ...],
    size: int,
    workers: int,
) -> int | None:
    """Canonically smallest shattered probe of the given size, or None.

    With workers > 1 the probe stream is partitioned into strides and the
    minimum hit wins; the result is identical to the sequential scan.
    """
    if workers <= 1 or len(positions) < size:
        return _scan_stride(members, positions, size, 0, 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = list(
            pool.map(
                lambda w: _scan_stride(members, positions, size, w, workers),
                range(workers),
            )
        )
    real = [h for h in hits if h is not None]
    return min(real) if real else None


def vc_dimension(f: SetFamily, workers: int = 1) -> VcReport:
    """Exact VC-dimension of a nonempty family, with witness and refutation.

    The search is capped by min(n, largest member size, log2 |F|, number of
    active elements); a shattered set cannot exceed any of these. When the
    scan stops below the cap, the refutation at dimension + 1 is the
    completed exhaustive pass; at the cap it is the counting bound itself.
    """
    if not f.members:
        raise ValueError("VC-dimension is undefined for the empty family")
    members = f.members
    common = members[0]
    union = 0
    max_size = 0
    min_size = f.n + 1
    for m in members:
        common &= m
        union |= m
        c = m.bit_count()
        max_size = max(max_size, c)
        min_size = min(min_size, c)
    positions = elements_of(union & ~common)
    floor_log2 = len(members).bit_length() - 1
    cap = min(f.n, max_size, floor_log2, len(positions))
    dimension = 0
    witness = 0
    for size in range(1, cap + 1):
        if size + min_size > f.n:
            # No member can be disjoint from a probe this large, so the
            # empty trace is unrealizable and nothing of this size shatters.
            break
        hit = _first_shattered(members, positions, size, workers)
        if hit is None:
            break
        dimension, witness = size, hit
    return VcReport(dimension=dimension, witness=witness, refuted_size=dimension + 1)


def sauer_shelah_sum(n: int, k: int) -> int:
    """Exact value of C(n,0) + C(n,1) + ... + C(n,k-1)."""
    if not (0 <= k <= n + 1):
        raise ValueError(f"need 0 <= k <= n+1, got k={k} n={n}")
    return sum(math.comb(n, i) for i in range(k))
