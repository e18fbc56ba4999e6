"""Bounded membership scans, gap sets and residue-class maxima.

A scan marks every ``n <= bound`` that has an admissible decomposition. Work is
split into contiguous chunks of ``[0, bound]``; each chunk is marked
independently, so the result does not depend on chunk size or worker count.
A scan says nothing about integers past its bound.
"""
from __future__ import annotations

import bisect
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_GENS,
    DEFAULT_PROFILE,
    ConstraintProfile,
    GeneratorPair,
    INT64_MAX,
    find_witness,
    first_violation,
    iter_decompositions,
)

DEFAULT_BOUND = 20000
DEFAULT_CHUNK = 8192
SMALL_CHUNK = 16


@dataclass(frozen=True)
class ClassLabel:
    """Congruence class of ``n`` modulo ``q``: ``m`` with ``n = p*m (mod q)``, or 0 for multiples of ``q``."""

    m: int
    q: int = field(default=11, compare=False)

    @property
    def multiple_of_q(self) -> bool:
        return self.m == 0

    def sort_key(self):
        return (self.m == 0, self.m)

    def __str__(self):
        return f"Mult{self.q}" if self.m == 0 else f"C_{self.m}"


def class_of(n: int, gens: GeneratorPair = DEFAULT_GENS) -> ClassLabel:
    if n < 1:
        raise ValueError(f"class_of needs n >= 1, got {n}")
    if not gens.coprime:
        raise ValueError(f"residue classes need coprime generators, got {gens}")
    if n % gens.q == 0:
        return ClassLabel(0, gens.q)
    return ClassLabel((n * pow(gens.p, -1, gens.q)) % gens.q, gens.q)


def all_labels(gens: GeneratorPair) -> list[ClassLabel]:
    return [ClassLabel(m, gens.q) for m in range(1, gens.q)] + [ClassLabel(0, gens.q)]


@dataclass(frozen=True)
class ScanReport:
    gens: GeneratorPair
    profile: ConstraintProfile
    bound: int
    member_bitmap: bytes  # bit n set iff n is a member; little-endian bit order
    gaps: tuple[int, ...]
    max_gap: Optional[int]
    class_maxima: dict
    certified_beyond: bool = False

    def bits(self) -> np.ndarray:
        packed = np.frombuffer(self.member_bitmap, dtype=np.uint8)
        return np.unpackbits(packed, count=self.bound + 1, bitorder="little").astype(bool)

    def is_member(self, n: int) -> bool:
        if not 0 <= n <= self.bound:
            raise ValueError(f"{n} outside scanned range [0, {self.bound}]")
        return bool(self.member_bitmap[n >> 3] >> (n & 7) & 1)

    def members(self, lo: int, hi: int) -> list[int]:
        bits = self.bits()
        return [int(n) for n in np.flatnonzero(bits[lo:hi + 1]) + lo]


def _mark_chunk(gens: GeneratorPair, profile: ConstraintProfile, lo: int, hi: int) -> np.ndarray:
    """Membership flags for ``n`` in ``[lo, hi]``."""
    p, q = gens.p, gens.q
    out = np.zeros(hi - lo + 1, dtype=bool)
    if hi - lo < SMALL_CHUNK:
        # numpy setup dominates on tiny chunks; walk the decompositions directly
        for n in range(lo, hi + 1):
            out[n - lo] = any(first_violation(d, profile) is None for d in iter_decompositions(n, gens))
        return out
    a_top = hi // p if profile.a_max is None else min(hi // p, profile.a_max)
    if a_top < profile.a_min:
        return out
    a = np.arange(profile.a_min, a_top + 1, dtype=np.int64)
    rest_lo = lo - p * a
    b_lo = np.maximum(-(-rest_lo // q), 0)  # ceil division
    b_lo = np.maximum(b_lo, profile.alpha * a + profile.beta)
    b_hi = (hi - p * a) // q
    counts = np.maximum(b_hi - b_lo + 1, 0)
    total = int(counts.sum())
    if total == 0:
        return out
    keep = counts > 0
    a, b_lo, counts = a[keep], b_lo[keep], counts[keep]
    aa = np.repeat(a, counts)
    starts = np.cumsum(counts) - counts
    bb = np.repeat(b_lo - starts, counts) + np.arange(total, dtype=np.int64)
    if profile.require_coprime:
        ok = np.gcd(aa, bb) == 1
        aa, bb = aa[ok], bb[ok]
    out[p * aa + q * bb - lo] = True
    return out


def _labels_and_maxima(gens: GeneratorPair, gaps) -> dict:
    maxima = {label: None for label in all_labels(gens)}
    for g in gaps:
        label = class_of(g, gens)
        if maxima[label] is None or g > maxima[label]:
            maxima[label] = g
    return maxima


def report_from_bits(gens: GeneratorPair, profile: ConstraintProfile, bound: int,
                     bits: np.ndarray) -> ScanReport:
    bits = np.asarray(bits, dtype=bool)
    if bits.shape != (bound + 1,):
        raise ValueError(f"bitmap has {bits.size} entries, expected {bound + 1}")
    gaps = tuple(int(n) for n in np.flatnonzero(~bits[1:]) + 1)
    return ScanReport(
        gens=gens,
        profile=profile,
        bound=bound,
        member_bitmap=np.packbits(bits, bitorder="little").tobytes(),
        gaps=gaps,
        max_gap=gaps[-1] if gaps else None,
        class_maxima=_labels_and_maxima(gens, gaps),
    )


def scan(gens: GeneratorPair = DEFAULT_GENS, profile: ConstraintProfile = DEFAULT_PROFILE,
         bound: int = DEFAULT_BOUND, *, chunk_size: int = DEFAULT_CHUNK,
         jobs: Optional[int] = None) -> ScanReport:
    """Scan ``[0, bound]`` for members.

    ``jobs`` defaults to the CPU count; chunks are merged by position, so
    ``chunk_size`` and ``jobs`` never change the report.
    """
    if not gens.coprime:
        raise ValueError(
            f"generators {gens} are not coprime: every n not divisible by "
            f"gcd={math.gcd(gens.p, gens.q)} is a gap, so the complement is unbounded")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    if bound > INT64_MAX // max(gens.p, gens.q, profile.alpha, 1):
        raise OverflowError(f"bound {bound} too large for 64-bit scanning")
    if chunk_size < 1:
        raise ValueError("chunk_size must be positive")
    jobs = jobs or os.cpu_count() or 1

    ranges = [(lo, min(lo + chunk_size - 1, bound)) for lo in range(0, bound + 1, chunk_size)]
    bits = np.zeros(bound + 1, dtype=bool)
    if jobs == 1 or len(ranges) == 1:
        for lo, hi in ranges:
            bits[lo:hi + 1] = _mark_chunk(gens, profile, lo, hi)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futures = [(lo, hi, pool.submit(_mark_chunk, gens, profile, lo, hi)) for lo, hi in ranges]
            for lo, hi, fut in futures:
                bits[lo:hi + 1] = fut.result()
    return report_from_bits(gens, profile, bound, bits)


def gaps_in(report: ScanReport, lo: int, hi: int) -> list[int]:
    if not 1 <= lo <= hi <= report.bound:
        raise ValueError(f"[{lo}, {hi}] not within scanned range [1, {report.bound}]")
    i = bisect.bisect_left(report.gaps, lo)
    j = bisect.bisect_right(report.gaps, hi)
    return list(report.gaps[i:j])


def class_maxima(report: ScanReport) -> dict:
    """Largest gap per residue class (None when the class has no gap in range)."""
    return dict(sorted(report.class_maxima.items(), key=lambda kv: kv[0].sort_key()))


def probe_powers(gens: GeneratorPair, profile: ConstraintProfile, base: int,
                 exp_limit: int) -> list[int]:
    """Exponents ``n <= exp_limit`` for which ``base**n`` is not a member.

    Purely empirical; nothing is claimed about larger exponents.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if exp_limit < 1:
        raise ValueError("exp_limit must be positive")
    for e in range(1, exp_limit + 1):
        if base**e > INT64_MAX:
            raise OverflowError(f"{base}**{e} exceeds the signed 64-bit range")
    return [e for e in range(1, exp_limit + 1) if find_witness(base**e, gens, profile) is None]
