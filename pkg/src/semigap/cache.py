"""Binary cache for scan bitmaps.

Layout (little-endian)::

    magic    4s   b"SGAP"
    version  u16
    p, q     u64, u64
    a_min    u64
    a_max    i64   (-1 when absent)
    alpha    u64
    beta     i64
    coprime  u8
    bound    u64
    body     ceil((bound + 1) / 8) bytes, bit n of the bitmap at byte n >> 3, bit n & 7
"""
from __future__ import annotations

import logging
import os
import struct
from pathlib import Path
from typing import Optional

import numpy as np

from .core import ConstraintProfile, GeneratorPair
from .sieve import ScanReport, report_from_bits, scan

log = logging.getLogger(__name__)

MAGIC = b"SGAP"
VERSION = 1
_HEADER = struct.Struct("<4sHQQQqQqBQ")


class CacheMismatch(ValueError):
    pass


def _header(gens: GeneratorPair, profile: ConstraintProfile, bound: int) -> bytes:
    a_max = -1 if profile.a_max is None else profile.a_max
    return _HEADER.pack(MAGIC, VERSION, gens.p, gens.q, profile.a_min, a_max,
                        profile.alpha, profile.beta, int(profile.require_coprime), bound)


def write_cache(path, report: ScanReport) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(_header(report.gens, report.profile, report.bound))
        fh.write(report.member_bitmap)
    os.replace(tmp, path)


def read_cache(path) -> ScanReport:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise CacheMismatch("cache file truncated")
    magic, version, p, q, a_min, a_max, alpha, beta, coprime, bound = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CacheMismatch("not a scan cache file")
    if version != VERSION:
        raise CacheMismatch(f"cache version {version}, expected {VERSION}")
    body = data[_HEADER.size:]
    if len(body) != (bound + 8) // 8:
        raise CacheMismatch("cache body length does not match bound")
    gens = GeneratorPair(p, q)
    profile = ConstraintProfile(a_min, None if a_max < 0 else a_max, alpha, beta, bool(coprime))
    bits = np.unpackbits(np.frombuffer(body, dtype=np.uint8), count=bound + 1, bitorder="little")
    return report_from_bits(gens, profile, bound, bits.astype(bool))


def cached_scan(path: Optional[os.PathLike], gens: GeneratorPair, profile: ConstraintProfile,
                bound: int, **scan_kw) -> ScanReport:
    """Scan, reusing ``path`` when its header matches the instance exactly."""
    if path is not None and Path(path).exists():
        try:
            report = read_cache(path)
        except CacheMismatch as exc:
            log.warning("ignoring cache %s: %s", path, exc)
        else:
            if (report.gens, report.profile, report.bound) == (gens, profile, bound):
                return report
            log.info("cache %s is for a different instance; rescanning", path)
    report = scan(gens, profile, bound, **scan_kw)
    if path is not None:
        write_cache(path, report)
    return report
