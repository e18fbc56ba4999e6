"""Constructive membership certificates for the default instance over (10, 11).

Each rule builds a decomposition in closed form (prime rule, coprime and
prime-power lifts, the 11-family ladder). Nothing is issued on the strength of
the construction alone: a witness is re-checked against the default profile and
a non-membership verdict is re-checked by exhaustive enumeration. A mismatch
raises :class:`CertificationError` instead of returning a wrong verdict.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from sympy import isprime, primerange

from .core import (
    DEFAULT_GENS,
    DEFAULT_PROFILE,
    Decomposition,
    check_int64,
    enumerate_decompositions,
    is_member,
    satisfies,
)

PRIME_RULE_MIN = 281
LIFT_PRIME_MIN = 43
TRIAL_DIVISION_LIMIT = 300
# 11*q is a non-member for these q >= 33 (coprime to 11)
ELEVEN_EXCEPTIONS = frozenset({43, 54, 76, 120})
_LIFT_PRIMES = tuple(primerange(LIFT_PRIME_MIN, TRIAL_DIVISION_LIMIT + 1))


class CertificationError(Exception):
    """A rule produced a verdict that failed re-verification."""


class Rule(enum.Enum):
    PRIME_RULE = "PrimeRule"
    COMPOSITE_LIFT = "CompositeLift"
    PRIME_POWER_LIFT = "PrimePowerLift"
    ELEVEN_FAMILY = "ElevenFamily"
    CLASSIC_FROBENIUS = "ClassicFrobenius"


@dataclass(frozen=True)
class Certificate:
    n: int
    rule: Rule
    witness: Decomposition
    verified: bool = False

    member = True

    def to_dict(self) -> dict:
        return {"n": self.n, "rule": self.rule.value, "a": self.witness.a,
                "b": self.witness.b, "verified": self.verified}


@dataclass(frozen=True)
class CertifiedNonMember:
    n: int
    rule: Rule
    reason: str

    member = False

    def to_dict(self) -> dict:
        return {"n": self.n, "rule": self.rule.value, "verdict": "NonMember",
                "reason": self.reason, "verified": True}


@dataclass(frozen=True)
class Unknown:
    n: int
    reason: str = "no rule applies"

    member = None

    def to_dict(self) -> dict:
        return {"n": self.n, "verdict": "Unknown", "reason": self.reason}


Verdict = Union[Certificate, CertifiedNonMember, Unknown]


def _issue(n: int, rule: Rule, a: int, b: int) -> Certificate:
    check_int64(a, "a")
    check_int64(b, "b")
    w = Decomposition(a, b)
    if a < 0 or b < 0 or w.value(DEFAULT_GENS) != n:
        raise CertificationError(f"{rule.value}: {w} does not decompose {n}")
    if not satisfies(w, DEFAULT_PROFILE):
        raise CertificationError(f"{rule.value}: {w} for {n} violates the default profile")
    return Certificate(n, rule, w, verified=True)


def _non_member(n: int, rule: Rule, reason: str) -> CertifiedNonMember:
    if is_member(n):
        raise CertificationError(f"{rule.value} claims {n} is a non-member, but it has a witness")
    return CertifiedNonMember(n, rule, reason)


def _valuation(n: int, p: int) -> tuple[int, int]:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def frobenius_classic(p: int, q: int) -> int:
    """Largest integer with no nonnegative decomposition over coprime ``p, q >= 2``."""
    if p < 2 or q < 2:
        raise ValueError("generators must be at least 2")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1: infinitely many integers are unrepresentable")
    return p * q - p - q


def prime_witness(prime: int) -> Certificate:
    """Certificate for a prime ``>= 281`` with witness ``(m, (prime - 10m)/11)``.

    ``m`` is the unique value in 1..11 with ``11 | prime - 10m``. The linear bound
    holds once ``prime >= 32m + 11``; for the few primes below 363 where it does
    not, the smallest-``a`` witness from exhaustive search is used instead.
    """
    if prime < PRIME_RULE_MIN:
        raise ValueError(f"prime rule needs p >= {PRIME_RULE_MIN}, got {prime}")
    if not isprime(prime):
        raise ValueError(f"{prime} is not prime")
    m = next(m for m in range(1, 12) if (prime - 10 * m) % 11 == 0)
    w = Decomposition(m, (prime - 10 * m) // 11)
    if not satisfies(w, DEFAULT_PROFILE):
        res = is_member(prime)
        if not res:
            raise CertificationError(f"prime {prime} has no admissible decomposition")
        w = res.witness
    return _issue(prime, Rule.PRIME_RULE, w.a, w.b)


@lru_cache(maxsize=None)
def base_certificate(prime: int) -> Optional[Certificate]:
    """Certificate for a prime usable as a lift base, or None if the prime is not a member.

    Primes from 281 on use :func:`prime_witness`; smaller ones are looked up by
    exhaustive search, as in the list of small member primes.
    """
    if not isprime(prime):
        raise ValueError(f"{prime} is not prime")
    if prime >= PRIME_RULE_MIN:
        return prime_witness(prime)
    res = is_member(prime)
    if not res:
        return None
    return _issue(prime, Rule.PRIME_RULE, res.witness.a, res.witness.b)


def _check_base(base: Certificate) -> tuple[int, int, int]:
    p = base.n
    if not base.verified:
        raise ValueError("base certificate is not verified")
    if p < LIFT_PRIME_MIN or not isprime(p):
        raise ValueError(f"lift base must be a prime >= {LIFT_PRIME_MIN}, got {p}")
    a, b = base.witness
    if a < 1:
        raise ValueError(f"lift base witness needs a >= 1, got {base.witness}")
    return p, a, b


def lift_coprime_multiple(base: Certificate, q: int) -> Certificate:
    """Certificate for ``p*q`` from a certificate of the prime ``p``.

    Needs ``gcd(p, q) = 1``, ``a*q >= 12`` and ``(b - 2a)*q >= 33`` (all hold when
    ``q >= 33``). Tries ``(aq - 11, bq + 10)`` and then ``(aq + 11, bq - 10)``.
    """
    p, a, b = _check_base(base)
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"need q >= 1 coprime to {p}, got {q}")
    if a * q < 12 or (b - 2 * a) * q < 33:
        raise ValueError(f"q={q} too small for base {base.witness}: need aq >= 12 and (b-2a)q >= 33")
    n = check_int64(p * q, "p*q")
    for r in (1, -1):
        w = Decomposition(a * q - 11 * r, b * q + 10 * r)
        if min(w) >= 0 and satisfies(w, DEFAULT_PROFILE):
            return _issue(n, Rule.COMPOSITE_LIFT, *w)
    raise CertificationError(f"neither r=+1 nor r=-1 lifts {base.witness} to {p}*{q}")


def lift_prime_power(base: Certificate, k: int, q: int = 1) -> Certificate:
    """Certificate for ``p**k * q`` (``k >= 2``, ``gcd(p, q) = 1``) via ``(a p^(k-1) q - 11, b p^(k-1) q + 10)``."""
    p, a, b = _check_base(base)
    if k < 2:
        raise ValueError(f"prime-power lift needs k >= 2, got {k}")
    if q < 1 or math.gcd(p, q) != 1:
        raise ValueError(f"need q >= 1 coprime to {p}, got {q}")
    scale = check_int64(p ** (k - 1) * q, "p^(k-1)*q")
    n = check_int64(p * scale, "p^k*q")
    return _issue(n, Rule.PRIME_POWER_LIFT,
                  check_int64(a * scale, "a*p^(k-1)*q") - 11,
                  check_int64(b * scale, "b*p^(k-1)*q") + 10)


def eleven_member(k: int, q: int) -> Union[Certificate, CertifiedNonMember]:
    """Decide ``11**k * q`` for ``k >= 1`` and ``q`` coprime to 11."""
    if k < 1 or q < 1:
        raise ValueError("need k >= 1 and q >= 1")
    if math.gcd(11, q) != 1:
        raise ValueError(f"q={q} must be coprime to 11")
    n = check_int64(11**k * q, "11^k*q")
    rule = Rule.ELEVEN_FAMILY

    if k >= 3 or (k == 2 and q >= 3):
        return _issue(n, rule, 11, check_int64(11 ** (k - 1) * q, "11^(k-1)*q") - 10)
    if k == 2:
        return _non_member(n, rule, f"11^2*{q}: every decomposition fails")
    # k == 1
    if q == 1:
        return _issue(n, rule, 0, 1)
    if q <= 32:
        return _non_member(n, rule, f"11*{q} with 2 <= q <= 32: a in {{0, 11, 22}} all fail")
    if q >= 353:
        return _issue(n, rule, 121, q - 110)
    if (q - 10) % 11:
        return _issue(n, rule, 11, q - 10)
    if q in ELEVEN_EXCEPTIONS:
        return _non_member(n, rule, f"q={q} is one of the exceptions {sorted(ELEVEN_EXCEPTIONS)}")
    if q % 2:
        return _issue(n, rule, 22, q - 20)
    if (q - 30) % 3:
        return _issue(n, rule, 33, q - 30)
    return _issue(n, rule, 55, q - 50)


def certify(n: int) -> Verdict:
    """Decide ``n`` by the first applicable rule, or return :class:`Unknown`."""
    if n < 1:
        raise ValueError(f"certify needs n >= 1, got {n}")
    if n <= frobenius_classic(10, 11) and not enumerate_decompositions(n):
        return _non_member(n, Rule.CLASSIC_FROBENIUS, f"{n} has no decomposition over (10, 11)")
    if n % 11 == 0:
        k, q = _valuation(n, 11)
        return eleven_member(k, q)
    if isprime(n):
        if n >= PRIME_RULE_MIN:
            return prime_witness(n)
        return Unknown(n, f"prime below {PRIME_RULE_MIN}")
    for p in _LIFT_PRIMES:
        if n % p:
            continue
        base = base_certificate(p)
        if base is None:
            continue
        k, q = _valuation(n, p)
        if k >= 2:
            return lift_prime_power(base, k, q)
        a, b = base.witness
        if a * q >= 12 and (b - 2 * a) * q >= 33:
            return lift_coprime_multiple(base, q)
    return Unknown(n)
