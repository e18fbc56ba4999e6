"""Decompositions over two generators and the restricted membership predicate.

An integer ``n`` belongs to the restricted set for generators ``(p, q)`` and a
:class:`ConstraintProfile` when some pair of nonnegative integers ``(a, b)``
with ``p*a + q*b == n`` passes every constraint of the profile. The default
profile is the coprime, ``b >= 2a + 1`` instance over ``(10, 11)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str = "value") -> int:
    """Return ``value`` unchanged, raising OverflowError outside signed 64-bit range."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{what} = {value} exceeds the signed 64-bit range")
    return value


def gcd_conv(x: int, y: int) -> int:
    """gcd with gcd(0, y) = y, gcd(x, 0) = x and gcd(0, 0) = 0."""
    if x < 0 or y < 0:
        raise ValueError("gcd_conv takes nonnegative integers")
    return math.gcd(x, y)


@dataclass(frozen=True)
class GeneratorPair:
    p: int = 10
    q: int = 11

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"generators must be positive, got ({self.p}, {self.q})")
        if self.p == self.q:
            raise ValueError(f"generators must differ, got ({self.p}, {self.q})")
        check_int64(self.p * self.q, "p*q")

    @property
    def coprime(self) -> bool:
        return math.gcd(self.p, self.q) == 1

    def __str__(self):
        return f"<{self.p},{self.q}>"


@dataclass(frozen=True)
class ConstraintProfile:
    """Restrictions on the coefficients ``(a, b)`` of a decomposition.

    A pair passes when ``a_min <= a <= a_max`` (no upper limit when ``a_max`` is
    None), ``b >= alpha*a + beta`` and, if ``require_coprime``, ``gcd(a, b) == 1``
    under the convention ``gcd(0, b) = b``. With ``a_min = 0`` the only pair with
    ``a = 0`` that can pass is ``(0, 1)``, so ``q`` itself is a member.
    """

    a_min: int = 0
    a_max: Optional[int] = None
    alpha: int = 2
    beta: int = 1
    require_coprime: bool = True

    def __post_init__(self):
        if self.a_min < 0:
            raise ValueError("a_min must be nonnegative")
        if self.a_max is not None and self.a_max < self.a_min:
            raise ValueError(f"a_max={self.a_max} is below a_min={self.a_min}")
        if self.alpha < 0:
            raise ValueError("alpha must be nonnegative")

    def is_default(self) -> bool:
        return self == ConstraintProfile()

    def weaker_or_equal(self, other: "ConstraintProfile") -> bool:
        """True if every pair passing ``other`` also passes ``self`` (pointwise relaxation)."""
        if self.a_min > other.a_min:
            return False
        if self.a_max is not None and (other.a_max is None or self.a_max < other.a_max):
            return False
        if self.require_coprime and not other.require_coprime:
            return False
        return self.alpha <= other.alpha and self.beta <= other.beta


DEFAULT_GENS = GeneratorPair(10, 11)
DEFAULT_PROFILE = ConstraintProfile()


class Decomposition(NamedTuple):
    a: int
    b: int

    def value(self, gens: GeneratorPair) -> int:
        return gens.p * self.a + gens.q * self.b

    def __str__(self):
        return f"(a={self.a}, b={self.b})"


class Constraint(enum.Enum):
    RANGE = "range"
    LINEAR_BOUND = "linear bound"
    COPRIMALITY = "coprimality"


@dataclass(frozen=True)
class Violation:
    constraint: Constraint
    detail: str

    def __str__(self):
        return f"{self.constraint.value}: {self.detail}"


def check_constraints(d: Decomposition, profile: ConstraintProfile) -> dict[Constraint, Optional[Violation]]:
    """Evaluate each constraint separately; a None entry means that constraint passes."""
    a, b = d
    out: dict[Constraint, Optional[Violation]] = {}

    if a < profile.a_min:
        out[Constraint.RANGE] = Violation(Constraint.RANGE, f"a={a} < a_min={profile.a_min}")
    elif profile.a_max is not None and a > profile.a_max:
        out[Constraint.RANGE] = Violation(Constraint.RANGE, f"a={a} > a_max={profile.a_max}")
    else:
        out[Constraint.RANGE] = None

    bound = check_int64(profile.alpha * a + profile.beta, "alpha*a+beta")
    if b < bound:
        out[Constraint.LINEAR_BOUND] = Violation(Constraint.LINEAR_BOUND, f"{b} < {bound}")
    else:
        out[Constraint.LINEAR_BOUND] = None

    g = gcd_conv(a, b)
    if profile.require_coprime and g != 1:
        out[Constraint.COPRIMALITY] = Violation(Constraint.COPRIMALITY, f"gcd({a},{b})={g}")
    else:
        out[Constraint.COPRIMALITY] = None
    return out


def first_violation(d: Decomposition, profile: ConstraintProfile) -> Optional[Violation]:
    """The first failed constraint in the order range, linear bound, coprimality."""
    a, b = d
    if a < profile.a_min or (profile.a_max is not None and a > profile.a_max):
        return check_constraints(d, profile)[Constraint.RANGE]
    if b < profile.alpha * a + profile.beta:
        return check_constraints(d, profile)[Constraint.LINEAR_BOUND]
    if profile.require_coprime and math.gcd(a, b) != 1:
        return check_constraints(d, profile)[Constraint.COPRIMALITY]
    return None


def satisfies(d: Decomposition, profile: ConstraintProfile) -> bool:
    return first_violation(d, profile) is None


def _progression(n: int, gens: GeneratorPair) -> tuple[range, range]:
    """Ranges of ``a`` and ``b`` over all decompositions of ``n``, aligned by position."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_int64(n, "n")
    p, q = gens.p, gens.q
    g = math.gcd(p, q)
    if n % g:
        return range(0), range(0)
    p_, q_ = p // g, q // g
    # smallest a >= 0 with p*a = n (mod q)
    a0 = 0 if q_ == 1 else ((n // g) * pow(p_, -1, q_)) % q_
    if p * a0 > n:
        return range(0), range(0)
    steps = (n // p - a0) // q_
    b0 = (n - p * a0) // q
    return range(a0, a0 + steps * q_ + 1, q_), range(b0, b0 - steps * p_ - 1, -p_)


def iter_decompositions(n: int, gens: GeneratorPair = DEFAULT_GENS) -> Iterator[Decomposition]:
    """Yield every ``(a, b)`` with ``a, b >= 0`` and ``p*a + q*b == n``, by ascending ``a``."""
    for pair in zip(*_progression(n, gens)):
        yield tuple.__new__(Decomposition, pair)


def enumerate_decompositions(n: int, gens: GeneratorPair = DEFAULT_GENS) -> list[Decomposition]:
    # tuple.__new__ skips the namedtuple constructor; this is the hot path of the property suite
    new = tuple.__new__
    return [new(Decomposition, pair) for pair in zip(*_progression(n, gens))]


def count_decompositions(n: int, gens: GeneratorPair = DEFAULT_GENS) -> int:
    """Number of decompositions of ``n``, without building them."""
    return len(_progression(n, gens)[0])


class Status(enum.Enum):
    MEMBER = "Member"
    NON_MEMBER = "NonMember"


@dataclass(frozen=True)
class MembershipResult:
    n: int
    status: Status
    witness: Optional[Decomposition] = None
    rejected: tuple[tuple[Decomposition, Violation], ...] = field(default_factory=tuple)

    @property
    def member(self) -> bool:
        return self.status is Status.MEMBER

    def __bool__(self):
        return self.member


def is_member(n: int, gens: GeneratorPair = DEFAULT_GENS,
              profile: ConstraintProfile = DEFAULT_PROFILE) -> MembershipResult:
    """Decide membership of ``n``; the witness is the passing decomposition with smallest ``a``.

    A non-member result lists every decomposition of ``n`` with its first violated
    constraint.
    """
    rejected = []
    for d in iter_decompositions(n, gens):
        v = first_violation(d, profile)
        if v is None:
            return MembershipResult(n, Status.MEMBER, witness=d)
        rejected.append((d, v))
    return MembershipResult(n, Status.NON_MEMBER, rejected=tuple(rejected))


def find_witness(n: int, gens: GeneratorPair = DEFAULT_GENS,
                 profile: ConstraintProfile = DEFAULT_PROFILE) -> Optional[Decomposition]:
    """Smallest-``a`` witness, or None; same verdict as :func:`is_member`.

    Only decompositions with ``a`` inside the range and below the linear bound
    are visited, so a tight ``a_max`` keeps this cheap for huge ``n``.
    """
    a_rng, b_rng = _progression(n, gens)
    if not a_rng:
        return None
    p, q = gens.p, gens.q
    hi = a_rng[-1] if profile.a_max is None else min(a_rng[-1], profile.a_max)
    # p*a + q*b = n with b >= alpha*a + beta  <=>  a*(p + q*alpha) <= n - q*beta
    hi = min(hi, (n - q * profile.beta) // (p + q * profile.alpha))
    lo = max(a_rng.start, profile.a_min)
    step = a_rng.step
    k0 = -(-(lo - a_rng.start) // step)
    k1 = (hi - a_rng.start) // step
    for k in range(k0, k1 + 1):
        d = tuple.__new__(Decomposition, (a_rng[k], b_rng[k]))
        if first_violation(d, profile) is None:
            return d
    return None


def explain(n: int, gens: GeneratorPair = DEFAULT_GENS,
            profile: ConstraintProfile = DEFAULT_PROFILE) -> str:
    """Render all decompositions of ``n`` with a pass/fail mark per constraint."""
    result = is_member(n, gens, profile)
    decomps = enumerate_decompositions(n, gens)
    verdict = (f"{n}: Member, witness a={result.witness.a} b={result.witness.b}"
               if result.member else f"{n}: NonMember")
    if not decomps:
        return f"{verdict}\n  no decompositions over {gens}"
    lines = [verdict]
    for d in decomps:
        checks = check_constraints(d, profile)
        marks = []
        for c in Constraint:
            v = checks[c]
            marks.append(f"{c.value}=ok" if v is None else f"{c.value}=FAIL ({v.detail})")
        tag = "PASS" if all(v is None for v in checks.values()) else "fail"
        lines.append(f"  {gens.p}*{d.a} + {gens.q}*{d.b}  [{tag}]  " + ", ".join(marks))
    return "\n".join(lines)
