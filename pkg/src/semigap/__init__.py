"""Restricted two-generator semigroups: membership, gaps and certificates."""
from .core import (
    DEFAULT_GENS,
    DEFAULT_PROFILE,
    ConstraintProfile,
    Decomposition,
    GeneratorPair,
    MembershipResult,
    Status,
    enumerate_decompositions,
    explain,
    gcd_conv,
    find_witness,
    is_member,
    satisfies,
)
from .sieve import ClassLabel, ScanReport, class_maxima, class_of, gaps_in, probe_powers, scan
from .table import emit_table
from .theorems import (
    Certificate,
    CertifiedNonMember,
    Unknown,
    certify,
    eleven_member,
    frobenius_classic,
    lift_coprime_multiple,
    lift_prime_power,
    prime_witness,
)

__version__ = "0.1.0"
