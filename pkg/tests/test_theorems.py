import math

import pytest
from sympy import primerange

from oracles import brute_frobenius
from semigap.core import ConstraintProfile, GeneratorPair, is_member, satisfies
from semigap.theorems import (
    Certificate,
    CertifiedNonMember,
    Rule,
    Unknown,
    base_certificate,
    certify,
    eleven_member,
    frobenius_classic,
    lift_coprime_multiple,
    lift_prime_power,
    prime_witness,
)

G = GeneratorPair(10, 11)
DEFAULT = ConstraintProfile()


def sound(cert):
    assert isinstance(cert, Certificate) and cert.verified
    assert cert.witness.value(G) == cert.n
    assert satisfies(cert.witness, DEFAULT)
    return cert


@pytest.mark.parametrize("p, q, expected", [(10, 11, 89), (2, 3, 1), (5, 7, 23)])
def test_frobenius_classic(p, q, expected):
    assert frobenius_classic(p, q) == expected == brute_frobenius(p, q, p * q)


def test_frobenius_errors():
    with pytest.raises(ValueError):
        frobenius_classic(4, 6)
    with pytest.raises(ValueError):
        frobenius_classic(1, 5)


def test_prime_witness_examples():
    assert sound(prime_witness(401)).witness == (6, 31)
    c = sound(prime_witness(281))
    assert c.rule is Rule.PRIME_RULE
    with pytest.raises(ValueError):
        prime_witness(277)
    with pytest.raises(ValueError):
        prime_witness(403)


def test_prime_rule_totality():
    for p in primerange(281, 100_001):
        sound(prime_witness(p))


def test_base_certificate_small_primes():
    assert sound(base_certificate(43)).witness == (1, 3)
    # 277 has no admissible decomposition
    assert base_certificate(277) is None
    with pytest.raises(ValueError):
        base_certificate(45)


def test_lift_coprime_examples():
    base = base_certificate(43)
    assert sound(lift_coprime_multiple(base, 34)).witness == (23, 112)
    c = sound(lift_coprime_multiple(base, 35))
    assert c.n == 1505 and is_member(1505)
    with pytest.raises(ValueError):
        lift_coprime_multiple(base, 43)
    with pytest.raises(ValueError):
        lift_coprime_multiple(base, 5)


def test_lift_closure():
    base = base_certificate(43)
    for q in range(33, 201):
        if math.gcd(q, 43) != 1:
            continue
        c = sound(lift_coprime_multiple(base, q))
        assert c.n == 43 * q and is_member(c.n)


def test_lift_closure_other_primes():
    for p in primerange(43, 300):
        base = base_certificate(p)
        if base is None:
            continue
        for q in range(33, 120):
            if q % p:
                sound(lift_coprime_multiple(base, q))


def test_lift_prime_power_examples():
    base = base_certificate(43)
    assert sound(lift_prime_power(base, 2)).witness == (32, 139)
    c = sound(lift_prime_power(base, 2, 2))
    assert c.n == 3698 and is_member(3698)
    with pytest.raises(ValueError):
        lift_prime_power(base, 1)
    with pytest.raises(ValueError):
        lift_prime_power(base, 2, 86)
    with pytest.raises(OverflowError):
        lift_prime_power(base, 12)


def test_eleven_examples():
    assert sound(eleven_member(2, 3)).witness == (11, 23)
    v = eleven_member(2, 2)
    assert isinstance(v, CertifiedNonMember) and v.n == 242
    assert isinstance(eleven_member(2, 1), CertifiedNonMember)
    v = eleven_member(1, 120)
    assert isinstance(v, CertifiedNonMember) and v.n == 1320
    assert sound(eleven_member(1, 353)).witness == (121, 243)
    assert sound(eleven_member(1, 1)).witness == (0, 1)
    with pytest.raises(ValueError):
        eleven_member(1, 22)


def test_eleven_exactness(report):
    bits = report.bits()
    expected = set(range(2, 33)) | {43, 54, 76, 120}
    for q in range(1, 401):
        if q % 11 == 0:
            continue
        v = eleven_member(1, q)
        non = isinstance(v, CertifiedNonMember)
        assert non == (q in expected), q
        assert non == (not bits[11 * q])
        if not non:
            sound(v)


def test_eleven_higher_powers():
    for k in range(2, 6):
        for q in range(1, 60):
            if q % 11:
                v = eleven_member(k, q)
                assert v.member == bool(is_member(11**k * q))
                if v.member:
                    sound(v)


def test_eleven_overflow():
    with pytest.raises(OverflowError):
        eleven_member(19, 1)


def test_certify_examples():
    v = certify(89)
    assert isinstance(v, CertifiedNonMember) and v.rule is Rule.CLASSIC_FROBENIUS
    v = certify(1320)
    assert isinstance(v, CertifiedNonMember) and v.rule is Rule.ELEVEN_FAMILY
    assert isinstance(certify(1674), Unknown)
    assert certify(1674).member is None
    assert sound(certify(401)).rule is Rule.PRIME_RULE
    assert sound(certify(43 * 34)).rule is Rule.COMPOSITE_LIFT
    assert sound(certify(43 * 43 * 2)).rule is Rule.PRIME_POWER_LIFT
    with pytest.raises(ValueError):
        certify(0)


def test_certify_agrees_with_oracle(wide_report):
    bits = wide_report.bits()
    decided = 0
    for n in range(1, 100_001):
        v = certify(n)
        if v.member is None:
            continue
        decided += 1
        assert v.member == bits[n], n
        if v.member:
            sound(v)
    assert decided > 30_000


def test_certificate_json():
    assert sound(certify(401)).to_dict() == {"n": 401, "rule": "PrimeRule", "a": 6, "b": 31, "verified": True}
    d = certify(1320).to_dict()
    assert d["verdict"] == "NonMember" and d["verified"]
    assert certify(1674).to_dict()["verdict"] == "Unknown"
