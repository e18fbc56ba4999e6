"""One test per acceptance criterion; each prints its PASS/FAIL line (see ``pytest -s``)."""
import pytest

from semigap import acceptance
from semigap.core import is_member


@pytest.fixture(scope="module")
def inst():
    return acceptance.Instance()


def _gate(check, inst):
    res = check(inst)
    print(res.line())
    assert res.passed, res.line()


def test_1_global_max(inst):
    _gate(acceptance.check_global_max, inst)


def test_2_class_maxima(inst):
    _gate(acceptance.check_class_maxima, inst)


def test_3_table(inst):
    # known red: the published table disagrees with exhaustive enumeration at 310, 489 and 816
    _gate(acceptance.check_table, inst)


def test_4_frobenius(inst):
    _gate(acceptance.check_frobenius, inst)


def test_5_primes(inst):
    _gate(acceptance.check_primes, inst)


def test_6_eleven(inst):
    _gate(acceptance.check_eleven, inst)


def test_7_certificates(inst):
    _gate(acceptance.check_certificates, inst)


def test_8_spot_values(inst):
    _gate(acceptance.check_spot_values, inst)


def test_9_determinism(inst):
    _gate(acceptance.check_determinism, inst)


def test_10_properties(inst):
    _gate(acceptance.check_properties, inst)


def test_table_discrepancies_are_exactly_three(inst):
    """Pins down why criterion 3 is red, so any other drift shows up separately."""
    diffs = acceptance.table_discrepancies(inst)
    assert [published.interval for published, _ in diffs] == ["[301,400]", "[401,500]", "[801,900]"]
    changed = set()
    for published, ours in diffs:
        changed |= published.members() ^ ours.members()
    assert changed == {310, 489, 816}
    assert is_member(310)
    assert not is_member(489) and not is_member(816)
