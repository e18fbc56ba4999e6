import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import admissible, double_loop
from semigap.core import (
    INT64_MAX,
    Constraint,
    ConstraintProfile,
    Decomposition,
    GeneratorPair,
    Status,
    count_decompositions,
    enumerate_decompositions,
    explain,
    find_witness,
    first_violation,
    gcd_conv,
    is_member,
    satisfies,
)

G = GeneratorPair(10, 11)


@pytest.mark.parametrize("x, y, expected", [(0, 7, 7), (10, 11, 1), (26, 130, 26), (7, 0, 7), (0, 0, 0)])
def test_gcd_conv(x, y, expected):
    assert gcd_conv(x, y) == expected


def test_generator_pair_validation():
    with pytest.raises(ValueError):
        GeneratorPair(0, 3)
    with pytest.raises(ValueError):
        GeneratorPair(5, 5)
    assert GeneratorPair(10, 11).coprime
    assert not GeneratorPair(4, 6).coprime


def test_profile_validation():
    with pytest.raises(ValueError):
        ConstraintProfile(a_min=3, a_max=2)
    with pytest.raises(ValueError):
        ConstraintProfile(a_min=-1)
    assert ConstraintProfile().is_default()


def test_enumerate_473():
    assert enumerate_decompositions(473, G) == [(0, 43), (11, 33), (22, 23), (33, 13), (44, 3)]


def test_enumerate_edge_values():
    assert enumerate_decompositions(89, G) == []
    assert enumerate_decompositions(0, G) == [(0, 0)]
    assert enumerate_decompositions(9, G) == []


def test_enumerate_non_coprime():
    gens = GeneratorPair(4, 6)
    assert enumerate_decompositions(30, gens) == [(0, 5), (3, 3), (6, 1)]
    assert enumerate_decompositions(31, gens) == []


def test_enumerate_rejects_negative_and_overflow():
    with pytest.raises(ValueError):
        enumerate_decompositions(-1, G)
    with pytest.raises(OverflowError):
        enumerate_decompositions(INT64_MAX + 1, G)


def test_soundness_up_to_1e5():
    # the full range runs inside the acceptance check; a stride keeps this one fast
    p, q = G.p, G.q
    for n in range(0, 100_001, 11):
        for a, b in enumerate_decompositions(n, G):
            assert p * a + q * b == n


def test_completeness_up_to_1e4():
    for n in range(10_001):
        assert enumerate_decompositions(n, G) == double_loop(n, 10, 11)


def test_consecutive_step():
    for n in range(0, 5000, 7):
        ds = enumerate_decompositions(n, G)
        for (a0, b0), (a1, b1) in zip(ds, ds[1:]):
            assert (a1 - a0, b1 - b0) == (11, -10)


def test_count_bound_up_to_1e5():
    for n in range(100_001):
        assert count_decompositions(n, G) in (n // 110, n // 110 + 1)


def test_count_matches_enumeration():
    for n in range(20_001):
        assert count_decompositions(n, G) == len(enumerate_decompositions(n, G))


@given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 3000))
def test_completeness_other_generators(p, q, n):
    if p == q:
        return
    gens = GeneratorPair(p, q)
    assert enumerate_decompositions(n, gens) == double_loop(n, p, q)
    assert count_decompositions(n, gens) == len(double_loop(n, p, q))


def test_satisfies_examples():
    prof = ConstraintProfile()
    assert satisfies(Decomposition(10, 27), prof)
    v = first_violation(Decomposition(17, 9), prof)
    assert v.constraint is Constraint.LINEAR_BOUND and v.detail == "9 < 35"
    v = first_violation(Decomposition(0, 43), prof)
    assert v.constraint is Constraint.COPRIMALITY and "43" in v.detail


def test_failure_reason_order():
    prof = ConstraintProfile(a_min=1)
    # (0, 0) breaks all three; range is reported first
    assert first_violation(Decomposition(0, 0), prof).constraint is Constraint.RANGE
    # linear bound before coprimality
    assert first_violation(Decomposition(2, 4), ConstraintProfile()).constraint is Constraint.LINEAR_BOUND


def test_a_min_convention():
    assert is_member(11).member
    assert is_member(11).witness == (0, 1)
    assert not is_member(11, G, ConstraintProfile(a_min=1)).member
    # a=0 passes only with b=1
    assert not is_member(22).member


def test_is_member_examples():
    r = is_member(397)
    assert r.status is Status.MEMBER and r.witness == (10, 27)

    r = is_member(277)
    assert r.status is Status.NON_MEMBER
    assert [d for d, _ in r.rejected] == [(9, 17), (20, 7)]
    assert all(v.constraint is Constraint.LINEAR_BOUND for _, v in r.rejected)

    r = is_member(1674)
    assert not r.member
    assert [d for d, _ in r.rejected] == enumerate_decompositions(1674, G)

    # 0 = 10*0 + 11*0, and b=0 misses the bound before gcd(0,0)=0 is looked at
    r = is_member(0)
    assert not r.member and r.rejected[0][1].constraint is Constraint.LINEAR_BOUND


def test_nonmember_rejections_are_complete():
    for n in [1, 89, 416, 426, 756, 1320, 1560]:
        r = is_member(n)
        assert not r.member
        assert [d for d, _ in r.rejected] == enumerate_decompositions(n, G)
        assert all(v is not None for _, v in r.rejected)


def test_membership_matches_oracle_up_to_1e5(wide_report):
    bits = wide_report.bits()
    for n in range(100_001):
        assert bool(is_member(n)) == bits[n]


def test_membership_matches_pure_predicate_up_to_1e4():
    for n in range(10_001):
        assert bool(is_member(n)) == any(admissible(a, b) for a, b in double_loop(n, 10, 11))


def test_witness_minimality_up_to_1e4():
    prof = ConstraintProfile()
    for n in range(10_001):
        good = [a for a, b in double_loop(n, 10, 11) if admissible(a, b)]
        r = is_member(n)
        assert (r.witness.a if r.member else None) == (min(good) if good else None)
        if r.member:
            assert satisfies(r.witness, prof) and r.witness.value(G) == n


profiles = st.builds(
    ConstraintProfile,
    a_min=st.integers(0, 3),
    a_max=st.none(),
    alpha=st.integers(0, 4),
    beta=st.integers(-3, 4),
    require_coprime=st.booleans(),
)


@st.composite
def profile_pairs(draw):
    strict = draw(profiles)
    a_max = draw(st.one_of(st.none(), st.integers(strict.a_min, strict.a_min + 60)))
    strict = ConstraintProfile(strict.a_min, a_max, strict.alpha, strict.beta, strict.require_coprime)
    weak_a_max = None if a_max is None or draw(st.booleans()) else a_max + draw(st.integers(0, 10))
    weak = ConstraintProfile(
        a_min=draw(st.integers(0, strict.a_min)),
        a_max=weak_a_max,
        alpha=draw(st.integers(0, strict.alpha)),
        beta=strict.beta - draw(st.integers(0, 3)),
        require_coprime=strict.require_coprime and draw(st.booleans()),
    )
    return strict, weak


@settings(max_examples=1000, deadline=None)
@given(profile_pairs(), st.integers(0, 4000))
def test_relaxation_monotonicity(pair, n):
    strict, weak = pair
    assert weak.weaker_or_equal(strict)
    if is_member(n, G, strict):
        assert is_member(n, G, weak)


@settings(max_examples=300, deadline=None)
@given(profiles, st.integers(0, 3000))
def test_general_profile_matches_oracle(prof, n):
    expected = any(admissible(a, b, prof.a_min, prof.a_max, prof.alpha, prof.beta, prof.require_coprime)
                   for a, b in double_loop(n, 10, 11))
    assert bool(is_member(n, G, prof)) == expected


def test_explain_426():
    text = explain(426)
    rows = [ln for ln in text.splitlines()[1:]]
    assert len(rows) == 4
    assert [ln.split()[0] for ln in rows] == ["10*3", "10*14", "10*25", "10*36"]
    assert all("FAIL" in ln for ln in rows)


def test_explain_trivial_and_member():
    assert "no decompositions" in explain(1)
    text = explain(1675)
    assert "Member" in text.splitlines()[0]
    assert any("[PASS]" in ln for ln in text.splitlines()[1:])


def test_explain_agrees_with_result():
    for n in (277, 397, 1674):
        r = is_member(n)
        rows = explain(n).splitlines()[1:]
        assert len(rows) == count_decompositions(n, G)
        assert sum("[PASS]" in ln for ln in rows) == (
            sum(satisfies(d, ConstraintProfile()) for d in enumerate_decompositions(n, G)))
        assert ("NonMember" in explain(n).splitlines()[0]) == (not r.member)


def test_find_witness_matches_is_member():
    for n in range(5001):
        assert find_witness(n) == is_member(n).witness


@settings(max_examples=300, deadline=None)
@given(profile_pairs(), st.integers(0, 6000))
def test_find_witness_any_profile(pair, n):
    for prof in pair:
        assert find_witness(n, G, prof) == is_member(n, G, prof).witness


def test_find_witness_huge_n():
    bounded = ConstraintProfile(a_max=10)
    assert find_witness(2**60, G, bounded) is None
    assert find_witness(2**62, G, bounded) == (7, (2**62 - 70) // 11)
    n = 2**60
    w = find_witness(n)
    assert w is not None and w.value(G) == n
