"""Coprime witnesses, the prime-between-squares equivalence, and composite runs."""

import random
from math import gcd as builtin_gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclidkit import (
    DomainError,
    GrimmAssignment,
    composite_runs,
    default_window_bound,
    grimm_assign,
    grimm_scan,
    non_w_max_run,
    prime_interval_equivalence,
    verify_assignment,
    w_witness,
)
from oracles import assignment_by_backtracking, is_prime_trial, prime_divisors_by_trial, witness_by_pair_matrix

# ---------------------------------------------------------------------------
# coprime witnesses


def test_w_witness_frozen_values():
    report = w_witness([2, 3, 4, 5, 6])
    assert report.witness_index == 4
    assert report.witness_value == 5
    assert w_witness([2, 4, 6]).witness_index is None
    assert w_witness([2, 4, 6]).witness_value is None
    assert w_witness([3, 5, 7]).witness_index == 1
    assert w_witness([1]).witness_index == 1
    assert w_witness([10]).witness_index == 1


def test_w_witness_is_least():
    report = w_witness([5, 7, 9])  # every element qualifies; 5 comes first
    assert report.witness_index == 1
    assert report.witness_value == 5


@given(
    values=st.sets(st.integers(1, 10**4), min_size=1, max_size=20).map(sorted)
)
def test_w_witness_matches_pairwise_gcd_oracle(values):
    report = w_witness(values)
    expected = witness_by_pair_matrix(list(values))
    if expected is None:
        assert report.witness_index is None
    else:
        assert report.witness_index == expected
        v = values[expected - 1]
        assert all(builtin_gcd(v, u) == 1 for u in values if u != v)


def test_w_witness_domain():
    with pytest.raises(DomainError):
        w_witness([])
    with pytest.raises(DomainError):
        w_witness([3, 3])
    with pytest.raises(DomainError):
        w_witness([5, 2])
    with pytest.raises(DomainError):
        w_witness([0, 1])


# ---------------------------------------------------------------------------
# primes between squares vs witness windows


def test_interval_equivalence_frozen_values():
    assert prime_interval_equivalence(1) == (True, True)
    assert prime_interval_equivalence(4) == (True, True)
    assert prime_interval_equivalence(100) == (True, True)


def test_interval_equivalence_both_sides_up_to_600():
    for m in range(1, 601):
        prime_exists, is_w = prime_interval_equivalence(m)
        assert prime_exists == is_w
        # third route: trial-division primality over the window
        window = range(m * m + 1, (m + 1) * (m + 1))
        assert prime_exists == any(is_prime_trial(v) for v in window)


def test_interval_equivalence_domain():
    with pytest.raises(DomainError):
        prime_interval_equivalence(0)


def test_window_with_large_prime_is_a_w_sequence():
    rng = random.Random(4242)
    checked = 0
    for _ in range(300):
        m = rng.randint(1, 10**5)
        n = rng.randint(2, 40)
        window = list(range(m + 1, m + n + 1))
        primes_beyond_n = [v for v in window if v > n and is_prime_trial(v)]
        if not primes_beyond_n:
            continue
        checked += 1
        report = w_witness(window)
        assert report.witness_index is not None
        # the prime position itself is a valid witness
        p = primes_beyond_n[0]
        assert all(builtin_gcd(p, u) == 1 for u in window if u != p)
        assert report.witness_value <= p
    assert checked > 200  # the property was actually exercised


# ---------------------------------------------------------------------------
# distinct prime divisors for composite runs


def test_grimm_assign_frozen_values():
    result = grimm_assign(89, 7)
    assert result.assignment == (3, 7, 23, 31, 47, 5, 2)
    assert verify_assignment(result)
    result = grimm_assign(24, 4)
    assert result.assignment == (5, 13, 3, 2)
    assert verify_assignment(result)


def test_grimm_assign_rejects_windows_with_primes():
    with pytest.raises(DomainError):
        grimm_assign(4, 3)  # 5 is prime
    with pytest.raises(DomainError):
        grimm_assign(0, 1)
    with pytest.raises(DomainError):
        grimm_assign(24, 0)


def test_grimm_assignment_properties_on_every_run_up_to_2000():
    for start, length in composite_runs(2000):
        result = grimm_assign(start, length)
        assert result is not None
        assert verify_assignment(result)
        assert len(set(result.assignment)) == length
        for i, p in enumerate(result.assignment):
            assert (start + 1 + i) % p == 0
            assert is_prime_trial(p)


def test_grimm_assign_matches_exhaustive_backtracking_on_small_runs():
    for start, length in composite_runs(300):
        divisor_sets = [
            prime_divisors_by_trial(v) for v in range(start + 1, start + length + 1)
        ]
        matched = grimm_assign(start, length) is not None
        assert matched == (assignment_by_backtracking(divisor_sets) is not None)


def test_verify_assignment_rejects_tampering():
    good = grimm_assign(89, 7)
    assert verify_assignment(good)
    duplicated = GrimmAssignment(89, 7, (3, 7, 23, 31, 47, 5, 3))
    assert not verify_assignment(duplicated)
    wrong_divisor = GrimmAssignment(89, 7, (3, 7, 23, 31, 47, 5, 7))
    assert not verify_assignment(wrong_divisor)
    non_prime = GrimmAssignment(89, 7, (9, 7, 23, 31, 47, 5, 2))
    assert not verify_assignment(non_prime)
    wrong_length = GrimmAssignment(89, 6, (3, 7, 23, 31, 47, 5, 2))
    assert not verify_assignment(wrong_length)


def test_composite_runs_frozen_values():
    assert composite_runs(30) == [
        (3, 1),
        (5, 1),
        (7, 3),
        (11, 1),
        (13, 3),
        (17, 1),
        (19, 3),
        (23, 5),
        (29, 1),
    ]
    for start, length in composite_runs(500):
        assert is_prime_trial(start)
        assert is_prime_trial(start + length + 1)
        for v in range(start + 1, start + length + 1):
            assert not is_prime_trial(v)


def test_grimm_scan_small_horizon():
    results = grimm_scan(1000)
    assert len(results) == 167
    assert all(matched and validated for _, _, matched, _, validated in results)
    starts = [m for m, *_ in results]
    assert starts == [s for s, _ in composite_runs(1020) if s < 1000]


# ---------------------------------------------------------------------------
# witness-free runs


def test_non_w_max_run_frozen_values():
    assert non_w_max_run(2183, 20) == 17
    assert non_w_max_run(1, 10) == 0


def test_non_w_max_run_agrees_with_oracle_windows():
    # witness-freeness checked independently for every window length
    m = 2183
    lengths = [
        n
        for n in range(1, 21)
        if witness_by_pair_matrix(list(range(m + 1, m + n + 1))) is None
    ]
    assert max(lengths) == 17
    assert non_w_max_run(m, 20) == 17


def test_non_w_max_run_not_monotone_in_length():
    # at m = 2183 the run of 17 contains shorter windows that do have witnesses
    m = 2183
    free = {
        n
        for n in range(1, 18)
        if w_witness(range(m + 1, m + n + 1)).witness_index is None
    }
    assert 17 in free
    assert free != set(range(1, 18))


def test_default_window_bound_values():
    assert default_window_bound(0) == 2
    assert default_window_bound(2183) == 237
    assert default_window_bound(1) >= 1
    with pytest.raises(DomainError):
        default_window_bound(-1)


def test_non_w_max_run_domain_and_cap():
    with pytest.raises(DomainError):
        non_w_max_run(-1, 5)
    with pytest.raises(DomainError):
        non_w_max_run(10, 0)
    with pytest.raises(DomainError):
        non_w_max_run(10, 50, window_cap=20)
