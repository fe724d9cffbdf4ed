from __future__ import annotations

import numpy as np
import pytest

from leftfact import (
    build_sieve,
    count_pair_progressions,
    good_prime_check,
    p_set,
    pi_sequence,
    s_sequence,
    sign_statistics,
    sum_inequality_scan,
)

SIEVE = build_sieve(2_000_000)

FIRST_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
]


def test_sieve_against_hand_list():
    assert SIEVE.primes_up_to(100).tolist() == FIRST_PRIMES
    assert SIEVE.is_prime(2)
    assert not SIEVE.is_prime(1)
    assert not SIEVE.is_prime(0)
    assert SIEVE.is_prime(1299709)  # p_100000


def test_sieve_known_counts():
    assert SIEVE.primes_up_to(10**4).size == 1229
    assert SIEVE.primes_up_to(10**6).size == 78498
    assert len(build_sieve(2)) == 1


def test_sieve_indexing_and_bounds():
    assert SIEVE.prime_at(1) == 2
    assert SIEVE.prime_at(25) == 97
    with pytest.raises(ValueError):
        SIEVE.prime_at(0)
    with pytest.raises(ValueError):
        SIEVE.is_prime(SIEVE.limit + 1)
    with pytest.raises(ValueError):
        SIEVE.primes_up_to(SIEVE.limit + 1)
    with pytest.raises(ValueError):
        build_sieve(1)


def test_sieve_membership_vectorized():
    vals = np.array([0, 1, 2, 3, 4, 97, 98, 1299709])
    got = SIEVE.membership(vals)
    assert got.tolist() == [False, False, True, True, False, True, False, True]


def test_p_set_forced_candidate_cases():
    # n not divisible by 3: the only possible member is 2n+3
    r1 = p_set(1, sieve=SIEVE)
    assert r1.members == (5,)
    assert r1.exhaustive
    assert r1.forced_candidate == 5
    r13 = p_set(13, sieve=SIEVE)
    assert r13.members == ()
    assert r13.exhaustive
    r4 = p_set(4, sieve=SIEVE)
    assert r4.members == (11,)
    # 2n+3 = 41 prime and 41+38=79 prime: P(19) = {41}
    assert p_set(19, sieve=SIEVE).members == (41,)


def test_p_set_searched_case_multiple_of_three():
    r = p_set(3, x_bound=1000, sieve=SIEVE)
    assert not r.exhaustive
    assert r.x_bound == 1000
    assert 11 in r.members and 13 in r.members
    for x in r.members:
        assert SIEVE.is_prime(x - 6) and SIEVE.is_prime(x) and SIEVE.is_prime(x + 6)


def test_p_set_validation():
    with pytest.raises(ValueError):
        p_set(0)
    with pytest.raises(ValueError):
        p_set(10, x_bound=20)


def test_p_set_classification_soundness():
    # brute force x <= 10^5 finds nothing beyond the forced candidate for
    # any n not divisible by 3
    xs = SIEVE.primes_up_to(100_000)
    for n in range(1, 501):
        if n % 3 == 0:
            continue
        x = xs[xs > 2 * n]
        hits = x[SIEVE.membership(x - 2 * n) & SIEVE.membership(x + 2 * n)]
        assert set(hits.tolist()) <= {2 * n + 3}, n


def test_p_set_union_grows_with_search_bound():
    counts = []
    for bound in (25_000, 50_000, 100_000):
        nonempty = 0
        for n in range(1, 301):
            if p_set(n, x_bound=bound, sieve=SIEVE).members:
                nonempty += 1
        counts.append(nonempty)
    assert counts[0] <= counts[1] <= counts[2]
    assert counts[2] > 0


def test_count_pair_progressions_base():
    # k = 0 gives (5, 7); k = 1 gives (11, 19)
    count, ratio = count_pair_progressions(1)
    assert count == 2
    assert ratio > 0
    with pytest.raises(ValueError):
        count_pair_progressions(0)
    with pytest.raises(ValueError):
        count_pair_progressions(100, sieve=build_sieve(100))


def test_count_pair_progressions_monotone():
    c1, _ = count_pair_progressions(100, sieve=SIEVE)
    c2, _ = count_pair_progressions(1000, sieve=SIEVE)
    assert c1 <= c2
    k = np.arange(1001)
    expected = int(
        np.count_nonzero(SIEVE.membership(6 * k + 5) & SIEVE.membership(12 * k + 7))
    )
    assert c2 == expected


def test_s_sequence_hand_values():
    # s_2 = 9-2-5, s_3 = 25-3-7, s_4 = 49-5-11
    assert s_sequence(2, SIEVE) == 2
    assert s_sequence(3, SIEVE) == 15
    assert s_sequence(4, SIEVE) == 33
    with pytest.raises(ValueError):
        s_sequence(1, SIEVE)


def test_s_sequence_positive_through_sieve():
    p = SIEVE.primes
    s = p[1:-1].astype(np.int64) ** 2 - p[:-2] - p[2:]
    assert int(s.min()) > 0
    # and the scalar path agrees with the vector form
    assert s_sequence(100, SIEVE) == int(s[98])


def test_pi_sequence_hand_values_and_signs():
    # pi_2 = 9-10, pi_3 = 25-21, pi_4 = 49-55, pi_5 = 121-91
    assert pi_sequence(2, SIEVE) == -1
    assert pi_sequence(3, SIEVE) == 4
    assert pi_sequence(4, SIEVE) == -6
    assert pi_sequence(5, SIEVE) == 30


def test_pi_sequence_both_signs_common_below_million():
    p = SIEVE.primes
    upto = int(np.searchsorted(p, 1_000_000, side="right"))
    pi = p[1 : upto - 1] ** 2 - p[: upto - 2] * p[2:upto]
    positives = int((pi > 0).sum())
    negatives = int((pi < 0).sum())
    assert int((pi == 0).sum()) == 0
    assert positives > 1000 and negatives > 1000


def test_pi_negative_on_twin_with_wide_right_gap():
    # (p_{n-1}, p_n) twin and p_{n+1} >= p_n + 6 forces
    # p_n^2 < p_{n-1} p_{n+1}
    p = SIEVE.primes
    upto = int(np.searchsorted(p, 100_000, side="right"))
    n_idx = np.arange(1, upto - 1)
    twin = p[n_idx] - p[n_idx - 1] == 2
    wide = p[n_idx + 1] - p[n_idx] >= 6
    sel = n_idx[twin & wide]
    assert sel.size > 0
    pi = p[sel] ** 2 - p[sel - 1] * p[sel + 1]
    assert int(pi.max()) < 0


def test_good_prime_check_small_cases():
    # 5 is good: 25 > 3*7 and 25 > 2*11; 7 is not: 49 < 5*11
    assert good_prime_check(3, SIEVE).is_good
    assert not good_prime_check(4, SIEVE).is_good
    assert good_prime_check(1, SIEVE).vacuous
    with pytest.raises(ValueError):
        good_prime_check(0, SIEVE)


def test_good_prime_check_matches_brute_force():
    p = SIEVE.primes
    for n in range(2, 201):
        square = int(p[n - 1]) ** 2
        brute = all(
            square > int(p[n - 1 - i]) * int(p[n - 1 + i]) for i in range(1, n)
        )
        assert good_prime_check(n, SIEVE).is_good == brute, n


def test_good_prime_least_nonvacuous_is_five():
    firsts = [n for n in range(2, 50) if good_prime_check(n, SIEVE).is_good]
    assert firsts[0] == 3
    assert SIEVE.prime_at(3) == 5


def test_sum_inequality_scan_small():
    # p_1^2 = 4 < 2+3, p_2^2 = 9 < 2+3+5: failures exactly {1, 2}
    n0, failures = sum_inequality_scan(50, SIEVE)
    assert failures == [1, 2]
    assert n0 == 3
    with pytest.raises(ValueError):
        sum_inequality_scan(0, SIEVE)


def test_sign_statistics():
    stats = sign_statistics(np.array([1, -1, -1, 5, 2, -3]))
    assert stats.positives == 3
    assert stats.negatives == 3
    assert stats.runs == 4
    assert stats.longest_positive_run == 2
    assert stats.longest_negative_run == 2
    with pytest.raises(ValueError):
        sign_statistics(np.array([1, 0, -1]))
