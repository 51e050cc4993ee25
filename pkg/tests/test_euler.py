import pytest

from posetsi import (
    ResourceLimit,
    check_congruence,
    count_extensions,
    count_mod,
    euler_numbers,
    euler_numbers_mod,
    prime_avoiding_poset,
    primes_never_dividing,
    zigzag,
)

PAPER_PRIMES_600 = [
    3, 7, 11, 23, 83, 107, 163, 167, 179, 191, 199, 211, 227, 239,
    367, 383, 443, 479, 487, 503, 599,
]


def test_first_values():
    assert euler_numbers(6) == [1, 1, 2, 5, 16, 61]


def test_matches_fence_counts():
    table = euler_numbers(12)
    for n in range(1, 13):
        assert table[n - 1] == count_extensions(zigzag(n))


def test_mod_table_consistent():
    table = euler_numbers(30)
    for q in (2, 3, 5, 7, 11, 13):
        assert euler_numbers_mod(30, q) == [x % q for x in table]


def test_congruence_direct_instance():
    # q=3, n=4: E_4 = 5 = 2 mod 3 and E_3 * E_2 = 2
    assert check_congruence(4, 3)


def test_congruence_odd_primes():
    for q in (3, 5, 7, 11):
        for n in range(q + 1, 31):
            assert check_congruence(n, q)


def test_congruence_fails_for_two():
    # parity of the Euler numbers alternates from n = 3 on, so the shift
    # identity cannot hold mod 2; this records the arithmetic fact
    assert not any(check_congruence(n, 2) for n in range(3, 31))


def test_congruence_domain():
    with pytest.raises(ValueError):
        check_congruence(3, 3)


def test_prime_euler_residues_are_units():
    for q in (3, 5, 7, 11, 13):
        r = euler_numbers_mod(q, q)[q - 1]
        assert r in (1, q - 1)


def test_never_dividing_list():
    assert primes_never_dividing(600) == PAPER_PRIMES_600
    assert primes_never_dividing(250) == PAPER_PRIMES_600[:14]


def test_known_divisible_primes_excluded():
    out = primes_never_dividing(30)
    assert 2 not in out  # E_3 = 2
    assert 5 not in out  # E_4 = 5
    assert 13 not in out
    assert out == [3, 7, 11, 23]


def test_bound_guard():
    with pytest.raises(ResourceLimit):
        primes_never_dividing(10**5)


def test_prime_avoiding_poset_basic():
    for primes in ({2}, {3}, {2, 3}, {2, 3, 5}):
        p = prime_avoiding_poset(primes)
        assert p.n >= 2
        for q in primes:
            assert count_mod(p, q) == 1


def test_prime_avoiding_poset_min_size():
    p = prime_avoiding_poset({3}, min_size=3)
    assert p.n == 5  # E_5 = 16 = 1 mod 3
    assert count_mod(p, 3) == 1


def test_prime_avoiding_poset_rejects_bad_modulus():
    with pytest.raises(ValueError):
        prime_avoiding_poset({1})
