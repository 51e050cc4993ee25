"""Euler zigzag numbers and divisibility phenomena of fence posets.

E_n counts the linear extensions of the n-element zigzag poset (OEIS
A000111 shifted to start at E_1 = 1). The table is computed by the
boustrophedon recurrence with exact integers; a modular variant backs
the prime sweeps. For odd primes q and n > q the congruence
E_n = E_q * E_{n-(q-1)} (mod q) reduces divisibility questions to the
first q values; a guard window up to 3q is checked as well because the
congruence fails for q = 2 (Euler parities alternate from n = 3 on).
"""

from .errors import ResourceLimit, VerificationError
from .linext import count_mod
from .poset import Poset, zigzag

__all__ = [
    "euler_numbers",
    "euler_numbers_mod",
    "check_congruence",
    "primes_never_dividing",
    "prime_avoiding_poset",
]


def _boustrophedon(nmax: int, mod: int | None = None):
    """E_1..E_nmax via the zigzag triangle; optionally reduced mod q."""
    row = [1 if mod is None else 1 % mod]
    out = []
    for _ in range(nmax):
        new = [0]
        for x in reversed(row):
            s = new[-1] + x
            new.append(s if mod is None else s % mod)
        row = new
        out.append(row[-1])
    return out


def euler_numbers(nmax: int) -> list[int]:
    """Exact [E_1, ..., E_nmax]; E_1 = E_2 = 1, E_3 = 2, E_6 = 61, ..."""
    if nmax < 1:
        raise ValueError("need at least one term")
    return _boustrophedon(nmax)


def euler_numbers_mod(nmax: int, q: int) -> list[int]:
    if nmax < 1 or q < 2:
        raise ValueError("need nmax >= 1 and modulus >= 2")
    return _boustrophedon(nmax, q)


def check_congruence(n: int, q: int) -> bool:
    """Does E_n = E_q * E_{n-(q-1)} hold mod q? Requires n > q >= 2."""
    if n <= q:
        raise ValueError("the congruence is stated for n > q")
    em = euler_numbers_mod(n, q)
    return em[n - 1] == em[q - 1] * em[n - q] % q


def _primes_upto(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(bound + 1) if sieve[i]]


def primes_never_dividing(bound: int) -> list[int]:
    """Primes q <= bound with q dividing no E_n at all.

    For odd primes, q never dividing E_1..E_q is sufficient via the
    congruence; the window is still extended to 3q as a guard, which is
    what correctly rejects q = 2 (E_3 = 2).
    """
    if bound > 10**4:
        raise ResourceLimit("documented practical bound is 10^4")
    out = []
    for q in _primes_upto(bound):
        em = euler_numbers_mod(3 * q, q)
        if all(x != 0 for x in em[:q]) and all(x != 0 for x in em):
            out.append(q)
    return out


def prime_avoiding_poset(
    primes: set[int], min_size: int = 2, max_size: int = 512
) -> Poset:
    """Smallest zigzag with at least ``min_size`` (> 1) elements whose
    extension count is 1 mod q for every q in ``primes``.

    The Euler table mod q supplies candidates; the returned poset is
    re-verified with the independent counting DP, never trusted from the
    table alone. The DP runs over fence down-sets, so very large results
    hit the down-set cap.
    """
    qs = sorted(primes)
    if any(q < 2 for q in qs):
        raise ValueError("moduli must be at least 2")
    min_size = max(min_size, 2)
    tables = {q: euler_numbers_mod(max_size, q) for q in qs}
    for n in range(min_size, max_size + 1):
        if all(tables[q][n - 1] == 1 % q for q in qs):
            p = zigzag(n)
            for q in qs:
                if count_mod(p, q) != 1 % q:
                    raise VerificationError(
                        f"euler table and counting DP disagree at n={n}, q={q}"
                    )
            return p
    raise ResourceLimit(f"no qualifying zigzag with at most {max_size} elements")
