"""Linear extensions: counting, enumeration, signs, and the label-swap
involution underlying sign imbalance.

A linear extension is stored as its label array ``labels`` with
``labels[x]`` in 1..n. The sign convention fixes the reference bijection
to the identity on element indices, so sgn is the inversion parity of the
label array; imbalance is independent of that choice.
"""

from typing import Iterator, NamedTuple

from .errors import InvalidExtension, ResourceLimit
from .poset import Poset, iter_bits, stats

__all__ = [
    "SignedCount",
    "sign",
    "count_extensions",
    "signed_count",
    "count_mod",
    "enumerate_extensions",
    "at_least_k",
    "phi",
    "ruskey_criterion",
    "stanley_criterion",
    "DOWNSET_CAP",
    "ENUM_CAP",
]

DOWNSET_CAP = 1 << 24
ENUM_CAP = 10**6


class SignedCount(NamedTuple):
    total: int  # e(P)
    signed: int  # sum of sgn over all extensions
    imbalance: int  # |signed|


def _validate(p: Poset, labels: tuple[int, ...]) -> None:
    n = p.n
    if len(labels) != n or sorted(labels) != list(range(1, n + 1)):
        raise InvalidExtension(f"labels {labels} are not a bijection onto 1..{n}")
    for i in range(n):
        for j in iter_bits(p.up[i]):
            if labels[i] >= labels[j]:
                raise InvalidExtension(
                    f"labels {labels} violate {i} < {j}"
                )


def sign(p: Poset, labels: tuple[int, ...]) -> int:
    """Inversion parity of the label array; +1 for the identity labeling."""
    _validate(p, labels)
    inv = 0
    n = p.n
    for i in range(n):
        for j in range(i + 1, n):
            if labels[i] > labels[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _layered_dp(p: Poset, init, step, downset_cap: int):
    """Run a DP over the lattice of down-sets, one popcount layer at a time.

    ``init`` is the value at the empty ideal; ``step(value, mask, x)`` maps
    the value at ideal ``mask`` to the contribution of appending x.
    """
    n = p.n
    full = (1 << n) - 1
    down = p.down
    cur = {0: init}
    visited = 1
    for _ in range(n):
        nxt: dict = {}
        for mask, val in cur.items():
            free = ~mask & full
            while free:
                low = free & -free
                free ^= low
                x = low.bit_length() - 1
                if down[x] & ~mask:
                    continue
                new = mask | low
                add = step(val, mask, x)
                if new in nxt:
                    nxt[new] += add
                else:
                    nxt[new] = add
        cur = nxt
        visited += len(cur)
        if visited > downset_cap:
            raise ResourceLimit(f"down-set count exceeded cap {downset_cap}")
    return cur[full]


def count_extensions(p: Poset, downset_cap: int = DOWNSET_CAP) -> int:
    """Exact e(P) by dynamic programming over down-sets."""
    if p.n == 0:
        return 1
    return _layered_dp(p, 1, lambda val, mask, x: val, downset_cap)


def signed_count(p: Poset, downset_cap: int = DOWNSET_CAP) -> SignedCount:
    """e(P) together with the exact signed sum over all extensions.

    Appending x to the ideal assigns it the next label, which creates one
    inversion per already-placed element with a larger index; the weight
    is therefore (-1)**popcount(ideal & indices-above-x).
    """
    n = p.n
    if n == 0:
        return SignedCount(1, 1, 1)
    full = (1 << n) - 1
    high = [full & ~((1 << (x + 1)) - 1) for x in range(n)]

    def step(val, mask, x):
        return -val if (mask & high[x]).bit_count() & 1 else val

    total = count_extensions(p, downset_cap)
    sgn = _layered_dp(p, 1, step, downset_cap)
    return SignedCount(total, sgn, abs(sgn))


def count_mod(p: Poset, q: int, downset_cap: int = DOWNSET_CAP) -> int:
    """e(P) mod q via the same down-set DP with modular arithmetic."""
    if q < 2:
        raise ValueError("modulus must be at least 2")
    if p.n == 0:
        return 1 % q
    return _layered_dp(p, 1 % q, lambda val, mask, x: val % q, downset_cap) % q


def _extension_orders(p: Poset) -> Iterator[tuple[int, ...]]:
    """Yield extensions as element sequences (label order), depth first
    with ascending element choice."""
    n = p.n
    down = p.down
    seq: list[int] = []
    full = (1 << n) - 1

    def rec(mask: int) -> Iterator[tuple[int, ...]]:
        if mask == full:
            yield tuple(seq)
            return
        free = ~mask & full
        while free:
            low = free & -free
            free ^= low
            x = low.bit_length() - 1
            if down[x] & ~mask:
                continue
            seq.append(x)
            yield from rec(mask | low)
            seq.pop()

    return rec(0)


def _labels_of_order(order: tuple[int, ...]) -> tuple[int, ...]:
    labels = [0] * len(order)
    for pos, x in enumerate(order):
        labels[x] = pos + 1
    return tuple(labels)


def enumerate_extensions(p: Poset, cap: int = ENUM_CAP) -> Iterator[tuple[int, ...]]:
    """All linear extensions as label arrays, lexicographically sorted."""
    found = []
    for order in _extension_orders(p):
        found.append(_labels_of_order(order))
        if len(found) > cap:
            raise ResourceLimit(f"extension count exceeded cap {cap}")
    found.sort()
    return iter(found)


def at_least_k(p: Poset, k: int) -> bool:
    """True iff e(P) >= k, enumerating at most k extensions."""
    if k <= 0:
        return True
    hits = 0
    for _ in _extension_orders(p):
        hits += 1
        if hits >= k:
            return True
    return False


def phi(p: Poset, labels: tuple[int, ...]) -> tuple[int, ...]:
    """Sign-reversing involution: swap the least odd label j whose
    successor j+1 sits on an incomparable element; fixed point if none."""
    _validate(p, labels)
    n = p.n
    elem_of = [0] * (n + 1)
    for x, lab in enumerate(labels):
        elem_of[lab] = x
    for j in range(1, n, 2):
        a, b = elem_of[j], elem_of[j + 1]
        if not p.comparable(a, b):
            out = list(labels)
            out[a], out[b] = j + 1, j
            return tuple(out)
    return labels


def ruskey_criterion(p: Poset) -> bool:
    """Every nonminimal element lies strictly above at least two elements.

    Posets satisfying this are sign-balanced: labels 1 and 2 always land
    on incomparable minimal elements, so swapping them is a sign-reversing
    involution without fixed points. Needs two labels to swap, so posets
    with fewer than two elements (si = 1) fail the criterion.
    """
    return p.n >= 2 and all(
        p.down[v] == 0 or p.down[v].bit_count() >= 2 for v in range(p.n)
    )


def stanley_criterion(p: Poset) -> bool:
    """Every maximal chain has length (edge count) congruent to n mod 2.

    Such posets are sign-balanced (promotion gives a sign-reversing
    involution). Posets with fewer than two elements (si = 1) fail the
    criterion.
    """
    n = p.n
    if n < 2:
        return False
    parity = n & 1
    maxima = [v for v in range(n) if not p.up[v]]

    def chains_ok(v: int, length: int) -> bool:
        lower_covers = [u for u in range(n) if p.cover_up[u] >> v & 1]
        if not lower_covers:
            return (length & 1) == parity
        return all(chains_ok(u, length + 1) for u in lower_covers)

    return all(chains_ok(v, 0) for v in maxima)
