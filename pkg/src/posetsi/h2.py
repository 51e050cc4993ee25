"""Height-2 layer: the two-level lift, its inverse decomposition, the
polynomial sign-imbalance decider, and the desk-scale census operations
(odd-count, prime-coprime count, bounds, achievable spectrum).

The lift of a base poset P under a good relation set R lives on two
copies of P's elements: bottoms 0..n-1, tops n..2n-1, with x below n+y
iff (x, y) is in R. Its sign imbalance equals e(P).
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .domino import is_tableau, _cover_matchings, quotient
from .errors import BadGoodSet, HeightExceeded, VerificationError
from .generate import enumerate_posets
from .linext import at_least_k, count_extensions, count_mod
from .poset import Poset, iter_bits, stats

__all__ = [
    "GoodSet",
    "Decomposition",
    "good_base",
    "enumerate_good_sets",
    "build_lift",
    "decompose",
    "h2sb_decide",
    "count_f",
    "count_f_q",
    "odd_e_bounds",
    "spectrum",
]

GoodSet = frozenset  # pairs (x, y) over base elements, diagonal included


@dataclass(frozen=True)
class Decomposition:
    kind: str  # "sign_balanced" | "lift" | "lift_plus_isolated"
    base: Poset | None = None
    rel: GoodSet | None = None
    isolated: int | None = None


def good_base(p: Poset) -> GoodSet:
    """Smallest good set: the diagonal plus all cover pairs."""
    rel = {(x, x) for x in range(p.n)}
    for u in range(p.n):
        for v in iter_bits(p.cover_up[u]):
            rel.add((u, v))
    return frozenset(rel)


def _validate_good(p: Poset, rel: GoodSet) -> None:
    base = good_base(p)
    if not base <= rel:
        missing = sorted(base - rel)[0]
        raise BadGoodSet(f"missing diagonal or cover pair {missing}")
    for x, y in rel - base:
        if not p.lt(x, y):
            raise BadGoodSet(f"pair ({x}, {y}) leaves the order")


def enumerate_good_sets(p: Poset) -> Iterator[GoodSet]:
    """All good sets: the base union each subset of non-cover relations."""
    base = good_base(p)
    extras = sorted(
        (x, y) for x, y in p.relations() if not p.cover_up[x] >> y & 1
    )
    for r in range(len(extras) + 1):
        for chosen in combinations(extras, r):
            yield base | frozenset(chosen)


def build_lift(p: Poset, rel: GoodSet) -> Poset:
    """Two-level poset with bottoms below tops along rel; height <= 2."""
    _validate_good(p, rel)
    n = p.n
    up = [0] * (2 * n)
    for x, y in rel:
        up[x] |= 1 << (n + y)
    return Poset(2 * n, tuple(up))


def _unique_perfect_matching(q: Poset):
    """The unique Hasse perfect matching as (bottom, top) pairs, or None
    if there are zero or several."""
    found = None
    for t in _cover_matchings(q):
        if t.singleton is not None:
            continue
        if found is not None:
            return None
        found = t
    return found


def decompose(q: Poset) -> Decomposition:
    """Invert the lift on a height-<=2 poset, or certify sign balance.

    Even n: not sign-balanced iff the Hasse diagram has a unique perfect
    matching that is a tableau; the base is the quotient and the relation
    set is read off the cross edges. Odd n: strip the unique isolated
    vertex and recurse; any other shape is sign-balanced.
    """
    if stats(q).height > 2:
        raise HeightExceeded("decompose requires height at most 2")
    if q.n % 2 == 1:
        iso = q.isolated_mask
        if iso.bit_count() != 1:
            return Decomposition("sign_balanced")
        v = iso.bit_length() - 1
        inner = decompose(q.subposet([x for x in range(q.n) if x != v]))
        if inner.kind == "sign_balanced":
            return inner
        return Decomposition("lift_plus_isolated", inner.base, inner.rel, v)
    t = _unique_perfect_matching(q)
    if t is None or not is_tableau(q, t):
        return Decomposition("sign_balanced")
    base = quotient(q, t)
    parts = t.pairs
    rel = {(i, i) for i in range(base.n)}
    for i, (bi, ti) in enumerate(parts):
        for j, (bj, tj) in enumerate(parts):
            if i != j and q.lt(bi, tj):
                rel.add((i, j))
    return Decomposition("lift", base, frozenset(rel))


def h2sb_decide(q: Poset, k: int) -> bool:
    """Decide si(q) >= k for height-<=2 q without full enumeration.

    Either the sign imbalance is zero (no or several Hasse matchings, or
    a non-tableau matching) or it equals e of the quotient, which is
    compared against k with an early-exit enumeration.
    """
    if k < 0:
        raise ValueError("threshold must be nonnegative")
    if stats(q).height > 2:
        raise HeightExceeded("h2sb requires height at most 2")
    if k == 0:
        return True
    if q.n % 2 == 1:
        iso = q.isolated_mask
        if iso.bit_count() != 1:
            return False
        v = iso.bit_length() - 1
        return h2sb_decide(q.subposet([x for x in range(q.n) if x != v]), k)
    if q.n == 0:
        return k <= 1  # empty poset has si = 1
    t = _unique_perfect_matching(q)
    if t is None or not is_tableau(q, t):
        return False
    return at_least_k(quotient(q, t), k)


def count_f(n_total: int) -> dict:
    """Count height-<=2 classes on n_total elements with odd e, by two
    independent routes that must agree.

    Formula route: sum 2**(re-cr) over odd-e classes on half the elements.
    Direct route: enumerate height-<=2 classes and count odd e.
    """
    if n_total < 0 or n_total > 11:
        raise ValueError("supported range is 0..11")
    half = n_total // 2
    formula = 0
    for p in enumerate_posets(half):
        if count_mod(p, 2) == 1:
            s = stats(p)
            formula += 1 << (s.re - s.cr)
    direct = sum(
        1 for q in enumerate_posets(n_total, max_height=2) if count_mod(q, 2) == 1
    )
    if formula != direct:
        raise VerificationError(
            f"odd-count mismatch on {n_total} elements: "
            f"formula {formula} != direct {direct}"
        )
    return {"n": n_total, "formula": formula, "direct": direct}


def count_f_q(m: int, q: int) -> int:
    """Height-<=2 classes on m elements whose e is not divisible by q."""
    if m < 0 or m > 8:
        raise ValueError("supported range is 0..8")
    if q < 2:
        raise ValueError("modulus must be at least 2")
    return sum(
        1 for p in enumerate_posets(m, max_height=2) if count_mod(p, q) != 0
    )


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def odd_e_bounds(n: int) -> dict:
    """Check every odd-e height-<=2 class on 2n vertices against
    (n!)^2 <= e <= n!(2n-1)!! and the structural sandwich: the class is a
    lift, so its relations run from matched bottoms to matched tops."""
    if n < 0 or 2 * n > 8:
        raise ValueError("supported range is 2n <= 8")
    lower = math.factorial(n) ** 2
    upper = math.factorial(n) * _double_factorial(2 * n - 1)
    values = []
    for p in enumerate_posets(2 * n, max_height=2):
        e = count_extensions(p)
        if e % 2 == 0:
            continue
        values.append(e)
        if not lower <= e <= upper:
            raise VerificationError(
                f"odd e={e} outside [{lower}, {upper}] on {2 * n} vertices"
            )
        dec = decompose(p)
        if dec.kind != "lift":
            raise VerificationError("odd-e poset failed to decompose as a lift")
        bottoms = 0
        tops = 0
        matching = _unique_perfect_matching(p)
        for bot, top in matching.pairs:
            bottoms |= 1 << bot
            tops |= 1 << top
        for a, b in p.relations():
            if not (bottoms >> a & 1 and tops >> b & 1):
                raise VerificationError(
                    f"relation ({a}, {b}) does not run bottom-to-top"
                )
    return {
        "n": n,
        "vertices": 2 * n,
        "lower": lower,
        "upper": upper,
        "odd_e_values": sorted(set(values)),
        "classes_with_odd_e": len(values),
    }


def spectrum(max_vertices: int) -> dict:
    """Achievable e values over height-<=2 classes with at most
    max_vertices elements, with one witness poset per value."""
    if max_vertices < 0 or max_vertices > 8:
        raise ValueError("supported range is 0..8")
    witnesses: dict[int, Poset] = {}
    for size in range(max_vertices + 1):
        for p in enumerate_posets(size, max_height=2):
            e = count_extensions(p)
            if e not in witnesses:
                witnesses[e] = p
    values = sorted(witnesses)
    top = values[-1] if values else 0
    gaps = [v for v in range(1, top) if v not in witnesses]
    return {
        "max_vertices": max_vertices,
        "values": values,
        "gaps": gaps,
        "witnesses": witnesses,
    }
