"""Domino tableaux: cover-pair partitions, quotient posets, and the
quotient route to sign imbalance.

A tableau partitions the elements into cover 2-chains plus at most one
singleton (only when n is odd, and it must be a maximal element), such
that the parts admit an ordering whose prefixes are all down-sets -
equivalently, the induced quotient relation is acyclic.
"""

from typing import Iterator, NamedTuple

from .errors import MalformedPartition, NotATableau, ResourceLimit
from .linext import count_extensions, sign, _extension_orders, _validate
from .poset import Poset, from_covers, iter_bits

__all__ = [
    "DominoTableau",
    "make_tableau",
    "is_tableau",
    "enumerate_tableaux",
    "quotient",
    "tableau_sign",
    "adapted_extension",
    "adapted_count",
    "si_via_quotients",
    "is_q_adapted",
    "exists_q_adapted",
    "MATCHING_CAP",
]

MATCHING_CAP = 10**5


class DominoTableau(NamedTuple):
    pairs: tuple[tuple[int, int], ...]  # (bottom, top) cover pairs, by bottom
    singleton: int | None


def _check_partition(p: Poset, t: DominoTableau) -> None:
    seen = 0
    for bot, top in t.pairs:
        if not p.cover_up[bot] >> top & 1:
            raise MalformedPartition(f"({bot}, {top}) is not a cover pair")
        pm = (1 << bot) | (1 << top)
        if seen & pm:
            raise MalformedPartition("parts overlap")
        seen |= pm
    if t.singleton is not None:
        sm = 1 << t.singleton
        if seen & sm:
            raise MalformedPartition("parts overlap")
        seen |= sm
    if seen != (1 << p.n) - 1:
        raise MalformedPartition("parts do not cover all elements")


def make_tableau(
    p: Poset, pairs, singleton: int | None = None
) -> DominoTableau:
    """Validated construction; rejects non-maximal singletons loudly."""
    t = DominoTableau(tuple(sorted(tuple(pr) for pr in pairs)), singleton)
    _check_partition(p, t)
    if t.singleton is not None and p.up[t.singleton]:
        raise MalformedPartition(f"singleton {t.singleton} is not maximal")
    return t


def _parts(t: DominoTableau) -> list[tuple[int, ...]]:
    """Parts in canonical order: pairs by bottom element, singleton last."""
    parts: list[tuple[int, ...]] = list(t.pairs)
    if t.singleton is not None:
        parts.append((t.singleton,))
    return parts


def _quotient_edges(p: Poset, t: DominoTableau) -> tuple[int, list[tuple[int, int]]]:
    parts = _parts(t)
    part_of = {}
    for k, part in enumerate(parts):
        for x in part:
            part_of[x] = k
    edges = set()
    for a, b in p.relations():
        ka, kb = part_of[a], part_of[b]
        if ka != kb:
            edges.add((ka, kb))
    return len(parts), sorted(edges)


def _is_acyclic(k: int, edges: list[tuple[int, int]]) -> bool:
    adj = [0] * k
    indeg = [0] * k
    for a, b in edges:
        if not adj[a] >> b & 1:
            adj[a] |= 1 << b
            indeg[b] += 1
    queue = [v for v in range(k) if indeg[v] == 0]
    done = 0
    while queue:
        v = queue.pop()
        done += 1
        for w in iter_bits(adj[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return done == k


def is_tableau(p: Poset, t: DominoTableau) -> bool:
    """True iff the partition's quotient relation is acyclic and the
    singleton, if any, is maximal. Raises MalformedPartition if t is not
    a partition into cover 2-chains plus at most one singleton."""
    _check_partition(p, t)
    if t.singleton is not None and p.up[t.singleton]:
        return False
    k, edges = _quotient_edges(p, t)
    return _is_acyclic(k, edges)


def _cover_matchings(p: Poset, cap: int = MATCHING_CAP) -> Iterator[DominoTableau]:
    """All partitions into cover 2-chains plus at most one maximal
    singleton (no ordering condition yet)."""
    n = p.n
    full = (1 << n) - 1
    if n == 0:
        yield DominoTableau((), None)
        return
    pairs: list[tuple[int, int]] = []
    produced = 0

    def rec(uncovered: int, singleton: int | None) -> Iterator[DominoTableau]:
        nonlocal produced
        if uncovered == 0:
            produced += 1
            if produced > cap:
                raise ResourceLimit(f"matching count exceeded cap {cap}")
            yield DominoTableau(tuple(sorted(pairs)), singleton)
            return
        u = (uncovered & -uncovered).bit_length() - 1
        rest = uncovered ^ (1 << u)
        for w in iter_bits(p.cover_up[u] & rest):
            pairs.append((u, w))
            yield from rec(rest ^ (1 << w), singleton)
            pairs.pop()
        for w in iter_bits(p.down[u] & rest):
            if p.cover_up[w] >> u & 1:
                pairs.append((w, u))
                yield from rec(rest ^ (1 << w), singleton)
                pairs.pop()
        if singleton is None and n % 2 == 1 and not p.up[u]:
            yield from rec(rest, u)

    yield from rec(full, None)


def enumerate_tableaux(p: Poset, cap: int = MATCHING_CAP) -> list[DominoTableau]:
    """All domino tableaux, sorted by their pair lists."""
    out = [t for t in _cover_matchings(p, cap) if is_tableau(p, t)]
    out.sort()
    return out


def quotient(p: Poset, t: DominoTableau) -> Poset:
    """Poset on the parts of t (pairs by bottom element, singleton last)."""
    _check_partition(p, t)
    k, edges = _quotient_edges(p, t)
    if (t.singleton is not None and p.up[t.singleton]) or not _is_acyclic(k, edges):
        raise NotATableau("partition is not a domino tableau")
    return from_covers(k, edges)


def adapted_extension(p: Poset, t: DominoTableau) -> tuple[int, ...]:
    """A linear extension assigning labels 2i-1, 2i to the i-th scheduled
    part (singleton last, receiving label n)."""
    q = quotient(p, t)
    parts = _parts(t)
    k = len(parts)
    single = k - 1 if t.singleton is not None else -1
    placed = 0
    order: list[int] = []
    full = (1 << k) - 1
    while placed != full:
        ready = [
            v
            for v in range(k)
            if not placed >> v & 1 and not (q.down[v] & ~placed) and v != single
        ]
        if not ready:
            ready = [single]  # maximal, so always schedulable last
        order.append(ready[0])
        placed |= 1 << ready[0]
    labels = [0] * p.n
    nxt = 1
    for v in order:
        part = parts[v]
        if len(part) == 1:
            labels[part[0]] = nxt
            nxt += 1
        else:
            bot, top = part
            labels[bot], labels[top] = nxt, nxt + 1
            nxt += 2
    return tuple(labels)


def tableau_sign(p: Poset, t: DominoTableau) -> int:
    """Common sign of all extensions adapted to t."""
    return sign(p, adapted_extension(p, t))


def adapted_count(p: Poset, t: DominoTableau) -> int:
    """Number of linear extensions adapted to t.

    For even n this is e of the quotient. For odd n the singleton part is
    forced to carry the top label, so it is e of the quotient with the
    singleton part removed.
    """
    q = quotient(p, t)
    if t.singleton is None:
        return count_extensions(q)
    return count_extensions(q.subposet(range(q.n - 1)))


def si_via_quotients(p: Poset, cap: int = MATCHING_CAP) -> int:
    """Sign imbalance as |sum over tableaux of sgn(t) * adapted count|."""
    total = 0
    for t in enumerate_tableaux(p, cap):
        total += tableau_sign(p, t) * adapted_count(p, t)
    return abs(total)


def _blocks_connected(p: Poset, block: list[int]) -> bool:
    parent = list(range(len(block)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(block)
    for i, a in enumerate(block):
        for j in range(i + 1, len(block)):
            if p.comparable(a, block[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    comps -= 1
    return comps <= 1


def is_q_adapted(p: Poset, labels: tuple[int, ...], q: int) -> bool:
    """Blocks of q consecutive labels must each induce a connected
    subposet (up to q-1 top labels are left over and ignored)."""
    if q < 2:
        raise ValueError("block size must be at least 2")
    _validate(p, labels)
    elem_of = [0] * (p.n + 1)
    for x, lab in enumerate(labels):
        elem_of[lab] = x
    for start in range(1, p.n - q + 2, q):
        block = [elem_of[lab] for lab in range(start, start + q)]
        if not _blocks_connected(p, block):
            return False
    return True


def exists_q_adapted(p: Poset, q: int) -> bool:
    """Search all extensions for a q-adapted one, exiting early on a hit."""
    if q < 2:
        raise ValueError("block size must be at least 2")
    nblocks = p.n // q
    for order in _extension_orders(p):
        if all(
            _blocks_connected(p, list(order[i * q : (i + 1) * q]))
            for i in range(nblocks)
        ):
            return True
    return False
