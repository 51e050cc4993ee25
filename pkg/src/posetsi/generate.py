"""Exhaustive generation of poset isomorphism classes.

Every n-element poset arises from an (n-1)-element poset by attaching a
new maximal element over a lower order ideal, so the class lists are grown
level by level and deduplicated through canonical forms. Results are
cached per (size, height bound) for reuse across sweeps.
"""

from functools import lru_cache
from typing import Callable, Iterator

from .canon import canonical_form
from .poset import Poset

__all__ = ["enumerate_posets", "ideal_masks", "poset_class_count"]

# unlabeled posets on 0..8 elements, used as a generation self-check
CLASS_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045, 16999)


def ideal_masks(p: Poset) -> list[int]:
    """All lower order ideals of p as bitmasks (the empty ideal included)."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            free = ~mask & ((1 << p.n) - 1)
            while free:
                low = free & -free
                free ^= low
                x = low.bit_length() - 1
                if p.down[x] & ~mask:
                    continue
                new = mask | low
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(seen)


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def _classes(n: int, max_height: int | None) -> tuple[Poset, ...]:
    if n == 0:
        return (Poset(0, ()),)
    out: list[Poset] = []
    seen: set[bytes] = set()
    for rep in _classes(n - 1, max_height):
        if max_height == 2:
            # new maximal element over minimal elements only keeps height <= 2
            choices: Iterator[int] = _submasks(rep.minimal_mask)
        else:
            choices = iter(ideal_masks(rep))
        for down_mask in choices:
            cand = rep.add_maximal(down_mask)
            key = canonical_form(cand)
            if key not in seen:
                seen.add(key)
                out.append(cand)
    return tuple(out)


def enumerate_posets(
    n: int,
    max_height: int | None = None,
    predicate: Callable[[Poset], bool] | None = None,
) -> Iterator[Poset]:
    """One representative per isomorphism class of posets on n elements.

    ``max_height`` restricts generation (only 2 prunes; other bounds are
    post-filters). ``predicate`` filters the stream. Practical bound is
    n <= 8 for the full lattice of classes.
    """
    if max_height is not None and max_height != 2:
        from .poset import stats

        base = _classes(n, None)
        reps: Iterator[Poset] = (p for p in base if stats(p).height <= max_height)
    else:
        reps = iter(_classes(n, max_height))
    for p in reps:
        if predicate is None or predicate(p):
            yield p


def poset_class_count(n: int, max_height: int | None = None) -> int:
    return len(_classes(n, max_height))
