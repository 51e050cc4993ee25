"""Acceptance suite: every desk-scale numerical claim as a pass/fail check.

Each criterion is a function returning a :class:`CriterionResult`; the CLI
``verify-all`` subcommand runs them in order and exits nonzero if any
fails. Worked-example posets are constructed here exactly as drawn in
their figures (two of them differ by a single edge and must not be
conflated).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice

from . import domino, h2, linext, ruskey
from .canon import is_isomorphic
from .errors import PosetsiError
from .euler import check_congruence, euler_numbers, primes_never_dividing
from .generate import enumerate_posets
from .linext import (
    count_extensions,
    count_mod,
    enumerate_extensions,
    phi,
    sign,
    signed_count,
)
from .poset import Poset, from_covers, grid, zigzag

__all__ = ["CriterionResult", "run_all", "CRITERIA", "fixtures"]


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    details: list[str] = field(default_factory=list)
    known_defect: bool = False

    @property
    def status(self) -> str:
        if self.ok:
            return "PASS"
        return "FAIL (known spec defect)" if self.known_defect else "FAIL"


def fixtures() -> dict[str, Poset]:
    """Worked-example posets, keyed by what they demonstrate."""
    return {
        # fence on six elements: e = 61, si = 1
        "zigzag6": zigzag(6),
        # four-cover variant used in the label-swap figures; NOT the fence:
        # quotient of its unique tableau is a 2-chain plus an isolated part
        "swap_figure": from_covers(6, [(0, 1), (2, 1), (2, 3), (4, 5)]),
        # two bottoms under two shared tops plus one extra pair: Hasse has
        # a perfect matching but no domino tableau
        "no_tableau": from_covers(6, [(0, 3), (1, 3), (0, 4), (1, 4), (2, 5)]),
        # Hasse diagram is an eight-cycle with exactly two matchings
        "eight_cycle": from_covers(
            8, [(1, 0), (7, 0), (2, 1), (3, 2), (3, 4), (4, 5), (6, 5), (6, 7)]
        ),
        # the three height-2 posets on six vertices with odd e
        "six_odd_75": from_covers(6, [(0, 3), (0, 4), (1, 4), (2, 5)]),
        "six_odd_61": from_covers(6, [(0, 3), (1, 4), (2, 5), (0, 4), (1, 5)]),
        "six_odd_57": from_covers(
            6, [(0, 3), (1, 4), (2, 5), (0, 4), (1, 5), (0, 5)]
        ),
    }


def _brute_si(p: Poset) -> tuple[int, int]:
    """(count, |signed sum|) straight from the enumerated extensions."""
    total = 0
    acc = 0
    for lab in enumerate_extensions(p):
        total += 1
        acc += sign(p, lab)
    return total, abs(acc)


def _pmap(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=64))


def criterion_1(threads: int = 1) -> CriterionResult:
    sc = signed_count(zigzag(6))
    ok = sc.total == 61 and sc.imbalance == 1
    return CriterionResult(
        1,
        "six-element fence: e = 61 and si = 1",
        ok,
        [f"e = {sc.total} (want 61), si = {sc.imbalance} (want 1)"],
    )


def criterion_2(threads: int = 1) -> CriterionResult:
    p = fixtures()["eight_cycle"]
    tabs = domino.enumerate_tableaux(p)
    details = [f"tableaux found: {len(tabs)} (want 2)"]
    ok = len(tabs) == 2
    if ok:
        counts = sorted(
            count_extensions(domino.quotient(p, t)) for t in tabs
        )
        signs = sorted(domino.tableau_sign(p, t) for t in tabs)
        si_q = domino.si_via_quotients(p)
        si_dp = signed_count(p).imbalance
        details += [
            f"quotient extension counts: {counts} (want [2, 4])",
            f"tableau signs: {signs} (want [-1, 1])",
            f"si: quotient route {si_q}, signed DP {si_dp} (want 2)",
        ]
        ok = counts == [2, 4] and signs == [-1, 1] and si_q == si_dp == 2
    return CriterionResult(
        2, "eight-cycle: two tableaux, quotient counts {4, 2}, si = 2", ok, details
    )


def _c3_worker(p: Poset) -> bool:
    total, brute = _brute_si(p)
    sc = signed_count(p)
    return (
        total == sc.total
        and brute == sc.imbalance == domino.si_via_quotients(p)
    )


def criterion_3(threads: int = 1) -> CriterionResult:
    classes = [p for n in range(8) for p in enumerate_posets(n)]
    oks = _pmap(_c3_worker, classes, threads)
    bad = oks.count(False)
    return CriterionResult(
        3,
        "oracle equivalence on all classes with n <= 7: "
        "brute = signed DP = quotient route",
        bad == 0,
        [f"{len(classes)} classes checked, {bad} mismatches"],
    )


def _c4_worker(p: Poset) -> bool:
    fixed = []
    for lab in enumerate_extensions(p):
        image = phi(p, lab)
        if phi(p, image) != lab:
            return False
        if image == lab:
            fixed.append(lab)
        elif sign(p, image) != -sign(p, lab):
            return False
    adapted = set()
    for t in domino.enumerate_tableaux(p):
        for lab in enumerate_extensions(p):
            if _is_adapted_to(p, lab, t):
                adapted.add(lab)
    return set(fixed) == adapted


def _is_adapted_to(p: Poset, labels, t) -> bool:
    for bot, top in t.pairs:
        if labels[top] != labels[bot] + 1 or labels[bot] % 2 == 0:
            return False
    if t.singleton is not None and labels[t.singleton] != p.n:
        return False
    return True


def criterion_4(threads: int = 1) -> CriterionResult:
    classes = [p for n in range(7) for p in enumerate_posets(n)]
    oks = _pmap(_c4_worker, classes, threads)
    bad = oks.count(False)
    return CriterionResult(
        4,
        "involution suite on all classes with n <= 6: order two, "
        "sign-reversing, fixed points = adapted extensions",
        bad == 0,
        [f"{len(classes)} classes checked, {bad} violations"],
    )


def criterion_5(threads: int = 1) -> CriterionResult:
    checked = 0
    bad = 0
    for n in range(5):
        for p in enumerate_posets(n):
            e = count_extensions(p)
            for rel in h2.enumerate_good_sets(p):
                lifted = h2.build_lift(p, rel)
                checked += 1
                if signed_count(lifted).imbalance != e:
                    bad += 1
                    continue
                dec = h2.decompose(lifted)
                if dec.kind != "lift" or not is_isomorphic(dec.base, p):
                    bad += 1
                    continue
                if not is_isomorphic(h2.build_lift(dec.base, dec.rel), lifted):
                    bad += 1
    return CriterionResult(
        5,
        "main lemma: si(lift(P, R)) = e(P) for all |P| <= 4 and good R, "
        "with decompose round-trip",
        bad == 0,
        [f"{checked} (P, R) pairs checked, {bad} mismatches"],
    )


def criterion_6(threads: int = 1) -> CriterionResult:
    details = []
    ok = True
    try:
        f6 = h2.count_f(6)
        f7 = h2.count_f(7)
        f8 = h2.count_f(8)
    except PosetsiError as exc:
        return CriterionResult(6, "odd-count census", False, [str(exc)])
    details.append(f"f(6) = {f6['formula']}/{f6['direct']} (want 3/3)")
    details.append(f"f(7) = {f7['formula']}/{f7['direct']} (want 3/3)")
    details.append(
        f"f(8) = {f8['formula']}/{f8['direct']} (want agreement, 8 < f(8) < 64)"
    )
    ok = (
        f6["formula"] == f6["direct"] == 3
        and f7["formula"] == f7["direct"] == 3
        and f8["formula"] == f8["direct"]
        and 8 < f8["formula"] < 64
    )
    return CriterionResult(
        6, "odd-count census: f(6) = f(7) = 3, f(8) within strict bounds", ok, details
    )


def criterion_7(threads: int = 1) -> CriterionResult:
    details = []
    ok = True
    try:
        r2 = h2.odd_e_bounds(2)
        r3 = h2.odd_e_bounds(3)
    except PosetsiError as exc:
        return CriterionResult(7, "odd-e bounds", False, [str(exc)])
    details.append(
        f"4 vertices: odd e values {r2['odd_e_values']} within "
        f"[{r2['lower']}, {r2['upper']}]"
    )
    details.append(
        f"6 vertices: odd e values {r3['odd_e_values']} within "
        f"[{r3['lower']}, {r3['upper']}] (want exactly [57, 61, 75])"
    )
    ok = r3["odd_e_values"] == [57, 61, 75]
    return CriterionResult(
        7,
        "factorial bounds on odd extension counts; six-vertex odd set is "
        "{57, 61, 75}",
        ok,
        details,
    )


def criterion_8(threads: int = 1) -> CriterionResult:
    bad = []
    total = 0
    for p in enumerate_posets(5, max_height=2):
        e = count_extensions(p)
        if e % 2 == 1:
            total += 1
            if e % 5 != 0:
                bad.append(e)
    return CriterionResult(
        8,
        "every five-vertex height-2 class with odd e has e divisible by 5",
        not bad,
        [f"odd-e classes: {total}, violations: {bad}"],
    )


def _counting_at_least_k(log: list[tuple[int, int]]):
    def wrapped(p: Poset, k: int) -> bool:
        if k <= 0:
            log.append((0, k))
            return True
        hits = sum(1 for _ in islice(linext._extension_orders(p), k))
        log.append((hits, k))
        return hits >= k

    return wrapped


def criterion_9(threads: int = 1) -> CriterionResult:
    log: list[tuple[int, int]] = []
    original = h2.at_least_k
    h2.at_least_k = _counting_at_least_k(log)
    bad = 0
    checked = 0
    try:
        for n in range(9):
            for p in enumerate_posets(n, max_height=2):
                si = signed_count(p).imbalance
                for k in range(9):
                    checked += 1
                    if h2.h2sb_decide(p, k) != (si >= k):
                        bad += 1
    finally:
        h2.at_least_k = original
    overshoot = sum(1 for hits, k in log if hits > k)
    return CriterionResult(
        9,
        "height-2 decider matches brute si >= k for n <= 8, k <= 8, "
        "enumerating at most k quotient extensions",
        bad == 0 and overshoot == 0,
        [
            f"{checked} (poset, k) decisions, {bad} disagreements",
            f"calls enumerating more than their k: {overshoot}",
        ],
    )


def criterion_10(threads: int = 1) -> CriterionResult:
    bad = 0
    hits_r = hits_s = 0
    for n in range(8):
        for p in enumerate_posets(n):
            r, s = linext.ruskey_criterion(p), linext.stanley_criterion(p)
            if not (r or s):
                continue
            hits_r += r
            hits_s += s
            if signed_count(p).imbalance != 0:
                bad += 1
    grid_bad = []
    for m in range(2, 5):
        for n in range(2, 5):
            balanced = signed_count(grid(m, n)).imbalance == 0
            if balanced != (m % 2 == n % 2):
                grid_bad.append((m, n))
    return CriterionResult(
        10,
        "classical balance criteria imply si = 0 (n <= 7); grid balance "
        "iff equal side parity (2..4)",
        bad == 0 and not grid_bad,
        [
            f"two-below criterion hits: {hits_r}, chain-parity hits: {hits_s}, "
            f"violations: {bad}",
            f"grid parity violations: {grid_bad}",
        ],
    )


def _c11_worker(p: Poset) -> tuple[bool, bool]:
    g = ruskey.build_graph(p, adjacent_only=True)
    plus, minus = ruskey.part_sizes(g)
    si = signed_count(p).imbalance
    bipartite = all(g.signs[a] != g.signs[b] for a, b in g.edges)
    return ruskey.is_connected(g), bipartite and abs(plus - minus) == si


def criterion_11(threads: int = 1) -> CriterionResult:
    classes6 = [p for n in range(7) for p in enumerate_posets(n)]
    results = _pmap(_c11_worker, classes6, threads)
    disconnected = sum(1 for c, _ in results if not c)
    badparts = sum(1 for _, okp in results if not okp)
    inconsistent = 0
    path_si_violations = 0
    for n in range(6):
        for p in enumerate_posets(n):
            rep = ruskey.ruskey_report(p)
            if rep["path_found"] and rep["si"] > 1:
                path_si_violations += 1
            if not rep["consistent_with_conjecture"]:
                inconsistent += 1
    return CriterionResult(
        11,
        "graph properties: adjacent-mode connectivity (n <= 6), sign "
        "bipartition gap = si, path sweep consistent (n <= 5)",
        disconnected == 0
        and badparts == 0
        and inconsistent == 0
        and path_si_violations == 0,
        [
            f"{len(classes6)} graphs built; disconnected: {disconnected}, "
            f"bipartition mismatches: {badparts}",
            f"path sweep: {inconsistent} conjecture inconsistencies, "
            f"{path_si_violations} paths with si > 1",
        ],
    )


def _c12_worker(p: Poset) -> bool:
    for q in (2, 3, 5):
        if count_mod(p, q) != 0 and not domino.exists_q_adapted(p, q):
            return False
    return True


def criterion_12(threads: int = 1) -> CriterionResult:
    classes = [p for n in range(7) for p in enumerate_posets(n)]
    oks = _pmap(_c12_worker, classes, threads)
    bad = oks.count(False)
    return CriterionResult(
        12,
        "block-adapted extensions exist whenever q does not divide e "
        "(n <= 6, q in {2, 3, 5})",
        bad == 0,
        [f"{len(classes)} classes checked, {bad} violations"],
    )


# the prime list up to 600 obtained from the Euler table itself
NEVER_DIVIDING_600 = [
    3, 7, 11, 23, 83, 107, 163, 167, 179, 191, 199, 211, 227, 239,
    367, 383, 443, 479, 487, 503, 599,
]


def criterion_13(threads: int = 1) -> CriterionResult:
    details = []
    table = euler_numbers(12)
    table_ok = all(
        table[n - 1] == count_extensions(zigzag(n)) for n in range(1, 13)
    )
    details.append(f"table vs fence counts (n <= 12): {'PASS' if table_ok else 'FAIL'}")

    odd_ok = all(
        check_congruence(n, q)
        for q in (3, 5, 7, 11)
        for n in range(q + 1, 31)
    )
    details.append(
        f"congruence for q in {{3, 5, 7, 11}}, n <= 30: "
        f"{'PASS' if odd_ok else 'FAIL'}"
    )

    q2_failures = [n for n in range(3, 31) if not check_congruence(n, 2)]
    q2_ok = not q2_failures
    details.append(
        f"congruence for q = 2, n <= 30: "
        f"{'PASS' if q2_ok else f'FAIL at every n in {q2_failures[0]}..30'} "
        "(Euler parities alternate from n = 3 on, so "
        "E_n = E_2 * E_(n-1) mod 2 is arithmetically impossible; "
        "kept as stated and expected to fail)"
    )

    primes = primes_never_dividing(600)
    primes_ok = primes == NEVER_DIVIDING_600
    details.append(
        f"never-dividing primes up to 600: {'PASS' if primes_ok else 'FAIL'} "
        f"({len(primes)} primes, ending {primes[-1] if primes else None})"
    )
    return CriterionResult(
        13,
        "Euler suite: table identity, congruence grid, never-dividing primes",
        table_ok and odd_ok and q2_ok and primes_ok,
        details,
        known_defect=table_ok and odd_ok and primes_ok and not q2_ok,
    )


def criterion_14(threads: int = 1) -> CriterionResult:
    return CriterionResult(
        14,
        "declared not desk-reproducible",
        True,
        [
            "asymptotic census growth rates, the logarithmic-size witness "
            "construction, and the full 13-digit non-realizability "
            "computation are out of desk scale; criteria 6-8 cover their "
            "bounded analogues",
        ],
    )


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
    criterion_13,
    criterion_14,
]


def run_all(threads: int = 1) -> list[CriterionResult]:
    return [c(threads=threads) for c in CRITERIA]
