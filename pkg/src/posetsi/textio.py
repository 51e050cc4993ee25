"""Line-oriented text formats: posets, extensions, tableaux, relations.

Poset files look like::

    # optional comments
    n 6
    e 0 1
    e 2 1

``n`` must precede the ``e u v`` lines; each ``e`` asserts u < v and the
transitive closure is applied on read. Writers emit cover relations only,
sorted lexicographically.
"""

from .domino import DominoTableau, make_tableau
from .errors import FormatError
from .poset import Poset, from_covers

__all__ = [
    "read_poset",
    "write_poset",
    "read_relation_pairs",
    "write_extension",
    "read_tableau",
    "write_tableau",
    "parse_family",
]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def read_poset(text: str) -> Poset:
    n = None
    pairs = []
    for lineno, tok in _content_lines(text):
        if tok[0] == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate n line")
            if len(tok) != 2 or not tok[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'n <count>'")
            n = int(tok[1])
        elif tok[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: 'e' before 'n'")
            if len(tok) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError as exc:
                raise FormatError(f"line {lineno}: non-integer endpoint") from exc
            pairs.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown directive {tok[0]!r}")
    if n is None:
        raise FormatError("missing 'n <count>' line")
    try:
        return from_covers(n, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def write_poset(p: Poset) -> str:
    lines = [f"n {p.n}"]
    lines += [f"e {u} {v}" for u, v in p.covers()]
    return "\n".join(lines) + "\n"


def read_relation_pairs(text: str) -> list[tuple[int, int]]:
    """Pairs 'u v' one per line (used for good-set extras)."""
    pairs = []
    for lineno, tok in _content_lines(text):
        if len(tok) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            pairs.append((int(tok[0]), int(tok[1])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: non-integer endpoint") from exc
    return pairs


def write_extension(labels: tuple[int, ...]) -> str:
    return " ".join(map(str, labels))


def write_tableau(t: DominoTableau) -> str:
    lines = [f"pair {b} {tp}" for b, tp in t.pairs]
    if t.singleton is not None:
        lines.append(f"single {t.singleton}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_tableau(p: Poset, text: str) -> DominoTableau:
    pairs = []
    singleton = None
    for lineno, tok in _content_lines(text):
        if tok[0] == "pair" and len(tok) == 3:
            pairs.append((int(tok[1]), int(tok[2])))
        elif tok[0] == "single" and len(tok) == 2:
            if singleton is not None:
                raise FormatError(f"line {lineno}: duplicate singleton")
            singleton = int(tok[1])
        else:
            raise FormatError(f"line {lineno}: expected 'pair b t' or 'single v'")
    return make_tableau(p, pairs, singleton)


def parse_family(spec: str) -> Poset:
    """Named families: chain:n, antichain:n, zigzag:n, grid:m:n."""
    from . import poset as families

    parts = spec.split(":")
    name = parts[0]
    try:
        args = [int(x) for x in parts[1:]]
    except ValueError as exc:
        raise FormatError(f"bad family arguments in {spec!r}") from exc
    if any(a < 0 for a in args):
        raise FormatError(f"family sizes must be nonnegative: {spec!r}")
    if name == "chain" and len(args) == 1:
        return families.chain(args[0])
    if name == "antichain" and len(args) == 1:
        return families.antichain(args[0])
    if name == "zigzag" and len(args) == 1:
        return families.zigzag(args[0])
    if name == "grid" and len(args) == 2:
        return families.grid(args[0], args[1])
    raise FormatError(f"unknown family spec {spec!r}")
