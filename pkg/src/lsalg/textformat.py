"""Line-oriented text formats for algebras, partitions and boundary sets.

Algebra files::

    # comment
    states: 3
    base: 0
    alphabet: s
    trans s: 1 2 0

An optional ``classes: <id0> ... <id(n-1)>`` line attaches a partition.
"""

from __future__ import annotations

from .algebra import FiniteLSAlgebra
from .errors import InvalidAlgebra, ParseError
from .words import format_word, parse_word


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(text: str, lineno: int, what: str) -> list:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ParseError(f"{what}: expected integers, got {text.strip()!r}", lineno) from None


def parse_document(text: str):
    """Parse an algebra file; returns ``(algebra, classes)`` where ``classes`` may be None."""
    seen = {}
    trans = {}
    trans_lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected '<directive>: <values>', got {line!r}", lineno)
        key, value = (part.strip() for part in line.split(":", 1))
        if key.startswith("trans"):
            parts = key.split()
            if parts[0] != "trans" or len(parts) != 2:
                raise ParseError(f"malformed trans directive {key!r}", lineno)
            sym = parts[1]
            if sym in trans:
                raise ParseError(f"duplicate trans line for symbol {sym!r}", lineno)
            trans[sym] = _ints(value, lineno, f"trans {sym}")
            trans_lines[sym] = lineno
            continue
        if key not in ("states", "base", "alphabet", "classes"):
            raise ParseError(f"unknown directive {key!r}", lineno)
        if key in seen:
            raise ParseError(f"duplicate {key!r} directive", lineno)
        seen[key] = (value, lineno)

    for key in ("states", "base", "alphabet"):
        if key not in seen:
            raise ParseError(f"missing {key!r} directive")
    n_vals = _ints(*seen["states"], "states")
    if len(n_vals) != 1 or n_vals[0] < 1:
        raise ParseError("states must be a single positive integer", seen["states"][1])
    n = n_vals[0]
    base_vals = _ints(*seen["base"], "base")
    if len(base_vals) != 1:
        raise ParseError("base must be a single integer", seen["base"][1])
    alphabet = seen["alphabet"][0].split()
    if not alphabet:
        raise ParseError("alphabet must list at least one symbol", seen["alphabet"][1])
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("alphabet symbols must be distinct", seen["alphabet"][1])
    for sym in trans:
        if sym not in alphabet:
            raise ParseError(f"trans line for symbol {sym!r} not in alphabet", trans_lines[sym])
    tables = []
    for sym in alphabet:
        if sym not in trans:
            raise ParseError(f"missing trans line for symbol {sym!r}")
        row = trans[sym]
        if len(row) != n:
            raise ParseError(f"trans {sym}: {len(row)} entries, expected {n}", trans_lines[sym])
        bad = [y for y in row if not 0 <= y < n]
        if bad:
            raise ParseError(f"trans {sym}: state {bad[0]} outside [0, {n})", trans_lines[sym])
        tables.append(row)
    try:
        alg = FiniteLSAlgebra(n, base_vals[0], tuple(alphabet), tuple(tables))
    except InvalidAlgebra as exc:
        raise ParseError(str(exc), seen["base"][1]) from None

    classes = None
    if "classes" in seen:
        classes = tuple(_ints(*seen["classes"], "classes"))
        if len(classes) != n:
            raise ParseError(f"classes: {len(classes)} ids, expected {n}", seen["classes"][1])
    return alg, classes


def parse_algebra(text: str) -> FiniteLSAlgebra:
    return parse_document(text)[0]


def parse_partition(text: str) -> tuple:
    """A file holding just a ``classes:`` line (comments allowed)."""
    found = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        key, _, value = line.partition(":")
        if key.strip() != "classes":
            raise ParseError(f"expected 'classes: ...', got {line!r}", lineno)
        if found is not None:
            raise ParseError("duplicate 'classes' directive", lineno)
        found = tuple(_ints(value, lineno, "classes"))
    if found is None:
        raise ParseError("missing 'classes' directive")
    return found


def dump_algebra(alg: FiniteLSAlgebra, classes=None) -> str:
    lines = [
        f"states: {alg.n}",
        f"base: {alg.base}",
        "alphabet: " + " ".join(alg.alphabet),
    ]
    for sym, table in zip(alg.alphabet, alg.trans):
        lines.append(f"trans {sym}: " + " ".join(str(y) for y in table))
    if classes is not None:
        lines.append("classes: " + " ".join(str(c) for c in classes))
    return "\n".join(lines) + "\n"


def parse_boundary_set(text: str) -> list:
    """One word per line (whitespace-separated symbols); the first line must be ``-``."""
    words = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        try:
            w = parse_word(line)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if first and w != ():
            raise ParseError("first word of a boundary set must be '-'", lineno)
        first = False
        words.append(w)
    if first:
        raise ParseError("empty boundary set file")
    return words


def dump_boundary_set(words) -> str:
    return "\n".join(format_word(w) for w in words) + "\n"
