"""Finite words as the initial algebra, folds into finite algebras, and the boundary construction.

Orientation: the family acts by *prepending*.  ``fold`` therefore consumes a
word right to left, ``fold(s + w) == f_s(fold(w))``; the reflected family
appends.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Check, FiniteLSAlgebra, is_minimal
from .errors import CriterionMismatch, InvalidBoundarySet, UnknownSymbol
from .synthesis import synthesize
from .transmonoid import DEFAULT_CAP

EMPTY = ()


def word(symbols: Iterable = ()) -> tuple:
    return tuple(symbols)


def concat(w1: Sequence, w2: Sequence) -> tuple:
    return tuple(w1) + tuple(w2)


def reverse(w: Sequence) -> tuple:
    return tuple(reversed(w))


def prepend(s, w: Sequence) -> tuple:
    return (s,) + tuple(w)


def append(s, w: Sequence) -> tuple:
    return tuple(w) + (s,)


def tail(w: Sequence) -> tuple:
    """Drop the first symbol."""
    return tuple(w[1:])


def init(w: Sequence) -> tuple:
    """Drop the last symbol."""
    return tuple(w[:-1])


def parse_word(text: str) -> tuple:
    """Whitespace-separated symbols; ``-`` alone is the empty word."""
    parts = text.split()
    if parts == ["-"]:
        return EMPTY
    if "-" in parts:
        raise ValueError(f"'-' must stand alone for the empty word: {text!r}")
    return tuple(parts)


def format_word(w: Sequence) -> str:
    return " ".join(w) if w else "-"


def compact(w: Sequence) -> str:
    """Juxtaposed form used for state labels; ``ε`` for the empty word."""
    return "".join(w) if w else "ε"


def fold(w: Sequence, alg: FiniteLSAlgebra) -> int:
    """Evaluate ``w`` with the unique morphism from words into ``alg``."""
    index = {s: i for i, s in enumerate(alg.alphabet)}
    x = alg.base
    for s in reversed(w):
        if s not in index:
            raise UnknownSymbol(s)
        x = alg.trans[index[s]][x]
    return x


def _dedupe(words):
    out = []
    seen = set()
    for w in words:
        w = tuple(w)
        if w not in seen:
            seen.add(w)
            out.append(w)
    return out


def validate_boundary_set(words: Iterable[Sequence]) -> Check:
    """The complement of ``A`` is invariant under prepending iff ``A`` contains
    the empty word and is closed under :func:`tail`.

    Violations: ``("missing_empty",)`` and ``("tail_not_in_set", w)``.
    """
    a = _dedupe(words)
    members = set(a)
    violations = []
    if EMPTY not in members:
        violations.append(("missing_empty",))
    for w in a:
        if w and tail(w) not in members:
            violations.append(("tail_not_in_set", w))
    return Check(not violations, tuple(violations))


def _word_key(alphabet):
    rank = {s: i for i, s in enumerate(alphabet)}
    return lambda w: (len(w), [rank[s] for s in w])


@dataclass(frozen=True)
class BoundaryAlgebra:
    """``A`` plus its boundary, with each boundary word frozen under every symbol.

    ``words[x]`` is the word for state ``x``; ``in_boundary[x]`` marks boundary states.
    """

    algebra: FiniteLSAlgebra
    words: tuple
    in_boundary: tuple
    core: tuple

    def state_of(self, w: Sequence) -> int:
        return self.words.index(tuple(w))

    def project(self, w: Sequence) -> tuple:
        """Image of ``w`` under the unique morphism onto this algebra."""
        return self.words[fold(w, self.algebra)]


def boundary_algebra(words: Iterable[Sequence], alphabet: Sequence) -> BoundaryAlgebra:
    """Build the finite algebra on ``A`` and its boundary ``{s + w : w in A} \\ A``.

    States are ``A`` in input order followed by the boundary sorted by
    ``(length, symbol ranks)``.
    """
    alphabet = tuple(alphabet)
    a = _dedupe(words)
    check = validate_boundary_set(a)
    if not check:
        raise InvalidBoundarySet(check.violations)
    for w in a:
        for s in w:
            if s not in alphabet:
                raise UnknownSymbol(s)
    members = set(a)
    boundary = sorted(
        {prepend(s, w) for w in a for s in alphabet} - members, key=_word_key(alphabet)
    )
    states = a + boundary
    index = {w: i for i, w in enumerate(states)}
    core_size = len(a)
    trans = tuple(
        tuple(index[prepend(s, w)] if i < core_size else i for i, w in enumerate(states))
        for s in alphabet
    )
    alg = FiniteLSAlgebra(
        len(states), index[EMPTY], alphabet, trans, tuple(compact(w) for w in states)
    )
    if not is_minimal(alg):
        raise CriterionMismatch("boundary algebra is not minimal")
    return BoundaryAlgebra(
        alg, tuple(states), tuple(i >= core_size for i in range(len(states))), tuple(a)
    )


def boundary_regular_by_theorem(words: Iterable[Sequence]) -> bool:
    """Regular iff ``A`` is also closed under :func:`init`, i.e. the complement is append-invariant."""
    a = _dedupe(words)
    check = validate_boundary_set(a)
    if not check:
        raise InvalidBoundarySet(check.violations)
    members = set(a)
    return all(init(w) in members for w in a if w)


@dataclass(frozen=True)
class BoundaryReport:
    by_theorem: bool
    by_synthesis: bool
    boundary: BoundaryAlgebra

    @property
    def agree(self) -> bool:
        return self.by_theorem == self.by_synthesis


def check_boundary(words: Iterable[Sequence], alphabet: Sequence, cap: int = DEFAULT_CAP) -> BoundaryReport:
    """Decide regularity of the boundary algebra both by the closure criterion and by synthesis."""
    a = _dedupe(words)
    ba = boundary_algebra(a, alphabet)
    return BoundaryReport(boundary_regular_by_theorem(a), synthesize(ba.algebra, cap).regular, ba)


def project(w: Sequence, words: Iterable[Sequence], alphabet: Sequence) -> tuple:
    return boundary_algebra(words, alphabet).project(w)
