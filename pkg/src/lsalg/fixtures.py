"""Canonical small algebras and exhaustive enumerators used by tests and the CLI."""

from __future__ import annotations

from itertools import product

from .algebra import FiniteLSAlgebra


def cycle(n: int, symbol: str = "s") -> FiniteLSAlgebra:
    """Successor modulo ``n`` based at 0."""
    return FiniteLSAlgebra(n, 0, (symbol,), (tuple((x + 1) % n for x in range(n)),))


def lollipop(tail: int, loop: int, symbol: str = "s") -> FiniteLSAlgebra:
    """A path of ``tail`` states feeding into a cycle of ``loop`` states.

    States ``0..tail-1`` form the stick, ``tail..tail+loop-1`` the cycle, and the
    last cycle state returns to ``tail``.  ``lollipop(2, 2)`` is LOLLI.
    """
    n = tail + loop
    image = [x + 1 for x in range(n)]
    image[-1] = tail
    return FiniteLSAlgebra(n, 0, (symbol,), (tuple(image),))


def shift_register(alphabet=("a", "b"), length: int = 2, base=None) -> FiniteLSAlgebra:
    """Length-``length`` words where ``f_s`` pushes ``s`` on the left and drops the last letter.

    States are enumerated in lexicographic order of ``alphabet``; the base point
    defaults to the word repeating the first symbol.
    """
    alphabet = tuple(alphabet)
    words = list(product(alphabet, repeat=length))
    index = {w: i for i, w in enumerate(words)}
    trans = tuple(tuple(index[(s,) + w[:-1]] for w in words) for s in alphabet)
    base_idx = 0 if base is None else index[tuple(base)]
    return FiniteLSAlgebra(len(words), base_idx, alphabet, trans, tuple("".join(w) for w in words))


def monoid_algebra(table, unit: int = 0, generators=None, names=None) -> FiniteLSAlgebra:
    """The left action of a monoid on itself: ``f_a(b) = a * b`` for ``a`` in ``generators``."""
    n = len(table)
    if names is None:
        names = [str(x) for x in range(n)]
    gens = range(n) if generators is None else generators
    alphabet = tuple(names[a] for a in gens)
    trans = tuple(tuple(table[a][b] for b in range(n)) for a in gens)
    return FiniteLSAlgebra(n, unit, alphabet, trans, tuple(names))


def flip(alphabet=("a", "b")) -> FiniteLSAlgebra:
    """Two states where every symbol swaps them: folding a word computes its length parity."""
    return FiniteLSAlgebra(2, 0, tuple(alphabet), tuple((1, 0) for _ in alphabet))


def cyclic_group_table(n: int) -> tuple:
    return tuple(tuple((x + y) % n for y in range(n)) for x in range(n))


def klein_four_table() -> tuple:
    return tuple(tuple(x ^ y for y in range(4)) for x in range(4))


def semilattice_with_unit_table() -> tuple:
    # {e, z} with z * z = z
    return ((0, 1), (1, 1))


def monoid_tables() -> dict:
    """Monoid tables of order at most 4, unit at index 0."""
    tables = {f"Z{n}": cyclic_group_table(n) for n in range(1, 5)}
    tables["semilattice2"] = semilattice_with_unit_table()
    tables["Z2xZ2"] = klein_four_table()
    return tables


C3 = cycle(3)
LOLLI = lollipop(2, 2)
SHIFT2 = shift_register(("a", "b"), 2)
MON2 = monoid_algebra(cyclic_group_table(2), names=("e", "g"))


def enumerate_algebras(n: int, k: int, base: int = 0, alphabet=None):
    """Yield every algebra with ``n`` states and ``k`` symbols at the given base point."""
    if alphabet is None:
        alphabet = tuple("abcdefghijklmnopqrstuvwxyz"[:k])
    maps = list(product(range(n), repeat=n))
    for tables in product(maps, repeat=k):
        yield FiniteLSAlgebra(n, base, alphabet, tables)
