"""Finite pointed sets with a family of self-maps indexed by an alphabet.

States are dense indices ``0..n-1`` and every per-symbol map is stored as a
tuple ``trans[s][x] == f_s(x)``.  Witness tuples always name symbols by their
string and states by their index, so they can be replayed against ``trans``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import InvalidAlgebra, UnknownSymbol

SelfMap = tuple  # tuple[int, ...]; image[x] = u(x)


class Check(NamedTuple):
    """Outcome of a verification: truthy iff ``ok``."""

    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FiniteLSAlgebra:
    n: int
    base: int
    alphabet: tuple
    trans: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(str(s) for s in self.alphabet))
        object.__setattr__(self, "trans", tuple(tuple(int(y) for y in t) for t in self.trans))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(l) for l in self.labels))
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise InvalidAlgebra(f"state count must be a positive integer, got {n!r}")
        if not 0 <= self.base < n:
            raise InvalidAlgebra(f"base {self.base} outside [0, {n})")
        if not self.alphabet:
            raise InvalidAlgebra("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidAlgebra(f"alphabet symbols must be distinct: {self.alphabet}")
        if len(self.trans) != len(self.alphabet):
            raise InvalidAlgebra(f"{len(self.trans)} transition tables for {len(self.alphabet)} symbols")
        for sym, table in zip(self.alphabet, self.trans):
            if len(table) != n:
                raise InvalidAlgebra(f"table for {sym!r} has length {len(table)}, expected {n}")
            for x, y in enumerate(table):
                if not 0 <= y < n:
                    raise InvalidAlgebra(f"f_{sym}({x}) = {y} outside [0, {n})")
        if self.labels is not None and len(self.labels) != n:
            raise InvalidAlgebra(f"{len(self.labels)} labels for {n} states")

    @classmethod
    def from_maps(cls, maps: dict, base: int = 0, labels=None) -> "FiniteLSAlgebra":
        """Build from an ordered ``{symbol: image}`` mapping."""
        tables = list(maps.values())
        n = len(tables[0]) if tables else 0
        return cls(n, base, tuple(maps), tuple(tables), labels)

    @property
    def k(self) -> int:
        return len(self.alphabet)

    @property
    def states(self) -> range:
        return range(self.n)

    def symbol_index(self, symbol) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise UnknownSymbol(symbol) from None

    def map(self, symbol) -> SelfMap:
        return self.trans[self.symbol_index(symbol)]

    def apply(self, symbol, x: int) -> int:
        return self.trans[self.symbol_index(symbol)][x]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def with_base(self, base: int) -> "FiniteLSAlgebra":
        return FiniteLSAlgebra(self.n, base, self.alphabet, self.trans, self.labels)


@dataclass(frozen=True)
class FamilyReport:
    commutative: bool
    injective: tuple
    surjective: tuple
    unambiguous: bool
    witnesses: dict

    @property
    def bijective(self) -> tuple:
        return tuple(i and s for i, s in zip(self.injective, self.surjective))

    def to_dict(self, alphabet) -> dict:
        return {
            "commutative": self.commutative,
            "injective": dict(zip(alphabet, self.injective)),
            "surjective": dict(zip(alphabet, self.surjective)),
            "bijective": dict(zip(alphabet, self.bijective)),
            "unambiguous": self.unambiguous,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def invariant_closure(alg: FiniteLSAlgebra, seeds: Iterable[int]) -> frozenset:
    """Least f-invariant set of states containing ``seeds``."""
    seen = set()
    queue = deque()
    for x in seeds:
        if not 0 <= x < alg.n:
            raise InvalidAlgebra(f"seed {x} outside [0, {alg.n})")
        if x not in seen:
            seen.add(x)
            queue.append(x)
    while queue:
        x = queue.popleft()
        for table in alg.trans:
            y = table[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def reachable_order(alg: FiniteLSAlgebra) -> list:
    """States reachable from the base point in BFS order (symbols in alphabet order)."""
    order = [alg.base]
    seen = {alg.base}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for table in alg.trans:
            y = table[x]
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def unreached_state(alg: FiniteLSAlgebra) -> Optional[int]:
    """Smallest state not reachable from the base point, or None if minimal."""
    reached = invariant_closure(alg, [alg.base])
    for x in alg.states:
        if x not in reached:
            return x
    return None


def is_minimal(alg: FiniteLSAlgebra) -> bool:
    return len(invariant_closure(alg, [alg.base])) == alg.n


def minimal_core(alg: FiniteLSAlgebra):
    """Restrict ``alg`` to the states reachable from its base point.

    Returns ``(core, index)`` where ``index[old] = new`` for kept states and
    ``None`` for dropped ones.  Kept states keep their relative order, so a
    minimal algebra maps to itself under the identity reindexing.
    """
    kept = sorted(invariant_closure(alg, [alg.base]))
    new_of = {old: new for new, old in enumerate(kept)}
    trans = tuple(tuple(new_of[table[x]] for x in kept) for table in alg.trans)
    labels = tuple(alg.labels[x] for x in kept) if alg.labels is not None else None
    core = FiniteLSAlgebra(len(kept), new_of[alg.base], alg.alphabet, trans, labels)
    index = tuple(new_of.get(x) for x in alg.states)
    return core, index


def family_report(alg: FiniteLSAlgebra) -> FamilyReport:
    """Scan the transition tables for commutativity, injectivity, surjectivity and unambiguity.

    Every false flag carries the first violation in lexicographic scan order:

    * ``commutative``: ``(s, t, x)`` with ``f_s(f_t(x)) != f_t(f_s(x))``
    * ``injective:<s>``: ``(s, x1, x2)`` with ``x1 < x2`` and ``f_s(x1) == f_s(x2)``
    * ``surjective:<s>``: ``(s, y)`` with ``y`` outside the image of ``f_s``
    * ``unambiguous``: one of ``("not_injective", s, x1, x2)``,
      ``("overlap", s, t, x1, x2)`` with ``f_s(x1) == f_t(x2)`` and ``s < t``,
      or ``("base_in_image", s, x)`` with ``f_s(x) == base``
    """
    witnesses = {}
    names = alg.alphabet
    trans = alg.trans

    commutative = True
    for si, s in enumerate(names):
        for ti, t in enumerate(names):
            for x in alg.states:
                if trans[si][trans[ti][x]] != trans[ti][trans[si][x]]:
                    commutative = False
                    witnesses["commutative"] = (s, t, x)
                    break
            if not commutative:
                break
        if not commutative:
            break

    injective = []
    surjective = []
    for si, s in enumerate(names):
        first = {}
        inj_witness = None
        for x, y in enumerate(trans[si]):
            if y in first:
                inj_witness = (s, first[y], x)
                break
            first[y] = x
        injective.append(inj_witness is None)
        if inj_witness is not None:
            witnesses[f"injective:{s}"] = inj_witness
        image = set(trans[si])
        missing = next((y for y in alg.states if y not in image), None)
        surjective.append(missing is None)
        if missing is not None:
            witnesses[f"surjective:{s}"] = (s, missing)

    unambiguous_witness = None
    for si, s in enumerate(names):
        if not injective[si]:
            unambiguous_witness = ("not_injective",) + witnesses[f"injective:{s}"]
            break
    if unambiguous_witness is None:
        owner = {}
        for si, s in enumerate(names):
            for x, y in enumerate(trans[si]):
                if y in owner:
                    ti, x1 = owner[y]
                    unambiguous_witness = ("overlap", names[ti], s, x1, x)
                    break
                owner[y] = (si, x)
            if unambiguous_witness is not None:
                break
    if unambiguous_witness is None:
        for si, s in enumerate(names):
            if alg.base in trans[si]:
                unambiguous_witness = ("base_in_image", s, trans[si].index(alg.base))
                break
    if unambiguous_witness is not None:
        witnesses["unambiguous"] = unambiguous_witness

    return FamilyReport(
        commutative=commutative,
        injective=tuple(injective),
        surjective=tuple(surjective),
        unambiguous=unambiguous_witness is None,
        witnesses=witnesses,
    )


def replay_witness(alg: FiniteLSAlgebra, key: str, witness: Sequence) -> bool:
    """True iff ``witness`` (as stored under ``key`` in a report) is a genuine violation."""
    if key == "commutative":
        s, t, x = witness
        return alg.apply(s, alg.apply(t, x)) != alg.apply(t, alg.apply(s, x))
    if key.startswith("injective:"):
        s, x1, x2 = witness
        return x1 != x2 and alg.apply(s, x1) == alg.apply(s, x2)
    if key.startswith("surjective:"):
        s, y = witness
        return y not in alg.map(s)
    if key == "unambiguous":
        kind = witness[0]
        if kind == "not_injective":
            return replay_witness(alg, "injective:", witness[1:])
        if kind == "overlap":
            _, s, t, x1, x2 = witness
            return s != t and alg.apply(s, x1) == alg.apply(t, x2)
        if kind == "base_in_image":
            _, s, x = witness
            return alg.apply(s, x) == alg.base
    raise ValueError(f"unknown witness key {key!r}")
