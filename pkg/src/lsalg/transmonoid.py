"""Transformation monoids generated by self-maps, evaluation at the base point, centralisers."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .algebra import FiniteLSAlgebra, SelfMap, is_minimal, unreached_state
from .errors import CapExceeded, DimensionMismatch, NotMinimal, StrategyUnavailable

DEFAULT_CAP = 1_000_000


def identity(n: int) -> SelfMap:
    return tuple(range(n))


def compose(u: Sequence[int], v: Sequence[int]) -> SelfMap:
    """``u o v``: apply ``v`` first, then ``u``."""
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot compose maps on {len(u)} and {len(v)} states")
    return tuple(u[y] for y in v)


def commute(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(u[v[x]] == v[u[x]] for x in range(len(u)))


@dataclass(frozen=True)
class TransformationMonoid:
    """A deduplicated set of self-maps with a fixed element order.

    ``generators`` holds indices into ``elements``.
    """

    n: int
    elements: tuple
    generators: tuple
    closed: bool = True
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {u: i for i, u in enumerate(self.elements)})

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, u):
        return tuple(u) in self._index

    def index(self, u) -> int:
        return self._index[tuple(u)]

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def to_json(self) -> list:
        return [list(u) for u in self.elements]


def generate_monoid(gens: Sequence[Sequence[int]], cap: int = DEFAULT_CAP) -> TransformationMonoid:
    """Close ``{id}`` under post-composition with ``gens``.

    Breadth-first: each dequeued element ``u`` yields ``g o u`` for every
    generator in order; new images are appended.  Element order is therefore
    reproducible from the generator order alone.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DimensionMismatch("generators act on different state counts")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    ident = identity(n)
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        u = queue.popleft()
        for g in gens:
            w = tuple(g[y] for y in u)
            if w not in index:
                if len(elements) >= cap:
                    raise CapExceeded(cap)
                index[w] = len(elements)
                elements.append(w)
                queue.append(w)
    generator_ids = tuple(index[g] for g in gens)
    return TransformationMonoid(n, tuple(elements), generator_ids, True)


def monoid_of(alg: FiniteLSAlgebra, cap: int = DEFAULT_CAP) -> TransformationMonoid:
    """The monoid generated by the per-symbol maps of ``alg`` (generators in alphabet order)."""
    return generate_monoid(alg.trans, cap)


def is_closed(monoid: TransformationMonoid) -> bool:
    elems = monoid.element_set()
    return identity(monoid.n) in elems and all(compose(u, v) in elems for u in monoid for v in monoid)


@dataclass(frozen=True)
class EvalReport:
    """Evaluation ``u -> u(base)`` over a monoid's elements (by element index)."""

    phi: tuple
    surjective: bool
    injective: bool
    collision: Optional[tuple] = None
    missing: Optional[int] = None
    preimage: Optional[tuple] = None

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective


def evaluate_at_base(monoid: TransformationMonoid, base: int) -> EvalReport:
    """Tabulate evaluation at ``base``.

    ``collision`` is the first pair of element indices ``(i, j)``, ``i < j``, in
    element order with equal values; ``missing`` the smallest state never hit;
    ``preimage[x]`` is the element index evaluating to ``x`` when bijective.
    """
    phi = tuple(u[base] for u in monoid.elements)
    first = {}
    collision = None
    for j, x in enumerate(phi):
        if x in first:
            if collision is None:
                collision = (first[x], j)
        else:
            first[x] = j
    missing = next((x for x in range(monoid.n) if x not in first), None)
    surjective = missing is None
    injective = collision is None
    preimage = tuple(first[x] for x in range(monoid.n)) if surjective and injective else None
    return EvalReport(phi, surjective, injective, collision, missing, preimage)


def all_self_maps(n: int):
    return product(range(n), repeat=n)


def centraliser(
    gens: Sequence[Sequence[int]],
    strategy: str = "enumerate",
    cap: int = DEFAULT_CAP,
    *,
    op=None,
    base: Optional[int] = None,
) -> TransformationMonoid:
    """All self-maps commuting with every generator (equivalently every element they generate).

    Strategies:

    ``enumerate``
        filter all ``n**n`` self-maps; refuses when that exceeds ``cap``.
    ``via-reflection-op``
        ``op`` must be the compatible operation whose left translations are
        generated by ``gens``; the result is the set of its right translations
        ``x -> x * y``, ordered by ``y``.
    ``allowable``
        for generators acting minimally from ``base``: every commuting map is
        determined by where it sends ``base``, so try each of the ``n`` targets.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise DimensionMismatch("generators act on different state counts")

    if strategy == "enumerate":
        if n ** n > cap:
            raise CapExceeded(cap, what=f"enumerating {n}^{n} self-maps")
        elements = [u for u in all_self_maps(n) if all(commute(u, g) for g in gens)]
        # identity first keeps element 0 = id as in generated monoids
        ident = identity(n)
        elements.remove(ident)
        elements.insert(0, ident)
        return TransformationMonoid(n, tuple(elements), (), True)

    if strategy == "via-reflection-op":
        if op is None:
            raise StrategyUnavailable("via-reflection-op needs a compatible monoid operation")
        if op.n != n:
            raise DimensionMismatch("operation and generators act on different state counts")
        table = op.table
        elements = [tuple(table[x][y] for x in range(n)) for y in range(n)]
        unit_pos = elements.index(identity(n))
        elements.insert(0, elements.pop(unit_pos))
        return TransformationMonoid(n, tuple(elements), (), True)

    if strategy == "allowable":
        if base is None:
            raise StrategyUnavailable("allowable strategy needs the base point")
        alg = FiniteLSAlgebra(n, base, tuple(f"g{i}" for i in range(len(gens))), tuple(gens))
        if not is_minimal(alg):
            raise StrategyUnavailable("allowable strategy needs generators acting minimally from base")
        elements = []
        for target in range(n):
            u = _commuting_map_through(gens, base, target)
            if u is not None:
                elements.append(u)
        ident = identity(n)
        elements.remove(ident)
        elements.insert(0, ident)
        return TransformationMonoid(n, tuple(elements), (), True)

    raise ValueError(f"unknown centraliser strategy {strategy!r}")


def _commuting_map_through(gens, base, target):
    # u(g(x)) = g(u(x)) forces u along every edge out of base
    n = len(gens[0])
    u = [None] * n
    u[base] = target
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for g in gens:
            y, forced = g[x], g[u[x]]
            if u[y] is None:
                u[y] = forced
                queue.append(y)
            elif u[y] != forced:
                return None
    u = tuple(u)
    if all(commute(u, g) for g in gens):
        return u
    return None


@dataclass(frozen=True)
class EquivalenceReport:
    """The five conditions characterising a monoid with a unique operation.

    ``flags[i]`` is condition ``i + 1``:

    1. a (unique) monoid operation whose translations are exactly ``M``
    2. evaluation at the base is injective on ``M``
    3. evaluation at the base is surjective on the centraliser ``Z``
    4. for the generator set ``A`` some ``A' <= Z`` has the same base values
    5. a bijection ``M -> Z`` preserving base values exists
    """

    flags: tuple
    monoid_size: int
    centraliser_size: int
    centraliser_strategy: str

    @property
    def consistent(self) -> bool:
        return len(set(self.flags)) == 1

    def to_dict(self) -> dict:
        return {
            "flags": {str(i + 1): f for i, f in enumerate(self.flags)},
            "consistent": self.consistent,
            "monoid_size": self.monoid_size,
            "centraliser_size": self.centraliser_size,
            "centraliser_strategy": self.centraliser_strategy,
        }


def equivalence_report(alg: FiniteLSAlgebra, cap: int = DEFAULT_CAP, strategy: Optional[str] = None):
    """Evaluate the five conditions independently on the monoid generated by ``alg``.

    The centraliser is enumerated when ``n**n <= cap`` unless ``strategy`` says
    otherwise, and found through base-point targets on larger inputs.
    """
    from .synthesis import synthesize, translations

    missing = unreached_state(alg)
    if missing is not None:
        raise NotMinimal(missing)
    base = alg.base
    monoid = monoid_of(alg, cap)
    if strategy is None:
        strategy = "enumerate" if alg.n ** alg.n <= cap else "allowable"
    zm = centraliser(alg.trans, strategy, cap, base=base)

    result = synthesize(alg, cap)
    cond1 = result.regular and frozenset(translations(result.op)) == monoid.element_set()

    cond2 = evaluate_at_base(monoid, base).injective
    cond3 = evaluate_at_base(zm, base).surjective

    z_values = {u[base] for u in zm}
    cond4 = all(g[base] in z_values for g in alg.trans)

    m_counts = Counter(u[base] for u in monoid)
    z_counts = Counter(u[base] for u in zm)
    cond5 = m_counts == z_counts

    return EquivalenceReport((cond1, cond2, cond3, cond4, cond5), len(monoid), len(zm), strategy)
