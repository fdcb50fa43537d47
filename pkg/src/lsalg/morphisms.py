"""Structure-preserving maps between algebras, quotients by compatible partitions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Check, FiniteLSAlgebra, unreached_state
from .errors import CriterionMismatch, DimensionMismatch, InvalidPartition, NotMinimal
from .synthesis import MonoidOp, Reflection, synthesize
from .transmonoid import DEFAULT_CAP


def _aligned_tables(src: FiniteLSAlgebra, dst: FiniteLSAlgebra):
    # pair symbols by name; both algebras must share one alphabet
    if set(src.alphabet) != set(dst.alphabet) or len(src.alphabet) != len(dst.alphabet):
        raise DimensionMismatch(f"alphabets differ: {src.alphabet} vs {dst.alphabet}")
    return [(s, src.trans[i], dst.map(s)) for i, s in enumerate(src.alphabet)]


@dataclass(frozen=True)
class MorphismSearch:
    """``map`` is the morphism when one exists; otherwise ``conflict`` explains why not.

    ``conflict`` is ``(state, assigned, forced)``: the BFS had already sent
    ``state`` to ``assigned`` when an edge forced it to ``forced``.
    """

    map: Optional[tuple]
    conflict: Optional[tuple] = None

    def __bool__(self):
        return self.map is not None


def find_morphism(src: FiniteLSAlgebra, dst: FiniteLSAlgebra) -> MorphismSearch:
    """The unique morphism from a minimal ``src`` to ``dst``, if any.

    Breadth-first from ``pi(base) = dst.base`` along ``pi(f_s(x)) = g_s(pi(x))``.
    """
    missing = unreached_state(src)
    if missing is not None:
        raise NotMinimal(missing)
    pairs = _aligned_tables(src, dst)
    pi = [None] * src.n
    pi[src.base] = dst.base
    queue = [src.base]
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for _, fs, gs in pairs:
            y, forced = fs[x], gs[pi[x]]
            if pi[y] is None:
                pi[y] = forced
                queue.append(y)
            elif pi[y] != forced:
                return MorphismSearch(None, (y, pi[y], forced))
    return MorphismSearch(tuple(pi))


def verify_morphism(src: FiniteLSAlgebra, dst: FiniteLSAlgebra, mapping: Sequence[int]) -> Check:
    """Violations: ``("base", got)`` and ``("square", s, x)`` where ``pi(f_s(x)) != g_s(pi(x))``."""
    if len(mapping) != src.n:
        raise DimensionMismatch(f"map has {len(mapping)} entries for {src.n} states")
    if any(not 0 <= y < dst.n for y in mapping):
        raise DimensionMismatch("map leaves the target state range")
    violations = []
    if mapping[src.base] != dst.base:
        violations.append(("base", mapping[src.base]))
    for s, fs, gs in _aligned_tables(src, dst):
        for x in src.states:
            if mapping[fs[x]] != gs[mapping[x]]:
                violations.append(("square", s, x))
    return Check(not violations, tuple(violations))


def is_isomorphism(src: FiniteLSAlgebra, dst: FiniteLSAlgebra, mapping: Sequence[int]) -> bool:
    """A morphism is an isomorphism exactly when it is a bijection.

    The inverse is checked as a morphism ``dst -> src``; failure there would
    contradict the bijection criterion and raises :class:`CriterionMismatch`.
    """
    if src.n != dst.n or len(set(mapping)) != src.n:
        return False
    inverse = [0] * dst.n
    for x, y in enumerate(mapping):
        inverse[y] = x
    if not verify_morphism(dst, src, inverse):
        raise CriterionMismatch("bijective morphism whose inverse is not a morphism")
    return True


def compose_maps(second: Sequence[int], first: Sequence[int]) -> tuple:
    """``second o first`` for maps between possibly different state sets."""
    return tuple(second[y] for y in first)


def normalize_partition(classes: Sequence[int], n: int) -> tuple:
    classes = tuple(int(c) for c in classes)
    if len(classes) != n:
        raise InvalidPartition(f"{len(classes)} class ids for {n} states")
    if set(classes) != set(range(len(set(classes)))):
        raise InvalidPartition(f"class ids must be dense 0..m-1, got {sorted(set(classes))}")
    return classes


@dataclass(frozen=True)
class QuotientResult:
    algebra: Optional[FiniteLSAlgebra]
    projection: Optional[tuple]
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.algebra is not None


def _compatibility_witness(maps, alphabet, classes):
    # first (s, x1, x2) with x1 ~ x2 but f_s(x1) !~ f_s(x2), x1 the first member of its class
    rep = {}
    for x, c in enumerate(classes):
        rep.setdefault(c, x)
    for s, fs in zip(alphabet, maps):
        for x, c in enumerate(classes):
            r = rep[c]
            if classes[fs[x]] != classes[fs[r]]:
                return (s, r, x)
    return None


def quotient(alg: FiniteLSAlgebra, classes: Sequence[int]) -> QuotientResult:
    """Collapse each class to one state when the partition is respected by every ``f_s``.

    Class ``c`` becomes state ``c``.  Only minimal algebras are accepted.
    """
    missing = unreached_state(alg)
    if missing is not None:
        raise NotMinimal(missing)
    classes = normalize_partition(classes, alg.n)
    witness = _compatibility_witness(alg.trans, alg.alphabet, classes)
    if witness is not None:
        return QuotientResult(None, None, witness)
    m = max(classes) + 1
    rep = {}
    for x, c in enumerate(classes):
        rep.setdefault(c, x)
    trans = tuple(tuple(classes[fs[rep[c]]] for c in range(m)) for fs in alg.trans)
    q = FiniteLSAlgebra(m, classes[alg.base], alg.alphabet, trans)
    return QuotientResult(q, classes)


def quotient_regularity(alg: FiniteLSAlgebra, refl, classes: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    """Whether the quotient is regular, decided by whether the partition also respects ``f'``.

    The answer is cross-checked by synthesizing on the quotient directly;
    disagreement raises :class:`CriterionMismatch`.
    """
    q = quotient(alg, classes)
    if not q:
        raise InvalidPartition(f"partition is not compatible with the family: {q.witness}")
    maps = refl.maps if isinstance(refl, Reflection) else refl
    by_reflection = _compatibility_witness(maps, alg.alphabet, q.projection) is None
    by_synthesis = synthesize(q.algebra, cap).regular
    if by_reflection != by_synthesis:
        raise CriterionMismatch(
            f"reflection criterion says {by_reflection}, synthesis says {by_synthesis}"
        )
    return by_reflection


def verify_monoid_homomorphism(op_src: MonoidOp, op_dst: MonoidOp, mapping: Sequence[int]) -> Check:
    """Violations: ``("unit", got)`` and ``("product", x, y)``."""
    if len(mapping) != op_src.n:
        raise DimensionMismatch(f"map has {len(mapping)} entries for {op_src.n} states")
    violations = []
    if mapping[op_src.unit] != op_dst.unit:
        violations.append(("unit", mapping[op_src.unit]))
    s, d = op_src.table, op_dst.table
    for x in range(op_src.n):
        for y in range(op_src.n):
            if mapping[s[x][y]] != d[mapping[x]][mapping[y]]:
                violations.append(("product", x, y))
    return Check(not violations, tuple(violations))
