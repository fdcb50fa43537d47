"""Deciding, building and checking the monoid operation that turns every f_s into a left translation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

import numpy as np

from .algebra import Check, FiniteLSAlgebra, family_report, is_minimal, unreached_state
from .errors import (
    BoundExceeded,
    CriterionMismatch,
    DimensionMismatch,
    IncompatibleOp,
    InconsistentAllowable,
    NotMinimal,
)
from .transmonoid import (
    DEFAULT_CAP,
    EvalReport,
    TransformationMonoid,
    compose,
    evaluate_at_base,
    identity,
    monoid_of,
)

ORACLE_BOUND = 4
REFLECTION_ORACLE_BOUND = (3, 2)

NOT_MINIMAL = "not_minimal"
PHI_NOT_INJECTIVE = "phi_not_injective"


@dataclass(frozen=True)
class MonoidOp:
    """Operation table ``table[x][y] = x * y`` with ``unit`` as intended identity.

    Only the shape is validated here; the monoid laws are checked by
    :func:`verify_compatible` so that broken tables can still be represented.
    """

    n: int
    unit: int
    table: tuple

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.n or any(len(row) != self.n for row in table):
            raise DimensionMismatch(f"operation table must be {self.n}x{self.n}")
        if not 0 <= self.unit < self.n:
            raise DimensionMismatch(f"unit {self.unit} outside [0, {self.n})")
        for row in table:
            for v in row:
                if not 0 <= v < self.n:
                    raise DimensionMismatch(f"table entry {v} outside [0, {self.n})")

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    def to_json(self) -> dict:
        return {"n": self.n, "unit": self.unit, "table": [list(r) for r in self.table]}

    def render(self, labels=None) -> str:
        """Aligned text table with row ``x`` and column ``y`` holding ``x * y``."""
        names = [str(x) for x in range(self.n)] if labels is None else [str(l) for l in labels]
        width = max(len(s) for s in names + ["*"])
        head = " " * width + " | " + " ".join(s.rjust(width) for s in names)
        lines = [head, "-" * len(head)]
        for x, row in enumerate(self.table):
            lines.append(names[x].rjust(width) + " | " + " ".join(names[v].rjust(width) for v in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class Reflection:
    """Per-symbol maps ``maps[s][x] = f'_s(x)``, in the paired algebra's alphabet order."""

    maps: tuple

    def __post_init__(self):
        object.__setattr__(self, "maps", tuple(tuple(int(v) for v in m) for m in self.maps))

    def __getitem__(self, s):
        return self.maps[s]

    def __len__(self):
        return len(self.maps)

    def as_algebra(self, alg: FiniteLSAlgebra) -> FiniteLSAlgebra:
        """The reflected algebra ``(X, f', x0)``."""
        return FiniteLSAlgebra(alg.n, alg.base, alg.alphabet, self.maps, alg.labels)


@dataclass(frozen=True)
class SynthesisResult:
    """Either a regular outcome (``op`` etc. set) or a ``reason`` with a replayable ``witness``.

    ``witness`` is the smallest unreached state for ``not_minimal`` and a pair of
    distinct monoid elements with the same base value for ``phi_not_injective``.
    """

    op: Optional[MonoidOp] = None
    reflection: Optional[Reflection] = None
    monoid: Optional[TransformationMonoid] = None
    evaluation: Optional[EvalReport] = None
    reason: Optional[str] = None
    witness: object = None

    @property
    def regular(self) -> bool:
        return self.op is not None


def translations(op: MonoidOp) -> list:
    """Left translations ``y -> x * y`` for each ``x`` in state order."""
    return [row for row in op.table]


def synthesize(alg: FiniteLSAlgebra, cap: int = DEFAULT_CAP) -> SynthesisResult:
    """Build the compatible operation from the generated monoid, if evaluation at the base is bijective.

    ``x1 * x2 = u(x2)`` where ``u`` is the unique monoid element sending the base to ``x1``.
    """
    missing = unreached_state(alg)
    if missing is not None:
        return SynthesisResult(reason=NOT_MINIMAL, witness=missing)
    monoid = monoid_of(alg, cap)
    ev = evaluate_at_base(monoid, alg.base)
    if not ev.injective:
        i, j = ev.collision
        return SynthesisResult(
            monoid=monoid, evaluation=ev, reason=PHI_NOT_INJECTIVE,
            witness=(monoid.elements[i], monoid.elements[j]),
        )
    table = tuple(monoid.elements[ev.preimage[x]] for x in alg.states)
    op = MonoidOp(alg.n, alg.base, table)
    refl = Reflection(tuple(tuple(table[x][fs[alg.base]] for x in alg.states) for fs in alg.trans))
    return SynthesisResult(op=op, reflection=refl, monoid=monoid, evaluation=ev)


def verify_compatible(alg: FiniteLSAlgebra, op: MonoidOp) -> Check:
    """Unit laws, associativity and ``f_s(x1) * x2 == f_s(x1 * x2)``; every failure is listed.

    Violations: ``("unit_left", y)``, ``("unit_right", x)``, ``("assoc", x, y, z)``,
    ``("compat", s, x1, x2)``, in that order, each in lexicographic scan order.
    """
    if op.n != alg.n:
        raise DimensionMismatch(f"operation on {op.n} states, algebra on {alg.n}")
    t = op.table
    n = alg.n
    u = alg.base
    violations = []
    violations += [("unit_left", y) for y in range(n) if t[u][y] != y]
    violations += [("unit_right", x) for x in range(n) if t[x][u] != x]
    if op.unit != u:
        violations.append(("unit_not_base", op.unit))
    for x in range(n):
        tx = t[x]
        for y in range(n):
            xy = tx[y]
            ty = t[y]
            for z in range(n):
                if t[xy][z] != tx[ty[z]]:
                    violations.append(("assoc", x, y, z))
    for s, fs in zip(alg.alphabet, alg.trans):
        for x1 in range(n):
            for x2 in range(n):
                if t[fs[x1]][x2] != fs[t[x1][x2]]:
                    violations.append(("compat", s, x1, x2))
    return Check(not violations, tuple(violations))


def derive_reflection(alg: FiniteLSAlgebra, op: MonoidOp) -> Reflection:
    """``f'_s(x) = x * f_s(base)``."""
    if not verify_compatible(alg, op):
        raise IncompatibleOp("operation is not compatible with the algebra")
    t = op.table
    return Reflection(tuple(tuple(t[x][fs[alg.base]] for x in alg.states) for fs in alg.trans))


def verify_reflection(alg: FiniteLSAlgebra, refl) -> Check:
    """Base agreement and commutation with every ``f_t``.

    Violations: ``("base", s)`` and ``("commute", s, t, x)`` where
    ``f'_s(f_t(x)) != f_t(f'_s(x))``.
    """
    maps = refl.maps if isinstance(refl, Reflection) else tuple(tuple(m) for m in refl)
    if len(maps) != alg.k or any(len(m) != alg.n for m in maps):
        raise DimensionMismatch("reflection shape does not match the algebra")
    violations = []
    b = alg.base
    for s, fs, gs in zip(alg.alphabet, alg.trans, maps):
        if gs[b] != fs[b]:
            violations.append(("base", s))
    for s, gs in zip(alg.alphabet, maps):
        for t, ft in zip(alg.alphabet, alg.trans):
            for x in alg.states:
                if gs[ft[x]] != ft[gs[x]]:
                    violations.append(("commute", s, t, x))
    return Check(not violations, tuple(violations))


def allowable_maps(alg: FiniteLSAlgebra, refl) -> tuple:
    """For each state ``x`` the unique map sending the base to ``x`` and commuting with every ``f_s``.

    Built breadth-first from ``rho_base = id`` via ``rho_{f_s(x)} = rho_x o f'_s``.
    """
    missing = unreached_state(alg)
    if missing is not None:
        raise NotMinimal(missing)
    maps = refl.maps if isinstance(refl, Reflection) else tuple(tuple(m) for m in refl)
    rho = [None] * alg.n
    rho[alg.base] = identity(alg.n)
    queue = [alg.base]
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for fs, gs in zip(alg.trans, maps):
            y = fs[x]
            cand = compose(rho[x], gs)
            if rho[y] is None:
                rho[y] = cand
                queue.append(y)
            elif rho[y] != cand:
                raise InconsistentAllowable(f"state {y} reached with two different maps")
    for x, r in enumerate(rho):
        if r[alg.base] != x:
            raise InconsistentAllowable(f"map for state {x} sends the base to {r[alg.base]}")
        for fs in alg.trans:
            if any(fs[r[z]] != r[fs[z]] for z in alg.states):
                raise InconsistentAllowable(f"map for state {x} does not commute with the family")
    return tuple(rho)


def synthesize_from_reflection(alg: FiniteLSAlgebra, refl) -> MonoidOp:
    """``x' * x = rho_x(x')`` using the allowable maps."""
    rho = allowable_maps(alg, refl)
    table = tuple(tuple(rho[x][xp] for x in alg.states) for xp in alg.states)
    return MonoidOp(alg.n, alg.base, table)


def reflect_operation(op: MonoidOp) -> MonoidOp:
    """The opposite operation ``x *' y = y * x``."""
    return MonoidOp(op.n, op.unit, tuple(zip(*op.table)))


@dataclass(frozen=True)
class Classification:
    commutative: bool
    left_cancellative: bool
    right_cancellative: bool
    group: bool
    witnesses: dict

    def to_dict(self) -> dict:
        return {
            "commutative": self.commutative,
            "left_cancellative": self.left_cancellative,
            "right_cancellative": self.right_cancellative,
            "group": self.group,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _injective(m) -> bool:
    return len(set(m)) == len(m)


def classify_monoid(alg: FiniteLSAlgebra, op: MonoidOp, refl) -> Classification:
    """Classify the associated monoid twice: from the family of maps and from the table itself.

    Family criteria: commutative iff the family commutes; left cancellative iff
    every ``f_s`` is injective; right cancellative iff every ``f'_s`` is
    injective; group iff every ``f_s`` is surjective.  Raises
    :class:`CriterionMismatch` if the table disagrees.
    """
    maps = refl.maps if isinstance(refl, Reflection) else tuple(tuple(m) for m in refl)
    report = family_report(alg)
    by_family = {
        "commutative": report.commutative,
        "left_cancellative": all(report.injective),
        "right_cancellative": all(_injective(m) for m in maps),
        "group": all(report.surjective),
    }

    t = op.table
    n = op.n
    witnesses = {}
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                witnesses.setdefault("commutative", (x, y))
    for x in range(n):
        seen = {}
        for y in range(n):
            v = t[x][y]
            if v in seen:
                witnesses.setdefault("left_cancellative", (x, seen[v], y))
                break
            seen[v] = y
    for x in range(n):
        seen = {}
        for y in range(n):
            v = t[y][x]
            if v in seen:
                witnesses.setdefault("right_cancellative", (x, seen[v], y))
                break
            seen[v] = y
    for x in range(n):
        if not any(t[x][y] == op.unit and t[y][x] == op.unit for y in range(n)):
            witnesses.setdefault("group", (x,))
    by_table = {name: name not in witnesses for name in by_family}

    for name in by_family:
        if by_family[name] != by_table[name]:
            raise CriterionMismatch(
                f"{name}: family criterion says {by_family[name]}, table says {by_table[name]}"
            )
    return Classification(witnesses=witnesses, **by_table)


def _brute_force_tables(alg: FiniteLSAlgebra):
    n, u = alg.n, alg.base
    free = [(x, y) for x in range(n) for y in range(n) if x != u and y != u]
    count = n ** len(free)
    digits = np.arange(count, dtype=np.int64)[:, None] // (n ** np.arange(len(free), dtype=np.int64))[None, :] % n
    tables = np.empty((count, n, n), dtype=np.int8)
    tables[:, u, :] = np.arange(n)
    tables[:, :, u] = np.arange(n)
    for c, (x, y) in enumerate(free):
        tables[:, x, y] = digits[:, c]
    return tables


def brute_force_operation_search(alg: FiniteLSAlgebra, bound: int = ORACLE_BOUND) -> list:
    """Every table with the base as two-sided unit that is associative and satisfies
    ``f_s(x1) * x2 == f_s(x1 * x2)``, found by exhaustive enumeration.

    There are ``n ** ((n - 1) ** 2)`` candidates; refuses above ``bound`` states.
    """
    n = alg.n
    if n > bound:
        raise BoundExceeded(n, bound)
    tables = _brute_force_tables(alg)
    keep = np.ones(len(tables), dtype=bool)
    for fs in alg.trans:
        f = np.asarray(fs, dtype=np.int8)
        # tables[:, f[x1], x2] == f[tables[:, x1, x2]]
        keep &= (tables[:, f, :] == f[tables]).all(axis=(1, 2))
    tables = tables[keep]
    if len(tables):
        idx = np.arange(len(tables))[:, None, None, None]
        ar = np.arange(n)
        left = tables[idx, tables[:, :, :, None], ar[None, None, None, :]]
        right = tables[idx, ar[None, :, None, None], tables[:, None, :, :]]
        tables = tables[(left == right).all(axis=(1, 2, 3))]
    return [MonoidOp(n, alg.base, t.tolist()) for t in tables]


def brute_force_reflection_search(alg: FiniteLSAlgebra, bound=REFLECTION_ORACLE_BOUND) -> list:
    """Every family of maps satisfying the reflection conditions, by exhaustive enumeration."""
    max_n, max_k = bound
    if alg.n > max_n or alg.k > max_k:
        raise BoundExceeded(alg.n, max_n, what=f"reflection search with {alg.k} symbols")
    maps = list(product(range(alg.n), repeat=alg.n))
    found = []
    for family in product(maps, repeat=alg.k):
        if verify_reflection(alg, family):
            found.append(Reflection(family))
    return found
