from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from lsalg.algebra import FiniteLSAlgebra, is_minimal
from lsalg.errors import CapExceeded, DimensionMismatch, NotMinimal, StrategyUnavailable
from lsalg.fixtures import C3, LOLLI, SHIFT2, cycle, enumerate_algebras, lollipop
from lsalg.synthesis import synthesize
from lsalg.transmonoid import (
    centraliser,
    commute,
    compose,
    equivalence_report,
    evaluate_at_base,
    generate_monoid,
    identity,
    is_closed,
    monoid_of,
)

from conftest import with_isolated_state


def naive_monoid(gens):
    """Saturate {id} ∪ gens under all pairwise compositions."""
    n = len(gens[0])
    elems = {tuple(range(n))} | {tuple(g) for g in gens}
    while True:
        new = {tuple(u[v[x]] for x in range(n)) for u in elems for v in elems} | elems
        if new == elems:
            return elems
        elems = new


def naive_centraliser(gens):
    n = len(gens[0])
    return {
        u for u in product(range(n), repeat=n)
        if all(u[g[x]] == g[u[x]] for g in gens for x in range(n))
    }


def test_compose_examples():
    r = (1, 2, 0)
    assert compose(identity(3), r) == r
    assert compose(r, r) == (2, 0, 1)
    f = (1, 2, 3, 2)
    assert compose(f, f) == tuple(f[f[x]] for x in range(4)) == (2, 3, 2, 3)
    with pytest.raises(DimensionMismatch):
        compose((0, 1), (0, 1, 2))


def test_generate_examples():
    m = generate_monoid([(1, 2, 0)])
    assert m.elements == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert m.generators == (1,)

    f = LOLLI.trans[0]
    m = generate_monoid([f])
    f2 = compose(f, f)
    f3 = compose(f, f2)
    assert m.elements == (identity(4), f, f2, f3)
    assert compose(f, f3) == f2

    m = monoid_of(SHIFT2)
    assert len(m) == 7
    assert set(m.elements) == naive_monoid(SHIFT2.trans)
    consts = [u for u in m if len(set(u)) == 1]
    assert len(consts) == 4
    assert set(m.elements) == {identity(4), SHIFT2.map("a"), SHIFT2.map("b")} | set(consts)


def test_generate_is_deterministic():
    assert monoid_of(SHIFT2).elements == monoid_of(SHIFT2).elements
    assert monoid_of(SHIFT2).elements[:3] == (identity(4), SHIFT2.map("a"), SHIFT2.map("b"))


def test_generate_cap():
    with pytest.raises(CapExceeded):
        generate_monoid([(1, 2, 0)], cap=2)
    assert len(generate_monoid([(1, 2, 0)], cap=3)) == 3


def test_full_transformation_monoid_reaches_bound():
    # a 3-cycle, a transposition and a rank-2 map generate all 27 maps
    m = generate_monoid([(1, 2, 0), (1, 0, 2), (0, 0, 2)])
    assert len(m) == 27


def test_evaluate_examples():
    ev = evaluate_at_base(monoid_of(C3), 0)
    assert ev.bijective
    m = monoid_of(C3)
    assert [m.elements[i] for i in ev.preimage] == [(0, 1, 2), (1, 2, 0), (2, 0, 1)]

    ev = evaluate_at_base(monoid_of(LOLLI), 0)
    assert ev.bijective and ev.phi == (0, 1, 2, 3)

    m = monoid_of(SHIFT2)
    ev = evaluate_at_base(m, SHIFT2.base)
    assert ev.surjective and not ev.injective
    i, j = ev.collision
    assert (m.elements[i], m.elements[j]) == (identity(4), SHIFT2.map("a"))


def test_centraliser_examples():
    z = centraliser([(1, 2, 0)], "enumerate")
    assert set(z.elements) == naive_centraliser([(1, 2, 0)]) == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    assert z.elements[0] == identity(3)

    z = centraliser([identity(3)], "enumerate")
    assert len(z) == 27

    z = centraliser(SHIFT2.trans, "enumerate")
    assert set(z.elements) == naive_centraliser(SHIFT2.trans)
    with pytest.raises(StrategyUnavailable):
        centraliser(SHIFT2.trans, "via-reflection-op", op=synthesize(SHIFT2).op)


def test_centraliser_cap():
    with pytest.raises(CapExceeded):
        centraliser([(1, 2, 3, 4, 0)], "enumerate", cap=1000)


def test_centraliser_strategies_agree_on_regular():
    for alg in (C3, LOLLI, cycle(5), lollipop(3, 2)):
        op = synthesize(alg).op
        by_enum = set(centraliser(alg.trans, "enumerate").elements)
        by_op = set(centraliser(alg.trans, "via-reflection-op", op=op).elements)
        by_allow = set(centraliser(alg.trans, "allowable", base=alg.base).elements)
        assert by_enum == by_op == by_allow


def test_allowable_centraliser_matches_enumeration_on_minimal_algebras():
    for k in (1, 2):
        for alg in enumerate_algebras(3, k):
            if is_minimal(alg):
                assert set(centraliser(alg.trans, "allowable", base=0).elements) == naive_centraliser(alg.trans)


@st.composite
def generator_sets(draw):
    n = draw(st.integers(1, 4))
    k = draw(st.integers(1, 3))
    return [tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))) for _ in range(k)]


@given(generator_sets())
@settings(max_examples=60)
def test_generated_monoid_properties(gens):
    m = generate_monoid(gens)
    n = len(gens[0])
    assert is_closed(m)
    assert set(m.elements) == naive_monoid(gens)
    assert len(m) <= n ** n
    assert all(m.elements[i] == g for i, g in zip(m.generators, gens))


@given(generator_sets())
@settings(max_examples=40)
def test_centraliser_is_monoid_commuting_with_everything(gens):
    z = centraliser(gens, "enumerate")
    assert is_closed(z)
    m = generate_monoid(gens)
    assert all(commute(u, v) for u in z for v in m)


@given(generator_sets(), st.integers(0, 3))
@settings(max_examples=60)
def test_phi_surjective_iff_minimal(gens, base):
    n = len(gens[0])
    base %= n
    alg = FiniteLSAlgebra(n, base, tuple("abc"[: len(gens)]), tuple(gens))
    assert evaluate_at_base(monoid_of(alg), base).surjective == is_minimal(alg)


def test_equivalence_examples():
    assert equivalence_report(C3).flags == (True,) * 5
    assert equivalence_report(SHIFT2).flags == (False,) * 5
    assert equivalence_report(LOLLI).flags == (True,) * 5
    assert all(equivalence_report(a).consistent for a in (C3, SHIFT2, LOLLI))
    with pytest.raises(NotMinimal):
        equivalence_report(with_isolated_state(C3))


def test_equivalence_strategy_fallback():
    rep = equivalence_report(cycle(8), cap=1000)
    assert rep.centraliser_strategy == "allowable"
    assert rep.flags == (True,) * 5


def test_commutative_family_gives_all_true():
    for alg in enumerate_algebras(3, 2):
        if is_minimal(alg) and all(commute(f, g) for f in alg.trans for g in alg.trans):
            m = monoid_of(alg)
            z = centraliser(alg.trans, "enumerate")
            assert set(m.elements) <= set(z.elements)
            assert equivalence_report(alg).flags == (True,) * 5
