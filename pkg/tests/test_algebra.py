import pytest
from hypothesis import given, strategies as st

from lsalg.algebra import (
    FiniteLSAlgebra,
    family_report,
    invariant_closure,
    is_minimal,
    minimal_core,
    replay_witness,
)
from lsalg.errors import InvalidAlgebra
from lsalg.fixtures import C3, LOLLI, SHIFT2, cycle, lollipop

from conftest import naive_closure, with_isolated_state


@st.composite
def algebras(draw, max_n=5, max_k=3):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    trans = tuple(tuple(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))) for _ in range(k))
    base = draw(st.integers(0, n - 1))
    return FiniteLSAlgebra(n, base, tuple("abc"[:k]), trans)


def test_invalid_algebras_rejected():
    with pytest.raises(InvalidAlgebra):
        FiniteLSAlgebra(2, 0, ("a",), ((0, 2),))
    with pytest.raises(InvalidAlgebra):
        FiniteLSAlgebra(2, 2, ("a",), ((0, 1),))
    with pytest.raises(InvalidAlgebra):
        FiniteLSAlgebra(2, 0, ("a", "a"), ((0, 1), (1, 0)))
    with pytest.raises(InvalidAlgebra):
        FiniteLSAlgebra(2, 0, (), ())
    with pytest.raises(InvalidAlgebra):
        FiniteLSAlgebra(0, 0, ("a",), ((),))


def test_closure_examples():
    assert invariant_closure(C3, {0}) == {0, 1, 2}
    assert invariant_closure(LOLLI, {2}) == naive_closure(LOLLI, {2}) == {2, 3}
    assert invariant_closure(SHIFT2, {0}) == naive_closure(SHIFT2, {0}) == {0, 1, 2, 3}


def test_minimality_examples():
    assert is_minimal(C3)
    assert is_minimal(SHIFT2)
    assert not is_minimal(with_isolated_state(C3))


def test_minimal_core_examples():
    core, index = minimal_core(with_isolated_state(C3))
    assert core == C3
    assert index == (0, 1, 2, None)

    assert minimal_core(LOLLI) == (LOLLI, (0, 1, 2, 3))

    padded = FiniteLSAlgebra(6, 0, ("s",), ((1, 2, 3, 2, 5, 4),))
    assert naive_closure(padded, {0}) == {0, 1, 2, 3}
    core, index = minimal_core(padded)
    assert core == LOLLI
    assert index == (0, 1, 2, 3, None, None)


def test_trivial_algebra():
    triv = FiniteLSAlgebra(1, 0, ("a", "b"), ((0,), (0,)))
    assert is_minimal(triv)
    assert family_report(triv).commutative


def test_family_report_c3():
    rep = family_report(C3)
    assert rep.commutative
    assert rep.injective == (True,) and rep.surjective == (True,) and rep.bijective == (True,)
    assert not rep.unambiguous
    assert rep.witnesses["unambiguous"] == ("base_in_image", "s", 2)


def test_family_report_lolli():
    rep = family_report(LOLLI)
    assert rep.injective == (False,)
    assert rep.witnesses["injective:s"] == ("s", 1, 3)
    assert rep.witnesses["surjective:s"] == ("s", 0)
    assert LOLLI.apply("s", 1) == LOLLI.apply("s", 3) == 2


def test_family_report_shift2():
    rep = family_report(SHIFT2)
    assert not rep.commutative
    s, t, x = rep.witnesses["commutative"]
    assert (s, t, SHIFT2.label(x)) == ("a", "b", "aa")
    # f_a(f_b(aa)) = f_a(ba) = ab, f_b(f_a(aa)) = f_b(aa) = ba
    assert SHIFT2.label(SHIFT2.apply("a", SHIFT2.apply("b", x))) == "ab"
    assert SHIFT2.label(SHIFT2.apply("b", SHIFT2.apply("a", x))) == "ba"
    assert rep.injective == (False, False)
    assert not rep.unambiguous


def test_unambiguous_examples():
    # a chain where the last state is absorbing through one symbol only
    chain = FiniteLSAlgebra(3, 0, ("s",), ((1, 2, 2),))
    assert family_report(chain).witnesses["unambiguous"][0] == "not_injective"
    overlap = FiniteLSAlgebra(3, 0, ("a", "b"), ((1, 2, 0), (2, 0, 1)))
    assert family_report(overlap).witnesses["unambiguous"][0] == "overlap"


@given(algebras(), st.sets(st.integers(0, 4)))
def test_closure_least_fixed_point(alg, seeds):
    seeds = {x for x in seeds if x < alg.n}
    closure = invariant_closure(alg, seeds)
    assert closure == naive_closure(alg, seeds)
    assert invariant_closure(alg, closure) == closure
    assert all(t[x] in closure for t in alg.trans for x in closure)


@given(algebras(), st.sets(st.integers(0, 4)), st.sets(st.integers(0, 4)))
def test_closure_monotone(alg, a, b):
    a = {x for x in a if x < alg.n}
    b = {x for x in b if x < alg.n} | a
    assert invariant_closure(alg, a) <= invariant_closure(alg, b)


@given(algebras())
def test_minimal_core_is_minimal(alg):
    core, index = minimal_core(alg)
    assert is_minimal(core)
    assert index[alg.base] == core.base
    for s in alg.alphabet:
        for x, new in enumerate(index):
            if new is not None:
                assert index[alg.apply(s, x)] == core.apply(s, new)


@given(algebras())
def test_family_report_witnesses_replay(alg):
    rep = family_report(alg)
    if rep.unambiguous:
        assert all(rep.injective)
    flags = {"commutative": rep.commutative, "unambiguous": rep.unambiguous}
    for s, inj, sur in zip(alg.alphabet, rep.injective, rep.surjective):
        flags[f"injective:{s}"] = inj
        flags[f"surjective:{s}"] = sur
    for key, ok in flags.items():
        assert (key in rep.witnesses) == (not ok)
        if not ok:
            assert replay_witness(alg, key, rep.witnesses[key])


@given(algebras())
def test_family_flags_match_direct_definitions(alg):
    rep = family_report(alg)
    maps = alg.trans
    assert rep.commutative == all(
        f[g[x]] == g[f[x]] for f in maps for g in maps for x in alg.states
    )
    images = [set(f) for f in maps]
    disjoint = all(not (images[i] & images[j]) for i in range(len(maps)) for j in range(i + 1, len(maps)))
    assert rep.unambiguous == (
        all(len(set(f)) == alg.n for f in maps) and disjoint and all(alg.base not in im for im in images)
    )


def test_cycle_and_lollipop_builders():
    assert cycle(3) == C3
    assert lollipop(2, 2) == LOLLI
