from pathlib import Path

import pytest

from lsalg.algebra import FiniteLSAlgebra

DATA = Path(__file__).parent / "data"


def naive_closure(alg, seeds):
    """Fixed-point iteration over the whole state set, independent of any worklist."""
    current = set(seeds)
    while True:
        nxt = current | {table[x] for table in alg.trans for x in current}
        if nxt == current:
            return frozenset(current)
        current = nxt


def with_isolated_state(alg):
    """Append one state fixed by every symbol."""
    n = alg.n
    return FiniteLSAlgebra(n + 1, alg.base, alg.alphabet, tuple(t + (n,) for t in alg.trans))


@pytest.fixture
def data_dir():
    return DATA
