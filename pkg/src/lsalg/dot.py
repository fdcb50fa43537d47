"""Graphviz rendering of an algebra as a semiautomaton."""

from __future__ import annotations

from .algebra import FiniteLSAlgebra


def _quote(text: str) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(alg: FiniteLSAlgebra, name: str = "algebra") -> str:
    """One node per state (named by its label), one edge ``x -> f_s(x)`` labelled ``s`` per pair."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for x in alg.states:
        shape = "doublecircle" if x == alg.base else "circle"
        lines.append(f"  {_quote(alg.label(x))} [shape={shape}];")
    lines.append(f"  __start -> {_quote(alg.label(alg.base))};")
    for x in alg.states:
        for sym, table in zip(alg.alphabet, alg.trans):
            lines.append(f"  {_quote(alg.label(x))} -> {_quote(alg.label(table[x]))} [label={_quote(sym)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
