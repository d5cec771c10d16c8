"""DOT export for automata and attack structures.

Node fill colors follow a fixed precedence: gray for exposing nodes, yellow
for the rest of the weakly exposing region, green for target nodes, white
otherwise.  A node that is both target and exposing renders gray: it must
be pruned regardless of the damage it represents.
"""

from __future__ import annotations

from .automata import Automaton
from .render import render_state, render_symbol
from .structure import AttackStructure


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _color(structure: AttackStructure, state) -> str:
    if state in structure.exposing:
        return "gray"
    if structure.weakly_exposing and state in structure.weakly_exposing:
        return "yellow"
    if state in structure.targets:
        return "green"
    return "white"


def export_dot(obj) -> str:
    if isinstance(obj, AttackStructure):
        aut, color = obj.automaton, lambda s: _color(obj, s)
    elif isinstance(obj, Automaton):
        aut, color = obj, lambda s: "white"
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")

    lines = ["digraph {", "  rankdir=LR;", '  __init [shape=point, label=""];']
    for state in sorted(aut.states, key=render_state):
        label = render_state(state)
        lines.append(
            f"  {_quote(label)} [label={_quote(label)}, style=filled, "
            f"fillcolor={color(state)}];"
        )
    lines.append(f"  __init -> {_quote(render_state(aut.initial))};")
    rows = sorted(
        (render_state(s), render_symbol(e), render_state(d))
        for s, e, d in aut.transitions()
    )
    for s, e, d in rows:
        lines.append(f"  {_quote(s)} -> {_quote(d)} [label={_quote(e)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
