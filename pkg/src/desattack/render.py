"""Textual rendering of states and transition labels shared by the CLI and
the DOT exporter."""

from __future__ import annotations

from .labels import AttackLabel
from .supervisor_attack import Dummy


def render_state(state) -> str:
    if isinstance(state, frozenset):
        return "{" + ",".join(sorted(render_state(x) for x in state)) + "}"
    if isinstance(state, tuple):
        return "(" + ",".join(render_state(x) for x in state) + ")"
    if isinstance(state, Dummy):
        return "y_∅"
    return str(state)


def render_symbol(sym) -> str:
    if isinstance(sym, AttackLabel):
        return sym.render()
    return str(sym)


def render_automaton(aut) -> str:
    """One line per transition, sorted, preceded by the initial state."""
    lines = [f"initial: {render_state(aut.initial)}"]
    lines.append(f"states: {len(aut.states)}")
    rows = sorted(
        (render_state(s), render_symbol(e), render_state(d))
        for s, e, d in aut.transitions()
    )
    lines.extend(f"{s} {e} {d}" for s, e, d in rows)
    return "\n".join(lines) + "\n"
