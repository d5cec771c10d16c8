"""Replay an attack word against the synthesized attack structure, step by
step, reporting the attacker's estimate, the supervisor's state, the control
input and its corruption, and the target/exposing flags."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import DesError, active_events
from .labels import AttackWord, ControlInput, Kind, control_input, corrupt_control_input
from .modelfile import ModelFile
from .structure import build_attack_structure
from .supervisor_attack import DUMMY


class WordRejectedError(DesError):
    def __init__(self, position: int, label, available):
        names = sorted(l.render() for l in available)
        super().__init__(
            f"no {label.render()!r} edge at position {position}; "
            f"available: {', '.join(names) if names else 'none'}"
        )
        self.position = position
        self.label = label
        self.available = frozenset(available)


@dataclass(frozen=True)
class ReplayStep:
    label: object  # AttackLabel consumed
    estimate: frozenset
    sup_state: object
    control: ControlInput
    corrupted: ControlInput
    target: bool
    exposing: bool


@dataclass(frozen=True)
class ReplayTrace:
    initial_estimate: frozenset
    initial_sup: object
    steps: tuple
    target: bool
    exposing: bool


def replay(model: ModelFile, word: AttackWord) -> ReplayTrace:
    if model.supervisor is None:
        raise DesError("replay needs a supervisor")
    structure = build_attack_structure(
        model.plant, model.supervisor, model.universe, model.unsafe
    )
    aut = structure.automaton
    universe = model.universe

    def xi(sup_state) -> ControlInput:
        if sup_state is DUMMY:
            return ControlInput(frozenset())
        return control_input(universe, active_events(model.supervisor, sup_state))

    node = aut.initial
    steps = []
    for pos, label in enumerate(word, start=1):
        nxt = aut.step(node, label)
        if nxt is None:
            raise WordRejectedError(pos, label, active_events(aut, node))
        control = xi(node[1])
        if label.kind is Kind.ENABLED:
            corrupted = corrupt_control_input(control, {label.event}, universe)
        else:
            corrupted = control
        node = nxt
        steps.append(
            ReplayStep(
                label,
                node[0],
                node[1],
                control,
                corrupted,
                node in structure.targets,
                node in structure.exposing,
            )
        )
    return ReplayTrace(
        aut.initial[0],
        aut.initial[1],
        tuple(steps),
        node in structure.targets,
        node in structure.exposing,
    )
