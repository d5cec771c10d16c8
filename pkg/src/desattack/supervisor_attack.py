"""The supervisor's estimator over the attack alphabet.

A dummy state is reached exactly when the supervisor's perceived observation
stops being consistent with attack-free closed-loop behavior: that is where
the attack is detected.  Supervisors are given as automata over the full
event alphabet whose unobservable transitions must all be self-loops; the
active events at a state define its control input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import (
    Automaton,
    DesError,
    EventUniverse,
    active_events,
    build_observer,
    natural_projection,
    parallel_compose,
)
from .labels import Kind, attack_alphabet, enabled, erased, genuine, inserted


class Dummy:
    """Sentinel supervisor state marking a detected attack."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "y_∅"


DUMMY = Dummy()


class RealizationError(DesError):
    pass


def check_supervisor(sup: Automaton, universe: EventUniverse) -> None:
    """Reject supervisors whose unobservable transitions are not self-loops."""
    if not sup.alphabet <= universe.events:
        raise RealizationError("supervisor uses undeclared events")
    for y, e, y2 in sup.transitions():
        if e in universe.unobservable and y2 != y:
            raise RealizationError(
                f"unobservable event {e!r} must self-loop, found {y!r} -> {y2!r}"
            )


def observable_restriction(sup: Automaton, universe: EventUniverse) -> Automaton:
    transitions = [
        (y, e, y2) for y, e, y2 in sup.transitions() if e in universe.observable
    ]
    return Automaton(sup.states, sup.alphabet & universe.observable, transitions, sup.initial)


@dataclass(frozen=True)
class ConsistentPairs:
    """Observer/supervisor state pairs reachable by a common observable
    string, each with its disabled-but-active observable events."""

    relation: frozenset  # of (estimate, supervisor state)
    disabled_active: dict  # (estimate, supervisor state) -> frozenset of events

    def pairs_for(self, y) -> list:
        return [pair for pair in self.relation if pair[1] == y]


def consistent_pairs(
    observer: Automaton, sup: Automaton, universe: EventUniverse
) -> ConsistentPairs:
    product = parallel_compose(observer, observable_restriction(sup, universe))
    disabled = {}
    for b, y in product.states:
        gamma_b = active_events(observer, b)
        gamma_y = active_events(sup, y) | universe.uncontrollable
        disabled[(b, y)] = frozenset((gamma_b - gamma_y) & universe.observable)
    return ConsistentPairs(frozenset(product.states), disabled)


def build_supervisor_under_attack(
    plant: Automaton, sup: Automaton, universe: EventUniverse
) -> Automaton:
    check_supervisor(sup, universe)
    observer = build_observer(plant, universe)
    pairs = consistent_pairs(observer, sup, universe)

    states = set(sup.states) | {DUMMY}
    # Genuine part: the supervisor's observable transitions (unobservable
    # self-loops have no counterpart in the attack alphabet).
    transitions = [
        (y, genuine(e), y2)
        for y, e, y2 in sup.transitions()
        if e in universe.observable
    ]

    def disabled_at(y):
        out = set()
        for pair in pairs.pairs_for(y):
            out |= pairs.disabled_active[pair]
        return out

    # Enablement attacks: an event active in some consistent estimate but
    # disabled by the supervisor betrays the attacker when it is seen.
    for y in sup.states:
        dis = disabled_at(y)
        for e in universe.compromised_ena & dis:
            transitions.append((y, enabled(e), DUMMY))
            if e in universe.compromised_ins:
                transitions.append((y, inserted(e), DUMMY))
            if e in universe.compromised_era:
                transitions.append((y, erased(e), y))

    # Observable events that cannot occur here in attack-free operation:
    # perceiving one exposes the attack.
    genuine_defined = {
        (y, e) for y, e, _ in sup.transitions() if e in universe.observable
    }
    for y in sup.states:
        dis = disabled_at(y)
        for e in universe.observable:
            if (y, e) not in genuine_defined and e not in dis:
                transitions.append((y, genuine(e), DUMMY))

    # The supervisor cannot tell an inserted event from the real one, and
    # cannot see erased events at all.
    genuine_edges = [(y, l.event, y2) for y, l, y2 in transitions if l.kind is Kind.GENUINE]
    extra = []
    for y, e, y2 in genuine_edges:
        if e in universe.compromised_ins:
            extra.append((y, inserted(e), y2))
        if e in universe.compromised_era:
            extra.append((y, erased(e), y))
    transitions.extend(extra)

    # Deduplicate: the enablement block may add the same erased self-loop.
    transitions = set(transitions)
    return Automaton(states, attack_alphabet(universe), transitions, sup.initial)
