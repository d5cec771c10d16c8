"""The attacker's own plant estimator over the attack alphabet.

Starting from the plain observer, every insertable event gains a self-loop
at every state (nothing really happened, the estimate stays put), and every
genuine edge on an erasable or enableable event is doubled with the erased
or enabled copy to the same target (the event really happened either way).
"""

from __future__ import annotations

from .automata import Automaton, EventUniverse, build_observer
from .labels import attack_alphabet, enabled, erased, genuine, inserted


def build_attacker_observer(plant: Automaton, universe: EventUniverse) -> Automaton:
    obs = build_observer(plant, universe)
    transitions = [(b, genuine(e), b2) for b, e, b2 in obs.transitions()]
    for e in universe.compromised_ins:
        for b in obs.states:
            transitions.append((b, inserted(e), b))
    for e in universe.compromised_era:
        for b, e2, b2 in obs.transitions():
            if e2 == e:
                transitions.append((b, erased(e), b2))
    for e in universe.compromised_ena:
        for b, e2, b2 in obs.transitions():
            if e2 == e:
                transitions.append((b, enabled(e), b2))
    return Automaton(obs.states, attack_alphabet(universe), transitions, obs.initial)
