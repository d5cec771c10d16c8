"""Attack structure: composition of the attacker observer with the
supervisor under attack, state classification, pruning to the supremal
stealthy substructure, and the final robustness verdict."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .attacker_observer import build_attacker_observer
from .automata import Automaton, EventUniverse, UnknownStateError, active_events, parallel_compose, reachable_trim
from .labels import Kind
from .supervisor_attack import DUMMY, build_supervisor_under_attack


@dataclass
class AttackStructure:
    """Composed attack automaton.  Nodes are (estimate, supervisor state)
    pairs; ``targets`` holds nodes whose estimate meets the unsafe set and
    ``exposing`` those whose supervisor component is the dummy state."""

    automaton: Automaton
    unsafe: frozenset
    targets: frozenset
    exposing: frozenset
    weakly_exposing: Optional[frozenset] = None


def build_attack_structure(
    plant: Automaton, sup: Automaton, universe: EventUniverse, unsafe
) -> AttackStructure:
    unsafe = frozenset(unsafe)
    bad = unsafe - plant.states
    if bad:
        raise UnknownStateError(sorted(bad)[0])
    att_obs = build_attacker_observer(plant, universe)
    sup_att = build_supervisor_under_attack(plant, sup, universe)
    aut = reachable_trim(parallel_compose(att_obs, sup_att))
    targets = frozenset(r for r in aut.states if r[0] & unsafe)
    exposing = frozenset(r for r in aut.states if r[1] is DUMMY)
    return AttackStructure(aut, unsafe, targets, exposing)


def target_states(structure: AttackStructure) -> frozenset:
    return frozenset(r for r in structure.automaton.states if r[0] & structure.unsafe)


def exposing_states(structure: AttackStructure) -> frozenset:
    return frozenset(r for r in structure.automaton.states if r[1] is DUMMY)


def _spontaneous_events(aut: Automaton, r) -> set:
    """Events the plant can fire at r without the attacker's consent: those
    with a genuine edge, or with an erased edge not guarded by an enabled
    edge (an enabled copy means the event needs attacker enablement)."""
    labels = active_events(aut, r)
    by_kind = {}
    for l in labels:
        by_kind.setdefault(l.event, set()).add(l.kind)
    out = set()
    for e, kinds in by_kind.items():
        if Kind.GENUINE in kinds:
            out.add(e)
        elif Kind.ERASED in kinds and Kind.ENABLED not in kinds:
            out.add(e)
    return out


def weakly_exposing_region(structure: AttackStructure) -> frozenset:
    """Least fixpoint over the exposing states: a node joins the region when
    some spontaneous event leads to it under every attacker response
    (genuine or erased variant) and no insertion leaves the region."""
    aut = structure.automaton
    region = set(structure.exposing)
    changed = True
    while changed:
        changed = False
        for r in aut.states:
            if r in region:
                continue
            labels = active_events(aut, r)
            inserts = [l for l in labels if l.kind is Kind.INSERTED]
            if any(aut.step(r, l) not in region for l in inserts):
                continue
            forced = False
            for e in _spontaneous_events(aut, r):
                variants = [
                    l
                    for l in labels
                    if l.event == e and l.kind in (Kind.GENUINE, Kind.ERASED)
                ]
                if variants and all(aut.step(r, l) in region for l in variants):
                    forced = True
                    break
            if forced:
                region.add(r)
                changed = True
    structure.weakly_exposing = frozenset(region)
    return structure.weakly_exposing


def supremal_substructure(structure: AttackStructure) -> AttackStructure:
    """Remove the weakly exposing region and trim; what remains is the
    largest structure of attacks that stay undetected."""
    region = structure.weakly_exposing
    if region is None:
        region = weakly_exposing_region(structure)
    aut = structure.automaton
    if aut.initial in region:
        empty = Automaton(
            {aut.initial}, aut.alphabet, [], aut.initial
        )  # placeholder initial; the structure is semantically empty
        return AttackStructure(
            empty, structure.unsafe, frozenset(), frozenset(), frozenset()
        )
    keep = aut.states - region
    transitions = [
        (s, l, d) for s, l, d in aut.transitions() if s in keep and d in keep
    ]
    trimmed = reachable_trim(Automaton(keep, aut.alphabet, transitions, aut.initial))
    targets = frozenset(r for r in trimmed.states if r[0] & structure.unsafe)
    return AttackStructure(
        trimmed, structure.unsafe, targets, frozenset(), frozenset()
    )


@dataclass(frozen=True)
class Verdict:
    effective: bool
    stealthy_effective: bool
    witness: Optional[tuple]
    robust: bool


def shortest_witness(structure: AttackStructure) -> Optional[tuple]:
    """Shortest word reaching a target node, ties broken by the rendered
    label sequence, so reruns are reproducible."""
    aut = structure.automaton
    if aut.initial in structure.targets:
        return ()
    seen = {aut.initial}
    queue = deque([(aut.initial, ())])
    while queue:
        r, word = queue.popleft()
        for l in sorted(active_events(aut, r), key=lambda l: l.render()):
            r2 = aut.step(r, l)
            if r2 in seen:
                continue
            seen.add(r2)
            w2 = word + (l,)
            if r2 in structure.targets:
                return w2
            queue.append((r2, w2))
    return None


def analyze(
    plant: Automaton, sup: Automaton, universe: EventUniverse, unsafe
) -> Verdict:
    structure = build_attack_structure(plant, sup, universe, unsafe)
    effective = bool(structure.targets)
    supremal = supremal_substructure(structure)
    if supremal.automaton.initial in structure.weakly_exposing:
        witness = None
    else:
        witness = shortest_witness(supremal)
    stealthy = witness is not None
    return Verdict(effective, stealthy, witness, not stealthy)
