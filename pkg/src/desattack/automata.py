"""Deterministic finite automata: construction, reachability, observer, composition.

States are arbitrary hashable tokens.  Plain plants and supervisors use
strings; observer states are frozensets of plant states; composed states
are pairs.  Transition functions are partial: a missing (state, symbol)
entry means the move is undefined, there are no sink states.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Optional, Sequence

EventId = str
StateId = Hashable


class DesError(Exception):
    """Base class for errors raised by this package."""


class UnknownStateError(DesError):
    def __init__(self, state):
        super().__init__(f"unknown state: {state!r}")
        self.state = state


class NondeterminismError(DesError):
    def __init__(self, source, symbol):
        super().__init__(f"two transitions from {source!r} on {symbol!r}")
        self.source = source
        self.symbol = symbol


@dataclass(frozen=True)
class EventUniverse:
    """Event alphabet with observability/controllability partitions and the
    compromised subsets (insertable, erasable, attacker-enableable)."""

    events: frozenset
    observable: frozenset
    controllable: frozenset
    compromised_ins: frozenset = frozenset()
    compromised_era: frozenset = frozenset()
    compromised_ena: frozenset = frozenset()

    def __post_init__(self):
        for name, sub in (
            ("observable", self.observable),
            ("controllable", self.controllable),
            ("ins", self.compromised_ins),
            ("era", self.compromised_era),
            ("ena", self.compromised_ena),
        ):
            if not sub <= self.events:
                raise DesError(f"{name} set {sorted(sub - self.events)} not declared")
        if not self.controllable <= self.observable:
            raise DesError("controllable events must be observable")
        if not self.compromised_ins <= self.observable:
            raise DesError("insertable events must be observable")
        if not self.compromised_era <= self.observable:
            raise DesError("erasable events must be observable")
        if not self.compromised_ena <= self.controllable:
            raise DesError("enableable events must be controllable")

    @property
    def unobservable(self) -> frozenset:
        return self.events - self.observable

    @property
    def uncontrollable(self) -> frozenset:
        return self.events - self.controllable

    @classmethod
    def make(cls, events, observable, controllable, ins=(), era=(), ena=()):
        return cls(
            frozenset(events),
            frozenset(observable),
            frozenset(controllable),
            frozenset(ins),
            frozenset(era),
            frozenset(ena),
        )


class Automaton:
    """Deterministic automaton with a partial transition function.

    Immutable after construction; the transition map is exposed only through
    ``step``/``active``/``transitions`` so determinism cannot be broken.
    """

    __slots__ = ("states", "alphabet", "initial", "_delta", "_adj")

    def __init__(self, states, alphabet, transitions, initial):
        self.states = frozenset(states)
        self.alphabet = frozenset(alphabet)
        delta = {}
        adj = {x: {} for x in self.states}
        for src, sym, dst in transitions:
            if src not in self.states:
                raise UnknownStateError(src)
            if dst not in self.states:
                raise UnknownStateError(dst)
            if sym not in self.alphabet:
                raise DesError(f"transition symbol {sym!r} not in alphabet")
            key = (src, sym)
            if key in delta and delta[key] != dst:
                raise NondeterminismError(src, sym)
            delta[key] = dst
            adj[src][sym] = dst
        if initial not in self.states:
            raise UnknownStateError(initial)
        self._delta = delta
        self._adj = adj
        self.initial = initial

    def step(self, x, sym):
        """Successor of x on sym, or None when undefined."""
        return self._delta.get((x, sym))

    def transitions(self) -> Iterator[tuple]:
        for (src, sym), dst in self._delta.items():
            yield src, sym, dst

    def __len__(self):
        return len(self.states)

    def __eq__(self, other):
        if not isinstance(other, Automaton):
            return NotImplemented
        return (
            self.states == other.states
            and self.alphabet == other.alphabet
            and self.initial == other.initial
            and self._delta == other._delta
        )

    def __hash__(self):
        return hash((self.states, self.alphabet, self.initial))


def active_events(aut: Automaton, x) -> set:
    """Symbols with a transition defined at state x."""
    if x not in aut.states:
        raise UnknownStateError(x)
    return set(aut._adj[x])


def extended_reach(aut: Automaton, x, sigma: Sequence) -> Optional[StateId]:
    """Run sigma from x; None when some step is undefined."""
    if x not in aut.states:
        raise UnknownStateError(x)
    cur = x
    for sym in sigma:
        cur = aut.step(cur, sym)
        if cur is None:
            return None
    return cur


def natural_projection(sigma: Sequence[EventId], keep) -> tuple:
    """Erase every symbol not in keep, preserving order."""
    return tuple(e for e in sigma if e in keep)


def unobservable_reach(plant: Automaton, universe: EventUniverse, x) -> frozenset:
    """States reachable from x by unobservable strings only (includes x)."""
    if x not in plant.states:
        raise UnknownStateError(x)
    unobs = universe.unobservable
    seen = {x}
    stack = [x]
    while stack:
        cur = stack.pop()
        for e in active_events(plant, cur) & unobs:
            nxt = plant.step(cur, e)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return frozenset(seen)


def build_observer(plant: Automaton, universe: EventUniverse) -> Automaton:
    """Subset-construction observer over the observable alphabet.

    States are frozensets of plant states, closed under unobservable reach;
    only states reachable from the initial estimate are emitted.
    """
    obs_events = universe.observable & plant.alphabet

    def ur(states):
        out = set()
        for x in states:
            out |= unobservable_reach(plant, universe, x)
        return frozenset(out)

    b0 = ur({plant.initial})
    states = {b0}
    transitions = []
    queue = deque([b0])
    while queue:
        b = queue.popleft()
        for e in obs_events:
            targets = {plant.step(x, e) for x in b} - {None}
            if not targets:
                continue
            b2 = ur(targets)
            if b2 not in states:
                states.add(b2)
                queue.append(b2)
            transitions.append((b, e, b2))
    return Automaton(states, obs_events, transitions, b0)


def parallel_compose(g1: Automaton, g2: Automaton) -> Automaton:
    """Synchronous product: shared symbols synchronize, private ones interleave.

    Only pairs reachable from (initial, initial) are emitted.
    """
    shared = g1.alphabet & g2.alphabet
    alphabet = g1.alphabet | g2.alphabet
    init = (g1.initial, g2.initial)
    states = {init}
    transitions = []
    queue = deque([init])
    while queue:
        x1, x2 = queue.popleft()
        moves = []
        for sym in active_events(g1, x1):
            if sym in shared:
                y2 = g2.step(x2, sym)
                if y2 is not None:
                    moves.append((sym, (g1.step(x1, sym), y2)))
            else:
                moves.append((sym, (g1.step(x1, sym), x2)))
        for sym in active_events(g2, x2) - shared:
            moves.append((sym, (x1, g2.step(x2, sym))))
        for sym, dst in moves:
            if dst not in states:
                states.add(dst)
                queue.append(dst)
            transitions.append(((x1, x2), sym, dst))
    return Automaton(states, alphabet, transitions, init)


def enumerate_language(aut: Automaton, max_len: int) -> set:
    """All generated words of length <= max_len, by breadth-first unrolling."""
    if max_len < 0:
        raise DesError("max_len must be >= 0")
    words = {()}
    frontier = [((), aut.initial)]
    for _ in range(max_len):
        nxt = []
        for word, x in frontier:
            for sym in active_events(aut, x):
                w2 = word + (sym,)
                words.add(w2)
                nxt.append((w2, aut.step(x, sym)))
        frontier = nxt
    return words


def reachable_trim(aut: Automaton) -> Automaton:
    """Drop states unreachable from the initial state."""
    seen = {aut.initial}
    stack = [aut.initial]
    while stack:
        x = stack.pop()
        for sym in active_events(aut, x):
            y = aut.step(x, sym)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    transitions = [(s, e, d) for s, e, d in aut.transitions() if s in seen]
    return Automaton(seen, aut.alphabet, transitions, aut.initial)
