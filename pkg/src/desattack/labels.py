"""Attack alphabet: labels over observable events plus their inserted,
erased, and attacker-enabled copies, with the two projections that recover
what the supervisor perceives and what really happened."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .automata import DesError, EventId, EventUniverse


class Kind(enum.Enum):
    GENUINE = "genuine"
    INSERTED = "inserted"
    ERASED = "erased"
    ENABLED = "enabled"


_SUFFIX = {Kind.GENUINE: "", Kind.INSERTED: "+", Kind.ERASED: "-", Kind.ENABLED: "!"}


@dataclass(frozen=True)
class AttackLabel:
    kind: Kind
    event: EventId

    def render(self) -> str:
        return self.event + _SUFFIX[self.kind]

    def __repr__(self):
        return f"AttackLabel({self.render()!r})"


def genuine(e: EventId) -> AttackLabel:
    return AttackLabel(Kind.GENUINE, e)


def inserted(e: EventId) -> AttackLabel:
    return AttackLabel(Kind.INSERTED, e)


def erased(e: EventId) -> AttackLabel:
    return AttackLabel(Kind.ERASED, e)


def enabled(e: EventId) -> AttackLabel:
    return AttackLabel(Kind.ENABLED, e)


AttackWord = Sequence[AttackLabel]


def render_word(w: AttackWord) -> str:
    return " ".join(label.render() for label in w)


def parse_label(token: str) -> AttackLabel:
    """Inverse of AttackLabel.render for tokens like a, a+, a-, a!."""
    if not token:
        raise DesError("empty attack-label token")
    if token[-1] == "+":
        return inserted(token[:-1])
    if token[-1] == "-":
        return erased(token[:-1])
    if token[-1] == "!":
        return enabled(token[:-1])
    return genuine(token)


def parse_word(text: str) -> tuple:
    return tuple(parse_label(tok) for tok in text.split())


def attack_alphabet(universe: EventUniverse) -> frozenset:
    """Every label the attack structures range over for this universe."""
    labels = {genuine(e) for e in universe.observable}
    labels |= {inserted(e) for e in universe.compromised_ins}
    labels |= {erased(e) for e in universe.compromised_era}
    labels |= {enabled(e) for e in universe.compromised_ena}
    return frozenset(labels)


def supervisor_projection(w: AttackWord) -> tuple:
    """The string the supervisor perceives: erasures vanish, insertions and
    enablements read as plain events."""
    return tuple(l.event for l in w if l.kind is not Kind.ERASED)


def attacker_projection(w: AttackWord) -> tuple:
    """The real observation: insertions vanish, erasures and enablements
    read as plain events."""
    return tuple(l.event for l in w if l.kind is not Kind.INSERTED)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


def validate_attack_word(w: AttackWord, universe: EventUniverse) -> ValidationResult:
    """Check that w is a possible output of some admissible attack: every
    insertion, erasure, and enablement names a compromised event and every
    genuine label names an observable one.

    Reason codes on failure: bad-genuine, bad-insert, bad-erase, bad-enable.
    """
    for label in w:
        if label.kind is Kind.GENUINE and label.event not in universe.observable:
            return ValidationResult(False, "bad-genuine")
        if label.kind is Kind.INSERTED and label.event not in universe.compromised_ins:
            return ValidationResult(False, "bad-insert")
        if label.kind is Kind.ERASED and label.event not in universe.compromised_era:
            return ValidationResult(False, "bad-erase")
        if label.kind is Kind.ENABLED and label.event not in universe.compromised_ena:
            return ValidationResult(False, "bad-enable")
    return ValidationResult(True)


class IllegalEnableError(DesError):
    def __init__(self, events):
        super().__init__(f"events not enableable by the attacker: {sorted(events)}")
        self.events = events


@dataclass(frozen=True)
class ControlInput:
    """Set of events currently permitted to occur; always contains every
    uncontrollable event."""

    enabled: frozenset


def control_input(universe: EventUniverse, active: Iterable[EventId]) -> ControlInput:
    return ControlInput(frozenset(active) | universe.uncontrollable)


def corrupt_control_input(
    xi: ControlInput, enable: Iterable[EventId], universe: EventUniverse
) -> ControlInput:
    """Attacker re-enables events the supervisor disabled."""
    enable = frozenset(enable)
    illegal = enable - universe.compromised_ena
    if illegal:
        raise IllegalEnableError(illegal)
    return ControlInput(xi.enabled | enable)
