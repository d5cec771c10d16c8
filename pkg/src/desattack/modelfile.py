"""Line-oriented model file format.

Sections ([events], [compromised], [plant], [supervisor]) may appear in any
order on input; `#` starts a comment.  Serialization is canonical: fixed
section order, events and transitions sorted, so equal models serialize to
byte-identical text.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automata import Automaton, DesError, EventUniverse
from .supervisor_attack import check_supervisor


class ModelError(DesError):
    def __init__(self, message, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class ModelFile:
    universe: EventUniverse
    plant: Automaton
    supervisor: Optional[Automaton]
    unsafe: frozenset


_SECTIONS = ("events", "compromised", "plant", "supervisor")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_model(text: str) -> ModelFile:
    sections = {name: [] for name in _SECTIONS}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ModelError("unterminated section header", lineno)
            name = line[1:-1].strip()
            if name not in _SECTIONS:
                raise ModelError(f"unknown section [{name}]", lineno)
            current = name
            continue
        if current is None:
            raise ModelError("content before first section header", lineno)
        sections[current].append((lineno, line))

    events = {}
    for lineno, line in sections["events"]:
        parts = line.split()
        name, flags = parts[0], parts[1:]
        if name in events:
            raise ModelError(f"duplicate event {name!r}", lineno)
        obs = ctrl = None
        for flag in flags:
            if flag in ("o", "uo"):
                obs = flag == "o"
            elif flag in ("c", "uc"):
                ctrl = flag == "c"
            else:
                raise ModelError(f"unknown event flag {flag!r}", lineno)
        if obs is None or ctrl is None:
            raise ModelError(
                f"event {name!r} needs one of o|uo and one of c|uc", lineno
            )
        events[name] = (obs, ctrl)
    if not events:
        raise ModelError("no [events] declared")

    compromised = {"ins": set(), "era": set(), "ena": set()}
    for lineno, line in sections["compromised"]:
        if ":" not in line:
            raise ModelError("expected `ins:`, `era:` or `ena:` line", lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        if key not in compromised:
            raise ModelError(f"unknown compromised class {key!r}", lineno)
        for e in rest.split():
            if e not in events:
                raise ModelError(f"undeclared event {e!r}", lineno)
            compromised[key].add(e)

    try:
        universe = EventUniverse.make(
            events,
            {e for e, (o, _) in events.items() if o},
            {e for e, (_, c) in events.items() if c},
            compromised["ins"],
            compromised["era"],
            compromised["ena"],
        )
    except DesError as exc:
        raise ModelError(str(exc)) from exc

    def parse_automaton(section):
        initial = None
        unsafe = set()
        states = set()
        transitions = []
        for lineno, line in sections[section]:
            if line.startswith("initial:"):
                tokens = line.split(":", 1)[1].split()
                if len(tokens) != 1:
                    raise ModelError("initial: takes exactly one state", lineno)
                initial = tokens[0]
                states.add(initial)
                continue
            if line.startswith("unsafe:"):
                if section != "plant":
                    raise ModelError("unsafe: only allowed in [plant]", lineno)
                unsafe |= set(line.split(":", 1)[1].split())
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ModelError(f"expected `SRC EVENT DST`, got {line!r}", lineno)
            src, e, dst = parts
            if e not in events:
                raise ModelError(f"undeclared event {e!r}", lineno)
            states |= {src, dst}
            transitions.append((src, e, dst))
        if initial is None:
            raise ModelError(f"[{section}] missing initial: line")
        try:
            aut = Automaton(states, set(events), transitions, initial)
        except DesError as exc:
            raise ModelError(f"[{section}] {exc}") from exc
        return aut, unsafe

    if not sections["plant"]:
        raise ModelError("missing [plant] section")
    plant, unsafe = parse_automaton("plant")
    bad = unsafe - plant.states
    if bad:
        raise ModelError(f"unsafe states not in plant: {sorted(bad)}")

    supervisor = None
    if sections["supervisor"]:
        supervisor, _ = parse_automaton("supervisor")
        try:
            check_supervisor(supervisor, universe)
        except DesError as exc:
            raise ModelError(f"[supervisor] {exc}") from exc

    return ModelFile(universe, plant, supervisor, frozenset(unsafe))


def serialize_model(model: ModelFile) -> str:
    u = model.universe
    lines = ["[events]"]
    for e in sorted(u.events):
        obs = "o" if e in u.observable else "uo"
        ctrl = "c" if e in u.controllable else "uc"
        lines.append(f"{e} {obs} {ctrl}")
    lines.append("[compromised]")
    for key, sub in (
        ("ins", u.compromised_ins),
        ("era", u.compromised_era),
        ("ena", u.compromised_ena),
    ):
        if sub:
            lines.append(f"{key}: " + " ".join(sorted(sub)))
    lines.append("[plant]")
    lines.append(f"initial: {model.plant.initial}")
    if model.unsafe:
        lines.append("unsafe: " + " ".join(sorted(model.unsafe)))
    lines.extend(
        f"{s} {e} {d}" for s, e, d in sorted(model.plant.transitions())
    )
    if model.supervisor is not None:
        lines.append("[supervisor]")
        lines.append(f"initial: {model.supervisor.initial}")
        lines.extend(
            f"{s} {e} {d}" for s, e, d in sorted(model.supervisor.transitions())
        )
    return "\n".join(lines) + "\n"
