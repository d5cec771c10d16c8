"""Command-line surface.

Exit codes: 0 on success (for `verify`: the supervisor is robust), 2 when
`verify` finds a stealthy effective attack, 1 on any parse/semantic/usage
error, so CI can tell "attack exists" from "tool failed".
"""

from __future__ import annotations

import argparse
import sys

from .attacker_observer import build_attacker_observer
from .automata import DesError, build_observer, enumerate_language, extended_reach, parallel_compose
from .dot import export_dot
from .labels import parse_word, render_word, supervisor_projection
from .modelfile import parse_model, serialize_model
from .render import render_automaton, render_state
from .replay import replay
from .structure import (
    analyze,
    build_attack_structure,
    supremal_substructure,
    weakly_exposing_region,
)
from .supervisor_attack import build_supervisor_under_attack


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


def _need_supervisor(model):
    if model.supervisor is None:
        raise DesError("model has no [supervisor] section")
    return model.supervisor


def _structure(model, with_region=False):
    structure = build_attack_structure(
        model.plant, _need_supervisor(model), model.universe, model.unsafe
    )
    if with_region:
        weakly_exposing_region(structure)
    return structure


def _bounded_stealthiness(model, structure, max_enum) -> bool:
    """Spot-check that every pruned attack word keeps the supervisor's view
    inside the attack-free observed language, up to the enumeration bound."""
    closed = parallel_compose(model.plant, model.supervisor)
    obs = build_observer(closed, model.universe)
    for w in enumerate_language(structure.automaton, max_enum):
        s = supervisor_projection(w)
        if extended_reach(obs, obs.initial, s) is None:
            return False
    return True


def _cmd_verify(model, args):
    verdict = analyze(
        model.plant, _need_supervisor(model), model.universe, model.unsafe
    )
    print(f"effective={str(verdict.effective).lower()}")
    print(f"stealthy_effective={str(verdict.stealthy_effective).lower()}")
    print(f"robust={str(verdict.robust).lower()}")
    if verdict.witness is not None:
        print(f"witness={render_word(verdict.witness)}")
    structure = _structure(model)
    supremal = supremal_substructure(structure)
    ok = _bounded_stealthiness(model, supremal, args.max_enum)
    print(f"stealthy_check[n={args.max_enum}]={'ok' if ok else 'FAILED'}")
    return 2 if verdict.stealthy_effective else 0


def _cmd_witness(model, args):
    verdict = analyze(
        model.plant, _need_supervisor(model), model.universe, model.unsafe
    )
    if verdict.witness is None:
        print("no stealthy effective attack")
    else:
        print(render_word(verdict.witness))
    return 0


def _cmd_replay(model, args):
    word = parse_word(args.word)
    for label in word:
        if label.event not in model.universe.events:
            raise DesError(f"unknown event {label.event!r}")
    trace = replay(model, word)
    print(
        f"start estimate={render_state(trace.initial_estimate)} "
        f"sup={render_state(trace.initial_sup)}"
    )
    for i, step in enumerate(trace.steps, start=1):
        flags = []
        if step.target:
            flags.append("target")
        if step.exposing:
            flags.append("exposing")
        print(
            f"{i}: {step.label.render()} -> "
            f"({render_state(step.estimate)},{render_state(step.sup_state)}) "
            f"control={{{','.join(sorted(step.control.enabled))}}} "
            f"corrupted={{{','.join(sorted(step.corrupted.enabled))}}}"
            + (f" [{','.join(flags)}]" if flags else "")
        )
    return 0


def _cmd_export(model, args):
    what = args.what
    if what == "obs":
        obj = build_observer(model.plant, model.universe)
    elif what == "attobs":
        obj = build_attacker_observer(model.plant, model.universe)
    elif what == "supatt":
        obj = build_supervisor_under_attack(
            model.plant, _need_supervisor(model), model.universe
        )
    elif what == "A":
        obj = _structure(model, with_region=True)
    else:
        obj = supremal_substructure(_structure(model))
    text = export_dot(obj)
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(text)
    return 0


_PRINTERS = {
    "observe": lambda m, a: build_observer(m.plant, m.universe),
    "attacker-observer": lambda m, a: build_attacker_observer(m.plant, m.universe),
    "sup-attack": lambda m, a: build_supervisor_under_attack(
        m.plant, _need_supervisor(m), m.universe
    ),
    "attack-structure": lambda m, a: _structure(m).automaton,
    "supremal": lambda m, a: supremal_substructure(_structure(m)).automaton,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="desattack",
        description="Stealthy attack synthesis and robustness checking for "
        "supervised discrete event systems",
    )
    parser.add_argument(
        "--max-enum",
        type=int,
        default=8,
        metavar="N",
        help="word-length bound for enumeration-based subchecks (default 8)",
    )
    parser.add_argument(
        "--canonical",
        action="store_true",
        help="print the canonical serialization of the model and exit",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _PRINTERS:
        sub.add_parser(name).add_argument("file")
    sub.add_parser("verify").add_argument("file")
    sub.add_parser("witness").add_argument("file")
    p = sub.add_parser("replay")
    p.add_argument("file")
    p.add_argument("--word", required=True, help='attack word, e.g. "a b- g+"')
    p = sub.add_parser("export")
    p.add_argument("file")
    p.add_argument("--what", required=True, choices=["obs", "attobs", "supatt", "A", "Ass"])
    p.add_argument("--dot", required=True, metavar="PATH")
    return parser


def cli_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = _load(args.file)
        if args.canonical:
            sys.stdout.write(serialize_model(model))
            return 0
        if args.command in _PRINTERS:
            sys.stdout.write(render_automaton(_PRINTERS[args.command](model, args)))
            return 0
        if args.command == "verify":
            return _cmd_verify(model, args)
        if args.command == "witness":
            return _cmd_witness(model, args)
        if args.command == "replay":
            return _cmd_replay(model, args)
        if args.command == "export":
            return _cmd_export(model, args)
        raise AssertionError(args.command)
    except (DesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
