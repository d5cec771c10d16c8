"""Acceptance suite: one test per release criterion, each printing a
pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see them.
"""

import random
import time

import pytest

from desattack import (
    analyze,
    attacker_projection,
    build_attack_structure,
    build_observer,
    enumerate_language,
    extended_reach,
    parallel_compose,
    parse_model,
    serialize_model,
    supervisor_projection,
    supremal_substructure,
    validate_attack_word,
    weakly_exposing_region,
)
from desattack.cli import cli_main
from desattack.labels import enabled, erased
from desattack.render import render_state
from desattack.supervisor_attack import DUMMY

from .conftest import F1_TEXT, SAFE_TEXT
from .dotcheck import check_dot
from .generators import random_instance, random_plant, random_universe
from .oracles import consistent_set, game_region, observation_language


def report(num, name, ok):
    print(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok


def test_criterion_1_observer_oracle():
    rng = random.Random(2024)
    start = time.monotonic()
    ok = True
    for _ in range(200):
        universe, plant, _, _ = random_instance(
            rng, max_states=6, max_events=4, with_attacks=False
        )
        obs = build_observer(plant, universe)
        oracle = observation_language(plant, universe, 8)
        for s, est in oracle.items():
            if extended_reach(obs, obs.initial, s) != est:
                ok = False
        for s in enumerate_language(obs, 8):
            if s not in oracle:
                ok = False
    elapsed = time.monotonic() - start
    report(1, "observer oracle equivalence", ok and elapsed < 10)


def _instances_with_f1(rng, count):
    f1 = parse_model(F1_TEXT)
    yield f1.universe, f1.plant, f1.supervisor, f1.unsafe
    for _ in range(count):
        yield random_instance(rng, max_states=4, max_events=4)


def test_criterion_2_attack_language_validity():
    rng = random.Random(7)
    start = time.monotonic()
    ok = True
    for universe, plant, sup, unsafe in _instances_with_f1(rng, 50):
        A = build_attack_structure(plant, sup, universe, unsafe)
        obs = build_observer(plant, universe)
        for w in enumerate_language(A.automaton, 6):
            if not validate_attack_word(w, universe):
                ok = False
            if extended_reach(obs, obs.initial, attacker_projection(w)) is None:
                ok = False
    elapsed = time.monotonic() - start
    report(2, "attack-language validity", ok and elapsed < 30)


def test_criterion_3_stealthiness():
    rng = random.Random(13)
    start = time.monotonic()
    ok = True
    for universe, plant, sup, unsafe in _instances_with_f1(rng, 50):
        ss = supremal_substructure(
            build_attack_structure(plant, sup, universe, unsafe)
        )
        closed = parallel_compose(plant, sup)
        cache = {}
        for w in enumerate_language(ss.automaton, 8):
            s = supervisor_projection(w)
            if s not in cache:
                cache[s] = bool(consistent_set(closed, universe, s))
            if not cache[s]:
                ok = False
    elapsed = time.monotonic() - start
    report(3, "stealthiness of the supremal substructure", ok and elapsed < 30)


def test_criterion_4_pruning_oracle():
    rng = random.Random(99)
    ok = True
    checked = 0
    for universe, plant, sup, unsafe in _instances_with_f1(rng, 80):
        A = build_attack_structure(plant, sup, universe, unsafe)
        if len(A.automaton.states) > 40:
            continue
        if weakly_exposing_region(A) != game_region(A.automaton, A.exposing):
            ok = False
        checked += 1
    report(4, f"pruning-oracle equivalence ({checked} instances)", ok and checked >= 40)


def test_criterion_5_f1_dossier():
    f1 = parse_model(F1_TEXT)
    verdict = analyze(f1.plant, f1.supervisor, f1.universe, f1.unsafe)
    ok = verdict.effective and verdict.stealthy_effective
    ok = ok and [l.render() for l in verdict.witness] == ["a", "b-"]
    A = build_attack_structure(f1.plant, f1.supervisor, f1.universe, f1.unsafe)
    node = (frozenset({"2"}), "y2")
    exposed = A.automaton.step(node, enabled("b"))
    hidden = A.automaton.step(node, erased("b"))
    ok = ok and exposed == (frozenset({"3"}), DUMMY) and exposed in A.exposing
    ok = ok and hidden == (frozenset({"3"}), "y2") and hidden not in A.exposing
    ok = ok and hidden in A.targets
    region = weakly_exposing_region(A)
    pruned = (frozenset({"0"}), "y1")
    ok = ok and pruned in region and region == A.exposing | {pruned}
    report(5, "paper-pattern fixture F1", ok)


def test_criterion_6_scalability():
    rng = random.Random(5)
    ok = True
    for _ in range(10):
        universe = random_universe(rng, 5, rng.randint(0, 2))
        plant = random_plant(rng, universe, 8, density=0.35)
        from .generators import random_supervisor

        sup = random_supervisor(rng, plant, universe)
        unsafe = {s for s in plant.states if rng.random() < 0.2}
        start = time.monotonic()
        A = build_attack_structure(plant, sup, universe, unsafe)
        supremal_substructure(A)
        analyze(plant, sup, universe, unsafe)
        elapsed = time.monotonic() - start
        if elapsed >= 5:
            ok = False
        if len(A.automaton.states) > 2**8 * (2**8 + 1):
            ok = False
    report(6, "scalability smoke", ok)


def test_criterion_7_cli_contract(tmp_path, capsys):
    f1_path = tmp_path / "f1.des"
    f1_path.write_text(F1_TEXT)
    safe_path = tmp_path / "safe.des"
    safe_path.write_text(SAFE_TEXT)
    bad_path = tmp_path / "bad.des"
    bad_path.write_text("[events]\nbroken\n")

    ok = cli_main(["verify", str(safe_path)]) == 0
    ok = ok and cli_main(["verify", str(f1_path)]) == 2
    ok = ok and cli_main(["verify", str(bad_path)]) == 1

    canonical = serialize_model(parse_model(F1_TEXT))
    ok = ok and serialize_model(parse_model(canonical)) == canonical

    dot_path = tmp_path / "a.dot"
    ok = ok and cli_main(["export", str(f1_path), "--what", "A", "--dot", str(dot_path)]) == 0
    try:
        check_dot(dot_path.read_text())
    except AssertionError:
        ok = False
    capsys.readouterr()
    report(7, "CLI contract", ok)
