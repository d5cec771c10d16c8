"""Stealthy attack synthesis and robustness checking for partially observed
supervisory control systems."""

from .automata import (
    Automaton,
    DesError,
    EventUniverse,
    NondeterminismError,
    UnknownStateError,
    active_events,
    build_observer,
    enumerate_language,
    extended_reach,
    natural_projection,
    parallel_compose,
    reachable_trim,
    unobservable_reach,
)
from .attacker_observer import build_attacker_observer
from .labels import (
    AttackLabel,
    ControlInput,
    IllegalEnableError,
    Kind,
    attack_alphabet,
    attacker_projection,
    control_input,
    corrupt_control_input,
    enabled,
    erased,
    genuine,
    inserted,
    parse_word,
    render_word,
    supervisor_projection,
    validate_attack_word,
)
from .modelfile import ModelError, ModelFile, parse_model, serialize_model
from .replay import ReplayStep, ReplayTrace, WordRejectedError, replay
from .structure import (
    AttackStructure,
    Verdict,
    analyze,
    build_attack_structure,
    exposing_states,
    supremal_substructure,
    target_states,
    weakly_exposing_region,
)
from .supervisor_attack import (
    DUMMY,
    ConsistentPairs,
    RealizationError,
    build_supervisor_under_attack,
    check_supervisor,
    consistent_pairs,
)
from .dot import export_dot

__all__ = [name for name in dir() if not name.startswith("_")]
