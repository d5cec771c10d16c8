"""Independent brute-force oracles the implementation is checked against.

These deliberately avoid the library's construction paths: state estimates
come from per-observation reachability on the raw plant graph, and the
pruning region from an exhaustive backward-induction sweep over the whole
node set.
"""

from desattack import Kind, active_events


def consistent_set(plant, universe, obs):
    """Plant states reachable by some string whose observable projection is
    exactly ``obs``, found by graph search on (state, consumed) pairs."""
    start = (plant.initial, 0)
    seen = {start}
    stack = [start]
    while stack:
        x, i = stack.pop()
        for e in active_events(plant, x):
            y = plant.step(x, e)
            if e in universe.observable:
                if i < len(obs) and obs[i] == e:
                    cand = (y, i + 1)
                else:
                    continue
            else:
                cand = (y, i)
            if cand not in seen:
                seen.add(cand)
                stack.append(cand)
    return frozenset(x for x, i in seen if i == len(obs))


def observation_language(plant, universe, max_len):
    """All realizable observations up to max_len, each with its consistent
    set, grown prefix by prefix."""
    out = {(): consistent_set(plant, universe, ())}
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for s in frontier:
            for e in sorted(universe.observable):
                s2 = s + (e,)
                est = consistent_set(plant, universe, s2)
                if est:
                    out[s2] = est
                    nxt.append(s2)
        frontier = nxt
    return out


def reachable_pairs(att_obs, sup_att, labels, bound=None):
    """Product reachability by stepping the two automata separately."""
    if bound is None:
        bound = len(att_obs.states) * len(sup_att.states)
    pairs = {(att_obs.initial, sup_att.initial)}
    frontier = set(pairs)
    for _ in range(bound):
        nxt = set()
        for b, y in frontier:
            for l in labels:
                b2, y2 = att_obs.step(b, l), sup_att.step(y, l)
                if b2 is not None and y2 is not None and (b2, y2) not in pairs:
                    pairs.add((b2, y2))
                    nxt.add((b2, y2))
        if not nxt:
            break
        frontier = nxt
    return pairs


def game_region(aut, exposing):
    """Weakly exposing region by backward induction on the safety game: the
    attacker survives at a node if every plant-forced event leaves some
    variant into surviving territory, or an insertion escapes there."""
    safe = set(aut.states) - set(exposing)
    while True:
        drop = set()
        for r in safe:
            edges = [(l, aut.step(r, l)) for l in active_events(aut, r)]
            by_event = {}
            for l, d in edges:
                by_event.setdefault(l.event, {})[l.kind] = d
            insert_escape = any(
                l.kind is Kind.INSERTED and d in safe for l, d in edges
            )
            plant_ok = True
            for kinds in by_event.values():
                forced = Kind.GENUINE in kinds or (
                    Kind.ERASED in kinds and Kind.ENABLED not in kinds
                )
                if not forced:
                    continue
                variants = [
                    d
                    for k, d in kinds.items()
                    if k in (Kind.GENUINE, Kind.ERASED)
                ]
                if not any(d in safe for d in variants):
                    plant_ok = False
                    break
            if not (plant_ok or insert_escape):
                drop.add(r)
        if not drop:
            return set(aut.states) - safe
        safe -= drop
