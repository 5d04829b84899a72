"""Simulation preorders between automata over a shared alphabet.

The central object is the one-step matching operator: a pair (x,z) survives one
application iff every obligation of x (a transition under a tracked event) can
be answered by z inside the current relation.  Iterating from the full product
X x Z yields the greatest fixpoint; restricting the tracked events to the
uncontrollable ones gives the relation driving supervisor existence, tracking
the whole alphabet gives ordinary simulation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automata import Automaton, compose, reachable, split_product_id
from .errors import InputError

Pair = tuple[str, str]


@dataclass(frozen=True)
class Relation:
    """Binary relation between the states of two automata.

    left/right are cosmetic labels used by serialization; identity of the
    related automata is the caller's business.
    """

    pairs: frozenset[Pair]
    left: str = ""
    right: str = ""

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))

    @property
    def sorted_pairs(self) -> list[Pair]:
        return sorted(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def to_json(self) -> dict:
        return {"left": self.left, "right": self.right,
                "pairs": [list(p) for p in self.sorted_pairs]}

    @staticmethod
    def from_json(body: dict) -> "Relation":
        return Relation(frozenset((p[0], p[1]) for p in body["pairs"]),
                        left=body.get("left", ""), right=body.get("right", ""))


def _require_shared_alphabet(g: Automaton, r: Automaton) -> None:
    if g.alphabet != r.alphabet:
        raise InputError("simulation requires identical alphabets")


def _tracked(g: Automaton, mode: str) -> tuple[str, ...]:
    if mode == "uc":
        return tuple(sorted(g.alphabet.uncontrollable))
    if mode == "full":
        return g.alphabet.events
    raise InputError("mode must be 'uc' or 'full', got %r" % mode)


def _step_pairs(g: Automaton, r: Automaton, pairs: frozenset[Pair],
                events: tuple[str, ...]) -> frozenset[Pair]:
    keep = set()
    for (x, z) in pairs:
        ok = True
        for ev in events:
            xs = g.succ.get((x, ev))
            if not xs:
                continue
            zs = r.succ.get((z, ev), ())
            for x1 in xs:
                if not any((x1, z1) in pairs for z1 in zs):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.add((x, z))
    return frozenset(keep)


def f_step(g: Automaton, r: Automaton, rel: Relation) -> Relation:
    """One application of the uncontrollable-event matching operator.

    Monotone and contractive: the result is a subset of the argument's pairs,
    and larger arguments give larger results.
    """
    _require_shared_alphabet(g, r)
    pairs = _step_pairs(g, r, rel.pairs, _tracked(g, "uc"))
    return Relation(pairs, left=rel.left, right=rel.right)


def _greatest_fixpoint(g: Automaton, r: Automaton,
                       events: tuple[str, ...]) -> frozenset[Pair]:
    # stabilizes within |X|*|Z| rounds; each round removes >= 1 pair or stops
    current = frozenset((x, z) for x in g.sorted_states for z in r.sorted_states)
    while True:
        nxt = _step_pairs(g, r, current, events)
        if nxt == current:
            return current
        current = nxt


def greatest_uc_fixpoint(g: Automaton, r: Automaton) -> Relation:
    """Greatest fixpoint of f_step, computed from the full product downward."""
    _require_shared_alphabet(g, r)
    return Relation(_greatest_fixpoint(g, r, _tracked(g, "uc")),
                    left="plant", right="spec")


def check_simulation(g: Automaton, r: Automaton, mode: str = "full") -> Relation | None:
    """Greatest (uc-)simulation of g by r, or None when no simulation exists.

    A relation exists iff every initial g-state has a partner among r's initial
    states inside the greatest fixpoint; the fixpoint itself is then the
    greatest simulation relation.
    """
    _require_shared_alphabet(g, r)
    pairs = _greatest_fixpoint(g, r, _tracked(g, mode))
    for x0 in g.initial:
        if not any((x0, z0) in pairs for z0 in r.initial):
            return None
    return Relation(pairs, left="plant", right="spec")


def is_simulation_relation(rel: Relation, g: Automaton, r: Automaton,
                           mode: str = "full", check_initial: bool = True):
    """Direct verification of the two defining conditions of a (uc-)simulation.

    Returns (True, None) or (False, witness); the witness is the
    lexicographically least violation, either ("initial", x0) for an initial
    g-state with no related initial r-state, or ("step", (x,z), event, x') for
    an unanswerable obligation.
    """
    _require_shared_alphabet(g, r)
    events = _tracked(g, mode)
    if check_initial:
        for x0 in sorted(g.initial):
            if not any((x0, z0) in rel.pairs for z0 in sorted(r.initial)):
                return False, ("initial", x0)
    for (x, z) in sorted(rel.pairs):
        for ev in events:
            zs = r.succ.get((z, ev), ())
            for x1 in g.succ.get((x, ev), ()):
                if not any((x1, z1) in rel.pairs for z1 in zs):
                    return False, ("step", (x, z), ev, x1)
    return True, None


def project_pi(rel: Relation, s: Automaton, g: Automaton) -> Relation:
    """Push a relation between S||G and R down to one between G and R.

    Keeps (x,z) whenever some reachable product state (y,x) is related to z.
    When S is admissible for G and the input relation witnesses S||G below R,
    the result is a uc-simulation of G by R.
    """
    live = reachable(compose(s, g))
    keep = set()
    for (pid, z) in rel.pairs:
        if pid in live:
            keep.add((split_product_id(pid).right, z))
    return Relation(frozenset(keep), left="plant", right=rel.right)


def pi_g(pairs) -> frozenset[str]:
    """Left projection of a pair set: the plant states it mentions."""
    if isinstance(pairs, Relation):
        pairs = pairs.pairs
    return frozenset(x for (x, _) in pairs)
