"""Walkthrough: simulation preorders and the matching fixpoint.

Loads the chain plant/spec pair, iterates the one-step matching operator by
hand to watch the greatest fixpoint emerge, and contrasts full simulation
with the uncontrollable-only preorder that drives supervisor existence.

Run from the repository root:

    python3 demos/01_simulation_basics.py
"""

import os

from simsup import (Relation, check_simulation, f_step, greatest_uc_fixpoint,
                    is_simulation_relation, load_automaton)

HERE = os.path.dirname(__file__)


def banner(text):
    print()
    print("=" * 72)
    print(text)
    print("=" * 72)


def show(rel, label):
    print("%s: %d pairs" % (label, len(rel)))
    print("  " + ", ".join("(%s,%s)" % p for p in rel.sorted_pairs))


def main():
    plant = load_automaton(os.path.join(HERE, "data", "chain_plant.aut"))
    spec = load_automaton(os.path.join(HERE, "data", "chain_spec.aut"))

    banner("Iterating the matching operator from the full product")
    rel = Relation(frozenset((x, z) for x in plant.states for z in spec.states))
    step = 0
    while True:
        nxt = f_step(plant, spec, rel)
        step += 1
        dropped = rel.pairs - nxt.pairs
        print("step %d: kept %d, dropped %s"
              % (step, len(nxt), sorted(dropped) if dropped else "nothing"))
        if nxt.pairs == rel.pairs:
            break
        rel = nxt
    show(rel, "greatest fixpoint")
    assert rel.pairs == greatest_uc_fixpoint(plant, spec).pairs

    banner("The fixpoint really is a uc-simulation")
    ok, witness = is_simulation_relation(rel, plant, spec, mode="uc")
    print("is_simulation_relation(uc):", ok, witness)

    banner("Preorder verdicts")
    for mode in ("uc", "full"):
        got = check_simulation(plant, spec, mode)
        print("plant below spec (%s): %s" % (mode, got is not None))
    got = check_simulation(spec, plant, "full")
    print("spec below plant (full):", got is not None)

    banner("A pruned relation loses the simulation property")
    broken = Relation(rel.pairs - {("x1", "z1")})
    ok, witness = is_simulation_relation(broken, plant, spec, mode="uc")
    print("after dropping (x1,z1):", ok, "witness:", witness)


if __name__ == "__main__":
    main()
