"""Shared worked-example fixtures.

Two plant/spec pairs recur throughout the suite.  The first ("chain") is a
four-state plant running sigma,sigma,c against a spec that splits on the
second sigma; its fixpoint, N-sets and the supervisors A, B, C built over
W0..W5 are all known in closed form.  The second ("fork") has two initial
spec states z01/z02 and a two-way controllable branch; the hand-built A1
covers only the z01 branch, which is exactly what the sistate clause should
catch.  test_fixtures.py pins every known set before anything else trusts
these objects.
"""

from simsup import Alphabet, Automaton
from simsup.synthesis import supervisor_from_pair_sets

# --- chain example -----------------------------------------------------------

CHAIN_ALPHA = Alphabet.build(["sigma", "c"], controllable=["c"])

CHAIN_PLANT = Automaton.build(
    CHAIN_ALPHA,
    [("x0", "sigma", "x1"), ("x1", "sigma", "x2"), ("x2", "c", "x3")],
    ["x0"])

CHAIN_SPEC = Automaton.build(
    CHAIN_ALPHA,
    [("z0", "sigma", "z1"), ("z1", "sigma", "z2"), ("z1", "sigma", "z3"),
     ("z3", "c", "z4")],
    ["z0"])

W0 = frozenset({("x0", "z0")})
W1 = frozenset({("x1", "z1")})
W2 = frozenset({("x2", "z2")})
W3 = frozenset({("x2", "z3")})
W4 = frozenset({("x2", "z2"), ("x2", "z3")})
W5 = frozenset({("x3", "z4")})

# {(x0,z0),(x1,z1),(x1,z0)} plus everything from x2,x3: those states enable
# no uncontrollable event, so every spec partner works
CHAIN_W_UP = frozenset(
    {("x0", "z0"), ("x1", "z1"), ("x1", "z0")}
    | {("x%d" % j, "z%d" % i) for j in (2, 3) for i in range(5)})


def chain_sup_a():
    """In SP and satisfies sistate, but misses the W1 -sigma-> W3 edge."""
    return supervisor_from_pair_sets(
        CHAIN_ALPHA, [W0],
        [(W0, "sigma", W1), (W1, "sigma", W2)],
        tag="A")


def chain_sup_b():
    """The minimal-cover construction by hand: saturated."""
    return supervisor_from_pair_sets(
        CHAIN_ALPHA, [W0],
        [(W0, "sigma", W1), (W1, "sigma", W2), (W1, "sigma", W3),
         (W3, "c", W5)],
        tag="B")


def chain_sup_c():
    """B plus the non-minimal cover W4: still saturated."""
    return supervisor_from_pair_sets(
        CHAIN_ALPHA, [W0],
        [(W0, "sigma", W1), (W1, "sigma", W2), (W1, "sigma", W3),
         (W1, "sigma", W4), (W3, "c", W5)],
        tag="C")


# --- fork example ------------------------------------------------------------

FORK_ALPHA = Alphabet.build(["sigma", "c1", "c2"], controllable=["c1", "c2"])

FORK_PLANT = Automaton.build(
    FORK_ALPHA,
    [("x0", "sigma", "x1"), ("x1", "c1", "x2"), ("x1", "c2", "x3")],
    ["x0"])

FORK_SPEC = Automaton.build(
    FORK_ALPHA,
    [("z01", "sigma", "z1"), ("z02", "sigma", "z2"),
     ("z1", "c1", "z3"), ("z2", "c2", "z4")],
    ["z01", "z02"])

FORK_W_UP = frozenset(
    {("x0", "z01"), ("x0", "z02")}
    | {("x%d" % j, z) for j in (1, 2, 3)
       for z in ("z01", "z02", "z1", "z2", "z3", "z4")})

# a plain supervisor automaton (not pair-set labelled) taking the c2 branch
FORK_S1 = Automaton.build(
    FORK_ALPHA,
    [("y0", "sigma", "y1"), ("y1", "c2", "y2")],
    ["y0"])


def fork_sup_a1():
    """Covers only the z01 branch: every clause holds except sistate."""
    i0 = frozenset({("x0", "z01")})
    m1 = frozenset({("x1", "z1")})
    m2 = frozenset({("x2", "z3")})
    return supervisor_from_pair_sets(
        FORK_ALPHA, [i0],
        [(i0, "sigma", m1), (m1, "c1", m2)],
        tag="A1")
