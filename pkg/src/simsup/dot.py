"""Graphviz DOT rendering of automata."""

from __future__ import annotations

from .automata import Automaton


def _quote(text: str) -> str:
    return '"%s"' % text.replace("\\", "\\\\").replace('"', '\\"')


def _label(state: str, width: int) -> str:
    if width > 0 and len(state) > width:
        return state[: max(width - 1, 1)] + "..."
    return state


def to_dot(a: Automaton, max_label_width: int = 40, name: str = "automaton") -> str:
    """Deterministic DOT text: nodes in sorted state order, long state ids
    (rendered pair sets) abbreviated at max_label_width."""
    index = {state: "n%d" % i for i, state in enumerate(a.sorted_states)}
    lines = ["digraph %s {" % _quote(name), "  rankdir=LR;"]
    for i, state in enumerate(sorted(a.initial)):
        lines.append("  __init%d [shape=point, label=\"\"];" % i)
    for state in a.sorted_states:
        lines.append("  %s [label=%s, shape=%s];"
                     % (index[state], _quote(_label(state, max_label_width)),
                        "circle" if len(state) <= 4 else "box"))
    for i, state in enumerate(sorted(a.initial)):
        lines.append("  __init%d -> %s;" % (i, index[state]))
    for (src, ev, tgt) in sorted(a.transitions):
        lines.append("  %s -> %s [label=%s];" % (index[src], index[tgt], _quote(ev)))
    lines.append("}")
    return "\n".join(lines) + "\n"
