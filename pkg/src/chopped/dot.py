"""Graphviz DOT text for order diagrams (no rendering, text only)."""

from __future__ import annotations

from typing import Iterable

from .construction import ChoppedLattice, Role, embed, role_name
from .lattice import FiniteLattice

_BLOCK_EDGES = [(Role.ZERO, Role.UPPER), (Role.ZERO, Role.LOW1), (Role.ZERO, Role.LOW2),
                (Role.LOW1, Role.SUM), (Role.LOW2, Role.SUM), (Role.UPPER, Role.TOP),
                (Role.SUM, Role.TOP)]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def chopped_to_dot(M: ChoppedLattice, trace: Iterable = (), name: str = "M") -> str:
    """Hasse diagram of M with identified elements drawn once.

    Each cut in ``trace`` (a sequence of failures) is drawn as a red dashed
    edge from the old to the new coordinate value, labelled with its position.
    """
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e in M.elements:
        shape = ', shape=box' if e.kind == "TOP" else ""
        lines.append(f"  {_quote(e.name)} [label={_quote(e.name)}{shape}];")
    seen = set()
    for pair in M.pairs:
        for lo, hi in _BLOCK_EDGES:
            edge = (embed(lo, pair).name, embed(hi, pair).name)
            if edge not in seen:
                seen.add(edge)
                lines.append(f"  {_quote(edge[0])} -> {_quote(edge[1])} [arrowhead=none];")
    for k, f in enumerate(trace, 1):
        old = embed(f.old, f.coordinate).name
        new = embed(f.target, f.coordinate).name
        label = f"{k}: {f.kind} {role_name(f.old, f.coordinate)}->{role_name(f.target, f.coordinate)}"
        lines.append(
            f"  {_quote(old)} -> {_quote(new)} [color=red, style=dashed, "
            f"constraint=false, label={_quote(label)}, fontcolor=red];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_dot(L: FiniteLattice, label=str, name: str = "L") -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, e in enumerate(L.elements):
        lines.append(f"  n{i} [label={_quote(label(e))}];")
    for i, j in L.covers():
        lines.append(f"  n{i} -> n{j} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
