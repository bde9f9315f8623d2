"""Text formats: sequence strings, ``otg`` edge lists and DOT export.

Edge-list grammar::

    otg <n>        header, first significant line
    <u> <v>        one arc u -> v per line, 0-based
    # ...          comment; blank lines are ignored too
"""

from __future__ import annotations

import json
import re
from typing import Sequence

from .graph import OrientedGraph
from .sequences import SequenceParseError, TernarySequence

_INT = re.compile(r"[0-9]+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_sequence(text: str) -> TernarySequence:
    return TernarySequence.parse(text.strip())


def render_sequence(s: TernarySequence) -> str:
    return str(s)


def parse_binary_sequence(text: str) -> TernarySequence:
    """Parse ``[01+]*`` (``1`` and ``+`` both mean dominating) with optional ``*``."""
    text = text.strip()
    for i, ch in enumerate(text):
        if ch not in "01+*":
            raise SequenceParseError(f"illegal character {ch!r} in binary sequence", i)
    return TernarySequence.parse(text.replace("1", "+"))


def parse_edge_list(text: str) -> OrientedGraph:
    n = None
    arcs: dict[tuple[int, int], int] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "otg" or not _INT.fullmatch(parts[1]):
                raise ParseError(f"malformed header {line!r}, expected 'otg <n>'", lineno)
            n = int(parts[1])
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2 or not all(_INT.fullmatch(p) for p in parts):
            raise ParseError(f"malformed arc line {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if (u, v) in arcs:
            raise ParseError(f"duplicate arc {u} {v} (first at line {arcs[u, v]})", lineno)
        if (v, u) in arcs:
            raise ParseError(f"2-cycle between {u} and {v}", lineno)
        arcs[u, v] = lineno
    if n is None:
        raise ParseError("missing 'otg <n>' header", max(lineno, 1))
    return OrientedGraph(n, frozenset(arcs))


def emit_edge_list(g: OrientedGraph) -> str:
    lines = [f"otg {g.n}"] + [f"{u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def export_dot(g: OrientedGraph, labels: Sequence[str] | None = None) -> str:
    if labels is not None and len(labels) != g.n:
        raise ValueError(f"expected {g.n} labels, got {len(labels)}")
    lines = ["digraph {"]
    for v in g.vertices:
        if labels is None:
            lines.append(f"  {v};")
        else:
            lines.append(f"  {v} [label={json.dumps(str(labels[v]), ensure_ascii=False)}];")
    for u, v in g.sorted_arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
