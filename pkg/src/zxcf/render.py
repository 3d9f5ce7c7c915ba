"""Graphviz DOT output for diagrams (presentation only; JSON is the interchange format)."""

from __future__ import annotations

from .canonical import ZxcfDiagram, validate_zxcf

PHASE_LABELS = ("", "π/2", "π", "3π/2")
HADAMARD_EDGE = 'color="blue"'


def _output_label(d: ZxcfDiagram, v: int) -> str:
    parts = [f"o{v}"]
    if d.phase[v]:
        parts.append(PHASE_LABELS[d.phase[v]])
    if d.had[v]:
        parts.append("H")
    return "\\n".join(parts)


def render_dot(d: ZxcfDiagram) -> str:
    """Deterministic DOT text: inputs in one rank, outputs in another."""
    try:
        problems = validate_zxcf(d)
    except (IndexError, TypeError, ValueError):
        problems = []
    bad_nodes = {w for p in problems for w in p.where if isinstance(w, int)}
    ni = d.n - d.k
    lines = [
        "graph zxcf {",
        "  rankdir=LR;",
        '  node [shape=circle, style=filled, fillcolor="palegreen"];',
    ]
    for p in problems:
        lines.append(f"  // violation {p}")
    if ni:
        lines.append("  subgraph inputs {")
        lines.append("    rank=same;")
        for i in range(ni):
            lines.append(f'    i{i} [label="i{i}"];')
        lines.append("  }")
    if d.n:
        lines.append("  subgraph outputs {")
        lines.append("    rank=same;")
        for v in range(d.n):
            extra = ', color="red", penwidth=2' if v in bad_nodes and problems else ""
            lines.append(f'    o{v} [label="{_output_label(d, v)}"{extra}];')
        lines.append("  }")
    for i, row in enumerate(d.m):
        for j, bit in enumerate(row):
            if bit:
                lines.append(f"  i{i} -- o{j} [{HADAMARD_EDGE}];")
    for u, v in d.a:
        lines.append(f"  o{u} -- o{v} [{HADAMARD_EDGE}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
