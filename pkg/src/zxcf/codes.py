"""Stabilizer tableaus of well-known codes, rows exactly as usually printed."""

from __future__ import annotations

from itertools import permutations

from . import gf2
from .canonical import ZxcfDiagram
from .tableau import StabilizerTableau

SHOR = """\
ZZIIIIIII
ZIZIIIIII
IIIZZIIII
IIIZIZIII
IIIIIIZZI
IIIIIIZIZ
XXXXXXIII
XXXIIIXXX
"""

STEANE = """\
IIIXXXX
IXXIIXX
XIXIXIX
IIIZZZZ
IZZIIZZ
ZIZIZIZ
"""

FIVE_QUBIT = """\
XZZXI
IXZZX
XIXZZ
ZXIXZ
"""

CODES = {"shor": SHOR, "steane": STEANE, "five": FIVE_QUBIT}


def code(name: str) -> StabilizerTableau:
    return StabilizerTableau.from_strings(CODES[name].split())


# structural checks on canonical diagrams of the codes above

def diagram_graph(d: ZxcfDiagram) -> tuple[int, set[frozenset[int]]]:
    """All spiders as one simple graph: inputs ``0..n-k-1``, then outputs."""
    ni = d.n - d.k
    edges = {frozenset((i, ni + j)) for i, row in enumerate(d.m) for j, b in enumerate(row) if b}
    edges |= {frozenset((ni + u, ni + v)) for u, v in d.a}
    return ni + d.n, edges


def isomorphic(n1: int, e1: set[frozenset[int]], n2: int, e2: set[frozenset[int]]) -> bool:
    """Brute-force graph isomorphism; fine up to about nine vertices."""
    if n1 != n2 or len(e1) != len(e2):
        return False
    deg1 = sorted(sum(v in e for e in e1) for v in range(n1))
    deg2 = sorted(sum(v in e for e in e2) for v in range(n2))
    if deg1 != deg2:
        return False
    for perm in permutations(range(n1)):
        if all(frozenset(perm[v] for v in e) in e2 for e in e1):
            return True
    return False


def cube_graph(dim: int = 3) -> tuple[int, set[frozenset[int]]]:
    edges = {frozenset((v, v ^ (1 << b))) for v in range(1 << dim) for b in range(dim)}
    return 1 << dim, edges


def is_cube(d: ZxcfDiagram) -> bool:
    return isomorphic(*diagram_graph(d), *cube_graph(3))


def output_sectors(d: ZxcfDiagram) -> list[list[int]]:
    """Connected components of the outputs once inputs are removed."""
    seen: set[int] = set()
    out = []
    for s in range(d.n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in gf2.bits(d.adj[v]):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(sorted(comp))
    return sorted(out)


def sector_signature(d: ZxcfDiagram, sector: list[int]) -> tuple:
    """Shape of a sector up to relabelling: sorted (had, phase, degree, input links) per output."""
    return tuple(sorted(
        (d.had[v], d.phase[v], d.adj[v].bit_count(), sum(row[v] for row in d.m)) for v in sector
    ))


def relabel_outputs(d: ZxcfDiagram, perm: list[int]) -> ZxcfDiagram:
    """Diagram with output ``v`` renamed ``perm[v]``; inputs unchanged."""
    n = d.n
    m = [[0] * n for _ in d.m]
    for i, row in enumerate(d.m):
        for v, b in enumerate(row):
            m[i][perm[v]] = b
    a = [(perm[u], perm[v]) for u, v in d.a]
    phase = [0] * n
    had = [False] * n
    for v in range(n):
        phase[perm[v]] = d.phase[v]
        had[perm[v]] = d.had[v]
    return ZxcfDiagram(n, d.k, m, a, phase, had)


def cyclic_invariant(d: ZxcfDiagram) -> bool:
    shift = [(v + 1) % d.n for v in range(d.n)]
    return relabel_outputs(d, shift) == d
