"""The ZX canonical form of a Clifford encoder.

A diagram has ``n - k`` input spiders and ``n`` output spiders. Inputs only
connect to outputs (matrix ``m``); outputs connect among themselves (edge
list ``a``) and carry a quarter-turn phase and an optional Hadamard on their
free edge. Every internal edge is a Hadamard edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Union

from . import gf2
from .circuit import EncoderCircuit, choi_tableau, synthesize_encoder
from .graphform import (
    IDENTITY,
    GraphForm,
    enforce_hadamard_rule,
    from_tableau,
    graph_tableau,
    legal,
    local_complement_inplace,
)
from .pauli import PauliString
from .tableau import StabilizerTableau, eliminate_columns, group_canonical


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class ZxcfDiagram:
    n: int
    k: int
    m: tuple[tuple[int, ...], ...]
    a: tuple[tuple[int, int], ...]
    phase: tuple[int, ...]
    had: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(tuple(int(b) for b in row) for row in self.m))
        object.__setattr__(self, "a", tuple(sorted((min(e), max(e)) for e in self.a)))
        object.__setattr__(self, "phase", tuple(int(p) for p in self.phase))
        object.__setattr__(self, "had", tuple(bool(h) for h in self.had))

    @property
    def num_inputs(self) -> int:
        return self.n - self.k

    @property
    def m_rows(self) -> list[int]:
        return gf2.from_matrix(self.m)

    @property
    def adj(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.a:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    @property
    def pivots(self) -> list[int]:
        return [row.index(1) for row in self.m if 1 in row]

    @classmethod
    def from_bits(cls, n, k, m_rows, adj, phase, had) -> ZxcfDiagram:
        edges = [(u, v) for u in range(n) for v in gf2.bits(adj[u]) if u < v]
        return cls(n, k, tuple(map(tuple, gf2.to_matrix(m_rows, n))), tuple(edges), tuple(phase), tuple(had))

    @classmethod
    def identity(cls, n: int) -> ZxcfDiagram:
        return cls.from_bits(n, 0, [1 << j for j in range(n)], [0] * n, [0] * n, [False] * n)


@dataclass(frozen=True)
class RuleViolation:
    rule: str  # "structure", "hadamard", "rref" or "clifford"
    where: tuple = field(default=())
    message: str = ""

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


def _structure(d: ZxcfDiagram) -> list[RuleViolation]:
    out = []
    ni = d.n - d.k
    if d.n < 0 or not 0 <= d.k <= d.n:
        return [RuleViolation("structure", (), f"bad sizes n={d.n} k={d.k}")]
    if len(d.m) != ni:
        out.append(RuleViolation("structure", (), f"m has {len(d.m)} rows, expected {ni}"))
    for i, row in enumerate(d.m):
        if len(row) != d.n or any(b not in (0, 1) for b in row):
            out.append(RuleViolation("structure", (i,), f"row {i} of m is not a 0/1 row of length {d.n}"))
    if len(d.phase) != d.n or any(not 0 <= p < 4 for p in d.phase):
        out.append(RuleViolation("structure", (), "phase must hold n values in 0..3"))
    if len(d.had) != d.n:
        out.append(RuleViolation("structure", (), "had must hold n booleans"))
    seen = set()
    for u, v in d.a:
        if not (0 <= u < v < d.n):
            out.append(RuleViolation("structure", (u, v), f"bad output edge ({u},{v})"))
        elif (u, v) in seen:
            out.append(RuleViolation("structure", (u, v), f"repeated output edge ({u},{v})"))
        seen.add((u, v))
    return out


def validate_zxcf(d: ZxcfDiagram) -> list[RuleViolation]:
    """All violated rules; an empty list means ``d`` is a ZX canonical form."""
    out = _structure(d)
    if out:
        return out
    n = d.n
    rows = d.m_rows
    adj = d.adj
    col_mask = 0
    for r in rows:
        col_mask |= r

    for v in range(n):
        if not d.had[v]:
            continue
        if d.phase[v] % 2:
            out.append(RuleViolation("hadamard", (v,), f"output {v} has a Hadamard and phase {d.phase[v]}"))
        for u in gf2.bits(adj[v] & ((1 << v) - 1)):
            out.append(RuleViolation("hadamard", (v, u), f"Hadamard output {v} is joined to lower output {u}"))
        if (col_mask >> v) & 1:
            ins = [i for i, r in enumerate(rows) if (r >> v) & 1]
            out.append(RuleViolation("hadamard", (v,), f"Hadamard output {v} is joined to inputs {ins}"))

    pivots = []
    last = -1
    for i, r in enumerate(rows):
        if not r:
            out.append(RuleViolation("rref", (i,), f"input {i} has no edges (m is rank deficient)"))
            continue
        p = (r & -r).bit_length() - 1
        if p <= last:
            out.append(RuleViolation("rref", (i,), f"row {i} leading column {p} is not right of the previous one"))
        last = max(last, p)
        pivots.append(p)
        others = [j for j, s in enumerate(rows) if j != i and (s >> p) & 1]
        if others:
            out.append(RuleViolation("rref", (i, p), f"pivot column {p} also used by rows {others}"))
    if not out or all(v.rule != "rref" for v in out):
        if gf2.rank(rows) != len(rows):
            out.append(RuleViolation("rref", (), "m does not have full row rank"))

    pset = set(pivots)
    for p in pivots:
        if d.phase[p]:
            out.append(RuleViolation("clifford", (p,), f"pivot {p} has phase {d.phase[p]}"))
        if d.had[p]:
            out.append(RuleViolation("clifford", (p,), f"pivot {p} has a Hadamard"))
    for u, v in d.a:
        if u in pset and v in pset:
            out.append(RuleViolation("clifford", (u, v), f"pivot-pivot edge ({u},{v})"))
    return out


def is_valid(d: ZxcfDiagram) -> bool:
    return not validate_zxcf(d)


Source = Union[StabilizerTableau, EncoderCircuit]


def to_encoder(source: Source) -> EncoderCircuit:
    if isinstance(source, StabilizerTableau):
        return synthesize_encoder(source)
    if isinstance(source, EncoderCircuit):
        return source
    raise TypeError(f"cannot canonicalize {type(source).__name__}")


def canonicalize(source: Source, check: bool = False) -> ZxcfDiagram:
    """Canonical diagram of a tableau (synthesized to an encoder first) or an encoder.

    With ``check`` the intermediate invariants of every step are asserted.
    """
    enc = to_encoder(source)
    n, ni = enc.n, len(enc.inputs)
    g = from_tableau(choi_tableau(enc), num_inputs=ni)
    g = enforce_hadamard_rule(g)
    return _canonical_from_graph(g, n, n - ni, check)


def _canonical_from_graph(g: GraphForm, n: int, k: int, check: bool) -> ZxcfDiagram:
    ni = n - k
    in_mask = (1 << ni) - 1
    adj = list(g.adj)
    locs = list(g.locals)

    # unitaries on the inputs do not change the image: drop them
    for i in range(ni):
        adj[i] &= ~in_mask
        locs[i] = IDENTITY

    m_rows = [adj[i] >> ni for i in range(ni)]
    reduced, pivots = gf2.rref(m_rows)
    if len(reduced) != ni:
        raise DiagramError("input spiders are isolated or dependent: the map is not an isometry")
    for v in range(ni, ni + n):
        adj[v] &= ~in_mask
    for i, r in enumerate(reduced):
        adj[i] = r << ni
        for j in gf2.bits(r):
            adj[ni + j] |= 1 << i

    # local complementation at a matched input adds S to each of its neighbours
    # and leaves m untouched; repeat until the pivot phase is gone
    for i, p in enumerate(pivots):
        for _ in range(4):
            if locs[ni + p].phase == 0:
                break
            local_complement_inplace(adj, locs, i)
            locs[i] = IDENTITY
        else:
            raise AssertionError(f"pivot {p} kept its phase")
    if check:
        assert [adj[i] >> ni for i in range(ni)] == reduced
        assert all(c.is_legal for c in locs[ni:])

    out_adj = [adj[ni + v] >> ni for v in range(n)]
    phase = [locs[ni + v].phase for v in range(n)]
    had = [locs[ni + v].had for v in range(n)]

    for i in range(ni):
        for j in range(i + 1, ni):
            if (out_adj[pivots[i]] >> pivots[j]) & 1:
                toggle_row_product(out_adj, phase, reduced[i], reduced[j])
                if check:
                    assert not (out_adj[pivots[i]] >> pivots[j]) & 1
                    assert phase[pivots[i]] == phase[pivots[j]] == 0

    d = ZxcfDiagram.from_bits(n, k, reduced, out_adj, phase, had)
    if check:
        bad = validate_zxcf(d)
        assert not bad, bad
    return d


def toggle_row_product(out_adj: list[int], phase: list[int], r1: int, r2: int) -> None:
    """Toggle every output pair drawn from ``r1 x r2`` once per occurrence.

    Pairs met twice cancel and a pair ``(w, w)`` is a ``Z`` on ``w``. On the
    encoder this is the diagonal unitary ``(-1)^{(r1.c)(r2.c)}``, a function
    of the input-visible parities only, so the image does not move. The two
    rows of ``m`` are left as they are.
    """
    for a in gf2.bits(r1):
        out_adj[a] ^= r2
    for b in gf2.bits(r2):
        out_adj[b] ^= r1
    for w in gf2.bits(r1 & r2):
        phase[w] = (phase[w] + 2) % 4


def choi_graph(d: ZxcfDiagram) -> GraphForm:
    """Decorated graph state of the diagram with its inputs bent to outputs."""
    ni = d.n - d.k
    size = ni + d.n
    adj = [0] * size
    for i, r in enumerate(d.m_rows):
        adj[i] = r << ni
        for j in gf2.bits(r):
            adj[ni + j] |= 1 << i
    for v, row in enumerate(d.adj):
        adj[ni + v] |= row << ni
    locs = [IDENTITY] * ni + [legal(h, p) for h, p in zip(d.had, d.phase)]
    return GraphForm(size, tuple(adj), tuple(locs), ni)


def decompile(d: ZxcfDiagram) -> StabilizerTableau:
    """Stabilizer tableau of the code the diagram encodes (in group-canonical form)."""
    bad = validate_zxcf(d)
    if bad:
        raise DiagramError("invalid diagram: " + "; ".join(map(str, bad)))
    return code_tableau(d)


def code_tableau(d: ZxcfDiagram) -> StabilizerTableau:
    """Like :func:`decompile` but only needs the diagram to be an isometry."""
    ni = d.n - d.k
    g = choi_graph(d)
    in_mask = (1 << ni) - 1
    _, rest = eliminate_columns(graph_tableau(g).rows, in_mask, in_mask)
    if len(rest) != d.k:
        raise DiagramError("diagram is not an isometry")
    rows = tuple(PauliString(d.n, r.x >> ni, r.z >> ni, r.iota) for r in rest)
    return group_canonical(StabilizerTableau(d.n, rows))


def strip_locals(d: ZxcfDiagram) -> ZxcfDiagram:
    """Drop all output phases and Hadamards, keeping the semi-bipartite graph."""
    bad = validate_zxcf(d)
    if bad:
        raise DiagramError("invalid diagram: " + "; ".join(map(str, bad)))
    return ZxcfDiagram(d.n, d.k, d.m, d.a, (0,) * d.n, (False,) * d.n)


def enumerate_zxcf(n: int, k: int) -> Iterator[ZxcfDiagram]:
    """Every ZX canonical form with ``n`` outputs and ``n - k`` inputs, once each.

    Outputs are placed left to right as pivots (matched to the next input,
    joined to any earlier non-pivots) or non-pivots (joined to any earlier
    inputs, pivots and non-pivots; six locals when isolated so far, else the
    four phases).
    """
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"invalid sizes n={n} k={k}")
    ni = n - k
    m_rows = [0] * ni
    adj = [0] * n
    phase = [0] * n
    had = [False] * n

    def place(j: int, pivots: list[int], nonpivots: list[int]) -> Iterator[ZxcfDiagram]:
        if j == n:
            yield ZxcfDiagram.from_bits(n, k, list(m_rows), list(adj), list(phase), list(had))
            return
        if len(pivots) < ni:
            i = len(pivots)
            m_rows[i] |= 1 << j
            for subset in range(1 << len(nonpivots)):
                _set_edges(adj, j, [u for b, u in enumerate(nonpivots) if (subset >> b) & 1])
                yield from place(j + 1, pivots + [j], nonpivots)
                _set_edges(adj, j, [])
            m_rows[i] &= ~(1 << j)
        if len(nonpivots) < k:
            p, o = len(pivots), len(nonpivots)
            for subset in range(1 << (2 * p + o)):
                ins = [i for i in range(p) if (subset >> i) & 1]
                nbrs = [u for b, u in enumerate(pivots + nonpivots) if (subset >> (p + b)) & 1]
                for i in ins:
                    m_rows[i] |= 1 << j
                _set_edges(adj, j, nbrs)
                locals_ = ((False, 0), (False, 1), (False, 2), (False, 3))
                if subset == 0:
                    locals_ += ((True, 0), (True, 2))
                for h, ph in locals_:
                    had[j], phase[j] = h, ph
                    yield from place(j + 1, pivots, nonpivots + [j])
                had[j], phase[j] = False, 0
                _set_edges(adj, j, [])
                for i in ins:
                    m_rows[i] &= ~(1 << j)

    yield from place(0, [], [])


def _set_edges(adj: list[int], j: int, nbrs: list[int]) -> None:
    for u in gf2.bits(adj[j]):
        adj[u] &= ~(1 << j)
    adj[j] = 0
    for u in nbrs:
        adj[u] |= 1 << j
        adj[j] |= 1 << u


def to_json(d: ZxcfDiagram) -> str:
    obj = {
        "n": d.n,
        "k": d.k,
        "m": [list(row) for row in d.m],
        "a": [list(e) for e in d.a],
        "phase": list(d.phase),
        "had": list(d.had),
    }
    return json.dumps(obj)


def from_json(text: str | dict) -> ZxcfDiagram:
    obj = json.loads(text) if isinstance(text, str) else text
    try:
        d = ZxcfDiagram(int(obj["n"]), int(obj["k"]), obj["m"], obj["a"], obj["phase"], obj["had"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram JSON: {exc}") from None
    bad = _structure(d)
    if bad:
        raise DiagramError("; ".join(map(str, bad)))
    return d
