"""Decorated graph states: a graph state with one single-qubit Clifford per vertex.

The state of a :class:`GraphForm` is ``(tensor of locals) * prod CZ_e |+...+>``
up to global phase. Rewrites return new values and never change the state;
the oracle module checks this densely.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache

from . import gf2
from .pauli import PauliString, mul_phase, popcount
from .tableau import StabilizerTableau, TableauError, check_tableau


@dataclass(frozen=True)
class LocalClifford:
    """Single-qubit Clifford modulo global phase, given by its conjugation action.

    ``symplectic = (a, b, c, d)`` means ``X -> X^a Z^b`` and ``Z -> X^c Z^d``
    as letters (``Y`` when both bits are set); ``sx`` and ``sz`` are the sign
    bits of those images.
    """

    symplectic: tuple[int, int, int, int] = (1, 0, 0, 1)
    sx: int = 0
    sz: int = 0

    def __post_init__(self):
        a, b, c, d = self.symplectic
        if (a * d + b * c) % 2 != 1:
            raise ValueError(f"singular symplectic part {self.symplectic}")

    def conj(self, x: int, z: int, t: int) -> tuple[int, int, int]:
        """Image of the one-qubit operator ``i^t X^x Z^z``."""
        a, b, c, d = self.symplectic
        rx, rz, rt = 0, 0, t
        if x:
            rx, rz, rt = a, b, rt + 2 * self.sx + a * b
        if z:
            rt = mul_phase(rx, rz, rt, c, d, 2 * self.sz + c * d)
            rx ^= c
            rz ^= d
        return rx, rz, rt & 3

    def __matmul__(self, other: LocalClifford) -> LocalClifford:
        """``self @ other`` is the operator product: ``other`` acts first."""
        xx, xz, xt = self.conj(*other.conj(1, 0, 0))
        zx, zz, zt = self.conj(*other.conj(0, 1, 0))
        return LocalClifford((xx, xz, zx, zz), ((xt - xx * xz) & 3) >> 1, ((zt - zx * zz) & 3) >> 1)

    @property
    def is_legal(self) -> bool:
        return self in _LEGAL_INDEX

    @property
    def had(self) -> bool:
        return _LEGAL_INDEX[self][0]

    @property
    def phase(self) -> int:
        return _LEGAL_INDEX[self][1]

    def __repr__(self) -> str:
        return f"LocalClifford({local_name(self)})"


IDENTITY = LocalClifford()
H = LocalClifford((0, 1, 1, 0))
S = LocalClifford((1, 1, 0, 1))
PAULI_X = LocalClifford((1, 0, 0, 1), 0, 1)
PAULI_Z = LocalClifford((1, 0, 0, 1), 1, 0)
PAULI_Y = LocalClifford((1, 0, 0, 1), 1, 1)
SQRT_X = H @ S @ H


def legal(had: bool, phase: int) -> LocalClifford:
    """``H^had S^phase``: the phase acts first, the Hadamard sits on the free edge."""
    out = IDENTITY
    for _ in range(phase % 4):
        out = S @ out
    return H @ out if had else out


_LEGAL_INDEX = {legal(h, p): (h, p) for h in (False, True) for p in ((0, 2) if h else (0, 1, 2, 3))}
LEGAL_SIX = tuple(_LEGAL_INDEX)
PAULIS = (IDENTITY, PAULI_X, PAULI_Z, PAULI_Y)


@lru_cache(maxsize=None)
def all_locals() -> tuple[LocalClifford, ...]:
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for c in frontier:
            for g in (H, S):
                d = g @ c
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    return tuple(sorted(seen, key=lambda c: (c.symplectic, c.sx, c.sz)))


def local_name(c: LocalClifford) -> str:
    if c in _LEGAL_INDEX:
        h, p = _LEGAL_INDEX[c]
        return ("H" if h else "") + ("", "S", "Z", "SZ")[p] or "I"
    return f"{c.symplectic}/{c.sx}{c.sz}"


@lru_cache(maxsize=None)
def split_local(c: LocalClifford) -> tuple[LocalClifford, bool] | None:
    """Write ``c = L @ X^e`` with ``L`` legal; ``None`` if ``c`` is not in a legal coset."""
    for e, p in ((False, IDENTITY), (True, PAULI_X)):
        cand = c @ p  # X is self-inverse up to phase
        if cand in _LEGAL_INDEX:
            return cand, e
    return None


# Fixed against the dense oracle: |G> = (SQRT_X^dagger on v, S on N(v)) |tau_v G>.
# The vertex factor is the only one of the 24 locals that works.
LC_VERTEX_FACTOR = H @ S @ S @ S @ H
LC_NEIGHBOUR_FACTOR = S


@dataclass(frozen=True)
class GraphForm:
    m: int
    adj: tuple[int, ...]
    locals: tuple[LocalClifford, ...]
    num_inputs: int = 0

    def __post_init__(self):
        adj = tuple(self.adj)
        locs = tuple(self.locals)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "locals", locs)
        if len(adj) != self.m or len(locs) != self.m:
            raise ValueError("adjacency/locals length does not match vertex count")
        full = (1 << self.m) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has an edge out of range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in gf2.bits(row):
                if not (adj[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v},{u})")
        if not 0 <= self.num_inputs <= self.m:
            raise ValueError("num_inputs out of range")

    @classmethod
    def from_edges(cls, m: int, edges, locals_=None, num_inputs: int = 0) -> GraphForm:
        adj = [0] * m
        for u, v in edges:
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
        if locals_ is None:
            locals_ = (IDENTITY,) * m
        return cls(m, tuple(adj), tuple(locals_), num_inputs)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.m) for v in gf2.bits(self.adj[u] >> (u + 1) << (u + 1))]

    def neighbours(self, v: int) -> int:
        return self.adj[v]

    def with_local(self, v: int, c: LocalClifford) -> GraphForm:
        locs = list(self.locals)
        locs[v] = c
        return replace(self, locals=tuple(locs))

    @property
    def is_legal(self) -> bool:
        return all(c.is_legal for c in self.locals)


def graph_tableau(g: GraphForm) -> StabilizerTableau:
    """Stabilizer generators ``C (X_v Z_N(v)) C^dagger`` of the decorated state."""
    rows = []
    for v in range(g.m):
        x = z = 0
        t = 0
        for u in range(g.m):
            if u == v:
                lx, lz, lt = g.locals[u].conj(1, 0, 0)
            elif (g.adj[v] >> u) & 1:
                lx, lz, lt = g.locals[u].conj(0, 1, 0)
            else:
                continue
            # one-qubit factors on distinct qubits multiply without reordering signs
            t += lt
            x |= lx << u
            z |= lz << u
        rows.append(PauliString(g.m, x, z, t))
    return StabilizerTableau(g.m, tuple(rows))


def _mul_row(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    return a[0] ^ b[0], a[1] ^ b[1], mul_phase(a[0], a[1], a[2], b[0], b[1], b[2])


def from_tableau(t: StabilizerTableau, num_inputs: int = 0) -> GraphForm:
    """Decorated graph form of a stabilizer state with all locals legal.

    Vertices with an ``X``-block pivot (picked from the highest index down)
    keep a phase; the rest carry a Hadamard. That choice makes every
    Hadamard vertex adjacent only to higher-numbered vertices.
    """
    check_tableau(t)
    m = t.n
    if t.k != m:
        raise TableauError(f"need a full-rank tableau (k == n), got k={t.k}, n={m}")
    rows = [(r.x, r.z, r.iota) for r in t.rows]

    done = 0
    had_mask = 0
    for col in range(m - 1, -1, -1):
        bit = 1 << col
        piv = next((i for i in range(done, m) if rows[i][0] & bit), None)
        if piv is None:
            had_mask |= bit
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        p = rows[done]
        for i in range(m):
            if i != done and rows[i][0] & bit:
                rows[i] = _mul_row(rows[i], p)
        done += 1

    keep = ~had_mask
    swapped = []
    for x, z, tt in rows:
        nx = (x & keep) | (z & had_mask)
        nz = (z & keep) | (x & had_mask)
        swapped.append((nx, nz, tt + 2 * popcount(x & z & had_mask)))
    rows = swapped

    by_vertex: list[tuple[int, int, int] | None] = [None] * m
    pending = list(rows)
    for v in range(m):
        bit = 1 << v
        piv = next((i for i, r in enumerate(pending) if r[0] & bit), None)
        if piv is None:
            raise AssertionError("X block not invertible after Hadamards")
        p = pending.pop(piv)
        pending = [_mul_row(r, p) if r[0] & bit else r for r in pending]
        for u in range(v):
            r = by_vertex[u]
            if r[0] & bit:
                by_vertex[u] = _mul_row(r, p)
        by_vertex[v] = p

    adj = [0] * m
    locs = []
    for v, (x, z, tt) in enumerate(by_vertex):
        bit = 1 << v
        assert x == bit
        diag = (z >> v) & 1
        negative = ((tt - diag) & 3) == 2
        adj[v] = z & ~bit
        if had_mask & bit:
            if diag:
                raise AssertionError(f"Hadamard vertex {v} picked up an S phase")
            locs.append(legal(True, 2 if negative else 0))
        else:
            locs.append(legal(False, diag + (2 if negative else 0)))
    return GraphForm(m, tuple(adj), tuple(locs), num_inputs)


def push_paulis(g: GraphForm) -> GraphForm:
    """Absorb Pauli factors of legal-coset locals.

    ``Z`` factors stay as phase; an ``X`` on ``v`` moves to ``Z`` on every
    neighbour (``X_v |G> = Z_N(v) |G>``). Vertices whose local lies outside
    the legal cosets are left for :func:`normalize_local`.
    """
    locs = list(g.locals)
    for v in range(g.m):
        split = split_local(locs[v])
        if split is None:
            continue
        base, has_x = split
        locs[v] = base
        if has_x:
            for u in gf2.bits(g.adj[v]):
                locs[u] = locs[u] @ PAULI_Z
    for v in range(g.m):
        split = split_local(locs[v])
        if split is not None:
            locs[v] = split[0]
    return replace(g, locals=tuple(locs))


def local_complement_inplace(adj: list[int], locs: list[LocalClifford], v: int) -> None:
    nb = adj[v]
    for u in gf2.bits(nb):
        adj[u] ^= nb & ~(1 << u)
        locs[u] = locs[u] @ LC_NEIGHBOUR_FACTOR
    locs[v] = locs[v] @ LC_VERTEX_FACTOR


def local_complement(g: GraphForm, v: int) -> GraphForm:
    """Toggle all edges inside N(v); neighbours gain ``S``, ``v`` gains a root of ``X``."""
    if not 0 <= v < g.m:
        raise IndexError(v)
    adj, locs = list(g.adj), list(g.locals)
    local_complement_inplace(adj, locs, v)
    return GraphForm(g.m, tuple(adj), tuple(locs), g.num_inputs)


# Fixed against the dense oracle (both endpoints of the pivoted edge): together
# with the self-pair Z the endpoints end up with a bare Hadamard.
PIVOT_ENDPOINT_FACTOR = PAULI_Z @ H


def pivot_phi(g: GraphForm, v1: int, v2: int) -> GraphForm:
    """Pivot about the edge ``(v1, v2)``.

    Every pair drawn from ``N[v1] x N[v2]`` (closed neighbourhoods) is toggled
    once per occurrence, so pairs met twice are untouched and a pair
    ``(w, w)`` becomes a ``Z`` on ``w``. Both endpoints then gain a
    Hadamard-type factor. This is a state identity only for adjacent
    endpoints; non-adjacent ones raise ``ValueError``.
    """
    if v1 == v2:
        raise ValueError("pivot needs two distinct vertices")
    if not (g.adj[v1] >> v2) & 1:
        raise ValueError(f"vertices {v1} and {v2} are not adjacent")
    n1 = g.adj[v1] | (1 << v1)
    n2 = g.adj[v2] | (1 << v2)
    adj = list(g.adj)
    for a in gf2.bits(n1):
        adj[a] ^= n2
    for b in gf2.bits(n2):
        adj[b] ^= n1
    locs = list(g.locals)
    # a self-pair (w, w) flips the diagonal bit twice above; it acts as Z on w
    for w in gf2.bits(n1 & n2):
        locs[w] = locs[w] @ PAULI_Z
    locs[v1] = locs[v1] @ PIVOT_ENDPOINT_FACTOR
    locs[v2] = locs[v2] @ PIVOT_ENDPOINT_FACTOR
    return GraphForm(g.m, tuple(adj), tuple(locs), g.num_inputs)


def normalize_local(g: GraphForm, v: int) -> GraphForm:
    """Make the local at ``v`` one of the legal six, keeping the state."""
    steps = NORMALIZE_TABLE[g.locals[v]]
    for _ in range(steps):
        g = local_complement(g, v)
    base, has_x = split_local(g.locals[v])
    locs = list(g.locals)
    locs[v] = base
    if has_x:
        for u in gf2.bits(g.adj[v]):
            locs[u] = locs[u] @ PAULI_Z
    return replace(g, locals=tuple(locs))


def _normalize_table() -> dict[LocalClifford, int]:
    table = {}
    for c in all_locals():
        for steps in range(4):
            d = c
            for _ in range(steps):
                d = d @ LC_VERTEX_FACTOR
            if split_local(d) is not None:
                table[c] = steps
                break
    return table


NORMALIZE_TABLE = _normalize_table()


def hadamard_violations(g: GraphForm) -> list[tuple[int, int]]:
    """``(v, u)`` pairs where Hadamard vertex ``v`` has a lower neighbour ``u``."""
    out = []
    for v, c in enumerate(g.locals):
        if c.is_legal and c.had:
            low = g.adj[v] & ((1 << v) - 1)
            out += [(v, u) for u in gf2.bits(low)]
    return out


def enforce_hadamard_rule(g: GraphForm, max_rounds: int | None = None) -> GraphForm:
    """Move Hadamards so that no Hadamard vertex has a lower-numbered neighbour.

    Pivots along a violating edge ``(u, v)``, ``u < v``, hand the Hadamard of
    ``v`` down to ``u``. When ``u`` carries an odd phase a pivot would leave
    an illegal local there, so the form is rebuilt from its stabilizers,
    whose reconstruction satisfies the rule outright.
    """
    if not g.is_legal:
        raise ValueError("enforce_hadamard_rule needs legal locals")
    if max_rounds is None:
        max_rounds = g.m * g.m + 1
    for _ in range(max_rounds):
        bad = hadamard_violations(g)
        if not bad:
            return g
        v, u = min(bad, key=lambda p: (p[1], p[0]))
        cu = g.locals[u]
        if not cu.had and cu.phase % 2:
            return from_tableau(graph_tableau(g), g.num_inputs)
        g = push_paulis(pivot_phi(g, u, v))
        if not g.is_legal:
            return from_tableau(graph_tableau(g), g.num_inputs)
    raise RuntimeError(f"Hadamard rule not reached after {max_rounds} pivots")
