"""Dense linear-algebra ground truth for small instances.

Qubit 0 is the most significant bit of a basis index everywhere in this module.
"""

from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from .circuit import EncoderCircuit
from .graphform import GraphForm, LocalClifford, all_locals
from .pauli import PauliString
from .tableau import StabilizerTableau

if TYPE_CHECKING:
    from .canonical import ZxcfDiagram

TOL = 1e-9
MAX_QUBITS = 12

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
HAD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PHASE = np.diag([1, 1j])
GATE_MATRICES = {"H": HAD, "S": PHASE, "X": X, "Z": Z}


class OracleSizeError(ValueError):
    pass


def _cap(n: int, limit: int = MAX_QUBITS) -> None:
    if n > limit:
        raise OracleSizeError(f"{n} qubits exceeds the dense cap of {limit}")


def pauli_matrix(p: PauliString) -> np.ndarray:
    _cap(p.n)
    out = np.array([[1]], dtype=complex)
    for q in range(p.n):
        f = I2
        if (p.x >> q) & 1:
            f = X
        if (p.z >> q) & 1:
            f = f @ Z
        out = np.kron(out, f)
    return (1j ** p.iota) * out


def tableau_projector(t: StabilizerTableau) -> np.ndarray:
    _cap(t.n)
    dim = 2 ** t.n
    proj = np.eye(dim, dtype=complex)
    for r in t.rows:
        proj = proj @ (np.eye(dim) + pauli_matrix(r)) / 2
    return proj


def _apply_1q(state: np.ndarray, u: np.ndarray, q: int, n: int) -> np.ndarray:
    psi = state.reshape((2 ** q, 2, -1))
    return np.einsum("ab,ibj->iaj", u, psi).reshape(state.shape)


def _apply_gate(state: np.ndarray, name: str, qubits, n: int) -> np.ndarray:
    if name in GATE_MATRICES:
        return _apply_1q(state, GATE_MATRICES[name], qubits[0], n)
    a, b = qubits
    psi = state.reshape((2,) * n + (-1,)).copy()
    sel = [slice(None)] * (n + 1)
    sel[a] = 1
    if name == "CZ":
        sel[b] = 1
        psi[tuple(sel)] *= -1
    elif name == "CX":
        sub = psi[tuple(sel)]
        bt = b - 1 if b > a else b
        psi[tuple(sel)] = np.flip(sub, axis=bt)
    else:
        raise ValueError(f"unknown gate {name!r}")
    return psi.reshape(state.shape)


def circuit_to_isometry(e: EncoderCircuit) -> np.ndarray:
    """Columns are the circuit applied to each input basis state, ancillas at |0>."""
    n = e.n
    _cap(n)
    ni = len(e.inputs)
    cols = np.zeros((2 ** n, 2 ** ni), dtype=complex)
    for j in range(2 ** ni):
        idx = 0
        for pos, w in enumerate(e.inputs):
            if (j >> (ni - 1 - pos)) & 1:
                idx |= 1 << (n - 1 - w)
        cols[idx, j] = 1
    for g in e.circuit.gates:
        cols = _apply_gate(cols, g.name, g.qubits, n)
    return cols


@lru_cache(maxsize=None)
def _local_matrices() -> dict[LocalClifford, np.ndarray]:
    """Dense unitary for every local, found by matching conjugation actions."""
    out: dict[LocalClifford, np.ndarray] = {}
    frontier = [np.eye(2, dtype=complex)]
    seen: list[np.ndarray] = []
    targets = {c: None for c in all_locals()}
    paulis = {(1, 0): X, (0, 1): Z, (1, 1): 1j * X @ Z}

    def action(u):
        res = []
        for p in (X, Z):
            img = u @ p @ u.conj().T
            for (a, b), q in paulis.items():
                for s in (0, 1):
                    if np.allclose(img, (-1) ** s * q):
                        res.append(((a, b), s))
        return res

    while frontier and len(out) < len(targets):
        nxt = []
        for u in frontier:
            if any(abs(abs(np.vdot(u.ravel(), v.ravel())) - 2) < 1e-9 for v in seen):
                continue
            seen.append(u)
            (xb, sx), (zb, sz) = action(u)
            out[LocalClifford((xb[0], xb[1], zb[0], zb[1]), sx, sz)] = u
            nxt += [HAD @ u, PHASE @ u]
        frontier = nxt
    return out


def local_matrix(c: LocalClifford) -> np.ndarray:
    return _local_matrices()[c]


def graph_state(g: GraphForm) -> np.ndarray:
    """Dense vector of ``(locals) * prod CZ |+>^m``."""
    m = g.m
    _cap(m, 16)
    idx = np.arange(2 ** m)
    bits = [(idx >> (m - 1 - v)) & 1 for v in range(m)]
    sign = np.zeros(2 ** m, dtype=int)
    for u, v in g.edges():
        sign ^= bits[u] & bits[v]
    psi = ((-1.0) ** sign).astype(complex) / np.sqrt(2 ** m)
    for v, c in enumerate(g.locals):
        psi = _apply_1q(psi, local_matrix(c), v, m)
    return psi


def zxcf_to_isometry(d: ZxcfDiagram) -> np.ndarray:
    """Contract the diagram as a tensor network of phased Z-spiders.

    Every spider has exactly one free leg, so it is labelled by that leg's
    index; Hadamard edges are 2x2 Hadamard matrices between spider labels and
    output Hadamards map spider labels to output labels.
    """
    n, ni = d.n, d.n - d.k
    _cap(n, 10)
    letters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    ins = letters[:ni]
    spid = letters[ni:ni + n]
    outs = letters[ni + n:ni + 2 * n]
    operands: list = []
    terms: list[str] = []
    for v in range(n):
        operands.append(np.array([1, 1j ** d.phase[v]]))
        terms.append(spid[v])
    h2 = HAD * np.sqrt(2)  # normalisation is irrelevant for images
    for i, row in enumerate(d.m):
        for j, bit in enumerate(row):
            if bit:
                operands.append(h2)
                terms.append(ins[i] + spid[j])
    for u, v in d.a:
        operands.append(h2)
        terms.append(spid[u] + spid[v])
    for v in range(n):
        operands.append(HAD if d.had[v] else I2)
        terms.append(outs[v] + spid[v])
    for i in range(ni):
        # input spider: copy tensor whose free leg is the input itself
        operands.append(np.ones(2))
        terms.append(ins[i])
    expr = ",".join(terms) + "->" + outs + ins
    tensor = np.einsum(expr, *operands, optimize="greedy")
    return tensor.reshape(2 ** n, 2 ** ni)


def orthonormal_basis(a: np.ndarray, tol: float = TOL) -> np.ndarray:
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    if s.size == 0:
        return u[:, :0]
    r = int(np.sum(s > tol * max(1.0, s[0])))
    return u[:, :r]


def image_rank(a: np.ndarray) -> int:
    return orthonormal_basis(a).shape[1]


def images_equal(a: np.ndarray, b: np.ndarray, tol: float = TOL) -> bool:
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    qa, qb = orthonormal_basis(a), orthonormal_basis(b)
    if qa.shape[1] != qb.shape[1]:
        return False
    ra = qb - qa @ (qa.conj().T @ qb)
    rb = qa - qb @ (qb.conj().T @ qa)
    return bool(np.abs(ra).max(initial=0) < tol and np.abs(rb).max(initial=0) < tol)


def states_equal(a: np.ndarray, b: np.ndarray, tol: float = TOL) -> bool:
    """Equality of normalised state vectors up to global phase."""
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    return bool(abs(abs(np.vdot(a, b)) - 1) < tol)
