"""Clifford circuits, encoder synthesis from tableaus, and Choi tableaus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .pauli import PauliString
from .tableau import StabilizerTableau, check_tableau

ONE_QUBIT = ("H", "S", "X", "Z")
TWO_QUBIT = ("CX", "CZ")


class CircuitError(ValueError):
    pass


class Gate(NamedTuple):
    name: str
    qubits: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.name, *map(str, self.qubits)])


def _check_gate(g: Gate, wires: int) -> None:
    if g.name in ONE_QUBIT:
        arity = 1
    elif g.name in TWO_QUBIT:
        arity = 2
    else:
        raise CircuitError(f"unknown gate {g.name!r}")
    if len(g.qubits) != arity:
        raise CircuitError(f"{g.name} takes {arity} wire(s), got {len(g.qubits)}")
    for q in g.qubits:
        if not 0 <= q < wires:
            raise CircuitError(f"wire {q} out of range for {wires} wires")
    if arity == 2 and g.qubits[0] == g.qubits[1]:
        raise CircuitError(f"{g.name} needs two distinct wires")


@dataclass(frozen=True)
class CliffordCircuit:
    wires: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        gates = tuple(Gate(g[0], tuple(g[1])) for g in self.gates)
        for g in gates:
            _check_gate(g, self.wires)
        object.__setattr__(self, "gates", gates)

    def __add__(self, other: CliffordCircuit) -> CliffordCircuit:
        if other.wires != self.wires:
            raise CircuitError("wire count mismatch")
        return CliffordCircuit(self.wires, self.gates + other.gates)

    def inverse(self) -> CliffordCircuit:
        out: list[Gate] = []
        for g in reversed(self.gates):
            if g.name == "S":
                # S^-1 = S Z
                out += [g, Gate("Z", g.qubits)]
            else:
                out.append(g)
        return CliffordCircuit(self.wires, tuple(out))


@dataclass(frozen=True)
class EncoderCircuit:
    """Isometry from ``len(inputs)`` qubits onto ``circuit.wires`` qubits.

    Wires not listed in ``inputs`` are ancillas prepared in |0>.
    """

    circuit: CliffordCircuit
    inputs: tuple[int, ...]

    def __post_init__(self):
        inputs = tuple(self.inputs)
        object.__setattr__(self, "inputs", inputs)
        if len(set(inputs)) != len(inputs):
            raise CircuitError("repeated input wire")
        for q in inputs:
            if not 0 <= q < self.circuit.wires:
                raise CircuitError(f"input wire {q} out of range")

    @property
    def n(self) -> int:
        return self.circuit.wires

    @property
    def k(self) -> int:
        return self.n - len(self.inputs)

    @property
    def ancillas(self) -> tuple[int, ...]:
        ins = set(self.inputs)
        return tuple(q for q in range(self.n) if q not in ins)

    @classmethod
    def identity(cls, n: int) -> EncoderCircuit:
        return cls(CliffordCircuit(n), tuple(range(n)))


class PauliBatch:
    """Many Pauli strings stored column-wise, for conjugation through long circuits.

    ``xs[q]`` / ``zs[q]`` hold bit ``r`` for row ``r``; the i-exponent of each
    row is kept as two bit planes.
    """

    def __init__(self, n: int, rows: Sequence[PauliString]):
        self.n = n
        self.count = len(rows)
        self.xs = [0] * n
        self.zs = [0] * n
        self.lo = 0
        self.hi = 0
        for r, p in enumerate(rows):
            if p.n != n:
                raise CircuitError("row width mismatch")
            bit = 1 << r
            for q in range(n):
                if (p.x >> q) & 1:
                    self.xs[q] |= bit
                if (p.z >> q) & 1:
                    self.zs[q] |= bit
            if p.iota & 1:
                self.lo |= bit
            if p.iota & 2:
                self.hi |= bit

    def _add1(self, mask: int) -> None:
        self.hi ^= self.lo & mask
        self.lo ^= mask

    def apply(self, g: Gate) -> None:
        xs, zs = self.xs, self.zs
        if g.name == "H":
            (q,) = g.qubits
            self.hi ^= xs[q] & zs[q]
            xs[q], zs[q] = zs[q], xs[q]
        elif g.name == "S":
            (q,) = g.qubits
            self._add1(xs[q])
            zs[q] ^= xs[q]
        elif g.name == "X":
            self.hi ^= zs[g.qubits[0]]
        elif g.name == "Z":
            self.hi ^= xs[g.qubits[0]]
        elif g.name == "CX":
            c, t = g.qubits
            xs[t] ^= xs[c]
            zs[c] ^= zs[t]
        elif g.name == "CZ":
            a, b = g.qubits
            self.hi ^= xs[a] & xs[b]
            zs[a] ^= xs[b]
            zs[b] ^= xs[a]
        else:
            raise CircuitError(f"unknown gate {g.name!r}")

    def apply_all(self, gates: Iterable[Gate]) -> None:
        for g in gates:
            self.apply(g)

    def row(self, r: int) -> PauliString:
        x = z = 0
        for q in range(self.n):
            x |= ((self.xs[q] >> r) & 1) << q
            z |= ((self.zs[q] >> r) & 1) << q
        iota = ((self.lo >> r) & 1) | (((self.hi >> r) & 1) << 1)
        return PauliString(self.n, x, z, iota)

    def rows(self) -> list[PauliString]:
        return [self.row(r) for r in range(self.count)]


def conjugate(c: CliffordCircuit, p: PauliString) -> PauliString:
    """``C p C^dagger`` with gates applied in list order."""
    if p.n != c.wires:
        raise CircuitError(f"Pauli on {p.n} qubits, circuit has {c.wires} wires")
    batch = PauliBatch(p.n, [p])
    batch.apply_all(c.gates)
    return batch.row(0)


def conjugate_many(c: CliffordCircuit, ps: Sequence[PauliString]) -> list[PauliString]:
    batch = PauliBatch(c.wires, ps)
    batch.apply_all(c.gates)
    return batch.rows()


def _reduce_gates(x: int, z: int, target: int) -> list[Gate]:
    gates: list[Gate] = []
    support = x | z
    if not support:
        raise CircuitError("cannot reduce the identity to Z")
    q = 0
    rest = support
    while rest:
        if rest & 1:
            xb, zb = (x >> q) & 1, (z >> q) & 1
            if xb and zb:
                gates += [Gate("S", (q,)), Gate("H", (q,))]
            elif xb:
                gates.append(Gate("H", (q,)))
        rest >>= 1
        q += 1
    if not (support >> target) & 1:
        src = (support & -support).bit_length() - 1
        gates.append(Gate("CX", (target, src)))
    q = 0
    rest = support
    while rest:
        if rest & 1 and q != target:
            gates.append(Gate("CX", (q, target)))
        rest >>= 1
        q += 1
    return gates


def reduce_to_z1(p: PauliString, target: int = 0) -> CliffordCircuit:
    """Circuit ``U`` with ``U p U^dagger = +Z_target``."""
    if p.is_identity:
        raise CircuitError("cannot reduce the identity to Z")
    if not p.is_hermitian:
        raise CircuitError("Pauli string must be Hermitian")
    gates = _reduce_gates(p.x, p.z, target)
    c = CliffordCircuit(p.n, tuple(gates))
    if conjugate(c, p).sign < 0:
        c = CliffordCircuit(p.n, c.gates + (Gate("X", (target,)),))
    return c


def synthesize_encoder(t: StabilizerTableau) -> EncoderCircuit:
    """Encoder whose image is the +1 eigenspace of ``t``.

    Built back to front: each step maps the current first row to ``Z`` on a
    fresh wire, clears that wire from the other rows and retires it as an
    ancilla. The forward circuit is the concatenation of the inverted steps in
    reverse order.
    """
    check_tableau(t)
    n, k = t.n, t.k
    batch = PauliBatch(n, t.rows)
    steps: list[list[Gate]] = []
    for j in range(k):
        first = batch.row(j)
        # wires below j are already cleared in every remaining row
        gates = _reduce_gates(first.x, first.z, j)
        batch.apply_all(gates)
        if (batch.hi >> j) & 1:
            g = Gate("X", (j,))
            gates.append(g)
            batch.apply(g)
        # row j is now +Z_j; the other rows have I or Z on wire j
        keep = (1 << j) | ((1 << j) - 1)
        batch.zs[j] &= keep
        steps.append(gates)
    forward: list[Gate] = []
    for gates in reversed(steps):
        forward += CliffordCircuit(n, tuple(gates)).inverse().gates
    return EncoderCircuit(CliffordCircuit(n, tuple(forward)), tuple(range(k, n)))


def encoder_tableau(e: EncoderCircuit) -> StabilizerTableau:
    """Stabilizers of the image: ancilla ``Z``s pushed forward through the circuit."""
    zs = [PauliString.single(e.n, a, "Z") for a in e.ancillas]
    return StabilizerTableau(e.n, tuple(conjugate_many(e.circuit, zs)))


def choi_tableau(e: EncoderCircuit) -> StabilizerTableau:
    """Stabilizer tableau of the state obtained by bending the inputs to outputs.

    Qubits ``0..n-k-1`` are the bent input legs in the order of ``e.inputs``;
    qubit ``n-k+w`` is output wire ``w``.
    """
    n, ni = e.n, len(e.inputs)
    seeds = []
    for w in e.inputs:
        seeds.append(PauliString.single(n, w, "X"))
        seeds.append(PauliString.single(n, w, "Z"))
    seeds += [PauliString.single(n, a, "Z") for a in e.ancillas]
    images = conjugate_many(e.circuit, seeds)
    rows = []
    for i, img in enumerate(images):
        leg_x = leg_z = 0
        if i < 2 * ni:
            j = i // 2
            if i % 2 == 0:
                leg_x = 1 << j
            else:
                leg_z = 1 << j
        rows.append(PauliString(n + ni, leg_x | (img.x << ni), leg_z | (img.z << ni), img.iota))
    return StabilizerTableau(n + ni, tuple(rows))


def parse_circuit(text: str) -> EncoderCircuit:
    wires = None
    inputs = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("wires="):
            wires = int(line[6:])
            continue
        if line.startswith("inputs="):
            body = line[7:].strip()
            inputs = tuple(int(v) for v in body.split(",") if v.strip())
            continue
        parts = line.split()
        try:
            gates.append(Gate(parts[0].upper(), tuple(int(v) for v in parts[1:])))
        except ValueError:
            raise CircuitError(f"line {lineno}: bad gate line {raw!r}") from None
    if wires is None:
        raise CircuitError("missing 'wires=<n>' header")
    if inputs is None:
        inputs = tuple(range(wires))
    return EncoderCircuit(CliffordCircuit(wires, tuple(gates)), inputs)


def format_circuit(e: EncoderCircuit) -> str:
    lines = [f"wires={e.n}", "inputs=" + ",".join(map(str, e.inputs))]
    lines += [str(g) for g in e.circuit.gates]
    return "\n".join(lines) + "\n"
