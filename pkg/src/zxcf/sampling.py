"""Random encoders and tableaus for fuzzing and timing."""

from __future__ import annotations

import random

from .circuit import CliffordCircuit, EncoderCircuit, Gate, conjugate_many
from .pauli import PauliString, multiply
from .tableau import StabilizerTableau


def random_circuit(wires: int, depth: int, rng: random.Random) -> CliffordCircuit:
    gates = []
    for _ in range(depth):
        r = rng.random()
        if wires < 2 or r < 0.5:
            gates.append(Gate(rng.choice("HSXZ"), (rng.randrange(wires),)))
        else:
            a, b = rng.sample(range(wires), 2)
            gates.append(Gate(rng.choice(("CX", "CZ")), (a, b)))
    return CliffordCircuit(wires, tuple(gates))


def random_encoder(n: int, k: int, rng: random.Random, depth: int | None = None) -> EncoderCircuit:
    if depth is None:
        depth = 4 * n * max(1, n.bit_length())
    inputs = tuple(sorted(rng.sample(range(n), n - k)))
    return EncoderCircuit(random_circuit(n, depth, rng) if n else CliffordCircuit(0), inputs)


def random_tableau(n: int, k: int, rng: random.Random, depth: int | None = None) -> StabilizerTableau:
    """Signed stabilizer group of a random encoder."""
    if depth is None:
        depth = 4 * n * max(1, n.bit_length())
    c = random_circuit(n, depth, rng) if n else CliffordCircuit(0)
    seeds = [PauliString.single(n, q, "Z") for q in range(k)]
    rows = conjugate_many(c, seeds)
    rows = [r.negate() if rng.random() < 0.5 else r for r in rows]
    return StabilizerTableau(n, tuple(rows))


def regenerate(t: StabilizerTableau, rng: random.Random, rounds: int | None = None) -> StabilizerTableau:
    """Another generating set of the same signed group (row products and shuffles)."""
    rows = list(t.rows)
    if rounds is None:
        rounds = 3 * len(rows)
    for _ in range(rounds if len(rows) > 1 else 0):
        i, j = rng.sample(range(len(rows)), 2)
        rows[i] = multiply(rows[i], rows[j])
    rng.shuffle(rows)
    return StabilizerTableau(t.n, tuple(rows))
