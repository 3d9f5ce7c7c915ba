"""Signed Pauli strings in symplectic form.

A string on ``n`` qubits is stored as two packed bit masks ``x`` and ``z``
(bit ``q`` belongs to qubit ``q``) together with an exponent ``iota`` of the
imaginary unit, so the operator is ``i**iota * prod_q X_q**x_q Z_q**z_q``.
With this convention the letter ``Y`` is ``i X Z``: a Hermitian ``+Y`` has
``x = z = 1`` and ``iota = 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_PAULI_RE = re.compile(r"^([+-]?)([IXYZ]*)$")


def popcount(v: int) -> int:
    return v.bit_count()


def mul_phase(x1: int, z1: int, t1: int, x2: int, z2: int, t2: int) -> int:
    """i-exponent of the product (x1, z1, t1) * (x2, z2, t2)."""
    return (t1 + t2 + 2 * popcount(z1 & x2)) & 3


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int = 0
    z: int = 0
    iota: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative qubit count")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise ValueError("bit mask wider than qubit count")
        object.__setattr__(self, "iota", self.iota & 3)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n)

    @classmethod
    def single(cls, n: int, q: int, letter: str) -> PauliString:
        """Hermitian single-qubit Pauli ``letter`` on qubit ``q`` of ``n``."""
        return parse_pauli("I" * q + letter + "I" * (n - q - 1))

    @property
    def ny(self) -> int:
        return popcount(self.x & self.z)

    @property
    def is_hermitian(self) -> bool:
        return (self.iota - self.ny) % 2 == 0

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian strings written with letters I, X, Y, Z."""
        s = (self.iota - self.ny) & 3
        if s == 0:
            return 1
        if s == 2:
            return -1
        raise ValueError("anti-Hermitian Pauli string has no real sign")

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def weight(self) -> int:
        return popcount(self.x | self.z)

    def letter(self, q: int) -> str:
        return "IXZY"[((self.x >> q) & 1) | (((self.z >> q) & 1) << 1)]

    def negate(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, self.iota + 2)

    def __mul__(self, other: PauliString) -> PauliString:
        return multiply(self, other)

    def __str__(self) -> str:
        return format_pauli(self)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return PauliString(a.n, a.x ^ b.x, a.z ^ b.z, mul_phase(a.x, a.z, a.iota, b.x, b.z, b.iota))


def symplectic_form(a: PauliString, b: PauliString) -> int:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return popcount((a.x & b.z) ^ (a.z & b.x)) & 1


def commutes(a: PauliString, b: PauliString) -> bool:
    return symplectic_form(a, b) == 0


def parse_pauli(text: str) -> PauliString:
    text = text.strip()
    if not text:
        raise ValueError("empty Pauli string")
    m = _PAULI_RE.match(text)
    if m is None:
        body = text[1:] if text[0] in "+-" else text
        bad = next(c for c in body if c not in "IXYZ")
        raise ValueError(f"illegal character {bad!r} in Pauli string {text!r}")
    sign, letters = m.groups()
    if not letters:
        raise ValueError(f"no qubits in Pauli string {text!r}")
    x = z = 0
    for q, c in enumerate(letters):
        if c in "XY":
            x |= 1 << q
        if c in "ZY":
            z |= 1 << q
    iota = (2 if sign == "-" else 0) + letters.count("Y")
    return PauliString(len(letters), x, z, iota)


def format_pauli(p: PauliString, plus: bool = False) -> str:
    """Letters with a ``-`` prefix for negative strings (``+`` only if ``plus``)."""
    body = "".join(p.letter(q) for q in range(p.n))
    s = p.sign
    if s < 0:
        return "-" + body
    return ("+" if plus else "") + body
