"""Incomplete stabilizer tableaus and signed-group comparison."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf2
from .pauli import PauliString, commutes, format_pauli, multiply, parse_pauli

_HEADER_RE = re.compile(r"^n\s*=\s*(\d+)(?:\s+k\s*=\s*(\d+))?$")


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class StabilizerTableau:
    n: int
    rows: tuple[PauliString, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.n != self.n:
                raise TableauError(f"row {format_pauli(r)!r} has {r.n} qubits, expected {self.n}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, rows: Iterable[str], n: int | None = None) -> StabilizerTableau:
        paulis = [parse_pauli(r) for r in rows]
        if n is None:
            if not paulis:
                raise TableauError("qubit count needed for an empty tableau")
            n = paulis[0].n
        return cls(n, tuple(paulis))

    def __str__(self) -> str:
        return format_tableau(self)


@dataclass(frozen=True)
class Violation:
    kind: str  # "sign", "anticommute" or "dependent"
    rows: tuple[int, ...]
    message: str


def validate_tableau(t: StabilizerTableau) -> list[Violation]:
    """Empty list iff rows are Hermitian, pairwise commuting and independent."""
    out = []
    for i, r in enumerate(t.rows):
        if not r.is_hermitian:
            out.append(Violation("sign", (i,), f"row {i} is not Hermitian"))
    for i in range(t.k):
        for j in range(i + 1, t.k):
            if not commutes(t.rows[i], t.rows[j]):
                out.append(Violation("anticommute", (i, j), f"rows {i} and {j} anticommute"))
    basis: dict[int, int] = {}
    for i, r in enumerate(t.rows):
        v = (r.x << t.n) | r.z
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
        if not v:
            out.append(Violation("dependent", (i,), f"row {i} is a product of earlier rows"))
    if t.k > t.n:
        out.append(Violation("dependent", (), f"{t.k} rows on {t.n} qubits"))
    return out


def check_tableau(t: StabilizerTableau) -> None:
    bad = validate_tableau(t)
    if bad:
        raise TableauError("; ".join(v.message for v in bad))


def _column_key(p: PauliString, col: int) -> int:
    n = p.n
    return (p.x >> col) & 1 if col < n else (p.z >> (col - n)) & 1


def group_canonical(t: StabilizerTableau) -> StabilizerTableau:
    """Unique generating set of the signed group of ``t``.

    Reduced row echelon form over the columns x_0..x_{n-1}, z_0..z_{n-1};
    signs follow the row products.
    """
    check_tableau(t)
    rows = list(t.rows)
    n = t.n
    done = 0
    for col in range(2 * n):
        piv = next((i for i in range(done, len(rows)) if _column_key(rows[i], col)), None)
        if piv is None:
            continue
        rows[done], rows[piv] = rows[piv], rows[done]
        for i in range(len(rows)):
            if i != done and _column_key(rows[i], col):
                rows[i] = multiply(rows[i], rows[done])
        done += 1
    return StabilizerTableau(n, tuple(rows))


def groups_equal(t1: StabilizerTableau, t2: StabilizerTableau) -> bool:
    if t1.n != t2.n or t1.k != t2.k:
        raise TableauError(f"shape mismatch: ({t1.n},{t1.k}) vs ({t2.n},{t2.k})")
    return group_canonical(t1).rows == group_canonical(t2).rows


def group_elements(t: StabilizerTableau) -> set[PauliString]:
    """All 2**k elements of the group (small k only)."""
    out = {PauliString.identity(t.n)}
    for r in t.rows:
        out |= {multiply(g, r) for g in out}
    return out


def eliminate_columns(rows: Sequence[PauliString], mask_x: int, mask_z: int) -> tuple[list[PauliString], list[PauliString]]:
    """Split ``rows`` into generators with support on the masked columns and
    generators of the subgroup that avoids them entirely."""
    rows = list(rows)
    used: list[PauliString] = []
    for col_bits, is_x in ((mask_x, True), (mask_z, False)):
        for q in gf2.bits(col_bits):
            bit = 1 << q
            piv = next((i for i, r in enumerate(rows) if (r.x if is_x else r.z) & bit), None)
            if piv is None:
                continue
            p = rows.pop(piv)
            rows = [multiply(r, p) if (r.x if is_x else r.z) & bit else r for r in rows]
            used = [multiply(u, p) if (u.x if is_x else u.z) & bit else u for u in used]
            used.append(p)
    return used, rows


def parse_tableau(text: str) -> StabilizerTableau:
    n_decl = k_decl = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _HEADER_RE.match(line)
        if m:
            if rows or n_decl is not None:
                raise TableauError(f"line {lineno}: header must come first")
            n_decl = int(m.group(1))
            k_decl = int(m.group(2)) if m.group(2) is not None else None
            continue
        try:
            rows.append(parse_pauli(line.replace(" ", "")))
        except ValueError as exc:
            raise TableauError(f"line {lineno}: {exc}") from None
    if rows:
        n = rows[0].n
        for i, r in enumerate(rows):
            if r.n != n:
                raise TableauError(f"ragged rows: row {i} has {r.n} qubits, row 0 has {n}")
        if n_decl is not None and n_decl != n:
            raise TableauError(f"header declares n={n_decl} but rows have {n} qubits")
    elif n_decl is None:
        raise TableauError("empty tableau needs a header line 'n=<int> k=0'")
    else:
        n = n_decl
    if k_decl is not None and k_decl != len(rows):
        raise TableauError(f"header declares k={k_decl} but found {len(rows)} rows")
    return StabilizerTableau(n, tuple(rows))


def format_tableau(t: StabilizerTableau, header: bool | None = None) -> str:
    """One row per line; the header is written when asked or when k = 0."""
    if header is None:
        header = t.k == 0
    lines = [f"n={t.n} k={t.k}"] if header else []
    lines += [format_pauli(r) for r in t.rows]
    return "\n".join(lines) + "\n"
