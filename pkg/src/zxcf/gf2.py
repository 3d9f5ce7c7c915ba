"""GF(2) linear algebra on rows packed into Python ints (bit j = column j)."""

from __future__ import annotations

from typing import Sequence


def rank(rows: Sequence[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def rref(rows: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduced row-echelon form with the leading 1 at the lowest column.

    Returns the nonzero reduced rows ordered by pivot column and the pivot
    columns themselves.
    """
    rows = list(rows)
    pivots: list[int] = []
    out: list[int] = []
    for r in rows:
        for p, b in zip(pivots, out):
            if (r >> p) & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for i, b in enumerate(out):
            if (b >> p) & 1:
                out[i] = b ^ r
        pivots.append(p)
        out.append(r)
    order = sorted(range(len(out)), key=pivots.__getitem__)
    return [out[i] for i in order], [pivots[i] for i in order]


def bits(v: int):
    """Indices of set bits in ascending order."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def to_matrix(rows: Sequence[int], width: int) -> list[list[int]]:
    return [[(r >> j) & 1 for j in range(width)] for r in rows]


def from_matrix(mat: Sequence[Sequence[int]]) -> list[int]:
    return [sum(1 << j for j, b in enumerate(row) if b) for row in mat]
