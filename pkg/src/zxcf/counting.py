"""Exact counts of stabilizer tableaus and of ZX canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class CountQuery:
    n: int
    k: int
    p: int = 0  # pivots placed so far
    o: int = 0  # non-pivot outputs placed so far

    def __post_init__(self):
        if min(self.n, self.k, self.p, self.o) < 0 or self.k > self.n:
            raise ValueError(f"invalid count query {self}")


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count_tableaus(n: int, k: int) -> int:
    """Number of signed stabilizer groups with ``k`` independent generators on ``n`` qubits."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n} k={k}")
    num = den = 1
    for i in range(1, k + 1):
        num *= 2 ** (2 * n - i + 2) - 2 ** i
        den *= 2 ** k - 2 ** (i - 1)
    return _exact_div(num, den)


@lru_cache(maxsize=None)
def _f(n: int, k: int, p: int, o: int) -> int:
    if n == 0 and k == 0:
        return 1
    total = 0
    if n != k:
        total += 2 ** o * _f(n - 1, k, p + 1, o)
    if k != 0:
        total += (2 ** (2 * p + o + 2) + 2) * _f(n - 1, k - 1, p, o + 1)
    return total


def count_zxcf_recursive(q: CountQuery) -> int:
    return _f(q.n, q.k, q.p, q.o)


def count_zxcf_closed(q: CountQuery) -> int:
    n, k, p, o = q.n, q.k, q.p, q.o
    num = den = 1
    for i in range(1, k + 1):
        num *= (2 ** (n + 1) - 2 ** i) * (2 ** (n - i + 1 + 2 * p + o) + 1)
        den *= 2 ** k - 2 ** (i - 1)
    return 2 ** (o * (n - k)) * _exact_div(num, den)
