"""Stirling, Bell and Euler zigzag numbers, binomials and multinomials.

Each family has a primary route (a recurrence table that grows on demand) and
an independent formula route used for cross-checking.
"""

from __future__ import annotations

import math
import threading
from typing import Sequence

from .series import factorial

_lock = threading.Lock()


def _check_nonneg(*values: int) -> None:
    for v in values:
        if v < 0:
            raise ValueError(f"expected a non-negative integer, got {v}")


def binomial(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p <= 0 for p in parts):
        raise ValueError("multinomial parts must be positive")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


class _TriangleCache:
    """Row-indexed triangle grown monotonically under a single writer lock."""

    def __init__(self, first_row: list[int], next_row):
        self._rows = [first_row]
        self._next_row = next_row

    def row(self, n: int) -> list[int]:
        if n >= len(self._rows):
            with _lock:
                while len(self._rows) <= n:
                    self._rows.append(self._next_row(self._rows[-1], len(self._rows)))
        return self._rows[n]


def _stirling2_next(prev: list[int], n: int) -> list[int]:
    # S(n,k) = k S(n-1,k) + S(n-1,k-1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
    return row


def _stirling1_next(prev: list[int], m: int) -> list[int]:
    # c(m,k) = (m-1) c(m-1,k) + c(m-1,k-1)
    row = [0] * (m + 1)
    for k in range(1, m + 1):
        row[k] = ((m - 1) * prev[k] if k < m else 0) + prev[k - 1]
    return row


def _bell_next(prev: list[int], n: int) -> list[int]:
    # Aitken's array: each row starts with the last entry of the previous one
    row = [prev[-1]]
    for v in prev:
        row.append(row[-1] + v)
    return row


def _zigzag_next(prev: list[int], n: int) -> list[int]:
    # Seidel-Entringer boustrophedon: row n is the running sum of row n-1 reversed
    row = [0]
    for v in reversed(prev):
        row.append(row[-1] + v)
    return row


_stirling2 = _TriangleCache([1], _stirling2_next)
_stirling1 = _TriangleCache([1], _stirling1_next)
_bell = _TriangleCache([1], _bell_next)
_zigzag = _TriangleCache([1], _zigzag_next)


def stirling2(n: int, k: int) -> int:
    _check_nonneg(n, k)
    if k > n:
        return 0
    return _stirling2.row(n)[k]


def stirling2_row(n: int) -> list[int]:
    _check_nonneg(n)
    return list(_stirling2.row(n))


def stirling2_explicit(n: int, k: int) -> int:
    """(1/k!) * sum_j (-1)^(k-j) C(k,j) j^n."""
    _check_nonneg(n, k)
    total = sum((-1) ** (k - j) * math.comb(k, j) * j**n for j in range(k + 1))
    q, r = divmod(total, factorial(k))
    assert r == 0
    return q


def stirling1_unsigned(m: int, k: int) -> int:
    """Number of permutations of m elements with exactly k cycles."""
    _check_nonneg(m, k)
    if k > m:
        return 0
    return _stirling1.row(m)[k]


def stirling1_signed(m: int, k: int) -> int:
    """s(m, k) = (-1)^(m-k) c(m, k), the coefficients of the falling factorial."""
    return (-1) ** ((m - k) % 2) * stirling1_unsigned(m, k)


def stirling1_row(m: int) -> list[int]:
    _check_nonneg(m)
    return list(_stirling1.row(m))


def rising_factorial_coefficients(m: int) -> list[int]:
    """Coefficients of x(x+1)...(x+m-1), lowest degree first."""
    _check_nonneg(m)
    poly = [1]
    for i in range(m):
        nxt = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d] += i * c
            nxt[d + 1] += c
        poly = nxt
    return poly


def bell(n: int) -> int:
    _check_nonneg(n)
    return _bell.row(n)[0]


def bell_by_stirling(n: int) -> int:
    return sum(stirling2_row(n))


def euler_zigzag(n: int) -> int:
    """E(n): alternating permutations, E(0) = E(1) = E(2) = 1, E(3) = 2."""
    _check_nonneg(n)
    return _zigzag.row(n)[-1]


def precompute(n: int) -> None:
    """Grow every cache to index ``n`` before handing work to concurrent readers."""
    _stirling2.row(n)
    _stirling1.row(n)
    _bell.row(n)
    _zigzag.row(n)
