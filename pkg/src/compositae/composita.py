"""Composita tables: the coefficients F^D(n, k) = [x^n] F(x)^k.

Three routes are provided and cross-validated in the tests:

* :func:`composita_by_power` raises the series to successive powers,
* :func:`composita_by_compositions` sums products over integer compositions,
* the closed forms :func:`stirling2_composita`, :func:`poly3_composita`
  and :func:`artanh_composita` for specific inner series.
"""

from __future__ import annotations

import csv
import functools
import io
from dataclasses import dataclass
from fractions import Fraction

from .sequences import binomial, stirling1_signed, stirling2
from .series import Series, cauchy_product, factorial, format_rational


@dataclass(frozen=True)
class CompositaTable:
    """Triangular table of F^D(n, k) for 1 <= k <= n <= order.

    ``rows[n - 1][k - 1]`` holds F^D(n, k).
    """

    order: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        n, k = nk
        if not 1 <= n <= self.order or k < 1:
            raise IndexError(f"(n, k) = ({n}, {k}) outside the table of order {self.order}")
        if k > n:
            return Fraction(0)
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[Fraction, ...]:
        """F^D(n, 1..n)."""
        if not 1 <= n <= self.order:
            raise IndexError(f"n = {n} outside 1..{self.order}")
        return self.rows[n - 1]

    def entries(self):
        for n, row in enumerate(self.rows, 1):
            for k, value in enumerate(row, 1):
                yield n, k, value

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, k, value in self.entries():
            writer.writerow([n, k, format_rational(value)])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = [[format_rational(v) for v in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        lines = [" n\\k " + " ".join(f"{k:>{width}}" for k in range(1, self.order + 1))]
        for n, row in enumerate(cells, 1):
            lines.append(f"{n:>4} " + " ".join(f"{c:>{width}}" for c in row))
        return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=32)
def composita_by_power(f: Series) -> CompositaTable:
    """Tabulate F^D(n, k) by iterated multiplication, reusing F^(k-1)."""
    f.require_inner()
    order = f.order
    columns = []
    power = f.coeffs
    for k in range(1, order + 1):
        if k > 1:
            power = cauchy_product(power, f.coeffs, order)
        columns.append(power)
    rows = tuple(tuple(columns[k - 1][n] for k in range(1, n + 1)) for n in range(1, order + 1))
    return CompositaTable(order, rows)


def composita_by_compositions(f: Series, n: int, k: int) -> Fraction:
    """Sum of c(l_1) ... c(l_k) over all compositions l_1 + ... + l_k = n.

    Exponential time; meant as an oracle for n up to about 20.
    """
    f.require_inner()
    if not 1 <= k <= n <= f.order:
        raise ValueError(f"need 1 <= k <= n <= {f.order}, got n = {n}, k = {k}")
    c = f.coeffs

    def walk(remaining: int, parts: int) -> Fraction:
        if parts == 1:
            return c[remaining]
        total = Fraction(0)
        for first in range(1, remaining - parts + 2):
            if c[first]:
                total += c[first] * walk(remaining - first, parts - 1)
        return total

    return walk(n, k)


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n = {n}, k = {k}")


def stirling2_composita(n: int, k: int) -> Fraction:
    """Composita of e^x - 1: k! S(n, k) / n!."""
    _check_nk(n, k)
    return Fraction(factorial(k) * stirling2(n, k), factorial(n))


def poly3_composita(n: int, k: int) -> Fraction:
    """Composita of x + x^2/2 + x^3/6 in closed form."""
    _check_nk(n, k)
    total = Fraction(0)
    for j in range(k + 1):
        b = binomial(j, n - 3 * k + 2 * j)
        if b:
            total += b * binomial(k, j) * Fraction(3) ** (j - k) * Fraction(2) ** (-n + 2 * k - j)
    return total


def artanh_composita(n: int, k: int) -> Fraction:
    """Composita of artanh(x), via signed Stirling numbers of the first kind.

    The unsigned numbers do not work here: they give F^D(2, 1) = 2, while
    artanh has no x^2 term.
    """
    _check_nk(n, k)
    total = Fraction(0)
    for m in range(k, n + 1):
        total += Fraction(2 ** (m - k) * stirling1_signed(m, k) * binomial(n - 1, m - 1), factorial(m))
    return factorial(k) * total


CLOSED_FORMS = {
    "expm1": stirling2_composita,
    "poly3": poly3_composita,
    "artanh": artanh_composita,
}
