"""Truncated power series with exact rational coefficients.

Coefficients are always stored in ordinary form, ``c(n) = [x^n] F``. A series
tagged ``exponential`` is read through the EGF view ``a(n) = n! * c(n)`` at the
boundary (see :func:`egf_coefficient`, :meth:`Series.from_egf`).
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

ExactRational = Fraction
Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for invalid series operations."""


class IncompatibleSeries(SeriesError):
    pass


class InexactTruncation(SeriesError):
    pass


class Kind(str, enum.Enum):
    ORDINARY = "ordinary"
    EXPONENTIAL = "exponential"


@functools.lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def format_rational(q: Scalar) -> str:
    """Render as ``p/q``, or ``p`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def is_integral(q: Fraction) -> bool:
    return q.denominator == 1


@dataclass(frozen=True)
class Series:
    """A power series truncated after ``x^order``."""

    coeffs: tuple[Fraction, ...]
    kind: Kind = Kind.ORDINARY

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: Series) -> Series:
        return series_add(self, other)

    def __mul__(self, other: Series) -> Series:
        return series_mul(self, other)

    def __pow__(self, k: int) -> Series:
        return series_pow(self, k)

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs), self.kind)

    @classmethod
    def zero(cls, order: int, kind: Kind = Kind.ORDINARY) -> Series:
        return cls((Fraction(0),) * (order + 1), kind)

    @classmethod
    def one(cls, order: int, kind: Kind = Kind.ORDINARY) -> Series:
        return cls((Fraction(1),) + (Fraction(0),) * order, kind)

    @classmethod
    def from_egf(cls, values: Sequence[Scalar]) -> Series:
        """Build an exponential series from its EGF coefficients ``a(0..N)``."""
        return cls(
            tuple(Fraction(a) / factorial(n) for n, a in enumerate(values)),
            Kind.EXPONENTIAL,
        )

    def egf(self) -> list[Fraction]:
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1], self.kind)

    def with_kind(self, kind: Kind) -> Series:
        return Series(self.coeffs, kind)

    @property
    def admissible_inner(self) -> bool:
        return self.coeffs[0] == 0

    def require_inner(self) -> None:
        if self.coeffs[0] != 0:
            raise InexactTruncation(
                f"inner series must have no free term, got c(0) = {format_rational(self.coeffs[0])}"
            )


def _check_kinds(a: Series, b: Series) -> None:
    if a.kind is not b.kind:
        raise IncompatibleSeries(f"cannot combine {a.kind.value} and {b.kind.value} series")


def series_add(a: Series, b: Series) -> Series:
    _check_kinds(a, b)
    order = min(a.order, b.order)
    return Series(tuple(a[n] + b[n] for n in range(order + 1)), a.kind)


def cauchy_product(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> tuple[Fraction, ...]:
    # sparse support lists keep powers of series without free term cheap
    sa = [(i, c) for i, c in enumerate(a[: order + 1]) if c]
    sb = [(j, c) for j, c in enumerate(b[: order + 1]) if c]
    out = [Fraction(0)] * (order + 1)
    for i, ca in sa:
        for j, cb in sb:
            if i + j > order:
                break
            out[i + j] += ca * cb
    return tuple(out)


def series_mul(a: Series, b: Series) -> Series:
    """Truncated Cauchy product."""
    _check_kinds(a, b)
    order = min(a.order, b.order)
    return Series(cauchy_product(a.coeffs, b.coeffs, order), a.kind)


def series_pow(f: Series, k: int) -> Series:
    if k < 0:
        raise SeriesError("negative powers are not supported")
    if k == 0:
        return Series.one(f.order, f.kind)
    f.require_inner()
    result = f
    for _ in range(k - 1):
        result = series_mul(result, f)
    return result


def egf_coefficient(f: Series, n: int) -> Fraction:
    """Return ``a(n) = n! * c(n)`` of an exponential series."""
    if f.kind is not Kind.EXPONENTIAL:
        raise IncompatibleSeries("egf_coefficient needs an exponential series")
    if not 0 <= n <= f.order:
        raise IndexError(f"n = {n} outside 0..{f.order}")
    return f[n] * factorial(n)


def integer_egf(values: Iterable[int], *, constant: int = 0) -> Series:
    """Exponential series from integer EGF coefficients ``e(1), e(2), ...``."""
    return Series.from_egf([constant, *values])


# -- text form ---------------------------------------------------------------


def dumps(f: Series) -> str:
    """Serialize as ``index<TAB>value`` lines, preceded by a kind comment."""
    lines = [f"# kind: {f.kind.value}"]
    lines += [f"{n}\t{format_rational(c)}" for n, c in enumerate(f.coeffs)]
    return "\n".join(lines) + "\n"


def loads(text: str, kind: Kind | None = None) -> Series:
    """Parse the ``index<TAB>value`` form written by :func:`dumps`.

    Indices must run 0..N without gaps. A ``# kind: ...`` line sets the kind
    unless ``kind`` is given explicitly.
    """
    found_kind = Kind.ORDINARY
    values: dict[int, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, val = line[1:].partition(":")
            if key.strip() == "kind":
                found_kind = Kind(val.strip())
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) != 2:
            raise SeriesError(f"line {lineno}: expected 'index<TAB>value', got {raw!r}")
        try:
            idx = int(parts[0])
            values[idx] = parse_rational(parts[1])
        except ValueError as exc:
            raise SeriesError(f"line {lineno}: {exc}") from None
    if not values:
        raise SeriesError("empty series file")
    order = max(values)
    if sorted(values) != list(range(order + 1)):
        raise SeriesError("series indices must be contiguous from 0")
    return Series(tuple(values[n] for n in range(order + 1)), kind or found_kind)


def loads_egf_integers(text: str) -> Series:
    """Parse a plain list of integer EGF coefficients ``e(1..N)``, one per line."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise SeriesError(f"line {lineno}: EGF coefficients must be integers, got {line!r}") from None
    if not values:
        raise SeriesError("empty EGF coefficient file")
    return integer_egf(values)


# -- built-in series -----------------------------------------------------------


def exp_series(order: int) -> Series:
    return Series.from_egf([1] * (order + 1))


def expm1_series(order: int) -> Series:
    return Series.from_egf([0] + [1] * order)


def sin_egf_coefficient(n: int) -> int:
    """EGF coefficient of sin: 0 for even n, (-1)^((n-1)/2) for odd n."""
    if n % 2 == 0:
        return 0
    return -1 if (n - 1) // 2 % 2 else 1


def sin_series(order: int) -> Series:
    return Series.from_egf([sin_egf_coefficient(n) for n in range(order + 1)])


def artanh_series(order: int) -> Series:
    coeffs = [Fraction(1, n) if n % 2 else Fraction(0) for n in range(1, order + 1)]
    return Series((Fraction(0), *coeffs), Kind.EXPONENTIAL)


def poly3_series(order: int) -> Series:
    """x + x^2/2 + x^3/6; its exponential counts set partitions into blocks of size <= 3."""
    head = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 6)]
    coeffs = (head + [Fraction(0)] * max(0, order - 3))[: order + 1]
    return Series(tuple(coeffs), Kind.EXPONENTIAL)


def identity_series(order: int) -> Series:
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return Series(tuple(coeffs), Kind.EXPONENTIAL)


def geometric_series(order: int) -> Series:
    """1/(1-x) as an ordinary series."""
    return Series((Fraction(1),) * (order + 1), Kind.ORDINARY)


BUILTINS = {
    "exp": exp_series,
    "expm1": expm1_series,
    "sin": sin_series,
    "artanh": artanh_series,
    "poly3": poly3_series,
    "x": identity_series,
    "geom": geometric_series,
}


@functools.lru_cache(maxsize=64)
def builtin(name: str, order: int) -> Series:
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise SeriesError(f"unknown built-in series {name!r}; choose from {sorted(BUILTINS)}") from None
    if order < 0:
        raise SeriesError("order must be non-negative")
    return factory(order)
