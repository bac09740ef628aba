"""Prime-only integrality expressions and compositeness witnesses.

Every expression here is an integer whenever ``n`` is prime. A non-integer
value therefore certifies that ``n`` is composite. The converse does not hold:
composites may produce integers too, so a passing value is only reported as
``consistent_with_prime``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .composita import CompositaTable, composita_by_power
from .composition import compose_egf_egf, compose_ogf_egf
from .sequences import bell, euler_zigzag
from .series import (
    Kind,
    Series,
    builtin,
    egf_coefficient,
    exp_series,
    factorial,
    format_rational,
    sin_egf_coefficient,
)

MAX_ORDER_ENV = "COMPOSITAE_MAX_ORDER"
DEFAULT_MAX_ORDER = 1000


class NonIntegerCoefficients(ValueError):
    pass


class ScanBoundError(ValueError):
    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class Verdict(str, enum.Enum):
    CONSISTENT_WITH_PRIME = "consistent_with_prime"
    COMPOSITE_WITNESS = "composite_witness"


@dataclass(frozen=True)
class CongruenceReport:
    family: str
    n: int
    value: Fraction
    # sums over 2 <= k <= n-1 are empty for n < 3 and reported as 0
    degenerate: bool = False

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    @property
    def verdict(self) -> Verdict:
        return Verdict.CONSISTENT_WITH_PRIME if self.is_integer else Verdict.COMPOSITE_WITNESS

    def to_record(self) -> dict:
        record = {
            "family": self.family,
            "n": self.n,
            "value": format_rational(self.value),
            "is_integer": self.is_integer,
            "verdict": self.verdict.value,
        }
        if self.degenerate:
            record["degenerate"] = True
        return record


@dataclass(frozen=True)
class WitnessCertificate:
    n: int
    family: str
    value: Fraction
    denominator: int = field(init=False)

    def __post_init__(self) -> None:
        if self.value.denominator == 1:
            raise ValueError(f"{format_rational(self.value)} is an integer; no witness for n = {self.n}")
        object.__setattr__(self, "denominator", self.value.denominator)

    @classmethod
    def from_report(cls, report: CongruenceReport) -> WitnessCertificate:
        return cls(report.n, report.family, report.value)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "value": format_rational(self.value),
            "denominator": self.denominator,
        }


def require_integer_egf(series: Series, role: str = "series") -> None:
    if series.kind is Kind.EXPONENTIAL:
        values = series.egf()
    else:
        values = list(series.coeffs)
    for n, v in enumerate(values):
        if v.denominator != 1:
            raise NonIntegerCoefficients(f"{role} coefficient {n} is {format_rational(v)}, not an integer")


def _require_range(n: int, low: int, high: int | None = None) -> None:
    if n < low or (high is not None and n > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise ValueError(f"n = {n} outside the admissible range {bound}")


def theorem1_check(e: Series, n: int, k: int) -> bool:
    """True iff (n!/k!) E^D(n, k) is an integer."""
    require_integer_egf(e, "inner")
    e.require_inner()
    if not 1 <= k <= n <= e.order:
        raise ValueError(f"need 1 <= k <= n <= {e.order}, got n = {n}, k = {k}")
    value = composita_by_power(e)[n, k] * factorial(n) / factorial(k)
    return value.denominator == 1


def corollary1_sum(
    e: Series, n: int, table: CompositaTable | None = None, family: str = "corollary1"
) -> CongruenceReport:
    """sum_{k=2}^{n-1} E^D(n, k) (n-1)!/k!."""
    require_integer_egf(e, "inner")
    e.require_inner()
    _require_range(n, 3, e.order)
    if table is None:
        table = composita_by_power(e)
    row = table.row(n)
    value = sum((row[k - 1] * Fraction(factorial(n - 1), factorial(k)) for k in range(2, n)), Fraction(0))
    return CongruenceReport(family, n, value)


def corollary1_via_g(e: Series, n: int, table: CompositaTable | None = None) -> CongruenceReport:
    """(g(n) - e(n) - e(1)^n) / n with g the EGF coefficients of exp(E)."""
    require_integer_egf(e, "inner")
    e.require_inner()
    _require_range(n, 3, e.order)
    g = compose_egf_egf(exp_series(e.order), e, table)
    value = (egf_coefficient(g, n) - egf_coefficient(e, n) - egf_coefficient(e, 1) ** n) / n
    return CongruenceReport("corollary1_via_g", n, value)


def general_prime_congruence(outer: Series, inner: Series, n: int) -> CongruenceReport:
    """(g(n) - e(n) a(1) - e(1)^n a(n)) / n with G = A(E)."""
    require_integer_egf(outer, "outer")
    require_integer_egf(inner, "inner")
    order = min(outer.order, inner.order)
    _require_range(n, 2, order)
    g = compose_egf_egf(outer, inner)
    e = lambda i: egf_coefficient(inner, i)  # noqa: E731
    a = lambda i: egf_coefficient(outer, i)  # noqa: E731
    value = (egf_coefficient(g, n) - e(n) * a(1) - e(1) ** n * a(n)) / n
    return CongruenceReport("general", n, value)


def theorem2_congruence(outer: Series, inner: Series, n: int) -> CongruenceReport:
    """(g(n) - e(n) b(1)) / n with G = B(E), B an ordinary series."""
    require_integer_egf(outer, "outer")
    require_integer_egf(inner, "inner")
    _require_range(n, 1, min(outer.order, inner.order))
    g = compose_ogf_egf(outer, inner)
    value = (egf_coefficient(g, n) - egf_coefficient(inner, n) * outer[1]) / n
    return CongruenceReport("theorem2", n, value)


def touchard_k0(n: int) -> CongruenceReport:
    """(B_n - 2) / n."""
    _require_range(n, 2)
    return CongruenceReport("touchard_k0", n, Fraction(bell(n) - 2, n))


def touchard_general(n: int, k: int) -> CongruenceReport:
    """(B_{n+k} - B_{k+1} - B_k) / n."""
    _require_range(n, 2)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return CongruenceReport(f"touchard_general[k={k}]", n, Fraction(bell(n + k) - bell(k + 1) - bell(k), n))


def euler_congruence(n: int) -> CongruenceReport:
    """(E(n+1) - s(n)) / n, s(n) the EGF coefficient of sin x."""
    _require_range(n, 2)
    return CongruenceReport("euler", n, Fraction(euler_zigzag(n + 1) - sin_egf_coefficient(n), n))


# -- family registry and scans -------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A registered congruence family.

    ``required_order(n)`` is the truncation order (or sequence index) needed to
    evaluate at ``n``; ``evaluate(n, order)`` returns the report, sharing work
    across calls with the same ``order``.
    """

    name: str
    description: str
    min_n: int
    required_order: Callable[[int], int]
    evaluate: Callable[[int, int], CongruenceReport]
    max_n: int | None = None


FAMILIES: dict[str, Family] = {}


def register(family: Family) -> Family:
    FAMILIES[family.name] = family
    return family


def corollary1_family(name: str, make_series: Callable[[int], Series], max_n: int | None = None) -> Family:
    def evaluate(n: int, order: int) -> CongruenceReport:
        if n < 3:
            return CongruenceReport(name, n, Fraction(0), degenerate=True)
        e = make_series(order)
        return corollary1_sum(e, n, composita_by_power(e), family=name)

    return Family(
        name,
        f"sum_{{k=2}}^{{n-1}} E^D(n,k) (n-1)!/k! for the inner EGF {name}",
        min_n=1,
        required_order=lambda n: n,
        evaluate=evaluate,
        max_n=max_n,
    )


def egf_family(name: str, e: Series) -> Family:
    """Middle-composita sum family for a user-supplied integer EGF."""
    require_integer_egf(e, "inner")
    e.require_inner()
    return corollary1_family(name, e.truncate, max_n=e.order)


def touchard_general_family(k: int) -> Family:
    return Family(
        f"touchard_general[k={k}]",
        f"Touchard congruence B(n+{k}) = B({k}+1) + B({k}) mod n",
        min_n=2,
        required_order=lambda n: n + k,
        evaluate=lambda n, order: touchard_general(n, k),
    )


register(Family("touchard_k0", "Bell numbers, (B_n - 2)/n", 2, lambda n: n, lambda n, order: touchard_k0(n)))
register(Family("euler", "Euler zigzag numbers, (E(n+1) - s(n))/n", 2, lambda n: n + 1, lambda n, order: euler_congruence(n)))
for _name in ("poly3", "expm1", "artanh", "sin"):
    register(corollary1_family(_name, lambda order, _name=_name: builtin(_name, order)))


def max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    return int(raw) if raw else DEFAULT_MAX_ORDER


def get_family(family: str | Family) -> Family:
    if isinstance(family, Family):
        return family
    try:
        return FAMILIES[family]
    except KeyError:
        raise KeyError(f"unknown family {family!r}; registered: {', '.join(sorted(FAMILIES))}") from None


def scan(
    family: str | Family, ns: Iterable[int], order_cap: int | None = None
) -> tuple[list[CongruenceReport], list[WitnessCertificate]]:
    """Evaluate ``family`` at every n, in increasing order, and collect witnesses."""
    fam = get_family(family)
    ns = sorted(set(ns))
    if not ns:
        return [], []
    if ns[0] < fam.min_n:
        raise ValueError(f"family {fam.name} starts at n = {fam.min_n}, got {ns[0]}")
    if fam.max_n is not None and ns[-1] > fam.max_n:
        raise ScanBoundError(f"family {fam.name} is only defined up to n = {fam.max_n}", fam.max_n)
    cap = max_order() if order_cap is None else order_cap
    order = fam.required_order(ns[-1])
    if order > cap:
        raise ScanBoundError(f"n = {ns[-1]} needs order {order}, above the limit {cap} (set {MAX_ORDER_ENV})", cap)
    reports = [fam.evaluate(n, order) for n in ns]
    certificates = [WitnessCertificate.from_report(r) for r in reports if not r.is_integer]
    return reports, certificates
