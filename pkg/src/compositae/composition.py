"""Composition of generating functions through the composita table."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .composita import CompositaTable, composita_by_power
from .series import IncompatibleSeries, Kind, Series, egf_coefficient


def compose_coeffs(
    outer: Sequence[Fraction],
    inner: Series,
    table: CompositaTable | None = None,
) -> Series:
    """Ordinary coefficients of R(F(x)): h(0) = r(0), h(n) = sum_k F^D(n,k) r(k)."""
    inner.require_inner()
    order = inner.order
    if len(outer) < order + 1:
        raise ValueError(f"outer series needs {order + 1} coefficients, got {len(outer)}")
    if table is None:
        table = composita_by_power(inner)
    coeffs = [Fraction(outer[0])]
    for n in range(1, order + 1):
        coeffs.append(sum((v * outer[k] for k, v in enumerate(table.row(n), 1) if v), Fraction(0)))
    return Series(tuple(coeffs), Kind.ORDINARY)


def _require(series: Series, kind: Kind, role: str) -> None:
    if series.kind is not kind:
        raise IncompatibleSeries(f"{role} series must be {kind.value}, got {series.kind.value}")


def compose_egf_egf(outer: Series, inner: Series, table: CompositaTable | None = None) -> Series:
    """G = A(E) for exponential A and E; the result is exponential."""
    _require(outer, Kind.EXPONENTIAL, "outer")
    _require(inner, Kind.EXPONENTIAL, "inner")
    return compose_coeffs(outer.coeffs, inner, table).with_kind(Kind.EXPONENTIAL)


def compose_ogf_egf(outer: Series, inner: Series, table: CompositaTable | None = None) -> Series:
    """G = B(E) for an ordinary outer B and exponential inner E."""
    _require(outer, Kind.ORDINARY, "outer")
    _require(inner, Kind.EXPONENTIAL, "inner")
    return compose_coeffs(outer.coeffs, inner, table).with_kind(Kind.EXPONENTIAL)


def compose(outer: Series, inner: Series) -> Series:
    """Dispatch on the outer kind; the inner series is always read as an EGF."""
    if outer.kind is Kind.ORDINARY:
        return compose_ogf_egf(outer, inner)
    return compose_egf_egf(outer, inner)


def integrality_of_composition(outer: Series, inner: Series) -> list[bool]:
    """Per-n flags telling whether the EGF coefficient g(n) of A(E) is an integer."""
    g = compose_egf_egf(outer, inner)
    return [egf_coefficient(g, n).denominator == 1 for n in range(g.order + 1)]
