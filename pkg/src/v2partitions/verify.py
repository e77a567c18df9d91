"""Machine-checkable verification of the product/binomial identities.

Produces immutable reports: cross-route coefficient comparison per family,
the binary-expansion identity 1/(1-q^m) = prod(1+q^(2^k m)), and rendered
capped-partition tableaux with binomial weights.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .families import BRUTE_LIMIT, CappedPartition, Route, binomial_table, enumerate_capped, table
from .series import TruncatedSeries, reciprocal
from .valuation import FamilyId, exponent


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one coefficient-by-coefficient comparison.

    `family` is None for the binary-identity check, where `identity_m`
    carries the exponent multiplier instead. `elapsed_ms` is excluded from
    any equality used in tests.
    """

    family: FamilyId | None
    order: int
    routes_compared: tuple[str, ...]
    status: str  # "PASS" | "FAIL"
    first_mismatch: tuple[int, dict[str, int]] | None
    elapsed_ms: float
    identity_m: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def subject(self) -> str:
        if self.family is not None:
            return self.family.value
        return f"binary-identity m={self.identity_m}"


@dataclass(frozen=True)
class RemarkTrace:
    """A capped-partition tableau: one weighted line per partition, plus the total."""

    family: FamilyId
    n: int
    lines: tuple[tuple[CappedPartition, str], ...]
    total: int


def _compare_tables(tables: dict[str, list[int]]) -> tuple[int, dict[str, int]] | None:
    names = list(tables)
    length = len(tables[names[0]])
    for n in range(length):
        values = {name: tables[name][n] for name in names}
        if len(set(values.values())) > 1:
            return (n, values)
    return None


def verify_family(family: FamilyId, order: int, include_brute: bool = False) -> VerificationReport:
    """Compare GF, PRODUCT and BINOMIAL (optionally BRUTE) tables up to `order`."""
    if include_brute and order > BRUTE_LIMIT:
        raise ValueError(f"brute-force comparison is limited to order <= {BRUTE_LIMIT}")
    start = time.perf_counter()
    routes = [Route.GF, Route.PRODUCT, Route.BINOMIAL]
    if include_brute:
        routes.append(Route.BRUTE)
    tables = {route.value: table(family, order, route) for route in routes}
    mismatch = _compare_tables(tables)
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        family=family,
        order=order,
        routes_compared=tuple(r.value for r in routes),
        status="PASS" if mismatch is None else "FAIL",
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
    )


def verify_binary_identity(m: int, order: int) -> VerificationReport:
    """Check 1/(1-q^m) = prod_{k>=0} (1+q^(2^k m)) at the given truncation order."""
    if m < 1:
        raise ValueError("m must be positive")
    if order < 0:
        raise ValueError("order must be non-negative")
    start = time.perf_counter()

    prod = [0] * (order + 1)
    prod[0] = 1
    e = m
    while e <= order:
        for k in range(order, e - 1, -1):
            prod[k] += prod[k - e]
        e *= 2

    geom = [0] * (order + 1)
    geom[0] = 1
    if m <= order:
        one_minus_qm = [0] * (order + 1)
        one_minus_qm[0] = 1
        one_minus_qm[m] = -1
        geom = list(reciprocal(TruncatedSeries(tuple(one_minus_qm)), order).coeffs)

    mismatch = _compare_tables({"binary-product": prod, "geometric-reciprocal": geom})
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        family=None,
        order=order,
        routes_compared=("binary-product", "geometric-reciprocal"),
        status="PASS" if mismatch is None else "FAIL",
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
        identity_m=m,
    )


def _render_term(partition: CappedPartition, cap) -> str:
    factors = [
        f"C({cap(k)},{t})"
        for k, t in sorted(
            ((k, t) for k, t in enumerate(partition.multiplicities, start=1) if t),
            reverse=True,
        )
    ]
    return "*".join(factors)


def remark_trace(family: FamilyId, n: int) -> RemarkTrace:
    """Render every capped partition of n with its binomial-product weight."""
    if n < 1 or n > BRUTE_LIMIT:
        raise ValueError(f"remark tableaux are limited to 1 <= n <= {BRUTE_LIMIT}")
    cap = lambda k: exponent(family, k)
    partitions = enumerate_capped(n, cap)
    lines = tuple((p, _render_term(p, cap)) for p in partitions)
    total = sum(p.weight for p in partitions)
    expected = binomial_table(family, n)[n]
    if total != expected:
        raise AssertionError(
            f"tableau total {total} disagrees with binomial DP {expected} "
            f"for {family.value} at n={n}")
    return RemarkTrace(family=family, n=n, lines=lines, total=total)
