"""The five restricted partition families, each computable by four routes.

Routes:
  GF       — expand the family's q-Pochhammer generating function,
  PRODUCT  — expand prod (1+q^n)^v(n) with the family's exponent rule,
  BINOMIAL — bounded-knapsack DP over the binomial-weighted capped partitions,
  BRUTE    — direct combinatorial enumeration from the family's definition.

Agreement of all four, coefficient by coefficient, is the verification
performed by the `verify` module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Sequence

from .series import PochhammerSpec, TruncatedSeries, mul, one, pochhammer, product_power, reciprocal
from .valuation import FamilyId, exponent

BRUTE_LIMIT = 60  # brute-force enumeration is refused beyond this n


class Route(enum.Enum):
    GF = "gf"
    PRODUCT = "product"
    BINOMIAL = "binomial"
    BRUTE = "brute"

    @classmethod
    def from_token(cls, token: str) -> "Route":
        for route in cls:
            if route.value == token:
                return route
        raise ValueError(f"unknown route {token!r}")


@dataclass(frozen=True)
class FamilySpec:
    """Generating-function shape and combinatorial definition of one family."""

    id: FamilyId
    numerator: PochhammerSpec | None
    denominator: PochhammerSpec
    definition: str


# (±q^a; q^b)_inf specs: sign=+1 means factors (1 - q^m), sign=-1 means (1 + q^m).
_NEG_Q_QSQ = PochhammerSpec(sign=-1, offset=1, step=2)   # (-q;   q^2)
_NEG_QSQ_QSQ = PochhammerSpec(sign=-1, offset=2, step=2)  # (-q^2; q^2)
_Q_QSQ = PochhammerSpec(sign=1, offset=1, step=2)        # (q;    q^2)
_QSQ_QSQ = PochhammerSpec(sign=1, offset=2, step=2)      # (q^2;  q^2)

FAMILIES: dict[FamilyId, FamilySpec] = {
    FamilyId.OVERPARTITION_ODD: FamilySpec(
        FamilyId.OVERPARTITION_ODD, _NEG_Q_QSQ, _Q_QSQ,
        "overpartitions into odd parts (first occurrence of each part size may be overlined)"),
    FamilyId.PED: FamilySpec(
        FamilyId.PED, _NEG_QSQ_QSQ, _Q_QSQ,
        "partitions with distinct even parts; odd parts may repeat"),
    FamilyId.PD: FamilySpec(
        FamilyId.PD, None, _Q_QSQ,
        "partitions into distinct parts (equinumerous with partitions into odd parts, "
        "which is what 1/(q;q^2) literally generates)"),
    FamilyId.POD: FamilySpec(
        FamilyId.POD, _NEG_Q_QSQ, _QSQ_QSQ,
        "partitions with distinct odd parts; even parts may repeat"),
    FamilyId.PE: FamilySpec(
        FamilyId.PE, None, _QSQ_QSQ,
        "partitions into even parts only"),
}


@dataclass(frozen=True)
class CappedPartition:
    """A partition of n as a multiplicity vector with per-part caps.

    multiplicities[k-1] is the multiplicity of part k (length n); weight is
    prod_k C(cap(k), multiplicities[k-1]), always >= 1 for emitted partitions.
    """

    n: int
    multiplicities: tuple[int, ...]
    weight: int

    def parts(self) -> tuple[int, ...]:
        """Parts in decreasing order, e.g. (3, 1, 1)."""
        out: list[int] = []
        for k in range(len(self.multiplicities), 0, -1):
            out.extend([k] * self.multiplicities[k - 1])
        return tuple(out)


def gf_series(family: FamilyId, order: int) -> TruncatedSeries:
    """Expand the family's generating function (Pochhammer fraction) to `order`."""
    spec = FAMILIES[family]
    inv_den = reciprocal(pochhammer(spec.denominator, order), order)
    if spec.numerator is None:
        return inv_den
    return mul(pochhammer(spec.numerator, order), inv_den, order)


def product_series(family: FamilyId, order: int) -> TruncatedSeries:
    """Expand prod_{n>=1} (1+q^n)^v(n) with the family's exponent rule."""
    return product_power(lambda n: exponent(family, n), order)


def binomial_table(family: FamilyId, order: int) -> list[int]:
    """f(0..order) by the bounded-knapsack DP over binomial-weighted multiplicities.

    State is the remaining weight; the transition at part k chooses its
    multiplicity t <= v(k) with weight C(v(k), t).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    dp = [0] * (order + 1)
    dp[0] = 1
    for k in range(1, order + 1):
        cap = exponent(family, k)
        if cap == 0:
            continue
        weights = [comb(cap, t) for t in range(cap + 1)]
        new = [0] * (order + 1)
        for m in range(order + 1):
            acc = 0
            for t in range(min(cap, m // k) + 1):
                acc += weights[t] * dp[m - k * t]
            new[m] = acc
        dp = new
    return dp


def binomial_sum(family: FamilyId, n: int) -> int:
    """Sum of prod_k C(v(k), t_k) over multiplicity vectors with sum k*t_k = n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return binomial_table(family, n)[n]


def enumerate_capped(n: int, cap: Callable[[int], int]) -> list[CappedPartition]:
    """All partitions of n with multiplicity of part k at most cap(k).

    Emitted in lexicographically decreasing part order (largest part first),
    each with its binomial weight prod_k C(cap(k), t_k).
    """
    if n < 1:
        raise ValueError("n must be positive")
    caps = [0] + [cap(k) for k in range(1, n + 1)]
    results: list[CappedPartition] = []
    mult = [0] * (n + 1)

    def rec(remaining: int, max_part: int) -> None:
        if remaining == 0:
            weight = 1
            for k in range(1, n + 1):
                if mult[k]:
                    weight *= comb(caps[k], mult[k])
            results.append(CappedPartition(n, tuple(mult[1:]), weight))
            return
        for k in range(min(max_part, remaining), 0, -1):
            if mult[k] < caps[k]:
                mult[k] += 1
                rec(remaining - k, k)
                mult[k] -= 1

    rec(n, n)
    return results


def _count_partitions(n: int, part_ok: Callable[[int], bool],
                      max_mult: Callable[[int], int | None],
                      size_factor: int = 1) -> int:
    # Counts partitions of n into parts k with part_ok(k), multiplicity
    # bounded by max_mult(k) (None = unbounded); each part size actually
    # used contributes a multiplicative size_factor (2 for overlining).
    @lru_cache(maxsize=None)
    def rec(remaining: int, largest: int) -> int:
        if remaining == 0:
            return 1
        if largest == 0:
            return 0
        total = rec(remaining, largest - 1)
        if part_ok(largest):
            cap = max_mult(largest)
            t = 1
            while t * largest <= remaining and (cap is None or t <= cap):
                total += size_factor * rec(remaining - t * largest, largest - 1)
                t += 1
        return total

    return rec(n, n)


def brute_force_count(family: FamilyId, n: int) -> int:
    """Count by direct enumeration from the family's combinatorial definition.

    The distinct-parts family is tallied twice (distinct parts, and odd
    parts, which its generating function literally enumerates); the two
    tallies must agree or this raises.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > BRUTE_LIMIT:
        raise ValueError(f"brute-force enumeration is limited to n <= {BRUTE_LIMIT}")
    if n == 0:
        return 1
    if family is FamilyId.OVERPARTITION_ODD:
        return _count_partitions(n, lambda k: k % 2 == 1, lambda k: None, size_factor=2)
    if family is FamilyId.PED:
        return _count_partitions(n, lambda k: True, lambda k: 1 if k % 2 == 0 else None)
    if family is FamilyId.PD:
        distinct = _count_partitions(n, lambda k: True, lambda k: 1)
        odd = _count_partitions(n, lambda k: k % 2 == 1, lambda k: None)
        if distinct != odd:
            raise AssertionError(f"distinct-parts and odd-parts tallies differ at n={n}: "
                                 f"{distinct} vs {odd}")
        return distinct
    if family is FamilyId.POD:
        return _count_partitions(n, lambda k: True, lambda k: 1 if k % 2 == 1 else None)
    if family is FamilyId.PE:
        return _count_partitions(n, lambda k: k % 2 == 0, lambda k: None)
    raise AssertionError(f"unhandled family {family}")


def table(family: FamilyId, order: int, route: Route) -> list[int]:
    """f(0..order) by the requested route."""
    if order < 0:
        raise ValueError("order must be non-negative")
    if route is Route.GF:
        return list(gf_series(family, order).coeffs)
    if route is Route.PRODUCT:
        return list(product_series(family, order).coeffs)
    if route is Route.BINOMIAL:
        return binomial_table(family, order)
    if route is Route.BRUTE:
        if order > BRUTE_LIMIT:
            raise ValueError(f"brute route is limited to order <= {BRUTE_LIMIT}")
        return [brute_force_count(family, n) for n in range(order + 1)]
    raise AssertionError(f"unhandled route {route}")
