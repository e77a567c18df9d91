"""Exact dense truncated power series over the integers.

A series is a dense coefficient vector c_0..c_N representing a power
series mod q^(N+1). All arithmetic is exact (Python ints); the truncation
order is passed explicitly to every operation so two routes can never be
compared at silently different orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series mod q^(order+1); coeffs[i] is the coefficient of q^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series has at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


@dataclass(frozen=True)
class PochhammerSpec:
    """(L; q^step)_inf with L = sign * q^offset, i.e. factors (1 - sign*q^(offset + s*step)).

    sign=+1 gives factors (1 - q^m), sign=-1 gives (1 + q^m).
    """

    sign: int
    offset: int
    step: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.offset < 1 or self.step < 1:
            raise ValueError("offset and step must be >= 1")


def one(order: int) -> TruncatedSeries:
    """The multiplicative identity 1 at the given truncation order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries((1,) + (0,) * order)


def mul(a: TruncatedSeries, b: TruncatedSeries, order: int) -> TruncatedSeries:
    """Cauchy product truncated at `order` (schoolbook convolution)."""
    if a.order < order or b.order < order:
        raise ValueError("both factors must carry coefficients up to the requested order")
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (order + 1)
    for i in range(order + 1):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def reciprocal(a: TruncatedSeries, order: int) -> TruncatedSeries:
    """Multiplicative inverse mod q^(order+1); requires constant term 1.

    Standard recurrence: r_0 = 1, r_k = -sum_{i=1..k} a_i r_{k-i}.
    """
    if a.coeffs[0] != 1:
        raise ValueError("reciprocal requires constant term 1")
    if a.order < order:
        raise ValueError("input must carry coefficients up to the requested order")
    r = [0] * (order + 1)
    r[0] = 1
    for k in range(1, order + 1):
        r[k] = -sum(a.coeffs[i] * r[k - i] for i in range(1, k + 1))
    return TruncatedSeries(tuple(r))


def _mul_binomial_inplace(c: list[int], m: int, sign: int) -> None:
    # Multiply the coefficient list by (1 - sign*q^m) in place.
    for k in range(len(c) - 1, m - 1, -1):
        c[k] -= sign * c[k - m]


def pochhammer(spec: PochhammerSpec, order: int) -> TruncatedSeries:
    """Expand prod_{s>=0} (1 - sign*q^(offset + s*step)) mod q^(order+1).

    Only the finitely many factors with exponent <= order matter; all later
    factors are 1 mod q^(order+1).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    c[0] = 1
    m = spec.offset
    while m <= order:
        _mul_binomial_inplace(c, m, spec.sign)
        m += spec.step
    return TruncatedSeries(tuple(c))


def product_power(e: Callable[[int], int], order: int) -> TruncatedSeries:
    """Expand prod_{n=1..order} (1+q^n)^e(n) mod q^(order+1).

    Each (1+q^n) factor is a shift-and-add pass, applied e(n) times.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order + 1):
        for _ in range(e(n)):
            _mul_binomial_inplace(c, n, -1)
    return TruncatedSeries(tuple(c))
