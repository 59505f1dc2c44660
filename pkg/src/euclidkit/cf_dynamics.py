"""Continued fractions from the division chain, the partial-quotient sum
statistic, and the subtractive map as a dynamical system with unimodular step
matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError
from .euclid import gcd_remainder

DEFAULT_SCAN_BUDGET = 10**6
DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class ContinuedFraction:
    """Regular continued fraction [q1; q2, ...]: q1 >= 0, later terms >= 1."""

    quotients: tuple[int, ...]


@dataclass(frozen=True)
class QuotientSumStat:
    """Total of all partial quotients over denominators 1..a, with the
    6/pi^2 * a * ln(a)^2 prediction."""

    a: int
    total: int
    predicted: float
    ratio: float


@dataclass(frozen=True)
class UnimodularMatrix:
    """2x2 integer matrix; products of the step matrices keep determinant 1."""

    m11: int
    m12: int
    m21: int
    m22: int

    @property
    def determinant(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def multiply(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
TOP_MINUS_BOTTOM = UnimodularMatrix(1, -1, 0, 1)  # applied when x >= y
BOTTOM_MINUS_TOP = UnimodularMatrix(1, 0, -1, 1)  # applied when x < y


@dataclass(frozen=True)
class DynamicsRun:
    """One orbit of the subtractive map down to a zero coordinate."""

    start: tuple[int, int]
    step_count: int
    terminal: tuple[int, int]
    product: UnimodularMatrix


def cf_expand(a: int, b: int) -> ContinuedFraction:
    """Partial quotients of a/b, read straight off the division chain."""
    _, trace = gcd_remainder(a, b)
    return ContinuedFraction(tuple(step.quotient for step in trace.steps))


def _validate_quotients(cf) -> tuple[int, ...]:
    quotients = tuple(cf.quotients) if isinstance(cf, ContinuedFraction) else tuple(cf)
    if not quotients:
        raise DomainError("a continued fraction needs at least one quotient")
    for i, q in enumerate(quotients):
        if not isinstance(q, int):
            raise DomainError(f"quotients must be integers, got {q!r}")
        if i == 0 and q < 0:
            raise DomainError(f"the leading quotient must be >= 0, got {q}")
        if i > 0 and q < 1:
            raise DomainError(f"quotients after the first must be >= 1, got {q}")
    return quotients


def cf_value(cf) -> tuple[int, int]:
    """Reduced fraction (num, den) whose continued fraction is cf.

    Folded back to front: (num, den) <- (q*num + den, num). Consecutive
    convergents are coprime, so no reduction step is needed.
    """
    quotients = _validate_quotients(cf)
    num, den = quotients[-1], 1
    for q in reversed(quotients[:-1]):
        num, den = q * num + den, num
    return num, den


def yao_knuth_stat(a: int, *, scan_budget: int | None = None) -> QuotientSumStat:
    """Sum the partial quotients of a/b over every b in 1..a.

    The pairs are taken as given, not reduced first. The prediction uses the
    natural logarithm.
    """
    if a < 2:
        raise DomainError(f"yao_knuth_stat needs a >= 2, got {a}")
    budget = DEFAULT_SCAN_BUDGET if scan_budget is None else scan_budget
    if a > budget:
        raise ResourceLimitError(f"yao_knuth_stat({a}): scan budget is {budget}")
    total = 0
    for b in range(1, a + 1):
        x, y = a, b
        while y:
            total += x // y
            x, y = y, x % y
    predicted = (6.0 / math.pi**2) * a * math.log(a) ** 2
    return QuotientSumStat(a, total, predicted, total / predicted)


def average_cf_length(a: int, *, scan_budget: int | None = None) -> float:
    """Mean number of division steps for a/b over b = 1..a (report-only)."""
    if a < 2:
        raise DomainError(f"average_cf_length needs a >= 2, got {a}")
    budget = DEFAULT_SCAN_BUDGET if scan_budget is None else scan_budget
    if a > budget:
        raise ResourceLimitError(f"average_cf_length({a}): scan budget is {budget}")
    steps = 0
    for b in range(1, a + 1):
        x, y = a, b
        while y:
            steps += 1
            x, y = y, x % y
    return steps / a


def dynamical_run(x: int, y: int, *, step_budget: int | None = None) -> DynamicsRun:
    """Iterate (x, y) -> (x - y, y) if x >= y else (x, y - x) until a
    coordinate is zero, accumulating the product of the step matrices.

    Ties take the first branch. The terminal pair is (0, d) or (d, 0) with
    d = gcd, and product applied to the start gives the terminal.
    """
    if x < 0 or y < 0:
        raise DomainError(f"dynamical_run needs naturals, got ({x}, {y})")
    if x == 0 and y == 0:
        raise DomainError("dynamical_run needs a nonzero coordinate")
    budget = DEFAULT_STEP_BUDGET if step_budget is None else step_budget
    cx, cy = x, y
    p11, p12, p21, p22 = 1, 0, 0, 1
    steps = 0
    while cx and cy:
        steps += 1
        if steps > budget:
            raise ResourceLimitError(
                f"dynamical_run({x}, {y}): exceeded {budget} steps"
            )
        if cx >= cy:
            cx -= cy
            p11 -= p21  # left-multiply by TOP_MINUS_BOTTOM
            p12 -= p22
        else:
            cy -= cx
            p21 -= p11  # left-multiply by BOTTOM_MINUS_TOP
            p22 -= p12
    return DynamicsRun((x, y), steps, (cx, cy), UnimodularMatrix(p11, p12, p21, p22))
