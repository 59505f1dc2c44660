"""Exact natural-number arithmetic: division, primes, factorization, divisor sums.

Everything runs on Python's unbounded ints. Rationals are fractions.Fraction,
which already keeps values reduced with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DomainError, ResourceLimitError

ExactRational = Fraction

DEFAULT_SIEVE_LIMIT = 10**7
DEFAULT_FACTOR_BUDGET = 10**7


def _natural(value: int, name: str) -> int:
    if not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return value


def divmod(a: int, b: int) -> tuple[int, int]:  # noqa: A001 - it is the division op
    """The unique pair (q, r) with a = b*q + r and 0 <= r < b."""
    _natural(a, "a")
    _natural(b, "b")
    if b == 0:
        raise ZeroDivisionError("divmod: divisor must be at least 1")
    return a // b, a % b


def smallest_prime_factor(n: int, *, step_budget: int | None = None) -> int:
    """Least prime dividing n >= 2; n is prime exactly when this returns n."""
    _natural(n, "n")
    if n < 2:
        raise DomainError(f"smallest_prime_factor needs n >= 2, got {n}")
    if n % 2 == 0:
        return 2
    budget = DEFAULT_FACTOR_BUDGET if step_budget is None else step_budget
    steps = 0
    d = 3
    while d * d <= n:
        steps += 1
        if steps > budget:
            raise ResourceLimitError(
                f"smallest_prime_factor({n}): exceeded {budget} trial divisions"
            )
        if n % d == 0:
            return d
        d += 2
    return n


def primes_up_to(limit: int, *, sieve_budget: int | None = None) -> list[int]:
    """All primes <= limit, ascending, by sieve of Eratosthenes."""
    _natural(limit, "limit")
    budget = DEFAULT_SIEVE_LIMIT if sieve_budget is None else sieve_budget
    if limit > budget:
        raise ResourceLimitError(f"primes_up_to({limit}): sieve limit is {budget}")
    if limit < 2:
        return []
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [n for n in range(2, limit + 1) if flags[n]]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs; empty for 1."""

    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for prime, exponent in self.factors:
            out *= prime**exponent
        return out

    def primes(self) -> list[int]:
        return [prime for prime, _ in self.factors]


def factorize(n: int, *, step_budget: int | None = None) -> Factorization:
    """Full trial-division factorization of n >= 1."""
    _natural(n, "n")
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    budget = DEFAULT_FACTOR_BUDGET if step_budget is None else step_budget
    factors: list[tuple[int, int]] = []
    rest = n
    exponent = 0
    while rest % 2 == 0:
        rest //= 2
        exponent += 1
    if exponent:
        factors.append((2, exponent))
    d = 3
    steps = 0
    while d * d <= rest:
        steps += 1
        if steps > budget:
            raise ResourceLimitError(f"factorize({n}): exceeded {budget} trial divisions")
        if rest % d == 0:
            exponent = 0
            while rest % d == 0:
                rest //= d
                exponent += 1
            factors.append((d, exponent))
        d += 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(tuple(factors))


def sigma(n: int, *, step_budget: int | None = None) -> int:
    """Sum of every positive divisor of n, n itself included."""
    _natural(n, "n")
    if n < 1:
        raise DomainError(f"sigma needs n >= 1, got {n}")
    total = 1
    for prime, exponent in factorize(n, step_budget=step_budget).factors:
        total *= (prime ** (exponent + 1) - 1) // (prime - 1)
    return total


def lucas_lehmer(p: int, *, step_budget: int | None = None) -> bool:
    """Whether 2**p - 1 is prime, for a prime exponent p."""
    _natural(p, "p")
    if p < 2 or smallest_prime_factor(p, step_budget=step_budget) != p:
        raise DomainError(f"lucas_lehmer needs a prime exponent, got {p}")
    if p == 2:
        return True
    modulus = (1 << p) - 1
    s = 4
    for _ in range(p - 2):
        s = (s * s - 2) % modulus
    return s == 0


def rational_str(value: Fraction) -> str:
    """Render a rational as "num/den" with the denominator always explicit."""
    return f"{value.numerator}/{value.denominator}"
