"""Euclid's gcd in four forms: subtractive, remainder, extended, and division
reconstructed from a gcd identity certificate.

The subtractive and remainder forms return full step traces so callers can
replay and audit every reduction; the extended form fixes its coefficients by
back-substitution through the remainder trace, making them deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateMismatchError, DomainError, ResourceLimitError

DEFAULT_STEP_BUDGET = 10**6


@dataclass(frozen=True)
class EuclidStep:
    """One reduction: larger = smaller * quotient + remainder.

    Subtractive steps carry quotient None and remainder = larger - smaller.
    """

    larger: int
    smaller: int
    quotient: int | None
    remainder: int


@dataclass(frozen=True)
class EuclidTrace:
    """Ordered reduction steps for one gcd computation."""

    method: str  # "subtractive" or "remainder"
    steps: tuple[EuclidStep, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)

    def quotients(self) -> list[int]:
        if self.method != "remainder":
            raise DomainError("quotients are defined for remainder traces only")
        return [step.quotient for step in self.steps]


@dataclass(frozen=True)
class BezoutCertificate:
    """Integers x, y with a*x + b*y = g = gcd(a, b)."""

    a: int
    b: int
    g: int
    x: int
    y: int

    def holds(self) -> bool:
        return self.a * self.x + self.b * self.y == self.g


def _positive(value: int, name: str) -> int:
    if not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise DomainError(f"{name} must be at least 1, got {value}")
    return value


def _gcd(a: int, b: int) -> int:
    # lean remainder loop for internal use; public ops build traces
    while b:
        a, b = b, a % b
    return a


def gcd_subtractive(
    a: int, b: int, *, step_budget: int | None = None
) -> tuple[int, EuclidTrace]:
    """Gcd by repeated subtraction, stopping when the pair becomes equal."""
    _positive(a, "a")
    _positive(b, "b")
    budget = DEFAULT_STEP_BUDGET if step_budget is None else step_budget
    hi, lo = (a, b) if a >= b else (b, a)
    steps: list[EuclidStep] = []
    while hi != lo:
        if len(steps) >= budget:
            raise ResourceLimitError(
                f"gcd_subtractive({a}, {b}): exceeded {budget} subtraction steps"
            )
        diff = hi - lo
        steps.append(EuclidStep(hi, lo, None, diff))
        hi, lo = (lo, diff) if lo >= diff else (diff, lo)
    return hi, EuclidTrace("subtractive", tuple(steps))


def gcd_remainder(a: int, b: int) -> tuple[int, EuclidTrace]:
    """Gcd by repeated division, with the full quotient/remainder chain."""
    _positive(a, "a")
    _positive(b, "b")
    steps: list[EuclidStep] = []
    x, y = a, b
    while True:
        q, r = x // y, x % y
        steps.append(EuclidStep(x, y, q, r))
        if r == 0:
            return y, EuclidTrace("remainder", tuple(steps))
        x, y = y, r


def xgcd(a: int, b: int) -> BezoutCertificate:
    """Bezout certificate a*x + b*y = gcd(a, b).

    The coefficients are fixed by back-substitution: start from the last
    division step, where g = 0*larger + 1*smaller, and unwind each step
    (x, y) -> (y, x - q*y) up the trace.
    """
    g, trace = gcd_remainder(a, b)
    x, y = 0, 1
    for step in reversed(trace.steps[:-1]):
        x, y = y, x - step.quotient * y
    return BezoutCertificate(a, b, g, x, y)


def gcd_many(values) -> int:
    """Left fold of the pairwise gcd over a non-empty list."""
    vals = list(values)
    if not vals:
        raise DomainError("gcd_many needs at least one value")
    for v in vals:
        _positive(v, "values[i]")
    g = vals[0]
    for v in vals[1:]:
        g = _gcd(g, v)
    return g


def lcm(a: int, b: int) -> int:
    """Least common multiple a*b / gcd(a, b)."""
    _positive(a, "a")
    _positive(b, "b")
    return a // _gcd(a, b) * b


def lowest_terms(a: int, b: int) -> tuple[int, int]:
    """The pair divided by its gcd; the result is coprime."""
    _positive(a, "a")
    _positive(b, "b")
    g = _gcd(a, b)
    return a // g, b // g


def _subtractive_gcd_value(a: int, b: int, budget: int) -> int:
    # division-free gcd used to validate certificates inside
    # division_from_bezout, so that routine never divides at all
    hi, lo = (a, b) if a >= b else (b, a)
    steps = 0
    while hi != lo:
        steps += 1
        if steps > budget:
            raise ResourceLimitError(
                f"gcd validation for ({a}, {b}) exceeded {budget} subtraction steps"
            )
        hi -= lo
        if hi < lo:
            hi, lo = lo, hi
    return hi


def division_from_bezout(
    a: int, b: int, cert: BezoutCertificate, *, step_budget: int | None = None
) -> tuple[int, int]:
    """Quotient and remainder of a by b rebuilt from a Bezout certificate,
    using only comparison, addition, subtraction and multiplication.

    The certificate is first shifted along (x, y) -> (x + b, y - a) until
    x >= 0; that keeps a*x + b*y fixed. Writing g = gcd(a, b):

    - x = 0 forces g = b, so b | a and the quotient is counted by
      subtraction;
    - x = 1 gives a = -y*b + g directly;
    - x > 1 uses a = b*(-y - x + 1) + t with t = (x - 1)*(b - a) + g, split
      on where t lands: in [0, b) it is the remainder; above b forces b > a;
      equal to b means b | a; below 0 an ascending scan finds the least i
      with i*b <= -t < (i+1)*b and reads the answer off that interval.
    """
    _positive(a, "a")
    _positive(b, "b")
    budget = DEFAULT_STEP_BUDGET if step_budget is None else step_budget
    if cert.a != a or cert.b != b:
        raise CertificateMismatchError(
            f"certificate is for pair ({cert.a}, {cert.b}), not ({a}, {b})"
        )
    if not cert.holds():
        raise CertificateMismatchError(
            f"certificate identity fails: {a}*{cert.x} + {b}*{cert.y} != {cert.g}"
        )
    if cert.g != _subtractive_gcd_value(a, b, budget):
        raise CertificateMismatchError(f"certificate g = {cert.g} is not gcd({a}, {b})")

    g, x, y = cert.g, cert.x, cert.y
    shifts = 0
    while x < 0:
        shifts += 1
        if shifts > budget:
            raise ResourceLimitError(
                f"division_from_bezout({a}, {b}): exceeded {budget} certificate shifts"
            )
        x += b
        y -= a

    if x == 0:
        # b*y = g with g | b, so g = b and b | a; count the quotient
        q = 0
        rest = a
        while rest >= b:
            q += 1
            if q > budget:
                raise ResourceLimitError(
                    f"division_from_bezout({a}, {b}): exceeded {budget} subtractions"
                )
            rest -= b
        return q, rest

    if x == 1:
        # a = -y*b + g
        if g == b:
            return 1 - y, 0
        return -y, g

    # x > 1: a = b*(-y - x + 1) + t
    t = (x - 1) * (b - a) + g
    if 0 <= t < b:
        return -y - x + 1, t
    if t > b:
        # t above b forces b > a, so the quotient is zero
        return 0, a
    if t == b:
        return -y - x + 2, 0

    # t < 0: a = b*d - c with d = -y - x + 1 > 0 and 0 < c < b*d; scan the
    # intervals [0, b), [b, 2b), ... for the least i with i*b <= c
    c = -t
    d = -y - x + 1
    i = 0
    while (i + 1) * b <= c:
        i += 1
        if i > budget:
            raise ResourceLimitError(
                f"division_from_bezout({a}, {b}): exceeded {budget} interval steps"
            )
    r = (i + 1) * b - c
    if r == b:
        # c sits exactly on i*b, so a = b*(d - i) with nothing left over
        return d - i, 0
    return d - i - 1, r
