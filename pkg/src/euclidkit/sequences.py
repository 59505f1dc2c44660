"""Coprime-witness sequences, the prime-between-squares equivalence, distinct
prime divisors for composite runs, and witness-free run lengths."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, gcd, isqrt, log

from .errors import DomainError
from .integers import factorize, primes_up_to, smallest_prime_factor

DEFAULT_WINDOW_CAP = 10**4


@dataclass(frozen=True)
class WReport:
    """A strictly increasing sequence and the least index (1-based) of an
    element coprime to all the others, if one exists."""

    sequence: tuple[int, ...]
    witness_index: int | None

    @property
    def witness_value(self) -> int | None:
        if self.witness_index is None:
            return None
        return self.sequence[self.witness_index - 1]


@dataclass(frozen=True)
class GrimmAssignment:
    """Distinct primes for the composite window start+1 .. start+length;
    assignment[i] divides start + 1 + i."""

    start: int
    length: int
    assignment: tuple[int, ...]


def w_witness(seq) -> WReport:
    """Find the least element coprime to every other element."""
    values = tuple(seq)
    if not values:
        raise DomainError("w_witness needs a non-empty sequence")
    previous = 0
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"w_witness needs naturals >= 1, got {v!r}")
        if v <= previous:
            raise DomainError("w_witness needs a strictly increasing sequence")
        previous = v
    n = len(values)
    for r in range(n):
        vr = values[r]
        if all(gcd(vr, values[j]) == 1 for j in range(n) if j != r):
            return WReport(values, r + 1)
    return WReport(values, None)


def _window_prime_flags(lo: int, hi: int, *, sieve_budget: int | None = None) -> list[bool]:
    """Primality flags for lo..hi by sieving with base primes up to sqrt(hi)."""
    size = hi - lo + 1
    flags = [True] * size
    for offset in range(size):
        if lo + offset < 2:
            flags[offset] = False
    for p in primes_up_to(isqrt(hi), sieve_budget=sieve_budget):
        first = max(p * p, ((lo + p - 1) // p) * p)
        for multiple in range(first, hi + 1, p):
            flags[multiple - lo] = False
    return flags


def prime_interval_equivalence(m: int, *, sieve_budget: int | None = None) -> tuple[bool, bool]:
    """(prime between m^2 and (m+1)^2 exclusive, window m^2+1..m^2+2m has a
    coprime witness) — computed by two unrelated scans.

    The first boolean comes from a primality sieve of the window, the second
    from pairwise gcds only.
    """
    if m < 1:
        raise DomainError(f"prime_interval_equivalence needs m >= 1, got {m}")
    lo = m * m + 1
    hi = (m + 1) * (m + 1) - 1
    prime_exists = any(_window_prime_flags(lo, hi, sieve_budget=sieve_budget))
    is_w = w_witness(range(lo, hi + 1)).witness_index is not None
    return prime_exists, is_w


def grimm_assign(m: int, n: int, *, step_budget: int | None = None) -> GrimmAssignment | None:
    """Choose distinct primes p_i | m + i for the all-composite window
    m+1 .. m+n, or None if no such choice exists.

    Augmenting-path bipartite matching between window positions and the
    primes dividing them; positions and primes are tried in ascending order,
    so the result is deterministic.
    """
    if m < 0:
        raise DomainError(f"grimm_assign needs m >= 0, got {m}")
    if n < 1:
        raise DomainError(f"grimm_assign needs n >= 1, got {n}")
    divisors: list[list[int]] = []
    for value in range(m + 1, m + n + 1):
        if value < 4 or smallest_prime_factor(value, step_budget=step_budget) == value:
            raise DomainError(f"window element {value} is not composite")
        divisors.append(factorize(value, step_budget=step_budget).primes())

    owner: dict[int, int] = {}  # prime -> position currently using it

    def try_assign(pos: int, banned: set[int]) -> bool:
        for p in divisors[pos]:
            if p in banned:
                continue
            banned.add(p)
            if p not in owner or try_assign(owner[p], banned):
                owner[p] = pos
                return True
        return False

    for pos in range(n):
        if not try_assign(pos, set()):
            return None
    assignment: list[int] = [0] * n
    for p, pos in owner.items():
        assignment[pos] = p
    return GrimmAssignment(m, n, tuple(assignment))


def composite_runs(limit: int, *, sieve_budget: int | None = None) -> list[tuple[int, int]]:
    """Maximal runs of consecutive composites with last element <= limit,
    as (m, n) meaning the run is m+1 .. m+n."""
    if limit < 4:
        raise DomainError(f"composite_runs needs limit >= 4, got {limit}")
    primes = primes_up_to(limit + 1, sieve_budget=sieve_budget)
    out: list[tuple[int, int]] = []
    for p, q in zip(primes, primes[1:]):
        if q - p >= 2:
            out.append((p, q - p - 1))
    return out


def verify_assignment(result: GrimmAssignment) -> bool:
    """Re-check an assignment from scratch: divisibility and distinctness."""
    if len(result.assignment) != result.length:
        return False
    if len(set(result.assignment)) != result.length:
        return False
    for i, p in enumerate(result.assignment):
        value = result.start + 1 + i
        if p < 2 or smallest_prime_factor(p) != p or value % p != 0:
            return False
    return True


def _assignment_by_backtracking(divisor_sets: list[list[int]]) -> list[int] | None:
    """Exhaustive search for distinct representatives; the slow safety net
    that must confirm any run the matching reports as infeasible."""
    n = len(divisor_sets)
    chosen: list[int] = []
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        for p in divisor_sets[i]:
            if p not in used:
                used.add(p)
                chosen.append(p)
                if extend(i + 1):
                    return True
                chosen.pop()
                used.remove(p)
        return False

    return chosen[:] if extend(0) else None


def grimm_scan(limit: int, *, sieve_budget: int | None = None):
    """Assign distinct primes on every maximal composite run starting <= limit.

    Returns a list of (m, n, matched, assignment, validated). A run the
    matching cannot satisfy is re-verified by exhaustive backtracking before
    it is reported infeasible; disagreement between the two searches is a bug
    and raises.
    """
    if limit < 4:
        raise DomainError(f"grimm_scan needs limit >= 4, got {limit}")
    # sieve far enough to see the first prime beyond limit
    horizon = limit + 2
    primes = primes_up_to(horizon, sieve_budget=sieve_budget)
    while not primes or primes[-1] <= limit:
        horizon += max(1000, horizon // 10)
        primes = primes_up_to(horizon, sieve_budget=sieve_budget)
    results = []
    for p, q in zip(primes, primes[1:]):
        if p >= limit:
            break
        n = q - p - 1
        if n < 1:
            continue
        result = grimm_assign(p, n)
        if result is None:
            confirmed = (
                _assignment_by_backtracking(
                    [factorize(v).primes() for v in range(p + 1, q)]
                )
                is None
            )
            if not confirmed:
                raise RuntimeError(f"matching and exhaustive search disagree at run {p}+1..{q}-1")
            results.append((p, n, False, (), False))
            continue
        results.append((p, n, True, result.assignment, verify_assignment(result)))
    return results


def default_window_bound(m: int) -> int:
    """Default search ceiling for witness-free runs: ceil(4 * ln(m+2)^2)."""
    if m < 0:
        raise DomainError(f"default_window_bound needs m >= 0, got {m}")
    return max(1, ceil(4 * log(m + 2) ** 2))


def non_w_max_run(m: int, n_max: int, *, window_cap: int | None = None) -> int:
    """Largest n <= n_max such that m+1 .. m+n has no coprime witness (0 if
    every length has one). Checks every n: witness-freeness is not monotone."""
    if m < 0:
        raise DomainError(f"non_w_max_run needs m >= 0, got {m}")
    if n_max < 1:
        raise DomainError(f"non_w_max_run needs n_max >= 1, got {n_max}")
    cap = DEFAULT_WINDOW_CAP if window_cap is None else window_cap
    if n_max > cap:
        raise DomainError(f"non_w_max_run window cap is {cap}, got n_max = {n_max}")
    best = 0
    for n in range(1, n_max + 1):
        if w_witness(range(m + 1, m + n + 1)).witness_index is None:
            best = n
    return best
