"""Moebius function, coprime interval counts, cardinality and rank formulas.

Every formula is evaluated in exact integer arithmetic.  Sums with a 1/2
factor are computed as twice the sum, checked for evenness, and halved.
Where a quantity has several published closed forms, the variants are all
computed and cross-checked; a disagreement raises, since it can only mean a
bug here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fraction import ZERO, DomainError, Fraction
from .sequences import SequenceKind, SequenceSpec, member


def moebius(d: int) -> int:
    """Moebius value of a single integer via trial-division factorization.

    Independent of the sieve below on purpose: each can check the other.
    """
    if d < 1:
        raise DomainError(f"moebius is defined on positive integers, got {d}")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if d > 1:
        result = -result
    return result


@lru_cache(maxsize=64)
def _mu_upto(limit: int) -> tuple[int, ...]:
    """Sieved Moebius values; index d holds mu(d), index 0 is unused."""
    mu = [1] * (limit + 1)
    mu[0] = 0
    is_composite = bytearray(limit + 1)
    primes: list[int] = []
    for i in range(2, limit + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > limit:
                break
            is_composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return tuple(mu)


@dataclass(frozen=True)
class MoebiusTable:
    """Immutable table of Moebius values for 1 <= d <= limit."""

    limit: int
    values: tuple[int, ...]

    @classmethod
    def up_to(cls, limit: int) -> "MoebiusTable":
        if limit < 1:
            raise DomainError(f"table limit must be positive, got {limit}")
        return cls(limit, _mu_upto(limit))

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.limit:
            raise DomainError(f"d={d} outside table range [1, {self.limit}]")
        return self.values[d]


@lru_cache(maxsize=4096)
def _squarefree_divisors(h: int) -> tuple[tuple[int, int], ...]:
    """Pairs (d, mu(d)) over the squarefree divisors d of h."""
    divisors = [(1, 1)]
    p = 2
    while p * p <= h:
        if h % p == 0:
            while h % p == 0:
                h //= p
            divisors += [(d * p, -s) for d, s in divisors]
        p += 1 if p == 2 else 2
    if h > 1:
        divisors += [(d * h, -s) for d, s in divisors]
    return tuple(divisors)


def _coprime_count_upto(h: int, x: int) -> int:
    """Number of 1 <= j <= x with gcd(h, j) = 1."""
    if x <= 0:
        return 0
    return sum(s * (x // d) for d, s in _squarefree_divisors(h))


def phi_interval(h: int, i: int, l: int) -> int:
    """Count of j in [max(i, 1), l] that are coprime to h; 0 if empty."""
    if h < 1:
        raise DomainError(f"phi_interval requires h >= 1, got {h}")
    i = max(i, 1)
    if i > l:
        return 0
    return _coprime_count_upto(h, l) - _coprime_count_upto(h, i - 1)


def _check_even_halved(twice: int, what: str) -> int:
    if twice % 2 != 0:
        raise RuntimeError(f"{what}: doubled sum {twice} is odd")
    return twice // 2


def g_cardinality_variants(n: int, m: int) -> dict[str, int]:
    """All closed forms of the gdiff family size, keyed by variant name."""
    if n < 1 or m > n - 1:
        raise DomainError(f"gdiff cardinality requires n >= 1 and m <= n-1, got n={n}, m={m}")
    m = max(m, 0)  # the difference bound is slack for m <= 0
    phi_sum = 1 + sum(phi_interval(j, j + m - n, j) for j in range(1, n + 1))
    # Split of the same index set at j = n-m+1 (capped at n when m = 0).
    pivot = min(n - m + 1, n)
    split = (
        1
        + sum(phi_interval(j, 1, j) for j in range(1, pivot + 1))
        + sum(phi_interval(j, j + m - n, j) for j in range(pivot + 1, n + 1))
    )
    mu = _mu_upto(n)
    twice = 2 + sum(
        mu[d] * (2 * (n // d) - (n - m) // d) * ((n - m) // d + 1) for d in range(1, n + 1)
    )
    moebius_sum = _check_even_halved(twice, f"gdiff cardinality n={n} m={m}")
    return {"phi-sum": phi_sum, "split-phi-sum": split, "moebius-sum": moebius_sum}


def g_cardinality(n: int, m: int) -> int:
    """Size of the gdiff family; all variants are computed and must agree."""
    variants = g_cardinality_variants(n, m)
    values = set(variants.values())
    if len(values) != 1:
        raise RuntimeError(f"gdiff cardinality variants disagree for n={n}, m={m}: {variants}")
    return values.pop()


def g_rank_variants(n: int, m: int, x: Fraction) -> dict[str, int]:
    """Rank formulas for x in the gdiff family.

    "phi-sum" is authoritative.  "moebius-sum" reproduces a published closed
    form whose transcription is less certain; callers should report rather
    than trust a disagreement (none has been observed up to n = 30).
    """
    spec = SequenceSpec(SequenceKind.GDIFF, n, m)
    if x == ZERO or not member(spec, x):
        raise DomainError(f"{x} has no rank in the gdiff family n={n}, m={m}")
    m = max(m, 0)
    h, k = x.num, x.den
    phi_sum = sum(phi_interval(j, j + m - n, (j * h) // k) for j in range(1, n + 1))
    pivot = min(n - m + 1, n)
    split = sum(phi_interval(j, 1, (j * h) // k) for j in range(1, pivot + 1)) + sum(
        phi_interval(j, j + m - n, (j * h) // k) for j in range(pivot + 1, n + 1)
    )
    mu = _mu_upto(n)
    twice = 2
    for d in range(1, n + 1):
        if mu[d] == 0:
            continue
        nd, rd = n // d, (n - m) // d
        inner = sum(min(rd, (j * (k - h)) // k) for j in range(1, nd + 1))
        twice += mu[d] * (rd * (2 * nd - rd - 1) - 2 * inner)
    moebius_sum = _check_even_halved(twice, f"gdiff rank n={n} m={m} x={x}")
    return {"phi-sum": phi_sum, "split-phi-sum": split, "moebius-sum": moebius_sum}


def g_rank(n: int, m: int, x: Fraction) -> int:
    """Zero-based index of x in the gdiff family, by the coprime-count sum."""
    return g_rank_variants(n, m, x)["phi-sum"]


def f_cardinality_variants(q: int, p: int) -> dict[str, int]:
    """Both Moebius closed forms of the fnum family size."""
    if q < 1 or p < 1:
        raise DomainError(f"fnum cardinality requires q >= 1 and p >= 1, got q={q}, p={p}")
    p = min(p, q)  # the numerator bound is slack beyond q
    mu = _mu_upto(q)
    twice_a = 2 + sum(mu[d] * (2 * (q // d) - p // d) * (p // d + 1) for d in range(1, q + 1))
    twice_b = 3 + sum(mu[d] * (p // d) * (2 * (q // d) - p // d) for d in range(1, q + 1))
    return {
        "moebius-sum": _check_even_halved(twice_a, f"fnum cardinality q={q} p={p}"),
        "moebius-sum-alt": _check_even_halved(twice_b, f"fnum cardinality alt q={q} p={p}"),
    }


def f_cardinality(q: int, p: int) -> int:
    """Size of the fnum family of order q with numerator bound p."""
    variants = f_cardinality_variants(q, p)
    values = set(variants.values())
    if len(values) != 1:
        raise RuntimeError(f"fnum cardinality variants disagree for q={q}, p={p}: {variants}")
    return values.pop()


def full_cardinality(n: int) -> int:
    """Size of the full Farey sequence of order n."""
    return f_cardinality(n, n)


def boolean_cardinality_variants(n: int, m: int) -> dict[str, int]:
    """Both closed forms of the bool family size."""
    if n <= 1 or not 0 < m < n:
        raise DomainError(f"bool cardinality requires n > 1 and 0 < m < n, got n={n}, m={m}")
    p = min(m, n - m)
    half_sum = f_cardinality(n - m, p) + f_cardinality(m, p) - 1
    mu = _mu_upto(p)
    product = 2 + sum(mu[d] * (m // d) * ((n - m) // d) for d in range(1, p + 1))
    return {"half-sum": half_sum, "moebius-product": product}


def boolean_cardinality(n: int, m: int) -> int:
    """Size of the bool family; both closed forms must agree."""
    variants = boolean_cardinality_variants(n, m)
    values = set(variants.values())
    if len(values) != 1:
        raise RuntimeError(f"bool cardinality variants disagree for n={n}, m={m}: {variants}")
    return values.pop()


def moebius_floor_sum(t: int) -> int:
    """sum of mu(d) * floor(t/d) for d up to t; equals 1 for every t >= 1."""
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    mu = _mu_upto(t)
    return sum(mu[d] * (t // d) for d in range(1, t + 1))


def moebius_floor_square_sum(t: int) -> int:
    """sum of mu(d) * floor(t/d)^2 for d up to t."""
    if t < 1:
        raise DomainError(f"t must be positive, got {t}")
    mu = _mu_upto(t)
    return sum(mu[d] * (t // d) ** 2 for d in range(1, t + 1))


def central_identity_check(t: int) -> bool:
    """Check the square-sum identity tying three independent counts together.

    For a positive integer t the following must hold:
      sum mu(d)*floor(t/d)    == 1
      sum mu(d)*floor(t/d)^2  == |bool family of (2t, t)| - 2
                              == 2*|full Farey of order t| - 3
    A False return indicates an implementation bug, not a bad input.
    """
    square = moebius_floor_square_sum(t)
    return (
        moebius_floor_sum(t) == 1
        and square == boolean_cardinality(2 * t, t) - 2
        and square == 2 * full_cardinality(t) - 3
    )
