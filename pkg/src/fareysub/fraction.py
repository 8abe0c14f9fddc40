"""Reduced fractions in [0, 1] and unimodular integer matrices acting on them.

Fractions are stored reduced, with 0/1 and 1/1 as the canonical endpoints.
Everything here is exact integer arithmetic; no value is ever converted to
float.  All types are immutable and all functions are pure, so they can be
shared freely across threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass(frozen=True, slots=True)
class Fraction:
    """A reduced fraction num/den with 0 <= num <= den and den > 0."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise DomainError(f"denominator must be positive, got {self.den}")
        if not 0 <= self.num <= self.den:
            raise DomainError(f"{self.num}/{self.den} is outside [0/1, 1/1]")
        if math.gcd(self.num, self.den) != 1:
            raise DomainError(f"{self.num}/{self.den} is not reduced")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    # Total order by cross multiplication; denominators are positive.
    def __lt__(self, other: "Fraction") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Fraction") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Fraction") -> bool:
        return self.num * other.den > other.num * self.den

    def __ge__(self, other: "Fraction") -> bool:
        return self.num * other.den >= other.num * self.den


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
HALF = Fraction(1, 2)

_FRACTION_RE = re.compile(r"(\d+)/(\d+)")


def make_fraction(h: int, k: int) -> Fraction:
    """Reduce h/k to canonical form; h/k must lie in [0, 1] with k > 0."""
    if k <= 0:
        raise DomainError(f"denominator must be positive, got {k}")
    if not 0 <= h <= k:
        raise DomainError(f"{h}/{k} is outside [0/1, 1/1]")
    g = math.gcd(h, k)
    return Fraction(h // g, k // g)


def parse_fraction(text: str) -> Fraction:
    """Parse the textual form "h/k"; only reduced fractions are accepted."""
    match = _FRACTION_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"expected a fraction of the form 'h/k', got {text!r}")
    h, k = int(match.group(1)), int(match.group(2))
    if k == 0:
        raise ValueError(f"zero denominator in {text!r}")
    g = math.gcd(h, k)
    if g != 1:
        raise ValueError(f"{text!r} is not reduced; did you mean '{h // g}/{k // g}'?")
    if h > k:
        raise ValueError(f"{text!r} is outside [0/1, 1/1]")
    return Fraction(h, k)


def compare(x: Fraction, y: Fraction) -> int:
    """Return -1, 0, or 1 according to the order of x and y."""
    lhs = x.num * y.den
    rhs = y.num * x.den
    return (lhs > rhs) - (lhs < rhs)


def mediant(x: Fraction, y: Fraction) -> Fraction:
    """Reduced mediant (x.num + y.num)/(x.den + y.den).

    For neighboring fractions of a Farey-type sequence this reconstructs the
    middle term of a consecutive triple.
    """
    return make_fraction(x.num + y.num, x.den + y.den)


def adjacency_determinant(x: Fraction, y: Fraction) -> int:
    """x.den*y.num - x.num*y.den; equals 1 for consecutive sequence members."""
    return x.den * y.num - x.num * y.den


def mirror(x: Fraction) -> Fraction:
    """The order-reversing involution h/k -> (k-h)/k."""
    return Fraction(x.den - x.num, x.den)


@dataclass(frozen=True, slots=True)
class UnimodularMap:
    """Integer matrix [[a, b], [c, d]] with determinant +1 or -1.

    Acts on a fraction h/k through its vector presentation [h, k]:
    h/k maps to (a*h + b*k)/(c*h + d*k).
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise DomainError(f"matrix {self.rows()} has determinant {self.det}")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def inverse(self) -> "UnimodularMap":
        """Exact integer inverse (the adjugate divided by the determinant)."""
        if self.det == 1:
            return UnimodularMap(self.d, -self.b, -self.c, self.a)
        return UnimodularMap(-self.d, self.b, self.c, -self.a)

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, x: Fraction) -> Fraction:
        num = self.a * x.num + self.b * x.den
        den = self.c * x.num + self.d * x.den
        if den <= 0 or not 0 <= num <= den:
            raise DomainError(
                f"image {num}/{den} of {x} under {self.rows()} leaves [0/1, 1/1]; "
                "the fraction is not in this map's domain"
            )
        # |det| = 1 keeps a reduced pair reduced; make_fraction still
        # normalizes the 0-numerator case to 0/1.
        return make_fraction(num, den)


IDENTITY_MAP = UnimodularMap(1, 0, 0, 1)
MIRROR_MAP = UnimodularMap(-1, 1, 0, 1)


def apply_map(matrix: UnimodularMap, x: Fraction) -> Fraction:
    """Apply the matrix to the vector presentation of x; see UnimodularMap."""
    return matrix.apply(x)
