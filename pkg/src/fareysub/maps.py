"""Registry of the monotone unimodular maps between the sequence families.

Each entry couples a 2x2 integer matrix with the family it maps from and
the family it maps onto, both parameterized by the ambient pair (n, m) of
the bool family the statement lives in.  Bijective entries carry their
inverse entry and the parameter transform that points the inverse at the
right sequences.  `verify_map` replays a map over the enumeration oracle
and checks every advertised property element by element.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .fraction import DomainError, Fraction, UnimodularMap
from .sequences import SequenceKind, SequenceSpec, enumerate_sequence, member


class Direction(str, Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"


class MapClass(str, Enum):
    BIJECTIVE = "bijective"
    INJECTIVE = "injective"


SpecFactory = Callable[[int, int], SequenceSpec]


@dataclass(frozen=True)
class NamedMap:
    """A registered monotone map together with its advertised behavior."""

    id: str
    matrix: UnimodularMap
    domain: SpecFactory
    codomain: SpecFactory
    direction: Direction
    map_class: MapClass
    constraint: Callable[[int, int], bool] | None = None
    constraint_text: str = ""
    # Identifier of the inverse entry and how (n, m) transforms under it;
    # only bijective entries have one.
    inverse_id: str | None = None
    inverse_params: Callable[[int, int], tuple[int, int]] | None = None

    def check_constraint(self, n: int, m: int) -> None:
        if self.constraint is not None and not self.constraint(n, m):
            raise DomainError(
                f"map {self.id} requires {self.constraint_text}, got n={n}, m={m}"
            )


def _full(n: int, m: int) -> SequenceSpec:
    return SequenceSpec(SequenceKind.FULL, n)


def _fnum(n_of: Callable[[int, int], int], m_of: Callable[[int, int], int]) -> SpecFactory:
    return lambda n, m: SequenceSpec(SequenceKind.FNUM, n_of(n, m), m_of(n, m))


def _gdiff(n_of: Callable[[int, int], int], m_of: Callable[[int, int], int]) -> SpecFactory:
    return lambda n, m: SequenceSpec(SequenceKind.GDIFF, n_of(n, m), m_of(n, m))


def _bool(kind: SequenceKind, complement: bool = False) -> SpecFactory:
    if complement:
        return lambda n, m: SequenceSpec(kind, n, n - m)
    return lambda n, m: SequenceSpec(kind, n, m)


_LEFT = _bool(SequenceKind.BOOLEAN_LEFT)
_RIGHT = _bool(SequenceKind.BOOLEAN_RIGHT)

_MIRROR = UnimodularMap(-1, 1, 0, 1)


def _SAME(n: int, m: int) -> tuple[int, int]:
    return n, m


def _COMPLEMENT(n: int, m: int) -> tuple[int, int]:
    return n, n - m


def _build_catalog() -> tuple[NamedMap, ...]:
    entries = [
        NamedMap(
            "mirror_full",
            _MIRROR,
            _full,
            _full,
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="mirror_full",
            inverse_params=_SAME,
        ),
        NamedMap(
            "mirror_boolean",
            _MIRROR,
            _bool(SequenceKind.BOOLEAN),
            _bool(SequenceKind.BOOLEAN, complement=True),
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="mirror_boolean",
            inverse_params=_COMPLEMENT,
        ),
        NamedMap(
            "lemma_f_to_g",
            _MIRROR,
            _fnum(lambda n, m: n, lambda n, m: m),
            _gdiff(lambda n, m: n, lambda n, m: n - m),
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="lemma_g_to_f",
            inverse_params=_COMPLEMENT,
        ),
        NamedMap(
            "lemma_g_to_f",
            _MIRROR,
            _gdiff(lambda n, m: n, lambda n, m: m),
            _fnum(lambda n, m: n, lambda n, m: n - m),
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="lemma_f_to_g",
            inverse_params=_COMPLEMENT,
        ),
        NamedMap(
            "thm_left_to_f",
            UnimodularMap(1, 0, -1, 1),  # h/k -> h/(k-h)
            _LEFT,
            _fnum(lambda n, m: n - m, lambda n, m: m),
            Direction.PRESERVING,
            MapClass.BIJECTIVE,
            inverse_id="thm_f_to_left",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_f_to_left",
            UnimodularMap(1, 0, 1, 1),  # h/k -> h/(k+h)
            _fnum(lambda n, m: n - m, lambda n, m: m),
            _LEFT,
            Direction.PRESERVING,
            MapClass.BIJECTIVE,
            inverse_id="thm_left_to_f",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_right_to_g",
            UnimodularMap(2, -1, 1, 0),  # h/k -> (2h-k)/h
            _RIGHT,
            _gdiff(lambda n, m: m, lambda n, m: 2 * m - n),
            Direction.PRESERVING,
            MapClass.BIJECTIVE,
            inverse_id="thm_g_to_right",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_g_to_right",
            UnimodularMap(0, 1, -1, 2),  # h/k -> k/(2k-h)
            _gdiff(lambda n, m: m, lambda n, m: 2 * m - n),
            _RIGHT,
            Direction.PRESERVING,
            MapClass.BIJECTIVE,
            inverse_id="thm_right_to_g",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_left_to_gdual",
            UnimodularMap(-2, 1, -1, 1),  # h/k -> (k-2h)/(k-h)
            _LEFT,
            _gdiff(lambda n, m: n - m, lambda n, m: n - 2 * m),
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="thm_gdual_to_left",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_gdual_to_left",
            UnimodularMap(-1, 1, -1, 2),  # h/k -> (k-h)/(2k-h)
            _gdiff(lambda n, m: n - m, lambda n, m: n - 2 * m),
            _LEFT,
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="thm_left_to_gdual",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_right_to_f",
            UnimodularMap(-1, 1, 1, 0),  # h/k -> (k-h)/h
            _RIGHT,
            _fnum(lambda n, m: m, lambda n, m: n - m),
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="thm_f_to_right",
            inverse_params=_SAME,
        ),
        NamedMap(
            "thm_f_to_right",
            UnimodularMap(0, 1, 1, 1),  # h/k -> k/(k+h)
            _fnum(lambda n, m: m, lambda n, m: n - m),
            _RIGHT,
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            inverse_id="thm_right_to_f",
            inverse_params=_SAME,
        ),
        NamedMap(
            "prop_left_involution",
            UnimodularMap(-2, 1, -3, 2),  # h/k -> (k-2h)/(2k-3h)
            _LEFT,
            _LEFT,
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            constraint=lambda n, m: 2 * m >= n,
            constraint_text="2m >= n",
            inverse_id="prop_left_involution",
            inverse_params=_SAME,
        ),
        NamedMap(
            "prop_left_to_right_pres",
            UnimodularMap(-1, 1, -3, 2),  # h/k -> (k-h)/(2k-3h)
            _LEFT,
            _RIGHT,
            Direction.PRESERVING,
            MapClass.INJECTIVE,
            constraint=lambda n, m: 2 * m >= n,
            constraint_text="2m >= n",
        ),
        NamedMap(
            "prop_left_to_right_rev",
            _MIRROR,
            _LEFT,
            _RIGHT,
            Direction.REVERSING,
            MapClass.INJECTIVE,
            constraint=lambda n, m: 2 * m >= n,
            constraint_text="2m >= n",
        ),
        NamedMap(
            "prop_right_involution",
            UnimodularMap(1, 0, 3, -1),  # h/k -> h/(3h-k)
            _RIGHT,
            _RIGHT,
            Direction.REVERSING,
            MapClass.BIJECTIVE,
            constraint=lambda n, m: 2 * m <= n,
            constraint_text="2m <= n",
            inverse_id="prop_right_involution",
            inverse_params=_SAME,
        ),
        NamedMap(
            "prop_right_to_left_pres",
            UnimodularMap(2, -1, 3, -1),  # h/k -> (2h-k)/(3h-k)
            _RIGHT,
            _LEFT,
            Direction.PRESERVING,
            MapClass.INJECTIVE,
            constraint=lambda n, m: 2 * m <= n,
            constraint_text="2m <= n",
        ),
        NamedMap(
            "prop_right_to_left_rev",
            _MIRROR,
            _RIGHT,
            _LEFT,
            Direction.REVERSING,
            MapClass.INJECTIVE,
            constraint=lambda n, m: 2 * m <= n,
            constraint_text="2m <= n",
        ),
    ]
    return tuple(entries)


_CATALOG = _build_catalog()
_BY_ID = {entry.id: entry for entry in _CATALOG}


def catalog() -> tuple[NamedMap, ...]:
    """All eighteen registered maps, in a stable order."""
    return _CATALOG


def get_map(map_id: str) -> NamedMap:
    entry = _BY_ID.get(map_id)
    if entry is None:
        raise DomainError(f"unknown map id {map_id!r}; known ids: {', '.join(sorted(_BY_ID))}")
    return entry


def apply_named(map_id: str, n: int, m: int, x: Fraction) -> Fraction:
    """Apply a registered map at parameters (n, m) to a domain element x."""
    entry = get_map(map_id)
    entry.check_constraint(n, m)
    if not member(entry.domain(n, m), x):
        raise DomainError(f"{x} is not in the domain of {map_id} at n={n}, m={m}")
    image = entry.matrix.apply(x)
    if not member(entry.codomain(n, m), image):
        raise RuntimeError(
            f"image {image} of {x} under {map_id} left the advertised codomain; "
            "this is a bug in the registry"
        )
    return image


@dataclass(frozen=True)
class VerificationReport:
    """Element-by-element verdict for one map at one parameter pair."""

    map_id: str
    n: int
    m: int
    domain_size: int
    monotone: bool
    image_ok: bool
    roundtrip_ok: bool
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.monotone and self.image_ok and self.roundtrip_ok


Oracle = Callable[[SequenceSpec], list[Fraction]]


def verify_map(
    map_id: str,
    n: int,
    m: int,
    *,
    max_order: int = 10_000,
    oracle: Oracle | None = None,
) -> VerificationReport:
    """Enumerate the domain, map every element, and check all claims.

    Checks monotonicity in the declared direction, that bijections hit the
    enumerated codomain exactly (injections land inside it without
    collisions), and that the registered inverse undoes every element.
    An alternative oracle (for example a caching one) may be supplied.
    """
    fetch = oracle if oracle is not None else (
        lambda spec: enumerate_sequence(spec, max_order=max_order)
    )
    entry = get_map(map_id)
    entry.check_constraint(n, m)
    domain = fetch(entry.domain(n, m))
    codomain_spec = entry.codomain(n, m)
    images = [entry.matrix.apply(x) for x in domain]

    counterexample = None
    monotone = True
    for a, b in zip(images, images[1:]):
        ascending = a < b
        if ascending != (entry.direction is Direction.PRESERVING):
            monotone = False
            counterexample = f"order breaks at images {a}, {b}"
            break

    image_ok = True
    if entry.map_class is MapClass.BIJECTIVE:
        codomain = fetch(codomain_spec)
        expected = images if entry.direction is Direction.PRESERVING else images[::-1]
        if expected != codomain:
            image_ok = False
            if counterexample is None:
                counterexample = "image set differs from the codomain"
    else:
        seen = set()
        for x, y in zip(domain, images):
            if y in seen or not member(codomain_spec, y):
                image_ok = False
                if counterexample is None:
                    counterexample = f"{x} maps to {y}, a collision or a non-member"
                break
            seen.add(y)

    roundtrip_ok = True
    if entry.inverse_id is not None:
        assert entry.inverse_params is not None
        inverse = get_map(entry.inverse_id)
        back = inverse.matrix
        for x, y in zip(domain, images):
            if back.apply(y) != x:
                roundtrip_ok = False
                if counterexample is None:
                    counterexample = f"{x} -> {y} does not return through {entry.inverse_id}"
                break
        # The inverse entry must claim the matching sequences at the
        # transformed parameters.
        n2, m2 = entry.inverse_params(n, m)
        if inverse.domain(n2, m2) != codomain_spec or inverse.codomain(n2, m2) != entry.domain(n, m):
            roundtrip_ok = False
            if counterexample is None:
                counterexample = f"inverse {entry.inverse_id} points at mismatched sequences"

    return VerificationReport(
        map_id=map_id,
        n=n,
        m=m,
        domain_size=len(domain),
        monotone=monotone,
        image_ok=image_ok,
        roundtrip_ok=roundtrip_ok,
        counterexample=counterexample,
    )


def valid_parameter_pairs(map_id: str, max_n: int) -> list[tuple[int, int]]:
    """All (n, m) with n <= max_n at which a map is defined and constrained."""
    entry = get_map(map_id)
    pairs = []
    for n in range(1, max_n + 1):
        if entry.id == "mirror_full":
            pairs.append((n, 0))
            continue
        if entry.id == "lemma_f_to_g":
            candidates = range(1, n + 1)
        elif entry.id == "lemma_g_to_f":
            candidates = range(0, n)
        else:
            candidates = range(1, n)
        for m in candidates:
            if entry.constraint is not None and not entry.constraint(n, m):
                continue
            try:
                entry.domain(n, m)
                entry.codomain(n, m)
            except DomainError:
                continue
            pairs.append((n, m))
    return pairs


def composite_left_identity(
    n: int, m: int, *, max_order: int = 10_000, oracle: Oracle | None = None
) -> bool:
    """The left involution equals down-map, reflection, up-map, pointwise.

    Requires 2m >= n, where the order-(n-m) fnum family is the whole Farey
    sequence of that order, so the middle reflection is defined on it.
    """
    if 2 * m < n:
        raise DomainError(f"composite left identity requires 2m >= n, got n={n}, m={m}")
    fetch = oracle if oracle is not None else (
        lambda spec: enumerate_sequence(spec, max_order=max_order)
    )
    left = fetch(SequenceSpec(SequenceKind.BOOLEAN_LEFT, n, m))
    for x in left:
        step = apply_named("thm_left_to_f", n, m, x)
        step = apply_named("mirror_full", n - m, 0, step)
        step = apply_named("thm_f_to_left", n, m, step)
        if step != apply_named("prop_left_involution", n, m, x):
            return False
    return True


def composite_right_identity(
    n: int, m: int, *, max_order: int = 10_000, oracle: Oracle | None = None
) -> bool:
    """The right involution equals down-map, reflection, up-map, pointwise."""
    if 2 * m > n:
        raise DomainError(f"composite right identity requires 2m <= n, got n={n}, m={m}")
    fetch = oracle if oracle is not None else (
        lambda spec: enumerate_sequence(spec, max_order=max_order)
    )
    right = fetch(SequenceSpec(SequenceKind.BOOLEAN_RIGHT, n, m))
    for x in right:
        step = apply_named("thm_right_to_g", n, m, x)
        step = apply_named("mirror_full", m, 0, step)
        step = apply_named("thm_g_to_right", n, m, step)
        if step != apply_named("prop_right_involution", n, m, x):
            return False
    return True
