"""Mass verification suites: formulas and maps replayed against the oracle.

Each suite sweeps a parameter range, compares closed forms or map images
with the brute-force enumeration, and returns one summary row per checked
property.  Enumerations are memoized for the duration of the process since
the suites revisit the same sequences many times.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import counting, maps, neighbors
from .fraction import HALF, ONE, ZERO, DomainError, Fraction, adjacency_determinant
from .fraction import mediant as reduced_mediant
from .sequences import (
    SequenceKind,
    SequenceSpec,
    enumerate_sequence,
    generate_sequence,
    member,
)


@lru_cache(maxsize=None)
def _cached(spec: SequenceSpec) -> tuple[Fraction, ...]:
    return tuple(enumerate_sequence(spec))


def cached_sequence(spec: SequenceSpec) -> list[Fraction]:
    """Memoized enumeration oracle; safe because its output is re-listed."""
    return list(_cached(spec))


@dataclass
class SuiteRow:
    """Outcome of one verified property over a parameter sweep."""

    name: str
    checks: int = 0
    failures: int = 0
    first_failure: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def count(self, passed: bool, detail: str = "") -> None:
        self.checks += 1
        if not passed:
            self.failures += 1
            if not self.first_failure:
                self.first_failure = detail


def _gdiff_pairs(max_n: int) -> list[tuple[int, int]]:
    # The canonical range plus two slack (negative) parameters per order.
    return [(n, m) for n in range(1, max_n + 1) for m in range(-2, n)]


def _fnum_pairs(max_n: int) -> list[tuple[int, int]]:
    # The canonical range plus two slack parameters beyond the order.
    return [(n, m) for n in range(1, max_n + 1) for m in range(1, n + 3)]


def _bool_pairs(max_n: int) -> list[tuple[int, int]]:
    return [(n, m) for n in range(2, max_n + 1) for m in range(1, n)]


def neighbor_suite(max_n: int = 20) -> list[SuiteRow]:
    """Closed-form neighbors versus oracle scans, over all families."""
    g_row = SuiteRow("neighbors/gdiff pred+succ")
    unit_row = SuiteRow("neighbors/gdiff unit fractions")
    pair_row = SuiteRow("neighbors/gdiff from consecutive pair")
    f_row = SuiteRow("neighbors/fnum pred+succ")
    anchor_row = SuiteRow("neighbors/bool special anchors")
    bool_row = SuiteRow("neighbors/bool pred+succ")
    ends_row = SuiteRow("neighbors/endpoint dispatch")

    for n, m in _gdiff_pairs(max_n):
        seq = cached_sequence(SequenceSpec(SequenceKind.GDIFF, n, m))
        for i in range(1, len(seq) - 1):
            prev, x, nxt = seq[i - 1], seq[i], seq[i + 1]
            got = (neighbors.g_predecessor(n, m, x), neighbors.g_successor(n, m, x))
            g_row.count(got == (prev, nxt), f"n={n} m={m} x={x} got {got[0]},{got[1]}")
            if x.num == 1 and x.den > 1:
                unit = neighbors.g_unit_fraction_neighbors(n, m, x.den)
                unit_row.count(unit == (prev, nxt), f"n={n} m={m} 1/{x.den} got {unit}")
            fwd = neighbors.g_next_from_pair(n, m, prev, x)
            bwd = neighbors.g_prev_from_pair(n, m, x, nxt)
            pair_row.count(fwd == nxt and bwd == prev, f"n={n} m={m} around {x}")

    for n, m in _fnum_pairs(max_n):
        seq = cached_sequence(SequenceSpec(SequenceKind.FNUM, n, m))
        for i in range(1, len(seq) - 1):
            x = seq[i]
            got = (neighbors.f_predecessor(n, m, x), neighbors.f_successor(n, m, x))
            f_row.count(got == (seq[i - 1], seq[i + 1]), f"n={n} m={m} x={x} got {got}")

    for n, m in _bool_pairs(max_n):
        spec = SequenceSpec(SequenceKind.BOOLEAN, n, m)
        seq = cached_sequence(spec)
        index = {x: i for i, x in enumerate(seq)}
        if n != 2 * m:
            for anchor in (HALF, Fraction(1, 3), Fraction(2, 3)):
                if not member(spec, anchor):
                    continue
                i = index[anchor]
                got = neighbors.boolean_special_neighbors(n, m, anchor)
                anchor_row.count(
                    got == (seq[i - 1], seq[i + 1]), f"n={n} m={m} anchor {anchor} got {got}"
                )
        for i in range(1, len(seq) - 1):
            x = seq[i]
            got = (neighbors.boolean_predecessor(n, m, x), neighbors.boolean_successor(n, m, x))
            bool_row.count(got == (seq[i - 1], seq[i + 1]), f"n={n} m={m} x={x} got {got}")

    # Endpoint handling of the unified dispatcher, spot-swept at small sizes.
    for kind in SequenceKind:
        for n in range(1, min(max_n, 10) + 1):
            if kind is SequenceKind.FULL:
                ms: list[int | None] = [None]
            elif kind is SequenceKind.GDIFF:
                ms = list(range(-1, n))
            else:
                ms = list(range(1, n + 1))
            for m in ms:
                try:
                    spec = SequenceSpec(kind, n, m)
                except DomainError:
                    continue
                seq = cached_sequence(spec)
                for i, x in enumerate(seq):
                    res = neighbors.sequence_neighbors(spec, x)
                    want_pred = seq[i - 1] if i > 0 else None
                    want_succ = seq[i + 1] if i < len(seq) - 1 else None
                    ends_row.count(
                        (res.predecessor, res.successor) == (want_pred, want_succ),
                        f"{kind.value} n={n} m={m} x={x}",
                    )

    return [g_row, unit_row, pair_row, f_row, anchor_row, bool_row, ends_row]


def identity_suite(max_t: int = 300, enum_cross_max: int = 30, max_n: int = 20) -> list[SuiteRow]:
    """Counting formulas versus the oracle, plus the summation identities."""
    mertens_row = SuiteRow("identities/moebius floor sum equals 1")
    central_row = SuiteRow("identities/square-sum ties bool size to Farey size")
    cross_row = SuiteRow("identities/square-sum versus enumeration")
    g_card_row = SuiteRow("counting/gdiff cardinality vs oracle")
    f_card_row = SuiteRow("counting/fnum cardinality vs oracle")
    b_card_row = SuiteRow("counting/bool cardinality vs oracle")
    rank_row = SuiteRow("counting/gdiff rank vs oracle")
    rank_variant_row = SuiteRow("counting/gdiff rank moebius variant (reported)")

    for t in range(1, max_t + 1):
        mertens_row.count(counting.moebius_floor_sum(t) == 1, f"t={t}")
        central_row.count(counting.central_identity_check(t), f"t={t}")
    for t in range(1, enum_cross_max + 1):
        seq = cached_sequence(SequenceSpec(SequenceKind.BOOLEAN, 2 * t, t))
        cross_row.count(
            counting.moebius_floor_square_sum(t) == len(seq) - 2, f"t={t} |seq|={len(seq)}"
        )

    for n, m in _gdiff_pairs(max_n):
        got = counting.g_cardinality(n, m)
        want = len(cached_sequence(SequenceSpec(SequenceKind.GDIFF, n, m)))
        g_card_row.count(got == want, f"n={n} m={m} got {got} want {want}")
    for n, m in _fnum_pairs(max_n):
        got = counting.f_cardinality(n, m)
        want = len(cached_sequence(SequenceSpec(SequenceKind.FNUM, n, m)))
        f_card_row.count(got == want, f"n={n} m={m} got {got} want {want}")
    for n, m in _bool_pairs(max_n):
        got = counting.boolean_cardinality(n, m)
        want = len(cached_sequence(SequenceSpec(SequenceKind.BOOLEAN, n, m)))
        b_card_row.count(got == want, f"n={n} m={m} got {got} want {want}")

    for n in range(2, min(max_n, 30) + 1):
        for m in range(0, n):
            seq = cached_sequence(SequenceSpec(SequenceKind.GDIFF, n, m))
            for i, x in enumerate(seq):
                if x == ZERO:
                    continue
                variants = counting.g_rank_variants(n, m, x)
                rank_row.count(variants["phi-sum"] == i, f"n={n} m={m} x={x}")
                rank_variant_row.count(
                    variants["moebius-sum"] == i, f"n={n} m={m} x={x} got {variants}"
                )

    return [
        mertens_row,
        central_row,
        cross_row,
        g_card_row,
        f_card_row,
        b_card_row,
        rank_row,
        rank_variant_row,
    ]


def map_suite(max_n: int = 20) -> list[SuiteRow]:
    """Every registered map verified at every admissible (n, m)."""
    rows = []
    for entry in maps.catalog():
        row = SuiteRow(f"maps/{entry.id}")
        for n, m in maps.valid_parameter_pairs(entry.id, max_n):
            report = maps.verify_map(entry.id, n, m, oracle=cached_sequence)
            row.count(report.passed, f"n={n} m={m}: {report.counterexample}")
        rows.append(row)

    left_row = SuiteRow("maps/composite left involution identity")
    right_row = SuiteRow("maps/composite right involution identity")
    for n in range(2, max_n + 1):
        for m in range(1, n):
            if 2 * m >= n:
                left_row.count(
                    maps.composite_left_identity(n, m, oracle=cached_sequence), f"n={n} m={m}"
                )
            if 2 * m <= n:
                right_row.count(
                    maps.composite_right_identity(n, m, oracle=cached_sequence), f"n={n} m={m}"
                )
    rows += [left_row, right_row]
    return rows


def structure_suite(max_n: int = 20) -> list[SuiteRow]:
    """Orderedness, unimodular adjacency, mediants, and the intersection law.

    Also checks that the fast generators reproduce the oracle exactly and
    that the element after 0/1 in the gdiff family matches its closed form.
    """
    order_row = SuiteRow("structure/ascending with determinant 1")
    mediant_row = SuiteRow("structure/interior mediants")
    ends_row = SuiteRow("structure/endpoints")
    intersect_row = SuiteRow("structure/bool equals fnum intersect gdiff")
    gen_row = SuiteRow("structure/generators match oracle")
    second_row = SuiteRow("structure/gdiff second element closed form")

    def check_sequence(spec: SequenceSpec) -> None:
        seq = cached_sequence(spec)
        ok_order = all(
            a < b and adjacency_determinant(a, b) == 1 for a, b in zip(seq, seq[1:])
        )
        order_row.count(ok_order, f"{spec}")
        ok_mediant = all(
            reduced_mediant(seq[i - 1], seq[i + 1]) == seq[i] for i in range(1, len(seq) - 1)
        )
        mediant_row.count(ok_mediant, f"{spec}")
        first, last = seq[0], seq[-1]
        if spec.kind is SequenceKind.BOOLEAN_LEFT:
            ends_row.count(first == ZERO and last == HALF, f"{spec}")
        elif spec.kind is SequenceKind.BOOLEAN_RIGHT:
            ends_row.count(first == HALF and last == ONE, f"{spec}")
        else:
            ends_row.count(first == ZERO and last == ONE, f"{spec}")
        gen_row.count(generate_sequence(spec) == seq, f"{spec}")

    for n in range(1, max_n + 1):
        check_sequence(SequenceSpec(SequenceKind.FULL, n))
    for n, m in _fnum_pairs(max_n):
        check_sequence(SequenceSpec(SequenceKind.FNUM, n, m))
    for n, m in _gdiff_pairs(max_n):
        spec = SequenceSpec(SequenceKind.GDIFF, n, m)
        check_sequence(spec)
        seq = cached_sequence(spec)
        second_row.count(
            seq[1] == Fraction(1, min(n - m + 1, n)), f"n={n} m={m} second={seq[1]}"
        )
    for n, m in _bool_pairs(max_n):
        check_sequence(SequenceSpec(SequenceKind.BOOLEAN, n, m))
        check_sequence(SequenceSpec(SequenceKind.BOOLEAN_LEFT, n, m))
        check_sequence(SequenceSpec(SequenceKind.BOOLEAN_RIGHT, n, m))
        both = cached_sequence(SequenceSpec(SequenceKind.BOOLEAN, n, m))
        fset = set(cached_sequence(SequenceSpec(SequenceKind.FNUM, n, m)))
        gseq = cached_sequence(SequenceSpec(SequenceKind.GDIFF, n, m))
        intersect_row.count(
            [x for x in gseq if x in fset] == both, f"n={n} m={m}"
        )

    return [order_row, mediant_row, ends_row, intersect_row, gen_row, second_row]
