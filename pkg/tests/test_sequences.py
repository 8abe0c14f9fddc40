import pytest

from fareysub import (
    DomainError,
    Fraction,
    SequenceKind,
    SequenceSpec,
    enumerate_sequence,
    generate_boolean,
    generate_sequence,
    halfsequences,
    iterate_f,
    iterate_g,
    member,
    parse_fraction,
)

K = SequenceKind


def listing(text):
    return [parse_fraction(tok) for tok in text.split()]


F6 = listing("0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 5/6 1/1")
B64 = listing("0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1")
G64 = listing("0/1 1/3 1/2 3/5 2/3 3/4 4/5 5/6 1/1")
F64 = listing("0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1")
G42 = listing("0/1 1/3 1/2 2/3 3/4 1/1")
F42 = listing("0/1 1/4 1/3 1/2 2/3 1/1")
B62 = listing("0/1 1/5 1/4 1/3 2/5 1/2 2/3 1/1")


@pytest.mark.parametrize(
    "kind, n, m",
    [
        (K.FULL, 0, None),
        (K.FNUM, 6, None),
        (K.FNUM, 6, 0),
        (K.GDIFF, 6, 6),
        (K.BOOLEAN, 6, 0),
        (K.BOOLEAN, 6, 6),
        (K.BOOLEAN, 1, 1),
        (K.BOOLEAN_LEFT, 4, 0),
        (K.BOOLEAN_RIGHT, 4, 4),
    ],
)
def test_spec_validation(kind, n, m):
    with pytest.raises(DomainError):
        SequenceSpec(kind, n, m)


def test_full_spec_ignores_m():
    assert SequenceSpec(K.FULL, 6, 3) == SequenceSpec(K.FULL, 6)
    assert SequenceSpec(K.FULL, 6, 3).m is None


def test_gdiff_spec_accepts_negative_m():
    assert SequenceSpec(K.GDIFF, 4, -2).m == -2
    assert SequenceSpec(K.FNUM, 2, 4).m == 4


@pytest.mark.parametrize(
    "kind, n, m, fraction, expected",
    [
        (K.BOOLEAN, 6, 4, "5/6", False),
        (K.GDIFF, 6, 4, "1/4", False),
        (K.FULL, 6, None, "0/1", True),
        (K.FULL, 6, None, "1/7", False),
        (K.FNUM, 6, 4, "5/6", False),
        (K.FNUM, 6, 4, "4/5", True),
        (K.BOOLEAN_LEFT, 6, 4, "1/2", True),
        (K.BOOLEAN_LEFT, 6, 4, "3/5", False),
        (K.BOOLEAN_RIGHT, 6, 4, "1/2", True),
        (K.BOOLEAN_RIGHT, 6, 4, "1/3", False),
    ],
)
def test_member(kind, n, m, fraction, expected):
    assert member(SequenceSpec(kind, n, m), parse_fraction(fraction)) is expected


def test_enumerate_golden_listings(oracle):
    assert oracle(K.FULL, 6) == F6
    assert oracle(K.BOOLEAN, 6, 4) == B64
    assert oracle(K.GDIFF, 4, 2) == G42


def test_enumerate_respects_size_bound():
    with pytest.raises(DomainError):
        enumerate_sequence(SequenceSpec(K.FULL, 50), max_order=10)
    assert enumerate_sequence(SequenceSpec(K.FULL, 50), max_order=50)[0] == Fraction(0, 1)


def test_halfsequences_examples():
    left, right = halfsequences(6, 4)
    assert left == listing("0/1 1/3 1/2")
    assert right == listing("1/2 3/5 2/3 3/4 4/5 1/1")
    left, right = halfsequences(2, 1)
    assert left == listing("0/1 1/2")
    assert right == listing("1/2 1/1")
    left, right = halfsequences(6, 2)
    assert left == listing("0/1 1/5 1/4 1/3 2/5 1/2")
    assert right == listing("1/2 2/3 1/1")


def test_halfsequences_cover_and_overlap(oracle):
    for n in range(2, 12):
        for m in range(1, n):
            left, right = halfsequences(n, m)
            assert left[-1] == right[0] == Fraction(1, 2)
            assert left + right[1:] == oracle(K.BOOLEAN, n, m)


def test_iterate_g_examples():
    assert list(iterate_g(6, 4)) == G64
    assert list(iterate_g(6, 0)) == F6
    assert list(iterate_g(4, 2)) == G42
    assert list(iterate_g(1, 0)) == listing("0/1 1/1")


def test_iterate_f_examples():
    assert list(iterate_f(6, 4)) == F64
    assert list(iterate_f(4, 2)) == F42
    assert list(iterate_f(6, 5)) == F6


def test_generate_boolean_examples():
    assert generate_boolean(6, 4) == B64
    assert generate_boolean(2, 1) == listing("0/1 1/2 1/1")
    assert generate_boolean(6, 2) == B62


def test_generators_match_oracle(oracle):
    for n in range(1, 21):
        assert list(iterate_g(n, 0)) == oracle(K.FULL, n)
        for m in range(-2, n):
            assert list(iterate_g(n, m)) == oracle(K.GDIFF, n, m)
        for m in range(1, n + 3):
            assert list(iterate_f(n, m)) == oracle(K.FNUM, n, m)
        for m in range(1, n):
            assert generate_boolean(n, m) == oracle(K.BOOLEAN, n, m)
            spec_left = SequenceSpec(K.BOOLEAN_LEFT, n, m)
            spec_right = SequenceSpec(K.BOOLEAN_RIGHT, n, m)
            assert generate_sequence(spec_left) == oracle(K.BOOLEAN_LEFT, n, m)
            assert generate_sequence(spec_right) == oracle(K.BOOLEAN_RIGHT, n, m)


def test_degenerate_parameter_identities(oracle):
    for n in range(2, 16):
        full = oracle(K.FULL, n)
        assert oracle(K.FNUM, n, n - 1) == full
        assert oracle(K.FNUM, n, n + 5) == full
        assert oracle(K.GDIFF, n, 1) == full
        assert oracle(K.GDIFF, n, 0) == full
        assert oracle(K.GDIFF, n, -5) == full


def test_boolean_is_intersection(oracle):
    for n in range(2, 16):
        for m in range(1, n):
            fnum = set(oracle(K.FNUM, n, m))
            gdiff = oracle(K.GDIFF, n, m)
            assert [x for x in gdiff if x in fnum] == oracle(K.BOOLEAN, n, m)


def test_gdiff_second_element_closed_form(oracle):
    for n in range(1, 26):
        for m in range(0, n):
            seq = oracle(K.GDIFF, n, m)
            if len(seq) > 1:
                assert seq[1] == Fraction(1, min(n - m + 1, n))


def test_iteration_parameter_errors():
    with pytest.raises(DomainError):
        list(iterate_g(0, 0))
    with pytest.raises(DomainError):
        list(iterate_g(4, 4))
    with pytest.raises(DomainError):
        list(iterate_f(4, 0))
    with pytest.raises(DomainError):
        generate_boolean(4, 0)
    with pytest.raises(DomainError):
        generate_boolean(1, 1)


def test_boolean_left_right_extraction(oracle):
    for n in range(2, 12):
        for m in range(1, n):
            whole = oracle(K.BOOLEAN, n, m)
            left = oracle(K.BOOLEAN_LEFT, n, m)
            right = oracle(K.BOOLEAN_RIGHT, n, m)
            half = Fraction(1, 2)
            assert left == [x for x in whole if x <= half]
            assert right == [x for x in whole if x >= half]
