import pytest

from fareysub import (
    Direction,
    DomainError,
    MapClass,
    MIRROR_MAP,
    SequenceKind,
    apply_named,
    catalog,
    composite_left_identity,
    composite_right_identity,
    get_map,
    parse_fraction,
    verify_map,
)
from fareysub.maps import valid_parameter_pairs

K = SequenceKind
frac = parse_fraction

ALL_IDS = [
    "mirror_full",
    "mirror_boolean",
    "lemma_f_to_g",
    "lemma_g_to_f",
    "thm_left_to_f",
    "thm_f_to_left",
    "thm_right_to_g",
    "thm_g_to_right",
    "thm_left_to_gdual",
    "thm_gdual_to_left",
    "thm_right_to_f",
    "thm_f_to_right",
    "prop_left_involution",
    "prop_left_to_right_pres",
    "prop_left_to_right_rev",
    "prop_right_involution",
    "prop_right_to_left_pres",
    "prop_right_to_left_rev",
]


def test_catalog_contents():
    entries = catalog()
    assert len(entries) == 18
    assert [entry.id for entry in entries] == ALL_IDS
    assert get_map("thm_f_to_left").matrix.rows() == ((1, 0), (1, 1))
    assert get_map("prop_left_involution").matrix.rows() == ((-2, 1), (-3, 2))
    assert get_map("thm_left_to_f").matrix.rows() == ((1, 0), (-1, 1))
    assert get_map("thm_right_to_g").matrix.rows() == ((2, -1), (1, 0))


def test_catalog_directions_and_classes():
    preserving_bijections = {"thm_left_to_f", "thm_f_to_left", "thm_right_to_g", "thm_g_to_right"}
    injections = {
        "prop_left_to_right_pres",
        "prop_left_to_right_rev",
        "prop_right_to_left_pres",
        "prop_right_to_left_rev",
    }
    for entry in catalog():
        assert entry.matrix.det in (1, -1)
        if entry.id in preserving_bijections:
            assert entry.direction is Direction.PRESERVING
        if entry.id in injections:
            assert entry.map_class is MapClass.INJECTIVE
            assert entry.inverse_id is None
        else:
            assert entry.map_class is MapClass.BIJECTIVE
    assert get_map("mirror_boolean").direction is Direction.REVERSING
    assert get_map("lemma_f_to_g").direction is Direction.REVERSING


def test_bijections_register_their_matrix_inverse():
    for entry in catalog():
        if entry.inverse_id is None:
            continue
        assert get_map(entry.inverse_id).matrix == entry.matrix.inverse()


def test_involution_matrices_are_self_inverse():
    for map_id in ("mirror_full", "mirror_boolean", "prop_left_involution", "prop_right_involution"):
        matrix = get_map(map_id).matrix
        assert matrix.inverse() == matrix


def test_composite_matrix_identities():
    eq4 = get_map("thm_left_to_f").matrix
    eq5 = get_map("thm_f_to_left").matrix
    assert (eq5 @ MIRROR_MAP @ eq4) == get_map("prop_left_involution").matrix
    eq12 = get_map("thm_right_to_g").matrix
    eq13 = get_map("thm_g_to_right").matrix
    assert (eq13 @ MIRROR_MAP @ eq12) == get_map("prop_right_involution").matrix


@pytest.mark.parametrize(
    "map_id, n, m, x, expected",
    [
        ("thm_right_to_g", 6, 4, "3/5", "1/3"),
        ("mirror_full", 6, 0, "1/2", "1/2"),
        ("prop_right_involution", 6, 2, "2/3", "2/3"),
        ("thm_f_to_left", 6, 4, "1/2", "1/3"),
        ("mirror_boolean", 6, 4, "1/3", "2/3"),
        ("lemma_f_to_g", 6, 4, "1/6", "5/6"),
        ("thm_left_to_gdual", 6, 4, "1/3", "1/2"),
    ],
)
def test_apply_named_examples(map_id, n, m, x, expected):
    assert apply_named(map_id, n, m, frac(x)) == frac(expected)


def test_apply_named_rejections():
    with pytest.raises(DomainError):
        apply_named("prop_left_involution", 6, 2, frac("1/3"))  # needs 2m >= n
    with pytest.raises(DomainError):
        apply_named("prop_right_involution", 6, 4, frac("2/3"))  # needs 2m <= n
    with pytest.raises(DomainError):
        apply_named("no_such_map", 6, 4, frac("1/2"))
    with pytest.raises(DomainError):
        apply_named("thm_right_to_g", 6, 4, frac("1/3"))  # 1/3 is in the left half
    with pytest.raises(DomainError):
        apply_named("lemma_f_to_g", 6, 0, frac("1/2"))  # fnum needs m >= 1


def test_verify_map_worked_examples(oracle):
    report = verify_map("thm_f_to_left", 6, 4)
    assert report.passed and report.domain_size == 3
    domain = oracle(K.FNUM, 2, 4)
    images = [apply_named("thm_f_to_left", 6, 4, x) for x in domain]
    assert images == [frac("0/1"), frac("1/3"), frac("1/2")]

    report = verify_map("thm_g_to_right", 6, 4)
    assert report.passed
    domain = oracle(K.GDIFF, 4, 2)
    images = [apply_named("thm_g_to_right", 6, 4, x) for x in domain]
    assert images == [frac(s) for s in ("1/2", "3/5", "2/3", "3/4", "4/5", "1/1")]

    report = verify_map("prop_left_involution", 6, 4)
    assert report.passed
    domain = oracle(K.BOOLEAN_LEFT, 6, 4)
    images = [apply_named("prop_left_involution", 6, 4, x) for x in domain]
    assert images == [frac("1/2"), frac("1/3"), frac("0/1")]


def test_verify_map_constraint_violation():
    with pytest.raises(DomainError):
        verify_map("prop_left_involution", 6, 2)


def test_all_maps_verify_small_sweep():
    for entry in catalog():
        for n, m in valid_parameter_pairs(entry.id, 10):
            report = verify_map(entry.id, n, m)
            assert report.passed, (entry.id, n, m, report.counterexample)


def test_composite_identities_small_sweep():
    for n in range(2, 11):
        for m in range(1, n):
            if 2 * m >= n:
                assert composite_left_identity(n, m)
            if 2 * m <= n:
                assert composite_right_identity(n, m)


def test_mirror_boolean_is_an_involution(oracle):
    for n in range(2, 11):
        for m in range(1, n):
            for x in oracle(K.BOOLEAN, n, m):
                image = apply_named("mirror_boolean", n, m, x)
                assert apply_named("mirror_boolean", n, n - m, image) == x


def test_injections_can_be_proper(oracle):
    # At n=7, m=2 the right half has more elements than the left, so the
    # right-to-left injections cannot be surjective; spot-check that the
    # verifier still accepts them as injections.
    left = oracle(K.BOOLEAN_LEFT, 7, 2)
    right = oracle(K.BOOLEAN_RIGHT, 7, 2)
    assert len(right) < len(left)
    report = verify_map("prop_right_to_left_pres", 7, 2)
    assert report.passed
