import json
from math import comb

import pytest
from hypothesis import given

from ncpart import errors
from ncpart.partitions import enumerate_all, enumerate_nc, format_partition, is_noncrossing, parse_partition
from ncpart.symmetry import (
    EVEN,
    NOT_APPLICABLE,
    ODD,
    classify_achiral,
    complement,
    complement_order,
    is_self_complementary,
    kreweras,
    trichotomy_violations,
    rotate,
    rotation_classes,
    rotation_orbit,
    transpose,
    transpose_family_swap,
    verify_operator_identities,
)

from .oracles import catalan_recurrence, kreweras_by_search, pascal, rotation_orbits
from .test_partitions import partitions

P = parse_partition


def fmt(p):
    return format_partition(p)


def test_rotate_examples():
    assert fmt(rotate(P("1,3,4/2/5,6"), 1)) == "1,6/2,4,5/3"
    p = P("1,3,4/2/5,6")
    assert rotate(p, 6) == p
    assert rotate(rotate(p, 4), -4) == p
    assert rotate(p, -1) == rotate(p, 5)


def test_complement_examples():
    assert fmt(complement(P("1,3,4/2/5,6"))) == "1,2/3,4,6/5"
    assert fmt(complement(P("1,3/2"))) == "1,3/2"


@given(partitions())
def test_complement_involution_and_rotation_inverse(p):
    assert complement(complement(p)) == p
    for k in range(p.n):
        assert rotate(rotate(p, k), -k) == p
        assert complement(rotate(p, k)) == rotate(complement(p), -k)


@pytest.mark.parametrize("n", range(1, 11))
def test_rotation_and_complement_preserve_nc(n):
    for p in enumerate_nc(n):
        assert is_noncrossing(complement(p))
        assert is_noncrossing(rotate(p, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_rotation_and_complement_preserve_crossing(n):
    for p in enumerate_all(n):
        assert is_noncrossing(rotate(p, 1)) == is_noncrossing(p) == is_noncrossing(complement(p))


def test_kreweras_examples():
    assert fmt(kreweras(P("1/2/3"))) == "1,2,3"
    assert fmt(kreweras(P("1,2/3/4"))) == "1/2,3,4"
    assert fmt(kreweras(kreweras(P("1,2/3/4")))) == "1,4/2/3" == fmt(rotate(P("1,2/3/4"), -1))


@pytest.mark.parametrize("n", range(1, 7))
def test_kreweras_equals_coarsest_companion(n):
    for p in enumerate_nc(n):
        assert kreweras(p) == kreweras_by_search(p)


def test_kreweras_rejects_crossing():
    with pytest.raises(errors.NotNoncrossingError):
        kreweras(P("1,3/2,4"))
    with pytest.raises(errors.NotNoncrossingError):
        transpose(P("1,3/2,4"))


def test_kreweras_block_count():
    for p in enumerate_nc(8):
        assert len(p.blocks) + len(kreweras(p).blocks) == p.n + 1


def test_transpose_examples():
    assert fmt(transpose(P("1,2/3/4"))) == "1,2,3/4"
    assert fmt(transpose(P("1/2/3"))) == "1,2,3"


def test_self_complementary_examples():
    assert is_self_complementary(P("1,3/2"))
    assert not is_self_complementary(P("1,3,4/2/5,6"))
    assert all(is_self_complementary(P(",".join(map(str, range(1, n + 1))))) for n in range(1, 8))


def test_rotation_orbit_examples():
    c = rotation_orbit(P("1/2/3"))
    assert (c.orbit_size, c.achiral, c.sc_members) == (1, True, (0,))
    assert rotation_orbit(P("1,3,4/2/5,6")).orbit_size == 6
    c = rotation_orbit(P("1,2/3,4"))
    assert c.orbit_size == 2
    assert {fmt(q) for q in c.members()} == {"1,2/3,4", "1,4/2,3"}


def test_rotation_orbit_representative_is_least_string():
    p = P("1,6/2,4,5/3")
    c = rotation_orbit(p)
    orbit = {fmt(rotate(p, k)) for k in range(6)}
    assert fmt(c.representative) == min(orbit)
    assert rotation_orbit(c.representative) == c


@pytest.mark.parametrize("n", range(1, 8))
def test_rotation_orbit_against_oracle(n):
    orbits = rotation_orbits(list(enumerate_all(n)))
    for orbit in orbits:
        p = next(iter(orbit))
        c = rotation_orbit(p)
        assert c.orbit_size == len(orbit)
        assert n % c.orbit_size == 0
        assert c.achiral == (complement(p) in orbit)
        assert len(c.sc_members) == sum(1 for q in orbit if complement(q) == q)
        assert (c.complement_order_parity == NOT_APPLICABLE) == (not c.achiral)
        if c.achiral:
            assert len(c.sc_members) <= 2


def test_complement_order_examples():
    assert complement_order(P("1/2/3")) == 1
    assert complement_order(P("1,2")) == 1
    assert complement_order(P("1,2/3/4")) == 2


def test_complement_order_requires_achiral():
    chiral = next(c for c in rotation_classes(6) if not c.achiral)
    with pytest.raises(errors.NotAchiralError):
        complement_order(chiral.representative)
    with pytest.raises(errors.NotAchiralError):
        classify_achiral(chiral)


def test_classify_examples():
    c = classify_achiral(rotation_orbit(P("1/2/3")))
    assert (c.orbit_size_parity, c.complement_order_parity, c.sc_count) == (ODD, None, 1)
    c = classify_achiral(rotation_orbit(P("1,2/3,4")))
    assert (c.orbit_size_parity, c.complement_order_parity, c.sc_count) == (EVEN, EVEN, 2)
    assert json.loads(json.dumps(c.to_dict())) == {
        "orbit_size": 2, "achiral": True, "sc_count": 2, "complement_order_parity": "even",
    }


@pytest.mark.parametrize("n", range(1, 11))
def test_classification_counts(n):
    classes = list(rotation_classes(n))
    assert sum(c.orbit_size for c in classes) == catalan_recurrence(n)
    achiral = [c for c in classes if c.achiral]
    assert len(achiral) == pascal(n, n // 2)
    for c in achiral:
        assert classify_achiral(c).sc_count in (0, 1, 2)
        assert trichotomy_violations(c) == []


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_operator_identities_small(n):
    report = verify_operator_identities(n)
    assert report.cases == catalan_recurrence(n)
    assert report.passed, report.lines()
    assert len(report.lines()) == 8


def test_kreweras_order():
    # H has order exactly 2n once n >= 3, so H != R there.
    for n in range(3, 8):
        assert any(kreweras(p) != rotate(p, 1) for p in enumerate_nc(n))


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_transpose_swaps_families(n):
    report = transpose_family_swap(n)
    assert report.passed, report.failures
    assert report.even_family == report.odd_family


def test_transpose_swap_odd_n_is_vacuous():
    r = transpose_family_swap(7)
    assert r.passed and r.even_family == r.odd_family == 0


def test_achiral_count_matches_binomial_small():
    assert [sum(1 for c in rotation_classes(n, achiral_only=True)) for n in range(1, 9)] == [
        comb(n, n // 2) for n in range(1, 9)
    ]
