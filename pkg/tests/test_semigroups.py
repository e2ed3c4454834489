"""Numerical semigroups: worked examples, property suites, the gap blocks."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvelab.curves import SuzukiParams
from curvelab.semigroups import (
    AperySet,
    NumericalSemigroup,
    apery_blocks,
    from_generators,
    selmer_genus,
    semigroup_json_dict,
)


def brute_members(gens, bound):
    """Reachability by repeated generator addition, independent of bitmasks."""
    reach = [False] * bound
    reach[0] = True
    for n in range(bound):
        if reach[n]:
            for g in gens:
                if n + g < bound:
                    reach[n + g] = True
    return [n for n in range(bound) if reach[n]]


def test_weierstrass_style_example():
    S = from_generators([8, 10, 12, 13])
    assert S.genus == 14
    assert S.frobenius_number == 27
    assert S.is_symmetric()


def test_block_generator_example():
    S = from_generators([8, 11, 12, 13])
    assert S.genus == 13
    assert S.apery_set(8).elements == (0, 25, 26, 11, 12, 13, 22, 23)
    assert sorted(S.apery_set(8).elements) == [0, 11, 12, 13, 22, 23, 25, 26]


def test_tiny_semigroups():
    S = from_generators([2, 3])
    assert S.gaps() == [1]
    assert S.genus == 1
    assert S.frobenius_number == 1
    assert S.is_symmetric()

    S = from_generators([4, 5])
    assert S.genus == 6
    assert S.frobenius_number == 11

    S = from_generators([1])
    assert S.genus == 0
    assert S.frobenius_number == -1
    assert S.gaps() == []
    assert 0 in S and 1 in S


def test_three_five_seven():
    S = from_generators([3, 5, 7])
    assert S.gaps() == [1, 2, 4]
    assert S.genus == 3
    assert S.frobenius_number == 4


def test_shared_factor_small_generators():
    # two smallest generators share a factor; the window logic must widen
    S = from_generators([4, 6, 25])
    assert S.frobenius_number == 27
    assert 27 not in S
    assert all(n in S for n in range(28, 60))


def test_membership_against_brute_force():
    for gens in ([8, 11, 12, 13], [3, 5, 7], [4, 6, 25], [5, 7, 9]):
        S = from_generators(gens)
        bound = S.conductor + 10
        assert S.members_below(bound) == brute_members(gens, bound)


def test_membership_nonint():
    S = from_generators([2, 3])
    assert 2.0 not in S
    assert "2" not in S
    assert -1 not in S


def test_constructor_validation():
    with pytest.raises(ValueError):
        from_generators([])
    with pytest.raises(ValueError):
        from_generators([0, 3])
    with pytest.raises(ValueError):
        from_generators([4, 6])
    S = from_generators([3, 3, 5, 5])
    assert S.generators == (3, 5)


def test_apery_set_validation():
    S = from_generators([3, 5])
    with pytest.raises(ValueError):
        S.apery_set(4)
    with pytest.raises(ValueError):
        S.apery_set(0)
    assert AperySet(modulus=3, elements=(0, 4, 5)).modulus == 3
    with pytest.raises(ValueError):
        AperySet(modulus=3, elements=(0, 5, 4))
    with pytest.raises(ValueError):
        AperySet(modulus=3, elements=(3, 4, 5))
    with pytest.raises(ValueError):
        AperySet(modulus=3, elements=(0, 4))


gen_lists = st.lists(st.integers(min_value=2, max_value=40), min_size=2, max_size=5).filter(
    lambda gens: math.gcd(*gens) == 1
)


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_property_selmer_equals_genus(gens):
    S = from_generators(gens)
    apery = S.apery_set(S.multiplicity)
    assert selmer_genus(apery) == S.genus


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_property_apery_brute_oracle(gens):
    S = from_generators(gens)
    m = S.multiplicity
    members = set(brute_members(gens, S.conductor + m * (m + 2)))

    def least_in_class(r):
        n = r
        while True:
            if n in members or n >= S.conductor:
                return n
            n += m

    apery = S.apery_set(m)
    assert apery.elements == tuple(least_in_class(r) for r in range(m))


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_property_symmetry_iff_genus_halves_conductor(gens):
    S = from_generators(gens)
    F = S.frobenius_number
    assert S.is_symmetric() == (2 * S.genus == F + 1)


@settings(max_examples=100, deadline=None)
@given(gen_lists)
def test_property_closure_under_addition(gens):
    S = from_generators(gens)
    members = S.members_below(S.conductor + 5)
    probe = members[: min(len(members), 12)]
    for a in probe:
        for b in probe:
            assert (a + b) in S


def test_blocks_s1_exact_contents():
    rep = apery_blocks(SuzukiParams.from_s(1))
    assert rep["ok"]
    assert rep["blocks"] == {1: [11, 12, 13], 2: [22, 23], 3: [25, 26]}
    assert rep["union_size"] == 7
    assert rep["selmer_sum"]["computed"] == 13
    assert rep["selmer_sum"]["target"] == 2 * (8 - 1) - 1
    assert rep["residue_cover"]["ok"]
    assert rep["apery_property"]["ok"]


def test_blocks_larger_s():
    for s, genus_minus_correction in ((2, 4 * 31 - 4), (3, 8 * 127 - 16)):
        rep = apery_blocks(SuzukiParams.from_s(s))
        assert rep["ok"], rep
        assert rep["selmer_sum"]["computed"] == genus_minus_correction
        assert rep["union_size"] == rep["q"] - 1


def test_blocks_match_generic_machinery():
    p = SuzukiParams.from_s(2)
    rep = apery_blocks(p)
    H = from_generators([32, 39, 40, 41])
    union = sorted(w for block in rep["blocks"].values() for w in block)
    assert sorted(H.apery_set(32).elements) == sorted(union + [0])
    assert H.genus == rep["selmer_sum"]["computed"]


def test_json_dict_shape():
    d = semigroup_json_dict(from_generators([8, 11, 12, 13]))
    assert d["generators"] == [8, 11, 12, 13]
    assert d["genus"] == 13
    assert d["frobenius"] == 18
    assert d["symmetric"] is False
    assert d["apery"]["modulus"] == 8
    assert d["selmer_genus"] == 13
    assert sorted(d["apery"]["elements"]) == [0, 11, 12, 13, 22, 23, 25, 26]
