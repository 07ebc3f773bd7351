import pytest

from freeknot.classify import KNOWN_SHARED, Unidentified, build_reference_table, load_pd_data
from freeknot.diagram import alternating_assignment
from freeknot.errors import KeyCollision
from freeknot.polynomial import LaurentPoly, canonical_key, monomial
from freeknot.statesum import build_state_table, jones, orientation


def alt_jones(d):
    return jones(build_state_table(d), orientation(d), alternating_assignment(d))


def test_unknot_entry(table):
    assert table.identify(LaurentPoly({0: 1})).name == "0_1"
    assert table["0_1"].jones_key == LaurentPoly({0: 1})


def test_trefoil_key_matches_engine(table, trefoil):
    v = alt_jones(trefoil)
    assert table["3_1"].jones_key == canonical_key(v)
    assert table.identify(v).name == "3_1"
    assert table.identify(v.mirror()).name == "3_1"


def test_composite_by_product(table, corpus):
    v = alt_jones(corpus["3_1"]) * alt_jones(corpus["4_1"])
    assert table.identify(v).name == "3_1#4_1"
    assert table.identify(v).crossing_number == 7


def test_granny_and_square_share_name(table, trefoil):
    v = alt_jones(trefoil)
    assert table.identify(v * v).name == "3_1#3_1"
    assert table.identify(v * v.mirror()).name == "3_1#3_1"


def test_mirror_identifies_every_key(table):
    for key, k in table.entries.items():
        assert table.identify(key.mirror()) == k


def test_unidentified_is_a_value(table):
    p = monomial(7, 40)
    hit = table.identify(p)
    assert isinstance(hit, Unidentified) and hit.poly == p


def test_collision_fails_loudly():
    with pytest.raises(KeyCollision):
        build_reference_table(load_pd_data(), 9, extensions=False)


def test_collision_detected_for_duplicate_pd():
    text = "3_1: (1,5,2,4)(3,1,4,6)(5,3,6,2)/over=13,13,13\n3_2: (1,5,2,4)(3,1,4,6)(5,3,6,2)/over=02,02,02\n"
    with pytest.raises(KeyCollision):
        build_reference_table(text, 0, extensions=False)


def test_shared_classes_are_merged(table):
    for group in KNOWN_SHARED:
        names = sorted(group)
        merged = table[names[0]]
        assert merged is table[names[1]]
        assert merged.name == "|".join(names)


def test_crossing_numbers(table):
    xn = table.crossing_numbers()
    assert xn["0_1"] == 0 and xn["9_40"] == 9 and xn["3_1#3_1#3_1"] == 9
    assert xn["C(2 1 7)"] == 10
