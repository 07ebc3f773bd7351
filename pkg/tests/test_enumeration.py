from fractions import Fraction

import pytest

from freeknot.classify import build_reference_table
from freeknot.diagram import CIRCLE, add_kink
from freeknot.enumeration import (
    ResultantDistribution,
    descent_unknot_assignments,
    distribution,
    exact_decimal,
    expectation,
    trefoil_exists,
)
from freeknot.errors import MissingCrossingNumber, UnidentifiedResultant
from freeknot.statesum import build_state_table, jones, orientation
from freeknot.polynomial import LaurentPoly


def test_trefoil(table, trefoil):
    dist = distribution(trefoil, table)
    assert dist.counts == {"0_1": 6, "3_1": 2}
    assert expectation(dist, table.crossing_numbers()) == Fraction(3, 4)


def test_figure_eight(table, corpus):
    dist = distribution(corpus["4_1"], table)
    assert dist.counts == {"0_1": 12, "3_1": 2, "4_1": 2}
    assert expectation(dist, table.crossing_numbers()) == Fraction(7, 8)


def test_9_40(table, corpus):
    dist = distribution(corpus["9_40"], table)
    assert dist.total == 512
    assert dist.count("3_1") == 66
    assert dist.count("4_1") == 78


def test_6_2_expectation(table, corpus):
    dist = distribution(corpus["6_2"], table)
    assert expectation(dist, table.crossing_numbers()) == Fraction(49, 32)


def test_circle(table):
    dist = distribution(CIRCLE, table)
    assert dist.counts == {"0_1": 1}
    assert not trefoil_exists(CIRCLE, table)


def test_trefoil_exists(table, trefoil):
    assert trefoil_exists(trefoil, table)


def test_descent_trefoil(trefoil):
    found = descent_unknot_assignments(trefoil)
    assert len(found) == 6
    t, o = build_state_table(trefoil), orientation(trefoil)
    assert all(jones(t, o, a) == LaurentPoly({0: 1}) for a in found)


def test_descent_kinked_circle():
    d = add_kink(CIRCLE, 1)
    assert descent_unknot_assignments(d) == {(0,), (1,)}


def test_kink_doubles_counts(table, corpus):
    d = corpus["5_2"]
    base = distribution(d, table)
    once = distribution(add_kink(d, 1), table)
    twice = distribution(add_kink(add_kink(d, 1), 3), table)
    assert once.probabilities() == base.probabilities()
    assert twice.probabilities() == base.probabilities()
    assert once.counts == {k: 2 * v for k, v in base.counts.items()}


def test_jobs_determinism(table, corpus):
    d = corpus["8_18"]
    one = distribution(d, table, jobs=1)
    many = distribution(d, table, jobs=4)
    assert list(one.counts.items()) == list(many.counts.items())


def test_cache_round_trip(table, corpus, tmp_path):
    d = corpus["7_7"]
    cold = distribution(d, table, cache_dir=tmp_path)
    assert len(list(tmp_path.iterdir())) == 1
    warm = distribution(d, table, cache_dir=tmp_path)
    assert warm.counts == cold.counts
    # a relabeled copy hits the same entry
    shifted = type(d)(tuple(tuple(x + 50 for x in c) for c in d.crossings), "copy")
    assert distribution(shifted, table, cache_dir=tmp_path).counts == cold.counts
    assert len(list(tmp_path.iterdir())) == 1


def test_unidentified_is_raised(corpus):
    small = build_reference_table("0_1: /over=\n3_1: (1,5,2,4)(3,1,4,6)(5,3,6,2)/over=13,13,13\n", 0, extensions=False)
    with pytest.raises(UnidentifiedResultant) as exc:
        distribution(corpus["4_1"], small)
    assert len(exc.value.polys) == 1


def test_missing_crossing_number(table, trefoil):
    dist = distribution(trefoil, table)
    with pytest.raises(MissingCrossingNumber):
        expectation(dist, {"0_1": 0})


def test_counts_must_sum():
    with pytest.raises(ValueError):
        ResultantDistribution("x", 2, {"0_1": 3})


def test_exact_decimal():
    assert exact_decimal(Fraction(3, 4)) == "0.75"
    assert exact_decimal(Fraction(78, 512), 100) == "15.234375"
    assert exact_decimal(Fraction(0)) == "0"
    assert exact_decimal(Fraction(-1, 8)) == "-0.125"
    assert exact_decimal(Fraction(5, 1)) == "5"
    with pytest.raises(ValueError):
        exact_decimal(Fraction(1, 3))
