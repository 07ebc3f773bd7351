import itertools

import pytest

from freeknot.classify import Unidentified
from freeknot.diagram import isomorphic, validate
from freeknot.enumeration import distribution
from freeknot.errors import NonpositiveP, ParityViolation
from freeknot.statesum import build_state_table, jones, orientation
from freeknot.tangle import (
    INFINITY,
    Fraction,
    TangleWord,
    closure_of_word,
    fraction,
    make_2n,
    make_21n,
    make_foil,
    make_kn,
    schubert_equivalent,
)


def test_fraction_examples():
    assert fraction([3, -1, 2]) == Fraction(1, 2)
    assert fraction([0]) == Fraction(0, 1)
    for n in range(1, 8):
        # the 2 n word: n + 1/2
        assert fraction([2, n]) == Fraction(2 * n + 1, 2)
    assert fraction(TangleWord.parse("2 1 5")) == Fraction(17, 3)


def test_fraction_infinity_and_sign():
    assert fraction([0, 0]) == INFINITY
    assert str(Fraction(3, -6)) == "-1/2"
    assert Fraction(-2, 4) == Fraction(1, -2)


def test_word_parse():
    assert TangleWord.parse(" 2 -1  3").integers == (2, -1, 3)
    assert str(TangleWord((2, 1, 5))) == "2 1 5"
    with pytest.raises(ValueError):
        TangleWord(())


def test_schubert_examples():
    assert schubert_equivalent(Fraction(5, 2), Fraction(5, 3))
    assert not schubert_equivalent(Fraction(3, 1), Fraction(3, 2))
    assert schubert_equivalent(Fraction(3, 1), Fraction(3, 2), collapse_mirror=True)
    with pytest.raises(NonpositiveP):
        schubert_equivalent(Fraction(0, 1), Fraction(3, 1))


def test_two_one_m_blue_closures_are_never_foils():
    for m in range(0, 12):
        for sign in (2, -2):
            f = Fraction(3 * m + sign, 3)
            if f.p <= 0:
                continue
            for k in range(3, 40, 2):
                assert not schubert_equivalent(f, Fraction(k, 1), collapse_mirror=True)


def test_family_crossing_counts():
    assert make_foil(7).n == 7
    assert make_2n(4).n == 6
    assert make_kn(3, 4).n == 7
    assert make_21n(5).n == 8
    for d in (make_foil(9), make_2n(5), make_kn(4, 4), make_21n(3)):
        assert validate(d)


@pytest.mark.parametrize("call", [lambda: make_foil(4), lambda: make_kn(3, 5), lambda: make_21n(2)])
def test_parity(call):
    with pytest.raises(ParityViolation):
        call()


def test_foil3_is_trefoil_shape(trefoil):
    assert isomorphic(make_foil(3), trefoil)


def test_families_match_corpus_shapes(corpus):
    assert isomorphic(make_2n(2), corpus["4_1"])
    assert isomorphic(make_2n(3), corpus["5_2"])
    assert isomorphic(make_21n(3), corpus["6_2"])


def test_21n_1_is_figure_eight(table):
    a = distribution(make_21n(1), table)
    b = distribution(make_2n(2), table)
    assert a.counts == b.counts == {"0_1": 12, "3_1": 2, "4_1": 2}


def test_word_closures_match_schubert(table):
    words = [
        w
        for k in (1, 2, 3)
        for w in itertools.product([v for v in range(-4, 5) if v], repeat=k)
    ]
    seen = {}
    for w in words:
        f = fraction(w)
        if f.p <= 1 or f.p % 2 == 0:
            continue  # unknot, or a two-component link
        d, bits = closure_of_word(w)
        hit = table.identify(jones(build_state_table(d), orientation(d), bits))
        if isinstance(hit, Unidentified):
            # only closures past the nine-crossing table may be missing
            assert sum(map(abs, w)) > 9, w
            continue
        seen.setdefault(hit.name, []).append(f)
    names = list(seen)
    for i, x in enumerate(names):
        for y in names[i:]:
            for f1 in seen[x]:
                for f2 in seen[y]:
                    assert schubert_equivalent(f1, f2, collapse_mirror=True) == (x == y), (x, f1, y, f2)
