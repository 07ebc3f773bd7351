import pytest
from hypothesis import given, strategies as st

from freeknot.polynomial import LOOP, LaurentPoly, add, canonical_key, mirror, monomial, mul, parse

polys = st.dictionaries(st.integers(-12, 12), st.integers(-9, 9), max_size=6).map(LaurentPoly)

A = monomial(1, 1)
A_INV = monomial(1, -1)


def test_cancellation():
    assert mul(A, A_INV) == LaurentPoly({0: 1})


def test_loop_is_additive_identity_fixed():
    assert add(LOOP, LaurentPoly()) == LOOP


def test_final_bracket_step():
    # -A^4 (A + A^-1 (-A^2 - A^-2)) = A
    inner = add(A, mul(A_INV, LOOP))
    assert mul(monomial(-1, 4), inner) == A


def test_mirror_examples():
    assert mirror(monomial(-1, -3)) == monomial(-1, 3)
    assert mirror(LaurentPoly({0: 1})) == LaurentPoly({0: 1})


def test_canonical_key_examples():
    assert canonical_key(monomial(-1, -3)) == canonical_key(monomial(-1, 3))
    assert canonical_key(LaurentPoly({0: 1})) == LaurentPoly({0: 1})


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
    assert add(add(p, q), r) == add(p, add(q, r))
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
    assert mul(p, q) == mul(q, p)
    assert add(p, q) == add(q, p)


@given(polys, polys)
def test_mirror_is_homomorphism(p, q):
    assert mirror(mul(p, q)) == mul(mirror(p), mirror(q))
    assert mirror(add(p, q)) == add(mirror(p), mirror(q))


@given(polys)
def test_mirror_involution_and_key(p):
    assert mirror(mirror(p)) == p
    assert canonical_key(p) == canonical_key(mirror(p))
    assert canonical_key(p) in (p, mirror(p))


@given(polys)
def test_render_parse_round_trip(p):
    assert parse(str(p)) == p


@pytest.mark.parametrize(
    "text, terms",
    [("1", {0: 1}), ("-A^-3", {-3: -1}), ("A^2 - 2*A^-4", {2: 1, -4: -2}), ("0", {})],
)
def test_parse(text, terms):
    assert parse(text) == LaurentPoly(terms)


def test_render_order():
    assert str(LaurentPoly({-4: -2, 2: 1, 0: 3})) == "1*A^2 + 3*A^0 - 2*A^-4"
