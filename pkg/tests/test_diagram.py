import pytest

from freeknot.diagram import (
    CIRCLE,
    FreeDiagram,
    add_kink,
    assign,
    canonical_code,
    connected_sum,
    face_count,
    find_length_one_loops,
    format_diagram,
    format_pd_line,
    isomorphic,
    iter_pd_file,
    parse_diagram,
    parse_pd_line,
    relabel_canonical,
    shape_of,
    validate,
)
from freeknot.errors import ArcMultiplicity, MultiComponent, NonPlanar, ParseError, UnknownArc

TREFOIL = FreeDiagram(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)), "3_1")
HOPF = FreeDiagram(((1, 3, 2, 4), (3, 1, 4, 2)))


def test_trefoil_and_circle_valid():
    assert validate(TREFOIL)
    assert validate(CIRCLE)
    assert face_count(TREFOIL) == 5


def test_hopf_shape_is_two_components():
    res = validate(HOPF)
    assert not res and res.error is MultiComponent
    with pytest.raises(MultiComponent):
        res.raise_for_error()


def test_arc_multiplicity():
    res = validate(FreeDiagram(((1, 2, 3, 1), (2, 3, 4, 4), (5, 5, 6, 7))))
    assert res.error is ArcMultiplicity


@pytest.mark.parametrize(
    "crossings",
    [
        ((1, 4, 2, 5), (3, 6, 4, 1), (5, 6, 2, 3)),
        ((1, 2, 3, 4), (3, 1, 4, 2)),
    ],
)
def test_nonplanar_single_cycle(crossings):
    # one strand, but the rotation system lives on a torus
    res = validate(FreeDiagram(crossings))
    assert res.error is NonPlanar


def test_shape_of_round_trip(pds):
    for name, pd in pds.items():
        d, bits = shape_of(pd)
        assert validate(d), name
        assert assign(d, bits) == pd


def test_unknot_pd_is_circle(pds):
    d, bits = shape_of(pds["0_1"])
    assert d.is_circle() and bits == ()


def test_kinks():
    assert find_length_one_loops(TREFOIL) == []
    assert find_length_one_loops(CIRCLE) == []
    k = add_kink(TREFOIL, 1)
    assert k.n == 4 and validate(k)
    reports = find_length_one_loops(k)
    assert len(reports) == 1 and reports[0].loop_length == 1
    assert add_kink(CIRCLE, 1).n == 1
    assert add_kink(add_kink(TREFOIL, 1), 2).n == 5
    with pytest.raises(UnknownArc):
        add_kink(TREFOIL, 99)


def test_connected_sum_with_circle():
    assert connected_sum(TREFOIL, CIRCLE).crossings == TREFOIL.crossings
    assert connected_sum(CIRCLE, TREFOIL).crossings == TREFOIL.crossings


def test_connected_sum_shapes(corpus):
    s = connected_sum(corpus["3_1"], corpus["4_1"])
    assert s.n == 7 and validate(s)
    assert s.name == "3_1#4_1"


def test_relabel_and_iso_invariance():
    shuffled = FreeDiagram(tuple(tuple(x * 10 for x in c) for c in reversed(TREFOIL.crossings)))
    assert isomorphic(shuffled, TREFOIL)
    assert canonical_code(relabel_canonical(shuffled)) == canonical_code(TREFOIL)
    assert sorted(relabel_canonical(shuffled).arcs) == list(range(1, 7))


def test_non_isomorphic(corpus):
    assert not isomorphic(corpus["5_1"], corpus["5_2"])


def test_diagram_format_round_trip():
    text = format_diagram(TREFOIL, (0, 1, 0))
    d, bits = parse_diagram(text)
    assert d == TREFOIL and bits == (0, 1, 0)
    d, bits = parse_diagram(format_diagram(TREFOIL))
    assert bits is None


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("crossings: 2\nc0: 1 2 3 4\n", 1),
        ("crossings: 1\nc0: 1 2 x 4\n", 2),
        ("crossings: 1\nc1: 1 2 2 1\n", 2),
    ],
)
def test_diagram_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_diagram(text)
    assert exc.value.line == line


def test_pd_line_round_trip(pds):
    pd = pds["5_2"]
    assert parse_pd_line(format_pd_line(pd)) == pd


def test_pd_default_over_and_errors():
    pd = parse_pd_line("k: (1,5,2,4)(3,1,4,6)(5,3,6,2)")
    assert pd.over == ("13", "13", "13")
    with pytest.raises(ParseError):
        parse_pd_line("k: (1,5,2)(3,1,4,6)")
    with pytest.raises(ParseError):
        parse_pd_line("k: (1,5,2,4)/over=13,13")


def test_pd_file_comments_keep_composite_names():
    text = "# header\n3_1#4_1: (1,4,2,5)(3,6,4,1)(5,2,6,3)  # note\n\n"
    (pd,) = list(iter_pd_file(text))
    assert pd.name == "3_1#4_1" and len(pd.crossings) == 3


def test_pd_file_reports_line():
    with pytest.raises(ParseError) as exc:
        list(iter_pd_file("a: (1,2,2,1)\nb: (1,2\n"))
    assert exc.value.line == 2
