import random

import pytest

from handlehom.catalog import catalog, get
from handlehom.core import HandleDecomposition, OrientationMode, Ring
from handlehom.duality import check_duality
from handlehom.errors import FormatSyntaxError, SemanticError
from handlehom.moves import fuzz_moves
from handlehom.textio import (
    parse,
    parse_journal,
    parse_report,
    serialize,
    serialize_journal,
    serialize_report,
)

RP2_TEXT = """\
dimension 2
relative false
orientation cooriented
handle 0 h0
handle 1 h1
handle 2 h2
intersect 2 h2 h1 2
"""


def test_rp2_canonical_text():
    assert serialize(get("RP2").decomposition) == RP2_TEXT


def test_single_point():
    d = parse("dimension 0\nhandle 0 p\n")
    assert d == HandleDecomposition(0, (("p",),))
    assert not d.relative
    assert d.orientation_mode is OrientationMode.ORIENTED


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_catalog_roundtrip(entry):
    text = serialize(entry.decomposition)
    assert parse(text) == entry.decomposition
    assert serialize(parse(text)) == text


def test_fuzzed_roundtrip():
    rng = random.Random(3)
    entries = catalog()
    for i in range(30):
        d = fuzz_moves(rng.choice(entries).decomposition, 60, i).result
        assert parse(serialize(d)) == d


def test_comments_blank_lines_and_crlf():
    text = "# RP2\r\n\r\ndimension 2  # n\r\norientation cooriented\r\nhandle 0 h0\r\n" \
        "handle 1 h1\r\nhandle 2 h2\r\nintersect 2 h2 h1 2\r\n"
    assert parse(text) == get("RP2").decomposition


def test_forward_reference_allowed():
    d = parse("dimension 1\nintersect 1 e p 1\nhandle 0 p\nhandle 0 q\nhandle 1 e\nintersect 1 e q -1\n")
    assert d.entry(1, "p", "e") == 1


def test_undeclared_label_location():
    with pytest.raises(SemanticError) as info:
        parse("dimension 1\nhandle 0 p\nhandle 1 e\nintersect 1 e q 1\n")
    assert (info.value.line, info.value.column) == (4, 15)
    assert "q" in str(info.value)


@pytest.mark.parametrize(
    "text, line",
    [
        ("dimension 1\ndimension 1\n", 2),
        ("dimension -1\n", 1),
        ("handle 0 p\ndimension 0\n", 1),
        ("dimension 1\nhandle 2 p\n", 2),
        ("dimension 1\nhandle 0 p\nhandle 0 p\n", 3),
        ("dimension 1\nhandle 0 p\nhandle 1 e\nintersect 1 e p 1\nintersect 1 e p 2\n", 5),
        ("dimension 1\norientation mod2\nhandle 0 p\nhandle 1 e\nintersect 1 e p 2\n", 5),
        ("dimension 1\nhandle 0 p\nintersect 2 e p 1\n", 3),
    ],
)
def test_semantic_errors(text, line):
    with pytest.raises(SemanticError) as info:
        parse(text)
    assert info.value.line == line


def test_missing_dimension():
    with pytest.raises(SemanticError):
        parse("# nothing here\n")


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("dimension x\n", 1, 11),
        ("dimension 1\nfrobnicate\n", 2, 1),
        ("dimension 1\nrelative maybe\n", 2, 10),
        ("dimension 1\norientation sideways\n", 2, 13),
        ("dimension 1\nhandle 0\n", 2, 1),
        ("dimension 1\n  handle 0 p extra\n", 2, 3),
        ("dimension 1\nhandle 0 p\nhandle 1 e\nintersect 1 e p one\n", 4, 17),
        ("dimension 1\nslide 1 a b +\n", 2, 1),
    ],
)
def test_syntax_errors(text, line, column):
    with pytest.raises(FormatSyntaxError) as info:
        parse(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_journal_roundtrip(torus):
    j = fuzz_moves(torus, 80, 11)
    text = serialize_journal(j)
    back = parse_journal(text)
    assert back == j
    assert back.result == j.result
    assert serialize_journal(back) == text


def test_journal_rejects_trailing_decomposition_lines(torus):
    text = serialize_journal(fuzz_moves(torus, 3, 0)) + "handle 0 z\n"
    with pytest.raises(FormatSyntaxError):
        parse_journal(text)


def test_report_roundtrip():
    for name in ("T2", "Klein", "L(5,1)"):
        rep = check_duality(get(name).decomposition, Ring.MOD2)
        text = serialize_report(rep)
        assert parse_report(text) == rep
    rep = check_duality(get("L(3,1)").decomposition)
    assert serialize_report(rep) == (
        "ring z\ndimension 3\n"
        "row 0 1 - 1 -\nrow 1 0 - 0 -\nrow 2 0 3 0 3\nrow 3 1 - 1 -\n"
        "all_isomorphic true\n"
    )
    with pytest.raises(FormatSyntaxError):
        parse_report("ring z\ndimension 1\nrow 0 1\n")
