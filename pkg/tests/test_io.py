import pytest
from hypothesis import given

from paraf.errors import InputError, ParseError
from paraf.io import (
    InputFormat,
    parse_apx,
    parse_program,
    parse_tgf,
    read_framework,
    render_apx,
    render_framework,
    render_program,
    render_tgf,
)
from paraf.lp import rule
from paraf.paraco import af_to_program, ht_transform, kappa_transform

from conftest import frameworks

FIG3_APX = """\
% the seven-argument example
arg(a). arg(b). arg(c). arg(d). arg(e). arg(f). arg(g).
att(a,b). att(b,c). att(c,d). att(d,c). att(d,e).
att(e,f). att(f,f). att(f,g). att(g,e).
"""


def test_tgf_basic():
    f = parse_tgf("a\nb\n#\na b\n")
    assert f.args == ("a", "b") and f.edges() == {("a", "b")}
    assert parse_tgf("a\n#\na a\n").edges() == {("a", "a")}


def test_tgf_fixture(fx):
    assert parse_tgf("a\nb\nc\nd\n#\na b\nc b\nb d\n") == fx["fig1a"]
    assert parse_tgf(render_tgf(fx["fig3"])) == fx["fig3"]


def test_tgf_errors():
    with pytest.raises(ParseError, match="line 3"):
        parse_tgf("a\n#\na z\n")
    with pytest.raises(ParseError):
        parse_tgf("a\nb\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_tgf("a\na\n#\n")
    with pytest.raises(ParseError):
        parse_tgf("a\n#\na\n")


def test_apx_basic(fx):
    f = parse_apx("arg(a). arg(b). att(a,b).")
    assert len(f) == 2 and len(f.attacks) == 1
    assert parse_apx(FIG3_APX) == fx["fig3"]
    assert parse_apx("att(a,b).\narg(a).\narg(b).\n").edges() == {("a", "b")}


def test_apx_errors():
    with pytest.raises(ParseError, match="undeclared"):
        parse_apx("arg(a). att(a,b).")
    with pytest.raises(ParseError, match="line 2"):
        parse_apx("arg(a).\narg(b\n")
    with pytest.raises(ParseError):
        parse_apx("arg(a,b).")
    with pytest.raises(ParseError):
        parse_apx("arg(a). arg(a).")


def test_program_render_and_parse(fx):
    text = render_program(af_to_program(fx["fig3"]))
    assert "f :- not e, not f." in text.splitlines()
    assert "a." in text.splitlines()
    assert parse_program(text) == af_to_program(fx["fig3"])
    assert parse_program("a.") == parse_program("a.\n")
    assert len(parse_program("a.")) == 1


def test_program_syntax():
    p = parse_program("a | k__b :- c, not d.\n:- a, b.\n% comment\nx.\n")
    assert list(p) == [rule(["a", "k__b"], ["c"], ["d"]), rule((), ["a", "b"]), rule("x")]


def test_program_round_trips(fx):
    for transform in (kappa_transform, ht_transform):
        p = transform(af_to_program(fx["fig3"]))
        assert parse_program(render_program(p)) == p


def test_program_errors():
    with pytest.raises(ParseError, match="line 2"):
        parse_program("a.\nb :- .\n")
    with pytest.raises(ParseError):
        parse_program("a :- b")
    with pytest.raises(ParseError):
        parse_program("l__zz.")


def test_format_detection(tmp_path):
    assert InputFormat.detect("x.apx") is InputFormat.APX
    assert InputFormat.detect("x.txt", "tgf") is InputFormat.TGF
    with pytest.raises(InputError):
        InputFormat.detect("x.txt")
    path = tmp_path / "f.lp"
    path.write_text("a.\n")
    with pytest.raises(InputError):
        read_framework(path)
    with pytest.raises(InputError):
        render_framework(parse_apx("arg(a)."), "lp")


@given(frameworks())
def test_framework_round_trips(f):
    assert parse_apx(render_apx(f)) == f
    assert parse_tgf(render_tgf(f)) == f
