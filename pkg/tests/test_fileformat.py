import pytest

from boundquiver.paper import PAPER_BQ
from boundquiver.fileformat import InputError, format_document, parse_input, parse_lincomb
from boundquiver.field import PrimeField

HEAD = """quiver
  vertex 1
  vertex 2
  vertex 3
  arrow a1 2 1
  arrow a2 2 1
  arrow b1 3 2
  arrow b2 3 2
end
"""
ENDS = {"a1": ("2", "1"), "a2": ("2", "1"), "b1": ("3", "2"), "b2": ("3", "2")}


def test_paper_document(doc):
    assert doc.vertices == ("1", "2", "3")
    assert [a for a, _, _ in doc.arrows] == ["a1", "a2", "b1", "b2"]
    assert doc.field_spec == "rational"
    assert sorted(doc.ideals) == ["I", "I1", "I2", "I3", "I4", "phi_of_I"]
    assert doc.ideal("phi_of_I") == doc.ideal("I4")


def test_field_line():
    doc = parse_input(HEAD + "field prime 3\n")
    assert doc.field() == PrimeField(3)
    with pytest.raises(InputError, match="line 10"):
        parse_input(HEAD + "field prime 4\n")


def test_lincomb_parsing():
    assert parse_lincomb("b1*a1 - 1/2 b2*a2", ENDS) == ((1, ("b1", "a1")), (-0.5, ("b2", "a2")))
    assert parse_lincomb("-a1 + 3 a2", ENDS) == ((-1, ("a1",)), (3, ("a2",)))


@pytest.mark.parametrize("text, msg", [
    ("b1*a3", "unknown arrow `a3`"),
    ("0 b1*a1", "zero coefficient"),
    ("a1*b1", "not composable"),
    ("a1 + b1", "not parallel"),
    ("a1 a2", r"expected `\+` or `-`"),
    ("", "empty"),
])
def test_lincomb_errors(text, msg):
    with pytest.raises(InputError, match=msg):
        parse_lincomb(text, ENDS)


@pytest.mark.parametrize("body, msg", [
    ("ideal J\n  rel b1*a3\nend\n", "line 11: unknown arrow `a3`"),
    ("ideal J\n  rel b1*a1\n", "unterminated ideal"),
    ("ideal J\nend\nideal J\nend\n", "duplicate ideal"),
    ("morphism m\n  a1 -> b1\nend\n", "not parallel"),
    ("ideal J = m(I)\n", "unknown morphism"),
    ("bogus\n", "unexpected"),
])
def test_document_errors(body, msg):
    with pytest.raises(InputError, match=msg):
        parse_input(HEAD + body)


def test_quiver_errors_are_input_errors():
    with pytest.raises(InputError, match="cycle"):
        parse_input("quiver\n vertex 1\n vertex 2\n arrow x 1 2\n arrow y 2 1\nend\n")
    with pytest.raises(InputError, match="missing quiver"):
        parse_input("field rational\n")


def test_comments_and_blank_lines():
    doc = parse_input("# hello\n\n" + HEAD.replace("vertex 1", "vertex 1   # sink") + "ideal J\n rel b1*a1 # mono\nend\n")
    assert doc.ideals["J"] == (((1, ("b1", "a1")),),)


def test_round_trip(doc):
    text = format_document(doc)
    again = parse_input(text)
    assert again == doc
    assert format_document(again) == text


def test_embedded_text_is_parseable():
    assert parse_input(PAPER_BQ).morphisms["phi"][3] == ("b2", ((1, ("b1",)), (1, ("b2",))))
