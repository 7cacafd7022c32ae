"""Parser, resolver, and canonical serializer."""

import random
from fractions import Fraction
from pathlib import Path

import pytest

from homkit.algebra import ASSOCIATIVE, LEIBNIZ, POISSON
from homkit.dsl import (
    DocAlgebra, DocMap, DocRepresentation, Document, parse, serialize,
)
from homkit.errors import ParseError
from homkit.fixtures import (
    TWIST, leibniz_rbo, two_dim_associative, two_dim_leibniz, two_dim_poisson,
)
from homkit.linalg import Matrix, Vector
from homkit.representation import regular_representation

FIXTURES_PATH = Path(__file__).resolve().parents[1] / "demos" / "fixtures.hla"


def test_parse_leibniz_fixture_source():
    text = """
    algebra A2leib {
      dim 2
      kind leibniz
      bracket {
        [e1,e2] = e1
        [e2,e1] = -e1
      }
      alpha {
        e1 -> -e1
        e2 -> e1 + e2
      }
    }
    """
    doc = parse(text)
    assert doc.algebra("A2leib") == two_dim_leibniz()


def test_parse_minimal_algebra_defaults():
    doc = parse("algebra Z { dim 1 kind leibniz alpha { e1 -> e1 } }")
    alg = doc.algebra("Z")
    assert alg.bracket.basis_product(0, 0).is_zero()
    assert alg.alpha == Matrix.identity(1)


def test_parse_rational_coefficients():
    doc = parse("algebra X { dim 2 kind assoc dot { e1*e1 = 3/2 e1 - e2 } }")
    assert doc.algebra("X").dot.basis_product(0, 0) == Vector([Fraction(3, 2), -1])


def test_parse_coefficient_normalization():
    doc = parse("algebra X { dim 1 kind assoc dot { e1*e1 = 2/4 e1 } }")
    assert doc.algebra("X").dot.basis_product(0, 0) == Vector([Fraction(1, 2)])
    assert "1/2 e1" in serialize(doc)


def test_unknown_basis_symbol_reports_line():
    text = "algebra X {\n  dim 2\n  kind leibniz\n  bracket {\n    [e1,e3] = e1\n  }\n}"
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.line == 5


@pytest.mark.parametrize("bad, line", [
    ("algebra X { dim 2 }", 1),                      # missing kind
    ("algebra X { dim 2 kind nope }", 1),            # bad kind
    ("algebra X { dim 2 kind assoc dot { e1 e2 = e1 } }", 1),  # missing *
    ("map f : A -> B { }", 1),                       # unknown endpoints
    ("algebra X { dim 2 kind assoc }\nalgebra X { dim 1 kind assoc }", 2),
    ("representation r on nope { dim 1 }", 1),
    ("algebra X { dim 1 kind leibniz }\n"
     "representation r on X { dim 1 lambda_l e1 { f1 -> f1 } }", 2),
])
def test_syntax_and_resolution_errors_carry_lines(bad, line):
    with pytest.raises(ParseError) as err:
        parse(bad)
    assert err.value.line == line


def test_duplicate_product_entry_rejected():
    with pytest.raises(ParseError):
        parse("algebra X { dim 1 kind assoc dot { e1*e1 = e1 e1*e1 = -e1 } }")


def test_comments_and_whitespace_ignored():
    doc = parse("# header\nalgebra X {  # trailing\n dim 1\n kind assoc\n}\n")
    assert doc.algebra("X").dim == 1


def full_document():
    l = two_dim_leibniz()
    return Document([
        DocAlgebra("A2assoc", two_dim_associative()),
        DocAlgebra("A2leib", l),
        DocAlgebra("A2poisson", two_dim_poisson()),
        DocMap("beta", "A2leib", "A2leib", TWIST),
        DocMap("T", "A2leib", "A2leib", leibniz_rbo(1)),
        DocRepresentation("reg", "A2leib", regular_representation(l)),
    ])


def test_round_trip_identity_on_fixture_document():
    doc = full_document()
    assert parse(serialize(doc)) == doc


def test_serialize_parse_idempotent():
    doc = full_document()
    text = serialize(doc)
    assert serialize(parse(text)) == text


def test_shipped_fixture_file_round_trips():
    text = FIXTURES_PATH.read_text()
    doc = parse(text)
    assert {i.name for i in doc.items} == {
        "A2assoc", "A2leib", "A2poisson", "beta", "T", "reg"}
    assert doc.algebra("A2poisson") == two_dim_poisson()
    assert parse(serialize(doc)) == doc
    assert serialize(parse(serialize(doc))) == serialize(doc)


def test_empty_document_serializes_to_empty_text():
    assert serialize(Document()) == ""
    assert parse("").items == []


def random_document(rng: random.Random) -> Document:
    from homkit.algebra import HomAlgebra, StructureTensor
    from homkit.representation import ActionTensor, Representation
    items = []
    for n in range(rng.randint(1, 3)):
        dim = rng.randint(1, 3)
        kind = rng.choice((ASSOCIATIVE, LEIBNIZ, POISSON))
        def rv():
            return Vector([Fraction(rng.randint(-2, 2), rng.choice([1, 2]))
                           for _ in range(dim)])
        kw = {}
        if kind in (ASSOCIATIVE, POISSON):
            kw["dot"] = StructureTensor.from_function(dim, lambda i, j: rv())
        if kind in (LEIBNIZ, POISSON):
            kw["bracket"] = StructureTensor.from_function(dim, lambda i, j: rv())
        alpha = Matrix([[Fraction(rng.randint(-2, 2)) for _ in range(dim)]
                        for _ in range(dim)])
        name = f"A{n}"
        items.append(DocAlgebra(name, HomAlgebra(dim, kind, alpha, **kw)))
        if rng.random() < 0.6:
            m = rng.randint(0, 2)
            phi = Matrix([[Fraction(rng.randint(-1, 1)) for _ in range(m)]
                          for _ in range(m)])
            akw = {}
            families = (["lambda_l", "lambda_r"] if kind != LEIBNIZ else []) \
                + (["rho_l", "rho_r"] if kind != ASSOCIATIVE else [])
            for fam in families:
                akw[fam] = ActionTensor(dim, m, [
                    Matrix([[Fraction(rng.randint(-1, 1)) for _ in range(m)]
                            for _ in range(m)]) for _ in range(dim)])
            items.append(DocRepresentation(
                f"R{n}", name, Representation(kind, dim, m, phi, **akw)))
        if rng.random() < 0.4:
            items.append(DocMap(
                f"f{n}", name, name,
                Matrix([[Fraction(rng.randint(-2, 2)) for _ in range(dim)]
                        for _ in range(dim)])))
    return Document(items)


def test_randomized_round_trips():
    rng = random.Random(2024)
    for _ in range(120):
        doc = random_document(rng)
        text = serialize(doc)
        again = parse(text)
        assert again == doc
        assert serialize(again) == text
