import pytest
from hypothesis import given, settings, strategies as st

from helpers import FIXTURES, all_fixture_names
from orbitclosure.fields import GF
from orbitclosure.instance import InstanceError, format_instance, parse
from orbitclosure.linalg import Matrix

A2_TEXT = """\
vertex 1
vertex 2
arrow a 1 2
field Q
dim 1 1
matrix a
1
"""


def test_parse_a2():
    inst = parse(A2_TEXT)
    assert inst.rep["a"] == Matrix([[1]])
    assert inst.relations == []
    assert format_instance(inst) == A2_TEXT


def test_comments_and_blank_lines():
    text = "# header\n\nvertex 1  # the only vertex\narrow g 1 1\ndim 2\nmatrix g\n0 1\n\n0 0\n"
    inst = parse(text)
    assert inst.rep["g"] == Matrix([[0, 1], [0, 0]])
    assert str(inst.field) == "Q"


def test_wrong_row_width_reports_line():
    text = A2_TEXT.replace("matrix a\n1\n", "matrix a\n1 2\n")
    with pytest.raises(InstanceError) as exc:
        parse(text)
    assert exc.value.line == 7


@pytest.mark.parametrize(
    "text,line",
    [
        ("vertex 1\nvertex 1\n", 2),
        ("vertex 1\narrow a 1 2\n", 2),
        ("vertex 1\ndim 1 2\n", 2),
        ("vertex 1\nfield F 4\n", 2),
        ("vertex 1\nfrobnicate\n", 2),
        ("vertex 1\narrow g 1 1\ndim 1\nmatrix h\n", 4),
        ("vertex 1\narrow g 1 1\ndim 1\nmatrix g\nx\n", 5),
        ("vertex 1\narrow g 1 1\ndim 1\nmatrix g\n0\nrelation 1 h\n", 6),
        ("vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\ndim 1 1\nmatrix a\n1\nmatrix b\n1\nrelation 1 a*b\n", 10),
        ("vertex 1\narrow g 1 1\ndim 1\nmatrix g\n0\nrelation 1 g 1 g\n", 6),
        ("vertex 1\narrow g 1 1\ndim 1\nmatrix g\n0\nvertex 2\n", 6),
    ],
)
def test_parse_errors_have_line_numbers(text, line):
    with pytest.raises(InstanceError) as exc:
        parse(text)
    assert exc.value.line == line


def test_missing_matrix_is_an_error():
    with pytest.raises(InstanceError):
        parse("vertex 1\narrow g 1 1\ndim 1\n")


def test_relations_and_warnings():
    inst = parse((FIXTURES / "A3REL.rep").read_text())
    (rho,) = inst.relations
    assert str(rho) == "1 b*a"
    assert inst.rep.evaluate(rho).is_zero()
    assert inst.warnings() == []
    bad = parse((FIXTURES / "A3.rep").read_text() + "relation 1 b*a\n")
    assert len(bad.warnings()) == 1


def test_relation_signs_and_fractions():
    text = A2_TEXT.replace("matrix a\n1\n", "matrix a\n1/2\n") + "relation -1/2 a + 3 a - 5/2 a\n"
    with pytest.raises(InstanceError):
        # coefficients cancel to the zero element
        parse(text)
    inst = parse(A2_TEXT + "relation 2 a - 1 a\n")
    assert str(inst.relations[0]) == "1 a"


def test_prime_field_instance():
    inst = parse(A2_TEXT.replace("field Q", "field F 5").replace("matrix a\n1\n", "matrix a\n7\n"))
    assert inst.field == GF(5)
    assert int(inst.rep["a"][0, 0]) == 2


def test_zero_width_matrices():
    text = "vertex 1\nvertex 2\narrow a 1 2\nfield Q\ndim 0 2\nmatrix a\n"
    inst = parse(text)
    assert inst.rep["a"].shape == (2, 0)
    assert format_instance(inst) == text


@pytest.mark.parametrize("name", all_fixture_names())
def test_fixtures_round_trip(name):
    text = (FIXTURES / f"{name}.rep").read_text()
    assert format_instance(parse(text)) == text


@settings(max_examples=40)
@given(st.lists(st.integers(0, 2), min_size=2, max_size=3), st.data())
def test_random_instances_round_trip(dims, data):
    vs = [str(i + 1) for i in range(len(dims))]
    lines = [f"vertex {v}" for v in vs]
    arrows = data.draw(st.lists(st.tuples(st.sampled_from(vs), st.sampled_from(vs)), max_size=3))
    lines += [f"arrow x{k} {s} {t}" for k, (s, t) in enumerate(arrows)]
    lines += ["field Q", "dim " + " ".join(map(str, dims))]
    d = dict(zip(vs, dims))
    for k, (s, t) in enumerate(arrows):
        lines.append(f"matrix x{k}")
        if d[s]:
            for _ in range(d[t]):
                row = data.draw(st.lists(st.fractions(max_denominator=3).filter(lambda x: abs(x) < 5),
                                         min_size=d[s], max_size=d[s]))
                lines.append(" ".join(str(x) for x in row))
    text = "\n".join(lines) + "\n"
    inst = parse(text)
    again = format_instance(inst)
    assert format_instance(parse(again)) == again
    assert parse(again).rep == inst.rep
