from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import A2, A3, CYCLE3, KRONECKER, LOOP
from orbitclosure.quiver import (
    Path,
    PathAlgebraElement,
    Quiver,
    QuiverError,
    check_dim_vector,
    enumerate_paths,
    euler_form,
    is_acyclic,
    longest_path_length,
    radical_power_basis,
)


def names(paths):
    return [str(p) for p in paths]


def test_quiver_validation():
    with pytest.raises(QuiverError):
        Quiver(["1", "1"])
    with pytest.raises(QuiverError):
        Quiver(["1"], [("a", "1", "2")])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


def test_enumerate_paths_examples():
    assert names(enumerate_paths(A2, "1", "2", 3)) == ["a"]
    assert names(enumerate_paths(A2, "1", "1", 3)) == ["e1"]
    assert names(enumerate_paths(LOOP, "1", "1", 2)) == ["e1", "g", "g*g"]


def test_enumerate_paths_unknown_vertex():
    with pytest.raises(QuiverError):
        enumerate_paths(A2, "1", "9", 2)


def test_path_composition_is_right_to_left():
    p = Path.of(A3, ("b", "a"))
    assert (p.source, p.target, p.length) == ("1", "3", 2)
    assert p.applied_order() == ("a", "b")
    with pytest.raises(QuiverError):
        Path.of(A3, ("a", "b"))
    a = Path.of(A3, ("a",))
    b = Path.of(A3, ("b",))
    assert b * a == p


def test_is_acyclic_examples():
    assert is_acyclic(A2)
    assert not is_acyclic(LOOP)
    assert not is_acyclic(CYCLE3)


def test_euler_form_examples():
    d = {"1": 1, "2": 1}
    assert euler_form(A2, d, d) == 1
    assert euler_form(KRONECKER, d, d) == 0
    for n in range(4):
        assert euler_form(LOOP, {"1": n}, {"1": n}) == 0


def test_radical_power_basis_examples():
    assert radical_power_basis(A2, 2, 5) == []
    assert names(radical_power_basis(LOOP, 2, 3)) == ["g*g", "g*g*g"]
    assert names(radical_power_basis(A3, 2, 5)) == ["b*a"]


def test_dim_vector_validation():
    with pytest.raises(QuiverError):
        check_dim_vector(A2, {"1": 1})
    with pytest.raises(QuiverError):
        check_dim_vector(A2, {"1": 1, "2": -1})


def _random_dag(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 5)
    vs = [str(i) for i in range(1, n + 1)]
    arrows = []
    for k in range(rng.randint(0, 7)):
        i, j = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
        if i != j:
            arrows.append((f"x{k}", vs[i], vs[j]))
    return Quiver(vs, arrows)


@given(st.integers(0, 10_000))
def test_acyclic_enumeration_is_complete(seed):
    q = _random_dag(seed)
    n = len(q.vertices)
    for i in q.vertices:
        for j in q.vertices:
            assert enumerate_paths(q, i, j, n - 1) == enumerate_paths(q, i, j, n)


@given(st.integers(0, 10_000))
def test_path_count_matches_transfer_matrix(seed):
    import sympy

    q = _random_dag(seed)
    n = len(q.vertices)
    adj = sympy.zeros(n, n)
    for a in q.arrows:
        adj[q.vertex_index(a.target), q.vertex_index(a.source)] += 1
    # (I - A)^-1 = sum of powers for a nilpotent adjacency matrix
    counts = (sympy.eye(n) - adj).inv()
    for i in q.vertices:
        for j in q.vertices:
            found = len(enumerate_paths(q, i, j, n))
            assert found == counts[q.vertex_index(j), q.vertex_index(i)]
    assert longest_path_length(q) == max((p.length for i in q.vertices for j in q.vertices
                                          for p in enumerate_paths(q, i, j, n)), default=0)


def test_path_algebra_element_arithmetic():
    a = PathAlgebraElement.from_path(Path.of(KRONECKER, ("a",)))
    b = PathAlgebraElement.from_path(Path.of(KRONECKER, ("b",)))
    d = a - b
    assert not d.is_zero()
    assert (d + b - a).is_zero()
    assert d.lengths() == {1}
    assert str(d) == "1 a - 1 b"
    with pytest.raises(QuiverError):
        a + PathAlgebraElement.from_path(Path.trivial("1"))


def test_path_algebra_product_and_substitution():
    a = PathAlgebraElement.from_path(Path.of(A3, ("a",)), 2)
    b = PathAlgebraElement.from_path(Path.of(A3, ("b",)), 3)
    ba = b * a
    assert ba.terms == {Path.of(A3, ("b", "a")): 6}
    assert (a * b).is_zero()
    # replace a by zero
    assert ba.substitute(A3, "a", None).is_zero()
    assert ba.substitute(A3, "b", PathAlgebraElement.from_path(Path.of(A3, ("b",)), Fraction(1, 3))) == \
        PathAlgebraElement.from_path(Path.of(A3, ("b", "a")), 2)
