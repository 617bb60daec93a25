import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import A2, A3, LOOP
from orbitclosure.grading import (
    GradingError,
    all_variables,
    multidegree,
    path_degree,
    path_monomial_factor,
    zero_degree_monomials,
)
from orbitclosure.quiver import Quiver

D121 = {"1": 1, "2": 2, "3": 1}
TRIANGLE = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3"), ("c", "3", "2")])


def test_multidegree_examples():
    d = {"1": 1, "2": 1}
    assert multidegree(A2, d, [(("a", 1, 1), 1)]) == {("1", 1): 1, ("2", 1): -1}
    assert multidegree(A2, d, []) == {}
    for u, p, v in itertools.product([1], [1, 2], [1]):
        mono = [(("b", u, p), 1), (("a", p, v), 1)]
        assert multidegree(A3, D121, mono) == {("1", v): 1, ("3", u): -1}


def test_multidegree_index_out_of_range():
    with pytest.raises(GradingError):
        multidegree(A2, {"1": 1, "2": 1}, [(("a", 2, 1), 1)])


def test_zero_degree_examples():
    for d in ({"1": 1, "2": 1}, {"1": 2, "2": 1}, {"1": 1, "2": 2}):
        assert zero_degree_monomials(A2, d, 4) == [[]]
    g = ("g", 1, 1)
    assert zero_degree_monomials(LOOP, {"1": 1}, 2) == [[], [(g, 1)], [(g, 2)]]
    assert zero_degree_monomials(A3, D121, 4) == [[]]


def test_path_factor_examples():
    d = {"1": 1, "2": 1}
    f = path_monomial_factor(A2, d, [(("a", 1, 1), 1)], {("1", 1): 1, ("2", 1): -1})
    assert str(f.path) == "a" and f.residual == ()
    f = path_monomial_factor(A3, D121, [(("b", 1, 2), 1), (("a", 2, 1), 1)], path_degree("1", 1, "3", 1))
    assert str(f.path) == "b*a"
    assert f.indices == (1, 2, 1)
    assert f.residual == ()


def test_path_factor_mismatched_chain():
    mono = [(("b", 1, 2), 1), (("a", 1, 1), 1)]
    assert path_monomial_factor(A3, D121, mono, path_degree("1", 1, "3", 1)) is None


def test_path_factor_on_a_cycle_keeps_the_residual():
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
    d = {"1": 1, "2": 2}
    # a single arrow plus a closed loop a*b through (2,2)
    mono = [(("a", 1, 1), 1), (("a", 2, 1), 1), (("b", 1, 2), 1)]
    f = path_monomial_factor(q, d, mono, path_degree("1", 1, "2", 1))
    assert f is not None
    assert multidegree(q, d, f.residual) == {}


monomials = st.lists(
    st.tuples(st.sampled_from(all_variables(A3, D121)), st.integers(1, 3)), max_size=4
)


@given(monomials, monomials)
def test_multidegree_is_additive(m1, m2):
    d1 = multidegree(A3, D121, m1)
    d2 = multidegree(A3, D121, m2)
    total = {k: d1.get(k, 0) + d2.get(k, 0) for k in set(d1) | set(d2)}
    assert multidegree(A3, D121, m1 + m2) == {k: v for k, v in total.items() if v}


def _monomials(q, d, max_deg):
    variables = all_variables(q, d)
    for deg in range(1, max_deg + 1):
        for combo in itertools.combinations_with_replacement(variables, deg):
            counts = {}
            for v in combo:
                counts[v] = counts.get(v, 0) + 1
            yield sorted(counts.items())


@pytest.mark.parametrize("q,d", [(A3, D121), (TRIANGLE, {"1": 1, "2": 2, "3": 1}), (A2, {"1": 2, "2": 2})])
def test_path_degree_monomials_factor_exhaustively(q, d):
    checked = 0
    for mono in _monomials(q, d, 3):
        deg = multidegree(q, d, mono)
        if sorted(deg.values()) != [-1, 1]:
            continue
        f = path_monomial_factor(q, d, mono, deg)
        assert f is not None and f.residual == ()
        checked += 1
    assert checked > 0
