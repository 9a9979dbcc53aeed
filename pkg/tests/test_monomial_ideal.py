from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from indepset.errors import ValidationError
from indepset.graph import Graph, complete_graph, edgeless_graph, path_graph
from indepset.monomial_ideal import (Monomial, MonomialIdeal, add_variable,
                                     check_edge_ideal_structure, colon_by_variable, edge_ideal,
                                     format_ideal, interreduce, modified_edge_ideal,
                                     pairwise_coprime, parse_ideal, parse_monomial, sum_deg)
from conftest import graphs


def M(text):
    return parse_monomial(text)


def I(*texts):
    return MonomialIdeal(M(t) for t in texts)


def monomials_up_to(n, degree):
    for d in range(degree + 1):
        for vs in combinations_with_replacement(range(n), d):
            yield Monomial((v, 1) for v in vs)


def test_monomial_basics():
    m = M("x3^2*x5")
    assert m.degree == 3 and m.as_dict() == {2: 2, 4: 1}
    assert str(m) == "x3^2*x5"
    assert M("x1*x1") == M("x1^2")
    assert M("x1").divides(M("x1*x2")) and not M("x1^2").divides(M("x1*x2"))
    assert M("x1^2*x2").colon(M("x1")) == M("x1*x2")
    assert M("x1*x2").colon(M("x3")) == M("x1*x2")
    assert M("x1^3").lcm(M("x1*x2")) == M("x1^3*x2")


def test_edge_ideal_examples():
    assert edge_ideal(path_graph(3)) == I("x1*x2", "x2*x3")
    assert edge_ideal(edgeless_graph(4)).is_zero()
    assert len(edge_ideal(complete_graph(3))) == 3


def test_modified_edge_ideal_examples():
    assert modified_edge_ideal(Graph(2, [(0, 1)])) == I("x1^2", "x2^2", "x1*x2")
    assert modified_edge_ideal(edgeless_graph(3)) == I("x1^2", "x2^2", "x3^2")
    assert modified_edge_ideal(path_graph(3)) == I("x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3")


def test_colon_examples():
    assert colon_by_variable(I("x1^2", "x2^2", "x1*x2"), 0) == I("x1", "x2")
    assert colon_by_variable(MonomialIdeal(), 3).is_zero()
    big = I("x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3")
    assert colon_by_variable(big, 1) == I("x1", "x2", "x3")


def test_add_variable_examples():
    assert add_variable(I("x1^2", "x2^2", "x1*x2"), 0) == I("x1", "x2^2")
    j = I("x1", "x2^2")
    assert add_variable(j, 0) == j
    big = I("x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3")
    assert add_variable(big, 1) == I("x1^2", "x2", "x3^2")


@pytest.mark.parametrize("i", [0, 1, 2])
def test_colon_and_sum_by_membership(i):
    """m in (I : x_i) iff m*x_i in I;  m in I + x_i iff m in I or x_i | m."""
    big = I("x1^2", "x2^2", "x3^2", "x1*x2", "x2*x3")
    xi = Monomial.var(i)
    colon = colon_by_variable(big, i)
    plus = add_variable(big, i)
    for m in monomials_up_to(3, 3):
        assert colon.contains(m) == big.contains(m * xi)
        assert plus.contains(m) == (big.contains(m) or xi.divides(m))


def test_interreduce_examples():
    assert interreduce([M("x1"), M("x1^2"), M("x1*x2")]) == I("x1")
    already = [M("x1^2"), M("x2^2")]
    assert interreduce(already).gens == frozenset(already)
    assert interreduce([M("x1*x2"), M("x2*x3"), M("x1*x2*x3")]) == I("x1*x2", "x2*x3")


def test_pairwise_coprime_and_sum_deg():
    assert pairwise_coprime(I("x1^2", "x2^2"))
    assert not pairwise_coprime(I("x1^2", "x1*x2"))
    assert pairwise_coprime(MonomialIdeal())
    assert sum_deg(I("x1^2", "x2^2", "x1*x2")) == 6
    assert sum_deg(MonomialIdeal()) == 0
    assert sum_deg(I("x1")) == 1


def test_rendering_is_canonical():
    assert str(I("x1*x2", "x2^2", "x1^2")) == "x1^2, x1*x2, x2^2"
    ideal = I("x1*x2", "x3^2")
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


def test_parse_ideal():
    ideal, n, changed = parse_ideal("ideal 2\nx1^2\nx2^2\nx1*x2\n")
    assert ideal == modified_edge_ideal(Graph(2, [(0, 1)])) and n == 2 and not changed
    ideal, n, changed = parse_ideal("ideal 3\n")
    assert ideal.is_zero() and n == 3
    ideal, _, changed = parse_ideal("ideal 1\nx1*x1\n")
    assert ideal == I("x1^2") and not changed
    _, _, changed = parse_ideal("ideal 2\nx1\nx1*x2\n")
    assert changed
    ideal, n, _ = parse_ideal(format_ideal(I("x1*x2", "x3"), 4))
    assert ideal == I("x1*x2", "x3") and n == 4


@pytest.mark.parametrize("text, line", [
    ("ideal 2\nx1^2\ny2\n", 3),
    ("ideal 2\nx3\n", 2),
    ("ideal 2\nx0\n", 2),
    ("ideals 2\n", 1),
])
def test_parse_ideal_errors(text, line):
    with pytest.raises(ValidationError, match=f"line {line}"):
        parse_ideal(text)


def _walk(ideal, g, choices):
    """Apply a sequence of colon/plus steps on squared variables."""
    for go_colon, pick in choices:
        squared = sorted(m.exps[0][0] for m in ideal.gens
                         if len(m.exps) == 1 and m.exps[0][1] == 2)
        if not squared:
            break
        v = squared[pick % len(squared)]
        before = ideal.sum_deg()
        nxt = colon_by_variable(ideal, v) if go_colon else add_variable(ideal, v)
        if any(len(m.exps) == 2 for m in ideal.gens):
            assert nxt.sum_deg() < before
        ideal = nxt
        gens = list(ideal.gens)
        assert not any(a != b and a.divides(b) for a in gens for b in gens)
        check_edge_ideal_structure(ideal, g.n, g)
    return ideal


@given(graphs(max_n=8), st.lists(st.tuples(st.booleans(), st.integers(0, 50)), max_size=10))
def test_reachable_ideals_keep_edge_ideal_shape(g, choices):
    _walk(modified_edge_ideal(g), g, choices)


@given(graphs(max_n=8))
def test_pivot_on_any_squared_variable_decreases_degree_sum(g):
    ideal = modified_edge_ideal(g)
    if g.num_edges() == 0:
        return
    for v in range(g.n):
        assert colon_by_variable(ideal, v).sum_deg() < ideal.sum_deg()
        assert add_variable(ideal, v).sum_deg() < ideal.sum_deg()


def test_structure_check_rejects_foreign_generators():
    with pytest.raises(AssertionError, match="unexpected"):
        check_edge_ideal_structure(I("x1^2", "x2^2", "x3^2", "x1*x2*x3"), 3)
    with pytest.raises(AssertionError, match="unexpected"):
        check_edge_ideal_structure(I("x1^3", "x2^2"), 2)
    with pytest.raises(AssertionError, match="missing"):
        check_edge_ideal_structure(I("x1^2"), 2)
    with pytest.raises(AssertionError, match="not an edge"):
        check_edge_ideal_structure(I("x1^2", "x2^2", "x3^2", "x1*x3"), 3, path_graph(3))
