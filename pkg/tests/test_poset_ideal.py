from itertools import product

import pytest
from hypothesis import given, settings

from indepset.errors import ValidationError
from indepset.hilbert import independence_polynomial
from indepset.monomial_ideal import modified_edge_ideal, parse_monomial
from indepset.poset import (antichain, boolean_lattice, chain, comparability_graph,
                            from_relations, random_poset)
from indepset.poset_ideal import (GeneratorSet, bijection_f, bijection_g, enumerate_variety,
                                  groebner_basis, in_variety, jp_cover_generators, jp_generators,
                                  leading_term_ideal, normal_form, poly_to_text,
                                  radical_membership_check, s_polynomial, verify_basis,
                                  verify_buchberger)
from conftest import posets
from oracles import brute_antichains


def down_closed_points(p):
    """Every 0/1 vector whose support is closed downward, by exhaustive check."""
    out = []
    for a in product((0, 1), repeat=p.n):
        if all(not a[j] or a[i] for i in range(p.n) for j in range(p.n) if p.leq(i, j)):
            out.append(a)
    return sorted(out)


def test_jp_generators_text():
    assert jp_generators(chain(2)).to_text().splitlines() == ["x1 - x1*x1", "x2 - x2*x1*x2"]
    assert jp_generators(chain(3)).to_text().splitlines()[2] == "x3 - x3*x1*x2*x3"
    assert jp_generators(antichain(2)).to_text().splitlines() == ["x1 - x1*x1", "x2 - x2*x2"]


def test_cover_generators():
    assert jp_cover_generators(chain(3)).to_text().splitlines()[2] == "x3 - x3*x2*x3"
    assert jp_cover_generators(antichain(3)).to_text() == jp_generators(antichain(3)).to_text()
    top = jp_cover_generators(boolean_lattice(2)).generators[3]
    assert top.factors == (1, 2, 3)
    assert jp_generators(boolean_lattice(2)).generators[3].factors == (0, 1, 2, 3)


def test_product_generator_polynomial():
    g = jp_generators(chain(2)).generators[1]
    poly = g.as_poly()
    assert poly == {parse_monomial("x2"): 1, parse_monomial("x1*x2^2"): -1}


def test_groebner_basis_examples():
    assert groebner_basis(chain(2)).to_text().splitlines() == [
        "x1^2 - x1", "x2^2 - x2", "x2*x1 - x2"]
    assert len(groebner_basis(antichain(4))) == 4
    gb3 = groebner_basis(chain(3))
    assert len(gb3) == 6
    assert {g.label for g in gb3.generators if g.label[0] == "rel"} == {
        ("rel", 0, 1), ("rel", 1, 2), ("rel", 0, 2)}


def test_leading_term_ideal_examples():
    assert leading_term_ideal(chain(2)) == modified_edge_ideal(comparability_graph(chain(2)))
    assert len(leading_term_ideal(chain(2))) == 3
    assert len(leading_term_ideal(antichain(3))) == 3
    assert len(leading_term_ideal(boolean_lattice(2))) == 9


@given(posets(max_n=8))
def test_leading_term_ideal_is_modified_edge_ideal(p):
    assert leading_term_ideal(p) == modified_edge_ideal(comparability_graph(p))


@pytest.mark.parametrize("p", [chain(1), chain(4), chain(7), antichain(5)]
                         + [boolean_lattice(k) for k in range(5)],
                         ids=lambda p: f"n{p.n}")
def test_buchberger_structured(p):
    report = verify_buchberger(p)
    assert report.ok, report.to_json()


@given(posets(max_n=8))
@settings(max_examples=60)
def test_buchberger_random(p):
    assert verify_buchberger(p).ok


def test_buchberger_fails_without_transitivity():
    gb = groebner_basis(chain(3))
    broken = [g for g in gb.generators if g.label != ("rel", 0, 2)]
    report = verify_basis(broken)
    assert not report.ok
    assert report.failures
    assert verify_basis(gb.generators).ok


def test_coprime_squares_pair_reduces_to_zero():
    gb = groebner_basis(antichain(2)).generators
    assert normal_form(s_polynomial(gb[0], gb[1]), gb) == {}


def test_transitive_pair_reduction():
    # x3*x2 - x3 and x2*x1 - x2 need x3*x1 - x3 to reduce
    gb = groebner_basis(chain(3)).generators
    by_label = {g.label: g for g in gb}
    s = s_polynomial(by_label[("rel", 1, 2)], by_label[("rel", 0, 1)])
    assert normal_form(s, gb) == {}
    partial = [g for g in gb if g.label != ("rel", 0, 2)]
    assert poly_to_text(normal_form(s, partial)) != "0"


def test_variety_examples():
    assert enumerate_variety(jp_generators(chain(2))) == [(0, 0), (1, 0), (1, 1)]
    assert len(enumerate_variety(jp_generators(antichain(4)))) == 16
    assert enumerate_variety(jp_generators(chain(3))) == [
        (0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)]


def test_variety_rejects_too_many_variables():
    g = jp_generators(antichain(31))
    with pytest.raises(ValueError):
        enumerate_variety(g)


def test_variety_of_groebner_basis_matches():
    p = boolean_lattice(3)
    assert enumerate_variety(groebner_basis(p)) == enumerate_variety(jp_generators(p))


@given(posets(max_n=8))
def test_variety_matches_down_sets_and_antichains(p):
    points = enumerate_variety(jp_generators(p))
    assert points == down_closed_points(p)
    assert len(points) == len(brute_antichains(p))
    assert len(points) == independence_polynomial(comparability_graph(p)).series(1)


def test_variety_with_larger_random_poset(rng):
    p = random_poset(12, rng, 0.3)
    points = enumerate_variety(jp_generators(p))
    assert len(points) == len(brute_antichains(p))


def test_bijection_examples():
    c2 = chain(2)
    assert bijection_f(c2, (1, 0)) == {0}
    assert bijection_f(c2, (1, 1)) == {1}
    assert bijection_f(c2, (0, 0)) == frozenset()
    assert bijection_g(c2, set()) == (0, 0)
    assert bijection_g(c2, {1}) == (1, 1)
    assert bijection_g(boolean_lattice(2), {1, 2}) == (1, 1, 1, 0)


def test_bijection_errors():
    with pytest.raises(ValidationError):
        bijection_f(chain(2), (0, 1))
    with pytest.raises(ValidationError):
        bijection_g(chain(2), {0, 1})
    assert not in_variety(chain(2), (0, 2))


@given(posets(max_n=8))
def test_bijections_are_inverse(p):
    antichains = brute_antichains(p)
    points = enumerate_variety(jp_generators(p))
    assert {bijection_f(p, a) for a in points} == set(antichains)
    for a in points:
        assert bijection_g(p, bijection_f(p, a)) == a
    for s in antichains:
        assert bijection_f(p, bijection_g(p, s)) == s


def test_radical_membership_examples():
    assert radical_membership_check(chain(3))
    assert radical_membership_check(antichain(4))
    assert radical_membership_check(boolean_lattice(3))
    with pytest.raises(ValueError):
        radical_membership_check(antichain(13))


@given(posets(max_n=8))
@settings(max_examples=40)
def test_radical_membership_random(p):
    assert radical_membership_check(p)


def test_generator_set_json():
    js = groebner_basis(from_relations(2, [(0, 1)])).to_json()
    assert js["kind"] == "Gb" and js["n"] == 2
    assert [g["text"] for g in js["generators"]] == ["x1^2 - x1", "x2^2 - x2", "x2*x1 - x2"]
    assert isinstance(groebner_basis(chain(1)), GeneratorSet)
