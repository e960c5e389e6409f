"""Twisted Alexander engine tests.

Oracles used here are independent of the engine internals: the torus knot
formula, the axis conditions relating a link polynomial at s = 1 to the knot
polynomial, deleted-generator independence, and parity structure forced by
induction from an index-two subgroup.
"""

import pytest

from knotperiod.diagrams import (
    braid_closure_diagram,
    braid_with_axis,
    wirtinger_presentation,
)
from knotperiod.laurent import LaurentPoly, exact_divide, normalize_up_to_unit
from knotperiod.reps import (
    dihedral_classes,
    trivial_representation,
)
from knotperiod.rings import Fp, QQ, ZZ
from knotperiod.twisted import (
    axis_determinant,
    classical_alexander,
    classical_axis_factor,
    delta0,
    twisted_alexander,
    two_variable_invariant,
    wada_pair,
)
from knotperiod.words import FreeWord, Presentation


def zpoly(coeffs, min_exp=0):
    return LaurentPoly.from_int_coeffs(ZZ, coeffs, min_exp)


def torus_alexander(p, q):
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), the classical torus value."""
    def cyc(n):
        return zpoly([-1] + [0] * (n - 1) + [1])

    num = cyc(p * q) * cyc(1)
    den = cyc(p) * cyc(q)
    out = exact_divide(num, den)
    assert out is not None
    return normalize_up_to_unit(out)


def test_classical_trefoil_and_figure8():
    d3, _ = braid_closure_diagram([1, 1, 1])
    assert classical_alexander(d3).to_string() == "1 - t + t^2"
    d8, _ = braid_closure_diagram([1, -2, 1, -2])
    assert classical_alexander(d8).to_string() == "1 - 3*t + t^2"


@pytest.mark.parametrize(
    "word,strands,pq",
    [
        ([1] * 5, 2, (2, 5)),
        ([1] * 7, 2, (2, 7)),
        ([1, 2] * 4, 3, (3, 4)),
    ],
)
def test_classical_torus_knots(word, strands, pq):
    d, _ = braid_closure_diagram(word, strands)
    assert classical_alexander(d) == torus_alexander(*pq)


def test_classical_is_mirror_symmetric():
    # knots satisfy Delta(t) = Delta(1/t) up to units
    for word in ([1, 1, 1], [1, -2, 1, -2], [1, 1, 1, -2, 1, -2]):
        d, _ = braid_closure_diagram(word)
        delta = classical_alexander(d)
        assert normalize_up_to_unit(delta.mirror()) == delta


def test_classical_evaluates_to_one_at_one():
    for word in ([1, 1, 1], [1, -2, 1, -2], [1, 1, 1, 1, -2, 1, 1, 1, -2, -2]):
        d, _ = braid_closure_diagram(word)
        assert abs(classical_alexander(d).eval_scalar(1)) == 1


def test_delta0_trivial_rep():
    d, _ = braid_closure_diagram([1, 1, 1])
    pres = wirtinger_presentation(d)
    rep = trivial_representation(pres.num_generators)
    assert delta0(pres, rep) == normalize_up_to_unit(zpoly([1, -1]))


def test_delta0_dihedral_is_one():
    # a representation onto a full dihedral group has coprime order ideal
    d, _ = braid_closure_diagram([1, -2, 1, -2])
    pres = wirtinger_presentation(d)
    rep = dihedral_classes(d, 5)[0]
    assert delta0(pres, rep) == LaurentPoly.one(ZZ)


def test_wada_pair_reports_deleted_generator():
    d, _ = braid_closure_diagram([1, 1, 1])
    pres = wirtinger_presentation(d)
    rep = trivial_representation(pres.num_generators)
    num, den, j = wada_pair(pres, rep)
    assert den.to_string() == "1 - t"
    assert 0 <= j < pres.num_generators


def test_twisted_deleted_generator_independence():
    d, _ = braid_closure_diagram([1, -2, 1, -2])
    pres = wirtinger_presentation(d)
    rep = dihedral_classes(d, 5)[0]
    values = {
        twisted_alexander(pres, rep, delete=j).to_string()
        for j in range(pres.num_generators)
    }
    assert len(values) == 1


def test_dihedral_twisted_has_even_powers_only():
    # induced from an index-two subgroup, so only even deck powers appear
    for word, p in (([1, 1, 1], 3), ([1, -2, 1, -2], 5)):
        d, _ = braid_closure_diagram(word)
        pres = wirtinger_presentation(d)
        rep = dihedral_classes(d, p)[0]
        poly = twisted_alexander(pres, rep)
        assert all(e % 2 == 0 for e in poly.terms)


def test_twisted_over_prime_field_matches_reduction():
    d, _ = braid_closure_diagram([1, -2, 1, -2])
    pres = wirtinger_presentation(d)
    rep = dihedral_classes(d, 5)[0]
    over_z = twisted_alexander(pres, rep)
    ring = Fp(13)
    over_f = twisted_alexander(pres, rep, ring=ring)
    assert over_f == normalize_up_to_unit(over_z.map_coeffs(ring))


def test_twisted_rejects_bad_deficiency():
    pres = Presentation(2, [FreeWord([1, 2]), FreeWord([1, 1, 2])])
    rep = trivial_representation(2)
    with pytest.raises(ValueError):
        wada_pair(pres, rep)


def test_axis_determinant_trivial():
    rep = trivial_representation(3)
    w = FreeWord([1, 2, 3])
    assert axis_determinant(rep, w, 2).to_string() == "1 - t^2"
    with pytest.raises(ValueError):
        axis_determinant(rep, w, 0)


def test_classical_axis_factor():
    assert classical_axis_factor(1) == LaurentPoly.one(ZZ)
    assert classical_axis_factor(3).to_string() == "1 + t + t^2"


def hopf_with_axis():
    # one strand, no braid letters: the axis encircles an unknot once
    return braid_with_axis([], 1)


def link_presentation(word, strands):
    d, info = braid_with_axis(word, strands)
    cw = {c: (1, 0) for c in info["knot_components"]}
    cw[info["axis_component"]] = (0, 1)
    pres = wirtinger_presentation(d, component_weights=cw)
    axis_gen = next(
        a
        for a in range(d.num_arcs)
        if d.component_of_arc[a] == info["axis_component"]
    )
    return d, pres, axis_gen, info


def test_two_variable_hopf_is_one():
    d, pres, axis_gen, _ = link_presentation([], 1)
    rep = trivial_representation(pres.num_generators)
    g = two_variable_invariant(pres, rep, axis_gen)
    assert len(g.terms) == 1
    assert abs(next(iter(g.terms.values()))) == 1


def test_two_variable_satisfies_axis_condition():
    # at s = 1 the link polynomial collapses to
    # (t^linking - 1)/(t - 1) times the closed braid's polynomial
    for word, strands in (([1, 1, 1], 2), ([1, -2, 1, -2], 3)):
        d, pres, axis_gen, info = link_presentation(word, strands)
        rep = trivial_representation(pres.num_generators)
        g = two_variable_invariant(pres, rep, axis_gen)
        dk, _ = braid_closure_diagram(word, strands)
        expect = classical_axis_factor(info["linking"]) * classical_alexander(dk)
        got = normalize_up_to_unit(g.eval_s_one())
        assert got == normalize_up_to_unit(expect)


def test_two_variable_needs_axis_weights():
    d, _ = braid_closure_diagram([1, 1, 1])
    pres = wirtinger_presentation(d)
    rep = trivial_representation(pres.num_generators)
    with pytest.raises(ValueError):
        two_variable_invariant(pres, rep, 0)
