"""Diagram construction from PD, braid, and DT notations, plus the derived
combinatorics: components, arcs, signs, faces, Goeritz forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.diagrams import (
    Diagram,
    braid_closure_diagram,
    braid_with_axis,
    goeritz_matrix,
    h1_double_branched_cover,
    parse_braid,
    parse_dt,
    parse_pd,
    wirtinger_presentation,
)
from knotperiod.twisted import classical_alexander

TREFOIL_PD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIG8_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"


def test_parse_pd_json_and_tokens():
    pd = parse_pd(TREFOIL_PD)
    assert len(pd) == 3
    pd2 = parse_pd(FIG8_PD)
    assert len(pd2) == 4
    with pytest.raises(ValueError):
        parse_pd("")
    with pytest.raises(ValueError):
        parse_pd("[[1,2,3,4],[1,2,3,5]]")   # labels not paired


def test_pd_diagram_basics():
    d = parse_pd(TREFOIL_PD).to_diagram()
    assert d.num_crossings == 3
    assert d.num_components == 1
    assert d.num_arcs == 3
    assert abs(d.writhe()) == 3
    assert d.is_connected()


def test_parse_braid_forms():
    assert parse_braid("1 1 1") == [1, 1, 1]
    assert parse_braid("1,-2, 1 -2") == [1, -2, 1, -2]
    assert parse_braid("[1, -2]") == [1, -2]
    with pytest.raises(ValueError):
        parse_braid("[1, 0]")


def test_braid_closure_trefoil():
    d, info = braid_closure_diagram([1, 1, 1])
    assert d.num_crossings == 3
    assert d.num_components == 1
    assert d.writhe() == 3
    assert len(info["top_arcs"]) == 2


def test_braid_closure_unlinked_strand_rejected():
    with pytest.raises(ValueError):
        braid_closure_diagram([1, 1], strands=3)


def test_braid_closure_component_count():
    # sigma_1^2 on 2 strands closes to the Hopf link
    d, _ = braid_closure_diagram([1, 1])
    assert d.num_components == 2
    # a commutator-free word with even exponent sums per pair may split
    d2, _ = braid_closure_diagram([1, -2, 1, -2])
    assert d2.num_components == 1


def test_dt_trefoil_and_figure8():
    d = parse_dt("4 6 2")
    assert d.num_crossings == 3
    assert classical_alexander(d).to_string() == "1 - t + t^2"
    d8 = parse_dt("4 6 8 2")
    assert classical_alexander(d8).to_string() == "1 - 3*t + t^2"
    with pytest.raises(ValueError):
        parse_dt("4 6 3")
    with pytest.raises(ValueError):
        parse_dt("")


def test_mirror_dt_signs():
    # all-negative DT entries flip every crossing; Alexander is unchanged
    d = parse_dt("-4 -6 -2")
    assert classical_alexander(d).to_string() == "1 - t + t^2"


def test_faces_euler():
    for word in ([1, 1, 1], [1, -2, 1, -2], [1, 1, 1, 1, -2, 1, 1, 1, -2, -2]):
        d, _ = braid_closure_diagram(word)
        faces, face_of = d.faces()
        # Euler formula is asserted inside faces(); check corner coverage too
        assert sum(len(f) for f in faces) == 4 * d.num_crossings
        assert len(face_of) == 4 * d.num_crossings


def test_wirtinger_presentation_shape():
    d, _ = braid_closure_diagram([1, 1, 1])
    pres = wirtinger_presentation(d)
    assert pres.num_generators == d.num_arcs
    assert pres.deficiency_ok()
    assert all(w == (1,) for w in pres.weights)


def test_wirtinger_component_weights():
    d, info = braid_with_axis([1, 1, 1], 2)
    cw = {c: (1, 0) for c in info["knot_components"]}
    cw[info["axis_component"]] = (0, 1)
    pres = wirtinger_presentation(d, component_weights=cw)
    assert pres.num_variables == 2
    axis_arcs = [
        a
        for a in range(d.num_arcs)
        if d.component_of_arc[a] == info["axis_component"]
    ]
    assert all(pres.weights[a] == (0, 1) for a in axis_arcs)
    with pytest.raises(ValueError):
        wirtinger_presentation(d, component_weights={0: (1, 0)})


def test_braid_with_axis_linking():
    d, info = braid_with_axis([1, 1, 1], 2)
    assert info["linking"] == 2
    assert d.num_components == 2
    assert len(info["top_arcs"]) == 2
    d2, info2 = braid_with_axis([1, -2, 1, -2], 3)
    assert info2["linking"] == 3
    assert d2.num_components == 2


def test_goeritz_presents_double_cover_homology():
    d, _ = braid_closure_diagram([1, 1, 1])
    assert h1_double_branched_cover(d) == [3]
    d8, _ = braid_closure_diagram([1, -2, 1, -2])
    assert h1_double_branched_cover(d8) == [5]
    g = goeritz_matrix(d)
    assert len(g) == len(g[0]) if g else True


@st.composite
def knot_braids(draw):
    """Braid words on 3 strands whose closure is a knot (n-1 parity rule)."""
    length = draw(st.sampled_from([4, 6, 8]))
    word = [
        draw(st.sampled_from([1, -1, 2, -2])) for _ in range(length)
    ]
    return word


@given(knot_braids())
@settings(max_examples=25, deadline=None)
def test_determinant_matches_double_cover_order(word):
    # |Delta(-1)| equals the order of H_1 of the double branched cover
    # (with 0 meaning infinite, skipped here).
    try:
        d, _ = braid_closure_diagram(word)
    except ValueError:
        return
    if d.num_components != 1:
        return
    delta = classical_alexander(d)
    det = abs(delta.eval_scalar(-1))
    try:
        factors = h1_double_branched_cover(d)
    except ValueError:
        assert det == 0
        return
    order = 1
    for f in factors:
        order *= f
    assert order == det


def test_diagram_validation():
    with pytest.raises(ValueError):
        Diagram([(0, 1, 2, 3)], [2])
    with pytest.raises(ValueError):
        Diagram([(0, 1, 2, 3), (2, 3, 0, 1)], [1])
