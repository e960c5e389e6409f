"""Colorings, dihedral lifts, and permutation representation enumeration."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotperiod.diagrams import braid_closure_diagram, wirtinger_presentation
from knotperiod.reps import (
    PermRep,
    Representation,
    coloring_classes,
    coloring_space,
    cycle_type,
    dihedral_classes,
    dihedral_lift,
    enumerate_perm_rep_classes,
    identity_matrix,
    mat_eq,
    mat_inverse,
    mat_mul,
    perm_class,
    perm_compose,
    perm_inverse,
    perm_parity,
    trivial_representation,
)
from knotperiod.rings import Fp, QQ, ZZ
from knotperiod.words import FreeWord


def trefoil():
    d, _ = braid_closure_diagram([1, 1, 1])
    return d


def figure8():
    d, _ = braid_closure_diagram([1, -2, 1, -2])
    return d


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    ident = identity_matrix(ZZ, 2)
    assert mat_mul(ZZ, a, ident) == a
    assert mat_eq(ZZ, mat_mul(ZZ, ident, a), a)
    with pytest.raises(ValueError):
        mat_inverse(ZZ, a)   # det -2, no integer inverse
    inv = mat_inverse(ZZ, [[1, 1], [0, 1]])
    assert inv == [[1, -1], [0, 1]]
    invq = mat_inverse(QQ, [[QQ.from_int(2)]])
    assert invq[0][0] * 2 == 1


def test_representation_word_images():
    rep = Representation(ZZ, [[[0, -1], [1, 0]], [[1, 1], [0, 1]]])
    w = FreeWord([1, 2, -1])
    m = rep.image_of_word(w)
    direct = mat_mul(
        ZZ, mat_mul(ZZ, rep.images[0], rep.images[1]), rep.inv_images[0]
    )
    assert mat_eq(ZZ, m, direct)
    assert rep.image_of_word(FreeWord()) == identity_matrix(ZZ, 2)


def test_trivial_representation_verifies():
    pres = wirtinger_presentation(trefoil())
    rep = trivial_representation(pres.num_generators)
    assert rep.verify(pres)
    assert rep.dim == 1


def test_change_ring():
    rep = Representation(ZZ, [[[2]]], inv_images=[[[1]]])
    repq = rep.change_ring(Fp(5))
    assert repq.images[0][0][0] == 2
    assert repq.ring == Fp(5)


def test_coloring_space_dimensions():
    # trefoil: 3-coloring space has dimension 2 (trivial + one essential)
    assert len(coloring_space(trefoil(), 3)) == 2
    assert len(coloring_space(trefoil(), 5)) == 1
    assert len(coloring_space(figure8(), 5)) == 2
    assert len(coloring_space(figure8(), 3)) == 1


def test_coloring_classes_counts():
    assert len(coloring_classes(trefoil(), 3)) == 1
    assert coloring_classes(trefoil(), 5) == []
    assert len(coloring_classes(figure8(), 5)) == 1


def test_coloring_rule_holds():
    d = figure8()
    for col in coloring_classes(d, 5):
        for t, os in zip(d.tuples, d.over_slots):
            u = col[d.arc_of_edge[t[0]]]
            v = col[d.arc_of_edge[t[2]]]
            o = col[d.arc_of_edge[t[os]]]
            assert (u + v - 2 * o) % 5 == 0


def test_dihedral_lift_involutions():
    d = figure8()
    col = coloring_classes(d, 5)[0]
    rep = dihedral_lift(col, 5)
    assert rep.dim == 4
    ident = identity_matrix(ZZ, 4)
    for m in rep.images:
        assert mat_eq(ZZ, mat_mul(ZZ, m, m), ident)
    assert rep.verify(wirtinger_presentation(d))


def test_dihedral_lift_rotation_order():
    # product of two distinct reflections has order p
    d = figure8()
    col = coloring_classes(d, 5)[0]
    rep = dihedral_lift(col, 5)
    i, j = next(
        (i, j)
        for i in range(len(col))
        for j in range(len(col))
        if col[i] != col[j]
    )
    rot = mat_mul(ZZ, rep.images[i], rep.images[j])
    acc = identity_matrix(ZZ, 4)
    orders = []
    for k in range(1, 6):
        acc = mat_mul(ZZ, acc, rot)
        if mat_eq(ZZ, acc, identity_matrix(ZZ, 4)):
            orders.append(k)
    assert orders == [5]


def test_dihedral_classes_trefoil_mod3():
    reps = dihedral_classes(trefoil(), 3)
    assert len(reps) == 1
    assert reps[0].dim == 2
    assert reps[0].verify(wirtinger_presentation(trefoil()))


perms5 = st.permutations(list(range(5))).map(tuple)


@given(perms5, perms5)
@settings(max_examples=40)
def test_perm_compose_inverse(a, b):
    assert perm_compose(a, perm_inverse(a)) == tuple(range(5))
    assert perm_inverse(perm_compose(a, b)) == perm_compose(
        perm_inverse(b), perm_inverse(a)
    )
    assert perm_parity(perm_compose(a, b)) == (perm_parity(a) + perm_parity(b)) % 2


def test_cycle_type_and_class():
    assert cycle_type((1, 0, 2)) == (1, 2)
    assert cycle_type((1, 2, 0)) == (3,)
    transpositions = perm_class(3, (1, 2))
    assert len(transpositions) == 3
    with pytest.raises(ValueError):
        perm_class(3, (2, 2))


def test_perm_rep_matrices_match():
    rep = PermRep(3, [(1, 0, 2), (0, 2, 1)])
    mats = rep.to_matrices()
    w = FreeWord([1, 2])
    perm = rep.image_of_word(w)
    m = mats.image_of_word(w)
    for j in range(3):
        col = [m[i][j] for i in range(3)]
        assert col[perm[j]] == 1 and sum(col) == 1


def test_perm_rep_group_order():
    rep = PermRep(3, [(1, 0, 2), (0, 2, 1)])   # two transpositions generate S3
    assert rep.group_order() == 6
    rep2 = PermRep(3, [(1, 2, 0)])
    assert rep2.group_order() == 3


def test_enumerate_perm_rep_classes_trefoil():
    pres = wirtinger_presentation(trefoil())
    reps = enumerate_perm_rep_classes(pres, 3)
    # the trefoil group surjects onto S3 (meridians = transpositions) and
    # onto Z3 (meridians = 3-cycles, abelian image), nothing else at degree 3
    orders = sorted(r.group_order() for r in reps)
    assert 6 in orders
    sym = enumerate_perm_rep_classes(pres, 3, image="symmetric")
    assert len(sym) == 1
    assert sym[0].verify(pres)


def test_enumerate_perm_rep_classes_dedupes_conjugates():
    pres = wirtinger_presentation(trefoil())
    sym = enumerate_perm_rep_classes(pres, 3, image="symmetric")
    keys = {r.canonical_key() for r in sym}
    assert len(keys) == len(sym)
