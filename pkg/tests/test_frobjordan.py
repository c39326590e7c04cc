import random

import pytest

from addpoly.additive import AdditivePoly, central_to_upoly, minimal_central_left_component, random_additive
from addpoly.errors import InputError, Overflow
from addpoly.frobjordan import (
    RationalJordanForm,
    Species,
    block_matrix,
    companion_matrix,
    jordan_block,
    lambdas_from_nullities,
    nullity_sequence,
    rational_jordan_form,
    realize_species,
)
from addpoly.oracle import minpoly_of_matrix, root_space, species_from_matrix
from addpoly.upoly import UPoly, order_of_y_mod
from corpus import additive, all_monic_squarefree, audit_towers, tower, x_rpow_plus_x

T2 = tower(2, 1, 1)
T4 = tower(2, 1, 2)
F2 = T2.fr
F3 = tower(3, 1, 1).fr


def upoly_of(field, *idxs):
    return UPoly(field, [field.from_index(i) for i in idxs])


def test_species_canonicalization():
    s = Species.make([(1, (2, 0, 1, 0)), (1, (1,)), (2, (1,))])
    assert s.entries == ((1, (1,)), (1, (2, 0, 1)), (2, (1,)))
    assert s.dimension() == 1 + (2 + 3) + 2
    with pytest.raises(InputError):
        Species.make([(1, (0, 0))])


def test_rjf_of_x4_plus_x_over_f4():
    form = rational_jordan_form(x_rpow_plus_x(T4, 2))
    assert form.species == Species.make([(1, (2,))])
    assert form.nullities == ((0, 2, 2),)


def test_rjf_of_x16_plus_x_over_f4():
    form = rational_jordan_form(x_rpow_plus_x(T4, 4))
    assert form.species == Species.make([(1, (0, 2))])
    assert form.nullities == ((0, 2, 4, 4),)
    [(u, orders)] = form.blocks
    assert u == upoly_of(F2, 1, 1) and orders == (2, 2)


def test_rjf_of_x2_plus_gx():
    f = AdditivePoly(T4, (T4.fq.from_index(2), T4.fq.one))
    form = rational_jordan_form(f)
    assert form.species == Species.make([(1, (1,))])


def test_rjf_rejects_bad_inputs():
    with pytest.raises(InputError):
        rational_jordan_form(additive(T2, 0, 1))  # not squarefree
    with pytest.raises(InputError):
        rational_jordan_form(AdditivePoly.identity(T2))  # exponent 0


def test_nullity_sequence_contract():
    f = x_rpow_plus_x(T4, 4)
    u = upoly_of(F2, 1, 1)
    assert nullity_sequence(f, u, 2) == [0, 2, 4, 4]
    with pytest.raises(InputError):
        nullity_sequence(f, u, 1)  # wrong multiplicity
    with pytest.raises(InputError):
        nullity_sequence(f, upoly_of(F2, 1, 1, 1), 1)  # not an eigenfactor
    f44 = x_rpow_plus_x(T4, 2)
    assert nullity_sequence(f44, u, 1) == [0, 2, 2]


def test_lambdas_from_nullities():
    assert lambdas_from_nullities((0, 2, 4, 4), 1) == [0, 2]
    assert lambdas_from_nullities((0, 2, 2), 1) == [2]
    assert lambdas_from_nullities((0, 2, 2), 2) == [1]
    from addpoly.errors import InternalInconsistency

    with pytest.raises(InternalInconsistency):
        lambdas_from_nullities((0, 3, 4, 4), 2)  # non-integral division


def test_companion_and_jordan_blocks():
    assert companion_matrix(upoly_of(F3, 1, 0, 1)) != []
    # u = y - a: 1x1 block (a)
    a = F3.from_index(2)
    assert companion_matrix(UPoly(F3, (F3.neg(a), F3.one))) == [[a]]
    # companion of y^2+y+1 over F_2: columns (0,1)^T and (-a0,-a1)^T = (1,1)^T
    assert companion_matrix(upoly_of(F2, 1, 1, 1)) == [[0, 1], [1, 1]]
    # order-2 block for y+1 over F_2 is the classic Jordan block
    assert jordan_block(upoly_of(F2, 1, 1), 2) == [[1, 1], [0, 1]]


def test_block_matrix_layout():
    form = realize_species(F2, Species.make([(1, (0, 1)), (2, (1,))]))
    mat = block_matrix(form)
    assert len(mat) == 4
    assert species_from_matrix(F2, mat) == form.species


def test_ddf_insufficiency_witness():
    # two forms with equal minimal polynomial but distinct species
    a, b = F3.from_index(1), F3.from_index(2)
    mat_a = [[0] * 4 for _ in range(4)]
    mat_b = [[0] * 4 for _ in range(4)]
    for i, v in enumerate((a, a, a, b)):
        mat_a[i][i] = v
    for i, v in enumerate((a, a, b, b)):
        mat_b[i][i] = v
    assert minpoly_of_matrix(F3, mat_a) == minpoly_of_matrix(F3, mat_b)
    sa = species_from_matrix(F3, mat_a)
    sb = species_from_matrix(F3, mat_b)
    assert sa == Species.make([(1, (3,)), (1, (1,))])
    assert sb == Species.make([(1, (2,)), (1, (2,))])
    assert sa != sb


def _reachable_corpus(max_n=3, cap=8):
    for tw in audit_towers():
        bound = 16 // (tw.e * tw.k)
        for n in range(1, max_n + 1):
            for f in all_monic_squarefree(tw, n):
                try:
                    ext = order_of_y_mod(
                        central_to_upoly(minimal_central_left_component(f)), cap=bound
                    )
                except Overflow:
                    continue
                yield tw, f, ext


def test_minimal_polynomial_identity_on_corpus():
    count = 0
    for tw, f, _ in _reachable_corpus(max_n=2):
        space = root_space(f)
        tau = central_to_upoly(minimal_central_left_component(f))
        assert minpoly_of_matrix(tw.fr, space.frobenius_matrix) == tau
        form = rational_jordan_form(f)
        assert form.minimal_polynomial() == tau
        count += 1
    assert count > 20


def test_species_agreement_and_dimension_audit():
    for tw, f, _ in _reachable_corpus(max_n=2):
        form = rational_jordan_form(f)
        assert form.dimension() == f.exponent
        space = root_space(f)
        assert species_from_matrix(tw.fr, space.frobenius_matrix) == form.species


def test_rjf_deterministic_across_seeds_content():
    rng = random.Random(47)
    for _ in range(10):
        f = random_additive(T4, 4, rng)
        f1 = rational_jordan_form(f, seed=1)
        f2 = rational_jordan_form(f, seed=2)
        # factor ordering is canonical, so the full form agrees across seeds
        assert f1 == f2
