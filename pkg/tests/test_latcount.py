import pytest

from addpoly.additive import AdditivePoly, compose
from addpoly.errors import BudgetExceeded, InputError
from addpoly.frobjordan import Species, rational_jordan_form
from addpoly.latcount import (
    count_chains,
    count_lines,
    count_right_components,
    count_right_components_general,
    depth_counts,
    generating_function,
    mhat,
    ore_criterion_count,
    partitions,
    q_bracket,
    quotient_species,
)
from corpus import additive, all_monic_squarefree, tower, x_rpow_plus_x

T2 = tower(2, 1, 1)
T4 = tower(2, 1, 2)

# the eight similarity classes in dimension 3, with line and chain counts
TABLE_DIM3 = [
    ([(1, (3,))], lambda r: r * r + r + 1, lambda r: (r * r + r + 1) * (r + 1)),
    ([(1, (0, 1)), (1, (1,))], lambda r: 2, lambda r: 3),
    ([(1, (0, 0, 1))], lambda r: 1, lambda r: 1),
    ([(1, (1, 1))], lambda r: r + 1, lambda r: 2 * r + 1),
    ([(1, (2,)), (1, (1,))], lambda r: r + 2, lambda r: 3 * (r + 1)),
    ([(3, (1,))], lambda r: 0, lambda r: 1),
    ([(1, (1,)), (2, (1,))], lambda r: 1, lambda r: 2),
    ([(1, (1,)), (1, (1,)), (1, (1,))], lambda r: 3, lambda r: 6),
]


def test_q_bracket():
    assert q_bracket(3, 2) == 7
    assert q_bracket(1, 17) == 1
    assert q_bracket(2, 4) == 5
    assert q_bracket(0, 3) == 0
    with pytest.raises(InputError):
        q_bracket(-1, 2)


def test_count_lines_examples():
    assert count_lines(Species.make([(1, (3,))]), 2) == 7
    assert count_lines(Species.make([(3, (1,))]), 5) == 0
    assert count_lines(Species.make([(1, (1,)), (2, (1,))]), 7) == 1


def test_generating_function_examples():
    assert generating_function(Species.make([(1, (3,))]), 2).to_json() == [1, 7, 7, 1]
    assert generating_function(Species.make([(2, (1,))]), 3).to_json() == [1, 0, 1]
    assert generating_function(Species.make([(1, (1, 1))]), 2).to_json() == [1, 3, 3, 1]


def test_generating_function_budget():
    with pytest.raises(BudgetExceeded):
        generating_function(Species.make([(1, (0, 0, 0, 2))]), 2, dim_budget=6)
    with pytest.raises(BudgetExceeded):
        generating_function(Species.make([(4, (1,))]), 2, base_cap=9)


def test_count_chains_examples():
    assert count_chains(Species.make([(1, (3,))]), 2) == 21
    assert count_chains(Species.make([(1, (0, 0, 1))]), 7) == 1
    assert count_chains(Species.make([(1, (2,)), (2, (2,))]), 2) == 90
    assert count_chains(Species.make([(1, (0, 0, 0, 2))]), 2) == 543


def test_depth_and_quotient():
    assert depth_counts((1, 1), 1, 3) == 3
    assert depth_counts((1, 1), 2, 3) == 1
    assert quotient_species((1, 1), 2) == (2,)
    assert depth_counts((0, 2), 1, 2) == 0
    assert quotient_species((2, 1), 1) == (1, 1)
    with pytest.raises(InputError):
        quotient_species((0, 2), 1)


def test_table_dim3_sweep():
    for r in (2, 3):
        for items, lines_fn, chains_fn in TABLE_DIM3:
            species = Species.make(items)
            assert count_lines(species, r) == lines_fn(r)
            assert count_chains(species, r) == chains_fn(r)
            # base cap raised: a degree-3 eigenfactor counts over GF(r^3)
            g = generating_function(species, r, base_cap=r**3)
            assert g[1] == g[2] == lines_fn(r)
            assert g[0] == g[3] == 1


def test_count_right_components_edges():
    f = x_rpow_plus_x(T4, 4)
    assert count_right_components(f, -1) == 0
    assert count_right_components(f, 0) == 1
    assert count_right_components(f, 4) == 1
    assert count_right_components(f, 5) == 0
    assert count_right_components(f, 1) == 3  # species {(1;0,2)}: [2]_2 = 3


def test_count_right_components_general_examples():
    fbar = additive(T2, 0, 1, 1)  # x^4 + x^2
    assert count_right_components_general(fbar, 1) == 2
    assert count_right_components_general(fbar, 2) == 1
    # m = 0 reduces to the squarefree count
    f = x_rpow_plus_x(T4, 2)
    for d in range(3):
        assert count_right_components_general(f, d) == count_right_components(f, d)
    # above exponent everything is empty
    assert count_right_components_general(fbar, 3) == 0
    assert count_right_components_general(fbar, -1) == 0


def test_count_right_components_general_brute_crosscheck():
    # enumerate exponent-d monic right components of x^4 + x^2 directly
    from itertools import product

    from addpoly.additive import right_divmod

    fbar = additive(T2, 0, 1, 1)
    for d in (0, 1, 2, 3):
        count = 0
        for idxs in product(range(2), repeat=d):
            h = AdditivePoly(T2, [T2.fq.from_index(i) for i in idxs] + [T2.fq.one])
            if right_divmod(fbar, h)[1].is_zero:
                count += 1
        assert count == count_right_components_general(fbar, d)


def test_partitions_and_mhat():
    assert sorted(partitions(4)) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert mhat(0, 2) == {0}
    assert mhat(2, 5) == {0, 1, 2, 6}
    assert mhat(3, 2) == {0, 1, 2, 3, 4, 7}


def test_mhat_contains_all_line_counts_exhaustive():
    # every achievable exponent-1 component count lies in the superset,
    # over both q = 2 and q = 4 with r = 2, for every exponent up to 4
    for tw in (T2, T4):
        for n in range(1, 5):
            allowed = mhat(n, 2)
            for f in all_monic_squarefree(tw, n):
                assert count_right_components(f, 1) in allowed


def test_ore_criterion_examples():
    t44 = tower(2, 2, 1)
    f = x_rpow_plus_x(t44, 2)  # x^16 + x with r = 4
    assert ore_criterion_count(f) == 1
    assert ore_criterion_count(f) == count_right_components(f, 1)
    # a square has no exponent-1 components other than ... none squarefree here:
    # f = x^4 + x^2 + x over F_2 has pi_1 = x^3 + x + 1 with no roots in F_2*
    f = additive(T2, 1, 1, 1)
    assert ore_criterion_count(f) == 0
    assert count_right_components(f, 1) == 0


def test_ore_criterion_matches_species_lines():
    for tw in (T2, T4):
        for n in range(1, 5):
            for f in all_monic_squarefree(tw, n):
                assert ore_criterion_count(f) == count_right_components(f, 1)


def test_generating_function_palindrome_on_pipeline():
    for tw in (T2, T4):
        for n in range(1, 5):
            for f in all_monic_squarefree(tw, n):
                species = rational_jordan_form(f).species
                g = generating_function(species, tw.r, base_cap=tw.r**n)
                assert list(g.coeffs) == list(reversed(g.coeffs))
                assert g[0] == g[species.dimension()] == 1
