import json

import pytest
from hypothesis import given, settings, strategies as st

from bosonic.demazure import r_polynomial_symmetrized, tau, v_lambda, v_m
from bosonic.laurent import LaurentPoly
from bosonic.lattice import (
    InvalidSystem, colored_system, column_transfer_matrix, enumerate_states,
    partition_function, partition_function_enumerated, partition_function_transfer,
    top_boundary, uncolored_system,
)
from bosonic.weights import MINUS, PLUS
from bosonic.weyl import (
    act_on_flag, all_permutations, longest_element, partitions_in_box, standard_flag,
)

from strategies import permutations_of


def z(i, r):
    return LaurentPoly.z(i, r)


def test_top_boundary_uncolored_example():
    top = top_boundary(uncolored_system((8, 6, 6, 1, 0)))
    assert top == {8: 1, 7: 0, 6: 2, 5: 0, 4: 0, 3: 0, 2: 0, 1: 1, 0: 1}


def test_top_boundary_colored_example():
    top = top_boundary(colored_system((4, 2, 2), (1, 2, 3), (1, 2, 3)))
    assert top == {4: (1, 0, 0), 3: (0, 0, 0), 2: (0, 1, 1), 1: (0, 0, 0), 0: (0, 0, 0)}


def test_top_boundary_zero_weight_puts_every_color_in_column_zero():
    for c in all_permutations(3):
        flag = act_on_flag(c, standard_flag(3))
        assert top_boundary(colored_system((0, 0, 0), flag, flag)) == {0: (1, 1, 1)}


def test_invalid_systems():
    with pytest.raises(InvalidSystem):
        uncolored_system((0, 1))
    with pytest.raises(InvalidSystem):
        uncolored_system((2, 0), M=1)
    with pytest.raises(InvalidSystem):
        colored_system((1, 0), (1, 3), (1, 2))
    with pytest.raises(InvalidSystem):
        colored_system((1, 0), (1,), (1, 2))


def test_monostatic_system_has_exactly_one_state():
    for w in all_permutations(3):
        flag = act_on_flag(w, standard_flag(3))
        states = list(enumerate_states(colored_system((2, 1, 0), flag, flag)))
        assert len(states) == 1
        assert states[0].weight == LaurentPoly.monomial((2, 1, 0), w.length())


def test_uncolored_zero_weight_sum():
    states = list(enumerate_states(uncolored_system((0, 0))))
    total = sum((s.weight for s in states), LaurentPoly.zero(2))
    assert total == 1 + LaurentPoly.t(2)


def test_mismatched_colors_give_no_states():
    spec = colored_system((1, 0), (1, 1), (2, 2))
    assert list(enumerate_states(spec)) == []
    assert partition_function(spec) == 0


def test_partition_function_examples():
    r2 = 2
    assert partition_function(uncolored_system((1, 0), "P")) == z(1, r2) + z(2, r2)
    assert partition_function(uncolored_system((1, 1), "R")) == \
        (1 + LaurentPoly.t(2)) * z(1, 2) * z(2, 2)
    assert partition_function(uncolored_system((2, 0), "R")) == \
        z(1, 2) ** 2 + z(1, 2) * z(2, 2) + z(2, 2) ** 2 - LaurentPoly.t(2) * z(1, 2) * z(2, 2)
    assert partition_function(uncolored_system((0, 0, 0), "P")) == 1


def test_monostatic_value_with_one_swapped_pair():
    flag = (1, 3, 2)
    assert partition_function(colored_system((4, 2, 2), flag, flag)) == \
        LaurentPoly.monomial((4, 2, 2), 1)


@pytest.mark.parametrize("lam", [(1, 0, -1), (0, -1, -2), (2, 0, -1)])
def test_negative_parts_use_shifted_normalization(lam):
    for w in all_permutations(3):
        flag = act_on_flag(w, standard_flag(3))
        assert partition_function(colored_system(lam, flag, flag)) == \
            LaurentPoly.monomial(lam, w.length())


@pytest.mark.parametrize("lam", [(2, 1, 0), (1, 1, 0), (2, 0, -1), (0, 0, 0)])
def test_padding_does_not_change_partition_function(lam):
    base = uncolored_system(lam)
    for M, N in [(base.M - 1, base.N), (base.M, base.N + 2), (base.M - 2, base.N + 1)]:
        assert partition_function(base.with_padding(M, N)) == partition_function(base)
    flag = (2, 1, 3)
    cbase = colored_system(lam, flag, (1, 2, 3))
    assert partition_function(cbase.with_padding(cbase.M - 1, cbase.N + 1)) == \
        partition_function(cbase)


@pytest.mark.parametrize("lam", partitions_in_box(3, 2))
def test_three_evaluation_methods_agree(lam):
    for family in "PR":
        spec = uncolored_system(lam, family)
        z_sweep = partition_function(spec)
        assert z_sweep == partition_function_enumerated(spec)
        assert z_sweep == partition_function_transfer(spec)


@pytest.mark.parametrize("lam", partitions_in_box(3, 3))
def test_uncolored_matches_symmetrization_oracle(lam):
    z_r = partition_function(uncolored_system(lam, "R"))
    z_p = partition_function(uncolored_system(lam, "P"))
    assert z_r == r_polynomial_symmetrized(lam)
    assert z_r == v_lambda(lam) * z_p


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(partitions_in_box(3, 3)), permutations_of(3), permutations_of(3))
def test_colored_partition_function_equals_tau(lam, w, y):
    c0 = standard_flag(3)
    value = partition_function(colored_system(lam, act_on_flag(y, c0), act_on_flag(w, c0)))
    assert value == tau(lam, w, y)


@pytest.mark.parametrize("lam", partitions_in_box(3, 3))
def test_uncolored_partition_function_is_symmetric(lam):
    value = partition_function(uncolored_system(lam))
    for u in all_permutations(3):
        assert value.permute_z(u) == value


def test_colored_families_agree_on_multiplicity_free_systems():
    c0 = standard_flag(3)
    for lam in [(2, 1, 0), (3, 1, 0), (1, 0, -1)]:
        for w in all_permutations(3):
            for y in all_permutations(3):
                top, right = act_on_flag(y, c0), act_on_flag(w, c0)
                assert partition_function(colored_system(lam, top, right, "P")) == \
                    partition_function(colored_system(lam, top, right, "R"))


def test_transfer_matrix_examples():
    assert column_transfer_matrix("R", 0, 2)[((PLUS, PLUS), (PLUS, PLUS))] == 1
    # one particle enters at the top and leaves to the right: a single D(0) vertex
    for family in "PR":
        assert column_transfer_matrix(family, 1, 1) == {((PLUS,), (MINUS,)): 1}
    # with no particle the lone vertex is A(0) or B(0)
    assert column_transfer_matrix("R", 0, 1) == {((PLUS,), (PLUS,)): 1,
                                                 ((MINUS,), (MINUS,)): z(1, 1)}


def test_transfer_matrix_entries_respect_particle_count():
    for family in "PR":
        for m in range(4):
            for delta, eps in column_transfer_matrix(family, m, 3):
                assert eps.count(MINUS) - delta.count(MINUS) == m


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_transfer_matrix_family_ratio(m):
    r = 3
    mat_r, mat_p = column_transfer_matrix("R", m, r), column_transfer_matrix("P", m, r)
    assert set(mat_r) == set(mat_p)
    for key, value in mat_p.items():
        assert mat_r[key] == value * v_m(m, r)


def test_state_serialization_is_deterministic():
    states = list(enumerate_states(uncolored_system((1, 0))))
    assert len(states) == 2
    for st_ in states:
        data = json.loads(st_.to_json())
        assert data == st_.to_dict()
        assert data["system"]["lambda"] == [1, 0]
        assert LaurentPoly.from_dict(data["weight"]) == st_.weight
    assert [s.to_json() for s in states] == \
        [s.to_json() for s in enumerate_states(uncolored_system((1, 0)))]


def test_longest_flag_on_both_sides_is_monostatic():
    flag = act_on_flag(longest_element(3), standard_flag(3))
    assert partition_function(colored_system((2, 1, 0), flag, flag)) == \
        LaurentPoly.monomial((2, 1, 0), 3)
