import itertools
import random

import pytest

from gelfand import perm
from gelfand.errors import CapacityError
from gelfand.model_sn import (
    SignedPermMatrix,
    fs_count_formula,
    inv_w,
    model_basis,
    orbit_checks,
    orbit_under_pair,
    rho_character,
    rho_generator_matrix,
    rho_matrix,
    sign_cocycle_witness,
    sign_of_generator,
    verify_sn_model,
)


def test_inv_w_examples():
    assert inv_w((2, 1), (2, 1)) == 1
    assert inv_w(perm.identity(4), (2, 1, 4, 3)) == 0
    # Inv(s_1) = {(1,2)} is disjoint from the pair (1,3)
    assert inv_w((2, 1, 3), (3, 2, 1)) == 0


def test_sign_of_generator_examples():
    assert sign_of_generator(1, (2, 1)) == -1
    assert sign_of_generator(1, (1, 2, 3)) == 1
    # s_2 moves (1 2) to (1 3), so no sign
    assert sign_of_generator(2, (2, 1, 3)) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_sign_rule_equals_inversion_parity(n):
    for w in model_basis(n).involutions:
        for i in range(1, n):
            s = perm.generator(n, i)
            assert sign_of_generator(i, w) == (-1) ** inv_w(s, w)


def test_identity_acts_trivially():
    basis = model_basis(3)
    assert rho_matrix(perm.identity(3), basis) == SignedPermMatrix.identity(basis.dim)


def test_transposition_action_n2():
    m = rho_matrix((2, 1), model_basis(2))
    assert m.rows == (0, 1)
    assert m.signs == (1, -1)


def test_conjugation_moves_pairs_n3():
    basis = model_basis(3)
    m = rho_matrix(perm.generator(3, 1), basis)
    col = basis.index[(1, 3, 2)]  # the involution (2 3)
    assert m.rows[col] == basis.index[(3, 2, 1)]  # lands on (1 3)
    assert m.signs[col] == 1


@pytest.mark.parametrize("n", range(2, 8))
def test_generator_routes_agree(n):
    basis = model_basis(n)
    for i in range(1, n):
        assert rho_generator_matrix(i, basis) == rho_matrix(
            perm.generator(n, i), basis
        )


def test_character_examples():
    assert rho_character(perm.identity(4), model_basis(4)) == 10
    assert rho_character((2, 1), model_basis(2)) == 0
    assert rho_character((2, 3, 1), model_basis(3)) == 1


def test_character_equals_matrix_trace():
    basis = model_basis(4)
    for p in itertools.permutations(range(1, 5)):
        assert rho_character(p, basis) == rho_matrix(p, basis).trace()


def test_character_is_class_function():
    rng = random.Random(3)
    for n in range(2, 6):
        basis = model_basis(n)
        for _ in range(5):
            p = perm.random_window(n, rng)
            g = perm.random_window(n, rng)
            assert rho_character(p, basis) == rho_character(
                perm.conjugate(g, p), basis
            )


@pytest.mark.parametrize("n", range(1, 9))
def test_fixed_point_factor_counts_involutions(n):
    assert fs_count_formula({1: n}) == len(perm.enumerate_involutions(n))


def test_even_cycle_with_odd_multiplicity_has_no_roots():
    assert fs_count_formula({2: 1}) == 0
    assert fs_count_formula({4: 1, 1: 1}) == 0


def test_zero_multiplicity_factor_is_one():
    assert fs_count_formula({}) == 1
    assert fs_count_formula({3: 0, 1: 3}) == fs_count_formula({1: 3})


def test_two_two_class_value():
    assert fs_count_formula(perm.multiplicities((2, 2))) == 2


@pytest.mark.parametrize("n", range(2, 6))
def test_trace_equals_roots_equals_formula(n):
    basis = model_basis(n)
    for ct, rep in perm.conjugacy_class_reps(n):
        tr = rho_character(rep, basis)
        assert tr == perm.square_roots_count(rep)
        assert tr == fs_count_formula(perm.multiplicities(ct))


@pytest.mark.parametrize("n", range(2, 5))
def test_action_is_multiplicative_on_all_pairs(n):
    basis = model_basis(n)
    mats = {
        p: rho_matrix(p, basis) for p in itertools.permutations(range(1, n + 1))
    }
    for s, ms in mats.items():
        for p, mp in mats.items():
            assert mats[perm.compose(s, p)] == ms @ mp


@pytest.mark.parametrize("n", range(2, 6))
def test_sign_cocycle_random_triples(n):
    assert sign_cocycle_witness(n, 300, random.Random(11)) is None


def test_orbit_size_examples():
    # support away from the acted letters
    assert len(orbit_under_pair(1, (1, 2, 3, 5, 4))) == 1
    assert len(orbit_under_pair(1, perm.generator(3, 1))) == 3
    assert len(orbit_under_pair(1, (4, 5, 3, 1, 2))) == 6  # (1 4)(2 5)


@pytest.mark.parametrize("n", range(3, 7))
def test_orbit_sizes_and_descent_equivalence(n):
    checks = orbit_checks(n)
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


@pytest.mark.parametrize("n,r", [(3, 3), (5, 5), (6, 3)])
def test_odd_cycle_classes_have_positive_summands(n, r):
    rep = dict(perm.conjugacy_class_reps(n))[(r,) * (n // r)]
    for w in model_basis(n).involutions:
        if perm.conjugate(rep, w) == w:
            assert inv_w(rep, w) % 2 == 0


@pytest.mark.parametrize("n,r", [(2, 2), (4, 4), (6, 2)])
def test_even_cycle_classes_with_odd_count_vanish(n, r):
    assert (n // r) % 2 == 1
    rep = dict(perm.conjugacy_class_reps(n))[(r,) * (n // r)]
    assert rho_character(rep, model_basis(n)) == 0


@pytest.mark.parametrize("n", range(2, 6))
def test_verify_sn_model_passes(n):
    report = verify_sn_model(n)
    assert report.passed, report.text()


def test_verify_sn_cap():
    with pytest.raises(CapacityError):
        verify_sn_model(8)
    with pytest.raises(CapacityError):
        verify_sn_model(1)
