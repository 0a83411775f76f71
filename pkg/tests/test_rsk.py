import itertools
import math

import pytest

from gelfand import perm
from gelfand.qpoly import QPoly, ZERO
from gelfand.rsk import (
    character_dimension,
    conjugate_partition,
    enumerate_syt,
    involution_fixedpoint_vs_oddcolumns,
    irreducible_hecke_character,
    is_standard,
    mn_character,
    odd_columns,
    rs_insert,
    shape,
    superstandard_tableau,
    tableau_descent_set,
    verify_rsk,
)


def _hook_count(lam):
    conj = conjugate_partition(lam)
    prod = 1
    for r, part in enumerate(lam):
        for c in range(part):
            prod *= (part - c) + (conj[c] - r) - 1
    return math.factorial(sum(lam)) // prod


def test_insert_identity():
    p, q = rs_insert(perm.identity(4))
    assert p == q == ((1, 2, 3, 4),)


def test_insert_single_bump():
    assert rs_insert((2, 1)) == (((1,), (2,)), ((1,), (2,)))


@pytest.mark.parametrize("n", range(1, 6))
def test_inverse_symmetry(n):
    for w in itertools.permutations(range(1, n + 1)):
        p, q = rs_insert(w)
        assert rs_insert(perm.inverse(w)) == (q, p)


@pytest.mark.parametrize("n", range(1, 6))
def test_involution_iff_symmetric_pair(n):
    for w in itertools.permutations(range(1, n + 1)):
        p, q = rs_insert(w)
        assert shape(p) == shape(q)
        assert is_standard(p) and is_standard(q)
        assert perm.is_involution(w) == (p == q)


@pytest.mark.parametrize("n", range(1, 6))
def test_descent_compatibility(n):
    for w in itertools.permutations(range(1, n + 1)):
        _, q = rs_insert(w)
        assert perm.descent_set(w) == tableau_descent_set(q)


def test_tableau_descent_examples():
    assert tableau_descent_set(((1, 2, 3),)) == set()
    assert tableau_descent_set(((1,), (2,), (3,))) == {1, 2}
    assert tableau_descent_set(((1, 3), (2,))) == {1}


def test_enumerate_syt_examples():
    assert len(enumerate_syt((4,))) == 1
    assert len(enumerate_syt((2, 1))) == 2
    assert all(is_standard(t) for t in enumerate_syt((3, 2)))


@pytest.mark.parametrize("n", range(1, 8))
def test_syt_counts_match_hook_formula(n):
    for lam in perm.partitions(n):
        assert len(enumerate_syt(lam)) == _hook_count(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_syt_total_equals_involution_count(n):
    total = sum(len(enumerate_syt(lam)) for lam in perm.partitions(n))
    assert total == len(perm.enumerate_involutions(n))


def test_odd_columns_examples():
    assert odd_columns((2, 2)) == 0
    assert odd_columns((1,)) == 1
    assert odd_columns((3, 1)) == 2


def test_conjugate_partition():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition(()) == ()


def test_superstandard_tableau():
    assert superstandard_tableau((3, 2)) == ((1, 2, 3), (4, 5))


def test_irreducible_character_examples():
    for mu in perm.partitions(4):
        assert irreducible_hecke_character((4,), mu) == QPoly.constant(1)
    assert irreducible_hecke_character((1, 1, 1), (1, 1, 1)) == QPoly.constant(1)
    assert irreducible_hecke_character((1, 1), (2,)) == QPoly({1: -1})


@pytest.mark.parametrize("n", range(2, 5))
def test_character_independent_of_tableau(n):
    for lam in perm.partitions(n):
        tabs = enumerate_syt(lam)
        for mu in perm.partitions(n):
            vals = {irreducible_hecke_character(lam, mu, t) for t in tabs}
            assert len(vals) == 1


@pytest.mark.parametrize("n", range(2, 5))
def test_q1_values_match_border_strip_recursion(n):
    for lam in perm.partitions(n):
        for mu in perm.partitions(n):
            assert irreducible_hecke_character(lam, mu).evaluate(1) == mn_character(
                lam, mu
            )


@pytest.mark.parametrize("n", range(2, 5))
def test_characters_sum_to_model_trace(n):
    from gelfand.model_hecke import hecke_model_character
    from gelfand.model_sn import model_basis

    basis = model_basis(n)
    lams = list(perm.partitions(n))
    for mu in lams:
        total = ZERO
        for lam in lams:
            total = total + irreducible_hecke_character(lam, mu)
        assert total == hecke_model_character(mu, basis)


def test_mn_character_examples():
    for n in range(1, 6):
        for mu in perm.partitions(n):
            assert mn_character((n,), mu) == 1
        assert mn_character((1,) * n, (n,)) == (-1) ** (n - 1)
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (2, 1)) == 0
    assert mn_character((2, 1), (1, 1, 1)) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_mn_regular_representation(n):
    total = sum(
        mn_character(lam, (1,) * n) * character_dimension(lam)
        for lam in perm.partitions(n)
    )
    assert total == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_mn_dimensions_match_tableau_counts(n):
    for lam in perm.partitions(n):
        assert mn_character(lam, (1,) * n) == len(enumerate_syt(lam))


@pytest.mark.parametrize("n", range(2, 6))
def test_mn_sum_counts_square_roots(n):
    lams = list(perm.partitions(n))
    for mu, rep in perm.conjugacy_class_reps(n):
        total = sum(mn_character(lam, mu) for lam in lams)
        assert total == perm.square_roots_count(rep)


def test_fixedpoint_report_examples():
    rep = involution_fixedpoint_vs_oddcolumns(4)
    assert rep.passed
    # six involutions of S_4 have two fixed points
    two_fixed = [
        w
        for w in perm.enumerate_involutions(4)
        if len(perm.fixed_points(w)) == 2
    ]
    assert len(two_fixed) == 6
    with_two_odd = [
        lam for lam in perm.partitions(4) if odd_columns(lam) == 2
    ]
    assert sum(len(enumerate_syt(lam)) for lam in with_two_odd) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_fixedpoint_vs_oddcolumns_passes(n):
    assert involution_fixedpoint_vs_oddcolumns(n).passed


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_rsk_passes(n):
    report = verify_rsk(n)
    assert report.passed, report.text()
