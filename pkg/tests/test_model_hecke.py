import pytest

from gelfand import perm
from gelfand.errors import CapacityError
from gelfand.model_hecke import (
    hecke_model_character,
    involutive_length,
    involutive_length_oracle,
    involutive_order,
    minimal_involution,
    mu_descent_number,
    mu_unimodal_character,
    order_relation,
    poset_dot,
    rho_q_generator,
    rho_q_of_word,
    t_mu_word,
    verify_hecke_model,
)
from gelfand.model_sn import model_basis, orbit_under_pair, rho_generator_matrix
from gelfand.qpoly import ONE, Q, ZERO, PolyMatrix, QPoly, minus_q_power


def test_minimal_involutions_have_length_zero():
    for n in range(1, 8):
        for k in range(n // 2 + 1):
            assert involutive_length(minimal_involution(n, k)) == 0


def test_involutive_length_examples():
    assert involutive_length((2, 1, 4, 3)) == 0
    assert involutive_length((3, 4, 1, 2)) == 1  # (1 3)(2 4)
    assert involutive_length((4, 3, 2, 1)) == 2  # (1 4)(2 3)
    assert involutive_length((3, 2, 1)) == 1  # (1 3), conjugate of (1 2) by s_2
    assert involutive_length_oracle((3, 2, 1)) == 1
    assert involutive_length_oracle((4, 3, 2, 1)) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_formula_matches_oracle(n):
    for w in model_basis(n).involutions:
        assert involutive_length(w) == involutive_length_oracle(w)


def test_oracle_cap():
    with pytest.raises(CapacityError):
        involutive_length_oracle(perm.identity(9))


def test_order_relation_examples():
    assert order_relation((2, 1), 1) == "fixed_descent"
    assert order_relation(perm.identity(3), 2) == "fixed_nondescent"
    assert order_relation((3, 2, 1), 1) == "up"  # (1 3) climbs to (2 3)
    assert order_relation((1, 3, 2), 1) == "down"  # (2 3) drops to (1 3)


@pytest.mark.parametrize("n", range(2, 8))
def test_four_cases_exhaustive(n):
    tags = {"fixed_descent", "fixed_nondescent", "up", "down"}
    for w in model_basis(n).involutions:
        for i in range(1, n):
            assert order_relation(w, i) in tags


@pytest.mark.parametrize("n", range(2, 7))
def test_moved_involutions_shift_length_by_one(n):
    for w in model_basis(n).involutions:
        for i in range(1, n):
            s = perm.generator(n, i)
            v = perm.compose(s, perm.compose(w, s))
            if v != w:
                assert abs(involutive_length(v) - involutive_length(w)) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_cover_edges_connect_each_cycle_type(n):
    data = involutive_order(n)
    adj: dict = {}
    for w, _, v in data.cover_edges:
        adj.setdefault(w, set()).add(v)
        adj.setdefault(v, set()).add(w)
    by_type: dict = {}
    for w in model_basis(n).involutions:
        by_type.setdefault(len(perm.involution_pairs(w)), set()).add(w)
    for k, members in by_type.items():
        start = minimal_involution(n, k)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for v in adj.get(w, ()):
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
            frontier = nxt
        assert seen == members


def test_generator_matrix_n2():
    m = rho_q_generator(1, model_basis(2))
    assert m.entries == {(0, 0): ONE, (1, 1): -Q}


def test_generator_columns_n3():
    basis = model_basis(3)
    m = rho_q_generator(1, basis)
    c23 = basis.index[(1, 3, 2)]
    c13 = basis.index[(3, 2, 1)]
    c12 = basis.index[(2, 1, 3)]
    # drop: C_(2 3) maps to C_(1 3) alone
    assert m.entries[(c13, c23)] == ONE
    assert (c23, c23) not in m.entries
    # climb: C_(1 3) maps to (1-q) C_(1 3) + q C_(2 3)
    assert m.entries[(c13, c13)] == ONE - Q
    assert m.entries[(c23, c13)] == Q
    assert m.entries[(c12, c12)] == -Q


def test_word_product_and_quadratic():
    basis = model_basis(2)
    assert rho_q_of_word([], basis) == PolyMatrix.identity(2)
    m = rho_q_of_word([1], basis)
    assert m == rho_q_generator(1, basis)
    assert rho_q_of_word([1, 1], basis) == m.scale(ONE - Q).add(
        PolyMatrix.identity(2).scale(Q)
    )


@pytest.mark.parametrize("n", range(2, 6))
def test_hecke_relations(n):
    basis = model_basis(n)
    gens = {i: rho_q_generator(i, basis) for i in range(1, n)}
    ident = PolyMatrix.identity(basis.dim)
    for m in gens.values():
        assert m @ m == m.scale(ONE - Q).add(ident.scale(Q))
    for i in gens:
        for j in gens:
            if j > i + 1:
                assert gens[i] @ gens[j] == gens[j] @ gens[i]
    for i in range(1, n - 1):
        assert gens[i] @ gens[i + 1] @ gens[i] == gens[i + 1] @ gens[i] @ gens[i + 1]


def test_t_mu_word_examples():
    assert t_mu_word((4,)) == [1, 2, 3]
    assert t_mu_word((1, 1, 1)) == []
    assert t_mu_word((2, 1)) == [1]


def test_mu_descent_number_examples():
    assert mu_descent_number(perm.identity(3), (2, 1)) == 0
    assert mu_descent_number((1, 3, 2), (2, 1)) == 0
    assert mu_descent_number((3, 2, 1), (2, 1)) == 1


def test_character_table_n2():
    basis = model_basis(2)
    assert hecke_model_character((2,), basis) == ONE - Q
    assert hecke_model_character((1, 1), basis) == QPoly.constant(2)


def test_character_table_n3():
    basis = model_basis(3)
    assert hecke_model_character((2, 1), basis) == QPoly({0: 2, 1: -2})
    assert hecke_model_character((3,), basis) == QPoly({0: 1, 1: -1, 2: 1})


def test_unimodal_sum_examples():
    assert mu_unimodal_character((1, 1)) == QPoly.constant(2)
    assert mu_unimodal_character((2, 1)) == QPoly({0: 2, 1: -2})
    assert mu_unimodal_character((3,)) == QPoly({0: 1, 1: -1, 2: 1})


@pytest.mark.parametrize("n", range(2, 6))
def test_trace_identity_all_types(n):
    basis = model_basis(n)
    for mu in perm.partitions(n):
        assert hecke_model_character(mu, basis) == mu_unimodal_character(mu)


def test_block_boundary_exclusion_is_essential():
    # counting every descent would give 1 - q at the finest type, not the
    # model trace 2, so the boundary positions must be left out
    basis = model_basis(2)
    global_sum = ZERO
    for w in perm.enumerate_involutions(2):
        global_sum = global_sum + minus_q_power(perm.descent_number(w))
    assert global_sum == ONE - Q
    assert global_sum != hecke_model_character((1, 1), basis)


@pytest.mark.parametrize("n", range(2, 7))
def test_q1_specialization_matches_group_model(n):
    basis = model_basis(n)
    for i in range(1, n):
        assert (
            rho_q_generator(i, basis).specialize(1)
            == rho_generator_matrix(i, basis).entry_dict()
        )


def _conj(s, v):
    return perm.compose(s, perm.compose(v, s))


HEX_LOW = [
    ["1-q", "1", "0", "0", "0", "0"],
    ["q", "0", "0", "0", "0", "0"],
    ["0", "0", "1-q", "1", "0", "0"],
    ["0", "0", "q", "0", "0", "0"],
    ["0", "0", "0", "0", "1-q", "1"],
    ["0", "0", "0", "0", "q", "0"],
]

HEX_HIGH = [
    ["1-q", "0", "0", "0", "1", "0"],
    ["0", "1-q", "1", "0", "0", "0"],
    ["0", "q", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "q"],
    ["q", "0", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0", "1-q"],
]

_CELL = {"0": ZERO, "1": ONE, "q": Q, "1-q": ONE - Q}


def _block(mat, ordered, basis):
    idx = [basis.index[w] for w in ordered]
    return [[mat.entries.get((r, c), ZERO) for c in idx] for r in idx]


def test_hexagonal_orbit_blocks_match_known_matrices():
    n, i = 5, 1
    basis = model_basis(n)
    lengths = involutive_order(n).lengths
    orbit = orbit_under_pair(i, (4, 5, 3, 1, 2))  # (1 4)(2 5)
    assert len(orbit) == 6
    bottom = min(orbit, key=lambda v: lengths[v])
    s1 = perm.generator(n, i)
    s2 = perm.generator(n, i + 1)
    a = _conj(s1, bottom)
    ab = _conj(s2, a)
    top = _conj(s1, ab)
    b = _conj(s2, bottom)
    ba = _conj(s1, b)
    ordered = [bottom, a, ab, top, b, ba]
    assert sorted(ordered) == sorted(orbit)
    low = _block(rho_q_generator(i, basis), ordered, basis)
    high = _block(rho_q_generator(i + 1, basis), ordered, basis)
    assert low == [[_CELL[x] for x in row] for row in HEX_LOW]
    assert high == [[_CELL[x] for x in row] for row in HEX_HIGH]


def test_poset_dot_small():
    d2 = poset_dot(2)
    assert " -> " not in d2
    assert d2.count("label=") >= 2
    d3 = poset_dot(3)
    assert d3.count(" -> ") == 2
    assert 'v2 -> v3 [label="s2"]' in d3  # (1 2) climbs to (1 3)
    assert 'v3 -> v1 [label="s1"]' in d3  # (1 3) climbs to (2 3)
    assert poset_dot(4) == poset_dot(4)


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_hecke_model_passes(n):
    report = verify_hecke_model(n)
    assert report.passed, report.text()


def test_verify_hecke_cap():
    with pytest.raises(CapacityError):
        verify_hecke_model(7)
