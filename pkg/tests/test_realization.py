"""Tests for the level-free realization elements and their products."""

import doctest
import itertools

import pytest

from affq import hall as Ha
from affq import laurent as L
from affq import matrices as M
from affq import realization as R
from affq import schur as S


def mixed_labels(n, max_sigma, max_dist):
    """Zero-diagonal nonnegative labels with bounded support and size."""
    cells = [
        (i, jj)
        for i in range(1, n + 1)
        for jj in range(i - max_dist, i + max_dist + 1)
        if jj != i
    ]
    labels = set()
    for total in range(max_sigma + 1):
        for combo in itertools.combinations_with_replacement(
            range(len(cells)), total
        ):
            items = {}
            for k in combo:
                items[cells[k]] = items.get(cells[k], 0) + 1
            labels.add(M.pmat(n, [(i, jj, c) for (i, jj), c in items.items()]))
    return sorted(labels, key=lambda a: a.entries)


def frac(num, den=None):
    return L.fraction(L.poly(num), L.poly(den) if den is not None else None)


def test_doctests():
    assert doctest.testmod(R).failed == 0


def test_element_ops_and_validation():
    n = 2
    A = M.e_unit(1, 2, 2)
    x = R.v_basis(n, A, (1, 0))
    assert not R.v_is_zero(x)
    assert R.v_is_zero(R.v_sub(x, x))
    assert R.v_eq(R.v_add(x, x), R.v_scale(frac([(0, 2)]), x))
    assert R.v_is_zero(R.v_scale(L.FRAC_ZERO, x))
    y = R.v_from_items(n, [(A, (1, 0), {0: 1}), (A, (1, 0), {0: -1})])
    assert R.v_is_zero(y)
    two = R.v_from_items(n, [(A, (1, 0), {0: 1}), (A, (1, 0), {0: 1})])
    assert R.v_eq(two, R.v_add(x, x))
    with pytest.raises(ValueError):
        R.v_basis(n, M.diag((1, 0)), (0, 0))
    with pytest.raises(ValueError):
        R.v_basis(n, M.pmat(2, [(1, 2, -1)]), (0, 0))
    with pytest.raises(ValueError):
        R.v_basis(n, A, (0, 0, 0))
    with pytest.raises(ValueError):
        R.v_add(x, R.v_zero(3))


def test_json_round_trip_and_text():
    n = 2
    x = R.v_from_items(
        n,
        [
            (M.e_unit(1, 2, 2), (0, 1), frac([(1, 1)], [(0, -1), (2, 1)])),
            (M.pmat(2, []), (-1, 2), {0: 3}),
        ],
    )
    obj = R.to_json(x)
    assert R.v_eq(R.from_json(obj), x)
    assert obj["terms"] == sorted(
        obj["terms"], key=lambda t: (t["matrix"]["entries"], t["j"])
    )
    assert R.text(R.v_zero(2)) == "0"
    assert "(3)*[](-1, 2)" in R.text(x)


def test_frozen_diagonal_products():
    n = 2
    A = M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))
    x = R.v_basis(n, A, (0, 0))
    left = R.mul_by_0j((1, 2), x)
    assert left.terms == {(A, (1, 2)): frac([(3, 1)])}
    right = R.mul_0j_right(x, (1, 2))
    assert right.terms == {(A, (1, 2)): frac([(3, 1)])}
    B = M.e_unit(1, 2, 2)
    assert R.mul_by_0j((2, 0), R.v_basis(n, B, (0, 0))).terms == {
        (B, (2, 0)): frac([(2, 1)])
    }
    assert R.mul_0j_right(R.v_basis(n, B, (0, 0)), (2, 0)).terms == {
        (B, (2, 0)): frac([(0, 1)])
    }
    y = R.v_basis(n, B, (3, -1))
    assert R.v_eq(R.mul_by_0j((0, 0), y), y)
    composed = R.mul_by_0j((0, 1), R.mul_by_0j((1, 0), y))
    assert R.v_eq(composed, R.mul_by_0j((1, 1), y))


def test_frozen_one_layer_on_diagonal():
    for j in [(0, 0), (1, 0), (0, 1), (2, 3)]:
        got = R.mul_by_semisimple_plus((1, 0), R.v_basis(2, M.pmat(2, []), j))
        assert got.terms == {(M.e_unit(1, 2, 2), j): frac([(j[1], 1)])}
    for j in [(0, 0, 0), (1, 2, 3)]:
        got = R.mul_by_semisimple_plus((0, 1, 0), R.v_basis(3, M.pmat(3, []), j))
        assert got.terms == {(M.e_unit(2, 3, 3), j): frac([(j[2], 1)])}
    for j in [(0, 0), (1, 1), (2, 3)]:
        got = R.mul_by_semisimple_minus((0, 1), R.v_basis(2, M.pmat(2, []), j))
        assert got.terms == {(M.pmat(2, [(1, 0, 1)]), j): frac([(j[1], 1)])}


def test_frozen_commutator_products():
    den = [(0, -1), (2, 1)]
    mixed = M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))
    got = R.mul_by_semisimple_plus((1, 0), R.v_basis(2, M.e_unit(2, 1, 2), (0, 0)))
    assert got.terms == {
        (M.pmat(2, []), (1, -1)): frac([(1, 1)], den),
        (M.pmat(2, []), (-1, -1)): frac([(1, -1)], den),
        (mixed, (0, 0)): frac([(0, 1)]),
    }
    got = R.mul_by_semisimple_minus((1, 0), R.v_basis(2, M.e_unit(1, 2, 2), (0, 0)))
    assert got.terms == {
        (M.pmat(2, []), (-1, 1)): frac([(1, 1)], den),
        (M.pmat(2, []), (-1, -1)): frac([(1, -1)], den),
        (mixed, (0, 0)): frac([(0, 1)]),
    }
    diff = R.v_sub(
        R.mul_by_semisimple_minus((1, 0), R.v_basis(2, M.s_alpha((1, 0)), (0, 0))),
        R.mul_by_semisimple_plus((1, 0), R.v_basis(2, M.t_s_alpha((1, 0)), (0, 0))),
    )
    assert diff.terms == {
        (M.pmat(2, []), (-1, 1)): frac([(1, 1)], den),
        (M.pmat(2, []), (1, -1)): frac([(1, -1)], den),
    }


def test_alpha_zero_identity():
    x = R.v_from_items(
        2,
        [
            (M.e_unit(1, 2, 2), (0, 1), {1: 2}),
            (M.e_unit(2, 1, 2), (-1, 0), frac([(0, 1)], [(0, -1), (2, 1)])),
        ],
    )
    assert R.v_eq(R.mul_by_semisimple_plus((0, 0), x), x)
    assert R.v_eq(R.mul_by_semisimple_minus((0, 0), x), x)
    with pytest.raises(ValueError):
        R.mul_by_semisimple_plus((1,), x)
    with pytest.raises(ValueError):
        R.mul_by_semisimple_minus((-1, 1), x)


def test_reduce_frozen():
    zl = M.pmat(2, [])
    red = R.reduce_j_lambda(zl, (0, 0), (1, 0))
    den = [(0, -1), (2, 1)]
    assert red.terms == {
        (zl, (1, 0)): frac([(1, 1)], den),
        (zl, (-1, 0)): frac([(1, -1)], den),
    }
    red = R.reduce_j_lambda(zl, (0, 0), (2, 0))
    den2 = [(0, 1), (2, -1), (4, -1), (6, 1)]
    assert red.terms == {
        (zl, (2, 0)): frac([(2, 1)], den2),
        (zl, (0, 0)): frac([(2, -1), (4, -1)], den2),
        (zl, (-2, 0)): frac([(4, 1)], den2),
    }
    A = M.e_unit(1, 2, 2)
    assert R.v_eq(R.reduce_j_lambda(A, (3, -1), (0, 0)), R.v_basis(2, A, (3, -1)))
    with pytest.raises(ValueError):
        R.reduce_j_lambda(A, (0, 0), (-1, 0))
    with pytest.raises(ValueError):
        R.reduce_j_lambda(A, (0, 0), (1, 0, 0))


def test_reduce_matches_weighted_level_form():
    checked = 0
    for A in mixed_labels(2, 2, 2):
        for j in [(0, 0), (1, 0), (1, 2)]:
            for lam in [(0, 0), (1, 0), (0, 2), (1, 1), (2, 1)]:
                red = R.reduce_j_lambda(A, j, lam)
                for r in range(max(1, M.sigma(A)), 5):
                    got = R.eval_at_level(red, r)
                    want = S.A_j_lambda_r(A, j, lam, r)
                    assert S.s_eq(got, want), (A.entries, j, lam, r)
                    checked += 1
    assert checked > 500


def test_eval_frozen_and_clearing_error():
    x = R.v_basis(2, M.pmat(2, []), (1, 0))
    got = R.eval_at_level(x, 2)
    assert S.s_eq(got, S.A_j_r(M.pmat(2, []), (1, 0), 2))
    assert S.s_eq(
        R.eval_at_level(R.v_zero(2), 3), S.s_zero(2, 3, "n")
    )
    lifted = R.eval_at_level(R.v_basis(2, M.s_alpha((2, 0)), (0, 0)), 1)
    assert S.s_eq(lifted, S.s_zero(2, 1, "n"))
    bad = R.v_scale(frac([(0, 1)], [(0, -1), (2, 1)]), x)
    with pytest.raises(ValueError):
        R.eval_at_level(bad, 2)
    with pytest.raises(ValueError):
        R.eval_at_level(x, -1)


def test_level_coherence_left_and_right_diagonal():
    n = 2
    jgrid = [(0, 0), (1, 0), (0, 1), (1, 2)]
    zl = M.pmat(n, [])
    for A in mixed_labels(n, 2, 2):
        for j in jgrid:
            x = R.v_basis(n, A, j)
            for r in range(max(1, M.sigma(A)), 5):
                base = S.A_j_r(A, j, r)
                base_e = S.convert(base, "e")
                for jp in jgrid:
                    got = R.eval_at_level(R.mul_by_0j(jp, x), r)
                    want = S.closed_product_upper(S.A_j_r(zl, jp, r), base)
                    assert S.s_eq(got, want), ("left", A.entries, j, jp, r)
                    got = R.eval_at_level(R.mul_0j_right(x, jp), r)
                    want = S.convert(
                        S.oracle_product(base_e, S.convert(S.A_j_r(zl, jp, r), "e")),
                        "n",
                    )
                    assert S.s_eq(got, want), ("right", A.entries, j, jp, r)


def _coherence_one_layer(n, jgrid, labels, alphas, r_max):
    zero_j = (0,) * n
    for A in labels:
        for j in jgrid:
            x = R.v_basis(n, A, j)
            for r in range(max(1, M.sigma(A)), r_max + 1):
                base = S.A_j_r(A, j, r)
                for alpha in alphas:
                    got = R.eval_at_level(R.mul_by_semisimple_plus(alpha, x), r)
                    want = S.closed_product_upper(
                        S.A_j_r(M.s_alpha(alpha), zero_j, r), base
                    )
                    assert S.s_eq(got, want), ("plus", A.entries, j, alpha, r)
                    got = R.eval_at_level(R.mul_by_semisimple_minus(alpha, x), r)
                    want = S.closed_product_lower(
                        S.A_j_r(M.t_s_alpha(alpha), zero_j, r), base
                    )
                    assert S.s_eq(got, want), ("minus", A.entries, j, alpha, r)


def test_level_coherence_one_layer_n2():
    alphas = [a for a in itertools.product(range(3), repeat=2) if sum(a) <= 2]
    _coherence_one_layer(
        2, [(0, 0), (1, 0), (0, 1), (1, 2)], mixed_labels(2, 2, 2), alphas, 4
    )


def test_level_coherence_one_layer_n3():
    alphas = [a for a in itertools.product(range(3), repeat=3) if sum(a) <= 2]
    _coherence_one_layer(
        3, [(0, 0, 0), (0, 1, 1)], mixed_labels(3, 2, 1), alphas, 3
    )


def test_relation_e_all_pairs():
    pairs = [
        ((1, 0), (1, 0)),
        ((1, 0), (0, 1)),
        ((1, 1), (1, 1)),
        ((2, 0), (2, 0)),
        ((2, 0), (1, 0)),
    ]
    for lam, mu in pairs:
        ok, report = R.relation_e_data(lam, mu, [2, 3, 4])
        assert ok, report
        assert [lv["r"] for lv in report["levels"]] == [2, 3, 4]
        assert all(lv["equal"] and not lv["diffs"] for lv in report["levels"])
    with pytest.raises(ValueError):
        R.relation_e_check((1, 0), (1, 0, 0), [2])
    with pytest.raises(ValueError):
        R.relation_e_check((-1, 0), (1, 0), [2])


def test_relation_e_commuting_case_is_symbolically_zero():
    n = 2
    zero_j = (0, 0)
    lam, mu = (1, 0), (0, 1)
    lhs = R.v_sub(
        R.mul_by_semisimple_minus(mu, R.v_basis(n, M.s_alpha(lam), zero_j)),
        R.mul_by_semisimple_plus(lam, R.v_basis(n, M.t_s_alpha(mu), zero_j)),
    )
    assert R.v_is_zero(lhs)


def test_triangular_leading_grid():
    checked = 0
    for A in mixed_labels(2, 2, 2):
        for j in [(0, 0), (1, 0), (0, 1), (1, 2)]:
            for r in range(max(1, M.sigma(A)), 5):
                ok, report = R.triangular_leading_data(A, j, r)
                assert ok, report
                checked += 1
    assert checked == 576


def test_triangular_validation():
    A = M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))
    with pytest.raises(ValueError):
        R.triangular_leading_check(A, (1, 1), 1)
    with pytest.raises(ValueError):
        R.triangular_leading_check(A, (-1, 1), 3)
    with pytest.raises(ValueError):
        R.triangular_leading_check(M.diag((1, 0)), (0, 0), 2)


def test_tilde_exponent_matches_hall_dimensions():
    for alpha in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 2)]:
        lab = M.s_alpha(alpha)
        assert R._tilde_exponent(alpha) == Ha.dim_end(lab) - Ha.dim_rep(lab)
