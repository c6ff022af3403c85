import doctest
import itertools
import math
import random

import pytest

from affq import matrices as M
from affq import permutations as P


def test_doctests():
    failures, _ = doctest.testmod(P)
    assert failures == 0


def rand_perm(rng, r, steps=10):
    w = P.identity(r)
    for _ in range(rng.randrange(steps + 1)):
        w = P.compose(w, P.generator_s(rng.randrange(1, r + 1), r))
    return P.compose(P.rho_power(rng.randrange(-3, 4), r), w)


def brute_length(w):
    # Inversions need w(j) < w(i) <= max(window); values at j = j0 + t*r grow
    # by t*r, so shifts beyond spread//r + 2 periods cannot contribute.
    r = w.r
    spread = max(w.window) - min(w.window)
    horizon = r + r * (spread // r + 2)
    total = 0
    for i in range(1, r + 1):
        for j in range(i + 1, i + horizon + 1):
            if w.apply(i) > w.apply(j):
                total += 1
    return total


def finite_perms(r):
    return [P.perm(r, w) for w in itertools.permutations(range(1, r + 1))]


def test_constructor_and_basics():
    assert P.rho(3).window == (2, 3, 4)
    assert P.generator_s(1, 2).window == (2, 1)
    assert P.generator_s(2, 2).window == (0, 3)
    assert P.identity(4).window == (1, 2, 3, 4)
    assert P.rho_power(-2, 2).window == (-1, 0)
    w = P.perm(2, [0, 3])
    assert w.apply(0) == w.window[1] - 2 == 1
    assert w.apply(3) == 2 and w.apply(4) == 5
    with pytest.raises(ValueError):
        P.perm(2, [1])
    with pytest.raises(ValueError):
        P.perm(0, [])
    with pytest.raises(ValueError):
        P.perm(3, [1, 4, 3])
    with pytest.raises(ValueError):
        P.generator_s(3, 2)
    with pytest.raises(ValueError):
        P.generator_s(1, 1)


def test_group_axioms():
    rng = random.Random(21)
    for _ in range(300):
        r = rng.choice([1, 2, 3, 4])
        w = rand_perm(rng, r) if r > 1 else P.rho_power(rng.randrange(-3, 4), 1)
        y = rand_perm(rng, r) if r > 1 else P.rho_power(rng.randrange(-3, 4), 1)
        z = rand_perm(rng, r) if r > 1 else P.rho_power(rng.randrange(-3, 4), 1)
        assert P.compose(P.compose(w, y), z) == P.compose(w, P.compose(y, z))
        assert P.is_identity(P.compose(w, P.inverse(w)))
        assert P.is_identity(P.compose(P.inverse(w), w))
        assert P.compose(P.identity(r), w) == w == P.compose(w, P.identity(r))
        for j in range(-5, 6):
            assert P.inverse(w).apply(w.apply(j)) == j


def test_length_against_brute_inversions():
    rng = random.Random(22)
    for _ in range(300):
        r = rng.choice([2, 3, 4])
        w = rand_perm(rng, r)
        assert P.length(w) == brute_length(w)
    for r in (2, 3, 4, 5):
        assert P.length(P.rho(r)) == 0
        assert P.length(P.rho_power(-7, r)) == 0
        for i in range(1, r + 1):
            assert P.length(P.generator_s(i, r)) == 1
    assert P.length(P.perm(2, [0, 3])) == 1


def test_length_invariants():
    rng = random.Random(23)
    for _ in range(200):
        r = rng.choice([2, 3, 4])
        w = rand_perm(rng, r)
        lw = P.length(w)
        assert P.length(P.inverse(w)) == lw
        m = rng.randrange(-3, 4)
        assert P.length(P.compose(P.rho_power(m, r), w)) == lw
        assert P.length(P.compose(w, P.rho_power(m, r))) == lw
        for i in range(1, r + 1):
            s = P.generator_s(i, r)
            right = P.length(P.compose(w, s))
            left = P.length(P.compose(s, w))
            assert abs(right - lw) == 1 and abs(left - lw) == 1
            assert P.is_right_descent(w, i) == (right < lw)
            assert P.is_left_descent(w, i) == (left < lw)


def test_reduced_words():
    rng = random.Random(24)
    for _ in range(200):
        r = rng.choice([2, 3, 4])
        w = rand_perm(rng, r)
        m, word = P.reduced_word(w)
        assert m == P.rho_part(w)
        assert len(word) == P.length(w)
        x = P.rho_power(m, r)
        lengths = [P.length(x)]
        for i in word:
            x = P.compose(x, P.generator_s(i, r))
            lengths.append(P.length(x))
        assert x == w
        assert lengths == list(range(len(word) + 1))


def test_min_coset_rep_definition_oracle():
    # d is shortest in its coset exactly when length(u d) = length(u) + length(d)
    # for every u in the block subgroup.
    rng = random.Random(25)
    for r, lam_parts in ((2, 2), (3, 2), (4, 3)):
        for lam in M.compositions(lam_parts, r):
            elements = P.young_subgroup_elements(lam)
            for _ in range(40):
                d = rand_perm(rng, r)
                expected = all(
                    P.length(P.compose(u, d)) == P.length(u) + P.length(d)
                    for u in elements
                )
                assert P.is_min_right_coset_rep(d, lam) == expected
    assert not P.is_min_right_coset_rep(P.generator_s(1, 2), (2, 0))
    for lam in M.compositions(3, 4):
        assert P.is_min_right_coset_rep(P.identity(4), lam)


def test_double_coset_rep_counts_match_orbit_partition():
    cases = []
    for r in (2, 3):
        for parts in (2, 3):
            comps = list(M.compositions(parts, r))
            cases.extend((r, lam, mu) for lam in comps for mu in comps)
    comps4 = list(M.compositions(2, 4))
    cases.extend((4, lam, mu) for lam in comps4 for mu in comps4)
    cases.append((4, (2, 1, 1), (1, 2, 1)))
    cases.append((4, (2, 2, 0), (1, 2, 1)))
    for r, lam, mu in cases:
        all_w = finite_perms(r)
        reps = [d for d in all_w if P.is_min_double_coset_rep(d, lam, mu)]
        seen = set()
        orbits = 0
        for x in all_w:
            if x.window in seen:
                continue
            orbits += 1
            coset = P.double_coset_elements(lam, x, mu)
            for y in coset:
                seen.add(y.window)
            inside = [d for d in coset if d.window in {w.window for w in reps}]
            assert len(inside) == 1
            assert P.length(inside[0]) == min(P.length(y) for y in coset)
        assert len(reps) == orbits


def test_jmath_frozen():
    for lam in list(M.compositions(2, 3)) + list(M.compositions(3, 4)):
        n = len(lam)
        assert P.jmath(lam, P.identity(sum(lam)), lam) == M.diag(lam)
    A = P.jmath((1, 1), P.perm(2, [0, 3]), (1, 1))
    assert A.entries == ((1, 0, 1), (2, 3, 1))
    B = P.jmath((1, 1), P.perm(2, [2, 1]), (1, 1))
    assert B == M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))
    with pytest.raises(ValueError):
        P.jmath((2, 0), P.generator_s(1, 2), (2, 0))
    with pytest.raises(ValueError):
        P.jmath((1, 1), P.identity(3), (1, 1))


def test_pseudo_matrix_rep_frozen():
    for lam in ((2, 1), (1, 1, 2), (0, 3)):
        assert P.is_identity(P.pseudo_matrix_rep(M.diag(lam)))
    A = M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))
    y = P.pseudo_matrix_rep(A)
    assert y.window == (2, 1) and P.length(y) == 1
    B = M.madd(M.mscale(2, M.e_unit(1, 2, 2)), M.e_unit(2, 1, 2))
    yB = P.pseudo_matrix_rep(B)
    assert yB.window == (3, 1, 2) and P.length(yB) == 2
    C = M.madd(M.e_unit(1, 0, 2), M.e_unit(2, 3, 2))
    assert P.pseudo_matrix_rep(C).window == (0, 3)
    assert P.length_formula(C) == 1


def test_round_trip_sweep():
    for n, band in ((2, 2), (3, 1)):
        for r in range(1, 5):
            for A in M.band_matrices(n, r, band):
                lam, mu = M.ro(A), M.co(A)
                y = P.pseudo_matrix_rep(A)
                assert P.is_min_double_coset_rep(y, lam, mu)
                assert P.jmath(lam, y, mu) == A
                assert P.length(y) == P.length_formula(A)


def test_minimality_sampling():
    rng = random.Random(26)
    pool = []
    for n, band in ((2, 2), (3, 1)):
        for r in (2, 3, 4):
            pool.extend(M.band_matrices(n, r, band))
    for A in rng.sample(pool, 30):
        y = P.pseudo_matrix_rep(A)
        ly = P.length(y)
        us = P.young_subgroup_elements(M.ro(A))
        vs = P.young_subgroup_elements(M.co(A))
        for _ in range(60):
            u, v = rng.choice(us), rng.choice(vs)
            assert P.length(P.compose(P.compose(u, y), v)) >= ly


def test_finite_length_formula_exhaustive():
    for r in range(1, 6):
        for a in range(r + 1):
            lam = (a, r - a)
            for w in finite_perms(r):
                if P.is_min_right_coset_rep(w, lam):
                    assert P.finite_length_formula(w, lam) == P.length(w)
    with pytest.raises(ValueError):
        P.finite_length_formula(P.generator_s(1, 2), (2, 0))
    with pytest.raises(ValueError):
        P.finite_length_formula(P.perm(2, [0, 3]), (1, 1))
    with pytest.raises(ValueError):
        P.finite_length_formula(P.identity(3), (1, 1, 1))


def test_enumerate_Ddelta_in_Smu():
    out = P.enumerate_Ddelta_in_Smu((1, 1), (0, 1), 1)
    assert [w.window for w in out] == [(1, 2)]
    for n in (2, 3):
        for r in range(1, 5):
            for mu in M.compositions(n, r):
                mu_blocks = P.blocks(mu)
                sub = P.young_subgroup_elements(mu)
                for beta in itertools.product(*(range(m + 1) for m in mu)):
                    count = math.prod(
                        math.comb(mu[i], beta[i]) for i in range(n)
                    )
                    for case in (1, 2):
                        delta = P.interleaved_composition(mu, beta, case)
                        assert sum(delta) == r and len(delta) == 2 * n
                        out = P.enumerate_Ddelta_in_Smu(mu, beta, case)
                        wins = {w.window for w in out}
                        assert len(out) == len(wins) == count
                        for w in out:
                            assert P.is_min_right_coset_rep(w, delta)
                            for block in mu_blocks:
                                assert {w.apply(p) for p in block} == set(block)
                        brute = {
                            u.window
                            for u in sub
                            if P.is_min_right_coset_rep(u, delta)
                        }
                        assert wins == brute
    with pytest.raises(ValueError):
        P.enumerate_Ddelta_in_Smu((1, 1), (2, 0), 1)
    with pytest.raises(ValueError):
        P.enumerate_Ddelta_in_Smu((1, 1), (0, 1), 3)


def test_young_subgroup_elements():
    for lam in ((2, 2), (3, 1), (1, 1, 2), (0, 4)):
        elements = P.young_subgroup_elements(lam)
        assert len(elements) == math.prod(math.factorial(p) for p in lam)
        assert len({w.window for w in elements}) == len(elements)
        blocks = P.blocks(lam)
        for w in elements:
            for block in blocks:
                assert {w.apply(p) for p in block} == set(block)


def test_text_and_json():
    w = P.perm(2, [0, 3])
    assert P.text(w) == "w = [0, 3] @ 2"
    assert P.to_json(w) == {"r": 2, "window": [0, 3]}
    assert P.from_json(P.to_json(w)) == w
    rng = random.Random(27)
    for _ in range(50):
        w = rand_perm(rng, rng.choice([2, 3, 4]))
        assert P.from_json(P.to_json(w)) == w
