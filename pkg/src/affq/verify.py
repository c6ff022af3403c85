"""Verification suites: closed formulas against independent oracles.

Each suite expands into a list of independent cases; a case re-derives
both sides of its identity and reports every mismatch with the inputs
and both values.  Cases are picklable so they can be distributed over a
worker pool; reports are sorted before aggregation, so the output does
not depend on the degree of parallelism.
"""

import itertools
import random
from dataclasses import dataclass
from multiprocessing import get_context

from . import hall as Ha
from . import hecke as H
from . import laurent as L
from . import matrices as M
from . import permutations as P
from . import realization as R
from . import schur as S

SUITE_NAMES = (
    "schur-oracle",
    "coset-length",
    "hecke",
    "hall",
    "commutator",
    "level-coherence",
    "triangular",
    "laurent",
)

_BANDS = {2: 2, 3: 1}


@dataclass
class Config:
    """Grid bounds shared by the suites."""

    n_list: tuple = (2, 3)
    r_min: int = 2
    r_max: int = 4
    q_list: tuple = (2, 3)
    jobs: int = 1
    samples: int = 200

    def validate(self):
        if any(n < 2 for n in self.n_list):
            raise ValueError("n must be at least 2")
        if not self.n_list or any(n not in _BANDS for n in self.n_list):
            raise ValueError("supported sizes are n in {2, 3}")
        if self.r_min < 1 or self.r_max < self.r_min:
            raise ValueError("need 1 <= r_min <= r_max")
        if any(q not in (2, 3) for q in self.q_list):
            raise ValueError("brute-force suites need prime q <= 3")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")


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


def _weight_grid(n):
    if n == 2:
        return [(0, 0), (1, 0), (0, 1), (1, 2)]
    return [(0,) * n, (1,) + (0,) * (n - 1), (0,) + (1,) * (n - 1)]


def _alpha_grid(n, max_sigma):
    return [
        a
        for a in itertools.product(range(max_sigma + 1), repeat=n)
        if sum(a) <= max_sigma
    ]


def _case_entry(ok, case_id, checked, diffs):
    return {"case": case_id, "ok": ok, "checked": checked, "diffs": diffs}


# ----------------------------------------------------------------------
# suite: schur-oracle


def _cases_schur_oracle(cfg):
    return [
        ("schur-oracle", n, _BANDS[n], r)
        for n in cfg.n_list
        for r in range(max(1, cfg.r_min), cfg.r_max + 1)
    ]


def _check_schur_oracle(case):
    _, n, band, r = case
    checked = 0
    diffs = []
    for A in M.band_matrices(n, r, band):
        mu = M.ro(A)
        for upper, factors in ((True, S.upper_shapes_for(mu)), (False, S.lower_shapes_for(mu))):
            for B in factors:
                got = S.e_mul_upper(B, A) if upper else S.e_mul_lower(B, A)
                want = S.oracle_mul(B, A)
                checked += 1
                if not S.s_eq(got, want):
                    diffs.append(
                        {
                            "left": M.to_json(B),
                            "right": M.to_json(A),
                            "closed": S.to_json(got),
                            "oracle": S.to_json(want),
                        }
                    )
    return _case_entry(not diffs, "n=%d,r=%d" % (n, r), checked, diffs)


# ----------------------------------------------------------------------
# suite: coset-length


def _cases_coset_length(cfg):
    return [
        ("coset-length", n, _BANDS[n], r, cfg.samples)
        for n in cfg.n_list
        for r in range(max(1, cfg.r_min), cfg.r_max + 1)
    ]


def _check_coset_length(case):
    _, n, band, r, samples = case
    checked = 0
    diffs = []
    for idx, A in enumerate(M.band_matrices(n, r, band)):
        lam, mu = M.ro(A), M.co(A)
        y = P.pseudo_matrix_rep(A)
        ly = P.length(y)
        bad = []
        if P.jmath(lam, y, mu) != A:
            bad.append("round trip")
        if ly != P.length_formula(A):
            bad.append("length formula")
        if not P.is_min_double_coset_rep(y, lam, mu):
            bad.append("descent minimality")
        checked += 3
        us = P.young_subgroup_elements(lam)
        vs = P.young_subgroup_elements(mu)
        rng = random.Random("coset:%d:%d:%d" % (n, r, idx))
        for _ in range(samples):
            u, v = rng.choice(us), rng.choice(vs)
            if P.length(P.compose(P.compose(u, y), v)) < ly:
                bad.append("shorter coset element found")
                break
        checked += samples
        if bad:
            diffs.append({"matrix": M.to_json(A), "failures": bad})
    return _case_entry(not diffs, "n=%d,r=%d" % (n, r), checked, diffs)


# ----------------------------------------------------------------------
# suite: hecke


def _cases_hecke(cfg):
    cases = []
    for r in range(max(2, cfg.r_min), cfg.r_max + 1):
        cases.append(("hecke-quad", r))
        cases.append(("hecke-rho", r))
        for chunk in range(4):
            cases.append(("hecke-assoc", r, chunk, 120))
    for n in cfg.n_list:
        for r in range(max(1, cfg.r_min), cfg.r_max + 1):
            cases.append(("hecke-coset", n, _BANDS[n], r))
    return cases


def _rand_perm(rng, r, steps=8):
    w = P.identity(r)
    for _ in range(rng.randrange(steps + 1)):
        w = P.compose(w, P.generator_s(rng.randrange(1, r + 1), r))
    return P.compose(P.rho_power(rng.randrange(-2, 3), r), w)


def _rand_elem(rng, r, max_terms=4):
    items = []
    for _ in range(rng.randrange(1, max_terms + 1)):
        f = {}
        for _ in range(rng.randrange(1, 3)):
            e, c = rng.randrange(-3, 4), rng.randrange(-3, 4)
            if c:
                f[e] = c
        items.append((_rand_perm(rng, r).window, f or {0: 1}))
    return H.h_from_items(r, items)


def _check_hecke(case):
    kind = case[0]
    checked = 0
    diffs = []
    if kind == "hecke-quad":
        r = case[1]
        one = H.t_basis(P.identity(r))
        rng = random.Random("quad:%d" % r)
        for i in range(1, r + 1):
            s = H.t_basis(P.generator_s(i, r))
            for _ in range(20):
                h = _rand_elem(rng, r)
                lhs = H.mul(s, H.mul(s, h))
                rhs = H.h_add(
                    H.h_scale(L.poly({2: 1, 0: -1}), H.mul(s, h)),
                    H.h_scale(L.monomial(2), h),
                )
                checked += 1
                if not H.h_eq(lhs, rhs):
                    diffs.append({"i": i, "r": r})
        return _case_entry(not diffs, "quad r=%d" % r, checked, diffs)
    if kind == "hecke-rho":
        r = case[1]
        rng = random.Random("rho:%d" % r)
        for m in range(-2, 3):
            rho = P.rho_power(m, r)
            for _ in range(25):
                w = _rand_perm(rng, r)
                lhs = H.mul(H.t_basis(rho), H.t_basis(w))
                rhs = H.t_basis(P.compose(rho, w))
                lhs2 = H.mul(H.t_basis(w), H.t_basis(rho))
                rhs2 = H.t_basis(P.compose(w, rho))
                checked += 2
                if not (H.h_eq(lhs, rhs) and H.h_eq(lhs2, rhs2)):
                    diffs.append({"m": m, "window": list(w.window), "r": r})
        return _case_entry(not diffs, "rho r=%d" % r, checked, diffs)
    if kind == "hecke-assoc":
        _, r, chunk, count = case
        rng = random.Random("assoc:%d:%d" % (r, chunk))
        for _ in range(count):
            a, b, c = (_rand_elem(rng, r) for _ in range(3))
            checked += 1
            if not H.h_eq(H.mul(H.mul(a, b), c), H.mul(a, H.mul(b, c))):
                diffs.append({"r": r, "chunk": chunk})
        return _case_entry(not diffs, "assoc r=%d chunk=%d" % (r, chunk), checked, diffs)
    _, n, band, r = case
    for A in M.band_matrices(n, r, band):
        d = P.pseudo_matrix_rep(A)
        lam, mu = M.ro(A), M.co(A)
        checked += 1
        if not H.coset_product_identity_check(lam, d, mu):
            diffs.append({"matrix": M.to_json(A)})
    return _case_entry(not diffs, "coset-identity n=%d,r=%d" % (n, r), checked, diffs)


# ----------------------------------------------------------------------
# suite: hall


def _cases_hall(cfg):
    cases = []
    for n in cfg.n_list:
        for alpha in _alpha_grid(n, 2):
            cases.append(("hall-closed", n, alpha, tuple(cfg.q_list)))
            cases.append(("hall-twist", n, alpha))
    return cases


def _check_hall(case):
    checked = 0
    diffs = []
    if case[0] == "hall-closed":
        _, n, alpha, q_list = case
        lab_alpha = M.s_alpha(alpha)
        for A in Ha.enumerate_labels(n, 3, 5 - sum(alpha)):
            prod = Ha.semisimple_hall_product(alpha, A)
            want_dim = tuple(
                x + y for x, y in zip(Ha.dim_vector(lab_alpha), Ha.dim_vector(A))
            )
            candidates = [
                C
                for C in Ha.enumerate_labels(n, M.sigma(A) + sum(alpha), 5)
                if Ha.dim_vector(C) == want_dim
            ]
            for C in candidates:
                poly = prod.get(C, {})
                for q in q_list:
                    got = Ha.qp_eval(poly, q)
                    want = Ha.brute_hall_number(lab_alpha, A, C, q)
                    checked += 1
                    if got != want:
                        diffs.append(
                            {
                                "alpha": list(alpha),
                                "matrix": M.to_json(A),
                                "target": M.to_json(C),
                                "q": q,
                                "closed": got,
                                "brute": want,
                            }
                        )
            for C in prod:
                if C not in candidates:
                    diffs.append(
                        {
                            "alpha": list(alpha),
                            "matrix": M.to_json(A),
                            "target": M.to_json(C),
                            "reason": "label outside candidate set",
                        }
                    )
        return _case_entry(
            not diffs, "closed n=%d,alpha=%s" % (n, list(alpha)), checked, diffs
        )
    _, n, alpha = case
    for A in Ha.enumerate_labels(n, 3, 5):
        got = Ha.twisted_mul_semisimple(alpha, A)
        want = Ha.twisted_route_b(alpha, A)
        checked += 1
        if got != want:
            diffs.append({"alpha": list(alpha), "matrix": M.to_json(A)})
    return _case_entry(
        not diffs, "twist n=%d,alpha=%s" % (n, list(alpha)), checked, diffs
    )


# ----------------------------------------------------------------------
# suite: commutator


_COMMUTATOR_PAIRS = (
    ((1, 0), (1, 0)),
    ((1, 0), (0, 1)),
    ((1, 1), (1, 1)),
    ((2, 0), (2, 0)),
    ((2, 0), (1, 0)),
)


def _cases_commutator(cfg):
    r_list = tuple(range(max(2, cfg.r_min), cfg.r_max + 1))
    return [("commutator", lam, mu, r_list) for lam, mu in _COMMUTATOR_PAIRS]


def _check_commutator(case):
    _, lam, mu, r_list = case
    ok, report = R.relation_e_data(lam, mu, list(r_list))
    checked = len(r_list)
    diffs = [] if ok else [report]
    return _case_entry(ok, "lam=%s,mu=%s" % (list(lam), list(mu)), checked, diffs)


# ----------------------------------------------------------------------
# suite: level-coherence


def _cases_level_coherence(cfg):
    cases = []
    for n in cfg.n_list:
        for A in mixed_labels(n, 2, n):
            cases.append(("level-coherence", n, A, cfg.r_max))
    return cases


def _lambda_grid(n):
    cap = 3 if n == 2 else 2
    return [
        lam
        for lam in itertools.product(range(3), repeat=n)
        if sum(lam) <= cap
    ]


def _check_level_coherence(case):
    _, n, A, r_max = case
    checked = 0
    diffs = []
    jgrid = _weight_grid(n)
    alphas = _alpha_grid(n, 2)
    zl = M.pmat(n, [])
    zero_j = (0,) * n

    def record(tag, j, other, r, got, want):
        diffs.append(
            {
                "op": tag,
                "matrix": M.to_json(A),
                "j": list(j),
                "arg": list(other),
                "r": r,
                "level-free": S.to_json(got),
                "level": S.to_json(want),
            }
        )

    for j in jgrid:
        x = R.v_basis(n, A, j)
        for r in range(max(1, M.sigma(A)), r_max + 1):
            base = S.A_j_r(A, j, r)
            base_e = S.convert(base, "e")
            for jp in jgrid:
                got = R.eval_at_level(R.mul_by_0j(jp, x), r)
                want = S.closed_product_upper(S.A_j_r(zl, jp, r), base)
                checked += 1
                if not S.s_eq(got, want):
                    record("diag-left", j, jp, r, got, want)
                got = R.eval_at_level(R.mul_0j_right(x, jp), r)
                want = S.convert(
                    S.oracle_product(base_e, S.convert(S.A_j_r(zl, jp, r), "e")), "n"
                )
                checked += 1
                if not S.s_eq(got, want):
                    record("diag-right", j, jp, r, got, want)
            for alpha in alphas:
                got = R.eval_at_level(R.mul_by_semisimple_plus(alpha, x), r)
                want = S.closed_product_upper(
                    S.A_j_r(M.s_alpha(alpha), zero_j, r), base
                )
                checked += 1
                if not S.s_eq(got, want):
                    record("one-layer-upper", j, alpha, r, got, want)
                got = R.eval_at_level(R.mul_by_semisimple_minus(alpha, x), r)
                want = S.closed_product_lower(
                    S.A_j_r(M.t_s_alpha(alpha), zero_j, r), base
                )
                checked += 1
                if not S.s_eq(got, want):
                    record("one-layer-lower", j, alpha, r, got, want)
        for lam in _lambda_grid(n):
            red = R.reduce_j_lambda(A, j, lam)
            for r in range(max(1, M.sigma(A)), r_max + 1):
                got = R.eval_at_level(red, r)
                want = S.A_j_lambda_r(A, j, lam, r)
                checked += 1
                if not S.s_eq(got, want):
                    record("reduce", j, lam, r, got, want)
    return _case_entry(
        not diffs, "n=%d,A=%s" % (n, sorted(A.entries)), checked, diffs
    )


# ----------------------------------------------------------------------
# suite: triangular


def _cases_triangular(cfg):
    cases = []
    for A in mixed_labels(2, 2, 2):
        for j in _weight_grid(2):
            cases.append(("triangular", A, j, cfg.r_max))
    return cases


def _check_triangular(case):
    _, A, j, r_max = case
    checked = 0
    diffs = []
    for r in range(max(1, M.sigma(A)), r_max + 1):
        ok, report = R.triangular_leading_data(A, j, r)
        checked += 1
        if not ok:
            diffs.append(report)
    return _case_entry(
        not diffs, "A=%s,j=%s" % (sorted(A.entries), list(j)), checked, diffs
    )


# ----------------------------------------------------------------------
# suite: laurent


def _cases_laurent(cfg):
    return [("laurent-pascal",), ("laurent-bar",), ("laurent-subset",)]


def _check_laurent(case):
    checked = 0
    diffs = []
    if case[0] == "laurent-pascal":
        for N in range(-5, 11):
            for t in range(0, 11):
                lhs = L.gauss_sq(N, t)
                if t == 0:
                    ok = lhs == {0: 1}
                else:
                    ok = lhs == L.add(
                        L.gauss_sq(N - 1, t),
                        L.vshift(L.gauss_sq(N - 1, t - 1), 2 * (N - t)),
                    )
                checked += 1
                if not ok:
                    diffs.append({"N": N, "t": t})
        return _case_entry(not diffs, "pascal", checked, diffs)
    if case[0] == "laurent-bar":
        rng = random.Random("bar")
        for _ in range(200):
            f = {rng.randrange(-5, 6): rng.randrange(-4, 5) for _ in range(3)}
            f = {e: c for e, c in f.items() if c}
            g = {rng.randrange(-5, 6): rng.randrange(-4, 5) for _ in range(3)}
            g = {e: c for e, c in g.items() if c}
            checked += 2
            if L.bar(L.bar(f)) != f:
                diffs.append({"f": L.json_pairs(f)})
            if L.bar(L.mul(f, g)) != L.mul(L.bar(f), L.bar(g)):
                diffs.append({"f": L.json_pairs(f), "g": L.json_pairs(g)})
        for N in range(0, 9):
            for t in range(0, N + 1):
                g = L.gauss_sym(N, t)
                checked += 2
                if L.bar(g) != g:
                    diffs.append({"N": N, "t": t, "kind": "sym"})
                if L.bar(L.gauss_sq(N, t)) != L.vshift(
                    L.gauss_sq(N, t), -2 * t * (N - t)
                ):
                    diffs.append({"N": N, "t": t, "kind": "sq"})
        return _case_entry(not diffs, "bar", checked, diffs)
    for a in range(0, 4):
        for r in range(1, 6):
            for t in range(0, r + 1):
                checked += 1
                if not L.subset_sum_identity_check(a, r, t):
                    diffs.append({"a": a, "r": r, "t": t})
    return _case_entry(not diffs, "subset-sum", checked, diffs)


# ----------------------------------------------------------------------
# driver

_CASE_BUILDERS = {
    "schur-oracle": _cases_schur_oracle,
    "coset-length": _cases_coset_length,
    "hecke": _cases_hecke,
    "hall": _cases_hall,
    "commutator": _cases_commutator,
    "level-coherence": _cases_level_coherence,
    "triangular": _cases_triangular,
    "laurent": _cases_laurent,
}

_CHECKERS = {
    "schur-oracle": _check_schur_oracle,
    "coset-length": _check_coset_length,
    "hecke": _check_hecke,
    "hall": _check_hall,
    "commutator": _check_commutator,
    "level-coherence": _check_level_coherence,
    "triangular": _check_triangular,
    "laurent": _check_laurent,
}


def run_suite(name, cfg=None):
    """Run one suite and return its report dictionary."""
    if name not in SUITE_NAMES:
        raise ValueError("unknown suite %r" % name)
    cfg = cfg or Config()
    cfg.validate()
    cases = _CASE_BUILDERS[name](cfg)
    checker = _CHECKERS[name]
    if cfg.jobs > 1 and len(cases) > 1:
        with get_context("fork").Pool(cfg.jobs) as pool:
            results = pool.map(checker, cases)
    else:
        results = [checker(c) for c in cases]
    results.sort(key=lambda d: d["case"])
    mismatches = [r for r in results if not r["ok"]]
    return {
        "suite": name,
        "cases": len(results),
        "checks": sum(r["checked"] for r in results),
        "ok": not mismatches,
        "mismatches": mismatches,
    }


def run_suites(names, cfg=None):
    """Run several suites; returns (all_ok, list of reports)."""
    reports = [run_suite(name, cfg) for name in names]
    return all(rep["ok"] for rep in reports), reports
