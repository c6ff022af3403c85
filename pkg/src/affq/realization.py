"""Level-free elements A(j) over all convolution algebras at once.

A basis symbol A(j) pairs an integer periodic matrix A with zero diagonal
and nonnegative off-diagonal entries with an integer weight vector j; its
level-r shadow is the sum of v^(mu.j) [A + diag(mu)] over all diagonal
completions mu of size r - sigma(A).  The span of these symbols is closed
under multiplication by the diagonal elements 0(j') and by the one-layer
elements S_alpha(0) (superdiagonal) and their transposes (subdiagonal);
this module implements those products by closed formulas, the reduction of
Gaussian-weighted symbols A(j, lambda) to plain symbols, evaluation at a
level, and the structural checks built from them.

Coefficients are quotients of Laurent polynomials: the reduction step and
the commutation coefficients introduce denominators, while every level
evaluation clears them (asserted).
"""

from dataclasses import dataclass
from itertools import product as iproduct

from . import hall as Ha
from . import laurent as L
from . import matrices as M
from . import schur as S


@dataclass
class VElement:
    """Finitely supported map (label, weight vector) -> LaurentFraction."""

    n: int
    terms: dict


def _check_label(n, A):
    if A.n != n:
        raise ValueError("label size mismatch")
    if not M.is_zero_diagonal(A) or not M.is_nonneg(A):
        raise ValueError("label must be nonnegative with zero diagonal")


def _check_weight(n, j):
    if len(j) != n:
        raise ValueError("weight length mismatch")


def v_zero(n):
    return VElement(n, {})


def v_basis(n, A, j):
    """The single symbol A(j) with coefficient one."""
    _check_label(n, A)
    _check_weight(n, j)
    return VElement(n, {(A, tuple(j)): L.FRAC_ONE})


def _vacc(out, key, f):
    cur = out.get(key)
    f = L.frac_add(cur, f) if cur is not None else f
    if L.frac_is_zero(f):
        out.pop(key, None)
    else:
        out[key] = f


def v_from_items(n, items):
    out = {}
    for A, j, f in items:
        _check_label(n, A)
        _check_weight(n, j)
        if isinstance(f, dict):
            f = L.fraction(f)
        _vacc(out, (A, tuple(j)), f)
    return VElement(n, out)


def v_add(x, y):
    if x.n != y.n:
        raise ValueError("size mismatch")
    out = dict(x.terms)
    for key, f in y.terms.items():
        _vacc(out, key, f)
    return VElement(x.n, out)


def v_neg(x):
    return VElement(x.n, {k: L.frac_neg(f) for k, f in x.terms.items()})


def v_sub(x, y):
    return v_add(x, v_neg(y))


def v_scale(c, x):
    """Multiply by a LaurentFraction (or a Laurent polynomial dict)."""
    if isinstance(c, dict):
        c = L.fraction(c)
    if L.frac_is_zero(c):
        return v_zero(x.n)
    return VElement(x.n, {k: L.frac_mul(c, f) for k, f in x.terms.items()})


def v_is_zero(x):
    return not x.terms


def v_eq(x, y):
    return x.n == y.n and x.terms == y.terms


def text(x):
    """
    >>> text(v_basis(2, M.e_unit(1, 2, 2), (0, 1)))
    '(1)*[(1, 2, 1)](0, 1)'
    """
    if not x.terms:
        return "0"
    bits = []
    for A, j in sorted(x.terms, key=lambda k: (k[0].entries, k[1])):
        f = x.terms[(A, j)]
        if f.den == L.one():
            c = L.text(f.num)
        else:
            c = "%s / %s" % (L.text(f.num), L.text(f.den))
        body = ", ".join(str(t) for t in A.entries)
        bits.append("(%s)*[%s]%s" % (c, body, str(tuple(j))))
    return " + ".join(bits)


def to_json(x):
    terms = []
    for A, j in sorted(x.terms, key=lambda k: (k[0].entries, k[1])):
        f = x.terms[(A, j)]
        terms.append(
            {
                "matrix": M.to_json(A),
                "j": list(j),
                "coeff_num": L.json_pairs(f.num),
                "coeff_den": L.json_pairs(f.den),
            }
        )
    return {"n": x.n, "terms": terms}


def from_json(obj):
    n = int(obj["n"])
    out = {}
    for t in obj["terms"]:
        A = M.from_json(t["matrix"])
        j = tuple(int(c) for c in t["j"])
        f = L.LaurentFraction(
            L.from_json_pairs(t["coeff_num"]), L.from_json_pairs(t["coeff_den"])
        )
        _check_label(n, A)
        _vacc(out, (A, j), f)
    return VElement(n, out)


# ----------------------------------------------------------------------
# reduction of Gaussian-weighted symbols to the plain basis

_SHIFT_TABLE = {}


def _shift_coeffs(t):
    """Coefficients c_k with (x over t)_sym = sum_k c_k v^(k*x).

    The symmetric Gaussian in a formal exponent x is
    prod_{s=1..t} (v^(x-s+1) - v^(-x+s-1)) / (v^s - v^-s); expanding the
    numerator as a Laurent polynomial in X = v^x gives exponents
    k in {-t, -t+2, ..., t}.
    """
    if t in _SHIFT_TABLE:
        return _SHIFT_TABLE[t]
    num = {0: L.one()}
    for s in range(1, t + 1):
        nxt = {}
        for k, c in num.items():
            for dk, f in ((1, L.monomial(1 - s)), (-1, L.monomial(s - 1, -1))):
                slot = nxt.setdefault(k + dk, {})
                L.add_inplace(slot, L.mul(c, f))
        num = {k: c for k, c in nxt.items() if c}
    den = L.one()
    for s in range(1, t + 1):
        den = L.mul(den, L.sub(L.monomial(s), L.monomial(-s)))
    out = {k: L.fraction(c, den) for k, c in num.items()}
    _SHIFT_TABLE[t] = out
    return out


def reduce_j_lambda(A, j, lam):
    """Rewrite the weighted symbol A(j, lambda) as a sum of plain A(j + k).

    >>> red = reduce_j_lambda(M.pmat(2, []), (0, 0), (1, 0))
    >>> sorted(j for (_, j) in red.terms)
    [(-1, 0), (1, 0)]
    >>> len(reduce_j_lambda(M.pmat(2, []), (0, 0), (2, 0)).terms)
    3
    """
    n = A.n
    _check_label(n, A)
    _check_weight(n, j)
    if len(lam) != n or any(c < 0 for c in lam):
        raise ValueError("lambda must be a nonnegative vector of length n")
    tables = [_shift_coeffs(t) for t in lam]
    out = {}
    for combo in iproduct(*(sorted(tb) for tb in tables)):
        f = L.FRAC_ONE
        for k, tb in zip(combo, tables):
            f = L.frac_mul(f, tb[k])
        key = (A, tuple(a + b for a, b in zip(j, combo)))
        _vacc(out, key, f)
    return VElement(n, out)


# ----------------------------------------------------------------------
# evaluation at a level


def _eval_fraction_map(x, r):
    """Level-r expansion as a map label -> LaurentFraction, no clearing."""
    acc = {}
    for (A, j), cf in x.terms.items():
        base = S.A_j_r(A, j, r)
        for label, c in base.terms.items():
            _vacc(acc, label, L.frac_scale(c, cf))
    return acc


def eval_at_level(x, r):
    """The level-r shadow as a normalized-basis element.

    Every accumulated coefficient must clear to a Laurent polynomial;
    a remaining denominator signals an upstream error and raises.

    >>> S.text(eval_at_level(v_basis(2, M.pmat(2, []), (1, 0)), 2))
    '(v)*N[(1, 1, 1), (2, 2, 1)] + (v^2)*N[(1, 1, 2)] + (1)*N[(2, 2, 2)]'
    """
    if r < 0:
        raise ValueError("level must be nonnegative")
    items = []
    for label, f in _eval_fraction_map(x, r).items():
        c = L.frac_to_laurent(f)
        if c:
            items.append((label, c))
    return S.s_from_items(x.n, r, items, "n")


# ----------------------------------------------------------------------
# generator products


def mul_by_0j(jprime, x):
    """Left product by the diagonal generator: weight shift and v-power.

    >>> text(mul_by_0j((0, 1), v_basis(2, M.e_unit(1, 2, 2), (0, 0))))
    '(1)*[(1, 2, 1)](0, 1)'
    >>> text(mul_by_0j((1, 0), v_basis(2, M.e_unit(1, 2, 2), (0, 0))))
    '(v)*[(1, 2, 1)](1, 0)'
    """
    _check_weight(x.n, jprime)
    out = {}
    for (A, j), cf in x.terms.items():
        expo = M.dot(tuple(jprime), M.ro(A))
        key = (A, tuple(a + b for a, b in zip(jprime, j)))
        _vacc(out, key, L.frac_scale(L.monomial(expo), cf))
    return VElement(x.n, out)


def mul_0j_right(x, jprime):
    """Right product by the diagonal generator (column sums replace rows)."""
    _check_weight(x.n, jprime)
    out = {}
    for (A, j), cf in x.terms.items():
        expo = M.dot(tuple(jprime), M.co(A))
        key = (A, tuple(a + b for a, b in zip(jprime, j)))
        _vacc(out, key, L.frac_scale(L.monomial(expo), cf))
    return VElement(x.n, out)


def _check_alpha(alpha, n):
    if len(alpha) != n or any(c < 0 for c in alpha):
        raise ValueError("alpha must be a nonnegative vector of length n")


def _bounded_rows(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for t in range(min(caps[0], total) + 1):
        for rest in _bounded_rows(total - t, caps[1:]):
            yield (t,) + rest


def _t_candidates(A, alpha, plus):
    """Matrices T with row sums alpha whose product term can survive.

    Nonvanishing forces t_{i,j} <= a_{i+1,j} (plus case) or
    t_{i,j} <= a_{i,j} (minus case) on every cell except one free cell
    per row: the superdiagonal cell in the plus case, the diagonal cell
    in the minus case.
    """
    n = A.n
    rows = []
    for i in range(1, n + 1):
        cap = alpha[i - 1]
        cells = [(i + 1, cap)] if plus else [(i, cap)]
        support = M.row_support(A, i + 1) if plus else M.row_support(A, i)
        skip = i + 1 if plus else i
        for jj, a in support:
            if jj != skip:
                cells.append((jj, min(cap, a)))
        rows.append(cells)

    def rec(i, acc):
        if i > n:
            yield M.pmat(n, acc)
            return
        cells = rows[i - 1]
        for vals in _bounded_rows(alpha[i - 1], [c for _, c in cells]):
            chosen = [(i, cells[k][0], t) for k, t in enumerate(vals) if t]
            yield from rec(i + 1, acc + chosen)

    yield from rec(1, [])


def _coeff_plus(A, T):
    out = L.one()
    for i, jj, t in T.entries:
        if jj == i:
            continue
        N = A.entry(i, jj) + t - T.entry(i - 1, jj)
        out = L.mul(out, L.bar(L.gauss_sq(N, t)))
        if not out:
            break
    return out


def _coeff_minus(A, T):
    out = L.one()
    for k, jj, t in T.entries:
        if jj == k + 1:
            continue
        N = A.entry(k + 1, jj) - T.entry(k + 1, jj) + t
        out = L.mul(out, L.bar(L.gauss_sq(N, t)))
        if not out:
            break
    return out


def _f_plus(A, T, j):
    total = 0
    for i, l, t in T.entries:
        s = sum(a for jj, a in M.row_support(A, i) if jj >= l and jj != i)
        s -= sum(a for jj, a in M.row_support(A, i + 1) if jj > l and jj != i + 1)
        s -= sum(tv for jj, tv in M.row_support(T, i - 1) if jj >= l and jj != i)
        s += sum(tv for jj, tv in M.row_support(T, i) if jj > l and jj != i and jj != i + 1)
        total += t * s
        if l < i + 1:
            total += t * T.entry(i + 1, i + 1)
    for i in range(1, A.n + 1):
        total += j[i - 1] * (T.entry(i - 1, i) - T.entry(i, i))
    return total


def _f_minus(A, T, j):
    total = 0
    for k, l, t in T.entries:
        # t plays t_{i-1,l} in the first double sum (i = k + 1)
        total += t * sum(a for jj, a in M.row_support(A, k + 1) if jj <= l and jj != k + 1)
    for i, l, t in T.entries:
        s = -sum(a for jj, a in M.row_support(A, i) if jj < l and jj != i)
        if l != i:
            s -= sum(tv for jj, tv in M.row_support(T, i - 1) if jj >= l)
            if l != i + 1:
                s += sum(tv for jj, tv in M.row_support(T, i) if jj > l)
        total += t * s
        if l > i:
            total += t * T.entry(i - 1, i)
    for i in range(1, A.n + 1):
        total += j[i - 1] * (T.entry(i, i) - T.entry(i - 1, i))
    return total


def _j_shift_plus(T, j):
    out = list(j)
    for i in range(1, T.n + 1):
        s = sum(tv for l, tv in M.row_support(T, i) if l < i)
        s -= sum(tv for l, tv in M.row_support(T, i - 1) if l < i)
        out[i - 1] += s
    return tuple(out)


def _j_shift_minus(T, j):
    out = list(j)
    for i in range(1, T.n + 1):
        s = sum(tv for l, tv in M.row_support(T, i - 1) if l > i)
        s -= sum(tv for l, tv in M.row_support(T, i) if l > i)
        out[i - 1] += s
    return tuple(out)


def mul_by_semisimple_plus(alpha, x):
    """Left product by the superdiagonal one-layer element of weights alpha.

    >>> text(mul_by_semisimple_plus((1, 0), v_basis(2, M.pmat(2, []), (0, 1))))
    '(v)*[(1, 2, 1)](0, 1)'
    >>> x = v_basis(2, M.e_unit(1, 2, 2), (0, 0))
    >>> v_eq(mul_by_semisimple_plus((0, 0), x), x)
    True
    """
    _check_alpha(alpha, x.n)
    out = {}
    for (A, j), cf in x.terms.items():
        for T in _t_candidates(A, alpha, plus=True):
            coeff = _coeff_plus(A, T)
            if not coeff:
                continue
            label = M.madd(M.msub(A, M.offdiag(M.tilde(T))), M.offdiag(T))
            if not M.is_nonneg(label):
                continue
            delta = tuple(T.entry(i, i) for i in range(1, x.n + 1))
            scalar = L.frac_scale(L.vshift(coeff, _f_plus(A, T, j)), cf)
            piece = reduce_j_lambda(label, _j_shift_plus(T, j), delta)
            for key, c in piece.terms.items():
                _vacc(out, key, L.frac_mul(scalar, c))
    return VElement(x.n, out)


def mul_by_semisimple_minus(alpha, x):
    """Left product by the subdiagonal one-layer element of weights alpha."""
    _check_alpha(alpha, x.n)
    out = {}
    for (A, j), cf in x.terms.items():
        for T in _t_candidates(A, alpha, plus=False):
            coeff = _coeff_minus(A, T)
            if not coeff:
                continue
            label = M.madd(M.msub(A, M.offdiag(T)), M.offdiag(M.tilde(T)))
            if not M.is_nonneg(label):
                continue
            delta = tuple(T.entry(i - 1, i) for i in range(1, x.n + 1))
            scalar = L.frac_scale(L.vshift(coeff, _f_minus(A, T, j)), cf)
            piece = reduce_j_lambda(label, _j_shift_minus(T, j), delta)
            for key, c in piece.terms.items():
                _vacc(out, key, L.frac_mul(scalar, c))
    return VElement(x.n, out)


# ----------------------------------------------------------------------
# structural checks


def cyclic_difference(nu):
    """The weight j with j_i = nu_i - nu_{i-1}, indices cyclic.

    >>> cyclic_difference((1, 0))
    (1, -1)
    """
    n = len(nu)
    return tuple(nu[i] - nu[i - 1] for i in range(n))


def _tilde_exponent(alpha):
    lab = M.s_alpha(alpha)
    return Ha.dim_end(lab) - Ha.dim_rep(lab)


def relation_e_data(lam, mu, r_list):
    """Commutator identity between lowering and raising one-layer elements.

    Both sides are assembled from generator products and compared at every
    listed level; returns (ok, report) with per-level differences.
    """
    n = len(lam)
    if len(mu) != n:
        raise ValueError("component count mismatch")
    if any(c < 0 for c in lam) or any(c < 0 for c in mu):
        raise ValueError("weights must be nonnegative")
    zero_j = (0,) * n
    plus_elem = v_basis(n, M.s_alpha(lam), zero_j)
    minus_elem = v_basis(n, M.t_s_alpha(mu), zero_j)
    lhs = v_sub(
        mul_by_semisimple_minus(mu, plus_elem),
        mul_by_semisimple_plus(lam, minus_elem),
    )
    lhs = v_scale(L.monomial(-_tilde_exponent(lam) - _tilde_exponent(mu)), lhs)

    rhs = v_zero(n)
    caps = [min(a, b) for a, b in zip(lam, mu)]
    for alpha in iproduct(*(range(c + 1) for c in caps)):
        if not any(alpha):
            continue
        lam2 = tuple(a - b for a, b in zip(lam, alpha))
        mu2 = tuple(a - b for a, b in zip(mu, alpha))
        base = mul_by_semisimple_plus(lam2, v_basis(n, M.t_s_alpha(mu2), zero_j))
        shift = L.monomial(-_tilde_exponent(lam2) - _tilde_exponent(mu2))
        for gamma in iproduct(*(range(a + 1) for a in alpha)):
            x = L.x_coeff(alpha, gamma, lam, mu)
            nu = tuple(2 * g - a for g, a in zip(gamma, alpha))
            term = mul_by_0j(cyclic_difference(nu), base)
            rhs = v_add(rhs, v_scale(L.frac_scale(shift, x), term))

    levels = []
    ok = True
    for r in r_list:
        dl = _eval_fraction_map(lhs, r)
        dr = _eval_fraction_map(rhs, r)
        diffs = []
        for label in sorted(set(dl) | set(dr), key=lambda a: a.entries):
            fl = dl.get(label, L.FRAC_ZERO)
            fr = dr.get(label, L.FRAC_ZERO)
            if fl != fr:
                diffs.append(
                    {
                        "matrix": M.to_json(label),
                        "lhs": _frac_json(fl),
                        "rhs": _frac_json(fr),
                    }
                )
        if diffs:
            ok = False
        levels.append({"r": r, "equal": not diffs, "diffs": diffs})
    return ok, {"lam": list(lam), "mu": list(mu), "levels": levels}


def _frac_json(f):
    return {"num": L.json_pairs(f.num), "den": L.json_pairs(f.den)}


def relation_e_check(lam, mu, r_list):
    """
    >>> relation_e_check((1, 0), (0, 1), [2, 3])
    True
    """
    return relation_e_data(lam, mu, r_list)[0]


def triangular_leading_data(A, j, r):
    """Product of upper part, diagonal generator, lower part at one level.

    The expansion must contain every [A + diag(mu)] with coefficient
    v^(mu.j + j.(co(upper) + ro(lower))) and all other labels must have
    strictly smaller off-diagonal part in the corner order.
    """
    n = A.n
    _check_label(n, A)
    _check_weight(n, j)
    if any(c < 0 for c in j):
        raise ValueError("weight must be nonnegative here")
    if M.sigma(A) > r:
        raise ValueError("sigma of the label exceeds the level")
    upper, _, lower = M.split(A)
    zero_j = (0,) * n
    left = S.convert(S.A_j_r(upper, zero_j, r), "e")
    mid = S.convert(S.A_j_r(M.pmat(n, []), tuple(j), r), "e")
    right = S.convert(S.A_j_r(lower, zero_j, r), "e")
    got = S.convert(S.oracle_product(S.oracle_product(left, mid), right), "n")
    lead = M.dot(tuple(j), tuple(x + y for x, y in zip(M.co(upper), M.ro(lower))))
    bad = []
    for label, coeff in got.terms.items():
        off = M.offdiag(label)
        if off == A:
            mu = tuple(label.entry(i, i) for i in range(1, n + 1))
            want = L.monomial(lead + M.dot(mu, tuple(j)))
            if coeff != want:
                bad.append({"matrix": M.to_json(label), "reason": "leading coefficient"})
        elif not M.preceq(off, A) or off == A:
            bad.append({"matrix": M.to_json(label), "reason": "not strictly below"})
    missing = []
    for mu in M.compositions(n, r - M.sigma(A)):
        label = M.madd(A, M.diag(mu))
        if label not in got.terms:
            missing.append({"matrix": M.to_json(label)})
    ok = not bad and not missing
    return ok, {
        "matrix": M.to_json(A),
        "j": list(j),
        "r": r,
        "bad": bad,
        "missing": missing,
    }


def triangular_leading_check(A, j, r):
    """
    >>> triangular_leading_check(M.e_unit(1, 2, 2), (1, 1), 2)
    True
    """
    return triangular_leading_data(A, j, r)[0]
