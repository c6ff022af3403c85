"""Convolution algebra on pairs of periodic step functions of level r.

Elements are Laurent-coefficient combinations of basis labels drawn from
the nonnegative periodic matrices of a fixed size ``sigma(A) = r``.  Two
bases are supported: the standard basis ``e_A`` and the normalized basis
``[A] = v^(-d_A) e_A`` where ``d_A`` counts inversions between entry
pairs of the label.

Products are available through two independent routes:

* ``oracle_mul`` realizes ``e_B e_A`` inside the extended affine Hecke
  algebra by composing double-coset sums and peeling the result back
  into basis labels.  It works for arbitrary label pairs and serves as
  the reference implementation.
* ``e_mul_upper`` / ``e_mul_lower`` / ``n_mul_upper`` / ``n_mul_lower``
  are closed-form multiplication rules that apply when the left factor
  is diagonal plus a single superdiagonal (upper) or subdiagonal
  (lower) layer.
"""

from dataclasses import dataclass

from . import hecke as H
from . import laurent as L
from . import matrices as M
from . import permutations as P


@dataclass
class SchurElement:
    """Formal sum over level-r labels with Laurent coefficients.

    ``basis`` is "e" for the standard basis and "n" for the normalized
    basis.  ``terms`` maps a PeriodicMatrix label to a Laurent dict.
    """

    n: int
    r: int
    basis: str
    terms: dict


def s_zero(n, r, basis="e"):
    if basis not in ("e", "n"):
        raise ValueError("basis must be 'e' or 'n'")
    return SchurElement(n, r, basis, {})


def s_is_zero(x):
    return not x.terms


def _acc(terms, label, coeff, scalar=None):
    """Accumulate coeff (optionally times scalar) onto a label, dropping zeros."""
    if scalar is not None:
        coeff = L.mul(coeff, scalar)
    if not coeff:
        return
    cur = terms.get(label)
    if cur is None:
        terms[label] = dict(coeff)
        return
    L.add_inplace(cur, coeff)
    if not cur:
        del terms[label]


def s_from_items(n, r, items, basis="e"):
    """Build an element from (label, coeff) pairs, merging duplicates."""
    out = {}
    for label, coeff in items:
        if label.n != n:
            raise ValueError("label size mismatch")
        if M.sigma(label) != r:
            raise ValueError("label level mismatch")
        if not M.is_nonneg(label):
            raise ValueError("labels must be nonnegative")
        _acc(out, label, coeff)
    return SchurElement(n, r, basis, out)


def basis_element(A, basis="e"):
    """The single basis element attached to a nonnegative label."""
    return s_from_items(A.n, M.sigma(A), [(A, L.one())], basis)


def _check_pair(x, y):
    if x.n != y.n or x.r != y.r:
        raise ValueError("size or level mismatch")
    if x.basis != y.basis:
        raise ValueError("basis mismatch")


def s_add(x, y):
    _check_pair(x, y)
    out = {label: dict(c) for label, c in x.terms.items()}
    for label, c in y.terms.items():
        _acc(out, label, c)
    return SchurElement(x.n, x.r, x.basis, out)


def s_sub(x, y):
    return s_add(x, s_scale(L.monomial(0, -1), y))


def s_scale(c, x):
    out = {}
    for label, f in x.terms.items():
        g = L.mul(c, f)
        if g:
            out[label] = g
    return SchurElement(x.n, x.r, x.basis, out)


def s_eq(x, y):
    return (
        x.n == y.n
        and x.r == y.r
        and x.basis == y.basis
        and x.terms == y.terms
    )


def convert(x, basis):
    """Rewrite between the standard and normalized bases.

    e_A = v^(d_A) [A], so moving a term from "e" to "n" shifts its
    coefficient by +d_A and the reverse shifts by -d_A.
    """
    if basis not in ("e", "n"):
        raise ValueError("basis must be 'e' or 'n'")
    if x.basis == basis:
        return SchurElement(x.n, x.r, x.basis, {a: dict(c) for a, c in x.terms.items()})
    sign = 1 if basis == "n" else -1
    out = {}
    for label, c in x.terms.items():
        out[label] = L.vshift(c, sign * M.d_exponent(label))
    return SchurElement(x.n, x.r, basis, out)


def identity_element(n, r, basis="e"):
    """Sum of the diagonal idempotents, the unit of the level-r algebra."""
    items = [(M.diag(mu), L.one()) for mu in M.compositions(n, r)]
    return s_from_items(n, r, items, basis)


def text(x):
    parts = []
    for label in sorted(x.terms, key=lambda a: a.entries):
        basis = "e" if x.basis == "e" else "N"
        parts.append("(%s)*%s%s" % (L.text(x.terms[label]), basis, list(label.entries)))
    return " + ".join(parts) if parts else "0"


def to_json(x):
    items = []
    for label in sorted(x.terms, key=lambda a: a.entries):
        items.append(
            {"matrix": M.to_json(label), "coeff": L.json_pairs(x.terms[label])}
        )
    return {"n": x.n, "r": x.r, "basis": x.basis, "terms": items}


def from_json(obj):
    items = [
        (M.from_json(t["matrix"]), L.from_json_pairs(t["coeff"]))
        for t in obj["terms"]
    ]
    return s_from_items(obj["n"], obj["r"], items, obj["basis"])


def transpose_element(x):
    """Apply the transpose anti-automorphism label by label."""
    out = {}
    for label, c in x.terms.items():
        _acc(out, M.transpose(label), c)
    return SchurElement(x.n, x.r, x.basis, out)


# ----------------------------------------------------------------------
# shape helpers for the closed-form rules


def upper_shape(B):
    """Split B as superdiagonal weights alpha plus diagonal beta, or None."""
    n = B.n
    alpha = [0] * n
    beta = [0] * n
    for i, j, a in B.entries:
        if j == i:
            beta[i - 1] = a
        elif j == i + 1:
            alpha[i - 1] = a
        else:
            return None
    return tuple(alpha), tuple(beta)


def lower_shape(C):
    """Split C as subdiagonal weights gamma plus diagonal beta, or None."""
    n = C.n
    gamma = [0] * n
    beta = [0] * n
    for i, j, a in C.entries:
        if j == i:
            beta[i - 1] = a
        elif j == i - 1:
            gamma[(i - 2) % n] = a
        else:
            return None
    return tuple(gamma), tuple(beta)


def upper_shapes_for(mu):
    """All superdiagonal-plus-diagonal labels B with co(B) = mu.

    >>> [sorted(B.entries) for B in upper_shapes_for((1, 1))]
    [[(1, 1, 1), (2, 2, 1)], [(2, 2, 1), (2, 3, 1)], [(1, 1, 1), (1, 2, 1)], [(1, 2, 1), (2, 3, 1)]]
    """
    n = len(mu)
    out = []
    for alpha in M.compositions_bounded(tuple(mu[i % n] for i in range(1, n + 1))):
        beta = tuple(mu[i] - alpha[i - 1] for i in range(n))
        out.append(M.madd(M.s_alpha(alpha), M.diag(beta)))
    return out


def lower_shapes_for(mu):
    """All subdiagonal-plus-diagonal labels C with co(C) = mu."""
    n = len(mu)
    out = []
    for gamma in M.compositions_bounded(tuple(mu)):
        beta = tuple(mu[i] - gamma[i] for i in range(n))
        out.append(M.madd(M.t_s_alpha(gamma), M.diag(beta)))
    return out


# ----------------------------------------------------------------------
# enumeration of the auxiliary matrices T


def _bounded_rows(total, caps):
    """All tuples 0 <= t_k <= caps[k] with sum equal to total."""
    if not caps:
        if total == 0:
            yield ()
        return
    for t in range(min(caps[0], total) + 1):
        for rest in _bounded_rows(total - t, caps[1:]):
            yield (t,) + rest


def _enumerate_T(n, alpha, row_cells):
    """Matrices T >= 0 with ro(T) = alpha supported on capped cells.

    row_cells[i] lists (column, cap) pairs for fundamental row i+1.
    """
    choices = []
    for i in range(n):
        cells = row_cells[i]
        row_opts = []
        for vals in _bounded_rows(alpha[i], [cap for _, cap in cells]):
            row_opts.append([(i + 1, cells[k][0], t) for k, t in enumerate(vals) if t])
        if not row_opts:
            return
        choices.append(row_opts)

    def rec(i, acc):
        if i == n:
            yield M.pmat(n, acc)
            return
        for opt in choices[i]:
            yield from rec(i + 1, acc + opt)

    yield from rec(0, [])


def _upper_T_cells(A):
    """Cell caps t_{i,j} <= a_{i+1,j}: row i of T sits under row i+1 of A."""
    return [M.row_support(A, i + 1) for i in range(1, A.n + 1)]


def _lower_T_cells(A):
    """Cell caps t_{i,j} <= a_{i,j}: T is supported on the support of A."""
    return [M.row_support(A, i) for i in range(1, A.n + 1)]


# ----------------------------------------------------------------------
# closed-form multiplication rules


def _exp_upper_e(A, T):
    total = 0
    for i, l, t in T.entries:
        s = sum(a for j, a in M.row_support(A, i) if j > l)
        s -= sum(tv for j, tv in M.row_support(T, i - 1) if j > l)
        total += t * s
    return 2 * total


def _beta_upper(A, T):
    total = 0
    for i, l, t in T.entries:
        s1 = sum(a for j, a in M.row_support(A, i) if j >= l)
        s1 -= sum(tv for j, tv in M.row_support(T, i - 1) if j >= l)
        s2 = sum(a for j, a in M.row_support(A, i + 1) if j > l)
        s2 -= sum(tv for j, tv in M.row_support(T, i) if j > l)
        total += t * (s1 - s2)
    return total


def _coeff_upper(A, T, barred):
    f = L.one()
    for i, j, t in T.entries:
        g = L.gauss_sq(A.entry(i, j) + t - T.entry(i - 1, j), t)
        if barred:
            g = L.bar(g)
        f = L.mul(f, g)
        if not f:
            break
    return f


def _exp_lower_e(A, T):
    total = 0
    for k, l, t in T.entries:
        i = k + 1
        s = sum(a for j, a in M.row_support(A, i) if j < l)
        s -= sum(tv for j, tv in M.row_support(T, i) if j < l)
        total += t * s
    return 2 * total


def _beta_lower(A, T):
    total = 0
    for k, l, t in T.entries:
        i = k + 1
        s = sum(a for j, a in M.row_support(A, i) if j <= l)
        s -= sum(tv for j, tv in M.row_support(T, i) if j <= l)
        total += t * s
    for i, l, t in T.entries:
        s = sum(a for j, a in M.row_support(A, i) if j < l)
        s -= sum(tv for j, tv in M.row_support(T, i) if j < l)
        total -= t * s
    return total


def _coeff_lower(A, T, barred):
    f = L.one()
    for k, j, t in T.entries:
        g = L.gauss_sq(A.entry(k + 1, j) - T.entry(k + 1, j) + t, t)
        if barred:
            g = L.bar(g)
        f = L.mul(f, g)
        if not f:
            break
    return f


def _mul_semisimple(B, A, lower, normalized):
    """Shared engine behind the four closed-form products."""
    if B.n != A.n:
        raise ValueError("size mismatch")
    r = M.sigma(A)
    if M.sigma(B) != r:
        raise ValueError("level mismatch")
    shape = lower_shape(B) if lower else upper_shape(B)
    if shape is None:
        raise ValueError("left factor is not of the required one-layer shape")
    weights, _ = shape
    basis = "n" if normalized else "e"
    n = B.n
    if M.co(B) != M.ro(A):
        return s_zero(n, r, basis)
    cells = _lower_T_cells(A) if lower else _upper_T_cells(A)
    out = {}
    for T in _enumerate_T(n, weights, cells):
        if lower:
            coeff = _coeff_lower(A, T, normalized)
            if not coeff:
                continue
            expo = _beta_lower(A, T) if normalized else _exp_lower_e(A, T)
            label = M.madd(M.msub(A, T), M.tilde(T))
        else:
            coeff = _coeff_upper(A, T, normalized)
            if not coeff:
                continue
            expo = _beta_upper(A, T) if normalized else _exp_upper_e(A, T)
            label = M.madd(M.msub(A, M.tilde(T)), T)
        if not M.is_nonneg(label):
            continue
        _acc(out, label, L.vshift(coeff, expo))
    return SchurElement(n, r, basis, out)


def e_mul_upper(B, A):
    """Product e_B e_A for B = superdiagonal layer plus diagonal.

    >>> B = M.madd(M.e_unit(1, 2, 2), M.diag((1, 0)))
    >>> A = M.madd(M.e_unit(2, 1, 2), M.diag((1, 0)))
    >>> text(e_mul_upper(B, A))
    '(1 + v^2)*e[(1, 1, 2)]'
    """
    return _mul_semisimple(B, A, lower=False, normalized=False)


def e_mul_lower(C, A):
    """Product e_C e_A for C = subdiagonal layer plus diagonal.

    >>> C = M.madd(M.e_unit(2, 1, 2), M.diag((0, 1)))
    >>> A = M.madd(M.e_unit(1, 2, 2), M.diag((0, 1)))
    >>> text(e_mul_lower(C, A))
    '(1 + v^2)*e[(2, 2, 2)]'
    """
    return _mul_semisimple(C, A, lower=True, normalized=False)


def n_mul_upper(B, A):
    """Product [B][A] in the normalized basis, upper one-layer left factor."""
    return _mul_semisimple(B, A, lower=False, normalized=True)


def n_mul_lower(C, A):
    """Product [C][A] in the normalized basis, lower one-layer left factor."""
    return _mul_semisimple(C, A, lower=True, normalized=True)


# ----------------------------------------------------------------------
# generating elements indexed by an off-diagonal label and a weight j


def A_j_r(A, j, r):
    """Sum of v^(mu.j) [A + diag(mu)] over compositions mu of r - sigma(A).

    >>> text(A_j_r(M.pmat(2, []), (1, 0), 2))
    '(v)*N[(1, 1, 1), (2, 2, 1)] + (v^2)*N[(1, 1, 2)] + (1)*N[(2, 2, 2)]'
    """
    n = A.n
    if len(j) != n:
        raise ValueError("weight length mismatch")
    if not M.is_zero_diagonal(A) or not M.is_nonneg(A):
        raise ValueError("label must be nonnegative with zero diagonal")
    s = M.sigma(A)
    if s > r:
        return s_zero(n, r, "n")
    out = {}
    for mu in M.compositions(n, r - s):
        _acc(out, M.madd(A, M.diag(mu)), L.monomial(M.dot(mu, j)))
    return SchurElement(n, r, "n", out)


def A_j_lambda_r(A, j, lam, r):
    """Weighted variant with symmetric Gaussian factors in the weights.

    Coefficient of [A + diag(mu)] is v^(mu.j) times the product of the
    symmetric Gaussians (mu_i over lam_i).  With lam = 0 this is A_j_r.
    """
    n = A.n
    if len(j) != n or len(lam) != n:
        raise ValueError("weight length mismatch")
    if not M.is_zero_diagonal(A) or not M.is_nonneg(A):
        raise ValueError("label must be nonnegative with zero diagonal")
    s = M.sigma(A)
    if s > r:
        return s_zero(n, r, "n")
    out = {}
    for mu in M.compositions(n, r - s):
        coeff = L.monomial(M.dot(mu, j))
        for mi, li in zip(mu, lam):
            coeff = L.mul(coeff, L.gauss_sym(mi, li))
            if not coeff:
                break
        if coeff:
            _acc(out, M.madd(A, M.diag(mu)), coeff)
    return SchurElement(n, r, "n", out)


# ----------------------------------------------------------------------
# reference product through the Hecke algebra

_COSET_SUM_CACHE = {}
_LABEL_SUM_CACHE = {}
_LENGTH_CACHE = {}


def _window_length(win):
    val = _LENGTH_CACHE.get(win)
    if val is None:
        val = P.length(P.AffinePermutation(len(win), win))
        _LENGTH_CACHE[win] = val
    return val


def _coset_sum(lam, win, nu):
    key = (lam, win, nu)
    h = _COSET_SUM_CACHE.get(key)
    if h is None:
        r = len(win)
        h = H.t_double_coset(lam, P.AffinePermutation(r, win), nu)
        _COSET_SUM_CACHE[key] = h
    return h


def _h_divexact(h, f):
    return H.HeckeElement(
        h.r, {win: L.divexact(c, f) for win, c in h.terms.items()}
    )


def _factorial_product(A):
    f = L.one()
    for _, _, a in A.entries:
        f = L.mul(f, L.factorial_sq(a))
    return f


def _label_coset_sum(A):
    """The Hecke image of e_A applied to x_{co(A)}, cached per label.

    This is the full double-coset sum for (ro(A), y_A, co(A)), obtained
    from x_mu T_{y_A} x_nu by exact division by the entry factorials.
    """
    h = _LABEL_SUM_CACHE.get(A)
    if h is None:
        mu, nu = M.ro(A), M.co(A)
        d2 = P.pseudo_matrix_rep(A)
        h = H.x_mul_right(H.t_basis(d2), nu)
        h = H.x_mul_left(mu, h)
        h = _h_divexact(h, _factorial_product(A))
        _LABEL_SUM_CACHE[A] = h
    return h


def _decompose(h, lam, nu):
    """Peel a sum of full double cosets into labels with coefficients."""
    cur = {win: dict(c) for win, c in h.terms.items()}
    out = {}
    while cur:
        best = min(cur, key=lambda w: (_window_length(w), w))
        c = dict(cur[best])
        y = P.AffinePermutation(len(best), best)
        label = P.jmath(lam, y, nu)
        out[label] = c
        coset = _coset_sum(lam, best, nu)
        before = len(cur)
        for win in coset.terms:
            slot = cur.get(win)
            if slot is None:
                cur[win] = slot = {}
            L.add_inplace(slot, c, -1)
            if not slot:
                del cur[win]
        if len(cur) >= before:
            raise AssertionError("support did not shrink during peeling")
    return out


def oracle_mul(B, A):
    """Product e_B e_A computed inside the Hecke algebra.

    Realizes e_A on x_{co(A)} as a double-coset sum, applies e_B through
    the defining formula on x_{ro(A)}-multiples (dividing by the entry
    factorials of B, exactly), and peels the resulting Hecke element
    into standard basis labels.

    >>> B = M.madd(M.e_unit(1, 2, 2), M.diag((1, 0)))
    >>> A = M.madd(M.e_unit(2, 1, 2), M.diag((1, 0)))
    >>> text(oracle_mul(B, A))
    '(1 + v^2)*e[(1, 1, 2)]'
    """
    if B.n != A.n:
        raise ValueError("size mismatch")
    r = M.sigma(A)
    if M.sigma(B) != r:
        raise ValueError("level mismatch")
    n = B.n
    if not (M.is_nonneg(A) and M.is_nonneg(B)):
        raise ValueError("labels must be nonnegative")
    if M.co(B) != M.ro(A):
        return s_zero(n, r, "e")
    lam, nu = M.ro(B), M.co(A)
    h = _label_coset_sum(A)
    d1 = P.pseudo_matrix_rep(B)
    g = H.left_mul_basis(d1, h)
    g = H.x_mul_left(lam, g)
    g = _h_divexact(g, _factorial_product(B))
    return SchurElement(n, r, "e", _decompose(g, lam, nu))


def oracle_product(x, y):
    """Bilinear extension of oracle_mul to standard-basis elements."""
    _check_pair(x, y)
    if x.basis != "e":
        raise ValueError("oracle products act on the standard basis")
    out = {}
    for B, cb in x.terms.items():
        for A, ca in y.terms.items():
            piece = oracle_mul(B, A)
            scale = L.mul(cb, ca)
            for label, c in piece.terms.items():
                _acc(out, label, c, scale)
    return SchurElement(x.n, x.r, "e", out)


def closed_product_upper(x, y):
    """Bilinear closed-form product; x labels must be one-layer upper."""
    _check_pair(x, y)
    mul = n_mul_upper if x.basis == "n" else e_mul_upper
    out = {}
    for B, cb in x.terms.items():
        for A, ca in y.terms.items():
            piece = mul(B, A)
            scale = L.mul(cb, ca)
            for label, c in piece.terms.items():
                _acc(out, label, c, scale)
    return SchurElement(x.n, x.r, x.basis, out)


def closed_product_lower(x, y):
    """Bilinear closed-form product; x labels must be one-layer lower."""
    _check_pair(x, y)
    mul = n_mul_lower if x.basis == "n" else e_mul_lower
    out = {}
    for C, cc in x.terms.items():
        for A, ca in y.terms.items():
            piece = mul(C, A)
            scale = L.mul(cc, ca)
            for label, c in piece.terms.items():
                _acc(out, label, c, scale)
    return SchurElement(x.n, x.r, x.basis, out)
