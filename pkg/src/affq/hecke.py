"""Hecke algebra of the window-permutation group, with parameter v squared.

Elements are finite sums of basis symbols T_w indexed by window
permutations, with coefficients in the Laurent ring of v.  Products reduce
to the one-generator rules

    T_s T_w = T_{sw}                         if length(sw) > length(w),
    T_s T_w = (v^2 - 1) T_w + v^2 T_{sw}     if length(sw) < length(w),

their mirror images on the right, and T_{rho^m} T_w = T_{rho^m w} for the
length-zero shift.  General basis products factor the left operand into a
shift times a reduced word.  Sums of T_w over block subgroups and their
double cosets are provided for the convolution layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import laurent as L
from . import matrices as M
from . import permutations as P

_V2 = L.monomial(2)
_V2M1 = L.poly({2: 1, 0: -1})


@dataclass
class HeckeElement:
    """Finite sum over window tuples; coefficients are nonzero Laurent dicts."""

    r: int
    terms: dict


def h_zero(r):
    return HeckeElement(r, {})


def h_is_zero(h):
    return not h.terms


def t_basis(w, coeff=None):
    c = L.one() if coeff is None else dict(coeff)
    if L.is_zero(c):
        return h_zero(w.r)
    return HeckeElement(w.r, {w.window: c})


def _acc(terms, win, coeff, scalar=None):
    cur = terms.get(win)
    if cur is None:
        c = dict(coeff) if scalar is None else L.mul(coeff, scalar)
        if not L.is_zero(c):
            terms[win] = c
    else:
        L.add_inplace(cur, coeff if scalar is None else L.mul(coeff, scalar))
        if L.is_zero(cur):
            del terms[win]


def h_from_items(r, items):
    out = {}
    for win, c in items:
        _acc(out, tuple(win), c)
    return HeckeElement(r, out)


def h_add(a, b):
    if a.r != b.r:
        raise ValueError("level mismatch")
    out = {win: dict(c) for win, c in a.terms.items()}
    for win, c in b.terms.items():
        _acc(out, win, c)
    return HeckeElement(a.r, out)


def h_sub(a, b):
    return h_add(a, h_scale(L.smul(-1, L.one()), b))


def h_scale(c, h):
    if L.is_zero(c):
        return h_zero(h.r)
    return HeckeElement(h.r, {win: L.mul(c, f) for win, f in h.terms.items()})


def h_eq(a, b):
    return a.r == b.r and a.terms == b.terms


def text(h):
    if not h.terms:
        return "0"
    parts = []
    for win in sorted(h.terms):
        parts.append("(" + L.text(h.terms[win]) + ")*T" + str(list(win)))
    return " + ".join(parts)


def _inv_pos(window, r, val):
    """Position k with w(k) = val."""
    for c in range(r):
        if (window[c] - val) % r == 0:
            return c + 1 + (val - window[c])
    raise AssertionError("window residues must cover all classes")


def _gen_value(i, r, x):
    c = (x - i) % r
    if c == 0:
        return x + 1
    if c == 1:
        return x - 1
    return x


def left_mul_gen(i, h):
    """T_{s_i} * h."""
    r = h.r
    out = {}
    for win, c in h.terms.items():
        new = tuple(_gen_value(i, r, x) for x in win)
        if _inv_pos(win, r, i) < _inv_pos(win, r, i + 1):
            _acc(out, new, c)
        else:
            _acc(out, win, c, _V2M1)
            _acc(out, new, c, _V2)
    return HeckeElement(r, out)


def right_mul_gen(h, i):
    """h * T_{s_i}."""
    r = h.r
    out = {}
    for win, c in h.terms.items():
        lst = list(win)
        if i < r:
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            descent = win[i - 1] > win[i]
        else:
            lst[0], lst[r - 1] = win[r - 1] - r, win[0] + r
            descent = win[r - 1] > win[0] + r
        new = tuple(lst)
        if not descent:
            _acc(out, new, c)
        else:
            _acc(out, win, c, _V2M1)
            _acc(out, new, c, _V2)
    return HeckeElement(r, out)


def left_mul_rho(m, h):
    """T_{rho^m} * h."""
    if m == 0:
        return h
    return HeckeElement(h.r, {tuple(x + m for x in win): dict(c) for win, c in h.terms.items()})


def right_mul_rho(h, m):
    """h * T_{rho^m}."""
    if m == 0:
        return h
    r = h.r
    out = {}
    for win, c in h.terms.items():
        new = []
        for k in range(1, r + 1):
            j = k + m
            q = (j - 1) % r
            new.append(win[q] + (j - 1 - q) // r * r)
        out[tuple(new)] = dict(c)
    return HeckeElement(r, out)


def left_mul_basis(w, h):
    """T_w * h via a reduced word of w."""
    if w.r != h.r:
        raise ValueError("level mismatch")
    m, word = P.reduced_word(w)
    for i in reversed(word):
        h = left_mul_gen(i, h)
    return left_mul_rho(m, h)


def right_mul_basis(h, w):
    """h * T_w via a reduced word of w."""
    if w.r != h.r:
        raise ValueError("level mismatch")
    m, word = P.reduced_word(w)
    h = right_mul_rho(h, m)
    for i in word:
        h = right_mul_gen(h, i)
    return h


def mul(a, b):
    """Bilinear product.

    >>> s = t_basis(P.generator_s(1, 2))
    >>> text(mul(s, s))
    '(v^2)*T[1, 2] + (-1 + v^2)*T[2, 1]'
    """
    if a.r != b.r:
        raise ValueError("level mismatch")
    out = {}
    for win in sorted(a.terms):
        c = a.terms[win]
        piece = left_mul_basis(P.AffinePermutation(a.r, win), b)
        for pwin, pc in piece.terms.items():
            _acc(out, pwin, pc, c)
    return HeckeElement(a.r, out)


def x_lambda(lam):
    """Sum of T_u over the block subgroup of lam.

    >>> sorted(x_lambda((2, 0)).terms)
    [(1, 2), (2, 1)]
    >>> sorted(x_lambda((1, 1)).terms)
    [(1, 2)]
    """
    return HeckeElement(
        sum(lam),
        {w.window: L.one() for w in P.young_subgroup_elements(lam)},
    )


def _stair_left(h, p, m):
    # T over the symmetric group on positions p+1..p+m equals
    # (sum of T over coset leaders s_j...s_{p+m-1}) times the same for m-1;
    # each leader extends the previous by one generator on the left.
    if m <= 1:
        return h
    h1 = _stair_left(h, p, m - 1)
    total = {win: dict(c) for win, c in h1.terms.items()}
    g = h1
    for j in range(p + m - 1, p, -1):
        g = left_mul_gen(j, g)
        for win, c in g.terms.items():
            _acc(total, win, c)
    return HeckeElement(h.r, total)


def _stair_right(h, p, m):
    if m <= 1:
        return h
    h1 = _stair_right(h, p, m - 1)
    total = {win: dict(c) for win, c in h1.terms.items()}
    g = h1
    for j in range(p + m - 1, p, -1):
        g = right_mul_gen(g, j)
        for win, c in g.terms.items():
            _acc(total, win, c)
    return HeckeElement(h.r, total)


def x_mul_left(lam, h):
    """x_lambda * h without expanding the block subgroup."""
    if sum(lam) != h.r:
        raise ValueError("composition must sum to the level")
    pos = 0
    for part in lam:
        h = _stair_left(h, pos, part)
        pos += part
    return h


def x_mul_right(h, lam):
    """h * x_lambda without expanding the block subgroup."""
    if sum(lam) != h.r:
        raise ValueError("composition must sum to the level")
    pos = 0
    for part in lam:
        h = _stair_right(h, pos, part)
        pos += part
    return h


def t_double_coset(lam, d, mu):
    """Sum of T_w over the double coset of d, for d shortest in it."""
    if not P.is_min_double_coset_rep(d, lam, mu):
        raise ValueError("d is not the shortest element of its double coset")
    return HeckeElement(
        d.r,
        {w.window: L.one() for w in P.double_coset_elements(lam, d, mu)},
    )


def coset_product_identity_check(lam, d, mu):
    """Whether x_lam * T_d * x_mu equals the double-coset sum scaled by the
    product of bracket factorials of the entries of the coset's matrix."""
    A = P.jmath(lam, d, mu)
    lhs = x_mul_right(x_mul_left(lam, t_basis(d)), mu)
    factor = L.one()
    for _, _, a in A.entries:
        factor = L.mul(factor, L.factorial_sq(a))
    rhs = h_scale(factor, t_double_coset(lam, d, mu))
    return h_eq(lhs, rhs)


def coset_decomposition_identity_check(lam, d, mu):
    """Division-free form: the double-coset sum equals x_lam * T_d * T_X where
    X lists the shortest representatives, inside the mu block subgroup, of the
    cosets of the intersection d^{-1} (lam subgroup) d with that subgroup."""
    A = P.jmath(lam, d, mu)
    omega = M.column_parts(A)
    tail = HeckeElement(
        d.r,
        {
            w.window: L.one()
            for w in P.young_subgroup_elements(mu)
            if P.is_min_right_coset_rep(w, omega)
        },
    )
    lhs = x_mul_left(lam, left_mul_basis(d, tail))
    return h_eq(lhs, t_double_coset(lam, d, mu))
