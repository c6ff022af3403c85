"""Nilpotent representations of the cyclic quiver with n vertices.

Vertices are Z/n (written 1..n), one arrow i -> i+1.  A strictly upper
periodic matrix A records the multiplicities of the segment modules: the
entry a_{i,j} (i < j) counts copies of the uniserial module of length j-i
with top the simple at vertex i.  The module M(A) has dimension vector d(A)
and total dimension sigma of d(A).

This module provides the homological Euler form, endomorphism dimensions,
brute-force Hall numbers over small finite fields, and the closed-form
product of a semisimple module with an arbitrary nilpotent module, in both
the untwisted (polynomials in q) and twisted (Laurent in v) normalizations.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import laurent as L
from . import matrices as M


def euler_form(lam, mu):
    """The Euler form <lam, mu> = sum lam_i mu_i - sum lam_i mu_{i+1},
    indices cyclic mod n."""
    n = len(lam)
    if len(mu) != n:
        raise ValueError("component count mismatch")
    return sum(lam[i] * mu[i] - lam[i] * mu[(i + 1) % n] for i in range(n))


def check_label(A):
    if not M.is_strictly_upper(A) or not M.is_nonneg(A):
        raise ValueError("label must be strictly upper with nonnegative entries")


def segments(A):
    """Expanded list of (top vertex, length) pairs, one per segment copy.

    >>> segments(M.pmat(2, [(1, 2, 2), (2, 4, 1)]))
    [(1, 1), (1, 1), (2, 2)]
    """
    check_label(A)
    out = []
    for i, j, a in sorted(A.entries):
        out.extend([(i, j - i)] * a)
    return out


def dim_vector(A):
    """Dimension vector of M(A): each segment covers consecutive residues.

    >>> dim_vector(M.pmat(2, [(2, 4, 1)]))
    (1, 1)
    """
    n = A.n
    d = [0] * n
    for top, length in segments(A):
        for t in range(top, top + length):
            d[(t - 1) % n] += 1
    return tuple(d)


def dim_rep(A):
    """Total dimension of M(A)."""
    return sum(dim_vector(A))


def dual_label(A):
    """Label of the dual module under the arrow-reversing vertex flip.

    Segments map by (i, j) -> (1 - j, 1 - i); this is an involution on
    the strictly upper labels and satisfies
    phi^C_{A,B} = phi^{dual C}_{dual B, dual A}.

    >>> sorted(dual_label(M.pmat(2, [(2, 4, 1)])).entries)
    [(1, 3, 1)]
    """
    check_label(A)
    return M.pmat(A.n, [(1 - j, 1 - i, a) for i, j, a in A.entries])


# ----------------------------------------------------------------------
# linear algebra over a prime field


def _rref(rows, q):
    """Row-reduce over F_q; returns (rref rows without zero rows, pivots)."""
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = None
        for k in range(rank, len(rows)):
            if rows[k][col] % q:
                piv = k
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], q - 2, q) if q > 2 else 1
        rows[rank] = [(x * inv) % q for x in rows[rank]]
        for k in range(len(rows)):
            if k != rank and rows[k][col] % q:
                c = rows[k][col] % q
                rows[k] = [(x - c * y) % q for x, y in zip(rows[k], rows[rank])]
        pivots.append(col)
        rank += 1
    return [tuple(r) for r in rows[:rank]], pivots


def _rank(rows, q):
    return len(_rref(rows, q)[0])


def _mat_vec(X, u, q):
    return tuple(sum(a * b for a, b in zip(row, u)) % q for row in X)


def _reduce_by(basis, pivots, w, q):
    """Subtract the basis multiples matching the pivot coordinates of w."""
    w = list(w)
    coords = []
    for row, p in zip(basis, pivots):
        c = w[p] % q
        coords.append(c)
        if c:
            w = [(x - c * y) % q for x, y in zip(w, row)]
    return tuple(w), tuple(coords)


def subspaces(d, q):
    """All subspaces of F_q^d as (rref basis rows, pivot columns).

    >>> sum(1 for _ in subspaces(2, 2))
    5
    """
    yield ((), ())
    for k in range(1, d + 1):
        for pivots in combinations(range(d), k):
            free = []
            for r, p in enumerate(pivots):
                for c in range(p + 1, d):
                    if c not in pivots:
                        free.append((r, c))
            for code in range(q ** len(free)):
                rows = [[0] * d for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                x = code
                for r, c in free:
                    rows[r][c] = x % q
                    x //= q
                yield (tuple(tuple(r) for r in rows), tuple(pivots))


# ----------------------------------------------------------------------
# concrete representations


@dataclass
class ConcreteRep:
    """An explicit F_q representation: dims per vertex 0..n-1 and one
    matrix per arrow v -> v+1 (column-vector convention)."""

    q: int
    n: int
    dims: tuple
    maps: tuple


def concrete_rep(A, q):
    """Build the direct sum of segment modules prescribed by the label."""
    check_label(A)
    n = A.n
    dims = [0] * n
    cells = []
    for top, length in segments(A):
        idx = []
        for t in range(top, top + length):
            v = (t - 1) % n
            idx.append((v, dims[v]))
            dims[v] += 1
        cells.append(idx)
    maps = [[[0] * dims[v] for _ in range(dims[(v + 1) % n])] for v in range(n)]
    for idx in cells:
        for (v, a), (_, b) in zip(idx, idx[1:]):
            maps[v][b][a] = 1
    return ConcreteRep(q, n, tuple(dims), tuple(tuple(tuple(r) for r in m) for m in maps))


def label_of_rep(rep):
    """Recover the segment multiset from arrow-composition ranks.

    With f(i, m) the rank of the m-step composite starting at vertex i,
    the count of segments with top i and length m is
    f(i, m-1) - f(i, m) - f(i-1, m) + f(i-1, m+1).
    """
    n, q = rep.n, rep.q
    total = sum(rep.dims)
    f = [[0] * (total + 2) for _ in range(n)]
    for i in range(n):
        f[i][0] = rep.dims[i]
        cur = [[1 if a == b else 0 for b in range(rep.dims[i])] for a in range(rep.dims[i])]
        for m in range(1, total + 1):
            X = rep.maps[(i + m - 1) % n]
            cur = [
                [sum(X[r][k] * cur[k][c] for k in range(len(cur))) % q for c in range(rep.dims[i])]
                for r in range(len(X))
            ]
            f[i][m] = _rank(cur, q)
    items = []
    for i in range(n):
        for m in range(1, total + 1):
            c = f[i][m - 1] - f[i][m] - f[i - 1][m] + f[i - 1][m + 1]
            if c < 0:
                raise AssertionError("negative segment multiplicity")
            if c:
                items.append((i + 1, i + 1 + m, c))
    return M.pmat(n, items)


# ----------------------------------------------------------------------
# brute-force Hall numbers

_CENSUS_CACHE = {}


def _sub_quot_labels(rep, bases):
    """Labels of the subrepresentation spanned by bases and its quotient.

    bases[v] = (rref rows, pivots) per vertex; returns None if the span
    is not stable under the arrows.
    """
    n, q = rep.n, rep.q
    sub_dims, sub_maps = [], []
    quot_dims, quot_maps = [], []
    nonpiv = []
    for v in range(n):
        rows, pivots = bases[v]
        sub_dims.append(len(rows))
        quot_dims.append(rep.dims[v] - len(rows))
        nonpiv.append([c for c in range(rep.dims[v]) if c not in pivots])
    for v in range(n):
        w = (v + 1) % n
        rows, _ = bases[v]
        trows, tpivots = bases[w]
        smap = [[0] * sub_dims[v] for _ in range(sub_dims[w])]
        for col, b in enumerate(rows):
            img = _mat_vec(rep.maps[v], b, q)
            resid, coords = _reduce_by(trows, tpivots, img, q)
            if any(resid):
                return None
            for r, c in enumerate(coords):
                smap[r][col] = c
        qmap = [[0] * quot_dims[v] for _ in range(quot_dims[w])]
        for col, src in enumerate(nonpiv[v]):
            e = [0] * rep.dims[v]
            e[src] = 1
            img = _mat_vec(rep.maps[v], e, q)
            resid, _ = _reduce_by(trows, tpivots, img, q)
            for r, c in enumerate(nonpiv[w]):
                qmap[r][col] = resid[c]
        sub_maps.append(tuple(tuple(r) for r in smap))
        quot_maps.append(tuple(tuple(r) for r in qmap))
    sub = ConcreteRep(q, n, tuple(sub_dims), tuple(sub_maps))
    quot = ConcreteRep(q, n, tuple(quot_dims), tuple(quot_maps))
    return label_of_rep(sub), label_of_rep(quot)


def submodule_census(C, q):
    """Counts of (sub label, quotient label) over all submodules of M(C)."""
    key = (C, q)
    out = _CENSUS_CACHE.get(key)
    if out is not None:
        return out
    if q not in (2, 3):
        raise ValueError("census supports q in {2, 3}")
    if dim_rep(C) > 5:
        raise ValueError("census caps the total dimension at 5")
    rep = concrete_rep(C, q)
    if label_of_rep(rep) != C:
        raise AssertionError("segment recovery failed on the built module")
    per_vertex = [list(subspaces(d, q)) for d in rep.dims]

    out = {}

    def rec(v, chosen):
        if v == rep.n:
            pair = _sub_quot_labels(rep, chosen)
            if pair is not None:
                out[pair] = out.get(pair, 0) + 1
            return
        for basis in per_vertex[v]:
            rec(v + 1, chosen + [basis])

    rec(0, [])
    _CENSUS_CACHE[key] = out
    return out


def brute_hall_number(A, B, C, q):
    """Submodules N of M(C) with N iso M(B) and M(C)/N iso M(A).

    >>> E = M.e_unit(1, 2, 2)
    >>> brute_hall_number(E, E, M.mscale(2, E), 2)
    3
    >>> brute_hall_number(E, E, M.mscale(2, E), 3)
    4
    """
    for X in (A, B, C):
        check_label(X)
    da, db, dc = dim_vector(A), dim_vector(B), dim_vector(C)
    if tuple(x + y for x, y in zip(da, db)) != dc:
        return 0
    return submodule_census(C, q).get((B, A), 0)


# ----------------------------------------------------------------------
# endomorphism dimensions


def _intertwiner_matrix(repA, repB):
    """Linear system for maps phi_v: A_v -> B_v with X^B phi = phi X^A."""
    n = repA.n
    offs, total = [], 0
    for v in range(n):
        offs.append(total)
        total += repB.dims[v] * repA.dims[v]
    rows = []
    for v in range(n):
        w = (v + 1) % n
        XA, XB = repA.maps[v], repB.maps[v]
        for r in range(repB.dims[w]):
            for c in range(repA.dims[v]):
                row = [0] * total
                # (phi_w X^A)_{r,c} = sum_a phi_w[r][a] XA[a][c]
                for a in range(repA.dims[w]):
                    row[offs[w] + r * repA.dims[w] + a] += XA[a][c]
                # (X^B phi_v)_{r,c} = sum_b XB[r][b] phi_v[b][c]
                for b in range(repB.dims[v]):
                    row[offs[v] + b * repA.dims[v] + c] -= XB[r][b]
                if any(row):
                    rows.append(row)
    return rows, total


def _rank_rational(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((k for k in range(rank, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for k in range(len(rows)):
            if k != rank and rows[k][col]:
                c = rows[k][col]
                rows[k] = [x - c * y for x, y in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def dim_hom(A, B):
    """dim Hom(M(A), M(B)) over the rationals."""
    # the arrow matrices are 0/1, so the field marker q is irrelevant here
    repA, repB = concrete_rep(A, 0), concrete_rep(B, 0)
    rows, total = _intertwiner_matrix(repA, repB)
    return total - _rank_rational(rows)


def dim_end(A):
    """dim End(M(A)) over the rationals.

    >>> dim_end(M.e_unit(1, 2, 2))
    1
    >>> dim_end(M.mscale(2, M.e_unit(1, 2, 2)))
    4
    >>> dim_end(M.e_unit(1, 3, 2))
    1
    """
    return dim_hom(A, A)


def dim_end_mod(A, p):
    """The same nullity computed over F_p (field independence check)."""
    rep = concrete_rep(A, p)
    rows, total = _intertwiner_matrix(rep, rep)
    return total - _rank([[x % p for x in r] for r in rows], p)


def u_tilde_factor(A):
    """Scalar v^(dim End(M(A)) - dim M(A)) relating u_A to its tilde form."""
    return L.monomial(dim_end(A) - dim_rep(A))


# ----------------------------------------------------------------------
# polynomials in q


def qpoly(items):
    out = {}
    for d, c in dict(items).items():
        if c:
            out[d] = c
    return out


def qp_add_inplace(acc, f, scalar=1):
    for d, c in f.items():
        v = acc.get(d, 0) + scalar * c
        if v:
            acc[d] = v
        else:
            acc.pop(d, None)


def qp_mul(f, g):
    out = {}
    for d1, c1 in f.items():
        for d2, c2 in g.items():
            d = d1 + d2
            v = out.get(d, 0) + c1 * c2
            if v:
                out[d] = v
            else:
                out.pop(d, None)
    return out


def qp_eval(f, q):
    return sum(c * q ** d for d, c in f.items())


def qp_shift(f, k):
    return {d + k: c for d, c in f.items()}


def gauss_q(N, t):
    """Gaussian binomial as a polynomial in q (even-degree Laurent halved)."""
    f = L.gauss_sq(N, t)
    return {e // 2: c for e, c in f.items()}


def qp_to_laurent(f):
    """Substitute q = v^2."""
    return {2 * d: c for d, c in f.items()}


def qp_json(f):
    return [[d, f[d]] for d in sorted(f)]


# ----------------------------------------------------------------------
# closed-form semisimple products


def _bounded_rows(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for t in range(min(caps[0], total) + 1):
        for rest in _bounded_rows(total - t, caps[1:]):
            yield (t,) + rest


def _hall_T_set(A, alpha):
    """Strictly upper T with ro(T) = alpha whose term can survive.

    Cell (i, i+1) is unconstrained up to alpha_i; any other cell (i, j)
    needs t_{i,j} <= a_{i+1,j} or the Gaussian at (i+1, j) vanishes.
    """
    n = A.n
    rows = []
    for i in range(1, n + 1):
        cells = [(i + 1, alpha[i - 1])]
        for j, a in M.row_support(A, i + 1):
            if j != i + 1:
                cells.append((j, min(alpha[i - 1], a)))
        rows.append(cells)

    def rec(i, acc):
        if i > n:
            yield M.pmat(n, acc)
            return
        cells = rows[i - 1]
        for vals in _bounded_rows(alpha[i - 1], [cap for _, cap in cells]):
            chosen = [(i, cells[k][0], t) for k, t in enumerate(vals) if t]
            yield from rec(i + 1, acc + chosen)

    yield from rec(1, [])


def _gauss_cells(A, T):
    """The (N, t) data of the nonunit Gaussian factors, per T cell."""
    out = []
    for i, j, t in T.entries:
        out.append((A.entry(i, j) + t - T.entry(i - 1, j), t))
    return out


def _untwisted_exponent(A, T):
    """sum over i in [1,n], l < j of a_{i,j} t_{i,l} - t_{i,j} t_{i+1,l}."""
    total = 0
    for i, l, t in T.entries:
        total += t * sum(a for j, a in M.row_support(A, i) if j > l)
    for i, j, t in T.entries:
        total -= t * sum(tv for l, tv in M.row_support(T, i + 1) if l < j)
    return total


def _twisted_exponent(A, T):
    """The four-sum exponent of the twisted semisimple product."""
    total = 0
    for i, l, t in T.entries:
        s = sum(a for j, a in M.row_support(A, i) if j >= l and j != i)
        s -= sum(a for j, a in M.row_support(A, i + 1) if j > l and j != i + 1)
        s -= sum(tv for j, tv in M.row_support(T, i - 1) if j >= l and j != i)
        s += sum(tv for j, tv in M.row_support(T, i) if j > l and j != i and j != i + 1)
        total += t * s
    return total


def _result_label(A, T):
    upper_tilde = M.split(M.tilde(T))[0]
    return M.madd(M.msub(A, upper_tilde), T)


def semisimple_hall_product(alpha, A):
    """Closed form for u_alpha times u_A; values are polynomials in q.

    >>> E = M.e_unit(1, 2, 2)
    >>> semisimple_hall_product((1, 0), E) == {M.mscale(2, E): {0: 1, 1: 1}}
    True
    >>> semisimple_hall_product((0, 0), E) == {E: {0: 1}}
    True
    """
    check_label(A)
    if len(alpha) != A.n or any(x < 0 for x in alpha):
        raise ValueError("alpha must be a nonnegative vector of length n")
    out = {}
    for T in _hall_T_set(A, alpha):
        coeff = {0: 1}
        for N, t in _gauss_cells(A, T):
            coeff = qp_mul(coeff, gauss_q(N, t))
            if not coeff:
                break
        if not coeff:
            continue
        label = _result_label(A, T)
        if not M.is_nonneg(label):
            continue
        acc = out.setdefault(label, {})
        qp_add_inplace(acc, qp_shift(coeff, _untwisted_exponent(A, T)))
        if not acc:
            del out[label]
    return out


def twisted_mul_semisimple(alpha, A):
    """Closed form for the tilde-normalized product; Laurent coefficients.

    >>> E = M.e_unit(1, 2, 2)
    >>> twisted_mul_semisimple((1, 0), E) == {M.mscale(2, E): {1: 1, -1: 1}}
    True
    """
    check_label(A)
    if len(alpha) != A.n or any(x < 0 for x in alpha):
        raise ValueError("alpha must be a nonnegative vector of length n")
    out = {}
    for T in _hall_T_set(A, alpha):
        coeff = L.one()
        for N, t in _gauss_cells(A, T):
            coeff = L.mul(coeff, L.bar(L.gauss_sq(N, t)))
            if not coeff:
                break
        if not coeff:
            continue
        label = _result_label(A, T)
        if not M.is_nonneg(label):
            continue
        acc = out.setdefault(label, {})
        L.add_inplace(acc, L.vshift(coeff, _twisted_exponent(A, T)))
        if not acc:
            del out[label]
    return out


def twisted_route_b(alpha, A):
    """Independent route to the twisted product through Hall polynomials.

    u~_alpha u~_A = sum_C v^(<alpha, d(A)> + c(S_alpha) + c(A) - c(C))
    phi^C_{S_alpha, A}(v^2) u~_C with c(X) = dim End M(X) - dim M(X).
    """
    check_label(A)
    s_label = M.s_alpha(alpha)
    base = euler_form(alpha, dim_vector(A))
    base += dim_end(s_label) - dim_rep(s_label)
    base += dim_end(A) - dim_rep(A)
    out = {}
    for label, phi in semisimple_hall_product(alpha, A).items():
        shift = base - (dim_end(label) - dim_rep(label))
        out[label] = L.vshift(qp_to_laurent(phi), shift)
    return out


def enumerate_labels(n, max_sigma, max_dim):
    """All strictly upper labels with entry sum and total dimension capped.

    >>> len(enumerate_labels(2, 1, 2))
    5
    """
    pool = [(i, i + m) for i in range(1, n + 1) for m in range(1, max_dim + 1)]

    def rec(k, sig, dim):
        if k == len(pool):
            yield []
        else:
            i, j = pool[k]
            step = j - i
            top = min(max_sigma - sig, (max_dim - dim) // step)
            for c in range(top + 1):
                for rest in rec(k + 1, sig + c, dim + c * step):
                    yield ([(i, j, c)] if c else []) + rest

    return [M.pmat(n, items) for items in rec(0, 0, 0)]


def product_to_json(prod):
    """Canonical JSON for a Hall product map label -> q-polynomial."""
    terms = []
    for label in sorted(prod, key=lambda a: a.entries):
        terms.append({"matrix": M.to_json(label), "poly_q": qp_json(prod[label])})
    return {"terms": terms}
