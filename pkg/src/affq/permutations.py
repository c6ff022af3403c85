"""Bijections of the integers commuting with the shift by a period r.

A permutation w of the integers with w(i + r) = w(i) + r for all i is
stored by its window (w(1), ..., w(r)).  These bijections form a group
under composition, generated by the transpositions s_1, ..., s_r together
with the shift rho(j) = j + 1.  The module provides the group operations,
length as inversion count, reduced words, shortest coset and double-coset
representatives for Young subgroups attached to compositions, the matrix
encoding of double cosets, and the shortest representative read off a
nonnegative periodic matrix.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass

from . import matrices as M


@dataclass(frozen=True)
class AffinePermutation:
    """Window (w(1), ..., w(r)) of a bijection with w(i + r) = w(i) + r."""

    r: int
    window: tuple

    def apply(self, j):
        """Value w(j) for any integer j."""
        c = (j - 1) % self.r
        t = (j - 1 - c) // self.r
        return self.window[c] + t * self.r

    def __call__(self, j):
        return self.apply(j)

    def __repr__(self):
        return text(self)


def perm(r, window):
    """Validated constructor.

    >>> perm(2, [0, 3])
    w = [0, 3] @ 2
    >>> perm(2, [2, 4])
    Traceback (most recent call last):
        ...
    ValueError: window residues mod r must form a permutation
    """
    r = int(r)
    if r < 1:
        raise ValueError("period must be a positive integer")
    w = tuple(int(x) for x in window)
    if len(w) != r:
        raise ValueError("window must list the r values w(1), ..., w(r)")
    if sorted(x % r for x in w) != list(range(r)):
        raise ValueError("window residues mod r must form a permutation")
    return AffinePermutation(r, w)


def identity(r):
    return AffinePermutation(int(r), tuple(range(1, int(r) + 1)))


def rho(r):
    """The shift j -> j + 1.

    >>> rho(3).window
    (2, 3, 4)
    """
    return rho_power(1, r)


def rho_power(m, r):
    """The shift j -> j + m."""
    return AffinePermutation(int(r), tuple(i + m for i in range(1, int(r) + 1)))


def generator_s(i, r):
    """Coxeter generator exchanging the classes of i and i + 1 mod r.

    >>> generator_s(1, 2).window
    (2, 1)
    >>> generator_s(2, 2).window
    (0, 3)
    """
    r = int(r)
    if r < 2 or not 1 <= i <= r:
        raise ValueError("generator index must satisfy 1 <= i <= r with r >= 2")
    a, b = i % r, (i + 1) % r
    out = []
    for j in range(1, r + 1):
        c = j % r
        out.append(j + 1 if c == a else j - 1 if c == b else j)
    return AffinePermutation(r, tuple(out))


def compose(w, y):
    """(w . y)(k) = w(y(k))."""
    if w.r != y.r:
        raise ValueError("period mismatch")
    return AffinePermutation(w.r, tuple(w.apply(v) for v in y.window))


def inverse(w):
    out = [0] * w.r
    for k in range(1, w.r + 1):
        v = w.window[k - 1]
        c = (v - 1) % w.r
        m = (v - 1 - c) // w.r
        out[c] = k - m * w.r
    return AffinePermutation(w.r, tuple(out))


def is_identity(w):
    return w.window == tuple(range(1, w.r + 1))


def length(w):
    """Number of pairs (i, j) with 1 <= i <= r, i < j and w(i) > w(j).

    For fixed residues i, j0 the contributing shifts j = j0 + t*r form an
    interval in t, counted exactly.

    >>> length(rho(4))
    0
    >>> length(generator_s(3, 3))
    1
    >>> length(perm(2, [0, 3]))
    1
    """
    r = w.r
    total = 0
    for i in range(1, r + 1):
        wi = w.window[i - 1]
        for j0 in range(1, r + 1):
            lo = (i - j0) // r + 1
            hi = (wi - w.window[j0 - 1] - 1) // r
            if hi >= lo:
                total += hi - lo + 1
    return total


def rho_part(w):
    """Exponent m with w = rho^m * sigma and sigma fixing the window sum."""
    return (sum(w.window) - w.r * (w.r + 1) // 2) // w.r


def is_right_descent(w, i):
    """Whether length(compose(w, s_i)) < length(w)."""
    return w.apply(i) > w.apply(i + 1)


def is_left_descent(w, i):
    """Whether length(compose(s_i, w)) < length(w)."""
    inv = inverse(w)
    return inv.apply(i) > inv.apply(i + 1)


def reduced_word(w):
    """Factor w = rho^m s_{i_1} ... s_{i_k} with k = length(w).

    Returns (m, (i_1, ..., i_k)).  Peels right descents greedily.

    >>> reduced_word(perm(2, [0, 3]))
    (0, (2,))
    >>> reduced_word(rho_power(-3, 4))
    (-3, ())
    """
    m = rho_part(w)
    sigma = compose(rho_power(-m, w.r), w)
    rev = []
    while True:
        i = next(
            (i for i in range(1, sigma.r + 1) if is_right_descent(sigma, i)),
            None,
        )
        if i is None:
            break
        rev.append(i)
        sigma = compose(sigma, generator_s(i, sigma.r))
    if not is_identity(sigma):
        raise AssertionError("descent peeling must end at the identity")
    return m, tuple(reversed(rev))


def text(w):
    return "w = [" + ", ".join(str(x) for x in w.window) + "] @ " + str(w.r)


def to_json(w):
    return {"r": w.r, "window": list(w.window)}


def from_json(obj):
    return perm(int(obj["r"]), obj["window"])


def blocks(lam):
    """Consecutive position blocks of sizes lam[0], lam[1], ... starting at 1.

    >>> blocks((2, 0, 1))
    [[1, 2], [], [3]]
    """
    out = []
    pos = 0
    for part in lam:
        out.append(list(range(pos + 1, pos + part + 1)))
        pos += part
    return out


def is_min_right_coset_rep(d, lam):
    """Whether d is shortest in its coset (block subgroup) * d.

    Holds exactly when the inverse is increasing on every block of lam.

    >>> is_min_right_coset_rep(generator_s(1, 2), (2, 0))
    False
    >>> is_min_right_coset_rep(identity(2), (2, 0))
    True
    """
    if sum(lam) != d.r:
        raise ValueError("composition must sum to the period")
    inv = inverse(d)
    pos = 0
    for part in lam:
        for p in range(pos + 1, pos + part):
            if inv.window[p - 1] > inv.window[p]:
                return False
        pos += part
    return True


def is_min_double_coset_rep(d, lam, mu):
    """Whether d is shortest in (lam subgroup) * d * (mu subgroup)."""
    if sum(mu) != d.r:
        raise ValueError("composition must sum to the period")
    if not is_min_right_coset_rep(d, lam):
        return False
    pos = 0
    for part in mu:
        for p in range(pos + 1, pos + part):
            if d.window[p - 1] > d.window[p]:
                return False
        pos += part
    return True


def jmath(lam, d, mu):
    """Matrix counting |block_k(lam) intersect d(block_l(mu))|.

    The blocks run over all integer shifts; the count is stored at the
    normalized cell.  Requires d shortest in its double coset.

    >>> jmath((1, 1), identity(2), (1, 1)) == M.diag((1, 1))
    True
    >>> jmath((1, 1), perm(2, [0, 3]), (1, 1)).entries
    ((1, 0, 1), (2, 3, 1))
    """
    n = len(lam)
    r = sum(lam)
    if len(mu) != n or sum(mu) != r or d.r != r:
        raise ValueError("compositions must share length and total")
    if not is_min_double_coset_rep(d, lam, mu):
        raise ValueError("d is not the shortest element of its double coset")
    lcum = [0]
    for part in lam:
        lcum.append(lcum[-1] + part)
    items = {}
    pos = 0
    for l0 in range(1, n + 1):
        for p in range(pos + 1, pos + mu[l0 - 1] + 1):
            x = d.window[p - 1]
            t = (x - 1) // r
            x0 = x - t * r
            i0 = bisect_left(lcum, x0)
            key = (i0 + t * n, l0)
            items[key] = items.get(key, 0) + 1
        pos += mu[l0 - 1]
    return M.pmat(n, [(i, j, a) for (i, j), a in items.items()])


def pseudo_matrix_rep(A):
    """Shortest double-coset representative attached to a nonnegative matrix.

    Each cell (i, j) of A is replaced by a run of entry(i, j) consecutive
    integers; row i holds the block of row-sum positions for ro(A), doled
    out left to right.  Reading the runs down columns 1..n, rows top to
    bottom, yields the window.

    >>> pseudo_matrix_rep(M.diag((2, 1))).window
    (1, 2, 3)
    >>> pseudo_matrix_rep(M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2))).window
    (2, 1)
    """
    n = A.n
    r = M.sigma(A)
    if r < 1:
        raise ValueError("matrix must have positive total")
    lam = M.ro(A)
    lcum = [0]
    for part in lam:
        lcum.append(lcum[-1] + part)
    runs = []
    for i0, l0, a in A.entries:
        if a < 0:
            raise ValueError("entries must be nonnegative")
        l_star = (l0 - 1) % n + 1
        k_star = (l_star - l0) // n
        prefix = sum(b for i, t, b in A.entries if i == i0 and t < l0)
        start = k_star * r + lcum[i0 - 1] + prefix
        runs.append((l_star, i0 + k_star * n, [start + s for s in range(1, a + 1)]))
    runs.sort(key=lambda item: (item[0], item[1]))
    window = [x for _, _, run in runs for x in run]
    return perm(r, window)


def length_formula(A):
    """Closed form for length(pseudo_matrix_rep(A)).

    Sums entry(i, j) * entry(k, l) over cell pairs with i in [1, n], i < k
    and j > l; the shifts of each fundamental pair contribute an interval
    of t values, counted exactly.

    >>> length_formula(M.diag((3, 2)))
    0
    >>> length_formula(M.madd(M.e_unit(1, 2, 2), M.e_unit(2, 1, 2)))
    1
    """
    n = A.n
    total = 0
    for i, j, a in A.entries:
        for k0, l0, b in A.entries:
            t_min = (i - k0) // n + 1
            t_max = (j - l0 - 1) // n
            if t_max >= t_min:
                total += a * b * (t_max - t_min + 1)
    return total


def finite_length_formula(w, lam):
    """Length of a shortest coset representative inside the finite group.

    Requires lam with two parts and w a permutation of {1..r} whose inverse
    increases on both blocks; then the length is the total displacement of
    the first block under the inverse.

    >>> finite_length_formula(generator_s(1, 2), (1, 1))
    1
    """
    if len(lam) != 2:
        raise ValueError("composition must have exactly two parts")
    r = w.r
    if sum(lam) != r:
        raise ValueError("composition must sum to the period")
    if any(not 1 <= x <= r for x in w.window):
        raise ValueError("window must be a permutation of 1..r")
    if not is_min_right_coset_rep(w, lam):
        raise ValueError("w is not a shortest coset representative")
    inv = inverse(w)
    return sum(inv.window[i - 1] - i for i in range(1, lam[0] + 1))


def interleaved_composition(mu, beta, case):
    """Refinement of mu splitting block i into two consecutive sub-blocks.

    Case 1 splits off the first mu[i] - beta[i] positions, case 2 the last
    mu[i] - beta[i] positions.
    """
    n = len(mu)
    if len(beta) != n or any(not 0 <= beta[i] <= mu[i] for i in range(n)):
        raise ValueError("beta must satisfy 0 <= beta <= mu componentwise")
    out = []
    for i in range(n):
        rest = mu[i] - beta[i]
        out.extend([rest, beta[i]] if case == 1 else [beta[i], rest])
    return tuple(out)


def enumerate_Ddelta_in_Smu(mu, beta, case):
    """All shortest coset representatives for the refined composition that
    lie in the block subgroup of mu.

    Each element is determined by choosing, per block, which positions'
    values land in the split-off sub-block; the count is the product of
    binomial(mu[i], beta[i]).

    >>> [w.window for w in enumerate_Ddelta_in_Smu((1, 1), (0, 1), 1)]
    [(1, 2)]
    """
    n = len(mu)
    r = sum(mu)
    if case not in (1, 2):
        raise ValueError("case must be 1 or 2")
    if len(beta) != n or any(not 0 <= beta[i] <= mu[i] for i in range(n)):
        raise ValueError("beta must satisfy 0 <= beta <= mu componentwise")
    mu_blocks = blocks(mu)
    per_block = [
        list(itertools.combinations(mu_blocks[i], mu[i] - beta[i]))
        for i in range(n)
    ]
    out = []
    for combo in itertools.product(*per_block):
        invw = [0] * r
        for i in range(n):
            block = mu_blocks[i]
            chosen = list(combo[i])
            rest = sorted(set(block) - set(chosen))
            ordered = chosen + rest if case == 1 else rest + chosen
            start = block[0] - 1 if block else 0
            for s, val in enumerate(ordered):
                invw[start + s] = val
        out.append(inverse(AffinePermutation(r, tuple(invw))))
    return out


def young_subgroup_elements(lam):
    """All window permutations preserving each block of lam."""
    r = sum(lam)
    pieces = [list(itertools.permutations(b)) for b in blocks(lam)]
    out = []
    for combo in itertools.product(*pieces):
        window = [0] * r
        for block, values in zip(blocks(lam), combo):
            for pos, val in zip(block, values):
                window[pos - 1] = val
        out.append(AffinePermutation(r, tuple(window)))
    return out


def double_coset_elements(lam, d, mu):
    """All products u * d * w with u, w in the block subgroups, deduplicated."""
    seen = {}
    mu_elts = young_subgroup_elements(mu)
    for u in young_subgroup_elements(lam):
        ud = compose(u, d)
        for w in mu_elts:
            x = compose(ud, w)
            seen[x.window] = x
    return [seen[key] for key in sorted(seen)]
