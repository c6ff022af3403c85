"""Periodic ZxZ integer matrices with period n.

A matrix A = (a_{i,j}) indexed by i,j in Z satisfies a_{i,j} = a_{i+n,j+n}
and has finitely many nonzero entries per period.  It is stored by one
fundamental-domain representative per orbit: the entry with row index in
[1, n].  Entries may be negative (intermediate results of the product
formulas need that); predicates gate membership in the nonnegative cone and
its upper/lower/zero-diagonal slices.

Row sums, column sums, the total sigma, the row-shift tilde, the transpose,
the +/0/- splitting, the exponent d_A of the normalized Schur basis, and the
two partial orders all live here.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PeriodicMatrix:
    n: int
    entries: tuple  # sorted tuple of (i, j, a) with 1 <= i <= n, a != 0

    def entry(self, i, j):
        """The entry a_{i,j} for arbitrary integers i, j."""
        i0 = (i - 1) % self.n + 1
        shift = i - i0
        j0 = j - shift
        for ei, ej, a in self.entries:
            if ei == i0 and ej == j0:
                return a
        return 0

    def __repr__(self):
        if not self.entries:
            return "pmat(%d, [])" % self.n
        body = ", ".join("(%d,%d):%d" % (i, j, a) for i, j, a in self.entries)
        return "pmat(%d, {%s})" % (self.n, body)


def pmat(n, items=()):
    """Build a PeriodicMatrix from {(i, j): a} or an iterable of (i, j, a);
    indices are reduced to the fundamental domain and zeros dropped."""
    if n < 2:
        raise ValueError("period must be at least 2")
    acc = {}
    pairs = (
        ((i, j, a) for (i, j), a in items.items())
        if isinstance(items, dict)
        else items
    )
    for i, j, a in pairs:
        i0 = (i - 1) % n + 1
        j0 = j - (i - i0)
        key = (i0, j0)
        val = acc.get(key, 0) + a
        if val:
            acc[key] = val
        else:
            acc.pop(key, None)
    return PeriodicMatrix(n, tuple(sorted((i, j, a) for (i, j), a in acc.items())))


def e_unit(i, j, n):
    """The matrix with a single orbit of ones through (i, j)."""
    return pmat(n, [(i, j, 1)])


def diag(mu):
    """The diagonal matrix with period-one diagonal mu (a vector)."""
    return pmat(len(mu), [(i + 1, i + 1, c) for i, c in enumerate(mu) if c])


def s_alpha(alpha):
    """The superdiagonal matrix sum_i alpha_i E_{i,i+1}."""
    return pmat(len(alpha), [(i + 1, i + 2, c) for i, c in enumerate(alpha) if c])


def t_s_alpha(alpha):
    """The subdiagonal matrix sum_i alpha_i E_{i+1,i}."""
    return pmat(len(alpha), [(i + 2, i + 1, c) for i, c in enumerate(alpha) if c])


def madd(A, B):
    if A.n != B.n:
        raise ValueError("period mismatch")
    return pmat(A.n, list(A.entries) + list(B.entries))


def msub(A, B):
    if A.n != B.n:
        raise ValueError("period mismatch")
    return pmat(A.n, list(A.entries) + [(i, j, -a) for i, j, a in B.entries])


def mscale(c, A):
    return pmat(A.n, [(i, j, c * a) for i, j, a in A.entries])


def transpose(A):
    return pmat(A.n, [(j, i, a) for i, j, a in A.entries])


def tilde(A):
    """Row shift: the matrix with entries a_{i-1,j} at position (i,j)."""
    return pmat(A.n, [(i + 1, j, a) for i, j, a in A.entries])


def sigma(A):
    """Sum of all fundamental-domain entries (the size of the matrix)."""
    return sum(a for _, _, a in A.entries)


def ro(A):
    """Row sums over the fundamental rows 1..n."""
    out = [0] * A.n
    for i, _, a in A.entries:
        out[i - 1] += a
    return tuple(out)


def co(A):
    """Column sums over columns 1..n, gathering all periodic copies."""
    out = [0] * A.n
    for _, j, a in A.entries:
        out[(j - 1) % A.n] += a
    return tuple(out)


def split(A):
    """Return (A_plus, A_zero, A_minus): strictly upper, diagonal, strictly
    lower parts.  The sign of j - i is shift invariant, so the test on the
    fundamental representative is well defined."""
    up, dg, lo = [], [], []
    for i, j, a in A.entries:
        (up if j > i else dg if j == i else lo).append((i, j, a))
    return pmat(A.n, up), pmat(A.n, dg), pmat(A.n, lo)


def offdiag(A):
    """A with its diagonal removed (the two strict triangles)."""
    return pmat(A.n, [(i, j, a) for i, j, a in A.entries if i != j])


def is_nonneg(A):
    return all(a >= 0 for _, _, a in A.entries)


def is_diagonal(A):
    return all(i == j for i, j, a in A.entries)


def is_strictly_upper(A):
    return all(j > i for i, j, a in A.entries)


def is_strictly_lower(A):
    return all(j < i for i, j, a in A.entries)


def is_zero_diagonal(A):
    return all(i != j for i, j, a in A.entries)


def d_exponent(A):
    """The exponent d_A = sum over pairs a_{i,j} a_{k,l} with k <= i, l > j,
    counting all periodic shifts of the second index pair.

    For fundamental entries (i,j) and (k0,l0), the shifts s with
    k0+sn <= i and l0+sn > j form the integer interval
    (j-l0)/n < s <= (i-k0)/n, of size (i-k0)//n - (j-l0)//n when positive.
    """
    if not is_nonneg(A):
        raise ValueError("d_exponent needs a nonnegative matrix")
    n = A.n
    total = 0
    for i, j, a in A.entries:
        for k0, l0, b in A.entries:
            cnt = (i - k0) // n - (j - l0) // n
            if cnt > 0:
                total += a * b * cnt
    return total


def leq_componentwise(alpha, beta):
    if len(alpha) != len(beta):
        raise ValueError("component count mismatch")
    return all(x <= y for x, y in zip(alpha, beta))


def corner_upper(A, i, j):
    """sum_{s <= i, t >= j} a_{s,t} (finite by periodicity)."""
    n = A.n
    total = 0
    for s0, t0, a in A.entries:
        cnt = (i - s0) // n + (t0 - j) // n + 1
        if cnt > 0:
            total += a * cnt
    return total


def corner_lower(A, i, j):
    """sum_{s >= i, t <= j} a_{s,t}."""
    n = A.n
    total = 0
    for s0, t0, a in A.entries:
        cnt = (j - t0) // n + (s0 - i) // n + 1
        if cnt > 0:
            total += a * cnt
    return total


def preceq(A, B):
    """The dominance-style order: A precedes B when every upper corner sum
    (i < j) and every lower corner sum (i > j) of A is bounded by the same
    sum of B.  By periodicity only one period of (i, j) pairs needs checking,
    with the second index swept to the supports' reach."""
    if A.n != B.n:
        raise ValueError("period mismatch")
    n = A.n
    support = A.entries + B.entries
    if not support:
        return True
    for i in range(1, n + 1):
        jmax = max((t0 + n * ((i - s0) // n) for s0, t0, _ in support), default=i)
        for j in range(i + 1, jmax + 1):
            if corner_upper(A, i, j) > corner_upper(B, i, j):
                return False
    for j in range(1, n + 1):
        imax = max((s0 + n * ((j - t0) // n) for s0, t0, _ in support), default=j)
        for i in range(j + 1, imax + 1):
            if corner_lower(A, i, j) > corner_lower(B, i, j):
                return False
    return True


def compositions_bounded(caps):
    """All integer vectors x with 0 <= x_i <= caps[i], lexicographic order.

    >>> list(compositions_bounded((1, 2)))
    [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    """
    if not all(c >= 0 for c in caps):
        raise ValueError("caps must be nonnegative")
    if not caps:
        yield ()
        return
    for x in range(caps[0] + 1):
        for rest in compositions_bounded(caps[1:]):
            yield (x,) + rest


def dot(a, b):
    """Componentwise dot product of two integer vectors."""
    if len(a) != len(b):
        raise ValueError("vector length mismatch")
    return sum(x * y for x, y in zip(a, b))


def row_support(A, i):
    """Sorted (column, value) pairs of row i, for any integer row index."""
    i0 = (i - 1) % A.n + 1
    shift = i - i0
    return sorted((j + shift, a) for k, j, a in A.entries if k == i0)


def column_parts(A):
    """Composition refining co(A): the entries of each fundamental column,
    top to bottom, concatenated over columns 1..n."""
    out = []
    for l in range(1, A.n + 1):
        rows = sorted((i + l - j, a) for i, j, a in A.entries if (j - l) % A.n == 0)
        out.extend(a for _, a in rows)
    return tuple(out)


def to_json(A):
    return {"n": A.n, "entries": [[i, j, a] for i, j, a in A.entries]}


def from_json(obj):
    return pmat(int(obj["n"]), [(int(i), int(j), int(a)) for i, j, a in obj["entries"]])


def compositions(n, r):
    """All vectors in N^n with component sum r, in lexicographic order."""
    if n == 1:
        yield (r,)
        return
    for head in range(r + 1):
        for tail in compositions(n - 1, r - head):
            yield (head,) + tail


def band_matrices(n, r, band):
    """All nonnegative periodic matrices of size r supported on the band
    |j - i| <= band (fundamental rows)."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(i - band, i + band + 1)]
    for values in compositions(len(cells), r):
        yield pmat(n, [(i, j, a) for (i, j), a in zip(cells, values) if a])
