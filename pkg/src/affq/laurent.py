"""Exact Laurent polynomial arithmetic over the integers in one variable v.

A Laurent polynomial is a dict mapping exponent (int, possibly negative) to a
nonzero integer coefficient.  The empty dict is zero.  All operations return
fresh dicts and never mutate their arguments.

>>> text(mul(poly({0: 1, 1: 1}), poly({0: -1, 1: 1})))
'-1 + v^2'
>>> text(gauss_sq(2, 1))
'1 + v^2'
>>> text(bar(gauss_sq(2, 1)))
'v^-2 + 1'
"""

from dataclasses import dataclass


def zero():
    return {}


def one():
    return {0: 1}


def monomial(exp, coeff=1):
    if coeff == 0:
        return {}
    return {exp: coeff}


def poly(items):
    """Normalize a dict or iterable of (exp, coeff) pairs, dropping zeros."""
    out = {}
    pairs = items.items() if isinstance(items, dict) else items
    for e, c in pairs:
        c = out.get(e, 0) + c
        if c:
            out[e] = c
        else:
            out.pop(e, None)
    return out


def is_zero(f):
    return not f


def add(f, g):
    out = dict(f)
    for e, c in g.items():
        c = out.get(e, 0) + c
        if c:
            out[e] = c
        else:
            del out[e]
    return out


def neg(f):
    return {e: -c for e, c in f.items()}


def sub(f, g):
    out = dict(f)
    for e, c in g.items():
        c = out.get(e, 0) - c
        if c:
            out[e] = c
        else:
            del out[e]
    return out


def mul(f, g):
    """
    >>> text(mul(poly({1: 2}), poly({-1: 3, 0: 1})))
    '6 + 2*v'
    """
    if len(f) > len(g):
        f, g = g, f
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                del out[e]
    return out


def smul(c, f):
    if c == 0:
        return {}
    return {e: c * k for e, k in f.items()}


def vshift(f, k):
    """Multiply by v^k."""
    return {e + k: c for e, c in f.items()}


def add_inplace(acc, f, scalar=1):
    """acc += scalar * f, mutating acc (a builder-side helper)."""
    if scalar == 0:
        return acc
    for e, c in f.items():
        c = acc.get(e, 0) + scalar * c
        if c:
            acc[e] = c
        else:
            del acc[e]
    return acc


def bar(f):
    """The ring involution v -> v^-1 (negates every exponent).

    >>> bar({2: 1, 0: 3}) == {-2: 1, 0: 3}
    True
    """
    return {-e: c for e, c in f.items()}


def divexact(f, g):
    """Return h with f = g*h, raising ValueError if no such Laurent h exists.

    >>> text(divexact(poly({0: -1, 4: 1}), poly({0: -1, 2: 1})))
    '1 + v^2'
    """
    if not g:
        raise ValueError("division by zero")
    if not f:
        return {}
    gtop = max(g)
    gc = g[gtop]
    # Any exact quotient has exponents in [min(f)-min(g), max(f)-max(g)];
    # without this floor an inexact division would descend forever.
    floor_e = min(f) - min(g)
    rem = dict(f)
    quot = {}
    while rem:
        ftop = max(rem)
        e = ftop - gtop
        if e < floor_e:
            raise ValueError("inexact division")
        c, r = divmod(rem[ftop], gc)
        if r:
            raise ValueError("inexact coefficient division")
        quot[e] = c
        for ge, gcoef in g.items():
            ee = ge + e
            cc = rem.get(ee, 0) - gcoef * c
            if cc:
                rem[ee] = cc
            else:
                rem.pop(ee, None)
    return quot


def text(f):
    """Canonical text form: terms sorted by exponent, e.g. '1 + v^2'.

    >>> text({})
    '0'
    >>> text({-2: 1, 0: -3, 1: 1})
    'v^-2 - 3 + v'
    """
    if not f:
        return "0"
    parts = []
    for e in sorted(f):
        c = f[e]
        if e == 0:
            body = str(abs(c))
        else:
            vpow = "v" if e == 1 else "v^%d" % e
            body = vpow if abs(c) == 1 else "%d*%s" % (abs(c), vpow)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def json_pairs(f):
    """JSON form: [[exponent, coefficient], ...] sorted by exponent."""
    return [[e, f[e]] for e in sorted(f)]


def from_json_pairs(pairs):
    return poly((int(e), int(c)) for e, c in pairs)


# ---------------------------------------------------------------------------
# Gaussian polynomials in v^2 and the related combinatorial quantities.
# ---------------------------------------------------------------------------

def bracket_sq(m):
    """The v^2-integer (v^{2m}-1)/(v^2-1) = 1 + v^2 + ... + v^{2(m-1)}."""
    if m < 0:
        raise ValueError("bracket_sq needs m >= 0")
    return {2 * k: 1 for k in range(m)}


def factorial_sq(t):
    """Product of the v^2-integers 1..t.

    >>> text(factorial_sq(2))
    '1 + v^2'
    """
    out = one()
    for m in range(1, t + 1):
        out = mul(out, bracket_sq(m))
    return out


def gauss_sq(N, t):
    """The v^2 Gaussian binomial: prod_{i=1..t} (v^{2(N-i+1)}-1)/(v^{2i}-1).

    Defined for every integer N and t >= 0; zero when 0 <= N < t.  Each
    prefix of the product is an exact Laurent quotient (a unit multiple of a
    Gaussian polynomial), so the stepwise division below never truncates.

    >>> text(gauss_sq(2, 1))
    '1 + v^2'
    >>> gauss_sq(1, 2)
    {}
    >>> text(gauss_sq(-1, 1))
    '-v^-2'
    """
    if t < 0:
        raise ValueError("gauss_sq needs t >= 0")
    out = one()
    for i in range(1, t + 1):
        num = mul(out, add(monomial(2 * (N - i + 1)), monomial(0, -1)))
        out = divexact(num, add(monomial(2 * i), monomial(0, -1)))
        if not out:
            break
    return out


def gauss_sym(N, t):
    """The bar-invariant Gaussian: v^{-t(N-t)} * gauss_sq(N, t).

    >>> text(gauss_sym(2, 1))
    'v^-1 + v'
    >>> text(gauss_sym(3, 2))
    'v^-2 + 1 + v^2'
    """
    return vshift(gauss_sq(N, t), -t * (N - t))


def vec_gauss_sq(mu, lam):
    """Componentwise product of Gaussians gauss_sq(mu_i, lam_i).

    >>> text(vec_gauss_sq((2, 1), (1, 0)))
    '1 + v^2'
    """
    if len(mu) != len(lam):
        raise ValueError("component count mismatch")
    out = one()
    for m, l in zip(mu, lam):
        out = mul(out, gauss_sq(m, l))
        if not out:
            break
    return out


def multinomial_sq(lam, parts):
    """Componentwise v^2-multinomial of lam into the given list of parts.

    Every part is a vector of the same length as lam and the parts must sum
    to lam componentwise.
    """
    n = len(lam)
    for p in parts:
        if len(p) != n:
            raise ValueError("component count mismatch")
        if any(c < 0 for c in p):
            raise ValueError("negative part")
    for i in range(n):
        if sum(p[i] for p in parts) != lam[i]:
            raise ValueError("parts do not sum to lam")
    num = one()
    for c in lam:
        num = mul(num, factorial_sq(c))
    for p in parts:
        for c in p:
            num = divexact(num, factorial_sq(c))
    return num


def frak_a(beta):
    """prod_i prod_{s=1..beta_i} (v^{2*beta_i} - v^{2(s-1)}).

    >>> text(frak_a((1, 0)))
    '-1 + v^2'
    >>> text(frak_a((2, 0))) == text(mul(poly({0: -1, 4: 1}), poly({2: -1, 4: 1})))
    True
    """
    out = one()
    for b in beta:
        if b < 0:
            raise ValueError("negative component")
        for s in range(1, b + 1):
            out = mul(out, add(monomial(2 * b), monomial(2 * (s - 1), -1)))
    return out


def subset_sum_identity_check(a, r, t):
    """Check sum_{X subset of {a+1..a+r}, |X|=t} v^{2 sum X} against the
    closed form v^{2at+t(t+1)} * gauss_sq(r, t) by explicit enumeration."""
    from itertools import combinations

    if r < 1 or t < 0 or t > r or a < 0:
        raise ValueError("need a >= 0, r >= 1, 0 <= t <= r")
    total = zero()
    for x in combinations(range(a + 1, a + r + 1), t):
        total = add(total, monomial(2 * sum(x)))
    return total == vshift(gauss_sq(r, t), 2 * a * t + t * (t + 1))


# ---------------------------------------------------------------------------
# Fractions of Laurent polynomials.
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LaurentFraction:
    """A quotient num/den of Laurent polynomials with integer coefficients.

    Equality is by cross multiplication; reduction is cosmetic only (common
    monomial and integer content are stripped to keep operands small).
    """

    num: dict
    den: dict

    def __post_init__(self):
        if not self.den:
            raise ValueError("zero denominator")

    def __eq__(self, other):
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return mul(self.num, other.den) == mul(other.num, self.den)

    def __repr__(self):
        if self.den == one():
            return "(%s)" % text(self.num)
        return "(%s) / (%s)" % (text(self.num), text(self.den))


def _strip(num, den):
    from math import gcd

    if not num:
        return {}, one()
    shift = min(min(num), min(den))
    num = vshift(num, -shift)
    den = vshift(den, -shift)
    g = 0
    for c in num.values():
        g = gcd(g, c)
    for c in den.values():
        g = gcd(g, c)
    if max(den) == min(den):
        # Monomial denominator: divide through completely.
        e, c = next(iter(den.items()))
        if all(k % c == 0 for k in num.values()):
            num = {k - e: val // c for k, val in num.items()}
            den = one()
            return num, den
    if g > 1:
        num = {e: c // g for e, c in num.items()}
        den = {e: c // g for e, c in den.items()}
    return num, den


def fraction(num, den=None):
    if den is None:
        den = one()
    num, den = _strip(num, den)
    return LaurentFraction(num, den)


FRAC_ZERO = LaurentFraction({}, {0: 1})
FRAC_ONE = LaurentFraction({0: 1}, {0: 1})


def frac_add(x, y):
    return fraction(add(mul(x.num, y.den), mul(y.num, x.den)), mul(x.den, y.den))


def frac_neg(x):
    return LaurentFraction(neg(x.num), x.den)


def frac_sub(x, y):
    return frac_add(x, frac_neg(y))


def frac_mul(x, y):
    return fraction(mul(x.num, y.num), mul(x.den, y.den))


def frac_div(x, y):
    if not y.num:
        raise ValueError("division by zero fraction")
    return fraction(mul(x.num, y.den), mul(x.den, y.num))


def frac_scale(f, x):
    """Multiply the fraction x by the Laurent polynomial f."""
    return fraction(mul(f, x.num), x.den)


def frac_is_zero(x):
    return not x.num


def frac_to_laurent(x):
    """Clear the denominator, raising ValueError when the value is not a
    Laurent polynomial."""
    return divexact(x.num, x.den)


# ---------------------------------------------------------------------------
# The commutator coefficient of the double Hall algebra presentation.
# ---------------------------------------------------------------------------

def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _compositions_nonzero(gamma, m):
    """Ordered decompositions of gamma into m componentwise-nonnegative
    nonzero summands."""
    n = len(gamma)
    if m == 0:
        if all(c == 0 for c in gamma):
            yield ()
        return
    ranges = [range(c + 1) for c in gamma]
    from itertools import product as iproduct

    for first in iproduct(*ranges):
        if all(c == 0 for c in first):
            continue
        rest = _vec_sub(gamma, first)
        if m == 1:
            if all(c == 0 for c in rest):
                yield (first,)
            continue
        for tail in _compositions_nonzero(rest, m - 1):
            yield (first,) + tail


def x_coeff(alpha, gamma, lam, mu):
    """The coefficient x_{alpha,gamma} in the mixed commutation relation,
    as a LaurentFraction.

    Preconditions: 0 <= gamma <= alpha <= lam componentwise, alpha <= mu,
    alpha != 0.  The inner alternating sum over ordered decompositions of
    gamma is taken to be 1 when gamma = 0.
    """
    from .hall import euler_form

    n = len(alpha)
    if not (len(gamma) == len(lam) == len(mu) == n):
        raise ValueError("component count mismatch")
    if any(g < 0 or g > a for g, a in zip(gamma, alpha)):
        raise ValueError("need 0 <= gamma <= alpha")
    if any(a > l for a, l in zip(alpha, lam)) or any(a > m for a, m in zip(alpha, mu)):
        raise ValueError("need alpha <= lam and alpha <= mu")
    if all(a == 0 for a in alpha):
        raise ValueError("need alpha != 0")

    amg = _vec_sub(alpha, gamma)
    lma = _vec_sub(lam, alpha)
    mma = _vec_sub(mu, alpha)
    exp = (
        euler_form(alpha, lma)
        + euler_form(mu, _vec_sub(tuple(2 * g for g in gamma), alpha))
        + 2 * euler_form(gamma, _vec_sub(amg, lam))
        + 2 * sum(alpha)
    )
    head = monomial(exp)
    head = mul(head, multinomial_sq(lam, [amg, lma, gamma]))
    head = mul(head, multinomial_sq(mu, [amg, mma, gamma]))
    num = mul(head, mul(frak_a(amg), mul(frak_a(lma), frak_a(mma))))
    den = mul(frak_a(lam), frak_a(mu))

    if all(c == 0 for c in gamma):
        inner = one()
    else:
        inner = zero()
        total = sum(gamma)
        for m in range(1, total + 1):
            for decomp in _compositions_nonzero(gamma, m):
                cross = 0
                for i in range(m):
                    for j in range(i + 1, m):
                        cross += euler_form(decomp[i], decomp[j])
                term = monomial(2 * cross, (-1) ** m)
                for part in decomp:
                    term = mul(term, frak_a(part))
                mn = multinomial_sq(gamma, list(decomp))
                term = mul(term, mul(mn, mn))
                inner = add(inner, term)
    return fraction(mul(num, inner), den)
