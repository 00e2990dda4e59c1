"""Symbols attached to bipartitions, and the closed-form multiplicity
formula for the involution-module characters of the extended group.

A bipartition (alpha, beta) of n (decreasing tuples, matching the
character table labels) gets a two-row symbol: pad both partitions to a
common length m, write them weakly increasing, and set
lambda_i = alpha_i + i - 1, mu_i = beta_i + i - 1.  All derived
invariants are independent of the padding length.
"""

from math import comb

from .errors import UnsupportedType


def _rows(alpha, beta, m=None):
    """Increasing padded rows (lambda, mu) of the symbol."""
    need = max(len(alpha), len(beta), 1)
    if m is None:
        m = need
    if m < need:
        raise ValueError("padding length too small")
    a = sorted(alpha) if len(alpha) == m else \
        [0] * (m - len(alpha)) + sorted(alpha)
    b = sorted(beta) if len(beta) == m else \
        [0] * (m - len(beta)) + sorted(beta)
    lam = tuple(a[i] + i for i in range(m))
    mu = tuple(b[i] + i for i in range(m))
    return lam, mu


def symbol(alpha, beta, m=None):
    return _rows(alpha, beta, m)


def c_invariant(alpha, beta, m=None):
    """Number of lower-row entries not present in the upper row."""
    lam, mu = _rows(alpha, beta, m)
    ls = set(lam)
    return sum(1 for x in mu if x not in ls)


def d0_invariant(alpha, beta, m=None):
    """beta_1 + sum over i >= 2 of max(alpha_{i-1}, beta_i), in the
    increasing convention."""
    need = max(len(alpha), len(beta), 1)
    if m is None:
        m = need
    a = [0] * (m - len(alpha)) + sorted(alpha)
    b = [0] * (m - len(beta)) + sorted(beta)
    return b[0] + sum(max(a[i - 1], b[i]) for i in range(1, m))


def a_diamond(alpha, beta, m=None):
    """Sum of min over unordered pairs of symbol entries, normalised so
    the trivial bipartition gets 0."""
    lam, mu = _rows(alpha, beta, m)

    def raw(top, bot):
        k = len(top)
        tot = sum(min(top[i], top[j]) for i in range(k)
                  for j in range(i + 1, k))
        tot += sum(min(bot[i], bot[j]) for i in range(k)
                   for j in range(i + 1, k))
        tot += sum(min(x, y) for x in top for y in bot)
        return tot

    base = tuple(range(len(lam)))
    return raw(lam, mu) - raw(base, base)


def is_diamond_special(alpha, beta, m=None):
    """mu_1 <= lambda_1 <= mu_2 <= ... <= mu_m <= lambda_m."""
    lam, mu = _rows(alpha, beta, m)
    for i in range(len(lam)):
        if mu[i] > lam[i]:
            return False
        if i + 1 < len(lam) and lam[i] > mu[i + 1]:
            return False
    return True


def is_preferred_extension(alpha, beta, m=None):
    """The smallest entry appearing in only one row sits in the lower
    row.  Only defined for alpha != beta."""
    if tuple(alpha) == tuple(beta):
        raise UnsupportedType("preferred extension needs alpha != beta")
    lam, mu = _rows(alpha, beta, m)
    singles = set(lam).symmetric_difference(mu)
    return min(singles) in set(mu)


def sigma_word(n, l, j):
    """Reduced word (in the extended group's generators t=0, s_i=i) of
    the standard involution with l sign flips and j transpositions."""
    if l < 0 or j < 0 or l + 2 * j > n:
        raise ValueError("need l + 2j <= n")
    word = []
    for i in range(1, l + 1):
        # t_i = s_{i-1} ... s_1 t s_1 ... s_{i-1}
        word.extend(range(i - 1, 0, -1))
        word.append(0)
        word.extend(range(1, i))
    for k in range(j):
        word.append(l + 2 * k + 1)
    return word


def involution_class_data(n):
    """All (l, j) with l + 2j <= n, the class representatives of the
    involutions of the extended group."""
    return [(l, j) for l in range(n + 1) for j in range((n - l) // 2 + 1)]


def closed_form_upsilon(n, l, j):
    """Predicted multiplicities of the modified involution character on
    the class of sigma_{l,j}: {(alpha, beta): binom(c, j+l-d0)} over
    diamond-special bipartition labels with |beta| = j."""
    from .chartable import bipartitions
    out = {}
    for alpha, beta in bipartitions(n):
        if sum(beta) != j or not is_diamond_special(alpha, beta):
            continue
        mult = comb(c_invariant(alpha, beta),
                    j + l - d0_invariant(alpha, beta)) \
            if d0_invariant(alpha, beta) <= j + l <= \
            d0_invariant(alpha, beta) + c_invariant(alpha, beta) else 0
        if mult:
            out[(alpha, beta)] = mult
    return out
