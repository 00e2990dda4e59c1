"""Tiny exact cyclotomic numbers: elements of Q(zeta_N).

Stored as Fraction coefficient dicts over powers of zeta_N; equality
and rationality reduce modulo the N-th cyclotomic polynomial.
"""

from fractions import Fraction
from functools import lru_cache


def _poly_divmod(a, b):
    """Quotient/remainder of Fraction coefficient lists (low to high)."""
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    while a and not a[-1]:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of Phi_n, low to high."""
    # x^n - 1 divided by all Phi_d, d | n, d < n
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_poly(d))
            assert not rem
    return tuple(num)


class Cyc:
    """A number in Q(zeta_N)."""

    __slots__ = ("N", "c")

    def __init__(self, N, c=None):
        self.N = N
        self.c = {}
        if c:
            for e, v in c.items():
                v = Fraction(v)
                if v:
                    self.c[e % N] = self.c.get(e % N, Fraction(0)) + v

    @classmethod
    def zeta(cls, N, k=1):
        return cls(N, {k: 1})

    def _reduced(self):
        """Unique representative mod Phi_N, as a coefficient list."""
        a = [Fraction(0)] * self.N
        for e, v in self.c.items():
            a[e] += v
        phi = list(cyclotomic_poly(self.N))
        _, rem = _poly_divmod(a, phi)
        return rem

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, Fraction(0)) + v
        return Cyc(self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.N, {e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = (e1 + e2) % self.N
                out[e] = out.get(e, Fraction(0)) + v1 * v2
        return Cyc(self.N, out)

    __rmul__ = __mul__

    def conj(self):
        return Cyc(self.N, {-e: v for e, v in self.c.items()})

    def _coerce(self, x):
        if isinstance(x, Cyc):
            if x.N != self.N:
                raise ValueError("mixed cyclotomic orders")
            return x
        return Cyc(self.N, {0: Fraction(x)})

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other)._reduced() == []

    def is_rational(self):
        r = self._reduced()
        return len(r) <= 1

    def rational(self):
        r = self._reduced()
        if len(r) > 1:
            raise ValueError("not rational: %r" % (self.c,))
        return r[0] if r else Fraction(0)

    def __repr__(self):
        if self.is_rational():
            return "Cyc(%s)" % self.rational()
        return "Cyc(N=%d, %s)" % (self.N, self.c)
