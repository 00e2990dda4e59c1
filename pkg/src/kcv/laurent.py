"""Sparse Laurent polynomials in one variable.

INPUT/OUTPUT convention: coefficients live in a dict {exponent: coeff}
with no zero values stored.  Exponents may be negative.
"""

from fractions import Fraction


class LaurentPoly:
    __slots__ = ("c",)

    def __init__(self, c=None):
        if c is None:
            c = {}
        self.c = {e: v for e, v in c.items() if v}

    @classmethod
    def var(cls, exp=1):
        return cls({exp: 1})

    @classmethod
    def const(cls, v):
        return cls({0: v})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.c == _coerce(other).c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def coeff(self, e):
        return self.c.get(e, 0)

    def degree(self):
        return max(self.c) if self.c else None

    def subs_square(self):
        """p(x) -> p(x^2)."""
        return LaurentPoly({2 * e: v for e, v in self.c.items()})

    def __call__(self, x):
        return sum(v * x ** e for e, v in self.c.items())

    def bar(self):
        """The involution x -> x^-1."""
        return LaurentPoly({-e: v for e, v in self.c.items()})

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                bits.append(str(v))
            elif e == 1:
                bits.append("%s*x" % v)
            else:
                bits.append("%s*x^%d" % (v, e))
        return " + ".join(bits)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly({0: x})
    raise TypeError("cannot coerce %r" % (x,))
