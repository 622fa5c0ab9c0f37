"""Univariate Laurent polynomials over Q or a number field.

Laurent polynomials over a field form a Euclidean domain whose units are
the monomials c*t^k.  Every nonzero polynomial has a unique unit-normalized
associate: lowest exponent 0 and leading coefficient 1.  Comparisons "up to
units" therefore reduce to ``a.normalized() == b.normalized()``.
"""

from fractions import Fraction

from ..errors import NotDivisible
from .numberfield import QQ, NFElement, format_nf


def _format_coeff(c):
    if isinstance(c, NFElement):
        return format_nf(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    __slots__ = ("terms", "ring", "var", "_hash")

    def __init__(self, terms=None, ring=QQ, var="t"):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = ring(c) if not isinstance(c, NFElement) else c
                if c:
                    clean[int(e)] = c
        self.terms = clean
        self.ring = ring
        self.var = var
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c, ring=QQ, var="t"):
        return cls({0: c}, ring, var)

    @classmethod
    def monomial(cls, exponent, c=1, ring=QQ, var="t"):
        return cls({exponent: c}, ring, var)

    @classmethod
    def from_coeffs(cls, coeffs, ring=QQ, var="t", shift=0):
        """Coefficients listed from the lowest exponent ``shift`` upward."""
        return cls({shift + i: c for i, c in enumerate(coeffs)}, ring, var)

    def _new(self, terms):
        return LaurentPoly(terms, self.ring, self.var)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return self._new({0: other})
        return None

    # inspection
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def min_exp(self):
        return min(self.terms) if self.terms else 0

    @property
    def max_exp(self):
        return max(self.terms) if self.terms else 0

    @property
    def span(self):
        """Euclidean norm: max exponent minus min exponent (-1 for zero)."""
        return self.max_exp - self.min_exp if self.terms else -1

    @property
    def leading_coeff(self):
        return self.terms[self.max_exp]

    def is_unit(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def coeff(self, e):
        return self.terms.get(e, self.ring.zero)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            if not other:
                return self._new({})
            return self._new({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise NotDivisible("only monomials have Laurent inverses")
            ((e, c),) = self.terms.items()
            return self._new({e * n: c ** n if isinstance(c, NFElement) else Fraction(c) ** n})
        result = self._new({0: self.ring.one})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        return self._new({e + k: c for e, c in self.terms.items()})

    def map_coeffs(self, fn, ring=None):
        return LaurentPoly({e: fn(c) for e, c in self.terms.items()}, ring or self.ring, self.var)

    def substitute_sign(self):
        """t -> -t."""
        return self._new({e: (-c if e % 2 else c) for e, c in self.terms.items()})

    # Euclidean structure
    def _as_poly(self):
        lo = self.min_exp
        return [self.terms.get(lo + i, self.ring.zero) for i in range(self.span + 1)], lo

    def divmod(self, other):
        """Euclidean division in the Laurent ring: ``self = q*other + r``
        with ``r.span < other.span`` (r has the same lowest exponent as self)."""
        if not other:
            raise ZeroDivisionError("Laurent division by zero")
        if not self:
            return self._new({}), self._new({})
        f, lo_f = self._as_poly()
        g, lo_g = other._as_poly()
        f = list(f)
        lead = g[-1]
        q = {}
        while len(f) >= len(g):
            c = f[-1]
            k = len(f) - len(g)
            if c:
                c = c / lead
                q[k] = c
                for i, gi in enumerate(g):
                    if gi:
                        f[k + i] = f[k + i] - c * gi
            f.pop()
            while f and not f[-1]:
                f.pop()
        rem = {lo_f + i: c for i, c in enumerate(f) if c}
        quo = {k + lo_f - lo_g: c for k, c in q.items()}
        return self._new(quo), self._new(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise NotDivisible(f"{other} does not divide {self}")
        return q

    def divides(self, other):
        if not self:
            return not other
        return not other.divmod(self)[1]

    def normalized(self):
        """Unit-normalized associate: lowest exponent 0, monic."""
        if not self.terms:
            return self
        lo = self.min_exp
        lead = self.leading_coeff
        inv = lead.inverse() if isinstance(lead, NFElement) else 1 / Fraction(lead)
        return self._new({e - lo: c * inv for e, c in self.terms.items()})

    def normalization_unit(self):
        """(exponent shift, scalar) such that normalized() == scalar * t^shift * self."""
        lead = self.leading_coeff
        inv = lead.inverse() if isinstance(lead, NFElement) else 1 / Fraction(lead)
        return -self.min_exp, inv

    def gcd(self, other):
        return laurent_gcd(self, other)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_laurent(self)


def laurent_gcd(f, g):
    """Unit-normalized gcd; ``laurent_gcd(0, 0) == 0``."""
    a, b = f, g
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    return a.normalized()


def format_laurent(p):
    if not p.terms:
        return "0"
    parts = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        cs = _format_coeff(c)
        compound = (" + " in cs) or (" - " in cs[1:])
        if e == 0:
            mono = ""
        elif e == 1:
            mono = p.var
        else:
            mono = f"{p.var}^{e}"
        if not mono:
            term = f"({cs})" if compound else cs
        elif cs == "1":
            term = mono
        elif cs == "-1":
            term = f"-{mono}"
        elif compound:
            term = f"({cs})*{mono}"
        else:
            term = f"{cs}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out
