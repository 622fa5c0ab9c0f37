"""Bivariate Laurent polynomials with integer coefficients.

Used for the classical two-variable Alexander matrix.  Division and gcd go
through a nested representation: a polynomial in the first variable whose
coefficients are univariate Laurent polynomials (over Q) in the second.
"""

from fractions import Fraction
from functools import reduce
from math import gcd as igcd, lcm as ilcm

from ..errors import NotDivisible
from .laurent import LaurentPoly, laurent_gcd
from .numberfield import QQ


class BiLaurentPoly:
    __slots__ = ("terms", "vars", "_hash")

    def __init__(self, terms=None, vars=("t1", "t2")):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if isinstance(c, Fraction):
                    if c.denominator != 1:
                        raise ValueError("BiLaurentPoly coefficients must be integers")
                    c = c.numerator
                c = int(c)
                if c:
                    clean[(int(a), int(b))] = c
        self.terms = clean
        self.vars = tuple(vars)
        self._hash = None

    @classmethod
    def constant(cls, c, vars=("t1", "t2")):
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, a, b, c=1, vars=("t1", "t2")):
        return cls({(a, b): c}, vars)

    @classmethod
    def variables(cls, vars=("t1", "t2")):
        return cls.monomial(1, 0, vars=vars), cls.monomial(0, 1, vars=vars)

    def _new(self, terms):
        return BiLaurentPoly(terms, self.vars)

    def _coerce(self, other):
        if isinstance(other, BiLaurentPoly):
            return other
        if isinstance(other, int):
            return self._new({(0, 0): other})
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, BiLaurentPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise NotDivisible("only signed monomials are invertible")
            ((a, b), c) = next(iter(self.terms.items()))
            return self._new({(a * n, b * n): c ** abs(n)})
        result = self._new({(0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def is_unit(self):
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_unit_over_q(self):
        return len(self.terms) == 1

    def content(self):
        return reduce(igcd, self.terms.values(), 0)

    def normalized(self):
        """Associate with minimal exponents 0 and positive lex-leading coefficient."""
        if not self.terms:
            return self
        ma = min(a for a, _ in self.terms)
        mb = min(b for _, b in self.terms)
        lead = self.terms[max(self.terms)]
        sign = 1 if lead > 0 else -1
        return self._new({(a - ma, b - mb): sign * c for (a, b), c in self.terms.items()})

    def exact_div(self, other):
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return self._new({})
        q = _from_nested(_nested_exact_div(_to_nested(self), _to_nested(other)), self.vars)
        if q * other != self:
            raise NotDivisible(f"{other} does not divide {self}")
        return q

    def gcd(self, other):
        return bilaurent_gcd(self, other)

    def evaluate(self, t1, t2):
        return sum(c * Fraction(t1) ** a * Fraction(t2) ** b for (a, b), c in self.terms.items())

    def __repr__(self):
        return f"BiLaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        v1, v2 = self.vars
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            c = self.terms[(a, b)]
            mono = []
            if a:
                mono.append(v1 if a == 1 else f"{v1}^{a}")
            if b:
                mono.append(v2 if b == 1 else f"{v2}^{b}")
            m = "*".join(mono)
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(m)
            elif c == -1:
                parts.append(f"-{m}")
            else:
                parts.append(f"{c}*{m}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# nested representation: {exponent of first variable: LaurentPoly over Q in the second}

def _to_nested(f):
    out = {}
    for (a, b), c in f.terms.items():
        out.setdefault(a, {})[b] = c
    return {a: LaurentPoly(d, QQ, f.vars[1]) for a, d in out.items()}


def _from_nested(n, vars):
    terms = {}
    for a, p in n.items():
        for b, c in p.terms.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise NotDivisible("non-integral result")
            terms[(a, b)] = c.numerator
    return BiLaurentPoly(terms, vars)


def _nested_clean(n):
    return {a: p for a, p in n.items() if p}


def _nested_exact_div(f, g):
    lo_f, lo_g = min(f), min(g)
    f = {a - lo_f: p for a, p in f.items()}
    g = {a - lo_g: p for a, p in g.items()}
    dg = max(g)
    lead = g[dg]
    q = {}
    while f and max(f) >= dg:
        df = max(f)
        c = f[df].exact_div(lead)
        k = df - dg
        q[k] = c
        for a, p in g.items():
            key = a + k
            f[key] = f[key] - c * p if key in f else -(c * p)
        f = _nested_clean(f)
    if f:
        raise NotDivisible("inexact bivariate division")
    return {k + lo_f - lo_g: c for k, c in q.items()}


def _nested_content(n):
    return reduce(laurent_gcd, n.values(), LaurentPoly({}, QQ))


def _nested_primitive(n):
    c = _nested_content(n)
    return {a: p.exact_div(c) for a, p in n.items()}, c


def _nested_prem(a, b):
    """Pseudo-remainder of a by b in the first variable (both shifted to
    nonnegative exponents)."""
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        k = dr - db
        new = {e: p * lb for e, p in r.items()}
        for e, p in b.items():
            key = e + k
            new[key] = new[key] - lr * p if key in new else -(lr * p)
        r = _nested_clean(new)
    return r


def _shift_nested(n):
    lo = min(n)
    return {a - lo: p for a, p in n.items()}


def _rational_to_integral(n, vars):
    """Clear denominators and integer content of a nested Q-polynomial."""
    den = 1
    num_gcd = 0
    for p in n.values():
        for c in p.terms.values():
            c = Fraction(c)
            den = ilcm(den, c.denominator)
    for p in n.values():
        for c in p.terms.values():
            num_gcd = igcd(num_gcd, (Fraction(c) * den).numerator)
    scale = Fraction(den, num_gcd or 1)
    return _from_nested({a: p * scale for a, p in n.items()}, vars)


def bilaurent_gcd(f, g):
    """gcd in Z[t1^+-1, t2^+-1], normalized; gcd(0, 0) = 0."""
    if not f:
        return g.normalized() if g else g
    if not g:
        return f.normalized()
    int_content = igcd(f.content(), g.content())
    A = _shift_nested(_to_nested(f))
    B = _shift_nested(_to_nested(g))
    A, ca = _nested_primitive(A)
    B, cb = _nested_primitive(B)
    c = laurent_gcd(ca, cb)
    if max(A) < max(B):
        A, B = B, A
    while True:
        if max(B) == 0:
            prim = {0: LaurentPoly({0: 1}, QQ, f.vars[1])}
            break
        R = _nested_prem(A, B)
        if not R:
            prim = B
            break
        A, B = B, _nested_primitive(_shift_nested(R))[0]
    result = _rational_to_integral({a: p * c for a, p in prim.items()}, f.vars)
    return (result * int_content).normalized()
