"""Exact arithmetic in Q[xi]/(m(xi)) for a monic integer polynomial m."""

from fractions import Fraction
from functools import cached_property

from ..errors import NotInvertible, UsageError, ZeroInverse

# Dense univariate polynomials over Q: lists of Fractions, lowest degree first,
# no trailing zeros.  The empty list is the zero polynomial.


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lead = g[-1]
    while len(f) >= len(g) and f:
        shift = len(f) - len(g)
        c = f[-1] / lead
        q[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] -= c * gi
        _trim(f)
    return _trim(q), f


def poly_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _trim(out)


def poly_sub(f, g):
    n = max(len(f), len(g))
    out = [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)]
    return _trim([Fraction(c) for c in out])


def poly_ext_gcd(f, g):
    """Return (d, s, u) with s*f + u*g = d and d monic (or zero)."""
    r0, r1 = list(f), list(g)
    s0, s1 = [Fraction(1)], []
    u0, u1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        u0, u1 = u1, poly_sub(u0, poly_mul(q, u1))
    if r0:
        lead = r0[-1]
        r0 = [c / lead for c in r0]
        s0 = [c / lead for c in s0]
        u0 = [c / lead for c in u0]
    return r0, s0, u0


class NumberField:
    """The ring Q[xi]/(m) for a monic integer polynomial ``m``.

    ``modulus`` lists the coefficients of m from the constant term up,
    e.g. ``(1, 0, 0, 0, 1)`` for xi^4 + 1.  Irreducibility is the caller's
    responsibility; inversion fails with :class:`NotInvertible` if it
    meets a zero divisor.

    ``sqrt2_sign`` fixes which square root of 2 the name ``sqrt2`` refers
    to when the field is cyclotomic of level 8 (``+1`` gives xi^3 - xi).
    """

    def __init__(self, modulus, name="xi", sqrt2_sign=1):
        modulus = [int(c) for c in modulus]
        if len(modulus) < 2 or modulus[-1] != 1:
            raise UsageError("defining polynomial must be monic of degree >= 1")
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.name = name
        self.sqrt2_sign = 1 if sqrt2_sign >= 0 else -1

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.modulus == other.modulus
            and self.sqrt2_sign == other.sqrt2_sign
        )

    def __hash__(self):
        return hash((self.modulus, self.sqrt2_sign))

    def __repr__(self):
        return f"NumberField({self.modulus!r}, sqrt2_sign={self.sqrt2_sign})"

    def with_sqrt2_sign(self, sign):
        return NumberField(self.modulus, self.name, sign)

    @cached_property
    def _power_table(self):
        # rows: reduction of xi^k for k < 2*degree - 1
        d = self.degree
        table = []
        cur = [Fraction(0)] * d
        cur[0] = Fraction(1)
        for k in range(max(2 * d - 1, 1)):
            table.append(tuple(cur))
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                for i in range(d):
                    nxt[i] -= top * self.modulus[i]
            cur = nxt
        return table

    def element(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = list(self._reduce(coeffs))
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return NFElement(self, tuple(coeffs))

    def _reduce(self, coeffs):
        d = self.degree
        if len(coeffs) <= d:
            return tuple(coeffs) + (Fraction(0),) * (d - len(coeffs))
        table = self._power_table
        if len(coeffs) > len(table):
            # generic fallback by long division
            _, r = poly_divmod(coeffs, [Fraction(c) for c in self.modulus])
            r += [Fraction(0)] * (d - len(r))
            return tuple(r)
        out = list(coeffs[:d])
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = table[k]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def __call__(self, value):
        if isinstance(value, NFElement):
            if value.field.modulus != self.modulus:
                raise UsageError("element belongs to a different number field")
            return NFElement(self, value.coeffs)
        return self.element([value])

    @property
    def zero(self):
        return self.element([0])

    @property
    def one(self):
        return self.element([1])

    @property
    def gen(self):
        if self.degree == 1:
            return self.element([-self.modulus[0]])
        return self.element([0, 1])

    @property
    def sqrt2(self):
        """The distinguished square root of 2 (requires xi^4 + 1 = 0)."""
        if self.modulus != (1, 0, 0, 0, 1):
            raise UsageError("sqrt2 is only defined for the field xi^4 + 1 = 0")
        s = self.element([0, -1, 0, 1])
        return s if self.sqrt2_sign > 0 else -s

    @property
    def i(self):
        if self.modulus != (1, 0, 0, 0, 1):
            raise UsageError("i is only defined for the field xi^4 + 1 = 0")
        return self.element([0, 0, 1])


class NFElement:
    """An element of a :class:`NumberField`; immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, NFElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        if not isinstance(other, NFElement):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return NFElement(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroInverse("inverse of zero in a number field")
        f = list(self.coeffs)
        _trim(f)
        m = [Fraction(c) for c in self.field.modulus]
        d, s, _ = poly_ext_gcd(f, m)
        if d != [1]:
            raise NotInvertible("element shares a factor with the defining polynomial")
        return self.field.element(s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroInverse("division by zero")
            return NFElement(self.field, tuple(a / other for a in self.coeffs))
        if not isinstance(other, NFElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.coeffs == other.coeffs and self.field.modulus == other.field.modulus
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"NFElement({format_nf(self)})"

    def __str__(self):
        return format_nf(self)


def _format_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _join_terms(terms):
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def _scaled(q, symbol):
    if q == 1:
        return symbol
    if q == -1:
        return f"-{symbol}"
    return f"{_format_rational(q)}*{symbol}"


def format_nf(a):
    """Human-readable form; rewrites elements of Q(sqrt2) with ``sqrt2``."""
    field = a.field
    c = a.coeffs
    if a.is_rational():
        return _format_rational(c[0])
    if field.modulus == (1, 0, 0, 0, 1) and c[2] == 0 and c[3] == -c[1]:
        b = c[3] * field.sqrt2_sign
        terms = []
        if c[0]:
            terms.append(_format_rational(c[0]))
        terms.append(_scaled(b, "sqrt2"))
        return _join_terms(terms)
    terms = []
    for k, q in enumerate(c):
        if not q:
            continue
        if k == 0:
            terms.append(_format_rational(q))
        else:
            sym = field.name if k == 1 else f"{field.name}^{k}"
            terms.append(_scaled(q, sym))
    return _join_terms(terms)


class RationalField:
    """Q as a coefficient ring, with the same small interface as NumberField."""

    degree = 1

    def __call__(self, value):
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def cyclotomic8(sqrt2_sign=1):
    """Q(xi) with xi^4 + 1 = 0, the field holding xi, i = xi^2 and sqrt2."""
    return NumberField((1, 0, 0, 0, 1), sqrt2_sign=sqrt2_sign)


def nf_inverse(a):
    return a.inverse()
