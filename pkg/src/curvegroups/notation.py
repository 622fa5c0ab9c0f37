"""Text notation for words over named generators.

Grammar (whitespace or ``*`` separates factors)::

    equation := product ("=" product)*
    product  := factor*
    factor   := "-"? atom ("^" "-"? INT)?
    atom     := NAME | "1" | "(" product ")" | "[" product "," product "]"

A NAME is a generator, or a generator name in upper case meaning its
inverse (``X`` is x^-1 when ``X`` is not itself a generator).  A run of
single-letter generators may be written without spaces (``xyXY``).
``[a,b]`` expands as a b a^-1 b^-1 under the default convention.
"""

import re

from .errors import ParseError, UnknownGenerator
from .words import Word

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\^\-\[\],()=*.]))")

CONVENTIONS = ("aba^-1b^-1", "a^-1b^-1ab")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}")
        pos = m.end()
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
    return out


class _Parser:
    def __init__(self, text, gens, convention):
        self.toks = _tokenize(text)
        self.i = 0
        self.gens = {g: k for k, g in enumerate(gens)}
        self.text = text
        self.convention = convention

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'a token'} in {self.text!r}")
        self.i += 1
        return tok

    def equation(self):
        sides = [self.product()]
        while self.peek()[1] == "=":
            self.take("=")
            sides.append(self.product())
        if self.peek()[0] is not None:
            raise ParseError(f"unexpected {self.peek()[1]!r} in {self.text!r}")
        return sides

    def product(self):
        w = Word()
        while True:
            kind, val = self.peek()
            if kind is None or val in ("=", ",", "]", ")"):
                return w
            if val in ("*", "."):
                self.take()
                continue
            w = w * self.factor()

    def factor(self):
        invert = False
        if self.peek()[1] == "-":
            self.take("-")
            invert = True
        w = self.atom()
        if self.peek()[1] == "^":
            self.take("^")
            sign = 1
            if self.peek()[1] == "-":
                self.take("-")
                sign = -1
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"expected an integer exponent in {self.text!r}")
            w = w ** (sign * int(val))
        return w.inverse() if invert else w

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            if val != "1":
                raise ParseError(f"bare integer {val!r} in {self.text!r}")
            return Word()
        if val == "(":
            w = self.product()
            self.take(")")
            return w
        if val == "[":
            a = self.product()
            self.take(",")
            b = self.product()
            self.take("]")
            if self.convention == "aba^-1b^-1":
                return a * b * a.inverse() * b.inverse()
            return a.inverse() * b.inverse() * a * b
        if kind == "name":
            return self.name(val)
        raise ParseError(f"unexpected {val!r} in {self.text!r}")

    def name(self, val):
        if val in self.gens:
            return Word.gen(self.gens[val])
        low = val.lower()
        if low != val and low in self.gens:
            return Word.gen(self.gens[low], -1)
        # run of single-letter generators
        letters = []
        for ch in val:
            if ch in self.gens:
                letters.append(self.gens[ch] + 1)
            elif ch.lower() in self.gens and ch.lower() != ch:
                letters.append(-(self.gens[ch.lower()] + 1))
            else:
                raise UnknownGenerator(f"unknown generator {val!r} in {self.text!r}")
        return Word(letters)


def parse_equation(text, gens, convention="aba^-1b^-1"):
    """Parse ``lhs = rhs = ...`` into relators lhs*rhs^-1, ...; a bare word
    gives itself."""
    if convention not in CONVENTIONS:
        raise ParseError(f"unknown commutator convention {convention!r}")
    sides = _Parser(text, gens, convention).equation()
    if len(sides) == 1:
        return [sides[0]]
    return [a * b.inverse() for a, b in zip(sides, sides[1:])]


def parse_word(text, gens, convention="aba^-1b^-1"):
    sides = _Parser(text, gens, convention).equation()
    if len(sides) != 1:
        raise ParseError(f"expected a word, got an equation: {text!r}")
    return sides[0]


def format_word(w, gens):
    if not w:
        return "1"
    parts = []
    for g, e in Word(w).syllables():
        name = gens[g]
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts)
