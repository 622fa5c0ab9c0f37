"""Bounded search for relator-consequence certificates.

A certificate writes a word as a product of conjugates ``c r^e c^-1`` of
relators.  It is checked by free reduction alone, so a returned certificate
is never a false positive.
"""

from dataclasses import dataclass
from itertools import product

from .words import Word


@dataclass(frozen=True)
class Certificate:
    """Factors are (conjugator, relator index, sign) triples."""

    factors: tuple

    @property
    def depth(self):
        return len(self.factors)

    def expand(self, relators):
        out = Word()
        for c, i, e in self.factors:
            c = Word(c)
            out = out * c * (relators[i] ** e) * c.inverse()
        return out

    def verify(self, relators, w):
        return self.expand(relators) == Word(w)


@dataclass(frozen=True)
class ConsequenceResult:
    certificate: Certificate = None

    @property
    def found(self):
        return self.certificate is not None

    @property
    def verdict(self):
        return "witness" if self.found else "inconclusive"


def _conjugators(rank, width):
    letters = [x for i in range(rank) for x in (i + 1, -(i + 1))]
    out = [Word()]
    for n in range(1, width + 1):
        for tup in product(letters, repeat=n):
            w = Word(tup)
            if len(w) == n:
                out.append(w)
    return out


def consequence_check_bounded(P, w, depth=2, width=2):
    """Breadth-first search for ``w`` as a product of at most ``depth``
    conjugated relators with conjugators of length at most ``width``."""
    w = P.word(w)
    if not w:
        return ConsequenceResult(Certificate(()))
    rels = P.relators
    conj = []
    table = {}
    for c in _conjugators(P.rank, width):
        for i, r in enumerate(rels):
            if not r:
                continue
            for e in (1, -1):
                value = c * (r ** e) * c.inverse()
                conj.append(((c, i, e), value))
                table.setdefault(value, (c, i, e))

    def search(target, remaining, prefix):
        if remaining == 1:
            hit = table.get(target)
            return prefix + (hit,) if hit is not None else None
        for factor, value in conj:
            found = search(value.inverse() * target, remaining - 1, prefix + (factor,))
            if found is not None:
                return found
        return None

    for d in range(1, depth + 1):
        factors = search(w, d, ())
        if factors is not None:
            cert = Certificate(tuple(factors))
            if cert.verify(rels, w):
                return ConsequenceResult(cert)
    return ConsequenceResult(None)
