"""Finitely presented groups and their basic constructors."""

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.smith import smith_normal_form
from .errors import BadConeOrder, UnknownGenerator, UsageError
from .notation import format_word, parse_equation, parse_word
from .words import Word


class Presentation:
    """Generators (unique names) and cyclically reduced relators."""

    __slots__ = ("gens", "relators", "name")

    def __init__(self, gens, relators=(), name=None):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise UsageError(f"duplicate generator names in {gens}")
        rels = []
        for r in relators:
            if isinstance(r, str):
                rels.extend(parse_equation(r, gens))
                continue
            r = Word(r)
            if r.max_generator() >= len(gens):
                raise UnknownGenerator(f"relator {list(r)} uses a generator beyond {len(gens)}")
            rels.append(r)
        self.gens = gens
        self.relators = tuple(r.cyclically_reduced() for r in rels)
        self.name = name

    @property
    def rank(self):
        return len(self.gens)

    def word(self, text):
        """Parse ``text`` as a word in this presentation's generators."""
        if isinstance(text, Word):
            if text.max_generator() >= self.rank:
                raise UnknownGenerator("word uses a generator outside the presentation")
            return text
        return parse_word(text, self.gens)

    def gen(self, name):
        try:
            return Word.gen(self.gens.index(name))
        except ValueError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def format(self, w):
        return format_word(w, self.gens)

    def with_relators(self, relators, name=None):
        return Presentation(self.gens, relators, name if name is not None else self.name)

    def euler_characteristic(self):
        return 1 - self.rank + len(self.relators)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.gens == other.gens
                and self.relators == other.relators)

    def __hash__(self):
        return hash((self.gens, self.relators))

    def __repr__(self):
        rels = ", ".join(self.format(r) for r in self.relators)
        return f"<{', '.join(self.gens)} | {rels}>"


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def as_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class OrbifoldSignature:
    genus: int = 0
    punctures: int = 0
    cone_orders: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise UsageError("genus and puncture count must be nonnegative")
        for m in self.cone_orders:
            if m < 2:
                raise BadConeOrder(f"cone order {m} < 2")

    def euler_characteristic(self):
        """Orbifold Euler characteristic as an exact Fraction."""
        chi = Fraction(2 - 2 * self.genus - self.punctures)
        return chi - sum(1 - Fraction(1, m) for m in self.cone_orders)


def exponent_matrix(P):
    return [r.exponent_vector(P.rank) for r in P.relators]


def abelianization(P):
    """Abelian invariants from the Smith form of the exponent-sum matrix."""
    rows = [row for row in exponent_matrix(P) if any(row)]
    if not rows or P.rank == 0:
        return AbelianInvariants(P.rank, ())
    diag = smith_normal_form(rows).diagonal
    nonzero = [d for d in diag if d]
    return AbelianInvariants(P.rank - len(nonzero), tuple(d for d in nonzero if d > 1))


def free_group(n, prefix="x"):
    if isinstance(n, int):
        names = [f"{prefix}{i + 1}" for i in range(n)] if n != 1 else [prefix]
    else:
        names = list(n)
    return Presentation(names, (), name=f"F{len(names)}")


def cyclic_group(m, name="a"):
    return Presentation([name], [Word.gen(0, m)], name=f"Z{m}")


def free_product(*presentations):
    """Disjoint union of generators and relators; clashing names get a
    numeric suffix."""
    gens = []
    rels = []
    for P in presentations:
        offset = len(gens)
        for g in P.gens:
            new = g
            k = 2
            while new in gens:
                new = f"{g}_{k}"
                k += 1
            gens.append(new)
        mapping = [offset + i for i in range(P.rank)]
        rels.extend(r.relabel(mapping) for r in P.relators)
    return Presentation(gens, rels, name="*".join(P.name or "?" for P in presentations))


def quotient_by_normal_closure(P, extra):
    words = []
    for w in extra:
        if isinstance(w, str):
            words.extend(parse_equation(w, P.gens))
        else:
            words.append(P.word(Word(w)))
    return Presentation(P.gens, list(P.relators) + words, name=P.name)


def orbifold_presentation(sig, eliminate=True):
    """Orbifold group of a genus-g surface with punctures and cone points.

    Generators a_i, b_i, puncture meridians p_j and cone meridians mu_k.
    With at least one puncture and ``eliminate`` set, the product relation
    is used to remove the last puncture meridian, leaving a free product of
    a free group and cyclic groups.
    """
    if not isinstance(sig, OrbifoldSignature):
        sig = OrbifoldSignature(*sig)
    g, k, ms = sig.genus, sig.punctures, tuple(sig.cone_orders)
    gens = []
    for i in range(g):
        gens += [f"a{i + 1}", f"b{i + 1}"]
    punct = [f"p{j + 1}" for j in range(k)] if k != 1 else ["p"]
    cones = [f"mu{j + 1}" for j in range(len(ms))]
    idx = {name: i for i, name in enumerate(gens + punct + cones)}
    rels = [Word.gen(idx[c], m) for c, m in zip(cones, ms)]
    if eliminate and k >= 1:
        keep = gens + punct[:-1] + cones
        rels = [Word.gen(keep.index(c), m) for c, m in zip(cones, ms)]
        return Presentation(keep, rels, name=f"orbifold(g={g},n0={k},m={list(ms)})")
    product = Word()
    for name in punct + cones:
        product = product * Word.gen(idx[name])
    surface = Word()
    for i in range(g):
        a, b = Word.gen(2 * i), Word.gen(2 * i + 1)
        surface = surface * a * b * a.inverse() * b.inverse()
    rels.append(product * surface.inverse())
    return Presentation(gens + punct + cones, rels, name=f"orbifold(g={g},n0={k},m={list(ms)})")
