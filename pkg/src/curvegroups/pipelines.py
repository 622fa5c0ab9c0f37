"""Iterated double covers: pass to an index-2 subgroup, kill the square of
a meridian, simplify, and repeat.

Each stage records the Schreier data so that every generator of the final
presentation can be written as a word in the original group.
"""

from dataclasses import dataclass, field

from .errors import UsageError
from .presentation import Presentation
from .subgroups import coset_table_from_hom, reidemeister_schreier
from .tietze import tietze_simplify
from .words import Word


@dataclass
class CoverStage:
    """One index-2 step: the parity hom, the Schreier data, the quotient
    (before simplification) and its simplification."""

    source: Presentation
    parity: dict
    killed: str
    schreier: object
    quotient: Presentation
    simplified: object

    @property
    def presentation(self):
        return self.simplified.presentation

    def lift(self, w):
        """Word in ``source`` for a word in the simplified generators."""
        P = self.presentation
        images = [self.schreier.name_map[g] for g in P.gens]
        return Word(w).substitute(images)

    def push(self, w):
        """Image in the simplified generators of a ``source`` word lying in
        the index-2 subgroup."""
        return self.simplified.forward(self.schreier.rewrite(w))


@dataclass
class CoverPipeline:
    origin: Presentation
    stages: list = field(default_factory=list)

    @property
    def presentation(self):
        return self.stages[-1].presentation if self.stages else self.origin

    def lift(self, w):
        """Word in the origin group for a word in the final generators."""
        w = Word(w)
        for stage in reversed(self.stages):
            w = stage.lift(w)
        return w

    def push(self, w):
        """Image in the final generators of an origin word lying in every
        stage's subgroup."""
        w = Word(w)
        for stage in self.stages:
            w = stage.push(w)
        return w

    def parent_words(self):
        """Each final generator as a word in the origin group."""
        P = self.presentation
        return {g: self.lift(Word.gen(i)) for i, g in enumerate(P.gens)}


def double_cover_step(P, parity, square, name=None, **tietze_options):
    """Index-2 subgroup of P where ``parity`` (generator -> 0/1) vanishes,
    modulo the normal closure in P of ``square`` (a word in P that lies in
    the subgroup)."""
    images = [parity[g] % 2 for g in P.gens]
    T = coset_table_from_hom(P, images, modulus=2)
    rs = reidemeister_schreier(P, T, simplify=False)
    reps, _ = T.transversal()
    square = P.word(square)
    extra = []
    for r in reps:
        extra.append(rs.rewrite(r * square * r.inverse()))
    quotient = Presentation(rs.raw.gens, list(rs.raw.relators) + extra,
                            name=name or f"{P.name or 'G'}-cover")
    simplified = tietze_simplify(quotient, **tietze_options)
    simplified.presentation.name = quotient.name
    return CoverStage(P, dict(parity), P.format(square), rs, quotient, simplified)


def iterated_double_covers(P, meridians, **tietze_options):
    """Apply one cover stage per meridian name of the origin group P.

    At each stage the parity of a generator is the exponent sum of the
    meridian in its origin word, and the killed element is the meridian's
    square.
    """
    pipe = CoverPipeline(P)
    for k, m in enumerate(meridians):
        g = P.gens.index(m)
        current = pipe.presentation
        parity = {}
        for i, name in enumerate(current.gens):
            parity[name] = pipe.lift(Word.gen(i)).exponent_sum(g) % 2
        if not any(parity.values()):
            raise UsageError(f"meridian {m} has even exponent on every generator")
        square = pipe.push(Word.gen(g) ** 2) if pipe.stages else Word.gen(g) ** 2
        stage = double_cover_step(current, parity, square,
                                  name=f"{P.name or 'G'}-stage{k + 1}", **tietze_options)
        pipe.stages.append(stage)
    return pipe
