"""Bounded, deterministic Tietze simplification with a replayable trace."""

from dataclasses import dataclass, field

from .notation import format_word
from .presentation import Presentation
from .words import Word, canonical_cyclic


@dataclass(frozen=True)
class TietzeMove:
    kind: str
    data: tuple
    before: tuple
    after: tuple

    def describe(self, names):
        if self.kind == "eliminate-generator":
            g, _, expr = self.data
            return f"eliminate {names[g]} = {format_word(expr, names)}"
        return self.kind


@dataclass
class TietzeTrace:
    moves: list = field(default_factory=list)

    def replay(self, P):
        """Apply the recorded moves to P, returning the simplified presentation."""
        state = _State(P)
        for mv in self.moves:
            state.apply(mv)
        return state.presentation()

    def __len__(self):
        return len(self.moves)


@dataclass
class TietzeResult:
    presentation: Presentation
    trace: TietzeTrace
    verdict: str
    limit_exceeded: bool
    generator_map: dict
    source: Presentation = None

    @property
    def is_free(self):
        return not self.presentation.relators

    def forward(self, w):
        """Image in the simplified presentation of a word in the original one."""
        return self._forward_endo(Word(w))

    def _forward_endo(self, w):
        gens = self.source.gens
        images = [self.generator_map[g] for g in gens]
        return w.substitute(images)


class _State:
    def __init__(self, P):
        self.names = P.gens
        self.live = list(range(P.rank))
        self.rels = list(P.relators)
        self.images = [Word.gen(i) for i in range(P.rank)]

    def size(self):
        return (len(self.live), len(self.rels), sum(len(r) for r in self.rels))

    # moves; each returns True if the state changed
    def reduce(self):
        seen = set()
        out = []
        for r in self.rels:
            r = r.cyclically_reduced()
            key = canonical_cyclic(r)
            if r and key in seen:
                continue
            seen.add(key)
            out.append(r)
        changed = out != self.rels
        self.rels = out
        return changed

    def drop_trivial(self):
        out = [r for r in self.rels if r]
        changed = len(out) != len(self.rels)
        self.rels = out
        return changed

    def eliminate(self, g, pos, expr):
        del self.rels[pos]
        subs = [None] * len(self.names)
        subs[g] = expr
        self.rels = [r.substitute(subs).cyclically_reduced() for r in self.rels]
        self.images = [w.substitute(subs) for w in self.images]
        self.live.remove(g)

    def substitute(self, pos, new):
        self.rels[pos] = new

    def apply(self, mv):
        if mv.kind == "reduce":
            self.reduce()
        elif mv.kind == "delete-trivial-relator":
            self.drop_trivial()
        elif mv.kind == "eliminate-generator":
            self.eliminate(*mv.data)
        elif mv.kind == "substitute":
            self.substitute(*mv.data)
        else:
            raise ValueError(f"unknown Tietze move {mv.kind!r}")

    def relabel_map(self):
        m = [None] * len(self.names)
        for new, old in enumerate(self.live):
            m[old] = new
        return m

    def presentation(self):
        m = self.relabel_map()
        return Presentation([self.names[i] for i in self.live], [r.relabel(m) for r in self.rels])

    # search
    def find_elimination(self, budget):
        order = sorted(range(len(self.rels)), key=lambda i: (len(self.rels[i]), i))
        blocked = False
        for pos in order:
            r = self.rels[pos]
            for g in sorted(r.generators()):
                if r.occurrences(g) != 1:
                    continue
                k = next(i for i, x in enumerate(r) if abs(x) == g + 1)
                rot = Word._raw(tuple.__add__(r[k:], r[:k]))
                rest = rot[1:]
                expr = rest.inverse() if rot[0] > 0 else rest
                growth = (len(expr) - 1) * sum(x.occurrences(g) for i, x in enumerate(self.rels) if i != pos)
                if self.size()[2] - len(r) + growth > budget:
                    blocked = True
                    continue
                return (g, pos, expr), blocked
        return None, blocked

    def find_substitution(self):
        order = sorted(range(len(self.rels)), key=lambda i: (len(self.rels[i]), i))
        for si in order:
            s = self.rels[si]
            n = len(s)
            if n == 0:
                continue
            pieces = list(s.rotations()) + list(s.inverse().rotations())
            for ri in order:
                r = self.rels[ri]
                if ri == si or len(r) < n:
                    continue
                rr = tuple(r) + tuple(r[: n - 1])
                for k in range(n, n // 2, -1):
                    if k > len(r):
                        continue
                    for sp in pieces:
                        a = tuple(sp[:k])
                        p = _find(rr, a, len(r))
                        if p is None:
                            continue
                        rot = tuple(r[p:]) + tuple(r[:p])
                        new = (sp[k:].inverse() * Word(rot[k:])).cyclically_reduced()
                        if len(new) < len(r):
                            return ri, new
        return None


def _find(hay, needle, limit):
    k = len(needle)
    for p in range(limit):
        if hay[p:p + k] == needle:
            return p
    return None


def tietze_simplify(P, max_growth=4, max_iterations=1000):
    """Simplify P by Tietze moves; never grows total relator length beyond
    ``max_growth`` times the initial size (with a small floor)."""
    state = _State(P)
    trace = TietzeTrace()
    budget = max_growth * max(state.size()[2], 16)
    exceeded = False
    iterations = 0

    def record(kind, data, before):
        trace.moves.append(TietzeMove(kind, data, before, state.size()))

    while True:
        if iterations >= max_iterations:
            exceeded = True
            break
        iterations += 1
        before = state.size()
        if state.reduce():
            record("reduce", (), before)
        before = state.size()
        if state.drop_trivial():
            record("delete-trivial-relator", (), before)
        before = state.size()
        found, blocked = state.find_elimination(budget)
        exceeded = exceeded or blocked
        if found is not None:
            state.eliminate(*found)
            record("eliminate-generator", found, before)
            continue
        sub = state.find_substitution()
        if sub is not None:
            state.substitute(*sub)
            record("substitute", sub, before)
            continue
        break

    out = state.presentation()
    out.name = P.name
    m = state.relabel_map()
    gmap = {P.gens[i]: state.images[i].relabel(m) for i in range(P.rank)}
    verdict = f"free of rank {out.rank}" if not out.relators else "inconclusive"
    return TietzeResult(out, trace, verdict, exceeded, gmap, P)
