"""Homomorphisms from finitely presented groups to symmetric groups.

Permutations act on the right, so a word x y is sent to "image of x, then
image of y".  Enumeration backtracks over generator images in
lexicographic order, checking every relator as soon as its generators are
assigned and solving for a generator outright when a relator contains it
exactly once.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as iter_orders

from . import permutations as perm
from .errors import DegreeMismatch, DegreeTooLarge, UsageError
from .words import Word

MAX_DEGREE = 6


@dataclass(frozen=True)
class FiniteHom:
    degree: int
    images: tuple

    def evaluate(self, w):
        out = perm.identity(self.degree)
        for x in Word(w):
            g = self.images[abs(x) - 1]
            out = perm.compose(out, g if x > 0 else perm.inverse(g))
        return out

    def format(self, gens):
        return {g: perm.to_cycles(p) for g, p in zip(gens, self.images)}


@dataclass(frozen=True)
class HomCountReport:
    presentation: str
    degree: int
    total: int
    note: str = "number of homomorphisms G -> S_n"


@lru_cache(maxsize=None)
def _symmetric_group(n):
    elems = perm.all_permutations(n)
    index = {p: i for i, p in enumerate(elems)}
    mul = [[index[perm.compose(p, q)] for q in elems] for p in elems]
    inv = [index[perm.inverse(p)] for p in elems]
    return elems, index, mul, inv


def verify_finite_hom(P, h):
    """True iff every relator of P is sent to the identity."""
    if len(h.images) != P.rank:
        raise DegreeMismatch(f"{len(h.images)} images for {P.rank} generators")
    for p in h.images:
        if len(p) != h.degree or sorted(p) != list(range(h.degree)):
            raise DegreeMismatch(f"image {p} is not a permutation of degree {h.degree}")
    ident = perm.identity(h.degree)
    return all(h.evaluate(r) == ident for r in P.relators)


def failing_relators(P, h):
    ident = perm.identity(h.degree)
    return [r for r in P.relators if h.evaluate(r) != ident]


class _Plan:
    """Per-step work for a fixed generator order: a forcing relator (or
    None) and the relators to check once the step's generator is set."""

    def __init__(self, P, order):
        self.order = order
        pos = {g: k for k, g in enumerate(order)}
        self.force = [None] * len(order)
        self.checks = [[] for _ in order]
        for r in P.relators:
            if not r:
                continue
            gens = r.generators()
            step = max(pos[g] for g in gens)
            g = order[step]
            if self.force[step] is None and r.occurrences(g) == 1:
                k = next(i for i, x in enumerate(r) if abs(x) == g + 1)
                rot = tuple(r[k:]) + tuple(r[:k])
                self.force[step] = (rot[0] > 0, [(abs(x) - 1, x > 0) for x in rot[1:]])
            else:
                self.checks[step].append([(abs(x) - 1, x > 0) for x in r])

    def cost(self):
        free = sum(1 for f in self.force if f is None)
        first = [k for k, c in enumerate(self.checks) if c or self.force[k]]
        return (free, sum(first) if first else 0)


def _plan_for(P, canonical):
    n = P.rank
    if canonical or n > 7:
        return _Plan(P, list(range(n - 1, -1, -1)))
    best = None
    for order in iter_orders(range(n)):
        plan = _Plan(P, list(order))
        key = plan.cost()
        if best is None or key < best[0]:
            best = (key, plan)
    return best[1]


def _run(plan, n, fixed, on_hom, first_choices=None):
    """Depth-first search; ``on_hom`` returns True to stop."""
    elems, index, mul, inv = _symmetric_group(n)
    e = index[perm.identity(n)]
    size = len(elems)
    assign = [None] * len(plan.order)

    def value(letters):
        v = e
        for g, pos in letters:
            a = assign[g]
            v = mul[v][a if pos else inv[a]]
        return v

    def step(k):
        if k == len(plan.order):
            return on_hom(tuple(assign))
        g = plan.order[k]
        force = plan.force[k]
        if force is not None:
            positive, rest = force
            v = inv[value(rest)]
            choices = (v if positive else inv[v],)
        elif g in fixed:
            choices = (fixed[g],)
        elif k == 0 and first_choices is not None:
            choices = first_choices
        else:
            choices = range(size)
        for c in choices:
            if g in fixed and fixed[g] != c:
                continue
            assign[g] = c
            if all(value(r) == e for r in plan.checks[k]):
                if step(k + 1):
                    return True
        assign[g] = None
        return False

    step(0)


def _check_degree(n, cap=MAX_DEGREE):
    if n < 1:
        raise UsageError("degree must be positive")
    if n > cap:
        raise DegreeTooLarge(f"degree {n} exceeds the cap {cap}")


def count_homs(P, n, cap=MAX_DEGREE, workers=1):
    """Exact |Hom(P, S_n)|.  With ``workers > 1`` the search is split by
    the first generator's image and the partial counts summed."""
    _check_degree(n, cap)
    if P.rank == 0:
        return HomCountReport(P.name or "?", n, 1)
    plan = _plan_for(P, canonical=False)
    size = len(_symmetric_group(n)[0])

    def count_part(choices):
        total = [0]

        def on_hom(_):
            total[0] += 1
            return False
        _run(plan, n, {}, on_hom, choices)
        return total[0]

    if workers <= 1 or plan.force[0] is not None:
        total = count_part(None)
    else:
        parts = [range(i, size, workers) for i in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(count_part, parts))
    return HomCountReport(P.name or "?", n, total)


def iter_homs(P, n, fixed=None, cap=MAX_DEGREE):
    """All homs to S_n in canonical order (last generator varies slowest),
    optionally with some generator images fixed (name or index -> perm)."""
    _check_degree(n, cap)
    elems, index, _, _ = _symmetric_group(n)
    fixed_idx = {}
    for key, p in (fixed or {}).items():
        g = P.gens.index(key) if isinstance(key, str) else key
        fixed_idx[g] = index[tuple(p)]
    plan = _plan_for(P, canonical=True)
    found = []

    def on_hom(a):
        found.append(FiniteHom(n, tuple(elems[i] for i in a)))
        return False
    _run(plan, n, fixed_idx, on_hom)
    return found


def find_separating_hom(P, a, b, n, cap=MAX_DEGREE):
    """First hom (degrees 1..n, canonical order) with h(a) != h(b)."""
    _check_degree(n, cap)
    a, b = P.word(a), P.word(b)
    if a == b:
        return None
    elems = None
    for d in range(1, n + 1):
        elems, index, _, _ = _symmetric_group(d)
        plan = _plan_for(P, canonical=True)
        hit = []

        def on_hom(assign):
            h = FiniteHom(d, tuple(elems[i] for i in assign))
            if h.evaluate(a) != h.evaluate(b):
                hit.append(h)
                return True
            return False
        _run(plan, d, {}, on_hom)
        if hit and verify_finite_hom(P, hit[0]):
            return hit[0]
    return None
