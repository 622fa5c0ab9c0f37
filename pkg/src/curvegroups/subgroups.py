"""Coset tables, Todd-Coxeter enumeration and Reidemeister-Schreier rewriting."""

import os
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from . import permutations as perm
from .errors import CosetLimitExceeded, InvalidTable, NotAHomomorphism, NotCoprime, UsageError
from .presentation import Presentation
from .tietze import tietze_simplify
from .words import Word

DEFAULT_MAX_COSETS = 10**6


def default_max_cosets():
    value = os.environ.get("CURVEGROUPS_MAX_COSETS")
    return int(value) if value else DEFAULT_MAX_COSETS


def _col(x):
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class CosetTable:
    """Complete right action of the generators on n cosets (0-based).

    ``action[g][c]`` is the coset c*g.  Tables are renumbered so that a
    breadth-first walk from coset 0, trying x1, x1^-1, x2, ... in order,
    meets the cosets in increasing order.
    """

    __slots__ = ("action", "_n")

    def __init__(self, action, standardize=True):
        action = tuple(tuple(a) for a in action)
        # a rank-0 table still has one coset
        n = len(action[0]) if action else 1
        for a in action:
            if sorted(a) != list(range(n)):
                raise InvalidTable("generator action is not a permutation")
        self.action = action
        self._n = n
        if standardize:
            self.action = self._standardized()

    @property
    def index(self):
        return self._n

    @property
    def rank(self):
        return len(self.action)

    def step(self, c, x):
        g = abs(x) - 1
        return self.action[g][c] if x > 0 else self._inverse(g)[c]

    def _inverse(self, g):
        return perm.inverse(self.action[g])

    def act(self, c, w):
        invs = {}
        for x in w:
            g = abs(x) - 1
            if x > 0:
                c = self.action[g][c]
            else:
                if g not in invs:
                    invs[g] = self._inverse(g)
                c = invs[g][c]
        return c

    def _bfs(self):
        """Order of discovery and spanning-tree edges (parent, letter)."""
        invs = [self._inverse(g) for g in range(self.rank)]
        order = [0]
        tree = {0: None}
        q = deque([0])
        while q:
            c = q.popleft()
            for g in range(self.rank):
                for x, d in ((g + 1, self.action[g][c]), (-(g + 1), invs[g][c])):
                    if d not in tree:
                        tree[d] = (c, x)
                        order.append(d)
                        q.append(d)
        return order, tree

    def _standardized(self):
        order, _ = self._bfs()
        if len(order) != self._n:
            raise InvalidTable("coset table is not transitive")
        new = {old: i for i, old in enumerate(order)}
        return tuple(tuple(new[a[old]] for old in order) for a in self.action)

    def transversal(self):
        """Prefix-closed coset representatives: Word for each coset."""
        order, tree = self._bfs()
        reps = {0: Word()}
        for c in order[1:]:
            parent, x = tree[c]
            reps[c] = reps[parent] * Word._raw((x,))
        return [reps[c] for c in range(self._n)], tree

    def validate(self, P):
        for r in P.relators:
            for c in range(self._n):
                if self.act(c, r) != c:
                    raise InvalidTable(f"relator {P.format(r)} does not close at coset {c + 1}")
        return True

    def to_lists(self):
        """1-based images, one list per generator."""
        return [[x + 1 for x in a] for a in self.action]

    def __eq__(self, other):
        return isinstance(other, CosetTable) and self.action == other.action

    def __hash__(self):
        return hash(self.action)


def todd_coxeter(P, subgroup_gens=(), max_cosets=None):
    """HLT coset enumeration with deduction processing.

    Raises CosetLimitExceeded when more than ``max_cosets`` cosets get
    defined without the table closing.
    """
    if max_cosets is None:
        max_cosets = default_max_cosets()
    ncols = 2 * P.rank
    table = [[None] * ncols]
    parent = [0]
    rels = [r for r in P.relators if r]
    subgroup = [P.word(h) for h in subgroup_gens]
    by_first = {}
    for r in rels:
        for w in list(r.rotations()) + list(r.inverse().rotations()):
            by_first.setdefault(w[0], []).append(w)
    deductions = []

    def rep(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def alive(c):
        return parent[c] == c

    def define(c, x):
        if len(table) >= max_cosets:
            raise CosetLimitExceeded(f"coset enumeration exceeded {max_cosets} cosets")
        d = len(table)
        table.append([None] * ncols)
        parent.append(d)
        table[c][_col(x)] = d
        table[d][_col(-x)] = c
        deductions.append((c, x))

    def merge(a, b, queue):
        a, b = rep(a), rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        queue.append(b)

    def coincidence(a, b):
        queue = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for col in range(ncols):
                f = table[e][col]
                if f is None:
                    continue
                if table[f][col ^ 1] == e:
                    table[f][col ^ 1] = None
                e1, f1 = rep(e), rep(f)
                if table[e1][col] is not None:
                    merge(f1, table[e1][col], queue)
                elif table[f1][col ^ 1] is not None:
                    merge(e1, table[f1][col ^ 1], queue)
                else:
                    table[e1][col] = f1
                    table[f1][col ^ 1] = e1
                    deductions.append((e1, (col // 2 + 1) * (1 if col % 2 == 0 else -1)))

    def scan(c, w, fill):
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][_col(w[i])] is not None:
                f = table[f][_col(w[i])]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][_col(-w[j])] is not None:
                b = table[b][_col(-w[j])]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][_col(w[i])] = b
                table[b][_col(-w[i])] = f
                deductions.append((f, w[i]))
                return
            if not fill:
                return
            define(f, w[i])

    def process_deductions():
        while deductions:
            c, x = deductions.pop()
            if not alive(c):
                continue
            for w in by_first.get(x, ()):
                scan(c, w, False)
                if not alive(c):
                    break
            d = table[c][_col(x)] if alive(c) else None
            if d is not None and alive(d):
                for w in by_first.get(-x, ()):
                    scan(d, w, False)
                    if not alive(d):
                        break

    for h in subgroup:
        scan(0, h, True)
        process_deductions()
    c = 0
    while c < len(table):
        if alive(c):
            for r in rels:
                scan(c, r, True)
                process_deductions()
                if not alive(c):
                    break
            if alive(c):
                for col in range(ncols):
                    if table[c][col] is None:
                        x = (col // 2 + 1) * (1 if col % 2 == 0 else -1)
                        define(c, x)
                        process_deductions()
                        if not alive(c):
                            break
        c += 1

    live = [c for c in range(len(table)) if alive(c)]
    index = {c: i for i, c in enumerate(live)}
    action = [[index[rep(table[c][2 * g])] for c in live] for g in range(P.rank)]
    T = CosetTable(action) if P.rank else CosetTable([])
    T.validate(P)
    return T


def _evaluate(images, w, mul, inv, one):
    out = one
    for x in w:
        g = images[abs(x) - 1]
        out = mul(out, g if x > 0 else inv(g))
    return out


def coset_table_from_hom(P, images, modulus=None):
    """Right-regular action of the image of a hom to a finite group.

    ``images`` lists one image per generator (or maps names to images):
    residues mod ``modulus`` when a modulus is given, else permutation
    tuples.  Cosets are the elements of the image subgroup.
    """
    if isinstance(images, dict):
        try:
            images = [images[g] for g in P.gens]
        except KeyError as exc:
            raise UsageError(f"no image given for generator {exc.args[0]}") from None
    images = list(images)
    if len(images) != P.rank:
        raise UsageError(f"{len(images)} images for {P.rank} generators")
    if modulus is not None:
        images = [int(v) % modulus for v in images]
        one = 0

        def mul(a, b):
            return (a + b) % modulus

        def inv(a):
            return (-a) % modulus
    else:
        images = [tuple(p) for p in images]
        n = len(images[0]) if images else 0
        one = perm.identity(n)
        mul, inv = perm.compose, perm.inverse
    for r in P.relators:
        if _evaluate(images, r, mul, inv, one) != one:
            raise NotAHomomorphism(f"relator {P.format(r)} is not sent to the identity", P.format(r))
    elements = [one]
    where = {one: 0}
    q = deque([one])
    while q:
        h = q.popleft()
        for g in images:
            for k in (mul(h, g), mul(h, inv(g))):
                if k not in where:
                    where[k] = len(elements)
                    elements.append(k)
                    q.append(k)
    action = [[where[mul(h, g)] for h in elements] for g in images]
    return CosetTable(action) if P.rank else CosetTable([])


@dataclass
class SchreierResult:
    raw: Presentation
    presentation: Presentation
    name_map: dict
    table: CosetTable
    tietze: object = None
    _rewriter: object = field(default=None, repr=False)

    @property
    def verdict(self):
        return self.tietze.verdict if self.tietze else (
            f"free of rank {self.raw.rank}" if not any(self.raw.relators) else "inconclusive")

    def rewrite(self, w):
        """Word in the raw Schreier generators for a parent word in the subgroup."""
        return self._rewriter(Word(w))

    def rewrite_simplified(self, w):
        raw = self.rewrite(w)
        return self.tietze.forward(raw) if self.tietze else raw


def reidemeister_schreier(P, T, simplify=True, **tietze_options):
    """Presentation of the subgroup stabilizing coset 0 of T.

    Schreier generators ``{gen}_{coset}`` (1-based coset) correspond to
    non-tree edges of the breadth-first spanning tree; ``name_map`` gives
    each as a word in P.
    """
    if T.rank != P.rank:
        raise InvalidTable("table and presentation have different ranks")
    T.validate(P)
    reps, tree = T.transversal()
    trivial = set()
    for d, edge in tree.items():
        if edge is None:
            continue
        c, x = edge
        if x > 0:
            trivial.add((c, x - 1))
        else:
            trivial.add((d, -x - 1))
    names = []
    index = {}
    name_map = {}
    for g in range(P.rank):
        for c in range(T.index):
            if (c, g) in trivial:
                continue
            index[(c, g)] = len(names)
            name = f"{P.gens[g]}_{c + 1}"
            names.append(name)
            name_map[name] = reps[c] * Word.gen(g) * reps[T.step(c, g + 1)].inverse()

    def rewrite_from(c, w):
        out = []
        for x in w:
            g = abs(x) - 1
            if x > 0:
                k = index.get((c, g))
                if k is not None:
                    out.append(k + 1)
                c = T.step(c, x)
            else:
                c = T.step(c, x)
                k = index.get((c, g))
                if k is not None:
                    out.append(-(k + 1))
        return Word(out), c

    rels = []
    for r in P.relators:
        for c in range(T.index):
            w, end = rewrite_from(c, r)
            if end != c:
                raise InvalidTable("relator does not close in the coset table")
            rels.append(w)
    raw = Presentation(names, rels, name=f"{P.name or 'G'}/index{T.index}")

    def rewriter(w):
        out, end = rewrite_from(0, w)
        if end != 0:
            raise UsageError("word does not lie in the subgroup")
        return out

    tz = tietze_simplify(raw, **tietze_options) if simplify else None
    return SchreierResult(raw, tz.presentation if tz else raw, name_map, T, tz, rewriter)


def kernel_rank_expected(r, p, q):
    """Rank pqr + (p-1)(q-1) of the kernel of F_r * Z_p * Z_q onto Z_pq."""
    if p < 1 or q < 1 or r < 0:
        raise UsageError("need p, q >= 1 and r >= 0")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    return p * q * r + (p - 1) * (q - 1)
