"""Free group words, endomorphisms, group-ring elements and braid words.

A letter is a nonzero int: ``+(i+1)`` is generator ``i`` and ``-(i+1)`` its
inverse.  Names live on :class:`~curvegroups.presentation.Presentation`;
words only carry indices.
"""

from itertools import chain

from .errors import IndexOutOfRange, RankMismatch, UnknownGenerator

#: [a, b] := a b a^-1 b^-1
COMMUTATOR_CONVENTION = "aba^-1b^-1"


def _free_reduce(letters):
    stack = []
    for x in letters:
        x = int(x)
        if x == 0:
            raise UnknownGenerator("letter 0 is not a generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return stack


class Word(tuple):
    """A freely reduced word; ``*`` is the group product."""

    def __new__(cls, letters=()):
        if isinstance(letters, Word):
            return letters
        return super().__new__(cls, _free_reduce(letters))

    @classmethod
    def _raw(cls, reduced):
        return super().__new__(cls, reduced)

    @classmethod
    def gen(cls, i, exponent=1):
        x = i + 1 if exponent > 0 else -(i + 1)
        return cls._raw((x,) * abs(exponent))

    def __mul__(self, other):
        other = Word(other)
        i = 0
        n = min(len(self), len(other))
        while i < n and self[len(self) - 1 - i] == -other[i]:
            i += 1
        return Word._raw(tuple.__add__(self[: len(self) - i], other[i:]))

    def __rmul__(self, other):
        return Word(other) * self

    __add__ = __mul__

    def inverse(self):
        return Word._raw(tuple(-x for x in reversed(self)))

    __invert__ = inverse

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Word()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __getitem__(self, key):
        r = tuple.__getitem__(self, key)
        return Word._raw(r) if isinstance(key, slice) else r

    def __repr__(self):
        return f"Word({list(self)!r})"

    def is_identity(self):
        return len(self) == 0

    def generators(self):
        return {abs(x) - 1 for x in self}

    def max_generator(self):
        return max((abs(x) - 1 for x in self), default=-1)

    def exponent_sum(self, i):
        return sum(1 if x > 0 else -1 for x in self if abs(x) == i + 1)

    def exponent_vector(self, n):
        v = [0] * n
        for x in self:
            v[abs(x) - 1] += 1 if x > 0 else -1
        return v

    def occurrences(self, i):
        return sum(1 for x in self if abs(x) == i + 1)

    def cyclically_reduced(self):
        w = tuple(self)
        a, b = 0, len(w)
        while b - a >= 2 and w[a] == -w[b - 1]:
            a += 1
            b -= 1
        return Word._raw(w[a:b])

    def rotations(self):
        for k in range(len(self)):
            yield Word._raw(tuple.__add__(self[k:], self[:k]))

    def substitute(self, images):
        """Replace generator i by ``images[i]`` (a Word or None to keep)."""
        out = []
        for x in self:
            img = images[abs(x) - 1]
            if img is None:
                out.append(x)
            elif x > 0:
                out.extend(img)
            else:
                out.extend(-y for y in reversed(img))
        return Word(out)

    def relabel(self, mapping):
        """Rename generator indices: ``mapping[i]`` is the new index of i."""
        return Word([(mapping[abs(x) - 1] + 1) * (1 if x > 0 else -1) for x in self])

    def syllables(self):
        out = []
        for x in self:
            g, e = abs(x) - 1, (1 if x > 0 else -1)
            if out and out[-1][0] == g:
                out[-1][1] += e
            else:
                out.append([g, e])
        return [(g, e) for g, e in out if e]


def word_reduce(letters, rank=None):
    """Freely reduce a raw letter sequence; ``rank`` bounds the generators."""
    letters = list(letters)
    if rank is not None:
        for x in letters:
            if x == 0 or abs(x) > rank:
                raise UnknownGenerator(f"letter {x} outside a free group of rank {rank}")
    return Word(letters)


def commutator(a, b):
    a, b = Word(a), Word(b)
    return a * b * a.inverse() * b.inverse()


def canonical_cyclic(w):
    """Canonical representative of the cyclic word of w up to inversion."""
    w = Word(w).cyclically_reduced()
    if not w:
        return w
    cands = chain(w.rotations(), w.inverse().rotations())
    return min(cands, key=lambda u: (len(u), tuple(abs(x) * 2 + (x < 0) for x in u)))


class FreeEndomorphism:
    """Endomorphism of F_rank given by generator images.

    Composition ``(e @ f)(x) == e(f(x))``.
    """

    __slots__ = ("rank", "images")

    def __init__(self, rank, images):
        images = tuple(Word(w) for w in images)
        if len(images) != rank:
            raise RankMismatch(f"{len(images)} images for a free group of rank {rank}")
        for w in images:
            if w.max_generator() >= rank:
                raise RankMismatch("image word uses a generator beyond the rank")
        self.rank = rank
        self.images = images

    @classmethod
    def identity(cls, rank):
        return cls(rank, [Word.gen(i) for i in range(rank)])

    def __call__(self, w):
        w = Word(w)
        if w.max_generator() >= self.rank:
            raise RankMismatch("word uses a generator beyond the endomorphism's rank")
        return w.substitute(self.images)

    def __matmul__(self, other):
        if other.rank != self.rank:
            raise RankMismatch("cannot compose endomorphisms of different ranks")
        return FreeEndomorphism(self.rank, [self(w) for w in other.images])

    def then(self, other):
        """Apply self first, then other."""
        return other @ self

    def __eq__(self, other):
        return isinstance(other, FreeEndomorphism) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"FreeEndomorphism({self.rank}, {list(map(list, self.images))})"

    def abelianized(self):
        """Integer matrix whose row i is the exponent vector of the image of x_i."""
        return [w.exponent_vector(self.rank) for w in self.images]


def apply_endomorphism(e, w):
    return e(w)


class GroupRingElement:
    """Finite Z-linear combination of free group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in dict(terms).items():
                w = Word(w)
                c = clean.get(w, 0) + int(c)
                if c:
                    clean[w] = c
                else:
                    clean.pop(w, None)
        self.terms = clean

    @classmethod
    def word(cls, w, c=1):
        return cls({Word(w): c})

    @classmethod
    def one(cls):
        return cls({Word(): 1})

    def __add__(self, other):
        other = _as_ring_element(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement({w: c for w, c in out.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_ring_element(other))

    def __rsub__(self, other):
        return _as_ring_element(other) - self

    def __mul__(self, other):
        other = _as_ring_element(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        return _as_ring_element(other) * self

    def __eq__(self, other):
        try:
            other = _as_ring_element(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"GroupRingElement({self.terms!r})"

    def map(self, fn, zero):
        """Extend a map on words linearly: sum of c * fn(w)."""
        acc = zero
        for w, c in self.terms.items():
            acc = acc + fn(w) * c
        return acc


def _as_ring_element(x):
    if isinstance(x, GroupRingElement):
        return x
    if isinstance(x, Word):
        return GroupRingElement.word(x)
    if isinstance(x, int):
        return GroupRingElement({Word(): x}) if x else GroupRingElement()
    raise TypeError(f"cannot interpret {x!r} as a group ring element")


def group_ring_mul(a, b):
    return _as_ring_element(a) * _as_ring_element(b)


class BraidWord:
    """Word in the Artin generators s_1..s_{n-1}; negative index is inverse."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) >= strands:
                raise IndexOutOfRange(f"braid generator {x} invalid on {strands} strands")
        self.strands = strands
        self.letters = letters

    def __mul__(self, other):
        if other.strands != self.strands:
            raise IndexOutOfRange("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __eq__(self, other):
        return isinstance(other, BraidWord) and (self.strands, self.letters) == (other.strands, other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __repr__(self):
        return f"BraidWord({self.strands}, {list(self.letters)})"


def _sigma(n, i, sign):
    # 0-based strand i; sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    images = [Word.gen(k) for k in range(n)]
    a, b = Word.gen(i), Word.gen(i + 1)
    if sign > 0:
        images[i] = a * b * a.inverse()
        images[i + 1] = a
    else:
        images[i] = b
        images[i + 1] = b.inverse() * a * b
    return FreeEndomorphism(n, images)


def artin_automorphism(braid, strands=None):
    """Right Artin action of a braid on F_n; the word is read left to right,
    so ``s1 s2`` applies the automorphism of s1 first."""
    if not isinstance(braid, BraidWord):
        braid = BraidWord(strands, braid)
    n = braid.strands
    result = FreeEndomorphism.identity(n)
    for x in braid.letters:
        result = result.then(_sigma(n, abs(x) - 1, 1 if x > 0 else -1))
    return result
