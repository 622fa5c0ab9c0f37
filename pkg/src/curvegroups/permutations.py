"""Permutations of {0..n-1} as tuples, acting on the right.

``compose(p, q)`` is "p then q": point i goes to q[p[i]].  Cycle notation in
text is 1-based, e.g. ``(1,2)(3,4)``.
"""

import re
from itertools import permutations as _all

from .errors import ParseError


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(q[i] for i in p)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p, k):
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    while k:
        if k & 1:
            out = compose(out, p)
        p = compose(p, p)
        k >>= 1
    return out


def all_permutations(n):
    """S_n in lexicographic order."""
    return [tuple(p) for p in _all(range(n))]


def from_cycles(text, n):
    text = text.strip()
    p = list(range(n))
    if text in ("", "()", "id", "1"):
        return tuple(p)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise ParseError(f"bad cycle notation {text!r}")
    for cyc in cycles:
        pts = [int(x) - 1 for x in re.split(r"[,\s]+", cyc.strip()) if x]
        if len(set(pts)) != len(pts) or any(not 0 <= x < n for x in pts):
            raise ParseError(f"bad cycle {cyc!r} for degree {n}")
        q = list(range(n))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            q[a] = b
        p = list(compose(tuple(p), tuple(q)))
    return tuple(p)


def to_cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"
