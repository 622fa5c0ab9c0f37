"""Presentation constructors and invariants from curve topology.

Zariski-Van Kampen presentations from braid monodromy, mapping-torus
presentations of fibrations, cellular homology of presentation
complexes, wedge homotopy types, orbifold kernel ranks and the threshold
poset of atypical values.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm

from .algebra.smith import smith_normal_form
from .errors import (BadLcm, InconsistentInput, MonotonicityViolation, NotInteger,
                     RankMismatch, StrandMismatch, UsageError)
from .presentation import AbelianInvariants, OrbifoldSignature, Presentation, abelianization, exponent_matrix
from .words import BraidWord, FreeEndomorphism, Word, artin_automorphism


def zvk_presentation(n, braids):
    """Generators x1..xn; relators x_i^-1 β(x_i) for every braid and i."""
    rels = []
    for b in braids:
        if not isinstance(b, BraidWord):
            b = BraidWord(n, b)
        if b.strands != n:
            raise StrandMismatch(f"braid on {b.strands} strands, expected {n}")
        beta = artin_automorphism(b)
        for i in range(n):
            r = Word.gen(i, -1) * beta(Word.gen(i))
            if r.cyclically_reduced():
                rels.append(r)
    return Presentation([f"x{i + 1}" for i in range(n)], rels, name=f"zvk{n}")


@dataclass
class MonodromyData:
    r: int
    m: int
    monodromies: list
    inverses: list = None

    def __post_init__(self):
        if len(self.monodromies) != self.r:
            raise RankMismatch(f"{len(self.monodromies)} monodromies for {self.r} loops")
        for M in self.monodromies:
            if M.rank != self.m:
                raise RankMismatch(f"monodromy of rank {M.rank} on a fiber of rank {self.m}")

    def failed_inverses(self):
        """Indices k whose supplied inverse does not invert M_k."""
        if not self.inverses:
            return []
        ident = FreeEndomorphism.identity(self.m)
        return [k for k, (M, N) in enumerate(zip(self.monodromies, self.inverses))
                if M @ N != ident or N @ M != ident]


def cw_fibration_presentation(M):
    """Generators γ1..γr, x1..xm; relators γ_k^-1 x_i γ_k M_k(x_i)^-1,
    ordered with k outer and i inner."""
    r, m = M.r, M.m
    gens = [f"g{k + 1}" for k in range(r)] + [f"x{i + 1}" for i in range(m)]
    shift = [r + i for i in range(m)]
    rels = []
    for k, Mk in enumerate(M.monodromies):
        g = Word.gen(k)
        for i in range(m):
            x = Word.gen(r + i)
            image = Mk(Word.gen(i)).relabel(shift)
            rels.append(g.inverse() * x * g * image.inverse())
    return Presentation(gens, rels, name=f"cw(r={r},m={m})")


def presentation_homology(P):
    """(H1, H2) of the presentation 2-complex; H2 is free."""
    H1 = abelianization(P)
    rows = exponent_matrix(P)
    if rows and P.rank:
        rank = smith_normal_form(rows).rank
    else:
        rank = 0
    H2 = AbelianInvariants(len(P.relators) - rank, ())
    return H1, H2


@dataclass(frozen=True)
class WedgeType:
    circles: int
    spheres: int
    cyclic_order: int = None

    def __str__(self):
        parts = []
        if self.cyclic_order:
            parts.append(f"(S^1 u_{self.cyclic_order} e^2)")
        if self.circles:
            parts.append(f"wedge of {self.circles} S^1")
        if self.spheres:
            parts.append(f"wedge of {self.spheres} S^2")
        return " v ".join(parts) if parts else "point"


def wedge_homotopy_type(r, chiD, cyclic=None):
    """Homotopy type of a curve complement with free (rank r) or cyclic
    (order ``cyclic``) fundamental group, from the Euler characteristic of
    the curve."""
    if cyclic is not None:
        if cyclic < 1:
            raise UsageError("cyclic order must be positive")
        s = 2 - chiD
        if s < 0:
            raise InconsistentInput(f"negative sphere count {s}")
        return WedgeType(0, s, cyclic)
    s = 2 + r - chiD
    if s < 0:
        raise InconsistentInput(f"negative sphere count {s}: no complement with free group of rank {r}")
    return WedgeType(r, s)


def orbifold_kernel_rank(sig, m):
    """Rank 1 - m·χ^orb of the kernel of an open genus-0 orbifold group
    onto Z_m, m = lcm of the cone orders."""
    if not isinstance(sig, OrbifoldSignature):
        sig = OrbifoldSignature(*sig)
    if sig.genus != 0:
        raise UsageError("kernel rank formula needs genus 0")
    if sig.punctures < 1:
        raise UsageError("kernel rank formula needs at least one puncture")
    expected = lcm(*sig.cone_orders) if sig.cone_orders else 1
    if m != expected:
        raise BadLcm(f"m = {m} but lcm of cone orders is {expected}")
    value = 1 - m * sig.euler_characteristic()
    if value.denominator != 1:
        raise NotInteger(f"1 - m*chi = {value} is not an integer")
    return int(value)


@dataclass
class ThresholdInstance:
    values: tuple
    members: frozenset = field(default_factory=frozenset)

    MAX_VALUES = 12

    def __post_init__(self):
        self.values = tuple(self.values)
        if len(set(self.values)) != len(self.values):
            raise UsageError("duplicate values")
        if len(self.values) > self.MAX_VALUES:
            raise UsageError(f"at most {self.MAX_VALUES} values")
        allowed = set(self.values)
        members = frozenset(frozenset(T) for T in self.members)
        for T in members:
            if not T <= allowed:
                raise UsageError(f"member {sorted(T)} uses unknown values")
        self.members = members

    @classmethod
    def from_predicate(cls, values, predicate):
        values = tuple(values)
        members = [frozenset(T) for k in range(len(values) + 1)
                   for T in combinations(values, k) if predicate(frozenset(T))]
        return cls(values, frozenset(members))

    @classmethod
    def from_generators(cls, values, generators):
        """Members are exactly the supersets of some listed set."""
        gens = [frozenset(g) for g in generators]
        return cls.from_predicate(values, lambda T: any(g <= T for g in gens))

    def key(self, T):
        pos = {v: i for i, v in enumerate(self.values)}
        return (len(T), sorted(pos[v] for v in T))

    def sort(self, sets):
        return sorted(sets, key=self.key)


def monotonicity_violations(inst):
    """Pairs (T, T ∪ {v}) with T a member and T ∪ {v} not."""
    out = []
    for T in inst.sort(inst.members):
        for v in inst.values:
            if v not in T and (T | {v}) not in inst.members:
                out.append((T, T | {v}))
    return out


def threshold_minimal_sets(inst):
    """Inclusion-minimal members, canonically sorted, after checking that
    the membership table is closed upward."""
    bad = monotonicity_violations(inst)
    if bad:
        T, U = bad[0]
        raise MonotonicityViolation(
            f"{sorted(T, key=inst.values.index)} is a member but "
            f"{sorted(U, key=inst.values.index)} is not", bad)
    minimal = [T for T in inst.members if not any((T - {v}) in inst.members for v in T)]
    return [tuple(sorted(T, key=inst.values.index)) for T in inst.sort(minimal)]
