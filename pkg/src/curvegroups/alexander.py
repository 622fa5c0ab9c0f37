"""Fox calculus, Alexander matrices and twisted Alexander polynomials.

Φ(w) = t^ε(w) ρ(w) extends linearly to the group ring.  Matrices act on
row vectors, so the twisted chain complex of a presentation is

    C2 = K^{mk}  --A-->  C1 = K^{nk}  --B-->  C0 = K^k

with A the Φ-image of the Fox matrix and B the stack of Φ(x_j) - I.
"""

from dataclasses import dataclass, field

from .algebra.bilaurent import BiLaurentPoly
from .algebra.laurent import LaurentPoly, laurent_gcd
from .algebra.matrices import (bareiss_determinant, identity, mat_inverse, mat_mul, matrix_rank,
                               minor_gcd)
from .algebra.numberfield import NumberField
from .algebra.smith import smith_normal_form_laurent
from .errors import (DimensionMismatch, InconsistentGrading, NoDeletableGenerator,
                     RepresentationNotVerified, UnknownGenerator)
from .expr import evaluate
from .words import GroupRingElement, Word


def fox_derivative(w, j, rank=None):
    """∂w/∂x_j as a group-ring element (j is a 0-based generator index)."""
    w = Word(w)
    if rank is not None and (j < 0 or j >= rank or w.max_generator() >= rank):
        raise UnknownGenerator(f"generator {j} outside rank {rank}")
    terms = {}
    for i, x in enumerate(w):
        if abs(x) != j + 1:
            continue
        if x > 0:
            key, c = w[:i], 1
        else:
            key, c = w[: i + 1], -1
        terms[key] = terms.get(key, 0) + c
    return GroupRingElement(terms)


@dataclass(frozen=True)
class FoxMatrix:
    """Entry (i, j) is ∂r_i/∂x_j."""

    entries: tuple
    rank: int

    @property
    def shape(self):
        return len(self.entries), self.rank


def fox_matrix(P):
    rows = []
    for r in P.relators:
        row = tuple(fox_derivative(r, j) for j in range(P.rank))
        check = GroupRingElement()
        for j, d in enumerate(row):
            check = check + d * (GroupRingElement.word(Word.gen(j)) - 1)
        if check != GroupRingElement.word(r) - 1:
            raise AssertionError("Fox fundamental identity failed")
        rows.append(row)
    return FoxMatrix(tuple(rows), P.rank)


# classical Alexander matrix

def _grading_vectors(P, eps):
    vecs = []
    width = None
    for g in P.gens:
        if g not in eps:
            raise InconsistentGrading(f"no grading given for generator {g}")
        v = eps[g]
        v = (v,) if isinstance(v, int) else tuple(v)
        if width is None:
            width = len(v)
        if len(v) != width or width not in (1, 2):
            raise InconsistentGrading("gradings must all have 1 or 2 components")
        vecs.append(v)
    for r in P.relators:
        total = [0] * (width or 1)
        for x in r:
            v = vecs[abs(x) - 1]
            for k in range(len(total)):
                total[k] += v[k] if x > 0 else -v[k]
        if any(total):
            raise InconsistentGrading(f"relator {P.format(r)} has nonzero grading {total}")
    return vecs, width or 1


def _abelianize_entry(elem, vecs, width, vars):
    terms = {}
    for w, c in elem.terms.items():
        e = [0, 0]
        for x in w:
            v = vecs[abs(x) - 1]
            for k in range(width):
                e[k] += v[k] if x > 0 else -v[k]
        key = (e[0], e[1])
        terms[key] = terms.get(key, 0) + c
    return BiLaurentPoly(terms, vars)


@dataclass
class AlexanderGcds:
    matrix: list
    gcds: list
    rank: int
    variables: tuple

    @property
    def relevant(self):
        """gcd of the minors of size equal to the matrix rank."""
        if self.rank == 0:
            return BiLaurentPoly.constant(1, self.variables)
        return self.gcds[self.rank - 1]

    def relevant_is_unit(self, over="Z"):
        d = self.relevant
        return d.is_unit() if over == "Z" else d.is_unit_over_q()


def alexander_matrix(P, eps, delete=None):
    """Abelianized Fox matrix over Z[t^±] or Z[t1^±, t2^±]."""
    vecs, width = _grading_vectors(P, eps)
    vars = ("t", "s") if width == 1 else ("t1", "t2")
    F = fox_matrix(P)
    cols = [j for j in range(P.rank) if delete is None or P.gens[j] not in delete]
    M = [[_abelianize_entry(row[j], vecs, width, vars) for j in cols] for row in F.entries]
    return M, vars


def alexander_poly_gcds(P, eps, delete=None):
    """d_k = gcd of the k x k minors of the Alexander matrix, k = 1..min."""
    M, vars = alexander_matrix(P, eps, delete)
    one = BiLaurentPoly.constant(1, vars)
    if not M or not M[0]:
        return AlexanderGcds(M, [], 0, vars)
    size = min(len(M), len(M[0]))
    gcds = [minor_gcd(M, k, one) for k in range(1, size + 1)]
    rank = max((k for k in range(1, size + 1) if gcds[k - 1]), default=0)
    return AlexanderGcds(M, gcds, rank, vars)


# representations

class Representation:
    """Matrices over a number field and an integer grading per generator."""

    def __init__(self, field, gens, matrices, eps):
        gens = tuple(gens)
        if len(matrices) != len(gens) or len(eps) != len(gens):
            raise DimensionMismatch("need one matrix and one grading per generator")
        k = len(matrices[0]) if matrices else 0
        for M in matrices:
            if len(M) != k or any(len(row) != k for row in M):
                raise DimensionMismatch("matrices must all be square of the same size")
        self.field = field
        self.gens = gens
        self.matrices = [[[field(x) for x in row] for row in M] for M in matrices]
        self.eps = [int(e) for e in eps]
        self.degree = k
        self._inverses = {}

    def _matrix(self, x):
        g = abs(x) - 1
        if x > 0:
            return self.matrices[g]
        if g not in self._inverses:
            self._inverses[g] = mat_inverse(self.matrices[g])
        return self._inverses[g]

    def rho(self, w):
        out = identity(self.degree, self.field.one, self.field.zero)
        for x in Word(w):
            out = mat_mul(out, self._matrix(x))
        return out

    def grading(self, w):
        return sum(self.eps[abs(x) - 1] * (1 if x > 0 else -1) for x in Word(w))

    def t(self, e=1):
        return LaurentPoly.monomial(e, self.field.one, self.field)

    def phi(self, w):
        tp = self.t(self.grading(w))
        return [[tp * a for a in row] for row in self.rho(w)]

    def phi_ring(self, elem):
        k = self.degree
        zero = LaurentPoly({}, self.field)
        out = [[zero] * k for _ in range(k)]
        for w, c in elem.terms.items():
            M = self.phi(w)
            out = [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(out, M)]
        return out


def _field_names(K):
    """Symbols usable in entry expressions over K."""
    names = {"xi": K.gen, "xibar": K.gen.inverse()}
    if tuple(K.modulus) == (1, 0, 0, 0, 1):
        names.update(sqrt2=K.sqrt2, i=K.i)
    return names


@dataclass
class RepresentationSpec:
    """Representation given by entry expressions in xi and sqrt2, so it can
    be rebuilt under either sign of sqrt2."""

    modulus: tuple
    gens: tuple
    entries: list
    eps: list
    checks: dict = field(default_factory=dict)

    def build(self, sqrt2_sign=1):
        K = NumberField(self.modulus, sqrt2_sign=sqrt2_sign)
        names = _field_names(K)
        mats = [[[K(evaluate(e, names)) for e in row] for row in M] for M in self.entries]
        return Representation(K, self.gens, mats, self.eps)


@dataclass
class VerificationReport:
    ok: bool
    failures: list
    sqrt2_sign: int = 1
    notes: list = field(default_factory=list)


def verify_representation(P, rep):
    """Every relator must have grading 0 and map to the identity matrix."""
    if tuple(rep.gens) != tuple(P.gens):
        raise DimensionMismatch(f"representation generators {rep.gens} differ from {P.gens}")
    ident = identity(rep.degree, rep.field.one, rep.field.zero)
    failures = []
    for r in P.relators:
        if rep.grading(r):
            failures.append((P.format(r), f"grading sum {rep.grading(r)} != 0"))
        elif rep.rho(r) != ident:
            failures.append((P.format(r), "matrix product is not the identity"))
    return VerificationReport(not failures, failures, rep.field.sqrt2_sign)


def delta0(rep, g):
    """det(Φ(x_g) - I) for a 0-based generator index g."""
    M = rep.phi(Word.gen(g))
    one = LaurentPoly.constant(1, rep.field)
    for i in range(rep.degree):
        M[i][i] = M[i][i] - one
    return bareiss_determinant(M, one)


def resolve_representation(P, spec, signs=(1, -1)):
    """Pick the sqrt2 convention: the first of ``signs`` under which the
    relators verify and every ``delta0`` check holds."""
    reports = {}
    chosen = None
    for sign in signs:
        rep = spec.build(sign)
        report = verify_representation(P, rep)
        if report.ok and spec.checks:
            t = rep.t()
            names = dict(_field_names(rep.field), t=t)
            for gname, text in spec.checks.items():
                want = evaluate(text, names)
                if not isinstance(want, LaurentPoly):
                    want = LaurentPoly.constant(want, rep.field)
                got = delta0(rep, P.gens.index(gname))
                if got.normalized() != want.normalized():
                    report.ok = False
                    report.failures.append((f"delta0 {gname}", f"{got} != {want}"))
        reports[sign] = report
        if report.ok and chosen is None:
            chosen = (rep, report)
    if chosen is None:
        first = reports[signs[0]]
        fail = first.failures[0] if first.failures else ("?", "")
        which = "both sqrt2 conventions" if len(signs) > 1 else f"sqrt2 sign {signs[0]:+d}"
        raise RepresentationNotVerified(f"representation fails under {which}: {fail[0]}: {fail[1]}")
    rep, report = chosen
    if len(signs) == 1:
        report.notes.append(f"sqrt2 sign {signs[0]:+d} forced")
    else:
        both = all(reports[s].ok for s in signs)
        report.notes.append("both sqrt2 conventions pass" if both else
                            f"only sqrt2 sign {report.sqrt2_sign:+d} passes")
    return rep, report


# twisted Alexander polynomial

def _normalize(p):
    return p.normalized() if p else p


@dataclass
class FractionPair:
    numerator: LaurentPoly
    denominator: LaurentPoly

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


def _reduce_fraction(num, den):
    g = laurent_gcd(num, den)
    num, den = num.exact_div(g), den.exact_div(g)
    s, c = den.normalization_unit()
    unit = LaurentPoly({s: c}, den.ring, den.var)
    num, den = num * unit, den * unit
    if den.is_unit():
        return num
    return FractionPair(num, den)


@dataclass
class WadaResult:
    delta1: LaurentPoly
    delta0: LaurentPoly
    wada: object
    delta: object
    deleted: str
    h1_free_rank: int
    h1_torsion_order: LaurentPoly
    h0_order: LaurentPoly
    agree: bool
    sqrt2_sign: int = 1


def _twisted_matrices(P, rep):
    F = fox_matrix(P)
    k = rep.degree
    zero = LaurentPoly({}, rep.field)
    n = P.rank
    A = [[zero] * (n * k) for _ in range(len(P.relators) * k)]
    for i, row in enumerate(F.entries):
        for j, entry in enumerate(row):
            if not entry:
                continue
            block = rep.phi_ring(entry)
            for a in range(k):
                for b in range(k):
                    A[i * k + a][j * k + b] = block[a][b]
    one = LaurentPoly.constant(1, rep.field)
    B = []
    for j in range(n):
        M = rep.phi(Word.gen(j))
        for a in range(k):
            B.append([M[a][b] - (one if a == b else zero) for b in range(k)])
    return A, B


def _module_orders(A, B, field, k):
    """(free rank of H1, order of torsion of H1, order of H0)."""
    one = LaurentPoly.constant(1, field)
    nk = len(B)
    sB = smith_normal_form_laurent(B, field, track_inverse=True)
    s = sB.rank
    h0 = one
    for d in sB.diagonal[:s]:
        h0 = h0 * d
    if s < k:
        h0 = LaurentPoly({}, field)
    if not A:
        return nk - s, one, h0
    Ui = sB.U_inv
    tail = [row[s:] for row in Ui]
    C = mat_mul(A, tail) if nk - s else []
    if not C or not C[0]:
        return 0, one, h0
    sC = smith_normal_form_laurent(C, field)
    tors = one
    for d in sC.diagonal[: sC.rank]:
        tors = tors * d
    return (nk - s) - sC.rank, tors.normalized(), h0.normalized() if h0 else h0


def twisted_alexander_wada(P, rep, delete="auto", verify=True):
    """Wada's invariant Δ1/Δ0 together with the homological ratio
    ord(Tors H1)/ord(H0) of the twisted chain complex.

    ``delta`` is the homological ratio; it equals Wada's quotient whenever
    the column-deleted matrix has full column rank (checked and reported
    in ``agree``).  For presentations of deficiency > 1, such as free
    groups, only the homological ratio is meaningful.
    """
    if verify:
        report = verify_representation(P, rep)
        if not report.ok:
            rel, why = report.failures[0]
            raise RepresentationNotVerified(f"relator {rel}: {why}")
    k = rep.degree
    n = P.rank
    if delete == "auto":
        candidates = list(range(n))
    else:
        if delete not in P.gens:
            raise UnknownGenerator(f"unknown generator {delete!r}")
        candidates = [P.gens.index(delete)]
    j = next((g for g in candidates if delta0(rep, g)), None)
    if j is None:
        raise NoDeletableGenerator("det(Φ(x_j) - I) vanishes for every candidate generator")
    d0 = delta0(rep, j).normalized()
    A, B = _twisted_matrices(P, rep)
    one = LaurentPoly.constant(1, rep.field)
    cols = [c for c in range(n * k) if not (j * k <= c < (j + 1) * k)]
    sub = [[row[c] for c in cols] for row in A]
    m = len(P.relators)
    size = min(m, n - 1) * k
    d1 = minor_gcd(sub, size, one) if size else one
    d1 = _normalize(d1)
    wada = _reduce_fraction(d1, d0) if d1 else LaurentPoly({}, rep.field)
    free_rank, tors, h0 = _module_orders(A, B, rep.field, k)
    delta = _reduce_fraction(tors, h0) if h0 else LaurentPoly({}, rep.field)
    full = bool(sub) and matrix_rank(sub) == (n - 1) * k
    agree = (not full) or _same(wada, delta)
    return WadaResult(d1, d0, wada, delta, P.gens[j], free_rank, tors, h0, agree,
                      rep.field.sqrt2_sign)


def _same(a, b):
    if isinstance(a, FractionPair) or isinstance(b, FractionPair):
        return (isinstance(a, FractionPair) and isinstance(b, FractionPair)
                and a.numerator == b.numerator and a.denominator == b.denominator)
    return a == b
