"""Smith normal form over Euclidean domains.

The integer case serves abelianizations and cellular homology; the
Laurent-polynomial case serves twisted Alexander modules over Q(xi)[t^+-1].
"""

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly
from .matrices import identity, shape


class IntegerDomain:
    zero = 0
    one = 1

    @staticmethod
    def norm(a):
        return abs(a)

    @staticmethod
    def divmod(a, b):
        return divmod(a, b)

    @staticmethod
    def unit_normalizer(a):
        """Unit u with u*a canonical, together with its inverse."""
        return (-1, -1) if a < 0 else (1, 1)


class LaurentDomain:
    """Laurent polynomials over a field, units c*t^k."""

    def __init__(self, ring, var="t"):
        self.ring = ring
        self.var = var
        self.zero = LaurentPoly({}, ring, var)
        self.one = LaurentPoly({0: ring.one}, ring, var)

    @staticmethod
    def norm(a):
        return a.span

    @staticmethod
    def divmod(a, b):
        return a.divmod(b)

    def unit_normalizer(self, a):
        shift, scalar = a.normalization_unit()
        u = LaurentPoly({shift: scalar}, self.ring, self.var)
        inv = LaurentPoly({-shift: (1 / Fraction(scalar)) if not hasattr(scalar, "inverse") else scalar.inverse()},
                          self.ring, self.var)
        return u, inv


@dataclass(frozen=True)
class SmithForm:
    """``U * A * V == diag(diagonal)`` padded with zeros to the shape of A."""

    diagonal: tuple
    U: list
    V: list
    U_inv: list = None
    rank: int = 0

    def diagonal_matrix(self, rows, cols, zero=0):
        D = [[zero] * cols for _ in range(rows)]
        for i, d in enumerate(self.diagonal):
            D[i][i] = d
        return D


def _snf(A, dom, track_inverse=False):
    m, n = shape(A)
    A = [list(row) for row in A]
    U = identity(m, dom.one, dom.zero)
    V = identity(n, dom.one, dom.zero)
    Ui = identity(m, dom.one, dom.zero) if track_inverse else None

    def swap_rows(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        if Ui is not None:
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        if Ui is not None:
            for row in Ui:
                row[j] = row[j] - q * row[i]

    def add_col(i, j, q):
        # col_i += q * col_j
        for row in A:
            row[i] = row[i] + q * row[j]
        for row in V:
            row[i] = row[i] + q * row[j]

    def scale_row(i, u, uinv):
        A[i] = [u * a for a in A[i]]
        U[i] = [u * a for a in U[i]]
        if Ui is not None:
            for row in Ui:
                row[i] = row[i] * uinv

    rank = 0
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    a = A[i][j]
                    if a:
                        nm = dom.norm(a)
                        if best is None or nm < best[0]:
                            best = (nm, i, j)
                            if nm == 0:
                                break
                if best is not None and best[0] == 0:
                    break
            if best is None:
                return A, U, V, Ui, rank
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q, r = dom.divmod(A[i][t], p)
                    add_row(i, t, -q)
                    if r:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q, r = dom.divmod(A[t][j], p)
                    add_col(j, t, -q)
                    if r:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] and dom.divmod(A[i][j], p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                add_row(t, bad, dom.one)
                continue
            break
        u, uinv = dom.unit_normalizer(A[t][t])
        if u != dom.one:
            scale_row(t, u, uinv)
        rank += 1
    return A, U, V, Ui, rank


def smith_normal_form(A, track_inverse=False):
    """Integer Smith normal form with unimodular transforms U, V."""
    m, n = shape(A)
    A = [[int(x) for x in row] for row in A]
    D, U, V, Ui, rank = _snf(A, IntegerDomain, track_inverse)
    diag = tuple(D[i][i] for i in range(min(m, n)))
    return SmithForm(diag, U, V, Ui, rank)


def smith_normal_form_laurent(A, ring, var="t", track_inverse=False):
    m, n = shape(A)
    dom = LaurentDomain(ring, var)
    D, U, V, Ui, rank = _snf(A, dom, track_inverse)
    diag = tuple(D[i][i] for i in range(min(m, n)))
    return SmithForm(diag, U, V, Ui, rank)
