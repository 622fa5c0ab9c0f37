"""Dense matrices as lists of rows over an exact ring.

Entries may be Python ints, Fractions, number-field elements or Laurent
polynomials; the routines only need ring arithmetic plus ``exact_div`` for
fraction-free elimination.
"""

from itertools import combinations
from math import gcd as igcd

from ..errors import BadMinorSize, NotDivisible, NotSquare, UsageError


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A or not B:
        return []
    n, m = shape(A)
    m2, p = shape(B)
    if m != m2:
        raise UsageError(f"cannot multiply {n}x{m} by {m2}x{p}")
    out = []
    for i in range(n):
        row = A[i]
        new = []
        for j in range(p):
            acc = row[0] * B[0][j]
            for k in range(1, m):
                acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    return [[c * a for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def submatrix(A, rows, cols):
    return [[A[i][j] for j in cols] for i in rows]


def mat_inverse(A):
    """Inverse over a field by Gauss-Jordan elimination."""
    n, m = shape(A)
    if n != m:
        raise NotSquare("inverse of a non-square matrix")
    one = A[0][0] ** 0 if hasattr(A[0][0], "__pow__") else 1
    zero = A[0][0] * 0
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise NotDivisible("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        inv = 1 / p if not hasattr(p, "inverse") else p.inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _exact_div(a, b):
    if isinstance(b, int) and b == 1:
        return a
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{b} does not divide {a}")
        return q
    return a.exact_div(b)


def bareiss_determinant(M, one=1):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    Every division is exact in the entry ring.  ``one`` is returned for the
    empty matrix.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise NotSquare(f"determinant of a non-square matrix ({n} rows)")
    if n == 0:
        return one
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not A[k][k]:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return A[k][k] * 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = _exact_div(num, prev) if num else num
            row_i[k] = row_i[k] * 0
        prev = akk
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def _gcd(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return igcd(a, b)
    if isinstance(a, int):
        a, b = b, a
    return a.gcd(b)


def _is_unit(a):
    if isinstance(a, int):
        return abs(a) == 1
    return a.is_unit()


def iter_minors(M, k):
    rows, cols = shape(M)
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            yield rs, cs, bareiss_determinant(submatrix(M, rs, cs))


def minor_gcd(M, k, one=1):
    """gcd of all k x k minors of M (zero if all vanish).

    Subsets are visited in lexicographic order and the fold stops as soon as
    the running gcd is a unit.
    """
    rows, cols = shape(M)
    if k < 0 or k > min(rows, cols):
        raise BadMinorSize(f"minor size {k} out of range for a {rows}x{cols} matrix")
    if k == 0:
        return one
    acc = None
    for _, _, d in iter_minors(M, k):
        if not d:
            continue
        acc = d if acc is None else _gcd(acc, d)
        if _is_unit(acc):
            break
    if acc is None:
        return M[0][0] * 0
    if isinstance(acc, int):
        return abs(acc)
    return acc.normalized()


def matrix_rank(M):
    """Rank over the fraction field, via Bareiss-style elimination."""
    A = [list(row) for row in M]
    rows, cols = shape(A)
    rank = 0
    prev = 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for r in range(rank + 1, rows):
            arc = A[r][c]
            for j in range(c, cols):
                num = A[r][j] * p - arc * A[rank][j]
                A[r][j] = _exact_div(num, prev) if num else num
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank
