from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from curvegroups.algebra import (BiLaurentPoly, LaurentPoly, bareiss_determinant, bilaurent_gcd,
                                 cyclotomic8, laurent_gcd, minor_gcd, nf_inverse,
                                 smith_normal_form)
from curvegroups.algebra.matrices import mat_mul
from curvegroups.errors import BadMinorSize, NotSquare, ZeroInverse

from oracles import T, T1, T2, bilaurent_to_sympy, integer_smith_diagonal, laurent_to_sympy, nf_to_sympy

K = cyclotomic8()
XI = K.gen


def lp(coeffs, shift=0):
    return LaurentPoly.from_coeffs(coeffs, ring=K, shift=shift)


def q_poly(coeffs, shift=0):
    return LaurentPoly.from_coeffs(coeffs, shift=shift)


nf_elements = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4),
                       min_size=4, max_size=4).map(K.element)
nonzero_nf = nf_elements.filter(bool)


# number field

def test_inverse_of_xi_is_minus_xi_cubed():
    assert nf_inverse(XI) == -XI**3


def test_inverse_of_one():
    assert nf_inverse(K.one) == K.one


def test_inverse_of_sqrt2_is_half_sqrt2():
    s = XI**3 - XI
    assert s * s == 2
    assert nf_inverse(s) == s * Fraction(1, 2)


def test_sqrt2_squares_to_two_under_both_signs():
    assert K.sqrt2 * K.sqrt2 == 2
    assert cyclotomic8(-1).sqrt2 * cyclotomic8(-1).sqrt2 == 2
    assert K.sqrt2 == -cyclotomic8(-1).sqrt2


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        nf_inverse(K.zero)


@given(nf_elements, nonzero_nf)
def test_product_times_inverse_recovers_factor(a, b):
    assert (a * b) * nf_inverse(b) == a


@given(nf_elements, nf_elements)
def test_multiplication_matches_complex_embedding(a, b):
    assert sympy.expand(nf_to_sympy(a * b) - nf_to_sympy(a) * nf_to_sympy(b)) == 0


# Laurent polynomials over Q and Q(xi)

def test_gcd_of_t2_minus_1_and_t3_minus_1():
    assert laurent_gcd(q_poly([-1, 0, 1]), q_poly([-1, 0, 0, 1])) == q_poly([-1, 1]).normalized()


def test_gcd_of_square_and_factor():
    p = lp([1, -K.sqrt2, 1])
    assert laurent_gcd(p * p, p) == p.normalized()


def test_coprime_quadratics():
    assert laurent_gcd(q_poly([1, 0, 1]), q_poly([2, 0, 1])).is_unit()


def test_gcd_matches_sympy_on_rational_polys():
    f = q_poly([2, -3, 0, 1])            # (t-1)^2 (t+2)
    g = q_poly([-1, 0, 0, 0, 1], shift=-2)  # t^-2 (t^4 - 1)
    ours = laurent_to_sympy(laurent_gcd(f, g))
    ref = sympy.gcd(sympy.expand(laurent_to_sympy(f)), sympy.expand(laurent_to_sympy(g) * T**2))
    assert sympy.simplify(ours / ref).is_constant()


small_q_polys = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(q_poly).filter(bool)


@given(small_q_polys, small_q_polys, small_q_polys)
def test_gcd_divides_and_scales(f, g, h):
    d = laurent_gcd(f, g)
    assert d.divides(f) and d.divides(g)
    scaled = laurent_gcd(f * h, g * h)
    assert scaled == (d * h).normalized()


@given(small_q_polys, small_q_polys)
def test_gcd_agrees_with_sympy(f, g):
    ours = laurent_to_sympy(laurent_gcd(f, g))
    a = sympy.expand(laurent_to_sympy(f) * T**10)
    b = sympy.expand(laurent_to_sympy(g) * T**10)
    ref = sympy.gcd(a, b)
    ref = sympy.factor(ref / T**sympy.Poly(ref, T).monoms()[-1][0])
    assert sympy.simplify(ours / ref).is_constant()


def test_normalization_fixes_lowest_term_and_leading_coefficient():
    p = lp([2, 4], shift=-3)
    n = p.normalized()
    assert n.min_exp == 0 and n.leading_coeff == 1


# two-variable Laurent polynomials

def test_bilaurent_coprime_linear_forms():
    t1, t2 = BiLaurentPoly.variables()
    assert bilaurent_gcd(t1 - 1, t2 - 1).is_unit()


def test_bilaurent_divisibility():
    t1, t2 = BiLaurentPoly.variables()
    assert bilaurent_gcd((t1 - 1) * (t2 - 1), t1 - 1) == (t1 - 1).normalized()


def test_bilaurent_common_factor():
    t1, t2 = BiLaurentPoly.variables()
    f = t1 * t2 - t1 - t2 + 1
    g = t1 * t1 - 1
    got = bilaurent_gcd(f, g)
    ref = sympy.gcd(bilaurent_to_sympy(f), bilaurent_to_sympy(g))
    assert sympy.simplify(bilaurent_to_sympy(got) / ref) in (1, -1)


bi_polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(-3, 3),
                           min_size=1, max_size=4).map(BiLaurentPoly).filter(bool)


@given(bi_polys, bi_polys)
def test_bilaurent_gcd_matches_sympy(f, g):
    got = bilaurent_to_sympy(bilaurent_gcd(f, g))
    ref = sympy.gcd(bilaurent_to_sympy(f), bilaurent_to_sympy(g))
    ratio = sympy.factor(got / ref)
    num, den = sympy.fraction(ratio)
    for part in (num, den):
        assert len(sympy.Poly(part, T1, T2).terms()) == 1


# determinants and minors

def cofactor_det(M):
    if len(M) == 1:
        return M[0][0]
    return sum((-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in M[1:]])
               for j in range(len(M)))


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor_expansion(M):
    assert bareiss_determinant(M) == cofactor_det(M)


def test_bareiss_identity_and_triangular():
    assert bareiss_determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    t = q_poly([0, 1])
    one = q_poly([1])
    assert bareiss_determinant([[t, one], [one * 0, t]], one) == t * t


def test_bareiss_rejects_non_square():
    with pytest.raises(NotSquare):
        bareiss_determinant([[1, 2]])


def test_minor_gcd_examples():
    assert minor_gcd([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == 1
    p = lp([1, -K.sqrt2, 1])
    zero = p * 0
    assert minor_gcd([[p, zero], [zero, p]], 2, one=lp([1])) == (p * p).normalized()
    with pytest.raises(BadMinorSize):
        minor_gcd([[1]], 2)


int_matrices = st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


@given(int_matrices, st.data())
def test_minor_gcd_is_permutation_and_unit_invariant(M, data):
    k = data.draw(st.integers(1, min(len(M), len(M[0]))))
    rows = data.draw(st.permutations(range(len(M))))
    cols = data.draw(st.permutations(range(len(M[0]))))
    shuffled = [[M[r][c] for c in cols] for r in rows]
    shuffled[0] = [-x for x in shuffled[0]]
    assert minor_gcd(M, k) == minor_gcd(shuffled, k)


# Smith normal form

def test_smith_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[1, 0], [0, 0]]).diagonal == (1, 0)
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)


def _det(M):
    return sympy.Matrix(M).det()


@given(int_matrices)
def test_smith_reconstruction(A):
    S = smith_normal_form(A)
    m, n = len(A), len(A[0])
    D = S.diagonal_matrix(m, n)
    assert mat_mul(mat_mul(S.U, A), S.V) == D
    assert abs(_det(S.U)) == 1 and abs(_det(S.V)) == 1
    nonzero = [d for d in S.diagonal if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert list(S.diagonal[len(nonzero):]) == [0] * (len(S.diagonal) - len(nonzero))
    assert sorted(nonzero) == integer_smith_diagonal(A)


@given(int_matrices, st.data())
def test_smith_diagonal_invariant_under_permutations(A, data):
    rows = data.draw(st.permutations(range(len(A))))
    cols = data.draw(st.permutations(range(len(A[0]))))
    B = [[A[r][c] for c in cols] for r in rows]
    assert smith_normal_form(A).diagonal == smith_normal_form(B).diagonal


def test_smith_on_200_random_matrices():
    import random
    rng = random.Random(20261017)
    for _ in range(200):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        S = smith_normal_form(A)
        assert mat_mul(mat_mul(S.U, A), S.V) == S.diagonal_matrix(m, n)


def test_every_permutation_of_a_3x3():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    want = smith_normal_form(A).diagonal
    assert list(want) == integer_smith_diagonal(A)
    for rows in permutations(range(3)):
        assert smith_normal_form([A[r] for r in rows]).diagonal == want
