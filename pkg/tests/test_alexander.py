import itertools
import random

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix
from hypothesis import given, settings
from hypothesis import strategies as st

from curvegroups.alexander import (Representation, alexander_poly_gcds, delta0, fox_derivative,
                                   fox_matrix, resolve_representation, twisted_alexander_wada,
                                   verify_representation)
from curvegroups.algebra.laurent import LaurentPoly
from curvegroups.algebra.numberfield import NumberField
from curvegroups.errors import (InconsistentGrading, NoDeletableGenerator,
                                RepresentationNotVerified, UnknownGenerator)
from curvegroups.formats import parse_representation, resolve_path
from curvegroups.presentation import Presentation
from curvegroups.words import GroupRingElement, Word

from conftest import PRESENTATION_FIXTURES, load
from oracles import (T, T1, T2, bilaurent_to_sympy, fox_image, fox_word_derivative,
                     laurent_to_sympy, nf_to_sympy, same_up_to_unit)

K = NumberField((1, 0, 0, 0, 1))
SQRT2 = sympy.sqrt(2)
P_OF_T = T**2 - SQRT2 * T + 1


def rho1(P):
    spec = parse_representation(resolve_path("fixtures/rho1.rep"))
    return resolve_representation(P, spec)[0]


def as_dict(elem):
    return {tuple(w): c for w, c in elem.terms.items()}


# Fox calculus

def test_fox_of_a_power():
    d = fox_derivative(Word.gen(0, 3), 0)
    assert as_dict(d) == {(): 1, (1,): 1, (1, 1): 1}


def test_fox_of_a_commutator():
    P = Presentation(["x", "y"])
    w = P.word("[x,y]")
    one = GroupRingElement.one()
    assert fox_derivative(w, 0) == one - GroupRingElement.word(P.word("x y x^-1"))
    assert fox_derivative(w, 1) == GroupRingElement.word(P.word("x")) - \
        GroupRingElement.word(P.word("x y x^-1 y^-1"))


def test_fox_rejects_out_of_range():
    with pytest.raises(UnknownGenerator):
        fox_derivative(Word([1, 3]), 0, rank=2)


def fundamental_identity_holds(w, rank):
    total = GroupRingElement()
    for j in range(rank):
        total = total + fox_derivative(w, j) * (GroupRingElement.word(Word.gen(j)) - 1)
    return total == GroupRingElement.word(w) - 1


def test_fundamental_identity_on_500_random_words():
    rng = random.Random(500)
    for _ in range(500):
        rank = rng.randint(1, 4)
        w = Word([rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(rng.randint(0, 16))])
        assert fundamental_identity_holds(w, rank)


@pytest.mark.parametrize("name", PRESENTATION_FIXTURES)
def test_fundamental_identity_on_fixture_relators(name):
    P = load(name)
    for r in P.relators:
        assert fundamental_identity_holds(r, P.rank)
    assert fox_matrix(P).shape == (len(P.relators), P.rank)


@given(st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=14),
       st.integers(1, 3))
def test_fox_matches_oracle(ls, j):
    w = Word(ls)
    assert as_dict(fox_derivative(w, j - 1)) == fox_word_derivative(list(w), j)


def test_fox_images_match_oracle_under_rho1(g1_xyw):
    rep = rho1(g1_xyw)
    mats = {}
    for g in range(g1_xyw.rank):
        t_pow = T**rep.eps[g]
        M = sympy.Matrix([[nf_to_sympy(a) for a in row] for row in rep.matrices[g]]) * t_pow
        mats[g + 1] = M
        mats[-(g + 1)] = M.inv()
    for r in g1_xyw.relators:
        for j in range(g1_xyw.rank):
            got = rep.phi_ring(fox_derivative(r, j))
            want = fox_image(list(r), j + 1, mats.get, rep.degree)
            for a in range(rep.degree):
                for b in range(rep.degree):
                    assert sympy.expand(laurent_to_sympy(got[a][b]) - want[a, b]) == 0


# classical Alexander gcds

def test_trefoil_alexander_polynomial():
    g = alexander_poly_gcds(load("trefoil"), {"x": 1, "y": 1})
    assert g.rank == 1
    assert same_up_to_unit(bilaurent_to_sympy(g.relevant, T, sympy.Symbol("s")), T**2 - T + 1)


@pytest.mark.parametrize("name,extra", [("G1-xyuv", ["u", "v"]), ("G1-xyw", ["w"])])
def test_g1_alexander_gcds_are_units(name, extra):
    P = load(name)
    eps = {"x": (1, 0), "y": (0, 1), **{g: (0, 0) for g in extra}}
    g = alexander_poly_gcds(P, eps)
    assert g.relevant_is_unit()
    assert sympy.simplify(bilaurent_to_sympy(g.relevant, T1, T2)).is_number


def test_free_group_has_empty_alexander_matrix():
    g = alexander_poly_gcds(Presentation(["x", "y"]), {"x": 1, "y": 1})
    assert g.rank == 0 and g.gcds == []
    assert g.relevant.is_unit()


def test_inconsistent_grading_is_rejected():
    with pytest.raises(InconsistentGrading):
        alexander_poly_gcds(load("trefoil"), {"x": 1, "y": 2})
    with pytest.raises(InconsistentGrading):
        alexander_poly_gcds(load("trefoil"), {"x": 1})


# twisted Alexander polynomial

def test_rho1_resolves_with_positive_sqrt2(g1_xyw):
    spec = parse_representation(resolve_path("fixtures/rho1.rep"))
    rep, report = resolve_representation(g1_xyw, spec)
    assert report.ok and report.sqrt2_sign == 1
    assert "only sqrt2 sign +1 passes" in report.notes


def test_twisted_polynomial_of_g1(g1_xyw):
    res = twisted_alexander_wada(g1_xyw, rho1(g1_xyw))
    p = laurent_to_sympy(res.delta0)
    assert sympy.expand(p - P_OF_T) == 0
    assert sympy.expand(laurent_to_sympy(res.delta1) - P_OF_T**2) == 0
    assert sympy.expand(laurent_to_sympy(res.wada) - P_OF_T) == 0
    assert sympy.expand(laurent_to_sympy(res.delta) - P_OF_T) == 0
    assert res.agree and res.h1_free_rank == 0
    assert str(res.delta) == "t^2 - sqrt2*t + 1"


def test_twisted_polynomial_roots_are_xi_and_its_conjugate(g1_xyw):
    d = laurent_to_sympy(twisted_alexander_wada(g1_xyw, rho1(g1_xyw)).delta)
    xi = (1 + sympy.I) / SQRT2
    for root in (xi, sympy.conjugate(xi)):
        assert sympy.expand(d.subs(T, root)) == 0


def test_twisted_polynomial_against_sympy_determinants(g1_xyw):
    """Delta1 from the gcd of sympy maximal minors, Delta0 from sympy det."""
    rep = rho1(g1_xyw)
    k, n = rep.degree, g1_xyw.rank
    mats = {}
    for g in range(n):
        M = sympy.Matrix([[nf_to_sympy(a) for a in row] for row in rep.matrices[g]]) * T**rep.eps[g]
        mats[g + 1], mats[-(g + 1)] = M, M.inv()
    blocks = [[fox_image(list(r), j + 1, mats.get, k) for j in range(1, n)] for r in g1_xyw.relators]
    # clear negative powers of t, then work in QQ(sqrt2, i)[t]
    A = sympy.Matrix(sympy.BlockMatrix(blocks)).applyfunc(lambda e: sympy.expand(e * T**4))
    ring = sympy.QQ.algebraic_field(SQRT2, sympy.I)[T]
    D = DomainMatrix.from_Matrix(A).convert_to(ring)
    rows, cols = D.shape
    g = ring.zero
    for sel in itertools.combinations(range(rows), cols):
        g = ring.gcd(g, D.extract(list(sel), list(range(cols))).det())
    g = ring.to_sympy(g)
    d0 = sympy.expand((mats[1] - sympy.eye(k)).det())
    assert same_up_to_unit(g, P_OF_T**2)
    assert sympy.expand(d0 - P_OF_T) == 0


@pytest.mark.parametrize("deleted", ["x", "y", "w"])
def test_twisted_polynomial_is_independent_of_deleted_generator(g1_xyw, deleted):
    res = twisted_alexander_wada(g1_xyw, rho1(g1_xyw), delete=deleted)
    assert res.deleted == deleted
    assert str(res.wada) == str(res.delta) == "t^2 - sqrt2*t + 1"


def test_twisted_polynomial_survives_adding_a_redundant_generator(g1_xyw):
    rep = rho1(g1_xyw)
    Q = Presentation(list(g1_xyw.gens) + ["z"], list(g1_xyw.relators) + ["z = x w"])
    z = rep.rho(g1_xyw.word("x w"))
    bigger = Representation(rep.field, Q.gens, rep.matrices + [z], rep.eps + [rep.grading(g1_xyw.word("x w"))])
    assert verify_representation(Q, bigger).ok
    assert twisted_alexander_wada(Q, bigger).delta == twisted_alexander_wada(g1_xyw, rep).delta


def random_invertible(rng):
    while True:
        M = [[K.element([rng.randint(-3, 3) for _ in range(4)]) for _ in range(2)] for _ in range(2)]
        if M[0][0] * M[1][1] - M[0][1] * M[1][0]:
            return M


def test_free_group_twisted_polynomial_is_one():
    F2 = Presentation(["x", "y"])
    rng = random.Random(2)
    one = LaurentPoly.constant(1, K)
    for _ in range(20):
        rep = Representation(K, F2.gens, [random_invertible(rng), random_invertible(rng)], [1, 1])
        assert verify_representation(F2, rep).ok
        res = twisted_alexander_wada(F2, rep)
        assert res.delta == one


def test_failing_representation_is_rejected():
    P = Presentation(["x"], ["x^2"])
    rep = Representation(K, P.gens, [[[K(-1), K(0)], [K(0), K(-1)]]], [1])
    report = verify_representation(P, rep)
    assert not report.ok and "grading" in report.failures[0][1]
    with pytest.raises(RepresentationNotVerified):
        twisted_alexander_wada(P, rep)


def test_identity_matrices_verify_and_cannot_be_deleted(g1_xyw):
    I2 = [[K(1), K(0)], [K(0), K(1)]]
    rep = Representation(K, g1_xyw.gens, [I2] * 3, [0, 0, 0])
    assert verify_representation(g1_xyw, rep).ok
    assert not delta0(rep, 0)
    with pytest.raises(NoDeletableGenerator):
        twisted_alexander_wada(g1_xyw, rep)


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_twisted_polynomial_of_random_free_reps_is_one(seed):
    rng = random.Random(seed)
    F = Presentation(["x", "y", "z"])
    mats = [random_invertible(rng) for _ in range(3)]
    rep = Representation(K, F.gens, mats, [1, 1, 1])
    assert twisted_alexander_wada(F, rep).delta == LaurentPoly.constant(1, K)
