"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line with its runtime
and fails if the check fails or exceeds its time budget.
"""

import io
import json
import random
import time
from contextlib import contextmanager

import pytest

from curvegroups.alexander import (Representation, alexander_poly_gcds, fox_derivative,
                                   resolve_representation, twisted_alexander_wada,
                                   verify_representation)
from curvegroups.algebra.laurent import LaurentPoly
from curvegroups.algebra.matrices import mat_mul
from curvegroups.algebra.numberfield import NumberField
from curvegroups.algebra.smith import smith_normal_form
from curvegroups.cli import run
from curvegroups.consequence import Certificate, consequence_check_bounded
from curvegroups.formats import parse_representation, parse_threshold, resolve_path
from curvegroups.presentation import (AbelianInvariants, OrbifoldSignature, Presentation,
                                      abelianization, orbifold_presentation)
from curvegroups.quotients import count_homs, find_separating_hom, verify_finite_hom
from curvegroups.subgroups import coset_table_from_hom, reidemeister_schreier
from curvegroups.tietze import tietze_simplify
from curvegroups.topology import (MonodromyData, WedgeType, cw_fibration_presentation,
                                  monotonicity_violations, orbifold_kernel_rank,
                                  threshold_minimal_sets, wedge_homotopy_type)
from curvegroups.words import (BraidWord, FreeEndomorphism, GroupRingElement, Word,
                               artin_automorphism)

from conftest import PRESENTATION_FIXTURES, load

K = NumberField((1, 0, 0, 0, 1))


@pytest.fixture
def criterion(pytestconfig):
    reporter = pytestconfig.pluginmanager.getplugin("terminalreporter")

    @contextmanager
    def check(number, title, budget):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            reporter.write_line(f"criterion {number}: FAIL  {title}")
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed < budget
        verdict = "PASS" if ok else "FAIL"
        reporter.write_line(f"criterion {number}: {verdict}  {title} ({elapsed:.2f} s, budget {budget} s)")
        assert ok, f"took {elapsed:.2f} s, budget {budget} s"

    return check


def cli_json(*argv):
    out = io.StringIO()
    code = run(["--format", "json", *argv], stdout=out, stderr=io.StringIO())
    return code, json.loads(out.getvalue())


def test_criterion_1_twisted_alexander_of_g1(criterion):
    with criterion(1, "twisted Alexander polynomial of G1 under rho1", 10):
        P = load("G1-xyw")
        spec = parse_representation(resolve_path("fixtures/rho1.rep"))
        rep, report = resolve_representation(P, spec)
        assert report.ok
        res = twisted_alexander_wada(P, rep)
        t = LaurentPoly.monomial(1, K.one, K)
        p = t * t - t * K.sqrt2 + 1
        assert p == LaurentPoly({0: K.one, 1: -K.sqrt2, 2: K.one}, K)
        assert res.delta1 == p * p
        assert res.delta0 == p
        assert res.delta == p and res.wada == p
        # with sqrt2 = xi^3 - xi the roots of p are xi^3 and its conjugate xi^-3
        root = K.gen ** 3
        assert (t - root) * (t - root.inverse()) == p


def test_criterion_2_free_group_has_trivial_twisted_polynomial(criterion):
    with criterion(2, "Delta = 1 for F2 under 20 random representations", 30):
        F2 = Presentation(["x", "y"])
        rng = random.Random(2)
        one = LaurentPoly.constant(1, K)

        def invertible():
            while True:
                M = [[K.element([rng.randint(-3, 3) for _ in range(4)]) for _ in range(2)]
                     for _ in range(2)]
                if M[0][0] * M[1][1] - M[0][1] * M[1][0]:
                    return M

        for _ in range(20):
            rep = Representation(K, F2.gens, [invertible(), invertible()], [1, 1])
            assert verify_representation(F2, rep).ok
            assert twisted_alexander_wada(F2, rep).delta == one


def test_criterion_3_separating_witness(criterion):
    with criterion(3, "phi separates x from z = v x; separate finds a witness", 5):
        code, doc = cli_json("verify-rep", "--presentation", "fixtures/G1-xyuv.pres",
                             "--define", "z = v x", "--perm", "x:(1,2) y:(1,3) z:(3,4) deg 4",
                             "--compare", "x", "z")
        r = doc["result"]
        assert code == 0 and r["ok"] and r["compare"]["distinct"]
        assert r["compare"] == {"a": "(1,2)", "b": "(3,4)", "distinct": True}
        g1 = load("G1-xyuv")
        first = find_separating_hom(g1, "x", "v x", 4)
        assert first is not None and first.degree <= 4 and verify_finite_hom(g1, first)
        assert find_separating_hom(g1, "x", "v x", 4) == first


def test_criterion_4_kernel_ranks(criterion):
    with criterion(4, "kernels onto Z_pq are free of rank pqr + (p-1)(q-1)", 60):
        for r, p, q, want in [(0, 2, 3, 2), (1, 2, 3, 8), (0, 2, 5, 4)]:
            sig = OrbifoldSignature(0, r + 1, (p, q))
            P = orbifold_presentation(sig)
            images = {g: 1 for g in P.gens if g.startswith("p")}
            images.update(mu1=q, mu2=p)
            T = coset_table_from_hom(P, images, modulus=p * q)
            rs = reidemeister_schreier(P, T, simplify=False)
            tz = tietze_simplify(rs.raw)
            assert tz.verdict == f"free of rank {want}"
            assert p * q * r + (p - 1) * (q - 1) == want
            assert orbifold_kernel_rank(sig, p * q) == want


def test_criterion_5_alexander_gcds_are_units(criterion):
    with criterion(5, "relevant Alexander minor gcds of G1 are units", 30):
        for name, rest in (("G1-xyuv", ("u", "v")), ("G1-xyw", ("w",))):
            eps = {"x": (1, 0), "y": (0, 1), **{g: (0, 0) for g in rest}}
            assert alexander_poly_gcds(load(name), eps).relevant_is_unit()


def test_criterion_6_abelianizations(criterion):
    with criterion(6, "abelianizations", 10):
        assert abelianization(load("G1-xyuv")) == AbelianInvariants(2, ())
        assert abelianization(load("G1-xyw")) == AbelianInvariants(2, ())
        assert abelianization(load("tildeG2")) == AbelianInvariants(4, ())
        orb = orbifold_presentation(OrbifoldSignature(0, 2, (2, 3)))
        assert abelianization(orb) == AbelianInvariants(1, (6,))


def test_criterion_7_property_suites(criterion):
    with criterion(7, "Fox, Artin, Smith, hom-count and threshold properties", 120):
        rng = random.Random(7)
        for _ in range(500):
            rank = rng.randint(1, 4)
            w = Word([rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(rng.randint(0, 16))])
            total = GroupRingElement()
            for j in range(rank):
                total = total + fox_derivative(w, j) * (GroupRingElement.word(Word.gen(j)) - 1)
            assert total == GroupRingElement.word(w) - 1

        for _ in range(200):
            n = rng.randint(2, 6)
            b = BraidWord(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                              for _ in range(rng.randint(0, 20))])
            boundary = Word(range(1, n + 1))
            assert artin_automorphism(b)(boundary) == boundary
            act = lambda ls: artin_automorphism(BraidWord(n, ls))  # noqa: E731
            i = rng.randint(1, n - 1)
            if i < n - 1:
                assert act(list(b.letters) + [i, i + 1, i]) == act(list(b.letters) + [i + 1, i, i + 1])
            assert act([i, -i]) == FreeEndomorphism.identity(n)

        for _ in range(200):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            S = smith_normal_form(A)
            assert mat_mul(mat_mul(S.U, A), S.V) == S.diagonal_matrix(m, n)

        for name in PRESENTATION_FIXTURES:
            P = load(name)
            single = count_homs(P, 3).total
            assert count_homs(P, 3, workers=3).total == single
            assert count_homs(tietze_simplify(P).presentation, 3).total == single

        inst = parse_threshold(resolve_path("fixtures/pair-thresholds.thr"))
        assert threshold_minimal_sets(inst) == [("4", "4i"), ("4", "-4i"), ("-4", "4i"), ("-4", "-4i")]
        assert monotonicity_violations(inst) == []


def test_criterion_8_consequence_certificate(criterion):
    with criterion(8, "[x, v x] is a depth-1 consequence in G1", 1):
        g1 = load("G1-xyuv")
        w = g1.word("[x, v x]")
        res = consequence_check_bounded(g1, w)
        assert res.found and res.certificate.depth == 1
        assert Certificate(tuple(res.certificate.factors)).verify(g1.relators, w)


def test_criterion_9_cw_and_homotopy_calculators(criterion):
    with criterion(9, "identity-monodromy CW presentation and wedge types", 30):
        M = MonodromyData(2, 3, [FreeEndomorphism.identity(3) for _ in range(2)])
        P = cw_fibration_presentation(M)
        assert P.euler_characteristic() == 2
        product = Presentation(["a1", "a2", "b1", "b2", "b3"],
                               [f"[a{k}, b{i}]" for k in (1, 2) for i in (1, 2, 3)])
        assert count_homs(P, 3).total == count_homs(product, 3).total
        assert wedge_homotopy_type(0, 2) == WedgeType(0, 0)
        assert wedge_homotopy_type(1, 3) == WedgeType(1, 0)
        assert wedge_homotopy_type(0, 2, cyclic=2) == WedgeType(0, 0, 2)
