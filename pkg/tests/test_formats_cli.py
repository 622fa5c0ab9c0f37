import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvegroups import __version__
from curvegroups.cli import run, selftest
from curvegroups.errors import ParseError, UsageError
from curvegroups.formats import (fixture_names, parse_braids, parse_hom_spec, parse_monodromy,
                                 parse_presentation, parse_representation, parse_threshold,
                                 resolve_path, serialize_braids, serialize_presentation,
                                 serialize_representation, with_presentation_order)
from curvegroups.presentation import Presentation
from curvegroups.words import BraidWord

from conftest import PRESENTATION_FIXTURES, load
from test_presentations import random_presentations


def cli(*argv, fmt="json"):
    out, err = io.StringIO(), io.StringIO()
    code = run(["--format", fmt, *argv], stdout=out, stderr=err)
    text = out.getvalue()
    doc = json.loads(text) if fmt == "json" and text else None
    return code, doc, text, err.getvalue()


# formats

@pytest.mark.parametrize("name", PRESENTATION_FIXTURES)
def test_presentation_round_trip_on_fixtures(name):
    P = load(name)
    assert parse_presentation(serialize_presentation(P)) == P


@given(random_presentations())
def test_presentation_round_trip_on_random_presentations(P):
    assert parse_presentation(serialize_presentation(P)) == P


def test_presentation_grammar_errors():
    with pytest.raises(ParseError):
        parse_presentation("rel: x\n")
    with pytest.raises(ParseError):
        parse_presentation("gens: x\nbogus: 1\n")


def test_commutator_convention_changes_parsing():
    text = "gens: a b\nrel: [a,b]\n"
    P = parse_presentation(text)
    Q = parse_presentation(text, "a^-1b^-1ab")
    assert P.format(P.relators[0]) == "a b a^-1 b^-1"
    assert Q.format(Q.relators[0]) == "a^-1 b^-1 a b"


@given(st.integers(2, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=8)
    .map(lambda ls: BraidWord(n, ls)), max_size=3).map(lambda bs: (n, bs))))
def test_braid_round_trip(data):
    n, braids = data
    assert parse_braids(serialize_braids(n, braids)) == (n, braids)


def test_braid_powers():
    n, (b,) = parse_braids("strands: 3\nword: s1^2 S2 s2^-2\n")
    assert b == BraidWord(3, [1, 1, -2, -2, -2])
    with pytest.raises(ParseError):
        parse_braids("word: s1\n")


def test_representation_round_trip():
    spec = parse_representation(resolve_path("fixtures/rho1.rep"))
    assert spec.modulus == (1, 0, 0, 0, 1)
    again = parse_representation(serialize_representation(spec))
    assert again == spec


def test_representation_reordering():
    spec = parse_representation(resolve_path("fixtures/rho1.rep"))
    P = Presentation(["w", "y", "x"])
    re = with_presentation_order(spec, P)
    assert re.gens == ("w", "y", "x") and re.eps == [0, 1, 1]
    with pytest.raises(UsageError):
        with_presentation_order(spec, Presentation(["a", "b", "c"]))


def test_representation_errors():
    with pytest.raises(ParseError):
        parse_representation("eps x = 1\nmat x = [[1]]\n")
    with pytest.raises(ParseError):
        parse_representation("field: xi^2+1\ngens: x\n")
    with pytest.raises(ParseError):
        parse_representation("field: 2*xi^2+1\nmat x = [[1]]\n")


def test_monodromy_defaults_to_identity():
    M = parse_monodromy("loops: 2\nfiber: 2\nmono 1 x1 = x1 x2\n")
    assert M.monodromies[1].images == M.monodromies[1].identity(2).images
    with pytest.raises(ParseError):
        parse_monodromy("loops: 1\nfiber: 1\nmono 2 x1 = x1\n")


def test_threshold_contains_lines():
    inst = parse_threshold("values: a b c\ncontains: a\n")
    assert len(inst.members) == 4
    with pytest.raises(ParseError):
        parse_threshold("values: a b\nmember: a\ncontains: b\n")


def test_hom_specs(g1):
    images, modulus, n = parse_hom_spec("x:1 mod 2", g1)
    assert modulus == 2 and n == 2 and images == {"x": 1, "y": 0, "u": 0, "v": 0}
    images, modulus, n = parse_hom_spec("x:(1,2) y:(1,3) deg 4", g1, fill=False)
    assert modulus is None and n == 4 and set(images) == {"x", "y"}


def test_missing_files_are_usage_errors():
    with pytest.raises(UsageError):
        resolve_path("no/such/file.pres")


# self test

def test_selftest_passes_on_every_fixture():
    results = selftest()
    assert {name for name, _, _ in results} == set(fixture_names())
    assert all(ok for _, ok, _ in results), [r for r in results if not r[1]]


# command line

def test_metadata_block():
    code, doc, _, _ = cli("abelianize", "--presentation", "fixtures/G1-xyuv.pres")
    assert code == 0
    assert list(doc) == ["metadata", "command", "result"]
    meta = doc["metadata"]
    assert meta["version"] == __version__
    assert meta["commutator"] == "[a,b] = aba^-1b^-1"
    assert meta["sqrt2"] == "xi^3 - xi"
    assert doc["result"]["abelianization"] == "Z^2"


def test_twisted_command():
    code, doc, _, _ = cli("twisted", "--presentation", "fixtures/G1-xyw.pres",
                          "--rep", "fixtures/rho1.rep")
    assert code == 0
    r = doc["result"]
    assert r["Delta"] == r["Delta0"] == "t^2 - sqrt2*t + 1"
    assert r["Delta1"] == "t^4 - 2*sqrt2*t^3 + 4*t^2 - 2*sqrt2*t + 1"
    assert r["routes_agree"] is True


def test_forcing_the_wrong_sqrt2_sign_fails():
    code, doc, _, _ = cli("--sqrt2", "-1", "twisted", "--presentation", "fixtures/G1-xyw.pres",
                          "--rep", "fixtures/rho1.rep")
    assert code == 1 and doc["result"]["error"] == "RepresentationNotVerified"
    assert "delta0 x" in doc["result"]["message"]


def test_homcount_and_separate():
    assert cli("homcount", "--presentation", "fixtures/free2.pres", "--degree", "3")[1]["result"]["count"] == 36
    code, doc, _, _ = cli("separate", "--presentation", "fixtures/G1-xyuv.pres",
                          "--a", "x", "--b", "v x", "--degree", "4")
    assert code == 0 and doc["result"]["found"] and doc["result"]["degree"] <= 4
    assert doc["result"]["image_a"] != doc["result"]["image_b"]


def test_verify_rep_with_a_defined_generator():
    code, doc, _, _ = cli("verify-rep", "--presentation", "fixtures/G1-xyuv.pres",
                          "--define", "z = v x", "--perm", "x:(1,2) y:(1,3) z:(3,4) deg 4",
                          "--compare", "x", "z")
    r = doc["result"]
    assert code == 0 and r["ok"] and r["extensions"] == 1
    assert r["images"]["u"] == "(1,4)(2,3)" and r["compare"]["distinct"]


def test_rs_writes_a_rereadable_presentation(tmp_path):
    out = tmp_path / "kernel.pres"
    code, doc, _, _ = cli("rs", "--presentation", "fixtures/z2z3.pres", "--hom", "a:3 b:2 mod 6",
                          "--output", str(out))
    assert code == 0 and doc["result"]["verdict"] == "free of rank 2"
    assert doc["result"]["index"] == 6
    code, doc, _, _ = cli("simplify", "--presentation", str(out))
    assert doc["result"]["verdict"] == "free of rank 2"


def test_rs_rejects_a_bad_hom():
    code, doc, _, _ = cli("rs", "--presentation", "fixtures/z2z3.pres", "--hom", "a:1 b:0 mod 3")
    assert code == 1 and doc["result"]["error"] == "NotAHomomorphism"


def test_consequence_command():
    code, doc, _, _ = cli("consequence", "--presentation", "fixtures/G1-xyuv.pres", "--word", "[x, v x]")
    r = doc["result"]
    assert code == 0 and r["verdict"] == "witness" and r["depth"] == 1 and r["reverified"]


@pytest.mark.parametrize("argv,key,value", [
    (["wedge", "--rank", "1", "--chi", "3"], "spheres", 0),
    (["kernel-rank", "--punctures", "2", "--cones", "2", "3", "--m", "6"], "rank", 8),
    (["orbifold", "--punctures", "2", "--cones", "2", "3"], "abelianization", "Z + Z6"),
    (["threshold", "--table", "fixtures/pair-thresholds.thr"], "minimal_sets",
     [["4", "4i"], ["4", "-4i"], ["-4", "4i"], ["-4", "-4i"]]),
    (["cw", "--monodromy", "fixtures/shear.mono"], "H1", "Z^2"),
    (["homology", "--presentation", "fixtures/trefoil.pres"], "H2", "0"),
    (["zvk", "--braids", "fixtures/sigma1sq.braid"], "abelianization", "Z^2"),
    (["alexander", "--presentation", "fixtures/trefoil.pres", "--eps", "x:1 y:1"],
     "relevant_gcd", "t^2 - t + 1"),
    (["fox", "--presentation", "fixtures/trefoil.pres"], "generators", ["x", "y"]),
])
def test_subcommands(argv, key, value):
    code, doc, _, _ = cli(*argv)
    assert code == 0 and doc["result"][key] == value


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    [],
    ["homcount", "--presentation", "fixtures/free2.pres"],
    ["abelianize", "--presentation", "missing.pres"],
    ["alexander", "--presentation", "fixtures/trefoil.pres", "--eps", "x1"],
])
def test_usage_errors_exit_with_two(argv):
    code, _, text, err = cli(*argv)
    assert code == 2 and text == "" and "usage error" in err


def test_math_errors_exit_with_one():
    code, doc, _, _ = cli("wedge", "--chi", "5")
    assert code == 1 and doc["result"]["error"] == "InconsistentInput"


@pytest.mark.parametrize("fmt", ["json", "text"])
def test_output_is_byte_identical_across_runs(fmt):
    argv = ("rs", "--presentation", "fixtures/tildeG1.pres", "--hom", "g2:1 mod 2")
    assert cli(*argv, fmt=fmt)[2] == cli(*argv, fmt=fmt)[2]


def test_text_format():
    code, _, text, _ = cli("homcount", "--presentation", "fixtures/free2.pres", "--degree", "2",
                           fmt="text")
    assert code == 0
    assert "command: homcount" in text and "  count: 4" in text


def test_selftest_flag():
    code, doc, _, _ = cli("--selftest")
    assert code == 0 and all(v["ok"] for v in doc["result"].values())
