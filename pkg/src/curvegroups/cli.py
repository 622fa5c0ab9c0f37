"""Command-line interface.

Every run prints one document: a metadata block with the conventions in
force followed by the command's result, either as ``key: value`` text or
as JSON.  Exit status is 0 on success, 1 for a mathematical failure of
valid input and 2 for malformed input.
"""

import argparse
import json
import sys

from . import __version__
from .alexander import (alexander_poly_gcds, fox_matrix, resolve_representation,
                        twisted_alexander_wada)
from .consequence import consequence_check_bounded
from .errors import CurveGroupsError, MathError, UsageError
from .formats import (parse_braids, parse_hom_spec, parse_monodromy, parse_presentation,
                      parse_representation, parse_threshold, resolve_path,
                      serialize_presentation, with_presentation_order)
from .notation import CONVENTIONS, parse_equation
from .presentation import (OrbifoldSignature, Presentation, abelianization,
                           orbifold_presentation, quotient_by_normal_closure)
from .quotients import count_homs, find_separating_hom, iter_homs, verify_finite_hom
from .subgroups import coset_table_from_hom, reidemeister_schreier, todd_coxeter
from .tietze import tietze_simplify
from .topology import (cw_fibration_presentation, orbifold_kernel_rank, presentation_homology,
                       threshold_minimal_sets, wedge_homotopy_type, zvk_presentation)
from . import permutations as perm


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _metadata(args, sqrt2_sign=None):
    sign = sqrt2_sign if sqrt2_sign is not None else (args.sqrt2 if args.sqrt2 != "auto" else 1)
    sign = int(sign)
    return {
        "version": __version__,
        "commutator": f"[a,b] = {args.convention}",
        "sqrt2": "xi^3 - xi" if sign > 0 else "xi - xi^3",
        "braid_action": "left to right; s_i sends x_i to x_i x_{i+1} x_i^-1",
        "permutation_action": "on the right; x y means x then y",
    }


def _load_presentation(args, path=None):
    return parse_presentation(resolve_path(path or args.presentation), args.convention)


def _pres_doc(P):
    return {"generators": list(P.gens), "relators": [P.format(r) for r in P.relators]}


# subcommand handlers; each returns (result dict, sqrt2 sign or None)

def cmd_simplify(args):
    P = _load_presentation(args)
    tz = tietze_simplify(P, max_growth=args.max_growth)
    return {
        "input": _pres_doc(P),
        "presentation": _pres_doc(tz.presentation),
        "verdict": tz.verdict,
        "moves": len(tz.trace),
        "limit_exceeded": tz.limit_exceeded,
        "generator_map": {g: tz.presentation.format(w) for g, w in tz.generator_map.items()},
    }


def cmd_abelianize(args):
    A = abelianization(_load_presentation(args))
    return {"abelianization": str(A), **A.as_dict()}


def cmd_quotient(args):
    P = _load_presentation(args)
    extra = []
    for text in args.rel:
        extra.extend(parse_equation(text, P.gens, args.convention))
    Q = quotient_by_normal_closure(P, extra)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(serialize_presentation(Q))
    return {"presentation": _pres_doc(Q), "abelianization": str(abelianization(Q))}


def cmd_orbifold(args):
    sig = OrbifoldSignature(args.genus, args.punctures, tuple(args.cones))
    P = orbifold_presentation(sig, eliminate=not args.keep_all)
    return {
        "presentation": _pres_doc(P),
        "abelianization": str(abelianization(P)),
        "orbifold_euler_characteristic": str(sig.euler_characteristic()),
    }


def cmd_zvk(args):
    strands, braids = parse_braids(resolve_path(args.braids))
    P = zvk_presentation(strands, braids)
    tz = tietze_simplify(P)
    return {
        "presentation": _pres_doc(P),
        "simplified": _pres_doc(tz.presentation),
        "abelianization": str(abelianization(P)),
    }


def cmd_rs(args):
    P = _load_presentation(args)
    if args.hom:
        images, modulus, n = parse_hom_spec(args.hom, P)
        T = coset_table_from_hom(P, images, modulus=modulus)
        source = f"hom to {'Z' + str(n) if modulus else 'S' + str(n)}"
    else:
        words = [P.word(w) for w in args.subgroup.split(";") if w.strip()]
        T = todd_coxeter(P, words, max_cosets=args.max_cosets)
        source = "coset enumeration"
    rs = reidemeister_schreier(P, T, simplify=not args.no_simplify)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(serialize_presentation(rs.raw))
    raw_chi = rs.raw.euler_characteristic()
    return {
        "table_source": source,
        "index": T.index,
        "coset_table": T.to_lists(),
        "schreier_generators": {g: P.format(w) for g, w in rs.name_map.items()},
        "raw": _pres_doc(rs.raw),
        "raw_euler_characteristic": raw_chi,
        "index_times_euler_characteristic": T.index * P.euler_characteristic(),
        "presentation": _pres_doc(rs.presentation),
        "verdict": rs.verdict,
    }


def cmd_fox(args):
    P = _load_presentation(args)
    F = fox_matrix(P)
    return {"generators": list(P.gens),
            "matrix": [[str(e) for e in row] for row in F.entries]}


def _parse_eps(text, P):
    eps = {}
    for item in text.split():
        if ":" not in item:
            raise UsageError(f"grading entries look like x:1 or x:1,0, got {item!r}")
        g, v = item.split(":", 1)
        parts = [int(p) for p in v.split(",")]
        eps[g] = parts[0] if len(parts) == 1 else tuple(parts)
    missing = [g for g in P.gens if g not in eps]
    if missing:
        raise UsageError(f"no grading for {missing}")
    return eps


def cmd_alexander(args):
    P = _load_presentation(args)
    res = alexander_poly_gcds(P, _parse_eps(args.eps, P), delete=args.delete)
    return {
        "variables": list(res.variables),
        "matrix": [[str(e) for e in row] for row in res.matrix],
        "rank": res.rank,
        "minor_gcds": [str(g) for g in res.gcds],
        "relevant_gcd": str(res.relevant),
        "relevant_is_unit": res.relevant_is_unit(),
    }


def _resolve_rep(args, P):
    spec = with_presentation_order(parse_representation(resolve_path(args.rep)), P)
    signs = (1, -1) if args.sqrt2 == "auto" else (int(args.sqrt2),)
    return resolve_representation(P, spec, signs)


def cmd_twisted(args):
    P = _load_presentation(args)
    rep, report = _resolve_rep(args, P)
    if not report.ok:
        raise MathError(f"representation does not verify: {report.failures[0]}")
    res = twisted_alexander_wada(P, rep, delete=args.delete)
    out = {
        "deleted_generator": res.deleted,
        "Delta1": str(res.delta1),
        "Delta0": str(res.delta0),
        "Delta": str(res.delta),
        "wada_quotient": str(res.wada),
        "h1_free_rank": res.h1_free_rank,
        "h1_torsion_order": str(res.h1_torsion_order),
        "h0_order": str(res.h0_order),
        "routes_agree": res.agree,
        "notes": report.notes,
    }
    return out, rep.field.sqrt2_sign


def cmd_homcount(args):
    P = _load_presentation(args)
    rep = count_homs(P, args.degree, workers=args.workers)
    return {"degree": rep.degree, "count": rep.total, "note": rep.note}


def cmd_separate(args):
    P = _load_presentation(args)
    h = find_separating_hom(P, args.a, args.b, args.degree)
    if h is None:
        return {"found": False, "max_degree": args.degree}
    return {"found": True, "degree": h.degree, "images": h.format(P.gens),
            "image_a": perm.to_cycles(h.evaluate(P.word(args.a))),
            "image_b": perm.to_cycles(h.evaluate(P.word(args.b)))}


def cmd_cw(args):
    M = parse_monodromy(resolve_path(args.monodromy))
    P = cw_fibration_presentation(M)
    H1, H2 = presentation_homology(P)
    return {"presentation": _pres_doc(P), "euler_characteristic": P.euler_characteristic(),
            "H1": str(H1), "H2": str(H2)}


def cmd_homology(args):
    if args.monodromy:
        P = cw_fibration_presentation(parse_monodromy(resolve_path(args.monodromy)))
    else:
        P = _load_presentation(args)
    H1, H2 = presentation_homology(P)
    return {"H1": str(H1), "H2": str(H2), "euler_characteristic": P.euler_characteristic()}


def cmd_wedge(args):
    W = wedge_homotopy_type(args.rank, args.chi, cyclic=args.cyclic)
    return {"circles": W.circles, "spheres": W.spheres, "cyclic_order": W.cyclic_order,
            "homotopy_type": str(W)}


def cmd_kernel_rank(args):
    sig = OrbifoldSignature(args.genus, args.punctures, tuple(args.cones))
    return {"rank": orbifold_kernel_rank(sig, args.m)}


def cmd_threshold(args):
    inst = parse_threshold(resolve_path(args.table))
    sets = threshold_minimal_sets(inst)
    return {"values": list(inst.values), "members": len(inst.members),
            "minimal_sets": [list(T) for T in sets]}


def cmd_verify_rep(args):
    P = _load_presentation(args)
    for text in args.define:
        name, _, rhs = text.partition("=")
        name = name.strip()
        if not name or not rhs.strip() or name in P.gens:
            raise UsageError(f"definitions look like 'z = v x' with a new name, got {text!r}")
        P = Presentation(list(P.gens) + [name],
                         list(P.relators) + parse_equation(text, list(P.gens) + [name],
                                                           args.convention), name=P.name)
    if args.rep:
        rep, report = _resolve_rep(args, P)
        out = {"kind": "matrix", "ok": report.ok,
               "failures": [list(f) for f in report.failures], "notes": report.notes}
        return out, rep.field.sqrt2_sign
    if not args.perm:
        raise UsageError("give --rep or --perm")
    images, modulus, n = parse_hom_spec(args.perm, P, fill=False)
    if modulus is not None:
        raise UsageError("--perm needs a 'deg N' permutation spec")
    free = [g for g in P.gens if g not in images]
    homs = iter_homs(P, n, fixed=images)
    out = {"kind": "permutation", "degree": n, "extensions": len(homs)}
    if not homs:
        out["ok"] = False
        return _fail(out)
    h = homs[0]
    out.update(ok=verify_finite_hom(P, h), images=h.format(P.gens), solved_for=free)
    if args.compare:
        a, b = (P.word(w) for w in args.compare)
        out["compare"] = {"a": perm.to_cycles(h.evaluate(a)), "b": perm.to_cycles(h.evaluate(b)),
                          "distinct": h.evaluate(a) != h.evaluate(b)}
    return out


class _Failure(Exception):
    def __init__(self, doc):
        self.doc = doc


def _fail(doc):
    raise _Failure(doc)


def cmd_consequence(args):
    P = _load_presentation(args)
    w = P.word(args.word)
    res = consequence_check_bounded(P, w, depth=args.depth, width=args.width)
    out = {"word": P.format(w), "verdict": res.verdict}
    if res.found:
        cert = res.certificate
        out["depth"] = cert.depth
        out["factors"] = [{"conjugator": P.format(c), "relator": P.format(P.relators[i]),
                           "sign": s} for c, i, s in cert.factors]
        out["reverified"] = cert.verify(P.relators, w)
    return out


def _build_parser():
    p = _Parser(prog="curvegroups", description="Computational tools for finitely presented groups.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--convention", choices=CONVENTIONS, default=CONVENTIONS[0],
                   help="expansion of the commutator [a,b]")
    p.add_argument("--sqrt2", choices=["auto", "+1", "-1"], default="auto",
                   help="which square root of 2 the symbol sqrt2 names in Q(xi)")
    p.add_argument("--selftest", action="store_true", help="check every bundled fixture and exit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=fn)
        return sp

    def pres(sp, required=True):
        sp.add_argument("--presentation", required=required, help="presentation file")

    sp = add("simplify", cmd_simplify, "Tietze-simplify a presentation")
    pres(sp)
    sp.add_argument("--max-growth", type=int, default=4)

    pres(add("abelianize", cmd_abelianize, "abelian invariants"))

    sp = add("quotient", cmd_quotient, "add relators")
    pres(sp)
    sp.add_argument("--rel", action="append", required=True, help="relator or equation")
    sp.add_argument("--output")

    for name, fn, text in (("orbifold", cmd_orbifold, "orbifold fundamental group"),
                           ("kernel-rank", cmd_kernel_rank, "rank of the kernel onto Z_m")):
        sp = add(name, fn, text)
        sp.add_argument("--genus", type=int, default=0)
        sp.add_argument("--punctures", type=int, required=True)
        sp.add_argument("--cones", type=int, nargs="*", default=[])
        if name == "orbifold":
            sp.add_argument("--keep-all", action="store_true",
                            help="keep the generator the product relation eliminates")
        else:
            sp.add_argument("--m", type=int, required=True)

    sp = add("zvk", cmd_zvk, "Zariski-Van Kampen presentation from braids")
    sp.add_argument("--braids", required=True)

    sp = add("rs", cmd_rs, "coset table and Reidemeister-Schreier")
    pres(sp)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--hom", help="e.g. 'a:3 b:2 mod 6' or 'x:(1,2) y:(1,3) deg 3'")
    group.add_argument("--subgroup", help="semicolon-separated subgroup generators")
    sp.add_argument("--max-cosets", type=int)
    sp.add_argument("--no-simplify", action="store_true")
    sp.add_argument("--output", help="write the raw subgroup presentation here")

    pres(add("fox", cmd_fox, "Fox matrix"))

    sp = add("alexander", cmd_alexander, "abelianized Fox matrix and minor gcds")
    pres(sp)
    sp.add_argument("--eps", required=True, help="e.g. 'x:1 y:1' or 'x:1,0 y:0,1'")
    sp.add_argument("--delete")

    sp = add("twisted", cmd_twisted, "twisted Alexander polynomial")
    pres(sp)
    sp.add_argument("--rep", required=True)
    sp.add_argument("--delete", default="auto")

    sp = add("homcount", cmd_homcount, "count homomorphisms to S_n")
    pres(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)

    sp = add("separate", cmd_separate, "find a hom to S_n separating two words")
    pres(sp)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--degree", type=int, default=4)

    sp = add("cw", cmd_cw, "mapping-torus presentation from monodromies")
    sp.add_argument("--monodromy", required=True)

    sp = add("homology", cmd_homology, "homology of the presentation complex")
    pres(sp, required=False)
    sp.add_argument("--monodromy")

    sp = add("wedge", cmd_wedge, "homotopy type of a curve complement")
    sp.add_argument("--rank", type=int, default=0)
    sp.add_argument("--chi", type=int, required=True)
    sp.add_argument("--cyclic", type=int)

    sp = add("threshold", cmd_threshold, "minimal threshold sets")
    sp.add_argument("--table", required=True)

    sp = add("verify-rep", cmd_verify_rep, "check a matrix or permutation representation")
    pres(sp)
    sp.add_argument("--rep")
    sp.add_argument("--perm", help="e.g. 'x:(1,2) y:(1,3) z:(3,4) deg 4'")
    sp.add_argument("--define", action="append", default=[], help="new generator, e.g. 'z = v x'")
    sp.add_argument("--compare", nargs=2, metavar=("A", "B"))

    sp = add("consequence", cmd_consequence, "bounded search for a consequence certificate")
    pres(sp)
    sp.add_argument("--word", required=True)
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--width", type=int, default=2)
    return p


def _render_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    return lines


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v):
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def _emit(doc, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write("\n".join(_render_text(doc)) + "\n")


def selftest():
    """Parse every bundled fixture and run its basic check; returns a list
    of (fixture, ok, detail)."""
    from .formats import fixture_names
    results = []
    pres = {}
    for name in fixture_names():
        try:
            text = resolve_path(f"fixtures/{name}")
            if name.endswith(".pres"):
                P = parse_presentation(text)
                pres[name[:-5]] = P
                detail = str(abelianization(P))
            elif name.endswith(".braid"):
                n, braids = parse_braids(text)
                detail = str(abelianization(zvk_presentation(n, braids)))
            elif name.endswith(".mono"):
                M = parse_monodromy(text)
                detail = f"chi = {cw_fibration_presentation(M).euler_characteristic()}"
            elif name.endswith(".thr"):
                detail = f"{len(threshold_minimal_sets(parse_threshold(text)))} minimal sets"
            elif name.endswith(".rep"):
                continue
            else:
                detail = "unknown kind"
            results.append((name, True, detail))
        except CurveGroupsError as exc:
            results.append((name, False, str(exc)))
    for name in fixture_names():
        if not name.endswith(".rep"):
            continue
        try:
            spec = parse_representation(resolve_path(f"fixtures/{name}"))
            target = next(P for P in pres.values() if set(P.gens) == set(spec.gens))
            _, report = resolve_representation(target, with_presentation_order(spec, target))
            results.append((name, report.ok, f"verifies on {target.name}; {'; '.join(report.notes)}"))
        except (CurveGroupsError, StopIteration) as exc:
            results.append((name, False, str(exc) or "no matching presentation"))
    return results


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    if args.selftest:
        results = selftest()
        doc = {"metadata": _metadata(args), "command": "selftest",
               "result": {name: {"ok": ok, "detail": detail} for name, ok, detail in results}}
        _emit(doc, args.format, stdout)
        return 0 if all(ok for _, ok, _ in results) else 1
    if not getattr(args, "command", None):
        stderr.write("usage error: no command given (see --help)\n")
        return 2
    sign = None
    status = 0
    try:
        out = args.handler(args)
        if isinstance(out, tuple):
            out, sign = out
    except _Failure as f:
        out, status = f.doc, 1
    except MathError as exc:
        out, status = {"error": type(exc).__name__, "message": str(exc)}, 1
    except (UsageError, OSError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    doc = {"metadata": _metadata(args, sign), "command": args.command, "result": out}
    _emit(doc, args.format, stdout)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
