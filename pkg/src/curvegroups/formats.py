"""Line-oriented text formats for presentations, representations, braids,
monodromies and threshold tables.

Blank lines and ``#`` comments are ignored everywhere.
"""

import re
from importlib import resources
from pathlib import Path

from .alexander import RepresentationSpec
from .errors import ParseError, UsageError
from .notation import format_word, parse_equation, parse_word
from .permutations import from_cycles
from .presentation import Presentation
from .topology import MonodromyData, ThresholdInstance
from .words import BraidWord, FreeEndomorphism, Word


def _lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _split_key(line):
    if ":" not in line:
        raise ParseError(f"expected 'key: value', got {line!r}")
    key, value = line.split(":", 1)
    return key.strip().lower(), value.strip()


def resolve_path(path):
    """Read a file, falling back to the packaged fixtures for
    ``fixtures/NAME`` paths that do not exist on disk."""
    p = Path(path)
    if p.exists():
        return p.read_text()
    name = p.name
    if p.parent.name == "fixtures" or len(p.parts) == 1:
        ref = resources.files("curvegroups") / "fixtures" / name
        if ref.is_file():
            return ref.read_text()
    raise UsageError(f"no such file: {path}")


def fixture_names():
    root = resources.files("curvegroups") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.is_file())


# presentations

def parse_presentation(text, convention="aba^-1b^-1"):
    gens = None
    name = None
    rel_texts = []
    for line in _lines(text):
        key, value = _split_key(line)
        if key == "gens":
            if gens is not None:
                raise ParseError("duplicate 'gens' line")
            gens = value.split()
        elif key == "rel":
            rel_texts.append(value)
        elif key == "name":
            name = value
        else:
            raise ParseError(f"unknown key {key!r} in presentation")
    if gens is None:
        raise ParseError("presentation has no 'gens' line")
    rels = []
    for t in rel_texts:
        rels.extend(parse_equation(t, gens, convention))
    return Presentation(gens, rels, name=name)


def serialize_presentation(P):
    out = []
    if P.name:
        out.append(f"name: {P.name}")
    out.append("gens: " + " ".join(P.gens))
    out.extend(f"rel: {format_word(r, P.gens)}" for r in P.relators)
    return "\n".join(out) + "\n"


# representations

_MAT = re.compile(r"^mat\s+(\S+)\s*=\s*(.+)$")
_EPS = re.compile(r"^eps\s+(\S+)\s*=\s*(-?\d+)$")
_CHECK = re.compile(r"^check:\s*delta0\s+(\S+)\s*=\s*(.+)$")


def _parse_matrix(text):
    text = text.strip()
    if not (text.startswith("[[") and text.endswith("]]")):
        raise ParseError(f"matrix must look like [[a, b], [c, d]]: {text!r}")
    rows = re.findall(r"\[([^\[\]]*)\]", text[1:-1])
    if not rows:
        raise ParseError(f"empty matrix {text!r}")
    return [[e.strip() for e in row.split(",")] for row in rows]


def _parse_modulus(text):
    """Monic integer polynomial in xi, e.g. ``xi^4+1`` -> (1, 0, 0, 0, 1)."""
    text = text.replace(" ", "").replace("x^", "xi^")
    text = re.sub(r"xi\^", "X^", text).replace("xi", "X^1")
    coeffs = {}
    for term in re.findall(r"[+-]?[^+-]+", text):
        s = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        if "X^" in term:
            c, _, p = term.partition("X^")
            c = c.rstrip("*")
            coeffs[int(p)] = coeffs.get(int(p), 0) + s * (int(c) if c else 1)
        else:
            coeffs[0] = coeffs.get(0, 0) + s * int(term)
    if not coeffs:
        raise ParseError(f"bad field polynomial {text!r}")
    deg = max(coeffs)
    if coeffs[deg] != 1:
        raise ParseError("field polynomial must be monic")
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


def parse_representation(text):
    modulus = None
    eps = {}
    mats = {}
    order = []
    checks = {}
    for line in _lines(text):
        m = _CHECK.match(line)
        if m:
            checks[m.group(1)] = m.group(2).strip()
            continue
        m = _MAT.match(line)
        if m:
            g = m.group(1)
            mats[g] = _parse_matrix(m.group(2))
            if g not in order:
                order.append(g)
            continue
        m = _EPS.match(line)
        if m:
            eps[m.group(1)] = int(m.group(2))
            if m.group(1) not in order:
                order.append(m.group(1))
            continue
        key, value = _split_key(line)
        if key == "field":
            modulus = _parse_modulus(value)
        elif key == "gens":
            order = value.split()
        else:
            raise ParseError(f"unknown line in representation: {line!r}")
    if modulus is None:
        raise ParseError("representation has no 'field' line")
    for g in order:
        if g not in mats:
            raise ParseError(f"no matrix for generator {g}")
    return RepresentationSpec(modulus, tuple(order), [mats[g] for g in order],
                              [eps.get(g, 0) for g in order], checks)


def serialize_representation(spec):
    deg = len(spec.modulus) - 1
    poly = [f"xi^{deg}"]
    for i in range(deg - 1, -1, -1):
        c = spec.modulus[i]
        if c:
            term = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            mag = abs(c)
            body = str(mag) if not term else (term if mag == 1 else f"{mag}*{term}")
            poly.append(("+" if c > 0 else "-") + body)
    out = ["field: " + "".join(poly), "gens: " + " ".join(spec.gens)]
    out.extend(f"eps {g} = {e}" for g, e in zip(spec.gens, spec.eps))
    for g, M in zip(spec.gens, spec.entries):
        out.append(f"mat {g} = [" + ", ".join("[" + ", ".join(row) + "]" for row in M) + "]")
    out.extend(f"check: delta0 {g} = {v}" for g, v in spec.checks.items())
    return "\n".join(out) + "\n"


def with_presentation_order(spec, P):
    """Reorder a representation to the generator order of P."""
    if set(spec.gens) != set(P.gens):
        raise UsageError(f"representation generators {spec.gens} do not match {P.gens}")
    idx = [spec.gens.index(g) for g in P.gens]
    return RepresentationSpec(spec.modulus, tuple(P.gens), [spec.entries[i] for i in idx],
                              [spec.eps[i] for i in idx], dict(spec.checks))


# braids

def _braid_letters(text, strands):
    letters = []
    for tok in text.split():
        m = re.fullmatch(r"([sS])(\d+)(?:\^(-?\d+))?", tok)
        if not m:
            raise ParseError(f"bad braid letter {tok!r}")
        i = int(m.group(2))
        sign = -1 if m.group(1) == "S" else 1
        power = int(m.group(3)) if m.group(3) else 1
        if power < 0:
            sign, power = -sign, -power
        letters.extend([sign * i] * power)
    return BraidWord(strands, letters)


def parse_braids(text):
    strands = None
    braids = []
    for line in _lines(text):
        key, value = _split_key(line)
        if key == "strands":
            strands = int(value)
        elif key == "word":
            if strands is None:
                raise ParseError("'strands' must come before 'word'")
            braids.append(_braid_letters(value, strands))
        else:
            raise ParseError(f"unknown key {key!r} in braid file")
    if strands is None:
        raise ParseError("braid file has no 'strands' line")
    return strands, braids


def serialize_braids(strands, braids):
    out = [f"strands: {strands}"]
    for b in braids:
        out.append("word: " + " ".join(f"s{x}" if x > 0 else f"S{-x}" for x in b.letters))
    return "\n".join(out) + "\n"


# monodromy

_MONO = re.compile(r"^mono\s+(\d+)\s+(\S+)\s*=\s*(.*)$")


def parse_monodromy(text):
    r = m = None
    images = {}
    for line in _lines(text):
        mm = _MONO.match(line)
        if mm:
            images[(int(mm.group(1)), mm.group(2))] = mm.group(3)
            continue
        key, value = _split_key(line)
        if key == "loops":
            r = int(value)
        elif key == "fiber":
            m = int(value)
        else:
            raise ParseError(f"unknown key {key!r} in monodromy file")
    if r is None or m is None:
        raise ParseError("monodromy file needs 'loops' and 'fiber'")
    names = [f"x{i + 1}" for i in range(m)]
    monos = []
    for k in range(1, r + 1):
        imgs = []
        for i, x in enumerate(names):
            text_img = images.pop((k, x), None)
            imgs.append(parse_word(text_img, names) if text_img is not None else Word.gen(i))
        monos.append(FreeEndomorphism(m, imgs))
    if images:
        raise ParseError(f"monodromy entries out of range: {sorted(images)}")
    return MonodromyData(r, m, monos)


# threshold tables

def parse_threshold(text):
    values = None
    members = []
    generators = []
    for line in _lines(text):
        key, value = _split_key(line)
        if key == "values":
            values = value.split()
        elif key == "member":
            members.append(frozenset(value.split()))
        elif key == "contains":
            generators.append(frozenset(value.split()))
        else:
            raise ParseError(f"unknown key {key!r} in threshold file")
    if values is None:
        raise ParseError("threshold file has no 'values' line")
    if generators and members:
        raise ParseError("use either 'member' or 'contains' lines, not both")
    if generators:
        return ThresholdInstance.from_generators(values, generators)
    return ThresholdInstance(values, frozenset(members))


def parse_hom_spec(text, P, fill=True):
    """``"a:3 b:2 mod 6"`` (cyclic target) or ``"x:(1,2) y:(1,3) deg 4"``.

    Returns (images, modulus or None, n).  Unlisted generators go to the
    identity unless ``fill`` is false.
    """
    text = text.strip()
    m = re.search(r"\b(mod|deg)\s+(\d+)\s*$", text)
    if not m:
        raise ParseError("hom spec must end with 'mod N' or 'deg N'")
    kind, n = m.group(1), int(m.group(2))
    body = text[: m.start()].strip()
    pairs = re.findall(r"(\S+?)\s*:\s*(\([^:]*\)|\S+)", body)
    images = {}
    for g, v in pairs:
        if g not in P.gens:
            raise ParseError(f"unknown generator {g!r} in hom spec")
        images[g] = int(v) if kind == "mod" else from_cycles(v.replace(" ", ""), n)
    for g in P.gens if fill else ():
        if g not in images:
            images[g] = 0 if kind == "mod" else tuple(range(n))
    return images, (n if kind == "mod" else None), n
