"""Text syntax for scalars, algebra elements, bimodule words and
complexes.

Elements print as signed sums of coefficient*label terms ("x - 1/2*y"),
words as coefficient*left|right ("x|1 - 1|x").  Labels may not contain
whitespace or any of + - * | ( ) : , = so the forms parse back
unambiguously; every formatter here round-trips bit-exactly through its
parser.
"""

import re

from .grading import StructureError

_LABEL_BAD = re.compile(r"[\s+\-*|():,=]")


def valid_label(label):
    return bool(label) and not _LABEL_BAD.search(label)


def _split_terms(text):
    """Split "a + b - c" into [('+', 'a'), ('+', 'b'), ('-', 'c')]."""
    parts = re.split(r"([+-])", text)
    out = []
    sign = "+"
    expect_term = True
    for part in parts:
        part = part.strip()
        if part in ("+", "-"):
            if expect_term and part == "-":
                sign = "-" if sign == "+" else "+"
                continue
            if expect_term:
                raise StructureError("misplaced sign")
            sign = part
            expect_term = True
            continue
        if not part:
            continue
        out.append((sign, part))
        sign = "+"
        expect_term = False
    if expect_term and out:
        raise StructureError("trailing sign")
    return out


def _join_terms(parts):
    """Inverse of the term splitter: parts are (sign, body) pairs."""
    if not parts:
        return "0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _coeff_parts(field, c):
    """(sign, magnitude-text or None-for-one) of a scalar coefficient."""
    s = field.fmt(c)
    sign = "+"
    if s.startswith("-"):
        sign, s = "-", s[1:]
    return sign, (None if s == "1" else s)


def format_element(el):
    field = el.algebra.field
    parts = []
    for i in el.support():
        sign, mag = _coeff_parts(field, el.coeffs[i])
        label = el.algebra.labels[i]
        parts.append((sign, label if mag is None else f"{mag}*{label}"))
    return _join_terms(parts)


def parse_element(text, algebra):
    field = algebra.field
    text = text.strip()
    if text == "0":
        return algebra.zero()
    coeffs = [field.zero] * algebra.dim
    for sign, body in _split_terms(text):
        if "*" in body:
            coeff_text, label = body.split("*", 1)
            c = field.parse(coeff_text)
        else:
            label, c = body, field.one
        label = label.strip()
        if label in algebra._label_index:
            i = algebra.index_of(label)
        else:
            # a bare scalar means that multiple of the unit
            c = field.mul(c, field.parse(label))
            i = algebra.unit
        if sign == "-":
            c = field.neg(c)
        coeffs[i] = field.add(coeffs[i], c)
    return algebra.element(coeffs)


def format_word(w):
    field = w.algebra.field
    labels = w.algebra.labels
    parts = []
    for (i, j), c in w.sorted_terms():
        sign, mag = _coeff_parts(field, c)
        body = f"{labels[i]}|{labels[j]}"
        parts.append((sign, body if mag is None else f"{mag}*{body}"))
    return _join_terms(parts)


def parse_word(text, algebra):
    from .algebra import BimoduleWord
    field = algebra.field
    text = text.strip()
    if text == "0":
        return BimoduleWord.zero(algebra)
    terms = {}
    for sign, body in _split_terms(text):
        if "*" in body:
            coeff_text, pair = body.split("*", 1)
            c = field.parse(coeff_text)
        else:
            pair, c = body, field.one
        if "|" not in pair:
            raise StructureError(f"bimodule word term {body!r} needs left|right")
        la, lb = (p.strip() for p in pair.split("|", 1))
        key = (algebra.index_of(la), algebra.index_of(lb))
        if sign == "-":
            c = field.neg(c)
        acc = field.add(terms.get(key, field.zero), c)
        terms[key] = acc
    return BimoduleWord(algebra, terms)


def format_free_element(el):
    """Render sum of word-on-generator terms: "x|1 . e3 - 1|x . e1"."""
    parts = []
    field = el.complex.field
    labels = el.complex.algebra.labels
    for g, w in enumerate(el.words):
        gl = el.complex.gen_label(el.degree, g)
        for (i, j), c in w.sorted_terms():
            sign, mag = _coeff_parts(field, c)
            body = f"{labels[i]}|{labels[j]} . {gl}"
            parts.append((sign, body if mag is None else f"{mag}*{body}"))
    return _join_terms(parts)


# -- complex serialization -------------------------------------------------


def serialize_complex(P):
    """Canonical text of a free bimodule complex (algebra not included)."""
    lines = [f"complex length {P.length}"]
    for n in range(P.length + 1):
        lines.append(f"degree {n} rank {P.rank(n)}")
        for g in range(P.rank(n)):
            lines.append(
                f"  gen {g} degree {P.gen_degree(n, g)!r} label {P.gen_label(n, g)}")
        if n == 0:
            for g in range(P.rank(0)):
                lines.append(f"  augment {g} = {format_element(P.augmentation[g])}")
        else:
            for (row, col) in sorted(P.diffs[n]):
                lines.append(
                    f"  d ({row},{col}) = {format_word(P.diffs[n][(row, col)])}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_complex(text, algebra):
    from .complexes import FreeBimoduleComplex
    lines = [ln for ln in text.splitlines()]
    header = None
    ranks, degs, labels, diffs, augment = [], [], [], [None], []
    current = None
    for raw in lines:
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        if ln == "end":
            break
        toks = ln.split()
        if toks[0] == "complex":
            header = int(toks[2])
            continue
        if toks[0] == "degree":
            current = int(toks[1])
            if current != len(ranks):
                raise StructureError(f"degrees out of order at {current}")
            ranks.append(int(toks[3]))
            degs.append([None] * ranks[-1])
            labels.append([None] * ranks[-1])
            if current >= 1:
                diffs.append({})
            continue
        if toks[0] == "gen":
            g = int(toks[1])
            degs[current][g] = algebra.group.parse_degree(toks[3])
            labels[current][g] = toks[5]
            continue
        if toks[0] == "augment":
            g = int(toks[1])
            while len(augment) <= g:
                augment.append(algebra.zero())
            augment[g] = parse_element(ln.split("=", 1)[1], algebra)
            continue
        if toks[0] == "d":
            m = re.match(r"d\s*\((\d+)\s*,\s*(\d+)\)\s*=\s*(.*)$", ln)
            if not m:
                raise StructureError(f"bad differential line: {ln!r}")
            row, col = int(m.group(1)), int(m.group(2))
            diffs[current][(row, col)] = parse_word(m.group(3), algebra)
            continue
        raise StructureError(f"unrecognized complex line: {ln!r}")
    if header is None or header != len(ranks) - 1:
        raise StructureError("complex header does not match the degree blocks")
    return FreeBimoduleComplex(algebra, ranks, degs, diffs, augment, gen_labels=labels)
