"""Problem files: the batch input format of the command line tool.

A problem file declares a coefficient field, algebras by structure
constants, optional bicharacters, resolutions (builtin or inline) and
named cochains.  Parsing never throws: it returns the model together
with a list of diagnostics carrying line and column numbers, and a
canonical printer reproduces any successfully parsed file in canonical
form (printer . parser is the identity on canonical files).

    field Q
    algebra A
      grading Z
      basis 1:[0] x:[1]
      unit 1
      mul x x -> 0
    end
    resolution P over A = truncated(8)
    cochain f on P degree 1
      0 -> x
    end
"""

from .algebra import GradedAlgebra
from .bicharacter import Bicharacter
from .complexes import Cochain, truncated_polynomial_resolution
from .fields import FieldError, parse_field
from .grading import GradingGroup, StructureError
from .textio import parse_element, valid_label


class Diagnostic:
    __slots__ = ("line", "col", "message")

    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        self.message = message

    def __repr__(self):
        return f"line {self.line}, col {self.col}: {self.message}"


class ProblemFile:
    def __init__(self):
        self.field = None
        self.algebras = {}
        self.algebra_src = {}      # name -> (grading tokens, basis pairs, unit, mul rows)
        self.bicharacters = {}     # name -> (Bicharacter, left name, right name)
        self.resolutions = {}      # name -> (complex, algebra name, spec text)
        self.cochains = {}         # name -> (Cochain, resolution name)
        self.order = []            # declaration order for canonical printing


def _tok_col(line_text, token, start=0):
    pos = line_text.find(token, start)
    return pos + 1 if pos >= 0 else 1


def parse_problem(text):
    """Parse a problem file; returns (ProblemFile or None, diagnostics)."""
    pf = ProblemFile()
    diags = []
    lines = text.splitlines()
    i = 0

    def err(lineno, col, msg):
        diags.append(Diagnostic(lineno, col, msg))

    def block(start):
        """Lines of an indented block up to 'end'; returns (rows, next_index)."""
        rows = []
        j = start
        while j < len(lines):
            stripped = lines[j].strip()
            if stripped == "end":
                return rows, j + 1
            if stripped and not stripped.startswith("#"):
                rows.append((j + 1, lines[j]))
            j += 1
        err(start, 1, "block is never closed with 'end'")
        return rows, j

    while i < len(lines):
        lineno = i + 1
        raw = lines[i]
        line = raw.strip()
        i += 1
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        head = toks[0]
        try:
            if head == "field":
                if len(toks) != 2:
                    err(lineno, 1, "expected: field Q | F<p>")
                    continue
                pf.field = parse_field(toks[1])
            elif head == "algebra":
                if pf.field is None:
                    err(lineno, 1, "field must be declared before any algebra")
                    return None, diags
                if len(toks) != 2 or not valid_label(toks[1]):
                    err(lineno, _tok_col(raw, toks[-1]), "expected: algebra NAME")
                    continue
                rows, i = block(i)
                _parse_algebra(pf, toks[1], rows, err)
            elif head == "bicharacter":
                if len(toks) != 5 or toks[2] != "on":
                    err(lineno, 1, "expected: bicharacter NAME on ALGEBRA ALGEBRA")
                    continue
                rows, i = block(i)
                _parse_bicharacter(pf, toks[1], toks[3], toks[4], rows, lineno, err)
            elif head == "resolution":
                if toks[-1:] == ["inline"]:
                    rows, i = block(i)
                    _parse_resolution_inline(pf, toks, raw, lineno, rows, err)
                else:
                    _parse_resolution_builtin(pf, toks, raw, lineno, err)
            elif head == "cochain":
                rows, i = block(i)
                _parse_cochain(pf, toks, raw, lineno, rows, err)
            else:
                err(lineno, _tok_col(raw, head), f"unknown declaration {head!r}")
        except (StructureError, FieldError, ValueError) as exc:
            err(lineno, 1, str(exc))
    if pf.field is None:
        err(len(lines) or 1, 1, "no field declaration")
    return (pf if not diags else None), diags


def _parse_algebra(pf, name, rows, err):
    field = pf.field
    grading = None
    basis = []
    unit = None
    mul_rows = []
    for lineno, raw in rows:
        toks = raw.split()
        head = toks[0]
        if head == "grading":
            orders = []
            for t in toks[1:]:
                if t == "Z":
                    orders.append(0)
                elif t.startswith("Z/"):
                    orders.append(int(t[2:]))
                else:
                    err(lineno, _tok_col(raw, t), f"bad grading factor {t!r}")
                    return
            grading = GradingGroup(orders)
        elif head == "basis":
            for t in toks[1:]:
                if ":" not in t:
                    err(lineno, _tok_col(raw, t), "basis entries look like LABEL:[d,...]")
                    return
                label, deg = t.split(":", 1)
                if not valid_label(label):
                    err(lineno, _tok_col(raw, t), f"bad basis label {label!r}")
                    return
                basis.append((label, deg))
        elif head == "unit":
            unit = toks[1] if len(toks) == 2 else None
            if unit is None:
                err(lineno, 1, "expected: unit LABEL")
                return
        elif head == "mul":
            if len(toks) < 5 or toks[3] != "->":
                err(lineno, 1, "expected: mul LABEL LABEL -> ELEMENT")
                return
            mul_rows.append((lineno, raw, toks[1], toks[2],
                             raw.split("->", 1)[1].strip()))
        else:
            err(lineno, _tok_col(raw, head), f"unknown algebra line {head!r}")
            return
    if grading is None:
        grading = GradingGroup(())
    if not basis:
        err(rows[0][0] if rows else 1, 1, "algebra needs a basis")
        return
    labels = [b[0] for b in basis]
    try:
        degrees = [grading.parse_degree(b[1]) for b in basis]
    except StructureError as exc:
        err(rows[0][0], 1, str(exc))
        return
    if unit is None or unit not in labels:
        err(rows[0][0], 1, "algebra needs a unit among its basis labels")
        return
    index = {lab: k for k, lab in enumerate(labels)}
    products = {}
    # parse product values against a throwaway algebra with zero products
    probe = GradedAlgebra(field, grading, labels, degrees, index[unit], {},
                          check=False)
    for lineno, raw, la, lb, rhs in mul_rows:
        if la not in index or lb not in index:
            err(lineno, _tok_col(raw, la), f"unknown basis label in mul line")
            return
        try:
            value = parse_element(rhs, probe)
        except (StructureError, FieldError) as exc:
            err(lineno, _tok_col(raw, rhs), str(exc))
            return
        products[(index[la], index[lb])] = {
            k: c for k, c in enumerate(value.coeffs) if not field.is_zero(c)}
    try:
        algebra = GradedAlgebra(field, grading, labels, degrees, index[unit], products)
    except StructureError as exc:
        err(rows[0][0] if rows else 1, 1, f"invalid algebra {name!r}: {exc}")
        return
    pf.algebras[name] = algebra
    pf.order.append(("algebra", name))


def _parse_bicharacter(pf, name, left, right, rows, lineno, err):
    if left not in pf.algebras or right not in pf.algebras:
        err(lineno, 1, f"bicharacter {name!r} references unknown algebras")
        return
    A, B = pf.algebras[left], pf.algebras[right]
    field = pf.field
    values = [[field.one for _ in range(B.group.nfactors)]
              for _ in range(A.group.nfactors)]
    for ln, raw in rows:
        toks = raw.split()
        if len(toks) != 5 or toks[0] != "value" or toks[3] != "=":
            err(ln, 1, "expected: value I J = SCALAR")
            return
        try:
            gi, gj = int(toks[1]), int(toks[2])
            values[gi][gj] = field.parse(toks[4])
        except (ValueError, IndexError, FieldError) as exc:
            err(ln, _tok_col(raw, toks[1]), str(exc))
            return
    try:
        bi = Bicharacter(field, A.group, B.group, values)
    except StructureError as exc:
        err(lineno, 1, str(exc))
        return
    pf.bicharacters[name] = (bi, left, right)
    pf.order.append(("bicharacter", name))


def _resolution_target(pf, toks, raw, lineno, err):
    if len(toks) < 4 or toks[2] != "over":
        err(lineno, 1, "expected: resolution NAME over ALGEBRA = SPEC | inline")
        return None
    name, alg = toks[1], toks[3]
    if alg not in pf.algebras:
        err(lineno, _tok_col(raw, alg), f"unknown algebra {alg!r}")
        return None
    return name, alg


def _parse_resolution_inline(pf, toks, raw, lineno, rows, err):
    target = _resolution_target(pf, toks, raw, lineno, err)
    if target is None:
        return
    name, alg = target
    A = pf.algebras[alg]
    body = "\n".join(r for _, r in rows)
    from .textio import parse_complex
    try:
        P = parse_complex(f"complex length {_inline_length(rows)}\n"
                          + body + "\nend", A)
    except (StructureError, FieldError, ValueError) as exc:
        err(lineno, 1, f"inline resolution {name!r}: {exc}")
        return
    pf.resolutions[name] = (P, alg, "inline")
    pf.order.append(("resolution", name))


def _parse_resolution_builtin(pf, toks, raw, lineno, err):
    target = _resolution_target(pf, toks, raw, lineno, err)
    if target is None:
        return
    name, alg = target
    A = pf.algebras[alg]
    spec = "".join(toks[4:]).lstrip("=")
    try:
        if spec.startswith("truncated(") and spec.endswith(")"):
            length = int(spec[len("truncated("):-1])
            P = truncated_polynomial_resolution(A, length)
        elif spec.startswith("bar(") and spec.endswith(")"):
            from .oracle import bar_resolution
            length = int(spec[len("bar("):-1])
            P = bar_resolution(A, length)
        else:
            err(lineno, _tok_col(raw, toks[4]), f"unknown resolution spec {spec!r}")
            return
    except (StructureError, ValueError) as exc:
        err(lineno, 1, f"resolution {name!r}: {exc}")
        return
    pf.resolutions[name] = (P, alg, spec)
    pf.order.append(("resolution", name))


def _inline_length(rows):
    top = -1
    for _, raw in rows:
        toks = raw.split()
        if toks and toks[0] == "degree":
            top = max(top, int(toks[1]))
    return top


def _parse_cochain(pf, toks, raw, lineno, rows, err):
    if len(toks) != 6 or toks[2] != "on" or toks[4] != "degree":
        err(lineno, 1, "expected: cochain NAME on RESOLUTION degree N")
        return
    name, res = toks[1], toks[3]
    if res not in pf.resolutions:
        err(lineno, _tok_col(raw, res), f"unknown resolution {res!r}")
        return
    P = pf.resolutions[res][0]
    try:
        degree = int(toks[5])
        if not 0 <= degree <= P.length:
            raise ValueError(f"degree {degree} outside 0..{P.length}")
    except ValueError as exc:
        err(lineno, _tok_col(raw, toks[5]), str(exc))
        return
    images = [P.algebra.zero()] * P.rank(degree)
    for ln, body in rows:
        if "->" not in body:
            err(ln, 1, "expected: GENERATOR -> ELEMENT")
            return
        lhs, rhs = body.split("->", 1)
        try:
            g = int(lhs.strip())
            if not 0 <= g < P.rank(degree):
                raise ValueError(f"generator {g} outside 0..{P.rank(degree) - 1}")
            images[g] = parse_element(rhs.strip(), P.algebra)
        except (ValueError, StructureError, FieldError) as exc:
            err(ln, 1, str(exc))
            return
    pf.cochains[name] = (Cochain(P, degree, images), res)
    pf.order.append(("cochain", name))


# -- canonical printer ------------------------------------------------------


def canonical_text(pf):
    from .fields import field_name
    from .textio import format_element, serialize_complex
    out = [f"field {field_name(pf.field)}", ""]
    for kind, name in pf.order:
        if kind == "algebra":
            A = pf.algebras[name]
            out.append(f"algebra {name}")
            factors = " ".join("Z" if m == 0 else f"Z/{m}" for m in A.group.orders)
            out.append(f"  grading{(' ' + factors) if factors else ''}")
            for k, lab in enumerate(A.labels):
                out.append(f"  basis {lab}:{A.degrees[k]!r}")
            out.append(f"  unit {A.labels[A.unit]}")
            for i in range(A.dim):
                for j in range(A.dim):
                    if i == A.unit or j == A.unit:
                        continue
                    fibre = A.basis_product(i, j)
                    if fibre:
                        value = A.from_dict(dict(fibre))
                        out.append(f"  mul {A.labels[i]} {A.labels[j]} -> "
                                   f"{format_element(value)}")
            out.append("end")
        elif kind == "bicharacter":
            bi, left, right = pf.bicharacters[name]
            out.append(f"bicharacter {name} on {left} {right}")
            for gi, row in enumerate(bi.values):
                for gj, v in enumerate(row):
                    out.append(f"  value {gi} {gj} = {pf.field.fmt(v)}")
            out.append("end")
        elif kind == "resolution":
            P, alg, spec = pf.resolutions[name]
            if spec == "inline":
                out.append(f"resolution {name} over {alg} inline")
                body = serialize_complex(P).splitlines()
                out.extend("  " + ln for ln in body[1:-1])
                out.append("end")
            else:
                out.append(f"resolution {name} over {alg} = {spec}")
        elif kind == "cochain":
            c, res = pf.cochains[name]
            out.append(f"cochain {name} on {res} degree {c.degree}")
            for g, img in enumerate(c.images):
                if not img.is_zero():
                    out.append(f"  {g} -> {format_element(img)}")
            out.append("end")
        out.append("")
    while out and out[-1] == "":
        out.pop()
    return "\n".join(out) + "\n"
