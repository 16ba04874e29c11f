"""Batch command line front end.

Commands read a problem file, run one computation and print a
deterministic report.  Exit codes: 0 when everything passed, 1 when a
verification failed, 2 on input errors (with line/column diagnostics).
"""

import argparse
import os
import sys

from .algebra import twisted_tensor_algebra
from .bicharacter import uniform_bicharacter
from .complexes import (
    Cochain,
    cohomology_basis,
    is_coboundary,
    is_cocycle,
    verify_exactness,
)
from .fields import FieldError
from .grading import StructureError
from .lifting import (
    LiftingError,
    bracket,
    cup,
    diagonal_by_lifting,
    periodic_diagonal,
    solve_homotopy_lifting,
    verify_homotopy_lifting,
)
from .probfile import canonical_text, parse_problem
from .reporting import records_block, write_dimension_figure, write_verdict_figure
from .textio import format_element, format_free_element, serialize_complex


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None
    pf, diags = parse_problem(text)
    for d in diags:
        print(f"{path}:{d.line}:{d.col}: {d.message}", file=sys.stderr)
    return pf


def _default_diagonal(P):
    if P.builder and P.builder[0] == "truncated_polynomial":
        return periodic_diagonal(P)
    return diagonal_by_lifting(P)


def _named_cochain(pf, name):
    if name not in pf.cochains:
        raise StructureError(f"unknown cochain {name!r}")
    return pf.cochains[name]


def _named_resolution(pf, name):
    if name is None:
        if len(pf.resolutions) == 1:
            name = next(iter(pf.resolutions))
        else:
            raise StructureError("several resolutions declared; pass --name")
    if name not in pf.resolutions:
        raise StructureError(f"unknown resolution {name!r}")
    return name, pf.resolutions[name][0]


def _twist_for(pf, args, left, right):
    A = pf.algebras[left]
    B = pf.algebras[right]
    if getattr(args, "bicharacter", None):
        if args.bicharacter not in pf.bicharacters:
            raise StructureError(f"unknown bicharacter {args.bicharacter!r}")
        bi, lname, rname = pf.bicharacters[args.bicharacter]
        if lname != left or rname != right:
            raise StructureError("bicharacter is declared on other algebras")
        return bi
    q = pf.field.parse(args.twist) if getattr(args, "twist", None) else pf.field.one
    return uniform_bicharacter(pf.field, A.group, B.group, q)


def cmd_validate(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    ok = True
    for name, A in pf.algebras.items():
        report = A.validate()
        print(f"algebra {name}: {'ok' if report.ok else 'INVALID'}")
        for v in report.violations:
            ok = False
            print(f"  {v}")
    for name, (P, alg, spec) in pf.resolutions.items():
        print(f"resolution {name} over {alg}: length {P.length}, "
              f"ranks {list(P.ranks)} (d.d = 0, homogeneous, mu d_1 = 0)")
    for name, (c, res) in pf.cochains.items():
        cocycle = "cocycle" if c.degree < c.complex.length and is_cocycle(c) else "cochain"
        print(f"cochain {name} on {res}: degree {c.degree} ({cocycle})")
    print(f"canonical form: {len(canonical_text(pf).splitlines())} lines")
    return 0 if ok else 1


def cmd_resolve(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        name, P = _named_resolution(pf, args.name)
        up_to = args.up_to if args.up_to is not None else min(5, P.length - 1)
        report = verify_exactness(P, up_to)
    except (StructureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"resolution {name}: ranks {list(P.ranks)}")
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def cmd_cohomology(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        name, P = _named_resolution(pf, args.name)
        if args.degree + 1 > P.length:
            raise StructureError(
                f"cohomology at degree {args.degree} needs a longer truncation")
        dims = [len(cohomology_basis(P, n)) for n in range(args.degree + 1)]
    except (StructureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for n, d in enumerate(dims):
        print(f"dim HH^{n} = {d}")
    for i, rep in enumerate(cohomology_basis(P, args.degree)):
        values = "; ".join(
            f"{P.gen_label(args.degree, g)} -> {format_element(img)}"
            for g, img in enumerate(rep.images) if not img.is_zero())
        print(f"HH^{args.degree} representative {i}: {values or '0'}")
    if args.figures:
        path = write_dimension_figure(
            dims, args.figures, f"HH dimensions of {name}")
        print(f"figure: {path}")
    return 0


def cmd_cup(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        f, res_f = _named_cochain(pf, args.left)
        g, res_g = _named_cochain(pf, args.right)
        if res_f != res_g:
            raise StructureError("cup product needs cochains on one resolution")
        delta = _default_diagonal(f.complex)
        out = cup(f, g, delta, warn=False)
    except (StructureError, LiftingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not (is_cocycle(f) and is_cocycle(g)):
        print("warning: cup of non-cocycles is not cohomologically meaningful")
    P = f.complex
    print(f"cup {args.left} {args.right}: degree {out.degree}")
    for g_, img in enumerate(out.images):
        if not img.is_zero():
            print(f"  {P.gen_label(out.degree, g_)} -> {format_element(img)}")
    if out.is_zero():
        print("  0")
    return 0


def cmd_bracket(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        f, res_f = _named_cochain(pf, args.left)
        g, res_g = _named_cochain(pf, args.right)
        if res_f != res_g:
            raise StructureError("bracket needs cochains on one resolution")
        P = f.complex
        delta = _default_diagonal(P)
        lf = solve_homotopy_lifting(P, delta, f)
        lg = solve_homotopy_lifting(P, delta, g)
        out = bracket(f, lf, g, lg)
    except (StructureError, LiftingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for name, lift, c in (("left", lf, f), ("right", lg, g)):
        rep = verify_homotopy_lifting(P, delta, c, lift)
        print(f"{name} lifting: {'verified' if rep.ok else 'FAILED'}")
    print(f"bracket [{args.left}, {args.right}]: degree {out.degree}")
    for g_, img in enumerate(out.images):
        if not img.is_zero():
            print(f"  {P.gen_label(out.degree, g_)} -> {format_element(img)}")
    if out.is_zero():
        print("  0")
    elif is_coboundary(out):
        print("  (a coboundary: the class vanishes)")
    return 0


def cmd_lift(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        f, _ = _named_cochain(pf, args.cochain)
        P = f.complex
        delta = _default_diagonal(P)
        lift = solve_homotopy_lifting(P, delta, f)
    except (StructureError, LiftingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = verify_homotopy_lifting(P, delta, f, lift)
    print(f"homotopy lifting of {args.cochain} (degree {f.degree}, "
          f"shift {1 - f.degree}): {'verified' if rep.ok else 'NOT VERIFIED'}")
    for n in lift.psi.degrees():
        for g in range(P.rank(n)):
            el = lift.psi.component(n, g)
            if el is not None and not el.is_zero():
                print(f"  psi[{n}]({P.gen_label(n, g)}) = {format_free_element(el)}")
    return 0 if rep.ok else 1


def cmd_twist_build(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        _, P = _named_resolution(pf, args.left)
        _, Q = _named_resolution(pf, args.right)
        lname = pf.resolutions[args.left][1]
        rname = pf.resolutions[args.right][1]
        twist = _twist_for(pf, args, lname, rname)
        from .twist import twisted_tensor_resolution
        R = twisted_tensor_algebra(P.algebra, Q.algebra, twist)
        T = twisted_tensor_resolution(P, Q, twist, algebra=R)
        up_to = args.up_to if args.up_to is not None else min(5, T.length - 1)
        report = verify_exactness(T, up_to)
    except (StructureError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"twisted tensor algebra: dim {R.dim}, grading {R.group!r}, "
          f"basis {' '.join(R.labels)}")
    for line in report.lines():
        print(line)
    print(serialize_complex(T), end="")
    return 0 if report.ok else 1


def cmd_verify_iso(args):
    pf = _load(args.file)
    if pf is None:
        return 2
    try:
        _, P = _named_resolution(pf, args.left)
        _, Q = _named_resolution(pf, args.right)
        lname = pf.resolutions[args.left][1]
        rname = pf.resolutions[args.right][1]
        twist = _twist_for(pf, args, lname, rname)
        from .twist import verify_factorization
        report = verify_factorization(
            P, Q, twist, args.max_degree,
            delta_P=_default_diagonal(P), delta_Q=_default_diagonal(Q),
            threads=args.threads)
    except (StructureError, FieldError, LiftingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in report.lines():
        print(line)
    if args.emit == "records":
        print(records_block(report.records))
    if args.figures:
        path = write_verdict_figure(report.records, args.figures,
                                    "bracket factorization verdicts")
        print(f"figure: {path}")
    return 0 if report.ok else 1


def cmd_oracle_check(args):
    pf = _load(args.algebra)
    if pf is None:
        return 2
    try:
        name, P = _named_resolution(pf, args.name)
        from .oracle import oracle_check
        report = oracle_check(P, args.max_degree)
    except (StructureError, LiftingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for line in report.lines():
        print(line)
    if args.emit == "records":
        print(records_block(report.records))
    if args.figures:
        path = write_verdict_figure(report.records, args.figures,
                                    f"oracle verdicts for {name}")
        print(f"figure: {path}")
    return 0 if report.ok else 1


def cmd_example_paper(args):
    from .algebra import BimoduleWord, tensor_algebra_element, truncated_polynomial
    from .bicharacter import trivial_bicharacter
    from .complexes import truncated_polynomial_resolution
    from .fields import QQ
    from .lifting import HomotopyLifting, SelfMap
    from .twist import (
        tensor_cochain,
        tensor_element,
        tensor_homotopy_lifting,
        twisted_diagonal,
        twisted_tensor_resolution,
    )

    checks = []

    def check(name, ok, detail=""):
        checks.append((name, ok, detail))
        print(f"{'PASS' if ok else 'FAIL'} {name}{(' ' + detail) if detail else ''}")

    A = truncated_polynomial(QQ, 2, var="x")
    B = truncated_polynomial(QQ, 2, var="y")
    t = trivial_bicharacter(QQ, A.group, B.group)
    P = truncated_polynomial_resolution(A, 8)
    Q = truncated_polynomial_resolution(B, 8, gen_suffix="'")
    T = twisted_tensor_resolution(P, Q, t)
    dP, dQ = periodic_diagonal(P), periodic_diagonal(Q)
    dT = twisted_diagonal(T, dP, dQ)
    x, y = A.basis_element(1), B.basis_element(1)
    print("example: A = Q[x]/(x^2), B = Q[y]/(y^2), untwisted tensor product")

    f = Cochain.single(P, 1, 0, x)
    psi_f = SelfMap(P, 0, {n: [P.generator_element(n, 0).scaled(QQ.from_int(n))]
                           for n in range(P.length + 1)})
    print("table psi_f (lifting of e1 -> x):")
    for n in range(P.length + 1):
        print(f"  psi_f(e{n}) = {n}*e{n}")
    rep = verify_homotopy_lifting(P, dP, f, psi_f)
    check("psi_f is a homotopy lifting", rep.ok)

    g = Cochain.single(Q, 2, 0, y)
    psi_g = SelfMap(Q, -1, {n: [Q.generator_element(n - 1, 0) if n % 2 == 0
                                else Q.zero_element(n - 1)]
                            for n in range(1, Q.length + 1)})
    rep = verify_homotopy_lifting(Q, dQ, g, psi_g)
    check("psi_g (e_2j' -> e_2j-1') is a homotopy lifting", rep.ok)

    lf = HomotopyLifting(f, dP, psi_f)
    lg = HomotopyLifting(g, dQ, psi_g)
    combined = tensor_homotopy_lifting(T, lf, lg, dP, dQ)
    got = combined.psi.components[3][T.gen_index(3, 1, 0, 0)]
    expected = tensor_element(
        T, P.generator_element(1, 0),
        Q.generator_element(0, 0).word_action(BimoduleWord.from_pair(B.one(), y)))
    expected = expected + tensor_element(
        T, P.generator_element(0, 0).word_action(BimoduleWord.from_pair(x, A.one())),
        Q.generator_element(1, 0))
    print(f"psi_(f.g)(e1.e2') = {format_free_element(got)}")
    check("psi_(f.g)(e1.e2') = e1.e0'y + x e0.e1'", got == expected)

    fp = Cochain.single(Q, 1, 0, y)
    h = Cochain.single(P, 2, 0, A.one())
    hp = Cochain.single(Q, 2, 0, B.one())
    psi_fp = SelfMap(Q, 0, {n: [Q.generator_element(n, 0).scaled(QQ.from_int(n))]
                            for n in range(Q.length + 1)})
    zeroP = SelfMap(P, -1, {n: [P.zero_element(n - 1)]
                            for n in range(1, P.length + 1)})
    zeroQ = SelfMap(Q, -1, {n: [Q.zero_element(n - 1)]
                            for n in range(1, Q.length + 1)})
    F = tensor_cochain(T, f, fp)
    H = tensor_cochain(T, h, hp)
    psi_F = tensor_homotopy_lifting(T, HomotopyLifting(f, dP, psi_f),
                                    HomotopyLifting(fp, dQ, psi_fp), dP, dQ)
    psi_H = tensor_homotopy_lifting(T, HomotopyLifting(h, dP, zeroP),
                                    HomotopyLifting(hp, dQ, zeroQ), dP, dQ)
    out = bracket(F, psi_F, H, psi_H)
    R = T.algebra
    e23 = T.gen_index(5, 2, 0, 0)
    e32 = T.gen_index(5, 3, 0, 0)
    want23 = tensor_algebra_element(R, A.one(), y).scaled(QQ.from_int(2))
    want32 = tensor_algebra_element(R, x, B.one()).scaled(QQ.from_int(-2))
    print(f"[f.f', h.h'](e2.e3') = {format_element(out.images[e23])}")
    print(f"[f.f', h.h'](e3.e2') = {format_element(out.images[e32])}")
    check("[f.f', h.h'](e2.e3') = 2*1.y", out.images[e23] == want23)
    check("[f.f', h.h'](e3.e2') = -2*x.1", out.images[e32] == want32)

    ok = all(c[1] for c in checks)
    print(f"RESULT example-paper: {'PASS' if ok else 'FAIL'}")
    if args.emit == "records":

        class _R:
            def __init__(self, name, okc):
                self.check = name
                self.pair = ()
                self.idx = ()
                self.ok = okc
                self.detail = ""

        print(records_block([_R(name, okc) for name, okc, _ in checks]))
    return 0 if ok else 1


def _add_common(sub, figures=True, records=True):
    if records:
        sub.add_argument("--emit", choices=["records"],
                         help="append the machine-readable record block")
    if figures:
        sub.add_argument("--figures", metavar="DIR",
                         help="render summary figures into DIR")


def main(argv=None):
    default_threads = int(os.environ.get("HOCHSCHILD_THREADS", "1"))
    top = argparse.ArgumentParser(
        prog="hochschild",
        description="exact Hochschild cohomology, cup products and "
                    "Gerstenhaber brackets via homotopy liftings")
    subs = top.add_subparsers(dest="command", required=True)

    s = subs.add_parser("validate", help="parse and validate a problem file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = subs.add_parser("resolve", help="build a resolution and certify exactness")
    s.add_argument("file")
    s.add_argument("--name")
    s.add_argument("--up-to", type=int, default=None)
    s.set_defaults(func=cmd_resolve)

    s = subs.add_parser("cohomology", help="cohomology dimensions and representatives")
    s.add_argument("file")
    s.add_argument("--name")
    s.add_argument("--degree", type=int, required=True)
    _add_common(s, records=False)
    s.set_defaults(func=cmd_cohomology)

    s = subs.add_parser("cup", help="cup product of two named cochains")
    s.add_argument("file")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.set_defaults(func=cmd_cup)

    s = subs.add_parser("bracket", help="Gerstenhaber bracket of two named cocycles")
    s.add_argument("file")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.set_defaults(func=cmd_bracket)

    s = subs.add_parser("lift", help="print a homotopy lifting of a named cocycle")
    s.add_argument("file")
    s.add_argument("--cochain", required=True)
    s.set_defaults(func=cmd_lift)

    s = subs.add_parser("twist-build",
                        help="build and certify a twisted tensor resolution")
    s.add_argument("file")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--bicharacter")
    s.add_argument("--twist", metavar="Q", help="uniform twist value")
    s.add_argument("--up-to", type=int, default=None)
    s.set_defaults(func=cmd_twist_build)

    s = subs.add_parser("verify-iso",
                        help="verify the bracket/cup factorization theorems")
    s.add_argument("file")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--bicharacter")
    s.add_argument("--twist", metavar="Q")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--threads", type=int, default=default_threads)
    _add_common(s)
    s.set_defaults(func=cmd_verify_iso)

    s = subs.add_parser("oracle-check",
                        help="cross-check brackets against the bar-complex oracle")
    s.add_argument("--algebra", required=True, metavar="FILE")
    s.add_argument("--name")
    s.add_argument("--max-degree", type=int, required=True)
    _add_common(s)
    s.set_defaults(func=cmd_oracle_check)

    s = subs.add_parser("example-paper",
                        help="reproduce the worked truncated-polynomial example")
    s.add_argument("--emit", choices=["records"])
    s.set_defaults(func=cmd_example_paper)

    args = top.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
