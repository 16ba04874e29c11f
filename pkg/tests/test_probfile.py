import os

from hochschild.fields import QQ
from hochschild.probfile import canonical_text, parse_problem

HERE = os.path.dirname(__file__)
PROBLEMS = os.path.join(HERE, "..", "problems")


def load(name):
    with open(os.path.join(PROBLEMS, name), encoding="utf-8") as fh:
        return fh.read()


def test_parse_sample_pair():
    pf, diags = parse_problem(load("x2_pair.prob"))
    assert not diags
    assert pf.field == QQ
    assert set(pf.algebras) == {"A", "B"}
    assert pf.algebras["A"].dim == 2
    assert set(pf.resolutions) == {"P", "Q"}
    assert pf.resolutions["P"][0].length == 10
    bi, left, right = pf.bicharacters["sign"]
    assert (left, right) == ("A", "B")
    f, res = pf.cochains["f"]
    assert res == "P" and f.degree == 1


def test_canonical_round_trip():
    for name in ("x2_pair.prob", "x3.prob"):
        pf, diags = parse_problem(load(name))
        assert not diags
        canon = canonical_text(pf)
        pf2, diags2 = parse_problem(canon)
        assert not diags2
        assert canonical_text(pf2) == canon  # printer . parser = id on canonical


def test_inline_resolution_round_trip():
    text = """field F5
algebra A
  grading Z
  basis 1:[0] x:[1]
  unit 1
  mul x x -> 0
end
resolution P over A inline
  degree 0 rank 1
    gen 0 degree [0] label e0
    augment 0 = 1
  degree 1 rank 1
    gen 0 degree [1] label e1
    d (0,0) = x|1 - 1|x
end
"""
    pf, diags = parse_problem(text)
    assert not diags, diags
    P = pf.resolutions["P"][0]
    assert P.length == 1 and P.rank(1) == 1
    pf2, diags2 = parse_problem(canonical_text(pf))
    assert not diags2
    assert canonical_text(pf2) == canonical_text(pf)


def test_diagnostics_carry_positions():
    text = """field Q
algebra A
  grading Z
  basis 1:[0] x:[1]
  unit 1
  mul x x -> zz
end
"""
    pf, diags = parse_problem(text)
    assert pf is None
    assert any(d.line == 6 for d in diags)

    pf, diags = parse_problem("algebra A\nend\n")
    assert pf is None and diags

    pf, diags = parse_problem("field Q\nresolution P over X = truncated(4)\n")
    assert pf is None
    assert any("unknown algebra" in d.message for d in diags)


def test_invalid_algebra_rejected():
    text = """field Q
algebra A
  grading Z
  basis 1:[0] x:[1]
  unit 1
  mul x x -> 1
end
"""
    pf, diags = parse_problem(text)
    assert pf is None
    assert any("invalid algebra" in d.message for d in diags)
