import os

from hochschild.cli import main

HERE = os.path.dirname(__file__)
PAIR = os.path.join(HERE, "..", "problems", "x2_pair.prob")
X3 = os.path.join(HERE, "..", "problems", "x3.prob")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", PAIR)
    assert code == 0
    assert "algebra A: ok" in out


def test_validate_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.prob"
    bad.write_text("field Q\nalgebra A\n  basis 1:[0]\n  unit 1\nend\n"
                   "resolution P over A = truncated(nope)\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert ":" in err  # line/column diagnostic


def test_resolve(capsys):
    code, out, _ = run(capsys, "resolve", PAIR, "--name", "P", "--up-to", "4")
    assert code == 0
    assert "exact through degree 4: yes" in out


def test_cohomology_and_figures(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, out, _ = run(capsys, "cohomology", PAIR, "--name", "P",
                       "--degree", "3", "--figures", str(figdir))
    assert code == 0
    assert "dim HH^0 = 2" in out and "dim HH^3 = 1" in out
    assert (figdir / "hh_dimensions.png").exists()


def test_cup_and_bracket(capsys):
    code, out, _ = run(capsys, "cup", PAIR, "--left", "f", "--right", "f")
    assert code == 0
    assert "degree 2" in out
    code, out, _ = run(capsys, "bracket", PAIR, "--left", "f", "--right", "h")
    assert code == 0
    assert "degree 2" in out
    assert "-2" in out  # [f, h] = -2h


def test_lift(capsys):
    code, out, _ = run(capsys, "lift", PAIR, "--cochain", "f")
    assert code == 0
    assert "verified" in out
    assert "psi[" in out


def test_twist_build(capsys):
    code, out, _ = run(capsys, "twist-build", PAIR, "--left", "P", "--right", "Q",
                       "--bicharacter", "sign", "--up-to", "4")
    assert code == 0
    assert "twisted tensor algebra: dim 4" in out
    assert "exact through degree 4: yes" in out
    assert "complex length 10" in out


def test_verify_iso_records_and_figures(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, out, _ = run(capsys, "verify-iso", PAIR, "--left", "P", "--right", "Q",
                       "--max-degree", "2", "--emit", "records",
                       "--figures", str(figdir))
    assert code == 0
    assert "PASS pair=(1,1,1,1)" in out
    assert "== records ==" in out
    assert "check\tpair\tidx\tverdict" in out
    assert (figdir / "verdict_grid.png").exists()


def test_verify_iso_twisted_flag(capsys):
    code, out, _ = run(capsys, "verify-iso", PAIR, "--left", "P", "--right", "Q",
                       "--twist", "-1", "--max-degree", "2")
    assert code == 0
    assert "result:" in out and "FAIL" not in out


def test_verify_iso_thread_stability(capsys):
    _, out1, _ = run(capsys, "verify-iso", PAIR, "--left", "P", "--right", "Q",
                     "--max-degree", "2", "--threads", "1")
    _, out4, _ = run(capsys, "verify-iso", PAIR, "--left", "P", "--right", "Q",
                     "--max-degree", "2", "--threads", "4")
    assert out1 == out4  # canonical order regardless of thread count


def test_oracle_check(capsys):
    code, out, _ = run(capsys, "oracle-check", "--algebra", X3,
                       "--max-degree", "2", "--emit", "records")
    assert code == 0
    assert "PASS pair=" in out


def test_example_paper(capsys):
    code, out, _ = run(capsys, "example-paper", "--emit", "records")
    assert code == 0
    assert "psi_f(e3) = 3*e3" in out
    assert "PASS [f.f', h.h'](e2.e3') = 2*1.y" in out
    assert "RESULT example-paper: PASS" in out


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "example-paper")
    _, out2, _ = run(capsys, "example-paper")
    assert out1 == out2


def test_resolve_failure_exit_code(tmp_path, capsys):
    # an honest complex that is not exact: d_1 = 0 with rank one above
    prob = tmp_path / "notexact.prob"
    prob.write_text("""field Q
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
    gen 0 degree [0] label e1
  degree 2 rank 1
    gen 0 degree [0] label e2
end
""")
    code, out, _ = run(capsys, "resolve", str(prob), "--name", "P", "--up-to", "1")
    assert code == 1
    assert "NO" in out or "FAIL" in out
