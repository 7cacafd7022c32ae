"""Command line surface: reports, constructions, exit codes, JSON."""

import json
from pathlib import Path

from homkit.cli import main
from homkit.dsl import parse

FIXTURES = str(Path(__file__).resolve().parents[1] / "demos" / "fixtures.hla")


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_passing_algebra(capsys):
    code, out, _ = run(capsys, "check", FIXTURES, "A2leib")
    assert code == 0
    assert "PASS multiplicative:bracket" in out
    assert "PASS hom_leibniz" in out


def test_check_failing_algebra_exit_one(capsys):
    code, out, _ = run(capsys, "check", FIXTURES, "A2assoc")
    assert code == 1
    assert "FAIL multiplicative:dot" in out
    assert "PASS hom_associative" in out


def test_check_unknown_name_exit_two(capsys):
    code, _, err = run(capsys, "check", FIXTURES, "nope")
    assert code == 2
    assert "nope" in err


def test_check_missing_file_exit_two(capsys):
    code, _, err = run(capsys, "check", "no_such_file.hla", "A2leib")
    assert code == 2


def test_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.hla"
    bad.write_text("algebra X { dim 2 kind leibniz bracket { [e1,e9] = e1 } }\n")
    code, _, err = run(capsys, "check", str(bad), "X")
    assert code == 2
    assert "line 1" in err


def test_check_rep(capsys):
    code, out, _ = run(capsys, "check-rep", FIXTURES, "A2leib", "reg")
    assert code == 0
    assert "PASS left_bracket_composition" in out


def test_solve_rbo_assoc(capsys):
    code, out, _ = run(capsys, "solve-rbo", FIXTURES, "A2assoc")
    assert code == 0
    assert out.strip() == "finite: { T = 0 }"


def test_solve_rbo_leibniz_family(capsys):
    code, out, _ = run(capsys, "solve-rbo", FIXTURES, "A2leib")
    assert code == 0
    assert "family: t12 free" in out
    assert "T(e2) = t12 e1 + 2 t12 e2" in out


def test_solve_rbo_poisson(capsys):
    code, out, _ = run(capsys, "solve-rbo", FIXTURES, "A2poisson")
    assert code == 0
    assert out.strip() == "finite: { T = 0 }"


def test_solve_rbo_explicit_rep(capsys):
    code, out, _ = run(capsys, "solve-rbo", FIXTURES, "A2leib", "--rep", "reg")
    assert code == 0
    assert "family" in out


def test_solve_rbo_json(capsys):
    code, out, _ = run(capsys, "solve-rbo", FIXTURES, "A2leib",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "affine_family"
    assert data["family"]["params"] == ["t12"]
    assert data["family"]["basis"] == [[["0", "1"], ["0", "2"]]]


def test_check_json_matches_text_verdicts(capsys):
    code_t, out_t, _ = run(capsys, "check", FIXTURES, "A2assoc")
    code_j, out_j, _ = run(capsys, "check", FIXTURES, "A2assoc",
                           "--format", "json")
    assert code_t == code_j == 1
    data = json.loads(out_j)
    text_verdicts = [line.split()[0] == "PASS" for line in out_t.splitlines()]
    assert [d["pass"] for d in data] == text_verdicts
    failing = [d for d in data if not d["pass"]]
    assert failing[0]["witness"]["indices"] == [2, 2]


def test_semidirect_output_parses(capsys):
    code, out, _ = run(capsys, "semidirect", FIXTURES, "A2leib", "reg",
                       "--as", "sd")
    assert code == 0
    doc = parse(out)
    assert doc.algebra("sd").dim == 4


def test_semidirect_verify_comments(capsys):
    code, out, _ = run(capsys, "semidirect", FIXTURES, "A2leib", "reg",
                       "--verify")
    assert code == 0
    assert "# PASS hom_leibniz" in out
    # Comment lines keep the output parseable.
    assert parse(out).algebra("result").dim == 4


def test_twist_command(capsys):
    code, out, _ = run(capsys, "twist", FIXTURES, "A2leib", "--by", "beta",
                       "--verify")
    assert code == 0
    alg = parse(out).algebra("result")
    assert alg.bracket.basis_product(0, 1).entries[0] == -1


def test_twist_rejects_non_morphism(tmp_path, capsys):
    src = Path(FIXTURES).read_text() + (
        "\nmap badmap : A2leib -> A2leib {\n  e1 -> e1 + e2\n}\n")
    f = tmp_path / "with_bad.hla"
    f.write_text(src)
    code, _, err = run(capsys, "twist", str(f), "A2leib", "--by", "badmap")
    assert code == 2
    assert "self-morphism" in err


def test_deform_identity_map(tmp_path, capsys):
    src = Path(FIXTURES).read_text() + (
        "\nmap idmap : A2leib -> A2leib {\n  e1 -> e1\n  e2 -> e2\n}\n")
    f = tmp_path / "with_id.hla"
    f.write_text(src)
    code, out, _ = run(capsys, "deform", str(f), "A2leib",
                       "--nijenhuis", "idmap", "--verify")
    assert code == 0
    doc_out = parse(out)
    from homkit.fixtures import two_dim_leibniz
    assert doc_out.algebra("result") == two_dim_leibniz()


def test_induce_family_member(capsys):
    code, out, _ = run(capsys, "induce", FIXTURES, "A2leib", "--t", "T",
                       "--verify", "--as", "induced")
    assert code == 0
    alg = parse(out).algebra("induced")
    # [e1,e2]_T = rho_r(T e2) e1 = [e1, e1 + 2 e2] = 2 e1.
    assert alg.bracket.basis_product(0, 1).entries[0] == 2


def test_induce_rejects_non_operator(tmp_path, capsys):
    src = Path(FIXTURES).read_text() + (
        "\nmap notrbo : A2leib -> A2leib {\n  e1 -> e1\n}\n")
    f = tmp_path / "with_bad_t.hla"
    f.write_text(src)
    code, _, err = run(capsys, "induce", str(f), "A2leib", "--t", "notrbo")
    assert code == 2
    assert "Rota-Baxter" in err


def test_matched_sum_command(tmp_path, capsys):
    # Degenerate matched pair: abelian second factor acting by zero.
    src = Path(FIXTURES).read_text() + """
algebra Abelian {
  dim 2
  kind leibniz
  alpha {
    e1 -> -e1
    e2 -> e1 + e2
  }
}

representation back on Abelian {
  dim 2
  phi {
    f1 -> -f1
    f2 -> f1 + f2
  }
}
"""
    f = tmp_path / "pair.hla"
    f.write_text(src)
    code, out, _ = run(capsys, "matched-sum", str(f), "A2leib", "Abelian",
                       "reg", "back", "--verify")
    assert code == 0
    alg = parse(out).algebra("result")
    assert alg.dim == 4


def test_exit_codes_deterministic(capsys):
    first = run(capsys, "check", FIXTURES, "A2poisson")
    second = run(capsys, "check", FIXTURES, "A2poisson")
    assert first == second
    assert first[0] == 1  # the audit failures are stable


def test_check_rep_wrong_base_exit_two(capsys):
    code, _, err = run(capsys, "check-rep", FIXTURES, "A2assoc", "reg")
    assert code == 2
    assert "A2leib" in err
