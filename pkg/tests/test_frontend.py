import json
import subprocess
import sys

import hypothesis
import pytest

from flcab import (
    EvalError,
    ExprError,
    ParseError,
    evaluate_text,
    render_json,
    render_text,
)
from flcab.cli import grid_atoms, main, table_tsv

from strategies import groups


def _text(expr):
    return render_text(evaluate_text(expr))


def test_atom_spellings():
    assert _text("Z") == "Z"
    assert _text("Afin") == "Afin"
    assert _text("Z/12") == "Z/4 + Z/3"
    assert _text("Z_7") == "Z_7"
    assert _text("Q_7") == "Q_7"
    assert _text("Q_7/Z_7") == "Q_7/Z_7"


def test_sums_and_powers():
    assert _text("Z_5 + Z_5 + A") == "A + Z_5^2"
    assert _text("T^3") == "T^3"
    assert _text("(Z + T)^2") == "Z^2 + T^2"


def test_function_calls():
    assert _text("dual(Q)") == "Sol"
    assert _text("hom(Z/12, T)") == "Z/4 + Z/3"
    assert _text("rhom(Q, Z)") == "E  (= [Q > Afin] in degrees 0,1)"
    assert _text("dtensor(Q, T)") == "E*  (= [Afin > Sol] in degrees -1,0)"
    assert _text("dual(rhom(Q, Z))") == "E*  (= [Afin > Sol] in degrees -1,0)"
    assert _text("rhom(T, Z/8 + Z)") == "Z[-1] + Z/8[-1]"
    assert _text("ext(1, T, Z)") == "Z"
    assert _text("ext(1, Q, Z)") == "Cok(Q > Afin)"
    assert _text("ext(0, Q^2, Sol)") == "Sol^2"
    assert _text("k0(Sol)") == "(0,1); default (1,0)"
    assert _text("k0(rhom(Q, Z))") == "(1,0); default (-1,0)"
    assert _text("k0mul(k0(Q), k0(T))") == "(0,1); default (0,-1)"
    assert _text("ranks(Z + T)") == "z-rank 1, s1-rank 1; default (1,1)"
    assert _text("filt(Q_5 + T + Z)") == "S1: T; A: Q_5 (R: 0, toptors: Q_5); Z: Z"
    assert _text("pcomp(A + Q_3/Z_3, 3)") == "Q_3 + Q_3/Z_3"
    assert _text("resI(Z)") == "0 > Z > R > T > 0"
    assert _text("resP(T)") == "0 > Z > R > T > 0"
    assert _text("is(compact, Sol + T)") == "true"
    assert _text("is(compact, Sol + R)") == "false"
    assert _text("is(divisible, Z/4)") == "false"


def test_shifts_only_inside_derived_arguments():
    assert _text("rhom(T[1], Z)") == "Z[-2]"
    assert _text("rhom(T, Z[1])") == "Z"
    assert _text("k0(T[1])") == "(0,-1); default (0,0)"
    with pytest.raises(EvalError, match="only inside"):
        evaluate_text("T[1]")
    with pytest.raises(EvalError, match="only inside"):
        evaluate_text("hom(T[1], Z)")


def test_mixed_graded_sums():
    assert _text("rhom(T + Q, Z)") == "Z[-1] + E  (E = [Q > Afin] in degrees 0,1)"
    assert _text("ext(2, T[1], Z)") == "Z"
    assert _text("ext(0, T[-1], Z)") == "Z"


def test_parse_errors():
    with pytest.raises(ParseError, match="6 is not prime"):
        evaluate_text("Z_6")
    with pytest.raises(ParseError, match="9 is not prime"):
        evaluate_text("Q_9")
    with pytest.raises(ParseError, match="mixes different primes"):
        evaluate_text("Q_2/Z_3")
    with pytest.raises(ParseError, match="expects 2 argument"):
        evaluate_text("rhom(Q)")
    with pytest.raises(ParseError, match="unknown name"):
        evaluate_text("Zp")
    with pytest.raises(ParseError, match="unexpected"):
        evaluate_text("Z Q")
    with pytest.raises(ParseError, match="expected"):
        evaluate_text("hom(Z,)")
    with pytest.raises(ParseError):
        evaluate_text("Z/0")


def test_eval_errors():
    with pytest.raises(EvalError, match="expects a group"):
        evaluate_text("hom(k0(Z), T)")
    with pytest.raises(EvalError, match="unknown property"):
        evaluate_text("is(shiny, Z)")
    with pytest.raises(EvalError, match="not prime"):
        evaluate_text("pcomp(Z, 4)")
    with pytest.raises(EvalError, match="does not accept E"):
        evaluate_text("ext(0, rhom(Q, Z), Z)")
    with pytest.raises(ExprError):
        evaluate_text("dual(ranks(Z))")


def test_json_rendering():
    doc = json.loads(render_json(evaluate_text("k0(A + Z/4)")))
    assert doc == {
        "kind": "k0",
        "value": {"at_infinity": [1, 1], "default": [1, 1], "exceptions": {}},
    }
    doc = json.loads(render_json(evaluate_text("ranks(Z/8)")))
    assert doc["value"]["exceptions"] == {"2": [1, 1]}
    doc = json.loads(render_json(evaluate_text("ext(1, Q^2, Z)")))
    assert doc["value"] == {"tokens": ["Cok(Q > Afin)", "Cok(Q > Afin)"], "group": "0"}
    doc = json.loads(render_json(evaluate_text("rhom(Q, Z)")))
    assert doc == {"kind": "derived", "value": "E"}
    doc = json.loads(render_json(evaluate_text("resP(Sol)")))
    assert doc["value"] == {"type": "projective", "sequence": ["Q", "A", "Sol"]}
    doc = json.loads(render_json(evaluate_text("filt(A)")))
    assert doc["value"]["part_toptors"] == "Afin"


@hypothesis.given(groups)
def test_groups_round_trip_through_the_grammar(g):
    v = evaluate_text(str(g))
    assert v.kind == "group" and v.data == g


def test_cli_eval(capsys):
    assert main(["eval", "rhom(Q, Z)"]) == 0
    assert capsys.readouterr().out == "E  (= [Q > Afin] in degrees 0,1)\n"
    assert main(["eval", "k0(T)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["kind"] == "k0"


def test_cli_error_exit_codes(capsys):
    assert main(["eval", "Z_6"]) == 1
    assert capsys.readouterr().err == "error: 6 is not prime\n"
    assert main(["eval", "T[1]"]) == 1
    assert "only inside" in capsys.readouterr().err
    assert main(["table", "--op", "rhom", "--primes", "2,4"]) == 1
    assert "4 is not prime" in capsys.readouterr().err
    assert main(["selftest", "--suite", "nope"]) == 1
    assert "unknown suite" in capsys.readouterr().err


def test_table_axis_charts_every_family_but_afin():
    names = [str(a) for a in grid_atoms([2, 3], [1, 2])]
    assert names == [
        "Z", "Q", "R", "T", "Sol", "A",
        "Z/2", "Z/4", "Z/3", "Z/9",
        "Z_2", "Z_3", "Q_2", "Q_3", "Q_2/Z_2", "Q_3/Z_3",
    ]


def test_cli_table(capsys):
    assert main(["table", "--op", "hom", "--primes", "2", "--exps", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0].split("\t")[0] == "hom"
    assert out.endswith("\n")
    # hom(Z, x) = x runs along the first row
    first = lines[1].split("\t")
    assert first[0] == "Z" and first[1:] == lines[0].split("\t")[1:]
    assert main(["table", "--op", "k0mul", "--primes", "2", "--exps", "1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "table" and doc["op"] == "k0mul"
    assert len(doc["cells"]) == len(doc["atoms"])


def test_cli_selftest_single_suite(capsys):
    assert main(["selftest", "--suite", "duality"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ok duality (")


def test_cli_runs_as_a_module():
    proc = subprocess.run(
        [sys.executable, "-m", "flcab", "eval", "tensor(Z_2, Q_2/Z_2)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "Q_2/Z_2\n"


def test_report_writes_tables_and_figures(tmp_path):
    outdir = tmp_path / "report"
    assert main(["report", "--outdir", str(outdir), "--primes", "2", "--exps", "1"]) == 0
    for op in ("rhom", "hom", "tensor", "dtensor", "k0mul"):
        tsv = outdir / f"{op}_table.tsv"
        png = outdir / f"{op}_table.png"
        assert tsv.exists() and png.exists()
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert (outdir / "rhom_table.tsv").read_text() == table_tsv(
        "rhom", grid_atoms([2], [1])
    )
