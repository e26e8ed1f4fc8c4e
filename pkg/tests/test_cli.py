import json

from webcalc.cli import int_range, main, read_operator, write_operator
from webcalc.evaluator import EvalConfig, evaluate
from webcalc.projectors import extremal_T
from webcalc.scalars import Mode


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_int_range():
    assert int_range("2..4") == [2, 3, 4]
    assert int_range("2,5") == [2, 5]


def test_eval_t2(capsys, fixtures_dir):
    code, out, _ = run(capsys, "eval", str(fixtures_dir / "t2_n2.web"), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["shape"] == [4, 4] and doc["nnz"] == 2


def test_eval_empty_and_essential(capsys, fixtures_dir):
    code, out, _ = run(capsys, "eval", str(fixtures_dir / "empty.web"), "--format", "json")
    assert code == 0 and json.loads(out)["entries"] == [["()", "()", "1"]]
    code, out, _ = run(capsys, "eval", str(fixtures_dir / "essential1_n3.web"), "--format", "json")
    assert code == 0 and json.loads(out)["nnz"] == 0


def test_check_codes(capsys, fixtures_dir):
    f = lambda n: str(fixtures_dir / n)  # noqa: E731
    assert run(capsys, "check", f("st2_n3.web"), f("t2_n3.web"))[0] == 0
    assert run(capsys, "check", f("t3_recursive.web"), f("t3_alt.web"))[0] == 0
    code, out, _ = run(capsys, "check", f("u_n2.web"), f("s_n2.web"))
    assert code == 1 and "first difference" in out


def test_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.web"
    bad.write_text("N=2\n[frob(1)]\n")
    code, _, err = run(capsys, "eval", str(bad))
    assert code == 2 and "line" in err


def test_boundary_error(capsys, tmp_path):
    bad = tmp_path / "bad.web"
    bad.write_text("N=2 source=1^,1^\n[merge@1(1,1) ; merge@1(1,1)]\n")
    assert run(capsys, "eval", str(bad))[0] == 3
    a, b = tmp_path / "a.web", tmp_path / "b.web"
    a.write_text("N=2 mode=zeta source=1^\n[]\n")
    b.write_text("N=2 mode=zeta source=1^,1^\n[]\n")
    assert run(capsys, "check", str(a), str(b))[0] == 3


def test_unknown_suite(capsys):
    assert run(capsys, "suite", "nope")[0] == 2


def test_suite_report_deterministic(capsys):
    def report():
        code, out, _ = run(capsys, "suite", "end2", "--N", "2..3", "--format", "json")
        doc = json.loads(out)
        for u in doc["units"]:
            for r in u["results"]:
                r.pop("seconds")
        return code, doc
    (c1, d1), (c2, d2) = report(), report()
    assert c1 == c2 == 0 and d1 == d2
    assert d1["schema"] == "webcalc-report/1" and d1["summary"]["FAIL"] == 0


def test_jobs_match_serial(capsys):
    _, serial, _ = run(capsys, "suite", "ess", "--N", "2..4")
    _, par, _ = run(capsys, "suite", "ess", "--N", "2..4", "--jobs", "3")
    assert serial == par


def test_known_discrepancies_and_strict(capsys):
    code, out, _ = run(capsys, "suite", "reid", "--N", "2")
    assert code == 0 and "XFAIL reid:RI-neg(N=2,k=2" in out
    assert run(capsys, "suite", "reid", "--N", "2", "--strict")[0] == 1


def test_newton_k_range(capsys):
    code, out, _ = run(capsys, "suite", "newton", "--N", "2", "--k", "2..3")
    assert code == 0 and "k=3" in out and "k=4" not in out


def test_char(capsys):
    code, out, _ = run(capsys, "char", "T:3", "--N", "3")
    assert code == 0 and out.splitlines() == ["X1^3 + X2^3 + X3^3", "= e1^3 - 3*e1*e2 + 3*e3"]
    assert run(capsys, "char", "T:3", "--N", "3", "--mode", "q")[0] == 2


def test_out_file(capsys, tmp_path, fixtures_dir):
    target = tmp_path / "op.txt"
    assert run(capsys, "eval", str(fixtures_dir / "t2_n2.web"), "--out", str(target))[0] == 0
    assert read_operator(target.read_text()).nnz() == 2


def test_cache(capsys, tmp_path, monkeypatch, fixtures_dir):
    monkeypatch.setenv("WEBCALC_CACHE_DIR", str(tmp_path))
    args = ("eval", str(fixtures_dir / "t3_alt.web"))
    _, first, _ = run(capsys, *args)
    files = list(tmp_path.rglob("*.op"))
    assert len(files) == 1
    _, second, _ = run(capsys, *args)
    assert first == second
    files[0].write_text("garbage")
    _, third, _ = run(capsys, *args)
    assert third == first


def test_operator_file_round_trip():
    op = evaluate(extremal_T(3, 2), EvalConfig(3, Mode.ZETA))
    assert read_operator(write_operator(op, Mode.ZETA)) == op


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == 0 and "gl2emn" in json.loads(out)["suites"]
