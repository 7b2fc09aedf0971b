import json

from jugglecards.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_plain(capsys):
    code, out, _ = run(
        capsys, "count", "--balls", "2", "--capacity", "2",
        "--length", "1", "--method", "thm-l1",
    )
    assert code == 0
    assert out.strip() == "7"


def test_count_json(capsys):
    code, out, _ = run(
        capsys, "count", "--balls", "5", "--capacity", "3",
        "--length", "1", "--method", "prop1", "--json",
    )
    assert code == 0
    body = json.loads(out)
    assert body["count"] == "198"
    assert body["method"] == "prop1"


def test_count_transfer_length(capsys):
    code, out, _ = run(
        capsys, "count", "--balls", "1", "--capacity", "1",
        "--length", "4", "--method", "transfer",
    )
    assert code == 0
    assert out.strip() == "16"


def test_count_usage_error(capsys):
    code, _, err = run(
        capsys, "count", "--balls", "2", "--capacity", "2",
        "--length", "2", "--method", "thm-l1",
    )
    assert code == 2
    assert "length 1" in err


def test_bad_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "count", "--balls", "2", "--method", "nope")
    assert code == 2


def test_budget_exit_code(capsys):
    code, _, err = run(
        capsys, "count", "--balls", "40", "--capacity", "2",
        "--length", "1", "--method", "brute", "--budget", "100",
    )
    assert code == 3
    assert "budget" in err.lower() or "exceed" in err.lower()


def test_series_csv(capsys):
    code, out, _ = run(
        capsys, "series", "--capacity", "2", "--length", "1",
        "--order", "14", "--method", "thm-l1", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "b,count"
    assert lines[1] == "0,1"
    assert lines[-1] == "14,38477"


def test_series_json_cross_method(capsys):
    code, out, _ = run(
        capsys, "series", "--capacity", "1", "--length", "2",
        "--order", "8", "--method", "thm3", "--format", "json",
    )
    assert code == 0
    body = json.loads(out)
    code2, out2, _ = run(
        capsys, "series", "--capacity", "1", "--length", "2",
        "--order", "8", "--method", "transfer", "--format", "json",
    )
    assert json.loads(out2)["coefficients"] == body["coefficients"]
    assert body["coefficients"] == [str((b + 1) ** 2) for b in range(9)]


def test_genfun_output(capsys):
    code, out, _ = run(capsys, "genfun", "--capacity", "2", "--formula", "thm-l1")
    assert code == 0
    assert out.splitlines() == [
        "numerator=1,-1,1,1",
        "denominator=1,-3,0,5,0,-3,-1",
    ]
    code, out, _ = run(capsys, "genfun", "--formula", "infinite")
    assert code == 0
    assert out.splitlines() == ["numerator=1,-2,1", "denominator=1,-4,2"]


def test_draw(capsys):
    code, out, _ = run(
        capsys, "draw", "--card", "arrival=6,1,2,2;departure=3,1,2,3,2;f=0,1,3,4"
    )
    assert code == 0
    assert out.count("/") == 4
    assert out.count("\\") == 1


def test_draw_invalid(capsys):
    code, _, err = run(capsys, "draw", "--card", "arrival=2;departure=1,1;f=1")
    assert code == 2
    assert "invalid card" in err


def test_fit_plain(capsys):
    code, out, _ = run(capsys, "fit", "--sequence", "1,2,7,24,82,280,956,3264")
    assert code == 0
    assert out.strip() == "order=2 coeffs=4,-2 valid_from=3 char_poly=1,-4,2"


def test_fit_trivial(capsys):
    code, out, _ = run(capsys, "fit", "--sequence", "1,1,1,1")
    assert code == 0
    assert out.startswith("order=1 coeffs=1")


def test_fit_none_found(capsys):
    code, out, _ = run(
        capsys, "fit", "--sequence", "1,1,2,6,24,120,720", "--max-order", "2"
    )
    assert code == 0
    assert "no recurrence" in out


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--balls", "2", "--capacity", "2")
    assert code == 0
    assert json.loads(out) == {
        "b": 2,
        "k": 2,
        "states": [[1, 1], [2]],
        "counts": [[3, 1], [1, 2]],
    }


def test_verify_oeis(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oeis")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "3/3 checks passed"


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "bijections",
        "--max-balls", "3", "--max-capacity", "2", "--max-length", "2",
        "--json",
    )
    assert code == 0
    body = json.loads(out)
    assert body["passed"] is True
    assert [c["id"] for c in body["checks"]] == sorted(
        c["id"] for c in body["checks"]
    )
