import csv
import io
import json

from dpcover import cover_from_json, complete_graph, count_brute
from dpcover.cli import main

def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err

def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    return code, json.loads(out), err

def test_verify_k4_json(capsys):
    code, outcome, _ = run_json(capsys, "verify-k4", "--m-max", "4")
    assert code == 0
    assert outcome["status"] == "ok"
    assert outcome["command"] == "verify-k4"
    assert set(outcome) == {"command", "params", "payload", "elapsed_ms", "status"}
    payload = outcome["payload"]
    assert payload["all_ok"] is True
    assert [r["value"] for r in payload["rows"]] == [2, 12, 60]
    assert {r["method"] for r in payload["rows"]} == {"search"}

def test_verify_k4_constructions_branch(capsys):
    code, outcome, _ = run_json(capsys, "verify-k4", "--m-max", "9")
    rows = outcome["payload"]["rows"]
    methods = {r["m"]: r["method"] for r in rows}
    assert methods[5] == "search" and methods[6] == "construction" and methods[9] == "construction"
    assert outcome["payload"]["all_ok"] is True

def test_search_payload_schema(capsys):
    code, outcome, _ = run_json(capsys, "search", "--graph", "K4", "--m", "3", "--mode", "both")
    assert code == 0
    payload = outcome["payload"]
    assert payload["max"] == 12 and payload["min"] == 0
    for key in ("graph", "m", "mode", "max", "min", "argmax_cover", "argmin_cover",
                "evaluated", "space_size", "elapsed_ms"):
        assert key in payload
    # the witness cover round-trips through the cover file format
    cover = cover_from_json(complete_graph(4), payload["argmax_cover"])
    assert count_brute(cover).value == 12

def test_search_reduced(capsys):
    code, outcome, _ = run_json(
        capsys, "search", "--graph", "K4", "--m", "4", "--reduce", "conjugacy"
    )
    assert code == 0
    assert outcome["payload"]["max"] == 60
    assert outcome["payload"]["min"] == 24
    assert outcome["payload"]["space_size"] == 5 * 24 * 24

def test_search_budget_exceeded_exit_code(capsys):
    code, outcome, err = run_json(
        capsys, "search", "--graph", "K4", "--m", "4", "--budget", "10"
    )
    assert code == 4
    assert outcome["status"] == "failed"
    assert outcome["payload"]["error"] == "resource-limit"
    assert err

def test_search_sampled_needs_seed(capsys):
    code, outcome, _ = run_json(capsys, "search", "--graph", "K4", "--m", "3", "--sampled", "5")
    assert code == 2
    assert outcome["payload"]["error"] == "invalid-input"

def test_search_sampled(capsys):
    code, outcome, _ = run_json(
        capsys, "search", "--graph", "K5", "--m", "3", "--mode", "max",
        "--sampled", "50", "--seed", "9", "--counter", "brute",
    )
    assert code == 0
    assert outcome["payload"]["sampled"] == 50
    assert outcome["payload"]["max"] >= 0

def test_search_csv_and_histogram(capsys, tmp_path):
    code, out, _ = run_cli(
        capsys, "search", "--graph", "K4", "--m", "2", "--histogram", "--format", "csv",
        "--plot", str(tmp_path / "hist.png"),
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["value", "covers"]
    assert sum(int(r[1]) for r in rows[1:]) == 8
    plot = tmp_path / "hist.png"
    assert plot.exists() and plot.stat().st_size > 0

def test_search_plot_requires_histogram(capsys, tmp_path):
    code, outcome, _ = run_json(
        capsys, "search", "--graph", "K4", "--m", "2", "--plot", str(tmp_path / "x.png")
    )
    assert code == 2

def test_verify_plot(capsys, tmp_path):
    path = tmp_path / "verify.png"
    code, outcome, _ = run_json(capsys, "verify-k4", "--m-max", "3", "--plot", str(path))
    assert code == 0
    assert path.exists() and path.stat().st_size > 0

def test_count_canonical(capsys):
    code, outcome, _ = run_json(
        capsys, "count", "--construct", "canonical", "--graph", "K4", "--m", "5"
    )
    assert code == 0
    assert outcome["payload"]["value"] == 120
    assert outcome["payload"]["counts"] == {"k4_identity": 120}

def test_count_all_counters_agree(capsys):
    code, outcome, _ = run_json(
        capsys, "count", "--construct", "even-pairing", "--n", "4", "--m", "6", "--all"
    )
    assert code == 0
    payload = outcome["payload"]
    assert payload["agree"] is True
    assert payload["counts"]["brute"] == 462
    assert payload["counts"]["inclusion_exclusion"] == 462
    assert payload["counts"]["k4_identity"] == 462

def test_count_cover_file(capsys, tmp_path):
    path = tmp_path / "cover.json"
    path.write_text(json.dumps({"m": 2, "perms": {"1-2": [2, 1]}}))
    code, outcome, _ = run_json(capsys, "count", "--graph", "K2", "--cover", str(path))
    assert code == 0
    assert outcome["payload"]["value"] == 2  # swap matching still leaves 2 transversals

def test_count_cover_file_non_bijection(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"m": 2, "perms": {"1-2": [1, 1]}}))
    code, outcome, _ = run_json(capsys, "count", "--graph", "K2", "--cover", str(path))
    assert code == 2
    assert outcome["status"] == "failed"
    assert outcome["payload"]["error"] == "invalid-input"

def test_count_source_required(capsys):
    code, outcome, _ = run_json(capsys, "count", "--graph", "K4")
    assert code == 2

def test_count_subset_limit_env(capsys, monkeypatch):
    monkeypatch.setenv("DPCOVER_SUBSET_LIMIT", "4")
    code, outcome, _ = run_json(
        capsys, "count", "--construct", "canonical", "--graph", "K4", "--m", "2",
        "--counter", "inclusion-exclusion",
    )
    assert code == 4
    assert outcome["payload"]["error"] == "resource-limit"

def test_signed_compare_dual(capsys):
    code, outcome, _ = run_json(capsys, "signed", "--n", "4", "--lambda", "4", "--compare-dual")
    assert code == 0
    payload = outcome["payload"]
    assert payload["count"] == 60
    assert payload["dual_value"] == 60
    assert payload["matches_dual"] is True
    assert payload["colors"] == [-2, -1, 1, 2]

def test_signed_ten_colors(capsys):
    code, outcome, _ = run_json(capsys, "signed", "--n", "4", "--lambda", "10")
    assert outcome["payload"]["count"] == 5370

def test_signed_compare_dual_needs_even_lambda(capsys):
    code, outcome, _ = run_json(capsys, "signed", "--n", "4", "--lambda", "3", "--compare-dual")
    assert code == 2

def test_bounds_below_threshold_still_reports(capsys):
    code, outcome, _ = run_json(capsys, "bounds", "--n", "4", "--m", "100")
    assert code == 0
    payload = outcome["payload"]
    assert payload["threshold"] == 132
    assert payload["threshold_cleared"] is False
    assert payload["lower"] <= payload["upper"]

def test_bounds_check_construction(capsys):
    code, outcome, _ = run_json(capsys, "bounds", "--n", "4", "--m", "133", "--check-construction")
    payload = outcome["payload"]
    assert payload["threshold_cleared"] is True
    assert payload["within_bounds"] is True
    assert payload["triangle_free"] is True
    assert payload["construction"] == "odd-kn"

K4_TABLE = (
    "   m        value     expected  method       status\n"
    "   2            2            2  search       pass\n"
    "   3           12           12  search       pass\n"
    "   4           60           60  search       pass\n"
    "   5          182          182  search       pass\n"
    "4/4 checks passed\n"
)

def test_verify_k4_table_bytes_frozen(capsys):
    code, out, _ = run_cli(capsys, "verify-k4", "--m-max", "5", "--format", "table")
    assert code == 0
    assert out == K4_TABLE

def test_table_formats_render(capsys):
    code, out, _ = run_cli(capsys, "verify-k4", "--m-max", "3", "--format", "table")
    assert code == 0
    assert "checks passed" in out
    code, out, _ = run_cli(capsys, "count", "--construct", "odd-k4", "--m", "5", "--format", "table")
    assert code == 0
    assert "182" in out
    code, out, _ = run_cli(capsys, "bounds", "--n", "5", "--m", "10", "--format", "csv")
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("n,m,threshold")

def test_cli_no_command_prints_help(capsys):
    code, out, _ = run_cli(capsys)
    assert code == 0
    assert "usage" in out.lower()
