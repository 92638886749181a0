"""Command-line interface tests: caching, determinism, report schemas."""

import json

from descentd import cli


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_build_and_warm_cache(tmp_path, capsys):
    args = ["table", "--type", "D", "--n", "3", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    summary = json.loads(out)
    assert summary["basis_size"] == 8 and summary["from_cache"] is False
    cache_file = tmp_path / summary["file"].rsplit("/", 1)[-1]
    first = cache_file.read_bytes()
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    assert json.loads(out)["from_cache"] is True
    assert cache_file.read_bytes() == first


def test_table_corrupt_cache_rebuilds(tmp_path, capsys):
    args = ["table", "--type", "D", "--n", "2", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    path = json.loads(out)["file"]
    with open(path, "w") as fh:
        fh.write("{not json")
    code, out, err = run_cli(args, capsys)
    assert code == 0
    assert "rebuilding corrupt cache" in err
    assert json.loads(out)["from_cache"] is False


def test_table_out_copy_is_identical(tmp_path, capsys):
    out_path = tmp_path / "copy.json"
    args = [
        "table", "--type", "A", "--n", "4",
        "--cache-dir", str(tmp_path), "--out", str(out_path),
    ]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    cache_file = json.loads(out)["file"]
    with open(cache_file, "rb") as fh:
        assert fh.read() == out_path.read_bytes()


def test_multiply_worked_example(tmp_path, capsys):
    args = [
        "multiply", "--type", "A", "--n", "4",
        "--a", "[2,1,1]", "--b", "[2,2]", "--cache-dir", str(tmp_path),
    ]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["product"] == {"[2,1,1]": 1, "[1,1,2]": 1, "[1,1,1,1]": 2}


def test_multiply_mod_p(tmp_path, capsys):
    args = [
        "multiply", "--type", "A", "--n", "4",
        "--a", "[2,1,1]", "--b", "[2,2]", "--p", "2", "--cache-dir", str(tmp_path),
    ]
    code, out, _ = run_cli(args, capsys)
    payload = json.loads(out)
    assert payload["product"] == {"[2,1,1]": 1, "[1,1,2]": 1}


def test_radical_report_p2(tmp_path, capsys):
    args = ["radical", "--type", "D", "--n", "4", "--p", "2", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["quotient_dim"] == 1
    assert payload["is_ideal"] is True
    assert payload["matches_aJJJ_criterion"] is True
    assert len(payload["spanning_set"]) == 15


def test_radical_char0_report(tmp_path, capsys):
    args = ["radical", "--type", "D", "--n", "3", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    payload = json.loads(out)
    assert payload["p"] is None
    assert payload["quotient_dim"] == 5
    assert payload["matches_aJJJ_criterion"] is None


def test_characters_csv_and_json(tmp_path, capsys):
    args = ["characters", "--type", "D", "--n", "3", "--format", "csv", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln]
    assert lines[0].split(",")[1] == "[]@Small"
    assert len(lines) == 6  # header plus five representative rows

    args = ["characters", "--type", "D", "--n", "4", "--p", "3", "--cache-dir", str(tmp_path)]
    code, out, _ = run_cli(args, capsys)
    payload = json.loads(out)
    assert payload["distinct_columns"] == 10
    assert len(payload["representatives"]) == 11


def test_verify_passes_small_rank(tmp_path, capsys):
    code, out, _ = run_cli(
        ["verify", "--type", "D", "--n", "3", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 0
    assert "FAIL" not in out
    code, out, _ = run_cli(
        ["verify", "--type", "A", "--n", "3", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 0


def test_typea_subcommands(capsys):
    code, out, _ = run_cli(["typea", "multiply", "--a", "[2,1,1]", "--b", "[2,2]"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["product"] == {"[1,1,1,1]": 2, "[1,1,2]": 1, "[2,1,1]": 1}
    code, out, _ = run_cli(["typea", "lie-action", "--a", "[2,1]", "--b", "[1,2]"], capsys)
    payload = json.loads(out)
    assert payload["action"] == {}
    code, out, _ = run_cli(["typea", "lie-action", "--a", "[1,2]", "--b", "[3]"], capsys)
    payload = json.loads(out)
    assert payload["action"] == {"[1,2]": 1}


def test_deterministic_outputs(tmp_path, capsys):
    args = ["radical", "--type", "D", "--n", "3", "--p", "3", "--cache-dir", str(tmp_path)]
    _, out1, _ = run_cli(args, capsys)
    _, out2, _ = run_cli(args, capsys)
    assert out1 == out2


def test_verify_nonzero_exit_on_failure(tmp_path, capsys, monkeypatch):
    from descentd import verify as verify_mod

    def broken(gtype, n):
        return verify_mod.CheckResult("group-order", False, "first counterexample: injected")

    monkeypatch.setattr(verify_mod, "check_group_order", broken)
    code, out, err = run_cli(
        ["verify", "--type", "D", "--n", "2", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 1
    assert "FAIL group-order" in out
    assert "injected" in err


def test_table_threads_flag(tmp_path, capsys):
    args = ["table", "--type", "D", "--n", "3", "--cache-dir", str(tmp_path), "--threads", "2"]
    code, out, _ = run_cli(args, capsys)
    assert code == 0
    single = tmp_path / "single"
    args = ["table", "--type", "D", "--n", "3", "--cache-dir", str(single)]
    code, out2, _ = run_cli(args, capsys)
    first = json.loads(out)["file"]
    second = json.loads(out2)["file"]
    with open(first, "rb") as fa, open(second, "rb") as fb:
        assert fa.read() == fb.read()


def test_resource_bound_exit_code(tmp_path, capsys):
    code, _, err = run_cli(
        ["table", "--type", "D", "--n", "9", "--cache-dir", str(tmp_path)], capsys
    )
    assert code == 1
    assert "resource bound" in err


def test_bad_label_exit_code(tmp_path, capsys):
    code, _, err = run_cli(
        [
            "multiply", "--type", "D", "--n", "3",
            "--a", "[2,1]", "--b", "[3]@Main", "--cache-dir", str(tmp_path),
        ],
        capsys,
    )
    assert code == 1
    assert "error" in err
