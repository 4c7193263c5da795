"""Command-line interface: reports, exit codes, determinism, config."""

import json

import pytest

from pdrank import cli


def run(capsys, *argv) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def poly_file(tmp_path):
    def write(text, name="f.poly"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_dim_power_sum_plus_product(capsys, poly_file):
    path = poly_file("x1*x2*x3*x4*x5 + x1^5 + x2^5 + x3^5 + x4^5 + x5^5")
    code, out, _ = run(capsys, "dim", "--k", "2", path, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["exact_dim"] == {"status": "computed", "value": 15}
    assert report["bounds"]["linearity_upper"] >= 15


def test_dim_k0_any_nonzero_poly_is_one(capsys, poly_file):
    path = poly_file("3*x1^2 - x2 + 1/7")
    code, out, _ = run(capsys, "dim", "--k", "0", path, "--format", "json")
    assert code == 0
    assert json.loads(out)["exact_dim"]["value"] == 1


def test_dim_zero_polynomial_flagged(capsys, poly_file):
    path = poly_file("x1 - x1")
    code, out, _ = run(capsys, "dim", "--k", "1", path, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["exact_dim"] == {"status": "zero-poly", "value": 0}


def test_dim_star_mode_and_note(capsys, poly_file):
    path = poly_file("x1^2*x2")
    code, out, _ = run(capsys, "dim", "--mode", "star", path, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["exact_dim"]["value"] == 6
    assert "order 0" in report["note"]


def test_dim_accepts_json_polynomials(capsys, tmp_path):
    payload = {"vars": ["x1", "x2"], "terms": [{"coef": "3/2", "exps": [1, 1]}]}
    path = tmp_path / "f.json"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "dim", "--k", "1", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["exact_dim"]["value"] == 2


def test_bounds_subcommand_skips_exact(capsys, poly_file):
    path = poly_file("x1*x2 + x3")
    code, out, _ = run(capsys, "bounds", "--k", "1", path, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["exact_dim"]["status"] == "not-requested"
    assert report["bounds"]["linearity_upper"] == 3


def test_trace_oracle_and_semirandom(capsys, poly_file):
    path = poly_file("x1*x2 + x2*x3 + x1*x3")
    code, out, _ = run(
        capsys,
        "trace", "--k", "1", path,
        "--oracle", "--samples", "20", "--seed", "3", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["oracle"]["matches_closed_form"] is True
    assert report["oracle"]["rank_b"] == 3
    assert report["semirandom"]["sample_mean"] == report["semirandom"]["expectation"]


def test_reduce_graph_identity(capsys, tmp_path):
    path = tmp_path / "k3.edges"
    path.write_text("p 3\n1 2\n2 3\n1 3\n")
    code, out, _ = run(capsys, "reduce", "graph", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["identity_holds"] is True
    assert report["dim_plus"] == 6


def test_reduce_complex(capsys, tmp_path):
    path = tmp_path / "c.facets"
    path.write_text("1 2\n2 3\n")
    code, out, _ = run(capsys, "reduce", "complex", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["identity_holds"] is True
    assert report["face_count"] == 5


def test_verify_exhaustive(capsys):
    code, out, _ = run(capsys, "verify", "--exhaustive", "n=3", "--format", "json")
    assert code == 0
    summary = json.loads(out)
    assert summary["graphs_checked"] == 8
    assert summary["all_hold"] is True


def test_sym_gap_fixed_json(capsys):
    code, out, _ = run(
        capsys, "sym", "gap", "--fixed", "d=3", "k=1", "n=4..8", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mode"] == "fixed"
    assert len(payload["points"]) == 5
    first = payload["points"][0]
    assert set(first) >= {"n", "d", "k", "u", "v", "upper_v", "ratio", "v_dec"}


def test_sym_gap_scaled_csv(capsys):
    code, out, _ = run(
        capsys, "sym", "gap", "--scaled", "kp=1", "dp=3", "np=8", "m=1..3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n,d,k,u,v")
    assert len(lines) == 4
    assert lines[1].split(",")[4] == "7/4"


def test_random_corpus_roundtrip(capsys):
    code, out, _ = run(
        capsys, "random-corpus", "--count", "5", "--seed", "11", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["polys"]) == 5
    from pdrank import poly_from_json_dict

    for entry in payload["polys"]:
        poly_from_json_dict(entry)  # schema round-trips


@pytest.mark.parametrize(
    "argv",
    [
        ("dim", "--k", "2", "/nonexistent/file.poly"),
        ("verify", "--exhaustive", "n=twelve"),
        ("sym", "gap", "--fixed", "d=3"),
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_parse_error_exit_2(capsys, poly_file):
    path = poly_file("x1^-1")
    code, _, err = run(capsys, "dim", "--k", "1", path)
    assert code == 2
    assert "exponent" in err


def test_resource_cap_exit_3(capsys, poly_file):
    path = poly_file("x1^3*x2^3*x3^3")
    code, _, err = run(capsys, "dim", "--k", "3", path, "--max-rows", "2")
    assert code == 3
    assert "limit" in err


def test_invariant_violation_exit_4(capsys, poly_file, monkeypatch):
    # force a wrong exact value so the report self-check trips
    monkeypatch.setattr(cli.exact, "dim_partials", lambda *a, **kw: 0)
    path = poly_file("x1*x2 + x3")
    code, _, err = run(capsys, "dim", "--k", "1", path)
    assert code == 4
    assert "invariant" in err


def test_seeded_runs_byte_identical(capsys, poly_file, tmp_path):
    path = poly_file("x1*x2*x3 + x1^3 + 2*x2")
    graph = tmp_path / "g.edges"
    graph.write_text("p 4\n1 2\n3 4\n")
    invocations = [
        ("dim", "--k", "1", path, "--format", "json", "--seed", "9"),
        ("bounds", "--k", "2", path, "--format", "json", "--seed", "9"),
        ("trace", "--k", "1", path, "--samples", "10", "--seed", "9", "--format", "json"),
        ("reduce", "graph", str(graph), "--format", "json"),
        ("verify", "--exhaustive", "n=3", "--format", "json"),
        ("sym", "gap", "--fixed", "d=3", "k=1", "n=4..6", "--format", "json"),
        ("random-corpus", "--count", "3", "--seed", "9", "--format", "json"),
    ]
    for argv in invocations:
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2, argv


def test_timing_flag_adds_timings(capsys, poly_file):
    path = poly_file("x1*x2 + x3")
    _, out, _ = run(capsys, "dim", "--k", "1", path, "--format", "json", "--timing")
    assert "timings_seconds" in json.loads(out)
    _, out2, _ = run(capsys, "dim", "--k", "1", path, "--format", "json")
    assert "timings_seconds" not in json.loads(out2)


def test_config_file_env(capsys, poly_file, tmp_path, monkeypatch):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"max-rows": 2}))
    monkeypatch.setenv(cli.CONFIG_ENV, str(config))
    path = poly_file("x1^3*x2^3*x3^3")
    code, _, _ = run(capsys, "dim", "--k", "3", path)
    assert code == 3  # cap from config applies
    # explicit flag overrides the config file
    code2, _, _ = run(capsys, "dim", "--k", "3", path, "--max-rows", "10000")
    assert code2 == 0


def test_text_format_renders(capsys, poly_file):
    path = poly_file("x1*x2 + x3")
    code, out, _ = run(capsys, "dim", "--k", "1", path)
    assert code == 0
    assert "exact_dim" in out and "value: 3" in out


def test_order_flag_restricts_candidates(capsys, poly_file):
    path = poly_file("x1^2 + x2^3")
    code, out, _ = run(
        capsys,
        "dim", "--k", "1", path,
        "--order", "perm=2,1", "--order-dir", "max",
        "--vertex-trials", "0", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    # lex-max under permutation (x2, x1) picks x2^3; its profile at k=1 is 1
    assert report["bounds"]["extremal_lower"] == 1
