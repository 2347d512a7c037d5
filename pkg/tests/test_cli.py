import json

import pytest

import main as entry
from fs import FS
from errors import ConfigError, VerificationFailure
from cbi_verifier import CbiVerifier


@pytest.fixture
def fs(tmp_path):
    return FS(tmp_path)


def run(argv, fs):
    app = CbiVerifier(argv, fs=fs)
    return app, app.run()


def test_gen_csv(fs):
    app, code = run(["gen", "--n", "3", "--format", "csv"], fs)
    assert code == 0
    assert app.output_path == fs.tables_folder / "cbi_n3.csv"
    lines = app.output_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "1"
    assert lines[1] == "-1/2,1"
    assert len(lines) == 4


def test_gen_bi_json(fs, tmp_path):
    output = tmp_path / "bi.json"
    app, code = run(["gen", "--family", "bi", "--n", "0", "--output", str(output)], fs)
    assert code == 0
    data = json.loads(output.read_text(encoding="utf-8"))
    assert data["family"] == "bi"
    assert data["polys"] == [["1"]]


def test_bad_rational_is_usage_error(fs):
    with pytest.raises(SystemExit) as excinfo:
        CbiVerifier(["gen", "--rho1", "1/0", "--rho2", "0", "--r1", "0", "--r2", "0"], fs=fs)
    assert excinfo.value.code == 2


def test_partial_parameters_rejected(fs):
    with pytest.raises(ConfigError):
        CbiVerifier(["gen", "--rho1", "1"], fs=fs)


def test_even_and_odd_are_exclusive(fs):
    with pytest.raises(ConfigError):
        CbiVerifier(["verify", "ortho", "--even", "a=1", "b=1", "c=1", "N=4", "--odd", "zeta=1", "xi=1", "chi=1", "N=3"], fs=fs)


def test_verify_ortho_even(fs):
    app, code = run(["verify", "ortho", "--even", "a=1", "b=1", "c=1", "N=4"], fs)
    assert code == 0
    assert app.output_path == fs.reports_folder / "ortho.json"
    report = json.loads(app.output_path.read_text(encoding="utf-8"))
    assert report["passed"]
    assert report["failure_count"] == 0
    assert fs.get_reports() == [app.output_path]


def test_verify_is_deterministic(fs, tmp_path):
    outputs = []
    for name in ("first.json", "second.json"):
        output = tmp_path / name
        _, code = run(["verify", "eigen", "--seed", "3", "--draws", "2", "--n", "6", "--output", str(output)], fs)
        assert code == 0
        outputs.append(output.read_bytes())
    assert outputs[0] == outputs[1]


def test_dump_operator(fs):
    app, code = run(["dump-op", "--operator", "K2"], fs)
    assert code == 0
    payload = json.loads((fs.tables_folder / "K2.json").read_text(encoding="utf-8"))
    assert payload["operator"] == "K2"
    assert len(payload["terms"]) == 1


def test_grid_table_odd(fs):
    app, code = run(["grid-table", "--odd", "zeta=1", "xi=1", "chi=1", "N=3"], fs)
    assert code == 0
    assert app.output_path.name == "grid_odd-ii_N3.csv"
    lines = app.output_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "k,x_k,w_k"
    assert len(lines) == 5


def test_grid_table_needs_a_case(fs):
    app = CbiVerifier(["grid-table"], fs=fs)
    with pytest.raises(ConfigError):
        app.run()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["main.py", "gen", "--n", "2"], 0),
        (["main.py", "gen", "--rho1", "1"], 2),
    ],
)
def test_main_exit_codes(monkeypatch, tmp_path, argv, expected):
    monkeypatch.setattr(entry, "FS", lambda: FS(tmp_path))
    monkeypatch.setattr("cbi_verifier.FS", lambda: FS(tmp_path))
    monkeypatch.setattr("sys.argv", argv)
    with pytest.raises(SystemExit) as excinfo:
        entry.main()
    assert excinfo.value.code == expected
    assert (tmp_path / "data" / "logs" / "cbi_verifier.log").exists()


def test_verify_ortho_default_plan(fs):
    app, code = run(["verify", "ortho"], fs)
    report = json.loads(app.output_path.read_text(encoding="utf-8"))
    assert report["failure_count"] == 0
    assert code == 0


def test_failed_check_exits_one_with_witness(fs, monkeypatch):
    def broken(case, params):
        raise VerificationFailure("Gram matrix is not diagonal", {"params": params.to_dict(), "pair": [0, 1]})

    monkeypatch.setattr("suites.verify_orthogonality", broken)
    app, code = run(["verify", "ortho", "--even", "a=1", "b=1", "c=1", "N=4"], fs)
    assert code == 1
    report = json.loads(app.output_path.read_text(encoding="utf-8"))
    assert not report["passed"]
    failed = [c for c in report["checks"] if not c["passed"]]
    assert failed
    assert failed[0]["witness"]["pair"] == [0, 1]
    assert "rho1" in failed[0]["witness"]["params"]
