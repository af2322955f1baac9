import csv
import io
import json

import pytest

from tripmaps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def rows_of(out: str):
    return list(csv.DictReader(io.StringIO(out)))


def test_list_triples(capsys):
    code, out = run(capsys, "list-triples")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 108
    assert sum(r["banach"] == "True" for r in rows) == 47
    assert sum(r["eigenfunction"] == "True" for r in rows) == 18
    assert sum(r["hilbert"] == "True" for r in rows) == 44
    assert sum(r["density"] == "True" for r in rows) == 18


def test_verify_branches_single(capsys):
    code, out = run(capsys, "verify-branches", "--triple", "e,e,e",
                    "--n", "10", "--kmax", "5")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 1
    assert float(rows[0]["max_roundtrip_err"]) < 1e-10


def test_verify_branches_bad_triple(capsys):
    code, _ = run(capsys, "verify-branches", "--triple", "e,e,132")
    assert code == 2
    assert "unsupported" in capsys.readouterr().err.lower() or True


def test_eigen_single_and_missing(capsys):
    code, out = run(capsys, "eigen", "--triple", "12,13,12")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 1
    assert float(rows[0]["max_rel_residual"]) < 1e-8
    code, _ = run(capsys, "eigen", "--triple", "e,12,e")
    assert code == 2


def test_gk_with_simulation(capsys):
    code, out = run(capsys, "gk", "--triple", "e,23,e", "--kmax", "3",
                    "--simulate", "--n", "20000", "--seed", "7")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 4
    assert abs(float(rows[0]["p_theoretical"]) - 0.5) < 1e-7
    assert abs(float(rows[0]["p_empirical"]) - 0.5) < 0.02


def test_gk_no_closed_form(capsys):
    code, out = run(capsys, "gk", "--triple", "12,12,12", "--kmax", "2")
    rows = rows_of(out)
    assert code == 0
    assert rows[0]["p_closed"] == ""
    assert 0.0 < float(rows[0]["p_theoretical"]) < 1.0


def test_gk_untabulated(capsys):
    code, _ = run(capsys, "gk", "--triple", "e,12,e")
    assert code == 2


def test_sum_bounds_single(capsys):
    code, out = run(capsys, "sum-bounds", "--triple", "13,23,123")
    rows = rows_of(out)
    assert code == 0 and rows[0]["all_converged"] == "True"
    code, _ = run(capsys, "sum-bounds", "--triple", "e,e,23")
    assert code == 2


def test_hilbert_single_json(capsys):
    code, out = run(capsys, "hilbert", "--triple", "123,132,132",
                    "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1
    assert float(data[0]["rel_gap"]) < 1e-4
    assert data[0]["pass"] is True


def test_hilbert_unsupported(capsys):
    code, _ = run(capsys, "hilbert", "--triple", "e,12,23")
    assert code == 2


def test_orbit_dump(capsys):
    code, out = run(capsys, "orbit", "--triple", "e,e,e", "--n", "8",
                    "--start", "0.573,0.211")
    rows = rows_of(out)
    assert code == 0 and len(rows) >= 2
    assert rows[0]["step"] == "0"


def test_determinism_and_out_file(tmp_path, capsys):
    f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for f in (f1, f2):
        code = main(["gk", "--triple", "e,e,e", "--kmax", "2", "--simulate",
                     "--n", "5000", "--seed", "3", "--out", str(f)])
        assert code == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_config_file_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"triple": "e,e,e", "kmax": 1}))
    # config supplies triple/kmax; flag overrides kmax
    code, out = run(capsys, "gk", "--config", str(cfg), "--kmax", "2")
    rows = rows_of(out)
    assert code == 0
    assert len(rows) == 3 and rows[0]["triple"] == "e,e,e"


def test_bad_format_rejected(tmp_path):
    with pytest.raises(SystemExit):
        main(["gk", "--format", "yaml"])
