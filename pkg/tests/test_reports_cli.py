import json
from fractions import Fraction

import pytest

from hopfadjoint.cyclotomic import make_field, scalar_from_strings
from hopfadjoint.linalg import Matrix
from hopfadjoint.reports import VerificationReport, document, emit_json, jsonable
from hopfadjoint.cli import cli_main, field_axiom_spotcheck


def test_field_document_fragment():
    ctx = make_field(2)
    doc = document(ctx, "test", {})
    assert doc["field"] == {"conductor": 2, "cyclotomic_poly": ["1", "1"]}
    assert doc["schema_version"] == 1


def test_scalar_and_matrix_round_trip():
    ctx = make_field(4)
    s = ctx.scalar([Fraction(3, 2), Fraction(-1)])
    blob = json.loads(emit_json(s))
    assert blob == ["3/2", "-1"]
    assert scalar_from_strings(ctx, blob) == s

    m = Matrix.from_rows(ctx, [[ctx.one(), s], [ctx.zero(), ctx.from_rational(7)]])
    blob = json.loads(emit_json(m))
    assert blob["rows"] == 2 and blob["cols"] == 2
    rebuilt = Matrix(ctx, 2, 2, [scalar_from_strings(ctx, e) for e in blob["entries"]])
    assert rebuilt == m


def test_emit_json_sorted_and_compact():
    data = emit_json({"b": 1, "a": [Fraction(1, 3)]})
    assert data == b'{"a":["1/3"],"b":1}'


def test_report_invariants():
    rep = VerificationReport()
    rep.add("one", True)
    with pytest.raises(ValueError):
        rep.add("one", True)
    rep.add("two", False, {"why": "because"})
    assert not rep.ok
    assert rep.failures()[0].witness == {"why": "because"}
    rep2 = VerificationReport()
    rep2.add("two", False)  # witness defaults to {} on failure
    assert rep2.failures()[0].witness == {}


def test_field_spotcheck_deterministic():
    ctx = make_field(3)
    a = field_axiom_spotcheck(ctx, seed=7)
    b = field_axiom_spotcheck(ctx, seed=7)
    assert emit_json(a) == emit_json(b)
    assert a.ok


def test_cli_verify_exit_zero(capsys):
    rc = cli_main(["verify", "--suite", "rmatrix", "--n", "2,3"])
    assert rc == 0
    out = capsys.readouterr().out
    assert '"status":"pass"' in out


def test_cli_runs_are_byte_identical(tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    assert cli_main(["verify", "--suite", "hopf", "--n", "2", "--out", str(f1)]) == 0
    assert cli_main(["verify", "--suite", "hopf", "--n", "2", "--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_cli_adjoint_dimension_examples(tmp_path):
    out = tmp_path / "adj.json"
    rc = cli_main(["adjoint", "--n", "2", "--d", "2", "--xi", "0",
                   "--conditions", "ad1,ad3", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_bytes())
    assert data["dim"] == 4
    assert data["report"]["ok"] is True

    out1 = tmp_path / "adj1.json"
    rc = cli_main(["adjoint", "--n", "1", "--d", "1", "--xi", "0",
                   "--conditions", "ad1,ad2,ad3", "--out", str(out1)])
    assert rc == 0
    assert json.loads(out1.read_bytes())["dim"] == 1


def test_cli_full_pipeline_flag(tmp_path):
    out = tmp_path / "adj.json"
    rc = cli_main(["adjoint", "--n", "2", "--d", "2", "--xi", "0",
                   "--conditions", "ad1,ad3", "--full", "--out", str(out)])
    assert rc == 0
    assert json.loads(out.read_bytes())["dim"] == 4


def test_cli_braided_adjoint(tmp_path):
    out = tmp_path / "ba.json"
    rc = cli_main(["braided-adjoint", "--n", "2", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_bytes())
    assert data["report"]["ok"] is True


def test_cli_taft(tmp_path):
    out = tmp_path / "taft.json"
    rc = cli_main(["taft", "--n", "2", "--out", str(out)])
    assert rc == 0
    data = json.loads(out.read_bytes())
    assert data["hopf"]["dim"] == 4
    assert data["report"]["ok"] is True


def test_cli_report_replays_and_sets_exit(tmp_path, capsys):
    good = tmp_path / "good.json"
    assert cli_main(["taft", "--n", "2", "--out", str(good)]) == 0
    assert cli_main(["report", "--json", str(good)]) == 0
    capsys.readouterr()

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"report": {"ok": False, "claims": [
        {"claim_id": "synthetic/failure", "status": "fail", "witness": {"k": 1}}]}}))
    assert cli_main(["report", "--json", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "synthetic/failure" in out and "witness" in out


def test_cli_usage_error_exit_two():
    with pytest.raises(SystemExit) as err:
        cli_main(["verify", "--suite", "bogus", "--n", "2"])
    assert err.value.code == 2


def test_jsonable_rejects_unknown():
    with pytest.raises(TypeError):
        jsonable(object())
