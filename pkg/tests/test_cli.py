import json
import subprocess
import sys

import pytest

from bergman_exact.cli import EXIT_CODES, Request, main, run
from bergman_exact.domains import unit_ball
from bergman_exact.jsonio import (
    certificate_from_json,
    certificate_to_json,
    domain_from_json,
    domain_to_json,
    report_from_json,
    report_to_json,
)
from bergman_exact.fischer import bergman_project
from bergman_exact.moments import verify_orthogonality
from bergman_exact.poly import z, zbar

DISC = {"type": "ellipsoid", "affine": {"S": [["1", "0"], ["0", "1"]], "c": ["0", "0"]}}
ZZBAR_1 = {"vars": "zzbar", "n": 1, "terms": [{"alpha": [1], "beta": [1], "re": "1", "im": "0"}]}


def mono(alpha, beta, re="1"):
    return {"alpha": alpha, "beta": beta, "re": re, "im": "0"}


V = {
    "type": "transported",
    "source": {"type": "polydisc", "radii": ["1", "1"]},
    "f": [{"vars": "zzbar", "n": 2, "terms": [mono([1, 0], [0, 0]), mono([0, 2], [0, 0])]},
          {"vars": "zzbar", "n": 2, "terms": [mono([0, 1], [0, 0])]}],
    "F": [{"vars": "zzbar", "n": 2, "terms": [mono([1, 0], [0, 0]), mono([0, 2], [0, 0], "-1")]},
          {"vars": "zzbar", "n": 2, "terms": [mono([0, 1], [0, 0])]}],
}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, obj in {"disc": DISC, "p": ZZBAR_1, "V": V}.items():
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj))
        paths[name] = str(path)
    return paths


def call(argv, capsys):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def test_project_disc(files, capsys):
    code, out = call(["project", "--domain", files["disc"], "--poly", files["p"]], capsys)
    assert code == 0 and out["status"] == "ok" and out["mode"] == "complex"
    assert out["projection"]["terms"] == [mono([0], [0], "1/2")]
    assert out["report"]["verified"] is True


def test_no_verify_omits_report(files, capsys):
    _, out = call(["project", "--domain", files["disc"], "--poly", files["p"], "--no-verify"], capsys)
    assert "report" not in out


def test_inline_json_and_polyharmonic(capsys):
    dom = json.dumps({"type": "ellipsoid", "affine": {"S": [["1"]]}})
    poly = json.dumps({"vars": "real", "n": 1, "terms": [{"alpha": [4], "re": "1"}]})
    code, out = call(["project", "--domain", dom, "--poly", poly, "--order", "2"], capsys)
    assert code == 0 and out["mode"] == "polyharmonic" and out["order"] == 2
    terms = {t["alpha"][0]: t["re"] for t in out["projection"]["terms"]}
    assert terms == {0: "-3/35", 2: "6/7"}
    assert out["report"]["verified"]


def test_reinhardt_mode(capsys):
    dom = json.dumps({"type": "complexEllipsoid", "a": ["1", "1"]})
    poly = json.dumps({"vars": "zzbar", "n": 2, "terms": [mono([1, 0], [1, 0])]})
    _, out = call(["project", "--domain", dom, "--poly", poly], capsys)
    assert out["mode"] == "reinhardt"
    assert out["projection"]["terms"] == [mono([0, 0], [0, 0], "1/3")]


def test_transport_and_member(files, capsys):
    poly = json.dumps({"vars": "zzbar", "n": 2, "terms": [mono([1, 0], [1, 0])]})
    _, out = call(["transport", "--domain", files["V"], "--poly", poly], capsys)
    assert out["projection"]["terms"] == [mono([0, 0], [0, 0], "5/6")]
    _, out = call(["member", "--domain", files["V"], "--point", "131/100,1/2"], capsys)
    assert out["member"] is False and out["preimage"] == ["53/50", "1/2"]
    _, out = call(["member", "--domain", files["V"], "--point", "91/100,1/10"], capsys)
    assert out["member"] is True


@pytest.mark.parametrize("n, N, expected", [(1, 2, (6, 3, 3)), (2, 3, (35, 10, 25)), (3, 0, (1, 1, 0))])
def test_dims(n, N, expected, capsys):
    _, out = call(["dims", "--n", str(n), "--N", str(N)], capsys)
    assert (out["dimP"], out["dimHP"], out["quotient"]) == expected


def test_verify_command(files, capsys):
    good = json.dumps({"vars": "zzbar", "n": 1, "terms": [mono([0], [0], "1/2")]})
    bad = json.dumps({"vars": "zzbar", "n": 1, "terms": []})
    base = ["verify", "--domain", files["disc"], "--poly", files["p"], "--projection"]
    assert call(base + [good], capsys)[1]["report"]["verified"] is True
    assert call(base + [bad], capsys)[1]["report"]["verified"] is False


@pytest.mark.parametrize("argv, code", [
    (["project", "--domain", "/nonexistent.json", "--poly", "{}"], "parse_error"),
    (["project", "--domain", "{not json", "--poly", "{}"], "parse_error"),
    (["project", "--domain", json.dumps(DISC), "--poly",
      json.dumps({"vars": "zzbar", "n": 2, "terms": []})], "dimension_mismatch"),
    (["project", "--domain", json.dumps({"type": "ellipsoid", "r": {"vars": "real", "n": 2, "terms": [
        {"alpha": [2, 0], "re": "2"}, {"alpha": [0, 2], "re": "1"}, {"alpha": [0, 0], "re": "-1"}]}}),
      "--poly", json.dumps(ZZBAR_1), "--mode", "reinhardt"], "invalid_domain"),
    (["member", "--domain", json.dumps({**V, "F": V["f"]}), "--point", "0,0"], "invalid_pair"),
    (["member", "--domain", json.dumps(DISC), "--point", "1/2,,1"], "parse_error"),
])
def test_error_codes(argv, code, capsys):
    status, out = call(argv, capsys)
    assert out["status"] == "error" and out["error"]["code"] == code
    assert status == EXIT_CODES[code] != 0


def test_distinct_exit_codes():
    named = {k: v for k, v in EXIT_CODES.items() if k != "singular_gram"}
    assert len(set(named.values())) == len(named)


def test_run_api_catches_unexpected_errors():
    out = run(Request(command="member", domain=unit_ball(2), point=None))
    assert out["status"] == "error"
    assert out["error"]["code"] in EXIT_CODES


def test_payload_round_trips():
    E = unit_ball(4)
    P = z(0, 2) * zbar(1, 2) + zbar(0, 2)
    cert = bergman_project(E, P)
    assert certificate_from_json(certificate_to_json(cert)) == cert
    assert domain_from_json(domain_to_json(E)) == E
    assert domain_from_json(V) and domain_to_json(domain_from_json(V))["type"] == "transported"
    rep = verify_orthogonality(E, P, cert.projection)
    assert report_from_json(report_to_json(rep)) == rep


def test_byte_identical_across_processes(files, tmp_path):
    cmd = [sys.executable, "-m", "bergman_exact", "project", "--domain", files["disc"], "--poly", files["p"]]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
    out = tmp_path / "resp.json"
    subprocess.run(cmd + ["--out", str(out)], check=True)
    assert out.read_bytes() == first
