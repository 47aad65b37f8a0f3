"""CLI subcommands, exit codes, and report determinism."""

import json

from aslkit.cli import run


def _json_result(argv):
    report, code = run(argv)
    payload = json.loads(report.to_json())
    return payload, code


def test_length_command():
    payload, code = _json_result(["length", "S4"])
    assert code == 0
    assert payload["result"]["length"] == 3
    assert payload["result"]["order"] == 24


def test_series_command():
    payload, code = _json_result(["series", "S3"])
    assert code == 0
    assert payload["result"]["orders"] == [6, 3, 1]
    factors = payload["result"]["factors"]
    assert factors[0]["abelian_invariants"] == [2]
    assert factors[1]["abelian_invariants"] == [3]


def test_normals_command():
    payload, code = _json_result(["normals", "S4"])
    assert code == 0
    assert payload["result"]["count"] == 4
    orders = [s["order"] for s in payload["result"]["subgroups"]]
    assert orders == [1, 4, 12, 24]


def test_factors_command():
    payload, code = _json_result(["factors", "C6 x A5"])
    assert code == 0
    f = payload["result"]["factor"]
    assert f["abelian_invariants"] == [6]
    assert f["simple_orders"] == [60]


def test_wreath_command():
    payload, code = _json_result(
        ["wreath", "--a", "C2", "--g", "S3", "--g0", "(1 2)"])
    assert code == 0
    assert payload["result"]["order"] == 48
    assert payload["result"]["chain_indices"] == [3, 2, 2, 4]


def test_wreath_action_file(tmp_path):
    lines = []
    for a in range(4):
        for glab in ("()", "(1 2)"):
            img = a if glab == "()" else (-a) % 4
            lines.append(f"{a} ^ {glab} = {img}")
    path = tmp_path / "act.txt"
    path.write_text("\n".join(lines) + "\n")
    payload, code = _json_result(
        ["wreath", "--a", "C4", "--g", "S3", "--g0", "(1 2)",
         "--action", str(path)])
    assert code == 0
    assert payload["result"]["order"] == 4 ** 3 * 6


def test_msigma_command():
    payload, code = _json_result(
        ["msigma", "--a", "C2", "--g", "C3", "--g0", "1", "-m", "0"])
    assert code == 0
    assert payload["result"]["hypothesis"] is True
    assert payload["result"]["witness"] is not None

    payload, code = _json_result(
        ["msigma", "--a", "C2", "--g", "C2", "--g0", "0,1", "-m", "0"])
    assert code == 0
    assert payload["result"]["hypothesis"] is False
    assert payload["result"]["witness"] is None


def test_vchain_command():
    payload, code = _json_result(
        ["vchain", "--g", "C2", "--x", "coset:1", "-p", "2", "-d", "2"])
    assert code == 0
    assert payload["result"]["dims"] == [2, 1, 0]


def test_kernelcheck_command():
    payload, code = _json_result(["kernelcheck", "-n", "2", "-l", "2", "-k", "2"])
    assert code == 0
    assert payload["result"]["kernel_order"] == 16


def test_lp_command():
    payload, code = _json_result(["lp", "GL(2,2)", "-l", "2", "-J", "2"])
    assert code == 0
    assert payload["result"]["orders"] == [3, 3, 1]
    payload, code = _json_result(["lp", "S3", "-l", "5", "-J", "1"])
    assert code == 1
    assert payload["result"]["found"] is False


def test_usage_error_exit_2():
    _, code = run(["length", "Nope5"])
    assert code == 2
    _, code = run(["length"])
    assert code == 2
    _, code = run(["vchain", "--g", "C2", "--x", "bad", "-p", "2", "-d", "1"])
    assert code == 2


def test_cap_exceeded_exit_3():
    _, code = run(["length", "U(4,7)"])
    assert code == 3
    _, code = run(["--closure-cap", "10", "length", "S4"])
    assert code == 3


def test_verify_suite_exit_codes():
    report, code = run(["verify", "msigma"])
    assert code == 0
    assert report.result["ok"] is True


def test_verify_reports_are_deterministic(monkeypatch):
    def render(threads):
        monkeypatch.setenv("ASL_KIT_THREADS", str(threads))
        report, code = run(["verify", "kernel", "--json"])
        assert code == 0
        return report.to_json()

    assert render(1) == render(4)


def test_json_flag_position():
    a, _ = _json_result(["--json", "length", "S4"])
    b, _ = _json_result(["length", "S4", "--json"])
    assert a["result"] == b["result"]
