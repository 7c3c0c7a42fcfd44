import json

import pytest

from symsextic import checks, cli
from symsextic.report import FIELDS, CheckReport, emit_csv, emit_json, parse_json


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_manifest_matches_registry():
    ids = checks.registry_ids()
    assert len(ids) == len(set(ids))
    assert ids == checks.shipped_manifest()


def test_registry_statuses():
    reports, _ = checks.verify_paper()
    assert len(reports) >= 40
    bad = [r.id for r in reports if r.status not in ("match", "known-discrepancy")]
    assert bad == []
    assert {r.provenance for r in reports} <= {"paper", "trivial", "derived"}


def test_filter(capsys):
    code, out, _ = run(capsys, "verify-paper", "--filter", "km-*", "--json", "-")
    ids = [r["id"] for r in json.loads(out)]
    assert ids and all(i.startswith("km-") for i in ids)
    assert code == 0


def test_filter_without_matches(capsys):
    code, _, err = run(capsys, "verify-paper", "--filter", "zzz")
    assert code == 2 and "zzz" in err


def test_json_round_trip_and_field_order(capsys):
    _, out, _ = run(capsys, "verify-paper", "--filter", "toric-*", "--json", "-")
    data = json.loads(out)
    assert all(tuple(d) == FIELDS for d in data)
    assert emit_json(parse_json(out)) == out


def test_parse_json_rejects_reordered_fields():
    with pytest.raises(ValueError):
        parse_json('[{"section": "x", "id": "y", "expected": "", "computed": "", "provenance": "paper", "status": "match"}]')


def test_bad_report_values():
    with pytest.raises(ValueError):
        CheckReport("a", "b", "1", "1", "folklore", "match")
    with pytest.raises(ValueError):
        CheckReport("a", "b", "1", "1", "paper", "fine")


def test_empty_emitters():
    assert json.loads(emit_json([])) == []
    assert emit_csv([]) == ",".join(FIELDS) + "\n"


def test_csv_output(capsys):
    _, out, _ = run(capsys, "verify-paper", "--filter", "index-*", "--csv", "-")
    lines = out.splitlines()
    assert lines[0] == ",".join(FIELDS)
    assert lines[1].startswith("index-cp2-sum,")


def test_negative_arguments(capsys):
    code, out, _ = run(capsys, "index", "--sigma", "-16", "--e", "24")
    assert code == 0 and out.strip() == str((29 * -16 - 15 * 24) // 2)
    code, out, _ = run(capsys, "smooth", "--A", "0", "--B", "-5/4", "--attempts", "20", "--json", "-")
    assert json.loads(out)["B"] == "-5/4"
    assert cli._join_negative_values(["--B", "-5/4", "-v"]) == ["--B=-5/4", "-v"]


def test_hilbert_command(capsys):
    code, out, _ = run(capsys, "hilbert", "--p", "1..10")
    assert code == 0
    assert "H(p) = 4 p^3 + 7 p" in out
    assert "10\t4070" in out


def test_km_and_mu_commands(capsys):
    _, out, _ = run(capsys, "km", "--alpha", "4", "--beta", "7", "--cover", "6", "--json", "-")
    assert json.loads(out) == {"deg_L0": "-11/6", "deg_L2": "8"}
    _, out, _ = run(capsys, "mu", "--a", "24", "--b", "11")
    assert out.strip() == "124"


def test_toric_command(capsys):
    _, out, _ = run(capsys, "toric", "--json", "-")
    data = json.loads(out)
    assert (data["area"], data["normalized_area"], data["polarization_square"]) == ("18", "9", "18")
    _, out, _ = run(capsys, "toric", "--polygon", "0,0;1,0;0,1", "--lattice", "1,0;0,1", "--json", "-")
    assert json.loads(out)["intersection_matrix"] == [["1"] * 3] * 3


def test_invariants_command(capsys):
    _, out, _ = run(capsys, "invariants", "--group", "G", "--space", "wedge2")
    assert "dx1^dy1 + dx2^dy2" in out
    _, out, _ = run(capsys, "invariants", "--group", "H", "--space", "multidegree", "--degrees", "4,2;2,4", "--json", "-")
    assert json.loads(out)["dimension"] == 2


def test_invariants_bad_group(capsys):
    code, _, err = run(capsys, "invariants", "--group", "/nonexistent/group.txt")
    assert code == 2 and err.startswith("error:")


def test_global_flag_position(capsys):
    a = run(capsys, "--json", "-", "mu", "--a", "1", "--b", "1")[1]
    b = run(capsys, "mu", "--a", "1", "--b", "1", "--json", "-")[1]
    assert a == b and json.loads(a) == {"mu": 16}
