import json

import pytest

from hopfalg import serialize
from hopfalg.cli import main
from hopfalg.classify import H4nSpec, h4n_matched_pair
from hopfalg.fields import PrimeField
from hopfalg.hopf import FiniteGroupTable, group_algebra, sweedler_h4
from hopfalg.products import bicrossed_product, inclusion_A, inclusion_H


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_ok(tmp_path, capsys):
    path = tmp_path / "h4.json"
    code, out, _ = run(capsys, "build", "h4", "--field", "7",
                       "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert out.splitlines() == ["algebra: ok", "coalgebra: ok",
                                "bialgebra: ok", "antipode: ok"]


def test_verify_failure_exit_code(tmp_path, capsys):
    H = sweedler_h4(PrimeField(7))
    obj = serialize.hopf_to_json(H)
    obj["antipode"] = [[1 if i == j else 0 for j in range(4)]
                       for i in range(4)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "antipode: FAIL" in out


def test_malformed_json_exit2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"dim": 4,,}')
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "line" in err and "column" in err


def test_build_roundtrip_fixtures(tmp_path, capsys):
    for what, extra in [("h4", []), ("h4n", ["--n", "3", "--t", "1"]),
                        ("klein", [])]:
        path = tmp_path / f"{what}.json"
        code, _, _ = run(capsys, "build", what, "--field", "7",
                         "--out", str(path), *extra)
        assert code == 0
        code, _, _ = run(capsys, "verify", str(path))
        assert code == 0


def test_build_double_group(tmp_path, capsys):
    gpath = tmp_path / "c2.json"
    gpath.write_text(json.dumps(
        FiniteGroupTable.cyclic(2).to_json()))
    out_path = tmp_path / "dc2.json"
    code, _, _ = run(capsys, "build", "double-group", "--field", "7",
                     "--group", str(gpath), "--out", str(out_path))
    assert code == 0
    loaded = serialize.hopf_from_json(json.loads(out_path.read_text()))
    assert loaded.dim == 4


def test_deterministic_output(tmp_path, capsys):
    args = ("classify", "h4n", "--n", "6", "--field", "7", "--partition")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert "nu=6" in out1 and "classes=2" in out1


def test_classify_spec_example(capsys):
    code, out, _ = run(capsys, "classify", "h4n", "--n", "3", "--field", "7")
    assert code == 0
    assert out.splitlines() == ["nu=3", "classes=2",
                                "representatives=[1, xi]"]


def test_aut_spec_example(capsys):
    code, out, _ = run(capsys, "aut", "h4n", "--n", "3", "--t", "1",
                       "--field", "7")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "structure = k* x U_1(Z_3)"
    assert lines[1] == "order = 6"


def test_bicrossed_and_morphisms_cli(tmp_path, capsys):
    F7 = PrimeField(7)
    mp1 = h4n_matched_pair(H4nSpec(2, 1, F7))
    mp0 = h4n_matched_pair(H4nSpec(2, 0, F7))
    p1, p0 = tmp_path / "mp1.json", tmp_path / "mp0.json"
    p1.write_text(serialize.dump(serialize.matched_pair_to_json(mp1)))
    p0.write_text(serialize.dump(serialize.matched_pair_to_json(mp0)))
    out_path = tmp_path / "E.json"
    code, out, _ = run(capsys, "bicrossed", str(p1), "--out", str(out_path))
    assert code == 0 and "dim: 8" in out
    code, out, _ = run(capsys, "morphisms", str(p1), str(p0))
    assert code == 0
    assert "isomorphisms:" in out
    n_iso = int(out.split("isomorphisms:")[1].split()[0])
    assert n_iso > 0                     # nu(2)=2: 2(1-0) = 2, q = 1 odd
    code, out, _ = run(capsys, "morphisms", str(p1), str(p0),
                       "--stabilize-a")
    assert code == 0


def test_coz1_cli(tmp_path, capsys):
    F7 = PrimeField(7)
    h_path = tmp_path / "kc3.json"
    a_path = tmp_path / "h4.json"
    h_path.write_text(serialize.dump(serialize.hopf_to_json(
        group_algebra(FiniteGroupTable.cyclic(3), F7))))
    a_path.write_text(serialize.dump(serialize.hopf_to_json(
        sweedler_h4(F7))))
    code, out, _ = run(capsys, "coz1", str(h_path), str(a_path))
    assert code == 0
    assert out.splitlines()[0] == "order: 4"


def test_factorize_cli(tmp_path, capsys):
    F7 = PrimeField(7)
    mp = h4n_matched_pair(H4nSpec(2, 1, F7))
    E = bicrossed_product(mp, check=False)
    e_path = tmp_path / "E.json"
    e_path.write_text(serialize.dump(serialize.hopf_to_json(E)))
    a_path = tmp_path / "iA.json"
    h_path = tmp_path / "iH.json"
    a_path.write_text(serialize.dump(
        serialize.hopf_map_to_json(inclusion_A(mp, E))))
    h_path.write_text(serialize.dump(
        serialize.hopf_map_to_json(inclusion_H(mp, E))))
    out_path = tmp_path / "mp.json"
    code, out, _ = run(capsys, "factorize", str(e_path),
                       "--a-image", str(a_path), "--h-image", str(h_path),
                       "--out", str(out_path))
    assert code == 0
    assert "right action trivial: True" in out
    rec = serialize.matched_pair_from_json(
        json.loads(out_path.read_text()))
    assert rec.actions_equal(mp)


def test_double_hom_cli(tmp_path, capsys):
    gpath = tmp_path / "c2.json"
    gpath.write_text(json.dumps(FiniteGroupTable.cyclic(2).to_json()))
    data = {"lambda": [[1, 0], [0, 0]], "omega": [[1, 1], [1, 1]],
            "theta": [[1, 0], [0, 1]], "v": [0, 1]}
    dpath = tmp_path / "data.json"
    dpath.write_text(json.dumps(data))
    code, out, _ = run(capsys, "double-hom", str(gpath), str(gpath),
                       "--data", str(dpath), "--field", "5")
    assert code == 0 and "valid: True" in out
    data["theta"] = [[0, 1], [1, 0]]
    dpath.write_text(json.dumps(data))
    code, out, _ = run(capsys, "double-hom", str(gpath), str(gpath),
                       "--data", str(dpath), "--field", "5")
    assert code == 1 and "dr1a" in out


def test_klein_cli(capsys):
    code, out, _ = run(capsys, "klein", "--field", "3")
    assert code == 0
    assert "matched pairs: 4" in out


def test_census_cli_budget(capsys, monkeypatch):
    monkeypatch.setenv("HOPF_SEARCH_BUDGET", "2")
    code, _, err = run(capsys, "census", "--n", "4", "--field", "5")
    assert code == 2
    assert "budget" in err.lower()
    monkeypatch.delenv("HOPF_SEARCH_BUDGET")
    code, out, _ = run(capsys, "census", "--n", "4", "--field", "5")
    assert code == 0 and "matched pairs: 4" in out


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "h4n", "--n", "3", "--field", "7",
              "--nonsense"])
    assert exc.value.code == 2
