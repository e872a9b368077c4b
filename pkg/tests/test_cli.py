import json

from flatlie import catalog, inputdoc
from flatlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name):
    path = tmp_path / f"{name}.json"
    path.write_text(json.dumps(catalog.get(name).document))
    return str(path)


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    for name in catalog.names():
        assert name in out


def test_catalog_show_round_trips(capsys):
    for name in catalog.names():
        code, out, _ = run(capsys, "catalog", "show", name)
        assert code == 0
        m1 = inputdoc.loads(out)
        # parse -> emit -> parse gives identical structures
        m2 = inputdoc.parse_document(inputdoc.emit_document(m1))
        assert m1.algebra.c == m2.algebra.c
        assert m1.gram == m2.gram
        assert m1.algebra.labels == m2.algebra.labels


def test_catalog_unknown_entry(capsys):
    code, _, err = run(capsys, "catalog", "show", "nonexistent")
    assert code == 2
    assert "unknown catalog entry" in err


def test_validate_ok(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "-i", write_doc(tmp_path, "rot3"))
    assert code == 0
    assert "ok" in out


def test_validate_rejects_jacobi_violation(capsys, tmp_path):
    doc = {
        "dim": 3,
        "brackets": [
            {"i": 1, "j": 2, "coeffs": ["0", "0", "1"]},
            {"i": 2, "j": 3, "coeffs": ["0", "1", "0"]},
        ],
        "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "-i", str(path))
    assert code == 2
    assert "Jacobi" in err and "(1, 2, 3)" in err


def test_validate_rejects_degenerate_metric(capsys, tmp_path):
    doc = {"dim": 2, "brackets": [], "metric": [["1", "1"], ["1", "1"]]}
    path = tmp_path / "deg.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "-i", str(path))
    assert code == 2
    assert "nondegenerate" in err


def test_validate_rejects_bad_rational(capsys, tmp_path):
    doc = {"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "1/0"]}],
           "metric": [["1", "0"], ["0", "1"]]}
    path = tmp_path / "rat.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "-i", str(path))
    assert code == 2
    assert "invalid rational" in err


def test_validate_rejects_float_metric(capsys, tmp_path):
    doc = {"dim": 2, "brackets": [], "metric": [[1.5, 0], [0, 1]]}
    path = tmp_path / "float.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "-i", str(path))
    assert code == 2
    assert "float" in err


def test_validate_rejects_duplicate_brackets(capsys, tmp_path):
    doc = {
        "dim": 2,
        "brackets": [
            {"i": 1, "j": 2, "coeffs": ["0", "1"]},
            {"i": 1, "j": 2, "coeffs": ["0", "2"]},
        ],
        "metric": [["1", "0"], ["0", "1"]],
    }
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", "-i", str(path))
    assert code == 2
    assert "duplicate" in err


def test_flat_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "flat", "-i", write_doc(tmp_path, "rot3"))
    assert code == 0 and "flat" in out
    code, out, _ = run(capsys, "flat", "-i", write_doc(tmp_path, "classc2_nonflat"))
    assert code == 1
    assert "K(e_1, e_2)" in out  # curvature witness named


def test_killing_output(capsys, tmp_path):
    code, out, _ = run(capsys, "killing", "--json", "-i", write_doc(tmp_path, "rot3"))
    assert code == 0
    section = json.loads(out)
    assert section == {"dim": 1, "basis": [["1", "0", "0"]]}


def test_theorem1_exits(capsys, tmp_path):
    code, out, _ = run(capsys, "theorem1", "-i", write_doc(tmp_path, "rot3"))
    assert code == 0
    code, _, _ = run(capsys, "theorem1", "-i", write_doc(tmp_path, "classc2_flat"))
    assert code == 1
    # wrong signature is a usage error, not a domain verdict
    code, _, err = run(capsys, "theorem1", "-i", write_doc(tmp_path, "heisenberg_euclidean"))
    assert code == 2
    assert "Lorentzian" in err


def test_theorem2_exits(capsys, tmp_path):
    code, _, _ = run(capsys, "theorem2", "-i", write_doc(tmp_path, "classc2_flat"))
    assert code == 0
    code, _, _ = run(capsys, "theorem2", "-i", write_doc(tmp_path, "classc2_nonflat"))
    assert code == 1
    code, _, err = run(capsys, "theorem2", "-i", write_doc(tmp_path, "heisenberg_euclidean"))
    assert code == 2


def test_companion_output(capsys, tmp_path):
    code, out, _ = run(capsys, "companion", "--json", "-i", write_doc(tmp_path, "rot3"))
    assert code == 0
    section = json.loads(out)
    assert section["gram"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    assert section["same_connection"] is True
    code, _, _ = run(capsys, "companion", "-i", write_doc(tmp_path, "classc2_flat"))
    assert code == 1
    code, _, _ = run(capsys, "companion", "-i", write_doc(tmp_path, "heisenberg_euclidean"))
    assert code == 2


def test_geodesic_command(capsys, tmp_path):
    doc = write_doc(tmp_path, "classc2_flat")
    code, out, _ = run(capsys, "geodesic", "-i", doc, "--v0", "1,0", "--t-max", "5", "--json")
    assert code == 0
    section = json.loads(out)
    assert section["outcome"] == "blow_up_detected"
    assert abs(section["blowup_time"] - 1.0) < 1e-3


def test_geodesic_csv_export(capsys, tmp_path):
    doc = write_doc(tmp_path, "rot3")
    csv_path = tmp_path / "out.csv"
    code, _, _ = run(capsys, "geodesic", "-i", doc, "--v0", "1,1,0", "--t-max", "2",
                     "--csv", str(csv_path))
    assert code == 0
    header = csv_path.read_text().splitlines()[0]
    assert header == "t,v_1,v_2,v_3,norm"


def test_geodesic_usage_errors(capsys, tmp_path):
    doc = write_doc(tmp_path, "rot3")
    code, _, err = run(capsys, "geodesic", "-i", doc, "--v0", "1,0", "--t-max", "5")
    assert code == 2 and "components" in err
    code, _, err = run(capsys, "geodesic", "-i", doc, "--v0", "1,x,0", "--t-max", "5")
    assert code == 2


def test_geodesic_accepts_rational_v0(capsys, tmp_path):
    doc = write_doc(tmp_path, "classc2_flat")
    code, out, _ = run(capsys, "geodesic", "-i", doc, "--v0", "1/2,0", "--t-max", "10", "--json")
    assert code == 0
    section = json.loads(out)
    # f' = f^2 with f(0) = 1/2 blows up at t = 2
    assert abs(section["blowup_time"] - 2.0) < 2e-3


def test_analyze_json_deterministic(capsys, tmp_path):
    for name in catalog.names():
        doc = write_doc(tmp_path, name)
        code1, out1, _ = run(capsys, "analyze", "--json", "--seed", "42", "-i", doc)
        code2, out2, _ = run(capsys, "analyze", "--json", "--seed", "42", "-i", doc)
        assert code1 == code2 == 0
        assert out1 == out2
        json.loads(out1)  # well-formed


def test_analyze_json_and_text_agree(capsys, tmp_path):
    doc = write_doc(tmp_path, "classc2_flat")
    _, out_json, _ = run(capsys, "analyze", "--json", "-i", doc)
    rep = json.loads(out_json)
    _, out_text, _ = run(capsys, "analyze", "-i", doc)
    assert rep["flatness"]["flat"] is True
    assert "flat: yes" in out_text
    assert rep["class_c"]["incompleteness"]["verdict"] == "incomplete"
    assert "incomplete" in out_text


def test_analyze_sweep_section(capsys, tmp_path):
    doc = write_doc(tmp_path, "rot3")
    code, out, _ = run(capsys, "analyze", "--json", "--seed", "7", "--sweep", "5", "-i", doc)
    assert code == 0
    rep = json.loads(out)
    assert all(entry["ok"] for entry in rep["sweeps"])


def test_stdin_pipeline(capsys, tmp_path, monkeypatch):
    import io

    text = json.dumps(catalog.get("rot3").document)
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run(capsys, "analyze", "--json", "-i", "-")
    assert code == 0
    assert json.loads(out)["theorem1"]["direct_side"] is True
