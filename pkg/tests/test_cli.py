import json
import os

from epglab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "C2 x C2 x C3")
    assert code == 0
    data = json.loads(out)
    assert data["maximal_cyclic_subgroups"] == 3
    assert data["maximal_elements"] == 6
    assert data["simplicial"] == 9
    assert data["omega"] == 6


def test_info_parse_error(capsys):
    code, _, err = run(capsys, "info", "D7")
    assert code == 2
    assert "dihedral" in err


def test_check_consistent(capsys):
    code, out, _ = run(capsys, "check", "Q8", "--props", "cograph,diamond,eppo")
    assert code == 0
    data = json.loads(out)
    assert data["consistent"]
    assert data["predicates"]["cograph"]["value"] is True
    assert data["predicates"]["diamond_free"]["value"] is False
    assert data["predicates"]["eppo"]["value"] is True


def test_check_routes(capsys):
    code, out, _ = run(capsys, "check", "A7", "--props", "cograph,chordal",
                       "--route", "both")
    assert code == 0
    data = json.loads(out)
    assert data["predicates"]["cograph"]["value"] is False
    assert data["predicates"]["chordal"]["value"] is True
    assert data["predicates"]["cograph"]["routes"]["group"] is False


def test_check_tier_limit(capsys):
    code, _, err = run(capsys, "check", "M12", "--tier", "fast")
    assert code == 3
    assert "exceeds tier" in err


def test_check_unknown_prop(capsys):
    code, _, err = run(capsys, "check", "Q8", "--props", "sparkly")
    assert code == 2


def test_export_dot_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.dot", tmp_path / "b.dot"
    assert run(capsys, "export", "Q8", "--format", "dot", "--out", str(p1))[0] == 0
    assert run(capsys, "export", "Q8", "--format", "dot", "--out", str(p2))[0] == 0
    b1, b2 = p1.read_bytes(), p2.read_bytes()
    assert b1 == b2
    text = b1.decode()
    assert text.count(" -- ") == 16  # pairwise-oracle edge count for Q8
    assert text.startswith("graph epg {")
    assert "\r" not in text


def test_export_edges_sorted(tmp_path, capsys):
    p = tmp_path / "c6.edges"
    assert run(capsys, "export", "C6", "--format", "edges", "--out", str(p))[0] == 0
    lines = p.read_text().splitlines()
    assert len(lines) == 15  # K6
    assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split())))


def test_export_json_power_graph(tmp_path, capsys):
    p = tmp_path / "g.json"
    code, _, _ = run(capsys, "export", "C2 x C2 x C3", "--format", "json",
                     "--out", str(p), "--graph", "power")
    assert code == 0
    data = json.loads(p.read_text())
    assert data["graph"] == "power"
    assert data["order"] == 12
    # power graph has strictly fewer edges than the enhanced power graph here
    p2 = tmp_path / "g2.json"
    run(capsys, "export", "C2 x C2 x C3", "--format", "json", "--out", str(p2))
    full = json.loads(p2.read_text())
    assert len(data["edges"]) < len(full["edges"])


def test_verify_writes_report_and_figure(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "eppo", "--tier", "fast",
                       "--out", str(tmp_path))
    assert code == 0
    lines = out.strip().splitlines()
    report = json.loads(open(lines[0]).read())
    assert report["suite"] == "eppo"
    assert report["pass"] is True
    assert set(report["env"]) == {"python", "platform", "package"}
    assert lines[1].endswith(".png") and os.path.exists(lines[1])


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2
