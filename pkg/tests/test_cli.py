"""Document round-trips and the command surface."""

import json

import pytest

from gkm.cli import main
from gkm.corpus import corpus
from gkm.errors import ParseError, ValidationError
from gkm.jsonio import dumps, graph_to_document, loads, parse_rational


@pytest.fixture()
def cp3_file(tmp_path):
    inst = corpus("cp3-k4")
    path = tmp_path / "cp3-k4.json"
    path.write_text(dumps(inst.graph, inst.xi), encoding="utf-8")
    return path


# -- parsing --------------------------------------------------------------------

def test_parse_rational_forms():
    from fractions import Fraction

    assert parse_rational("3/4", "x") == Fraction(3, 4)
    assert parse_rational("-2", "x") == -2
    assert parse_rational(5, "x") == 5


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(ParseError):
        parse_rational("1/0", "x")


def test_parse_rational_rejects_floats_and_garbage():
    with pytest.raises(ParseError):
        parse_rational(0.5, "x")
    with pytest.raises(ParseError):
        parse_rational("1.5", "x")


def test_round_trip_document():
    inst = corpus("flag-su3")
    doc = graph_to_document(inst.graph, inst.xi)
    graph, xi = loads(json.dumps(doc))
    assert graph_to_document(graph, xi) == doc


def test_loads_rejects_missing_keys():
    with pytest.raises(ParseError):
        loads(json.dumps({"rank": 2, "valence": 3, "vertices": []}))


def test_loads_rejects_invalid_graph():
    # Break moment compatibility: reverse one weight.
    doc = graph_to_document(corpus("cp3-k4").graph)
    doc["edges"][0]["weight"] = ["-1", "0"]
    with pytest.raises(ValidationError) as err:
        loads(json.dumps(doc))
    failed = {c.name for c in err.value.report.failures()}
    assert "moment-compatibility" in failed


# -- commands -------------------------------------------------------------------

def test_validate_command(cp3_file, capsys):
    assert main(["validate", str(cp3_file)]) == 0
    out = capsys.readouterr().out
    assert "valid" in out


def test_report_command_text(cp3_file, capsys):
    assert main(["report", str(cp3_file)]) == 0
    out = capsys.readouterr().out
    assert "moment-image type  : (a)" in out
    assert "hard Lefschetz     : True" in out


def test_report_command_json(cp3_file, capsys):
    assert main(["report", str(cp3_file), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["type"]["label"] == "a"
    assert payload["report"]["hard_lefschetz"] is True
    assert payload["report"]["ok"] is True
    assert payload["xi"] == ["1", "3"]
    assert payload["xi_source"] == "document"


def test_report_command_not_generic_xi(cp3_file, capsys):
    code = main(["report", str(cp3_file), "--xi", "0,1"])
    assert code == 1
    err = capsys.readouterr().err
    assert "orthogonal" in err


def test_report_searches_xi_when_absent(tmp_path, capsys):
    inst = corpus("tol-d")
    path = tmp_path / "tol.json"
    path.write_text(dumps(inst.graph), encoding="utf-8")  # no xi recorded
    assert main(["report", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["xi_source"] == "search"
    assert payload["report"]["hard_lefschetz"] is True


def test_render_command_deterministic(cp3_file, tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert main(["render", str(cp3_file), "-o", str(out1)]) == 0
    assert main(["render", str(cp3_file), "-o", str(out2)]) == 0
    capsys.readouterr()
    data1 = out1.read_bytes()
    assert data1 == out2.read_bytes()
    text = data1.decode()
    assert text.startswith("<svg")
    assert "<polygon" in text  # hull shading and arrowheads
    assert "xi = (1, 3)" in text


def test_corpus_listing(capsys):
    assert main(["corpus"]) == 0
    out = capsys.readouterr().out
    for name in ("cp3-k4", "flag-su3", "tol-d"):
        assert name in out


def test_corpus_materialize_round_trip(tmp_path, capsys):
    assert main(["corpus", "flag-su3"]) == 0
    doc_text = capsys.readouterr().out
    path = tmp_path / "flag.json"
    path.write_text(doc_text, encoding="utf-8")
    assert main(["report", str(path), "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["type"]["label"] == "f"


def test_corpus_unknown_name(capsys):
    assert main(["corpus", "nope"]) == 1
    assert "unknown" in capsys.readouterr().err


def test_validate_reports_failures(tmp_path, capsys):
    doc = graph_to_document(corpus("cp3-k4").graph)
    doc["edges"][0]["weight"] = ["-1", "0"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["validate", str(path)]) == 1
    assert "moment-compatibility" in capsys.readouterr().out
