import json
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from achromatic_arboricity.cli import main, parse_range, UsageError
from achromatic_arboricity.construction import build_coloring
from achromatic_arboricity.document import DocumentError, decode_json, encode_dot, encode_json
from achromatic_arboricity.graphcore import EdgeColoring, all_edges

K4_MATCHINGS = {"n": 4, "k": 3, "classes": [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]]}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@st.composite
def colorings(draw):
    n = draw(st.integers(1, 7))
    edges = all_edges(n)
    k = draw(st.integers(1, max(1, len(edges))))
    colors = [draw(st.integers(0, k - 1)) for _ in edges]
    classes = [[e for e, c in zip(edges, colors) if c == i] for i in range(k)]
    return EdgeColoring(n, classes)


@given(colorings())
def test_json_round_trip(c):
    decoded, meta = decode_json(encode_json(c))
    assert decoded == c
    assert meta is None


def test_json_field_order_and_meta():
    text = encode_json(build_coloring(3), {"q": 3, "construction": "projective-plane"})
    keys = list(json.loads(text))
    assert keys == ["n", "k", "classes", "meta"]
    decoded, meta = decode_json(text)
    assert decoded == build_coloring(3)
    assert meta == {"construction": "projective-plane", "q": 3}


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    '{"n": 3, "k": 1}',
    '{"n": 3, "k": 2, "classes": [[[0, 1], [1, 2], [0, 2]]]}',
    '{"n": 3, "k": 1, "classes": [[[0, 1, 2]]]}',
    '{"n": "3", "k": 1, "classes": [[[0, 1]]]}',
    '{"n": 3, "k": 1, "classes": [[[0, 1.5]]]}',
])
def test_decode_rejects_malformed(text):
    with pytest.raises(DocumentError):
        decode_json(text)


def test_dot_export_q3():
    text = encode_dot(build_coloring(3))
    edges = re.findall(r"^\s*(\d+) -- (\d+) \[class=(\d+)\];$", text, re.M)
    assert len(edges) == 78
    assert {int(c) for _, _, c in edges} == set(range(14))
    assert text.startswith("graph K13 {")


def test_parse_range():
    assert parse_range("2..7") == (2, 7)
    assert parse_range("13") == (13, 13)
    assert parse_range("8-12") == (8, 12)
    for bad in ("1..3", "7..2", "x"):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "12")
    assert code == 0
    assert "upper 22" in out and "lower 12" in out
    code, out, _ = run(capsys, "bounds", "13", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["upper"] == 26 and doc["lower"] == 14


def test_bounds_usage_error(capsys):
    code, _, err = run(capsys, "bounds", "1")
    assert code == 1
    assert "n must be >= 2" in err


def test_argparse_errors_use_exit_code_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds"])
    assert exc.value.code == 1


def test_construct_and_verify(tmp_path, capsys):
    path = tmp_path / "k13.json"
    code, _, _ = run(capsys, "construct", "--q", "3", "-o", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["n"] == 13 and doc["k"] == 14
    assert doc["meta"]["q"] == 3
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "valid" in out


def test_construct_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "construct", "--q", "5", "--reproducible", "-o", str(a))
    run(capsys, "construct", "--q", "5", "--reproducible", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()
    assert "tool_version" not in json.loads(a.read_text())["meta"]


def test_construct_dot(tmp_path, capsys):
    path = tmp_path / "k13.dot"
    code, _, _ = run(capsys, "construct", "--q", "3", "--format", "dot", "-o", str(path))
    assert code == 0
    assert len(re.findall(r"\[class=\d+\]", path.read_text())) == 78


@pytest.mark.parametrize("q", ["4", "2", "9"])
def test_construct_rejects_bad_q(capsys, q):
    code, _, err = run(capsys, "construct", "--q", q)
    assert code == 1
    assert "error" in err


def test_construct_io_failure(tmp_path, capsys):
    code, _, _ = run(capsys, "construct", "--q", "3", "-o", str(tmp_path / "missing" / "x.json"))
    assert code == 4


@pytest.mark.parametrize("q", [3, 5, 7, 11])
def test_construct_then_verify_always_valid(tmp_path, capsys, q):
    path = tmp_path / f"q{q}.json"
    assert run(capsys, "construct", "--q", str(q), "-o", str(path))[0] == 0
    assert run(capsys, "verify", str(path))[0] == 0


def test_verify_k4_matchings(tmp_path, capsys):
    path = tmp_path / "k4.json"
    path.write_text(json.dumps(K4_MATCHINGS))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 0
    assert json.loads(out)["is_valid"] is True


def test_verify_duplicate_edge(tmp_path, capsys):
    doc = {"n": 3, "k": 2, "classes": [[[0, 1], [1, 2]], [[0, 2], [0, 1]]]}
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 3
    report = json.loads(out)
    assert report["partition_ok"] is False
    assert any("appears in class 0 and class 1" in d for d in report["diagnostics"])


def test_verify_invalid_coloring(tmp_path, capsys):
    doc = {"n": 4, "k": 1, "classes": [[list(e) for e in all_edges(4)]]}
    path = tmp_path / "one.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 3
    assert "INVALID" in out


def test_verify_parse_failure(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{ nope")
    assert run(capsys, "verify", str(path))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "absent.json"))[0] == 2


def test_search_command(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "5")
    assert code == 0
    assert "Exact(4)" in out
    witness = tmp_path / "w6.json"
    code, out, _ = run(capsys, "search", "6", "-o", str(witness))
    assert "Exact(6)" in out
    assert run(capsys, "verify", str(witness))[0] == 0


def test_search_n8_bracket(capsys):
    code, out, _ = run(capsys, "search", "8", "--max-nodes", "2e4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"] >= 8 and doc["upper"] <= 11


def test_table_command(capsys):
    code, out, _ = run(capsys, "table", "2..7", "--json")
    assert code == 0
    assert [r["exact"] for r in json.loads(out)] == [1, 2, 3, 4, 6, 7]
    code, out, _ = run(capsys, "table", "8..12", "--json")
    rows = json.loads(out)
    assert [r["lower"] for r in rows] == [8, 9, 10, 11, 12]
    assert [r["upper"] for r in rows] == [11, 13, 15, 18, 22]
    code, out, _ = run(capsys, "table", "13..13", "--json")
    assert json.loads(out)[0]["lower"] == 14 and json.loads(out)[0]["upper"] == 26
    code, out, _ = run(capsys, "table", "2..13")
    assert code == 0 and len(out.strip().splitlines()) == 13


def test_table_usage_error(capsys):
    assert run(capsys, "table", "7..2")[0] == 1
