import json

import pytest

from skewtilt import wire
from skewtilt.cli import main
from skewtilt.flip import flip
from skewtilt.skewcurves import MINUS, PLUS, Half, Pair, Star, pw_loop, sp_loop, tors_pair
from skewtilt.triang import fv_arrow
from skewtilt.wire import WireError


def all_kinds(n=4):
    return [Half(1, -2, PLUS, n), Half(2, 3, MINUS, n), Pair(0, 2, n),
            tors_pair(1, 2, n), Star(PLUS, MINUS, n),
            pw_loop(3, 2, n), sp_loop(-1, 3, PLUS, n)]


def test_arc_wire_roundtrip():
    for g in all_kinds():
        assert wire.arc_from_wire(wire.arc_to_wire(g), 4) == g


def test_tri_wire_roundtrip_and_ordering():
    tri = fv_arrow(0, 0, 3)
    payload = wire.tri_to_wire(tri)
    assert wire.tri_from_wire(payload).arcs == tri.arcs
    # canonical arc ordering is stable
    assert payload == wire.tri_to_wire(wire.tri_from_wire(payload))


def test_unknown_fields_rejected():
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "pair", "i": 0, "k": 1, "x": 5}, 2)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "half", "cross": 1, "index": 0}, 2)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "blob"}, 2)
    with pytest.raises(WireError):
        wire.tri_from_wire({"n": 2, "arcs": [], "extra": 1})
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "half", "cross": 3, "index": 0,
                            "sign": "+"}, 2)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "pair", "i": 0, "k": True}, 2)


def test_wire_rejects_invalid_parameters():
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "pwloop", "lam": [0, 1], "j": 1}, 4)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "pwloop", "lam": [1, 0], "j": 1}, 4)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "tors", "res": 7, "len": 1}, 4)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "tors", "res": 0, "len": 0}, 4)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "pair", "i": 0, "k": 4}, 4)
    with pytest.raises(WireError):
        wire.arc_from_wire({"type": "sploop", "lam": 2, "j": 2, "sign": "+"}, 4)


def test_flip_wire():
    tri = fv_arrow(0, 0, 2)
    res = flip(tri, Pair(0, 1, 2))
    payload = wire.flip_to_wire(res)
    assert payload["case"] == "II(2)"
    assert payload["removed"] == {"type": "pair", "i": 0, "k": 1}
    assert payload["added"] == {"type": "pair", "i": 1, "k": 1}


def write_tri(tmp_path, tri, name="tri.json"):
    path = tmp_path / name
    path.write_text(json.dumps(wire.tri_to_wire(tri)))
    return str(path)


def test_cli_map(capsys):
    assert main(["map", "--n", "4", "--arc",
                 '{"type":"pair","i":0,"k":2}']) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "E_{O(-x3)}<x3>"
    assert main(["map", "--n", "4", "--sheaf", "O(x1-x2+2*x3)"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert json.loads(out[0]) == {"type": "half", "cross": 1, "index": 2,
                                  "sign": "+"}
    assert main(["map", "--n", "4", "--arc", "{bad json"]) == 2


def test_cli_check_and_flip(tmp_path, capsys):
    tri = fv_arrow(0, 0, 2)
    path = write_tri(tmp_path, tri)
    assert main(["check", path]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["ok"] and report["violations"] == []
    assert report["zeta"] == ["+-(0)", "+-(0)"]
    assert report["fv"] and report["iota"] == [1, 1, 1]
    assert report["names"][0] == "O"

    assert main(["flip", path, "--arc", '{"type":"pair","i":0,"k":1}']) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["case"] == "II(2)"

    # flip back restores the original file contents
    flipped = tmp_path / "flipped.json"
    flipped.write_text(json.dumps(payload["tri"]))
    assert main(["flip", str(flipped), "--arc",
                 json.dumps(payload["added"])]) == 0
    payload2 = json.loads(capsys.readouterr().out)
    with open(path) as fh:
        original = json.load(fh)
    assert payload2["tri"] == wire.tri_to_wire(wire.tri_from_wire(original))

    # a non-member arc is a domain violation
    assert main(["flip", path, "--arc", '{"type":"pair","i":5,"k":1}']) == 1
    capsys.readouterr()


def test_cli_check_invalid(tmp_path, capsys):
    bad = {"n": 2, "arcs": [{"type": "star", "e1": "+", "e2": "+"},
                            {"type": "star", "e1": "-", "e2": "-"}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    assert main(["check", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["ok"]
    assert any(v["code"] == "incompatible" for v in report["violations"])


def test_cli_enumerate_deterministic(capsys):
    assert main(["enumerate", "--n", "2", "--window", "4"]) == 0
    first = capsys.readouterr().out
    assert main(["enumerate", "--n", "2", "--window", "4"]) == 0
    second = capsys.readouterr().out
    assert first == second
    lines = [json.loads(line) for line in first.splitlines()]
    assert all(len(obj["arcs"]) == 5 for obj in lines)


def test_cli_path(tmp_path, capsys):
    from skewtilt.triang import fv_under
    a = write_tri(tmp_path, fv_arrow(0, 0, 2), "a.json")
    b = write_tri(tmp_path, fv_under(0, 0, 2), "b.json")
    assert main(["path", a, b]) == 0
    steps = json.loads(capsys.readouterr().out)["steps"]
    assert steps, "expected a non-empty flip sequence"
    last = steps[-1]["tri"]
    assert wire.tri_from_wire(last).arcs == fv_under(0, 0, 2).arcs


def test_cli_graph_and_shift(tmp_path, capsys):
    out = tmp_path / "g.dot"
    assert main(["graph", "--n", "2", "--window", "4", "--dot",
                 "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("graph tilting {")

    path = write_tri(tmp_path, fv_arrow(0, 0, 2))
    assert main(["shift", path, "--x", "x3"]) == 0
    shifted = json.loads(capsys.readouterr().out)
    tri = wire.tri_from_wire(shifted)
    assert Half(1, 1, PLUS, 2) in tri.arcs
