import json
import subprocess
import sys

import pytest

from nbcactivity import covering
from nbcactivity.cli import run
from nbcactivity.verify import two_pure_counterexample, worked_example


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    data = json.loads(out.out) if out.out.strip() else None
    return code, data, out.err


def test_nbc_linial(capsys):
    code, data, _ = call(capsys, "nbc", "--n", "3", "--interval", "1:1")
    assert code == 0
    assert data["nbc_count"] == 7
    assert data["activity_vector"] == [1, 1, 1]
    assert data["interval"] == [1, 1]


def test_nbc_order_file(tmp_path, capsys):
    order = [[1, 3, 1], [2, 3, 1], [1, 2, 1]]
    path = tmp_path / "order.json"
    path.write_text(json.dumps(order))
    code, data, _ = call(capsys, "nbc", "--n", "3", "--interval", "1:1", "--order", str(path))
    assert code == 0 and data["activity_vector"] == [1, 1, 1]
    path.write_text(json.dumps(order[:2]))
    code, _, err = call(capsys, "nbc", "--n", "3", "--interval", "1:1", "--order", str(path))
    assert code == 1 and "error" in err


def test_trees(capsys):
    code, data, _ = call(capsys, "trees", "--n", "4", "--class", "non-increasing", "--k1", "1",
                         "--statistic", "children-of-n")
    assert code == 0
    assert data["count"] == 14
    assert data["distribution"] == [4, 6, 3, 1]
    code, data, _ = call(capsys, "trees", "--n", "4", "--colors", "3", "--class", "decreasing", "--k1", "3",
                         "--forests")
    assert code == 0 and data["count"] == 364
    code, data, _ = call(capsys, "trees", "--n", "3", "--list")
    assert data["count"] == 9 and len(data["items"]) == 9


def test_trees_bad_colors(capsys):
    code, _, err = call(capsys, "trees", "--n", "3", "--colors", "2", "--k1", "1", "--k2", "0")
    assert code == 1 and "colors" in err


def test_codec_roundtrip(tmp_path, capsys):
    code, data, _ = call(capsys, "codec", "blue-decode", "--n", "7", "--word", "b,5,b,2,4,b")
    assert code == 0
    assert data["root"] == 6
    assert sorted(data["edges"]) == sorted([[2, 1, 1], [6, 3, 1], [5, 4, 1], [2, 7, 1], [5, 2, 1], [6, 5, 1]])
    path = tmp_path / "tree.json"
    path.write_text(json.dumps(data))
    code, enc, _ = call(capsys, "codec", "pruefer-encode", "--n", "7", "--tree", str(path))
    assert code == 0 and enc["word"] == "2,6,5,2,5,6"
    code, enc, _ = call(capsys, "codec", "blue-encode", "--n", "7", "--tree", str(path))
    assert enc["word"] == "b,5,b,2,4,b"


def test_codec_errors(capsys):
    assert call(capsys, "codec", "pruefer-decode", "--n", "4", "--word", "1,2")[0] == 1
    assert call(capsys, "codec", "blue-decode", "--n", "3", "--word", "x,1")[0] == 1
    assert call(capsys, "codec", "blue-encode", "--n", "3")[0] == 1


def test_covering_verify(tmp_path, capsys):
    sys_, act = worked_example()
    path = tmp_path / "worked.json"
    path.write_text(json.dumps(covering.to_json(sys_, act)))
    code, data, _ = call(capsys, "covering", "verify", str(path))
    assert code == 0
    assert data["cardinality_vector"] == [0, 1, 5, 7, 4]
    assert data["activity_vector"] == [1, 0, 2, 1, 0]
    assert data["activity"] == {"ok": True}


def test_covering_verify_failures(tmp_path, capsys):
    sys_, act = worked_example()
    act = dict(act)
    act[frozenset({1, 2, 3, 4})] = frozenset({1})
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(covering.to_json(sys_, act)))
    code, data, _ = call(capsys, "covering", "verify", str(path))
    assert code == 2 and data["activity"]["reason"] == "uncovered"
    path.write_text(json.dumps(covering.to_json(two_pure_counterexample())))
    code, data, _ = call(capsys, "covering", "verify", str(path))
    assert code == 0 and data["feasible"] is False
    assert data["activity_vector_from_cardinality"] == [-1, 2, 1]
    assert call(capsys, "covering", "verify", str(tmp_path / "missing.json"))[0] == 1


def test_conjecture(capsys):
    code, data, _ = call(capsys, "conjecture", "--n", "3", "--variant", "restricted")
    assert code == 0 and data["equal"]
    code, data, _ = call(capsys, "conjecture", "--n", "3", "--variant", "literal")
    assert code == 2 and data["dist_top"] == [1, 2, 0]


def test_verify_targets(capsys):
    code, data, _ = call(capsys, "verify", "--target", "thm4.6", "--n", "3", "--interval", "1:1")
    assert code == 0 and data["verdict"] == "pass"
    code, data, _ = call(capsys, "verify", "--target", "eq2", "--n", "4")
    assert code == 0 and data["computed"]["formula"] == 4
    code, data, _ = call(capsys, "verify", "--target", "sec3")
    assert code == 0 and data["verdict"] == "flagged-discrepancy"
    code, data, _ = call(capsys, "verify", "--target", "prop4.5", "--n", "3", "--k1", "1", "--k2", "1",
                         "--class", "decreasing")
    assert code == 0 and data["verdict"] == "pass"


def test_verify_scale(capsys):
    code, data, _ = call(capsys, "verify", "--scale", "3")
    assert code == 0
    assert data["summary"]["fail"] == 0 and data["summary"]["flagged-discrepancy"] > 0
    assert call(capsys, "verify", "--scale", "1")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["nbc", "--n", "3"],
        ["nbc", "--n", "3", "--interval", "1-1"],
        ["bogus"],
        ["trees", "--n", "3", "--wat"],
        ["verify", "--target", "thm4.6"],
        ["verify"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    code = run(argv)
    err = capsys.readouterr().err
    assert code == 1 and err


def test_output_is_byte_stable(capsys):
    run(["nbc", "--n", "4", "--interval", "0:1"])
    first = capsys.readouterr().out
    run(["nbc", "--n", "4", "--interval", "0:1"])
    assert capsys.readouterr().out == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nbcactivity", "nbc", "--n", "3", "--interval", "0:0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["activity_vector"] == [0, 1, 1]
