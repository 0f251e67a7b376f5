import json
import subprocess
import sys

import pytest

from spiderkit import SpiderPartition, degree_sequence, parse_graph, recognize_thin, serialize_graph
from spiderkit.cli import main
from spiderkit.gen import complete_graph, random_cograph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    assert set(doc) == {"command", "input_digest", "result", "elapsed_ms"}
    assert doc["input_digest"].startswith("sha256:")
    return code, doc["result"]


def test_recognize_spider10(capsys, data_dir):
    code, res = run_json(capsys, "recognize", data_dir / "spider10.txt", "--verify")
    assert code == 0
    assert res["class"] == "thin"
    assert res["partition"]["K"] == [0, 1, 2] and res["partition"]["S"] == [3, 4, 5]
    assert res["partition"]["R"] == [6, 7, 8, 9]
    assert res["verified"] is True


def test_recognize_classes(capsys, data_dir):
    assert run_json(capsys, "recognize", data_dir / "p4.txt")[1]["class"] == "both"
    code, res = run_json(capsys, "recognize", data_dir / "c5.txt")
    assert code == 0 and res == {"class": "neither"}


def test_recognize_digest_is_stable(capsys, data_dir):
    _, a, _ = run(capsys, "recognize", data_dir / "spider10.txt")
    _, b, _ = run(capsys, "recognize", data_dir / "spider10.txt")
    assert json.loads(a)["input_digest"] == json.loads(b)["input_digest"]


def test_human_output(capsys, data_dir):
    code, out, _ = run(capsys, "recognize", data_dir / "c5.txt", "--human")
    assert code == 0 and "class        neither" in out


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 1\n")
    code, out, err = run(capsys, "recognize", bad)
    assert code == 2 and out == ""
    assert "line 2" in err and "self-loop" in err
    code, _, err = run(capsys, "recognize", tmp_path / "missing.txt")
    assert code == 2 and "cannot read" in err


def test_size_ceiling(capsys, tmp_path):
    big = tmp_path / "big.txt"
    big.write_text("20000000 0\n")
    code, _, err = run(capsys, "recognize", big)
    assert code == 2 and "too large" in err


def test_verify(capsys, data_dir, tmp_path):
    part = tmp_path / "p.json"
    part.write_text(json.dumps({"kind": "thin", "K": [0, 1, 2], "S": [6, 4, 5], "R": [3, 7, 8, 9],
                                "matching": [[0, 6], [1, 4], [2, 5]]}))
    code, res = run_json(capsys, "verify", data_dir / "spider10.txt", part)
    assert code == 0 and res == {"valid": False, "kind": "thin", "violated": "iv"}
    part.write_text("{not json")
    assert run(capsys, "verify", data_dir / "spider10.txt", part)[0] == 2


def test_seq_check(capsys):
    code, res = run_json(capsys, "seq", "check", "counts:0,3,0,0,2,2,0,3")
    assert code == 0
    assert res["graphical"] is True
    assert res["thin"] == {"realizable": True, "kind": "thin", "s": 3, "v": 10, "head_sequence": [0, 2, 2]}
    assert res["thick"] == {"realizable": False, "kind": "thick"}
    assert run_json(capsys, "seq", "check", "degrees:3,3,1,1")[1]["graphical"] is False
    assert run(capsys, "seq", "check", "counts:1,x")[0] == 2


def test_seq_realize(capsys, tmp_path):
    code, out, _ = run(capsys, "seq", "realize", "counts:0,2,2", "--as", "thin")
    assert code == 0
    g = parse_graph(out)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 3)]
    assert "# partition " in out
    code, out, _ = run(capsys, "seq", "realize", "counts:0,0,3,0,2,2,0,0,3", "--as", "thick")
    assert code == 0 and sorted(parse_graph(out).degrees().tolist()).count(8) == 3
    code, out, err = run(capsys, "seq", "realize", "counts:0,2,1", "--as", "thin")
    assert code == 1 and out == "" and "not realizable" in err
    assert run(capsys, "seq", "realize", "degrees:3,3,1,1")[0] == 1
    target = tmp_path / "g.txt"
    part = tmp_path / "p.json"
    assert run(capsys, "seq", "realize", "counts:0,3,0,0,2,2,0,3", "--as", "thin", "-o", target,
               "--partition", part)[0] == 0
    g = parse_graph(target.read_text())
    assert recognize_thin(g) == SpiderPartition.from_json(json.loads(part.read_text()))


def test_p4sparse(capsys, data_dir, tmp_path):
    code, res = run_json(capsys, "p4sparse", data_dir / "spider10.txt")
    assert code == 0 and res["brute"] is True and res["recursive"] is True
    code, res = run_json(capsys, "p4sparse", data_dir / "c5.txt", "--method", "brute")
    assert code == 0 and res == {"p4_sparse": False, "method": "brute", "violating_set": [0, 1, 2, 3, 4]}
    cg = tmp_path / "cograph.txt"
    cg.write_text(serialize_graph(random_cograph(12, 4, 3)))
    assert run_json(capsys, "p4sparse", cg, "--method", "recursive")[1]["p4_sparse"] is True
    big = tmp_path / "big.txt"
    big.write_text("41 0\n")
    code, _, err = run(capsys, "p4sparse", big, "--method", "brute")
    assert code == 2 and "recursive" in err


def test_generate_pipeline(capsys, tmp_path):
    target = tmp_path / "spider.txt"
    assert run(capsys, "generate", "thin", "--s", 3, "--head", "p4", "--seed", 1, "-o", target)[0] == 0
    text = target.read_text()
    assert text.startswith("# generate kind=thin_spider seed=1")
    assert degree_sequence(parse_graph(text)).counts == (0, 3, 0, 0, 2, 2, 0, 3)
    assert run_json(capsys, "recognize", target)[1]["class"] == "thin"
    _, again, _ = run(capsys, "generate", "thin", "--s", 3, "--head", "p4", "--seed", 1)
    assert again == text


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "random", "--seed", "1", "--n", "8", "--p", "0.3"],
        ["generate", "thick", "--seed", "2", "--s", "3", "--head", "random", "--head-size", "4"],
        ["generate", "p4sparse", "--seed", "3", "--n", "12"],
        ["generate", "p4sparse", "--seed", "3", "--n", "12", "--cograph"],
    ],
)
def test_generate_kinds(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and parse_graph(out).n > 0


@pytest.mark.parametrize(
    "argv",
    [
        ["generate", "random", "--seed", "1"],
        ["generate", "thin", "--seed", "1", "--n", "5"],
        ["generate", "thin", "--seed", "1", "--s", "1"],
        ["generate", "random", "--seed", "1", "--n", "5", "--p", "2"],
        ["generate", "thin", "--seed", "1", "--head", "nonsense"],
    ],
)
def test_generate_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_generate_requires_seed(capsys):
    with pytest.raises(SystemExit) as info:
        main(["generate", "thin"])
    assert info.value.code == 2


def test_complement(capsys, data_dir, tmp_path):
    k4 = tmp_path / "k4.txt"
    k4.write_text(serialize_graph(complete_graph(4)))
    code, out, _ = run(capsys, "complement", k4)
    assert code == 0 and out == "4 0\n"
    once = tmp_path / "once.txt"
    twice = tmp_path / "twice.txt"
    src = data_dir / "spider10.txt"
    run(capsys, "complement", src, "-o", once)
    run(capsys, "complement", once, "-o", twice)
    assert twice.read_bytes() == serialize_graph(parse_graph(src.read_text())).encode()
    run(capsys, "complement", twice, "-o", once)
    thrice = tmp_path / "thrice.txt"
    run(capsys, "complement", once, "-o", thrice)
    assert thrice.read_bytes() == twice.read_bytes()


def test_selftest(capsys):
    code, res = run_json(capsys, "selftest", "--max-n", 4)
    assert code == 0 and res["ok"] is True
    assert all(s["ok"] for s in res["suites"])


def test_console_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "spiderkit", "recognize", str(data_dir / "p4.txt")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["class"] == "both"
