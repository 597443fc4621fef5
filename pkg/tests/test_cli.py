import json

from tanglekit.cli import run
from tanglekit.tree import parse


def out_of(capsys):
    return capsys.readouterr().out


def test_count_basics(capsys):
    assert run(["count", "tanglegrams", "--n", "4"]) == 0
    assert out_of(capsys) == "13\n"
    assert run(["count", "chains", "--k", "3", "--n", "4"]) == 0
    assert out_of(capsys) == "151\n"
    assert run(["count", "trees", "--n", "12"]) == 0
    assert out_of(capsys) == "451\n"


def test_count_methods_agree(capsys):
    outs = []
    for method in ("direct", "recurrence", "mu"):
        assert run(["count", "tanglegrams", "--n", "10", "--method", method]) == 0
        outs.append(out_of(capsys))
    assert outs[0] == outs[1] == outs[2] == "382728552\n"
    assert run(["count", "trees", "--n", "30", "--method", "oracle"]) == 0
    oracle_out = out_of(capsys)
    assert run(["count", "trees", "--n", "30"]) == 0
    assert out_of(capsys) == oracle_out
    assert run(["count", "chains", "--k", "4", "--n", "8", "--method", "recurrence"]) == 0
    rec_out = out_of(capsys)
    assert run(["count", "chains", "--k", "4", "--n", "8"]) == 0
    assert out_of(capsys) == rec_out


def test_usage_errors(capsys):
    # every bad invocation exits 2 and prints nothing on stdout
    bad = [
        ["count", "chains", "--n", "4"],                      # missing --k
        ["count", "tanglegrams", "--n", "4", "--method", "oracle"],
        ["count", "trees", "--n", "4", "--method", "mu"],
        ["count", "chains", "--k", "2", "--n", "4", "--method", "mu"],
        ["count", "tanglegrams", "--n", "0"],
        ["count", "tanglegrams"],
        ["count", "widgets", "--n", "4"],
        ["sample", "tanglegram", "--n", "4", "--count", "2"],  # missing --seed
        ["asym", "--n", "100", "--terms", "7", "--family", "a"],
        ["stats", "pattern", "--n", "6", "--samples", "10", "--seed", "1"],
        ["stats", "pattern", "--pattern", "((.)", "--n", "6",
         "--samples", "10", "--seed", "1"],
        ["--bogus"],
    ]
    for argv in bad:
        assert run(argv) == 2, argv
        assert capsys.readouterr().out == ""


def test_cap_exit_code(capsys):
    assert run(["oracle", "tanglegrams", "--n", "9"]) == 3
    assert capsys.readouterr().out == ""
    assert run(["oracle", "tanglegrams", "--n", "8"]) == 3  # needs --allow-slow


def test_sample_deterministic(capsys):
    argv = ["sample", "tanglegram", "--n", "6", "--seed", "7", "--count", "5"]
    assert run(argv) == 0
    first = out_of(capsys)
    assert run(argv) == 0
    assert out_of(capsys) == first
    lines = first.splitlines()
    assert len(lines) == 5
    for line in lines:
        d = json.loads(line)
        assert list(d) == ["n", "left", "right", "matching"]
        assert d["n"] == 6
        assert parse(d["left"]).leaves == 6
        assert parse(d["right"]).leaves == 6
        assert sorted(d["matching"]) == list(range(1, 7))


def test_sample_tree_json(capsys):
    assert run(["sample", "tree", "--n", "5", "--seed", "3", "--count", "4"]) == 0
    for line in out_of(capsys).splitlines():
        d = json.loads(line)
        assert list(d) == ["n", "tree"]
        assert parse(d["tree"]).leaves == 5


def test_sample_chain_json(capsys):
    assert run(["sample", "chain", "--n", "4", "--seed", "9", "--count", "3"]) == 0
    for line in out_of(capsys).splitlines():
        d = json.loads(line)
        assert list(d) == ["n", "trees", "matchings"]
        assert len(d["trees"]) == 3  # --k defaults to 3
        assert len(d["matchings"]) == 2
    assert run(["sample", "chain", "--n", "4", "--k", "2", "--seed", "9",
                "--count", "1"]) == 0
    d = json.loads(out_of(capsys))
    assert len(d["trees"]) == 2 and len(d["matchings"]) == 1


def test_sample_text_format(capsys):
    assert run(["sample", "tanglegram", "--n", "4", "--seed", "1", "--count", "2",
                "--format", "text"]) == 0
    for line in out_of(capsys).splitlines():
        left, right, matching = line.split(" ")
        assert parse(left).leaves == 4 and parse(right).leaves == 4
        assert sorted(int(v) for v in matching.split(",")) == [1, 2, 3, 4]
    assert run(["sample", "tree", "--n", "7", "--seed", "2", "--count", "2",
                "--format", "text"]) == 0
    for line in out_of(capsys).splitlines():
        assert parse(line).leaves == 7


def test_asym_output(capsys):
    assert run(["asym", "--n", "100", "--terms", "3", "--family", "a"]) == 0
    lines = out_of(capsys).splitlines()
    assert len(lines) == 2
    float(lines[0].replace("e+", "e"))  # parses as a number
    assert lines[1].startswith("relative error vs exact: ")
    # past the exact-comparison range only the approximation is printed
    assert run(["asym", "--n", "2001", "--terms", "2", "--family", "b"]) == 0
    assert len(out_of(capsys).splitlines()) == 1


def test_const_output(capsys):
    assert run(["const", "f-quarter"]) == 0
    assert out_of(capsys).startswith("0.2710416936088327870")


def test_stats_output(capsys):
    assert run(["stats", "cherries", "--n", "2", "--samples", "50",
                "--seed", "5"]) == 0
    d = json.loads(out_of(capsys))
    assert list(d) == ["n", "samples", "statistic", "mean", "variance",
                       "reference", "histogram"]
    assert d["mean"] == 1.0 and d["samples"] == 50
    assert run(["stats", "pattern", "--pattern", "(..)", "--n", "8",
                "--samples", "20", "--seed", "5"]) == 0
    d = json.loads(out_of(capsys))
    assert d["statistic"] == "pattern (..)"
    assert d["reference"] == 2.0


def test_oracle_output(capsys):
    assert run(["oracle", "tanglegrams", "--n", "4"]) == 0
    assert out_of(capsys) == "13\n"
    assert run(["oracle", "tanglegrams", "--n", "4", "--unordered"]) == 0
    assert out_of(capsys) == "10\n"
    assert run(["oracle", "tanglegrams", "--n", "3", "--list"]) == 0
    lines = out_of(capsys).splitlines()
    assert lines[0] == "2" and len(lines) == 3
    for line in lines[1:]:
        d = json.loads(line)
        assert list(d) == ["n", "left", "right", "matching"]


def test_table_output(capsys):
    assert run(["table", "paper"]) == 0
    out = out_of(capsys)
    assert "25595" in out       # tanglegrams at n = 7
    assert "13048" in out       # unordered classes at n = 7
    assert "13305590" in out    # tanglegrams at n = 9
    header = out.splitlines()[0].split()
    assert header[0] == "n" and "tanglegrams" in header
