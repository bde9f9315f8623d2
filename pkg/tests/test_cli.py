import io

import pytest

from otg.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def graph_files(tmp_path):
    files = {
        "fig": "otg 5\n0 1\n0 3\n1 3\n2 3\n4 0\n4 1\n4 2\n4 3\n",
        # dtg("-+0*") relabeled so vertex 0 is the source
        "swapped": "otg 4\n0 1\n0 2\n0 3\n1 2\n3 2\n",
        "plain": "otg 4\n3 2\n3 1\n3 0\n1 0\n2 0\n",
        "cycle": "otg 3\n0 1\n1 2\n2 0\n",
        "bad": "otg 2\n0 1\n1 0\n",
    }
    paths = {}
    for name, text in files.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_build_edgelist():
    code, out = run("build", "+-0-*")
    assert code == 0
    assert out == "otg 5\n0 1\n0 3\n1 3\n2 3\n4 0\n4 1\n4 2\n4 3\n"


def test_build_dot():
    code, out = run("build", "+*", "--out", "dot")
    assert code == 0
    assert out.startswith("digraph {") and "1 -> 0;" in out


def test_weights():
    assert run("weights", "+-0-*") == (0, "weights: 9 -14 5 -18 20\nthreshold: 20\n")


def test_canon():
    assert run("canon", "-+0*") == (0, "+-0*\n")


def test_count():
    assert run("count", "5") == (0, "34\n")


def test_count_usage_error():
    assert run("count", "0")[0] == 2
    assert run("count", "abc")[0] == 2


def test_enumerate():
    assert run("enumerate", "3") == (0, "++*\n+0*\n-0*\n0+*\n00*\n")


def test_orientations():
    assert run("orientations", "++0+0*") == (0, "6\n")
    code, out = run("orientations", "1010*", "--list")
    assert code == 0
    assert out.splitlines() == ["4", "+0+0*", "+0-0*", "-0+0*", "-0-0*"]


def test_parse_error_exit_code():
    assert run("build", "+*0")[0] == 3
    assert run("orientations", "+-0*")[0] == 3


def test_unknown_command():
    assert run("frobnicate")[0] == 2


def test_recognize_member(graph_files):
    code, out = run("recognize", graph_files["fig"])
    assert code == 0
    assert out.splitlines() == [
        "member: true",
        "sequence: +-0+*",
        "canonical: +-0+*",
        "top: 4",
        "independent: 0 2",
        "bottom: 1 3",
        "weights: 9 -14 5 -18 20",
        "threshold: 20",
    ]


def test_recognize_non_member(graph_files):
    assert run("recognize", graph_files["cycle"]) == (1, "member: false\n")


def test_recognize_parse_error(graph_files):
    assert run("recognize", graph_files["bad"])[0] == 3


def test_recognize_missing_file(tmp_path):
    assert run("recognize", str(tmp_path / "nope.txt"))[0] == 2


def test_iso(graph_files):
    code, out = run("iso", graph_files["swapped"], graph_files["plain"])
    assert code == 0
    assert out.endswith("isomorphic: true\n")
    code, out = run("iso", graph_files["swapped"], graph_files["fig"])
    assert code == 1
    code, out = run("iso", graph_files["cycle"], graph_files["cycle"])
    assert code == 1 and "non-member" in out


def test_selfcheck():
    code, out = run("selfcheck", "--max-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6 and all(line.startswith("PASS") for line in lines)


def test_sequence_starting_with_minus():
    assert run("canon", "-+0*") == run("canon", "--", "-+0*")
    code, out = run("build", "-+0*", "--out", "dot")
    assert code == 0 and out.count("->") == 5
