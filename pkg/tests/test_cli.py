import subprocess
import sys

import pytest

from gsbasis import is_closed, parse_basis
from gsbasis.cli import EXIT, main


@pytest.fixture(scope="module")
def bases(tmp_path_factory):
    d = tmp_path_factory.mktemp("bases")
    paths = {}
    for name in ("H2", "H3", "H4"):
        path = d / f"{name.lower()}.basis"
        assert main(["complete", "--preset", name, "--out", str(path)]) == 0
        paths[name] = str(path)
    return paths


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def test_complete_round_trip(bases):
    for path in bases.values():
        with open(path) as fh:
            assert is_closed(parse_basis(fh.read()))[0]


def test_complete_h2_summary(capsys, tmp_path):
    status, out = run(capsys, "complete", "--preset", "H2", "--out", str(tmp_path / "b"))
    assert status == 0
    assert "rules: 3" in out and "rules added: 0" in out


def test_complete_truncated(capsys, tmp_path):
    status, out = run(capsys, "complete", "--preset", "H4", "--max-length", "8",
                      "--out", str(tmp_path / "b"))
    assert status == EXIT["truncated"]
    assert "truncated" in out


def test_nf(capsys, bases):
    assert run(capsys, "nf", "--basis", bases["H3"], "--word", "s3 s2 s1 s3") == \
        (0, "s2 s3 s2 s1\n")
    assert run(capsys, "nf", "--basis", bases["H2"], "--word", "s1*s1") == (0, "1\n")


def test_nf_worked_example(capsys, bases):
    x = "s4 s3 s2 s1 s2 s1 s3 s2 s1 s2 s3 "
    status, out = run(capsys, "nf", "--basis", bases["H4"], "--word", x * 4 + "s4 s2")
    assert out == "s2 " + x * 4 + "s4\n"


def test_count_cosets_longest(capsys, bases):
    assert run(capsys, "count", "--basis", bases["H4"]) == (0, "14400\n")
    assert run(capsys, "cosets", "--basis", bases["H4"]) == (0, "10 12 120\n")
    status, out = run(capsys, "longest", "--basis", bases["H3"])
    assert len(out.split()) == 15


def test_enumerate_and_table(capsys, bases, tmp_path):
    status, out = run(capsys, "enumerate", "--basis", bases["H2"])
    assert out.splitlines()[:4] == ["1", "s1", "s2", "s1 s2"]
    out_path = tmp_path / "t.txt"
    assert main(["table", "--basis", bases["H3"], "--out", str(out_path)]) == 0
    assert out_path.read_text().startswith("count 120\n")


def test_multiply(capsys, bases):
    assert run(capsys, "multiply", "--basis", bases["H3"], "--left", "s3 s2",
               "--right", "s3") == (0, "s2 s3 s2\n")


def test_verify_h3(capsys, bases):
    status, out = run(capsys, "verify", "--preset", "H3", "--basis", bases["H3"])
    assert status == 0
    assert "FAIL" not in out and "order 120" in out


def test_verify_fails_on_wrong_basis(capsys, tmp_path):
    path = tmp_path / "bad.basis"
    path.write_text("generators: s1 s2\ns1 s1 -> 1\ns2 s2 -> 1\ns2 s1 s2 -> s1 s2 s1\n")
    status, out = run(capsys, "verify", "--preset", "H2", "--basis", str(path))
    assert status == EXIT["verify_failed"]
    assert "FAIL" in out


def test_parse_error_status(capsys, tmp_path):
    path = tmp_path / "bad.basis"
    path.write_text("generators: s1\ns1 s1 -> s9\n")
    assert main(["count", "--basis", str(path)]) == EXIT["parse_error"]
    assert "line 2" in capsys.readouterr().err


def test_infinite_status(capsys, tmp_path):
    path = tmp_path / "free.basis"
    path.write_text("generators: s1 s2\ns1 s1 -> 1\ns2 s2 -> 1\n")
    assert run(capsys, "count", "--basis", str(path)) == (0, "infinite\n")
    assert main(["longest", "--basis", str(path)]) == EXIT["infinite"]


def test_presentation_file(capsys, tmp_path):
    path = tmp_path / "h3.pres"
    path.write_text("rank: 3\nm: 1 2 5\nm: 2 3 3\n")
    assert run(capsys, "count", "--presentation", str(path)) == (0, "120\n")


def test_source_required(capsys):
    assert main(["count"]) == EXIT["usage"]


def test_module_entry_point(bases):
    proc = subprocess.run([sys.executable, "-m", "gsbasis", "count", "--basis", bases["H2"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "10\n"
