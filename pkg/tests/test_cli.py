import pytest

from narygroups.cli import run
from narygroups.hosszu import canonical_hg, canonical_ops, format_hg
from narygroups.polyadic import NaryOp, format_nop, ops_equal, parse_nop


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


@pytest.fixture
def example_pair(files):
    return (files("f1.hg", format_hg(canonical_hg(3, 4, "f", a=1))),
            files("f2.hg", format_hg(canonical_hg(3, 4, "f", a=2))))


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def sum3(files):
    return files("sum3.nop", format_nop(NaryOp.from_function(lambda x, y, z: (x + y + z) % 3, 3, 3)))


def test_verify_sum(capsys, files):
    code, out, _ = call(capsys, "verify", sum3(files))
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["arity 3 order 3 method full", "verdict true"]
    assert "commutative=1" in lines and "idempotent=0" in lines


def test_verify_failure_prints_witness(capsys, files):
    middle = files("mid.nop", format_nop(NaryOp.from_function(lambda x, y, z: y, 3, 2)))
    code, out, _ = call(capsys, "verify", middle)
    assert code == 1
    assert "verdict false" in out and "witness" in out
    for method in ("sokolov", "dornte"):
        code, out, _ = call(capsys, "verify", middle, "--method", method)
        assert code == 1 and "verdict false" in out


def test_verify_hg_input(capsys, example_pair):
    code, out, _ = call(capsys, "verify", example_pair[0], "--method", "sokolov")
    assert code == 0 and out.startswith("arity 4 order 3 method sokolov\nverdict true\n")


def test_example_iso(capsys, example_pair):
    code, out, _ = call(capsys, "iso", *example_pair)
    assert (code, out) == (0, "h: 0->0 1->2 2->1\n")
    code, out, _ = call(capsys, "iso", *example_pair, "--oracle")
    assert (code, out) == (0, "h: 0->0 1->2 2->1\noracle agree\n")


def test_iso_none(capsys, files, example_pair):
    f0 = files("f0.hg", format_hg(canonical_hg(3, 4, "f", a=0)))
    code, out, _ = call(capsys, "iso", f0, example_pair[0], "--oracle")
    assert (code, out) == (1, "none\noracle agree\n")


def test_enumerate_table_check(capsys):
    code, out, _ = call(capsys, "enumerate", "--k", "2", "--n", "3", "--table-check")
    assert code == 0
    assert "counts all=2 commutative=2 commutative_idempotent=1" in out.splitlines()
    assert out.rstrip().endswith("table k=2 l=2: match")


def test_enumerate_threads_byte_stable(capsys):
    _, a, _ = call(capsys, "enumerate", "--k", "6", "--n", "4")
    _, b, _ = call(capsys, "enumerate", "--k", "6", "--n", "4", "--threads", "4")
    _, c, _ = call(capsys, "enumerate", "--k", "6", "--n", "4")
    assert a == b == c


def test_enumerate_mismatch_exit(capsys):
    code, out, _ = call(capsys, "enumerate", "--k", "4", "--n", "5", "--table-check")
    assert code == 1
    assert out.count("mismatch k=4 l=4") == 2


def test_klein(capsys):
    code, out, _ = call(capsys, "klein", "--n", "13")
    assert code == 0
    assert out.splitlines()[-1] == "classes 5 l=12"


def test_construct_dense_round_trip(capsys, files, tmp_path, example_pair):
    dense = str(tmp_path / "f1.nop")
    code, out, _ = call(capsys, "construct", "--hg", example_pair[0], "--dense-out", dense)
    assert code == 0
    assert out.splitlines()[:2] == ["certified arity 4 order 3", "skew 0->2 1->0 2->1"]
    op = parse_nop(open(dense).read())
    assert ops_equal(op, canonical_ops(3, 4, "f", a=1).op)
    code, out, _ = call(capsys, "verify", dense)
    assert code == 0


def test_decompose_round_trip(capsys, files, example_pair):
    code, out, _ = call(capsys, "decompose", example_pair[0], "--at", "0")
    assert code == 0
    again = files("again.hg", out)
    code, out2, _ = call(capsys, "iso", example_pair[0], again)
    assert (code, out2) == (0, "h: 0->0 1->1 2->2\n")
    code, out, _ = call(capsys, "decompose", again, "--at", "2")
    assert code == 0 and out.startswith("arity 4\norder 3\ntable\n")


def test_decompose_k_ary(capsys, files):
    g = files("f5.hg", format_hg(canonical_hg(3, 5, "f", a=1)))
    code, out, _ = call(capsys, "decompose", g, "--at", "0", "--k-ary", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["arity 5", "retract_arity 3"]
    assert lines[4] == "retract"
    retract = files("r.nop", "\n".join(lines[5:]) + "\n")
    code, out, _ = call(capsys, "verify", retract)
    assert code == 0 and out.startswith("arity 3 order 3")


def test_retract_round_trip(capsys, files, example_pair):
    code, out, _ = call(capsys, "retract", example_pair[0], "--at", "0,0", "--arity", "2")
    assert code == 0
    assert out.startswith("arity 2\norder 3\nvalues\n")
    r = files("r.nop", out)
    code, out, _ = call(capsys, "verify", r)
    assert code == 0
    g = files("g5.hg", format_hg(canonical_hg(3, 5, "f", a=1)))
    code, out, _ = call(capsys, "retract", g, "--at", "1", "--arity", "3")
    assert code == 0 and out.startswith("arity 3\n")


def test_skew(capsys, example_pair):
    code, out, _ = call(capsys, "skew", example_pair[0], "--depth", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "skew 0->2 1->0 2->1"
    assert lines[2:] == ["iterated m=1 S=-1 ok", "iterated m=2 S=1 ok"]


def test_independence(capsys, files):
    z5 = files("z5.hg", format_hg(canonical_hg(5, 3, "f", a=0)))
    assert call(capsys, "independence", "--hg", z5, "--set", "1", "--family", "M")[:2] == (0, "M-independent true\n")
    code, out, _ = call(capsys, "independence", "--hg", z5, "--set", "1,2", "--family", "G")
    assert code == 1
    assert out.splitlines()[0] == "G-independent false"
    assert out.splitlines()[1].startswith("certificate h1=")
    code, out, _ = call(capsys, "independence", "--hg", z5, "--set", "0", "--family", "M")
    assert code == 1 and out.startswith("M-independent false")


def test_characterize(capsys, files, example_pair):
    code, out, _ = call(capsys, "characterize", sum3(files))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "group=1" and lines[-1] == "consistent=1"
    assert "form19=0" in lines
    code, out, _ = call(capsys, "characterize", example_pair[0])
    assert code == 0 and "form19=n/a" in out.splitlines()
    nongroup = files("proj.nop", format_nop(NaryOp.from_function(lambda x, y, z: x, 3, 2)))
    code, out, _ = call(capsys, "characterize", nongroup)
    assert code == 0 and out.startswith("group=0")


def test_errors_exit_two(capsys, files, tmp_path):
    code, _, err = call(capsys, "verify", str(tmp_path / "missing.nop"))
    assert code == 2 and err.startswith("error: ParseError")
    bad = files("bad.nop", "arity 3\norder 2\nvalues\n0 1\n")
    code, _, err = call(capsys, "verify", bad)
    assert code == 2 and "error:" in err
    assert call(capsys, "verify")[0] == 2
    assert call(capsys, "enumerate", "--k", "2", "--n", "3", "--bogus")[0] == 2
    assert call(capsys, "enumerate", "--k", "9", "--n", "3")[0] == 2
    assert call(capsys, "nosuch")[0] == 2
    z5 = files("z5.hg", format_hg(canonical_hg(5, 3, "f", a=0)))
    assert call(capsys, "independence", "--hg", z5, "--set", "1,1")[0] == 2
    code, _, err = call(capsys, "independence", "--hg", z5, "--set", "1,2,3", "--family", "M",
                        "--term-budget", "10")
    assert code == 2 and "BudgetExceeded" in err


def test_budget_flag_rejects_large_dense(capsys, example_pair, tmp_path):
    code, _, err = call(capsys, "construct", "--hg", example_pair[0], "--dense-out",
                        str(tmp_path / "x.nop"), "--dense-budget", "10")
    assert code == 2 and "error:" in err


def test_output_is_byte_stable(capsys, example_pair):
    first = [call(capsys, cmd, example_pair[0])[1] for cmd in ("skew", "characterize", "decompose")]
    second = [call(capsys, cmd, example_pair[0])[1] for cmd in ("skew", "characterize", "decompose")]
    assert first == second
