import io
import subprocess
import sys
from pathlib import Path

import pytest

from linedigraph import formats
from linedigraph.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = main([str(a) for a in argv], out=out, err=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_gen_kplus():
    assert run("gen", "kplus", "--d", 2) == (0, "2 4\n0 0\n0 1\n1 0\n1 1\n", "")


def test_gen_matches_fixtures():
    assert run("gen", "debruijn", "--d", 2, "--k", 2)[1] == (FIXTURES / "debruijn_2_2.el").read_text()
    assert run("gen", "spiked", "--n", 2, "--spikes", 1)[1] == (FIXTURES / "spiked_2_1.el").read_text()


def test_gen_debruijn_dot_has_words():
    code, out, _ = run("gen", "debruijn", "--d", 2, "--k", 2, "--format", "dot")
    assert code == 0 and '3 [label="11"];' in out


def test_gen_random_deterministic():
    a = run("gen", "random", "--n", 10, "--d", 3, "--seed", 4)
    assert a == run("gen", "random", "--n", 10, "--d", 3, "--seed", 4)
    assert a[0] == 0 and a[1].startswith("10 30\n")


def test_gen_random_bad_degree():
    code, out, err = run("gen", "random", "--n", 2, "--d", 3, "--seed", 0)
    assert code == 1 and out == "" and "error" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "kplus", "--d", 3],
        ["gen", "debruijn", "--d", 3, "--k", 2],
        ["gen", "spiked", "--n", 4, "--spikes", 2],
        ["gen", "random", "--n", 12, "--d", 3, "--seed", 9],
    ],
)
def test_gen_export_edgelist_round_trip(argv):
    code, text, _ = run(*argv)
    assert code == 0
    assert run("export", "-", "--format", "edgelist", stdin=text) == (0, text, "")


def test_export_formats():
    code, out, _ = run("export", FIXTURES / "kplus3.mm", "--format", "edgelist")
    assert code == 0 and out == run("gen", "kplus", "--d", 3)[1]
    code, out, _ = run("export", FIXTURES / "cycle3.el", "--format", "mm")
    assert out == formats.MM_HEADER + "\n3 3 3\n1 2 1\n2 3 1\n3 1 1\n"
    code, out, _ = run("export", FIXTURES / "cycle3.el", "--format", "dot")
    assert out == "digraph {\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n"
    code, out, _ = run("export", FIXTURES / "cycle3.el", "--input-format", "edgelist", "--format", "edgelist")
    assert out == (FIXTURES / "cycle3.el").read_text()


def test_export_rejects_dot_input():
    code, out, err = run("export", FIXTURES / "cycle.dot", "--format", "edgelist")
    assert code == 1 and "DOT" in err


def test_factorize():
    code, out, _ = run("factorize", FIXTURES / "kplus2.el")
    assert code == 0
    f = formats.read_factorization(out)
    assert f.d == 2 and f.n == 2
    code, out, err = run("factorize", FIXTURES / "path2.el")
    assert code == 1 and "not regular" in err


def test_line():
    code, out, _ = run("line", FIXTURES / "cycle3.el")
    assert out == "3 3\n0 1\n1 2\n2 0\n"
    code, out, _ = run("line", FIXTURES / "kplus2.el", "--canonical")
    assert out == "4 8\n0 0\n0 3\n1 1\n1 2\n2 0\n2 3\n3 1\n3 2\n"
    code, out, _ = run("line", FIXTURES / "kplus2.el", "--iterate", 2)
    assert out.startswith("8 16\n")
    code, out, err = run("line", FIXTURES / "arcless3.el")
    assert code == 1 and "empty arc set" in err
    code, out, err = run("line", FIXTURES / "path2.el", "--canonical")
    assert code == 1


def test_line_missing_file():
    code, out, err = run("line", "missing.txt")
    assert code == 1 and "missing.txt" in err and out == ""


def test_verify_theorem_seeded():
    assert run("verify", "theorem", "--n", 20, "--d", 4, "--seed", 7) == (0, "CLAIM theorem RESULT equal\n", "")


def test_verify_on_files():
    for name in ["kplus2.el", "cycle3.el", "loop.el", "debruijn_2_2.el", "kplus3.mm", "two_blocks.el"]:
        for claim in ["theorem", "decomposition"]:
            code, out, _ = run("verify", claim, FIXTURES / name)
            assert code == 0 and out == f"CLAIM {claim} RESULT equal\n", (name, claim)
    code, out, err = run("verify", "theorem", FIXTURES / "spiked_2_1.el")
    assert code == 1 and out == "" and "not regular" in err


def test_verify_other_claims():
    code, out, _ = run("verify", "lemma2")
    assert code == 0 and out.count("CLAIM lemma2 RESULT equal") == 40
    assert run("verify", "fya", "--d", 3, "--k", 3)[1] == "CLAIM fya RESULT equal\n"
    code, out, _ = run("verify", "remark", "--d", 4)
    assert out == "CLAIM remark[circulant] RESULT equal\nCLAIM remark[matching] RESULT equal\n"
    code, out, _ = run("verify", "decomposition", "--n", 12, "--d", 3, "--seed", 1, "--count", 3)
    assert code == 0 and out.count("equal") == 3
    code, out, _ = run("verify", "theorem", "--d", 3, "--k", 2, "-v")
    assert code == 1


def test_verify_verbose():
    code, out, _ = run("verify", "fya", "--d", 2, "--k", 2, "--verbose")
    assert "result:   equal" in out and out.endswith("CLAIM fya RESULT equal\n")


def test_exit_status_follows_claims(monkeypatch):
    from linedigraph import cli
    from linedigraph.line import VerificationReport
    from linedigraph.matrix import identity, zeros

    monkeypatch.setattr(
        cli,
        "_verify_reports",
        lambda args: [VerificationReport("a", identity(2), identity(2)), VerificationReport("b", identity(2), zeros(2))],
    )
    code, out, _ = run("verify", "fya", "--d", 2, "--k", 2)
    assert code == 1
    assert out == "CLAIM a RESULT equal\nCLAIM b RESULT mismatch AT 0 0\n"


@pytest.mark.parametrize(
    "argv", [["bogus"], ["gen"], ["gen", "kplus"], ["export", "x.el", "--format", "png"], ["verify", "nothing"]]
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "linedigraph.cli", "gen", "kplus", "--d", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1 1\n0 0\n"
