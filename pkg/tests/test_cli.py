import subprocess
import sys

import pytest

from barlang.barnfa import compile_rbe, dumps_nfa, loads_nfa, relabel
from barlang.cli import main
from barlang.inclusion import inclusion
from support import ABA_RA, XX_FSUBA, swap_loop


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for key, expr in {"mixed": "(a + |a)*", "fresh": "|a*"}.items():
        p = tmp_path / f"{key}.nfa"
        p.write_text(dumps_nfa(compile_rbe(expr)))
        paths[key] = str(p)
    p = tmp_path / "loop.nfa"
    p.write_text(dumps_nfa(swap_loop()))
    paths["loop"] = str(p)
    return paths


def test_canon(capsys):
    assert run(capsys, "canon", "|a |b") == (0, "|a |a\n", "")
    assert run(capsys, "canon", "a", "b", "|c", "c", "b")[1] == "a b |a a b\n"


def test_member(capsys):
    code, out, _ = run(capsys, "member", "--expr", "--semantics", "local", "|a (c + d d)", "b", "b", "b")
    assert (code, out) == (1, "no\n")
    code, out, _ = run(capsys, "member", "--expr", "--semantics", "local", "|a (c + d d)", "e d d")
    assert (code, out) == (0, "yes\n")
    assert run(capsys, "member", "--expr", "--semantics", "bar", "|a a", "|b b")[0] == 0
    assert run(capsys, "member", "--expr", "--semantics", "literal", "|a a", "|b b")[0] == 1


def test_include_and_exit_codes(capsys, files):
    code, out, _ = run(capsys, "include", "--semantics", "local", files["mixed"], files["fresh"])
    assert (code, out) == (0, "included\n")
    code, out, _ = run(capsys, "include", "--semantics", "bar", files["mixed"], files["fresh"])
    assert code == 1 and out == "not included\nwitness: a\n"
    code, out, err = run(capsys, "include", "--semantics", "global", files["mixed"], files["fresh"])
    assert code == 1 and "warning" in err


def test_witness_pipes_back_into_member(capsys, files):
    _, out, _ = run(capsys, "include", "--expr", "--semantics", "local", "|a |b", "|a |b a")
    witness = out.splitlines()[1].split(": ", 1)[1].split()
    assert run(capsys, "member", "--expr", "--semantics", "local", "|a |b", *witness)[0] == 0
    assert run(capsys, "member", "--expr", "--semantics", "local", "|a |b a", *witness)[0] == 1


def test_cli_agrees_with_library(capsys, files):
    A1, A2 = loads_nfa(open(files["loop"]).read()), loads_nfa(open(files["fresh"]).read())
    for sem in ("bar", "local"):
        lib = inclusion(A1, A2, sem)
        code, out, _ = run(capsys, "include", "--semantics", sem, files["loop"], files["fresh"])
        assert code == (0 if lib.included else 1)
        if not lib.included:
            assert out.splitlines()[1] == f"witness: {lib.witness_text()}"


def test_equiv(capsys, files):
    code, out, _ = run(capsys, "equiv", "--semantics", "local", files["mixed"], files["fresh"])
    assert code == 0 and out.startswith("equal\n")
    code, out, _ = run(capsys, "equiv", files["mixed"], files["fresh"])
    assert code == 1 and out.startswith("not equal\n")
    assert "A2 <= A1: included" in out


def test_budget_exit_code(capsys, files, monkeypatch):
    assert run(capsys, "include", "--budget", "1", files["mixed"], files["mixed"])[0] == 3
    monkeypatch.setenv("BARLANG_BUDGET", "1")
    assert run(capsys, "include", files["mixed"], files["mixed"])[0] == 3
    monkeypatch.setenv("BARLANG_BUDGET", "-4")
    assert run(capsys, "include", files["mixed"], files["mixed"])[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "member", "--expr", "(a", "a")[0] == 2
    assert run(capsys, "include", str(tmp_path / "missing"), str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "canon", "|1")[0] == 2
    assert run(capsys, "compile")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_compile_round_trip(capsys, tmp_path):
    out = tmp_path / "ex.nfa"
    assert run(capsys, "compile", "--expr", "(|b a . |a b)* (1 + |b a)", "-o", str(out))[0] == 0
    assert relabel(loads_nfa(out.read_text())) == relabel(compile_rbe("(|b a . |a b)* (1 + |b a)"))
    src = tmp_path / "ex.rbe"
    src.write_text("|a*\n")
    code, text, _ = run(capsys, "compile", str(src))
    assert code == 0 and loads_nfa(text) == loads_nfa(dumps_nfa(compile_rbe("|a*")))


def test_sample(capsys):
    code, out, _ = run(capsys, "sample", "--expr", "--semantics", "bar", "--max-len", "2", "|a |b")
    assert out == "|a |a\n"
    _, out, _ = run(capsys, "sample", "--expr", "--semantics", "literal", "--max-len", "2", "|a* + 1")
    assert out.splitlines() == ["(empty)", "|a", "|a |a"]
    _, out, _ = run(capsys, "sample", "--expr", "--semantics", "global", "--max-len", "2", "|a*")
    assert out.splitlines() == ["(empty)", "b", "b c"]
    _, out, _ = run(capsys, "sample", "--expr", "--semantics", "local", "--max-len", "3", "|a |b a")
    # one word per orbit under renamings that fix the automaton's names a and b
    assert out.splitlines() == ["a b a", "a c a", "b a b", "b c b", "c a c", "c b c", "c d c"]


def test_convert(capsys, tmp_path):
    fs, ra = tmp_path / "xx.fsuba", tmp_path / "aba.fra"
    fs.write_text(XX_FSUBA)
    ra.write_text(ABA_RA)
    out = tmp_path / "aba.nfa"
    assert run(capsys, "convert", "--from", "fra", str(ra), "-o", str(out))[0] == 0
    assert run(capsys, "member", "--semantics", "local", str(out), "b c b")[0] == 0
    assert run(capsys, "member", "--semantics", "local", str(out), "b b b")[0] == 1
    code, text, _ = run(capsys, "convert", "--from", "fsuba", str(fs))
    assert code == 0 and "trans:" in text
    assert run(capsys, "convert", "--from", "fsuba", str(ra))[0] == 2


def test_dot(capsys, files):
    code, out, _ = run(capsys, "dot", files["loop"])
    assert code == 0 and out.startswith("digraph") and "doublecircle" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "barlang.cli", "canon", "|a |b"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "|a |a\n"
