import subprocess
import sys
from pathlib import Path

import pytest

from mfw.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "mfw.cli", *args], capture_output=True, text=True, cwd=cwd)


def test_run_json_is_byte_identical_across_jobs():
    a = run("run", str(FIXTURES / "a1.mfw"))
    b = run("run", str(FIXTURES / "a1.mfw"), "--jobs", "3")
    c = run("run", str(FIXTURES / "a1.mfw"))
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout == c.stdout
    assert a.stdout.startswith("[\n")


def test_exit_codes(tmp_path, capsys):
    assert main(["check", str(FIXTURES / "a1.mfw")]) == 0
    bad_syntax = tmp_path / "syntax.mfw"
    bad_syntax.write_text("ring R { x:1 ;\n")
    assert main(["run", str(bad_syntax)]) == 1
    assert "line 1, column 14" in capsys.readouterr().err
    invalid = tmp_path / "invalid.mfw"
    invalid.write_text("ring R { x:1 };\nmf E over (R, x^2) { phi=[[x]]; psi=[[x^2]]; }\n")
    assert main(["check", str(invalid)]) == 2
    failing = tmp_path / "fail.mfw"
    failing.write_text("ring R { x:1 };\nmf E over (R, x^2) { phi=[[x]]; psi=[[x]]; }\n"
                       "query verify-serre E E delta 1;\n")
    assert main(["run", str(failing), "--format", "text"]) == 3
    assert "FAIL" in capsys.readouterr().out
    assert main(["run", str(tmp_path / "missing.mfw")]) == 1
    with pytest.raises(SystemExit) as info:
        main(["run"])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["run", str(failing), "--field", "GF:4"])
    assert info.value.code == 1


def test_empty_program_exits_zero(tmp_path):
    empty = tmp_path / "empty.mfw"
    empty.write_text("# nothing\n")
    out = run("run", str(empty))
    assert out.returncode == 0 and out.stdout == "[]\n"


def test_corpus_command(tmp_path, capsys):
    assert main(["corpus", "A3", "--c", "2"]) == 0
    text = capsys.readouterr().out
    assert "section S = R + w:2 with f = x^4, g = w;" in text
    path = tmp_path / "a3.mfw"
    path.write_text(text)
    assert main(["check", str(path)]) == 0
    assert main(["corpus", "A3", "--c", "3"]) == 1
    assert main(["corpus", "B3", "--c", "2"]) == 1


def test_field_override_and_formats(capsys):
    assert main(["run", str(FIXTURES / "a1.mfw"), "--field", "GF:32003", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "query,kind,key,value"
    assert "1,verify-theorem,result.pass,true" in out
