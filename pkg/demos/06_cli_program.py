"""
Driving the command-line front end
==================================

Generate the program of a corpus family, run it through ``mfw run`` and
read the JSON back.  The same program is parsed and pretty-printed to show
that formatting round-trips.
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

from mfw.dsl import format_program, parse_program

text = subprocess.run([sys.executable, "-m", "mfw", "corpus", "A2", "--c", "3"],
                      capture_output=True, text=True, check=True).stdout
print(text)

program = parse_program(text)
print("round-trips:", parse_program(format_program(program)) == program)

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "a2.mfw"
    path.write_text(text)
    run = subprocess.run([sys.executable, "-m", "mfw", "run", str(path), "--jobs", "2"],
                         capture_output=True, text=True)

print("exit code:", run.returncode)
for rec in json.loads(run.stdout):
    res = rec["result"]
    summary = res.get("pass", res) if isinstance(res, dict) else res
    print(f"{rec['kind']:15s} {str(summary)[:70]}")
