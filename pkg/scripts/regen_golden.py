"""Regenerate the CLI golden records under tests/golden/.

Run from the repository root after an intentional output change, then review
the diff before committing:  python3 scripts/regen_golden.py
"""

import contextlib
import io
import json
from pathlib import Path

from egyptian.cli import main

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue()


def regenerate():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case in cases:
        code, stdout = run(case["argv"])
        record = {"argv": case["argv"], "exit": code, "stdout": stdout}
        path = GOLDEN / f"{case['name']}.json"
        path.write_text(json.dumps(record, indent=1) + "\n")
        print(f"{case['name']}: exit {code}")


if __name__ == "__main__":
    import os

    os.chdir(ROOT)
    regenerate()
