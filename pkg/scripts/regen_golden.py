#!/usr/bin/env python3
"""Regenerate the golden JSON files for every CLI demo.

Run from the repository root after an intentional output change:

    python3 scripts/regen_golden.py
"""

import io
import json
import pathlib
import sys
from contextlib import redirect_stdout

from featherline import cli

GOLDEN_DIR = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = [(name, ["demo", name, "--format", "json"])
         for name in cli.DEMOS if name != "theorem2"]
CASES += [("theorem2-%s" % space,
           ["demo", "theorem2", "--space", space, "--format", "json"])
          for space in ("line", "doubled", "feather")]


def main():
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES:
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(argv)
        text = buf.getvalue()
        json.loads(text)  # sanity: demo output must be valid JSON
        path = GOLDEN_DIR / ("%s.json" % name)
        path.write_text(text)
        print("wrote %s (exit %d)" % (path.relative_to(GOLDEN_DIR.parent.parent), code))


if __name__ == "__main__":
    sys.exit(main())
