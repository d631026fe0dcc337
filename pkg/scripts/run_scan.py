#!/usr/bin/env python3
"""Run the desk-scale conjecture scan over the built-in catalog.

Equivalent to `groupzagreb scan --max-order 512`; pass a different bound
or any other scan flag on the command line, e.g.

    python scripts/run_scan.py --max-order 1000 --jobs 8 --format json
"""

import sys

from groupzagreb.cli import main

if __name__ == "__main__":
    args = sys.argv[1:]
    if "--max-order" not in args:
        args = ["--max-order", "512"] + args
    raise SystemExit(main(["scan"] + args))
