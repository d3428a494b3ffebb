"""Recompute every worked table and diff it against the shipped goldens.

    python3 scripts/reproduce_tables.py            # all cases
    python3 scripts/reproduce_tables.py 7.4 ex2    # a selection

Exits 1 if any case fails.
"""

import sys

from equibundle.tables import run_cases


def main(argv: list[str]) -> int:
    reports = run_cases(argv or None)
    for r in reports:
        print(f"{r.name:>5}  {r.status}")
        for line in r.mismatches + r.deviations:
            print(f"       {line}")
    return 1 if any(r.status == "FAIL" for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
