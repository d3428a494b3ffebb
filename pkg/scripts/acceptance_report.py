"""Print one PASS/FAIL line per acceptance criterion (same checks as the test suite)."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import test_acceptance  # noqa: E402

if __name__ == "__main__":
    lines = [test_acceptance.format_line(k, *test_acceptance.CRITERIA[k]()) for k in sorted(test_acceptance.CRITERIA)]
    print("\n".join(lines))
    sys.exit(0 if all(": PASS" in line for line in lines) else 1)
