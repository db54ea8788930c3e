#!/usr/bin/env python3
"""Run every verification suite for a range of n, print the claim
summary, and leave the JSON report next to it; exits nonzero if
anything fails.

Usage: python scripts/verify_all.py [n_list] [seed] [report.json]
       python scripts/verify_all.py 2,3 0 report.json
"""

import sys

from hopfadjoint.cli import cli_main


def main() -> int:
    ns = sys.argv[1] if len(sys.argv) > 1 else "2,3"
    seed = sys.argv[2] if len(sys.argv) > 2 else "0"
    out = sys.argv[3] if len(sys.argv) > 3 else "verification_report.json"
    rc = cli_main(["verify", "--suite", "all", "--n", ns, "--seed", seed, "--out", out])
    print(f"report written to {out}")
    return rc


if __name__ == "__main__":
    raise SystemExit(main())
