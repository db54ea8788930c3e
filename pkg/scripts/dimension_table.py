#!/usr/bin/env python3
"""Print the solution-space dimension grid over (n, d, xi) for both
condition sets, together with connectedness and the plain-commutativity
flag.  Everything is exact; expect a few minutes if n = 4 is included.

Usage: python scripts/dimension_table.py [max_n]
"""

import sys
import time

from hopfadjoint import (
    comodule_algebra_K,
    connectedness,
    problem_for,
    solve_adjoint,
    taft_model,
    verify_braided_commutative,
)


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    print(f"{'n':>2} {'d':>2} {'xi':>3} {'conditions':<14} {'dim':>4} "
          f"{'conn':>4} {'plain':>6} {'secs':>7}")
    for n in range(1, max_n + 1):
        model = taft_model(n)
        for d in (d for d in range(1, n + 1) if n % d == 0):
            for xi in (0, 1):
                k = comodule_algebra_K(n, d, xi)
                for conds, label in (({"ad1", "ad3"}, "module"),
                                     ({"ad1", "ad2", "ad3"}, "fully-constr")):
                    t0 = time.perf_counter()
                    alg = solve_adjoint(problem_for(model, k, conds))
                    secs = time.perf_counter() - t0
                    rep = verify_braided_commutative(alg)
                    assert rep.ok, (n, d, xi, label)
                    plain = [c for c in rep.claims if "plain" in c.claim_id][0]
                    print(f"{n:>2} {d:>2} {xi:>3} {label:<14} {alg.dim:>4} "
                          f"{connectedness(alg):>4} "
                          f"{str(plain.witness['plain_commutative']):>6} {secs:>7.2f}")


if __name__ == "__main__":
    main()
