"""Sweep the structural claims over all abelian groups of small order.

Most of them hold.  Three do not, and the sweep shows where.
"""

from powerlab import theorems as th

verdicts = th.run_claims(th.THEOREM_IDS, 2, 48)
print(th.report_text(verdicts))

by_id = {v.theorem_id: v for v in verdicts}

# the subgroup dichotomy breaks in C2xC4: <(0,1)> and <(1,1)> share (0,2)
first = by_id["L2.1"].counterexamples[0]
print("dichotomy counterexample:", first["group"], first["witness"])

# kappa exceeds the count of order-2 elements in C2xC2xC5
for c in by_id["T-kappa-bound"].counterexamples:
    w = c["witness"]
    print(f"{c['group']:>14}: kappa {w['kappa']}, bound {w['bound']}")

# the center of P*(C2xC2xC9) is all of C9 minus 0, not just the order-3 part
for c in by_id["T-center-noncyclic"].counterexamples:
    print(c["group"], "center size", len(c["witness"]["center"]),
          "predicted", len(c["witness"]["predicted"]))

# every counterexample can be re-derived from its own record
assert all(th.recheck(v.theorem_id, c) for v in verdicts for c in v.counterexamples)
