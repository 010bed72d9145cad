"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py``.

Two literal claims are false on concrete groups (the center description for
non-cyclic groups and the kappa upper bound).  Their tests assert the claim
as stated and are marked strict xfail, so the gate prints FAIL for them
while the suite stays green; companion tests check that the refutations are
reported with re-verifiable witnesses.
"""

from __future__ import annotations

import subprocess
import sys
import time

import pytest

from powerlab import theorems as th
from powerlab.connectivity import vertex_connectivity, vertex_connectivity_oracle
from powerlab.groups import abelian_groups_in_range, cyclic_group, euler_phi, p_group_prime, parse_group
from powerlab.planarity import K5, is_planar, validate_witness
from powerlab.powergraph import power_graph

RESULTS: list[str] = []


def record(criterion: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"criterion {criterion}: {'PASS' if ok else 'FAIL'}  {detail}")


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def test_1_connectivity_iff():
    with Timer() as t:
        v = th.check_connectivity_iff_range(2, 64)
    ok = v.status == th.HOLDS and t.seconds < 10
    record("1", ok, f"connectivity iff over {v.groups_checked} groups of order 2..64, "
                    f"{len(v.counterexamples)} exceptions, {t.seconds:.2f}s (limit 10s)")
    assert v.groups_checked == len(abelian_groups_in_range(2, 64))
    assert ok


def test_2_diameter_bound():
    with Timer() as t:
        v = th.run_claim("T-diam4", 2, 64)
    ok = v.status == th.HOLDS and v.notes["max_diameter"] <= 4 and t.seconds < 30
    record("2", ok, f"diameter <= 4 on {v.groups_checked} connected graphs, max "
                    f"{v.notes['max_diameter']} ({', '.join(v.notes['attained_by'][:3])}, ...), "
                    f"{t.seconds:.2f}s (limit 30s)")
    assert ok


def test_3_kappa_cyclic():
    with Timer() as t:
        v = th.run_claim("T-kappa-cyclic", 3, 100)
        mismatches = []
        for n in range(3, 21):
            g = power_graph(cyclic_group(n))
            if vertex_connectivity(g) != vertex_connectivity_oracle(g):
                mismatches.append(n)
    ok = v.status == th.HOLDS and not v.skipped and not mismatches and t.seconds < 120
    record("3", ok, f"kappa cases {v.notes['cases']} for n <= 100, oracle agreement n <= 20 "
                    f"({len(mismatches)} mismatches), {t.seconds:.2f}s (limit 120s)")
    assert ok


def test_4a_center_cyclic():
    v = th.run_claim("T-center-cyclic", 2, 100)
    composite = [G for G in th.family_groups("T-center-cyclic", 2, 100) if th.cyclic_case(G.order) != "prime-power"]
    sizes_ok = all(th.check_center_cyclic(G).info["center_size"] == euler_phi(G.order) for G in composite)
    ok = v.status == th.HOLDS and sizes_ok
    record("4a", ok, f"center of P*(C_n) complete for n <= 100; equals the phi(n) generators "
                     f"for all {len(composite)} non-prime-power n")
    assert ok


@pytest.mark.xfail(strict=True, reason="center differs from P*(Z) on C2xC2xC9 and C4xC3xC3")
def test_4b_center_noncyclic_literal():
    v = th.run_claim("T-center-noncyclic", 2, 64)
    cex = "; ".join(f"{c['group']}: center {c['witness']['center']} vs predicted "
                    f"{c['witness']['predicted']}" for c in v.counterexamples)
    record("4b", v.status == th.HOLDS,
           f"center = P*(Z) on {v.groups_checked} non-cyclic non-p-groups <= 64"
           + (f"; refuted by {cex}" if cex else ""))
    assert v.status == th.HOLDS


def test_4b_mismatches_reported_verbatim():
    v = th.run_claim("T-center-noncyclic", 2, 64)
    ok = bool(v.counterexamples) and all(
        {"center", "predicted"} <= set(c["witness"]) and th.recheck(v.theorem_id, c)
        for c in v.counterexamples)
    record("4b-report", ok, f"{len(v.counterexamples)} mismatches reported with both vertex "
                            f"sets and re-verified; {len(v.skipped)} groups out of scope")
    assert ok


def test_5_planarity_thresholds():
    with Timer() as t:
        cyc = th.check_planarity_family("cyclic", 2, 50)
        exp_p = th.run_claims(["T-planar-exp-p"], 2, 11**3,
                              where=lambda G: p_group_prime(G) in {2, 3, 5, 7, 11}
                              and len(G.factors) <= 3)[0]
        c77 = power_graph("7,7")
        r = is_planar(c77)
        validate_witness(c77, r.witness)
        mixed = th.run_claims(["T-planar-23"], 2, 162,
                              where=lambda G: len(G.factors) <= 5)[0]
    mixed_groups = set(mixed.notes["planar"])
    wanted = {parse_group(s).name for s in
              ["3,2", "3,2,2", "3,2,2,2", "3,2,2,2,2", "2,3", "2,3,3", "2,3,3,3", "2,3,3,3,3"]}
    ok = (cyc.status == exp_p.status == mixed.status == th.HOLDS and exp_p.groups_checked == 15
          and not r.planar and r.witness.kind == K5 and wanted <= mixed_groups
          and t.seconds < 60)
    record("5", ok, f"cyclic n <= 50, exponent-p ({exp_p.groups_checked} groups up to C11^3), "
                    f"C7xC7 {r.witness.kind} witness valid, mixed-23 k <= 4 "
                    f"({len(mixed_groups)} groups), {t.seconds:.2f}s (limit 60s)")
    assert ok


def test_6_adjacency_and_dichotomy_audits():
    l22 = th.run_claim("L2.2", 2, 64)
    l23 = th.run_claim("L2.3", 2, 200)
    l21 = th.audit_subgroup_dichotomy(2, 16)
    c2c4 = next((c for c in l21.counterexamples if c["group"] == "C2xC4"), None)
    ok = (l22.status == th.HOLDS and l23.status == th.HOLDS and l23.groups_checked == 199
          and l21.status == th.FAILS and c2c4 is not None
          and c2c4["witness"]["order"] == 4 and c2c4["witness"]["shared"] == [0, 2])
    record("6", ok, f"L2.2 holds <= 64, L2.3 holds on {l23.groups_checked} cyclic groups "
                    f"<= 200 (fast path edge-identical), L2.1 fails in "
                    f"{len(l21.counterexamples)} groups <= 16 incl. C2xC4 {c2c4 and c2c4['witness']}")
    assert ok


@pytest.mark.xfail(strict=True, reason="kappa exceeds the order-p count, e.g. 4 > 3 on C2xC2xC5")
def test_7_kappa_bound_literal():
    v = th.run_claim("T-kappa-bound", 2, 40)
    cex = ", ".join(f"{c['group']} (kappa {c['witness']['kappa']} > {c['witness']['bound']})"
                    for c in v.counterexamples)
    record("7", v.status == th.HOLDS,
           f"kappa <= #order-p elements on {v.groups_checked} groups <= 40"
           + (f"; refuted by {cex}" if cex else ""))
    assert v.status == th.HOLDS


def test_7_outcome_reported():
    v = th.run_claim("T-kappa-bound", 2, 40)
    ok = v.report_only and all(th.recheck(v.theorem_id, c) for c in v.counterexamples) \
        and len(v.notes["instances"]) == v.groups_checked
    record("7-report", ok, f"{len(v.counterexamples)} violations recorded and re-verified; "
                           f"complement reading holds: {v.notes['complement_reading_holds']}")
    assert ok


def test_8_oracle_equivalence():
    v = th.run_claim(th.ORACLE_ID, 2, 64)
    ok = v.status == th.HOLDS
    record("8", ok, f"exact vs oracle: {v.notes['kappa_compared']} kappa and "
                    f"{v.notes['planarity_compared']} planarity comparisons, "
                    f"{len(v.counterexamples)} disagreements")
    assert ok


def test_9_determinism(tmp_path):
    reports = []
    for run in ("a", "b"):
        out = tmp_path / run
        subprocess.run([sys.executable, "-m", "powerlab.cli", "verify", "--max-order", "64",
                        "--theorems", "all", "--parallelism", "8", "--output-dir", str(out)],
                       check=True, capture_output=True)
        reports.append((out / "report.json").read_bytes())
    ok = reports[0] == reports[1]
    record("9", ok, f"two parallel verify runs, reports of {len(reports[0])} bytes "
                    f"{'identical' if ok else 'differ'}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
