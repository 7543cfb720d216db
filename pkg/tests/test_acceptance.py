"""End-to-end acceptance gate.

Each test covers one numbered acceptance criterion, asserts exact
equality (no tolerances apply anywhere: all arithmetic is integral),
enforces the stated runtime budget, and prints a single PASS/FAIL line
(shown under pytest -s; the -v report carries the same per-criterion
verdict through the test names).
"""

import subprocess
import sys
import time

from quatheta.charoracle import irrep, weyl_dim
from quatheta.quaternionic import check_lemma_surjectivity
from quatheta.branchrules import restrict_e7_to_su2_spin12
from quatheta.rootdata import HalfInt, highest_root_coefficients
from quatheta.verify import run_suite


def _report(num, desc, ok, elapsed, budget=None):
    verdict = "PASS" if ok and (budget is None or elapsed < budget) else "FAIL"
    timing = f"{elapsed:.2f}s" + (f" < {budget:g}s" if budget else "")
    print(f"{verdict} criterion {num}: {desc} [{timing}]")
    assert ok, f"criterion {num}: {desc}"
    if budget is not None:
        assert elapsed < budget, \
            f"criterion {num} exceeded budget: {elapsed:.2f}s >= {budget}s"


def test_criterion_01_e6_highest_root_coefficients():
    t0 = time.perf_counter()
    ok = highest_root_coefficients("E6") == (1, 2, 2, 3, 2, 1)
    _report(1, "E6 highest-root expansion coefficients are (1,2,2,3,2,1)",
            ok, time.perf_counter() - t0, budget=1.0)


def test_criterion_02_appendix_branching_vs_oracle():
    t0 = time.perf_counter()
    lines, ok = run_suite("appendix-branching", max_entry=3)
    _report(2, "closed-form Sp/Spin branching equals the character oracle "
               "for all dominant weights with entries <= 3",
            ok, time.perf_counter() - t0, budget=60.0)


def test_criterion_03_f4_to_spin9():
    t0 = time.perf_counter()
    lines, ok = run_suite("f4-spin9")
    _report(3, "F4 -> Spin(9) closed form equals the oracle on five "
               "two-parameter weights and splits 26 as 1+9+16",
            ok, time.perf_counter() - t0, budget=300.0)


def test_criterion_04_infinitesimal_character_crosschecks():
    t0 = time.perf_counter()
    lines, ok = run_suite("infchar")
    _report(4, "lift parameter maps and stated infinitesimal characters "
               "agree after Weyl canonicalization for parameters <= 6",
            ok, time.perf_counter() - t0, budget=10.0)


def test_criterion_05_seesaw_truncation():
    t0 = time.perf_counter()
    lines, ok = run_suite("seesaw")
    _report(5, "see-saw multiplicity identity holds level-by-level up to "
               "outer label 16 for eight (b,d) pairs",
            ok, time.perf_counter() - t0, budget=120.0)


def test_criterion_06_surjectivity_rank():
    t0 = time.perf_counter()
    ok = all(
        check_lemma_surjectivity(n) == (3 * (n + 2), 3 * (n + 2), True)
        for n in range(2, 31)
    )
    ok = ok and not check_lemma_surjectivity(0)[2]
    ok = ok and not check_lemma_surjectivity(1)[2]
    _report(6, "pairing matrix has full rank 3(n+2) for 2 <= n <= 30 "
               "and drops rank for n in {0,1}",
            ok, time.perf_counter() - t0, budget=1.0)


def test_criterion_07_restriction_filtration():
    t0 = time.perf_counter()
    lines, ok = run_suite("filtration")
    _report(7, "restriction filtration of A(Spin(4,4),(0,b,a)[4+a+b]) "
               "matches the displayed sum exactly",
            ok, time.perf_counter() - t0)


def test_criterion_08_aq_tables():
    t0 = time.perf_counter()
    lines, ok = run_suite("aq")
    _report(8, "A_q(lambda) tables, restriction-segment maxima, and "
               "unitarity bullets reproduce at 20 instantiations per case",
            ok, time.perf_counter() - t0)


def test_criterion_09_e7_family_dimension_sums():
    t0 = time.perf_counter()
    want = {0: 1, 1: 56, 2: 1463, 3: 24320}
    ok = True
    for k in range(4):
        rows = restrict_e7_to_su2_spin12(k)
        total = sum((m + 1) * weyl_dim(irrep("D6", w)) for m, w in rows)
        hw = (0, 0, 0, 0, 0, k, HalfInt(-k), HalfInt(k))
        computed = weyl_dim(irrep("E7", hw))
        ok = ok and total == computed == want[k]
    _report(9, "SU(2) x Spin(12) family dimension sums equal the computed "
               "E7 dimensions 1, 56, 1463, 24320 for k <= 3",
            ok, time.perf_counter() - t0, budget=5.0)


def test_criterion_10_verify_all_is_deterministic():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "quatheta.cli", "verify", "--suite", "all"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    ok = (a.returncode == 0 and b.returncode == 0
          and a.stdout == b.stdout and len(a.stdout) > 0)
    _report(10, "verify --suite all twice produces byte-identical passing "
                "reports",
            ok, time.perf_counter() - t0)
