"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Stated runtime budgets are asserted. Spot values were derived through the
brute-force oracle before being frozen here; the tests assert the main path
against the oracle first and the frozen constant second.
"""

import json
import math
import time

from aslkit.catalog import catalog, transitive_catalog
from aslkit.cli import run
from aslkit.core import conjugacy_classes, direct_product
from aslkit.families import (
    alternating_group,
    dihedral_group,
    quaternion_group,
    symmetric_group,
)
from aslkit.matgroups import sl_group
from aslkit.oracle import oracle_length
from aslkit.series import abelian_simple_length
from aslkit.verify import run_suite


def _report(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    print(line)
    assert ok, line


def _suite_ok(name, **kw):
    res = run_suite(name, **kw)
    failures = [c for c in res.cases if not c.ok]
    return res, failures


def test_criterion_01_length_bound():
    """l(G) <= log2|G| on the full catalog of order <= 200, within 60 s."""
    t0 = time.monotonic()
    cat = catalog(200)
    bad = []
    for name, g in cat:
        lng = abelian_simple_length(g)
        bound = math.log2(g.order) if g.order > 1 else 0
        if lng > bound + 1e-9:
            bad.append(name)
    elapsed = time.monotonic() - t0
    _report(1, not bad and elapsed < 60,
            f"{len(cat)} groups, {elapsed:.1f}s, violations: {bad}")


def test_criterion_02_oracle_agreement():
    """Main path equals the oracle on <= 100-order, <= 16-class groups,
    within 120 s."""
    t0 = time.monotonic()
    res, failures = _suite_ok("oracle-agreement", max_order=100)
    elapsed = time.monotonic() - t0
    _report(2, not failures and elapsed < 120,
            f"{len(res.cases)} groups, {elapsed:.1f}s, "
            f"failures: {[c.id for c in failures]}")


def test_criterion_03_structural_laws():
    """Image, containment, extension, fiber, and family laws at order <= 48."""
    all_fail = []
    counts = {}
    for suite in ("quotient-law", "normal-law", "extension-law", "fiber-law"):
        res, failures = _suite_ok(suite, max_order=48)
        counts[suite] = len(res.cases)
        all_fail.extend(f"{suite}:{c.id}" for c in failures)
    from aslkit.verify import fiber_triples
    fiber_count = len(fiber_triples())
    _report(3, not all_fail and fiber_count == 20,
            f"cases {counts}, fiber triples {fiber_count}, "
            f"failures: {all_fail}")


SPOT_VALUES = {
    # frozen after derivation through oracle_length
    "S3": 2, "S4": 3, "S5": 2, "S6": 2, "S7": 2,
    "D4": 2, "Q8": 2, "SL(2,3)": 3, "A5": 1, "A5 x A5": 1,
}


def test_criterion_04_spot_values():
    groups = {
        "S3": symmetric_group(3), "S4": symmetric_group(4),
        "S5": symmetric_group(5), "S6": symmetric_group(6),
        "S7": symmetric_group(7), "D4": dihedral_group(4),
        "Q8": quaternion_group(), "SL(2,3)": sl_group(2, 3),
        "A5": alternating_group(5),
        "A5 x A5": direct_product(alternating_group(5),
                                  alternating_group(5)),
    }
    bad = []
    for name, g in groups.items():
        main = abelian_simple_length(g)
        cap = max(16, len(conjugacy_classes(g)))
        orc = oracle_length(g, max_classes=cap)
        if main != orc:
            bad.append(f"{name}: main {main} != oracle {orc}")
        if main != SPOT_VALUES[name]:
            bad.append(f"{name}: main {main} != frozen {SPOT_VALUES[name]}")
    _report(4, not bad, f"{len(groups)} spot values; {bad}")


def test_criterion_05_msigma_witnesses():
    t0 = time.monotonic()
    res, failures = _suite_ok("msigma")
    elapsed = time.monotonic() - t0
    _report(5, not failures and elapsed < 60,
            f"{len(res.cases)} instances, {elapsed:.1f}s, "
            f"failures: {[c.id for c in failures]}")


def test_criterion_06_exact_sequence():
    res, failures = _suite_ok("exact-sequence")
    _report(6, not failures,
            f"{len(res.cases)} instances, failures: {[c.id for c in failures]}")


def test_criterion_07_simple_nonabelian():
    t0 = time.monotonic()
    res, failures = _suite_ok("simple-nonabelian")
    elapsed = time.monotonic() - t0
    _report(7, not failures and elapsed < 600,
            f"{elapsed:.1f}s, failures: {[c.id for c in failures]}")


def test_criterion_08_nontrivial_action():
    res, failures = _suite_ok("nontrivial-action")
    _report(8, not failures,
            f"order-96 wreath commutator closure, "
            f"failures: {[c.id for c in failures]}")


def test_criterion_09_trvrep():
    res, failures = _suite_ok("trvrep", max_order=48)
    _report(9, not failures,
            f"{len(res.cases)} groups, failures: {[c.id for c in failures]}")


def test_criterion_10_residue_kernel():
    res, failures = _suite_ok("kernel")
    _report(10, not failures,
            f"{len(res.cases)} instances, failures: {[c.id for c in failures]}")


def test_criterion_11_larsen_pink():
    res, failures = _suite_ok("lp")
    _report(11, not failures,
            f"{len(res.cases)} reference groups, "
            f"failures: {[c.id for c in failures]}")


def test_criterion_12_numeric_claims():
    all_fail = []
    for suite in ("sn-bound", "unipotent"):
        res, failures = _suite_ok(suite)
        all_fail.extend(f"{suite}:{c.id}" for c in failures)
    transitive = len(transitive_catalog(6))
    _report(12, not all_fail,
            f"S_n bounds, {transitive} transitive groups, unipotent lengths; "
            f"failures: {all_fail}")


def test_criterion_13_determinism(monkeypatch):
    """Byte-identical machine-readable reports across runs and thread hints.

    The full suite list runs both times; the catalog sweep is capped at
    order 64 to keep the double execution quick (the fixed-instance suites
    do not depend on the cap at all).
    """
    argv = ["verify", "all", "--max-order", "64", "--json"]

    def render(threads):
        monkeypatch.setenv("ASL_KIT_THREADS", str(threads))
        report, code = run(argv)
        assert code == 0
        return report.to_json()

    first = render(1)
    second = render(1)
    third = render(4)
    payload = json.loads(first)
    suites = [s["suite"] for s in payload["result"]["suites"]]
    ok = first == second == third and len(suites) == 17
    _report(13, ok,
            f"{len(suites)} suites, identical bytes across reruns and "
            f"thread hints 1/4")
