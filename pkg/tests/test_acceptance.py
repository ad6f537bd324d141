"""Acceptance checks.

Each test exercises one top-level guarantee of the library and prints a
single pass/fail line. All arithmetic is exact; tolerance is zero. The
heavy lifting is shared: every verification suite runs once per session
and the criteria inspect its cases.
"""

import json
import sys
import time

from quatwitt.suites import RunConfig, Report, emit_report, run_suite

_CACHE = {}
_TIMES = {}


def _suite(name):
    if name not in _CACHE:
        t0 = time.monotonic()
        _CACHE[name] = run_suite(name, RunConfig())
        _TIMES[name] = time.monotonic() - t0
    return _CACHE[name]


def _select(rep, prefix):
    return [c for c in rep.cases if c["id"].startswith(prefix)]


def _verdict(capsys, name, ok):
    with capsys.disabled():
        sys.stdout.write(f"\nACCEPTANCE {name}: {'pass' if ok else 'FAIL'}\n")
        sys.stdout.flush()
    assert ok, name


def _all_pass(cases, minimum):
    return (len(cases) >= minimum
            and all(c["status"] == "pass" for c in cases))


def test_criterion_1_product_cross_check(capsys):
    """Twisted trace form vs the closed-form odd product, 500+ pairs."""
    rep = _suite("products")
    cases = _select(rep, "products/trace-vs-closed/")
    ok = _all_pass(cases, 500) and _TIMES["products"] < 30.0
    _verdict(capsys, "product-cross-check", ok)


def test_criterion_2_morita_transfer(capsys):
    rep = _suite("morita")
    cases = _select(rep, "morita/transfer/")
    algebras = {c["id"].split("/")[2] for c in cases}
    ok = _all_pass(cases, 600) and len(algebras) >= 3
    _verdict(capsys, "morita-transfer", ok)


def test_criterion_3_lambda_determinant(capsys):
    rep = _suite("lambda")
    cases = _select(rep, "lambda/determinant/")
    algebras = {c["id"].split("/")[2] for c in cases}
    division = any(a.startswith("-") for a in algebras)
    ok = _all_pass(cases, 200) and division and len(algebras) >= 2
    _verdict(capsys, "lambda-determinant", ok)


def test_criterion_4_relations(capsys):
    rep = _suite("relations")
    even = _select(rep, "relations/even/")
    odd = _select(rep, "relations/odd-curated/")
    pres = _select(rep, "relations/presentation/")
    ok = (_all_pass(even, 50) and _all_pass(odd, 3)
          and _all_pass(pres, 1))
    _verdict(capsys, "relations", ok)


def test_criterion_5_constancy(capsys):
    rep = _suite("constancy")
    member = _select(rep, "constancy/membership/")
    versal = _select(rep, "constancy/versal/")
    nonconst = _select(rep, "constancy/nonconstant/")
    ok = (_all_pass(member, 100) and _all_pass(versal, 100)
          and _all_pass(nonconst, 1))
    _verdict(capsys, "chi-constancy", ok)


def test_criterion_6_phi_psi(capsys):
    rep = _suite("splitting")
    phi = _select(rep, "splitting/phi-mult/")
    kernel = (_select(rep, "splitting/psi-nq/")
              + _select(rep, "splitting/psi-kernel-gen/")
              + _select(rep, "splitting/psi-ij/"))
    w0 = _select(rep, "splitting/psi-w0/")
    mult = _select(rep, "splitting/psi-mult/")
    ok = (_all_pass(phi, 200) and _all_pass(kernel, 6)
          and _all_pass(w0, 100) and _all_pass(mult, 1))
    _verdict(capsys, "phi-psi", ok)


def test_criterion_7_witt_decision(capsys):
    rep = _suite("products")
    cancel = _select(rep, "products/self-cancel/")
    hm = _select(rep, "products/hasse-minkowski/")
    ok = _all_pass(cancel, 500) and _all_pass(hm, 200)
    _verdict(capsys, "witt-decision", ok)


def test_criterion_8_residue_calculus(capsys):
    rep = _suite("splitting")
    res = _select(rep, "splitting/residue/")
    oracle = _select(rep, "splitting/kt-oracle/")
    # an oracle disagreement is a hard failure
    ok = (_all_pass(res, 200) and len(oracle) >= 100
          and not any(c["status"] == "fail" for c in oracle)
          and sum(c["status"] == "pass" for c in oracle) >= 100)
    _verdict(capsys, "residue-calculus", ok)


def test_reports_are_deterministic():
    cfg = RunConfig(seed=1)
    one = emit_report(run_suite("morita", cfg), "json")
    two = emit_report(run_suite("morita", cfg), "json")
    assert one == two


def test_report_edge_cases():
    rep = Report(suite="empty")
    rep.finish()
    assert rep.totals == {"pass": 0, "fail": 0, "unknown": 0}
    assert rep.exit_code == 0
    text = emit_report(rep, "text")
    assert "0 fail" in text
    doc = json.loads(emit_report(rep, "json"))
    assert doc["cases"] == []
