"""Acceptance criteria, one test each, printing a PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed even
without ``-s``).
"""

import io
import math
import time

import numpy as np
import pytest

from landaupoly.cli import run
from landaupoly.extremal import build_extremal, g1_spec, g4_spec, lemma1_extremal_series, sharpness_witness
from landaupoly.polyfn import eval_poly
from landaupoly.radii import (
    Variant,
    classical_radius,
    landau_radii,
    make_params,
    profile_value,
)
from landaupoly.verify import (
    BoundKind,
    check_bounds_suite,
    check_distortion_bound,
    check_lemma6_condition,
    check_schlicht_coverage,
    check_starlike_sense_preserving,
    check_univalence_grid,
    component_bound_checks,
    default_targets,
    generate_admissible,
    lemma6_value,
)

T1 = make_params("t1", 2, (2, 1), (1,))
T4 = make_params("t4", 2, (2, 1))


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, limit, detail=""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        line = f"[{status}] criterion {number}: {title} ({elapsed:.2f} s, limit {limit} s)"
        if detail:
            line += f" {detail}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, detail
        assert elapsed < limit, f"took {elapsed:.2f} s"

    return emit


def test_criterion_1_closed_form_radii(report):
    t0 = time.perf_counter()
    errors = {}
    r = landau_radii(T1)
    r0 = 2 - math.sqrt(3)
    errors["t1_r0"] = (abs(r.radius - r0), 1e-10)
    errors["t1_r1"] = (abs(r.schlicht_radius - (4 * r0 + 6 * math.log(math.sqrt(3) / 2) - r0**2)), 1e-8)
    errors["tc"] = (abs(landau_radii(make_params("tc", 2, 2)).radius - (1 - 2 / math.sqrt(5))), 1e-10)
    t5 = landau_radii(make_params("t5", 2, (1, 1)))
    r7 = t5.radius
    errors["t5_r7"] = (abs(r7 - 1 / math.sqrt(3)), 1e-10)
    errors["t5_r8"] = (abs(t5.schlicht_radius - (r7 - r7**3)), 1e-10)
    errors["t3"] = (abs(landau_radii(make_params("t3", 2, (1, 1))).radius - 0.5), 1e-12)
    cl = landau_radii(make_params("classical", 1, 1))
    errors["classical"] = (max(abs(cl.radius - 1), abs(cl.schlicht_radius - 1)), 0.0)
    elapsed = time.perf_counter() - t0
    ok = all(e <= tol for e, tol in errors.values())
    tightest = max(errors, key=lambda k: errors[k][0] - errors[k][1])
    report(1, "closed-form radii", ok, elapsed, 1.0, f"tightest {tightest} err={errors[tightest][0]:.1e}")


def test_criterion_2_improvement(report):
    t0 = time.perf_counter()
    pairs = {}
    for M in (1.5, 2.0, 3.0):
        pairs[M] = (landau_radii(make_params("t2", 2, M)).radius, landau_radii(make_params("tc", 2, M)).radius)
    elapsed = time.perf_counter() - t0
    r2, r3 = pairs[2.0]
    ok = all(a > b for a, b in pairs.values()) and abs(r2 - 0.1293) <= 5e-4 and abs(r3 - 0.105573) <= 1e-6
    report(2, "t2 radius exceeds tc radius", ok, elapsed, 1.0, f"M=2 pair ({r2:.6f}, {r3:.6f})")


def test_criterion_3_sharpness(report):
    t0 = time.perf_counter()
    spec = g1_spec(T1)
    G = build_extremal(spec)
    res = landau_radii(T1)
    r0, r1 = res.radius, res.schlicht_radius
    inside = check_univalence_grid(G, 0.99 * r0, 600)
    w = sharpness_witness(spec, r0 + 0.05)
    gap = abs(eval_poly(G, w.x1) - eval_poly(G, w.x2))
    broken = check_univalence_grid(G, r0 + 0.05, 600, extra_points=w.pair)
    edge = abs(abs(eval_poly(G, r0)) - r1)
    elapsed = time.perf_counter() - t0
    ok = inside.passed and gap <= 1e-10 and w.x1 != w.x2 and not broken.passed and edge <= 1e-9
    report(3, "sharpness of the t1 extremal", ok, elapsed, 10.0, f"gap={gap:.1e} edge={edge:.1e}")


def test_criterion_4_coverage(report):
    t0 = time.perf_counter()
    results = []
    for params, spec in ((T1, g1_spec(T1)), (T4, g4_spec(T4))):
        res = landau_radii(params)
        targets = default_targets(res.schlicht_radius)
        cov = check_schlicht_coverage(build_extremal(spec), res.radius, res.schlicht_radius, 4096, targets)
        results.append(cov)
    elapsed = time.perf_counter() - t0
    ok = all(c.passed and c.samples >= 4096 and c.details["windings"] == [1] * 25 for c in results)
    margins = ", ".join(f"{c.margin:.1e}" for c in results)
    report(4, "coverage of the g1 and g4 extremals", ok, elapsed, 10.0, f"margins {margins}")


PROPERTY_PARAMS = {
    "t1": make_params("t1", 3, (2, 1, 0.5), (1, 2)),
    "t2": make_params("t2", 3, (2, 1, 0.5)),
    "t3": make_params("t3", 2, (1.5, 1.2)),
    "t4": make_params("t4", 3, (2, 1, 0.5)),
    "t5": make_params("t5", 2, (1.5, 1.5)),
}


def test_criterion_5_property_suite(report):
    t0 = time.perf_counter()
    failures = []
    for name, params in PROPERTY_PARAMS.items():
        r = 0.9 * landau_radii(params).radius
        for seed in range(20):
            F = generate_admissible(params, seed=seed)
            if not check_distortion_bound(F, params, r, 2000, seed).passed:
                failures.append(f"{name}/{seed}/distortion")
            for c in component_bound_checks(F, params, min(landau_radii(params).radius, 0.999)):
                if not c.passed:
                    failures.append(f"{name}/{seed}/{c.name}")
            if params.variant in (Variant.T2, Variant.T3) and lemma6_value(F, r) < 1:
                if not check_starlike_sense_preserving(F, r).passed:
                    failures.append(f"{name}/{seed}/lemma-implication")
    # implication exercised where the coefficient condition is known to hold
    t3 = PROPERTY_PARAMS["t3"]
    for seed in range(20):
        F = generate_admissible(t3, seed=seed)
        lo, hi = 0.0, 0.999
        for _ in range(50):
            mid = 0.5 * (lo + hi)
            lo, hi = (mid, hi) if lemma6_value(F, mid) < 1 else (lo, mid)
        rr = 0.99 * lo
        if check_lemma6_condition(F, rr).passed and not check_starlike_sense_preserving(F, rr).passed:
            failures.append(f"t3/{seed}/lemma-implication-at-threshold")
    eq = check_bounds_suite(lemma1_extremal_series(2, 2.0, 64), BoundKind.COEFF_LEMMA1, M=2.0)
    a2 = abs(lemma1_extremal_series(2, 2.0, 64).coeffs[2])
    if not (eq.passed and abs(a2 - 1.5) <= 1e-12):
        failures.append("lemma-extremal-equality")
    elapsed = time.perf_counter() - t0
    report(5, "property suite over seeded admissible functions", not failures, elapsed, 60.0,
           f"failures={failures[:5]}" if failures else "100 functions")


def random_params(rng, variant):
    m = int(rng.integers(1, 5))
    if variant is Variant.T1:
        M = [1 + rng.uniform(0.01, 4)] + list(rng.uniform(0, 3, m - 1))
        return make_params(variant, m, M, tuple(int(x) for x in rng.integers(1, 4, m - 1)))
    if variant is Variant.T4:
        return make_params(variant, m, [1 + rng.uniform(0.01, 4)] + list(rng.uniform(0, 3, m - 1)))
    if variant is Variant.T2:
        if rng.uniform() < 0.1:
            return make_params(variant, m, [1.0] + [0.0] * (m - 1))
        return make_params(variant, m, [1 + rng.uniform(0, 4)] + list(rng.uniform(0, 3, m - 1)))
    if variant in (Variant.T3, Variant.T5):
        if rng.uniform() < 0.1:
            return make_params(variant, 1, 1.0)
        return make_params(variant, m, list(1 + rng.uniform(0, 4, m)))
    return make_params(variant, m, 1 + rng.uniform(0.01, 4))


def test_criterion_6_profile_sanity(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    failures = []
    degenerate = 0
    for variant in (Variant.T1, Variant.T2, Variant.T3, Variant.T4, Variant.T5, Variant.TC):
        for i in range(50):
            p = random_params(rng, variant)
            tag = f"{variant.value}#{i}"
            if profile_value(p, 0.0) != 1.0:
                failures.append(f"{tag}: profile(0)")
            lo, hi = p.bracket
            top = hi if p.closed_interval else hi * (1 - 1e-6)
            res = landau_radii(p)
            xs = np.sort(rng.uniform(lo, top, size=(100, 2)), axis=1)
            for a, b in xs:
                ga, gb = profile_value(p, a), profile_value(p, b)
                if not (ga > gb or (res.degenerate and ga >= gb)):
                    failures.append(f"{tag}: not decreasing on ({a}, {b})")
                    break
            if res.degenerate:
                degenerate += 1
                grid = np.linspace(lo, top, 10_000)
                if min(profile_value(p, x) for x in grid) < 0:
                    failures.append(f"{tag}: degenerate but profile negative")
            elif res.residual > 1e-10:
                failures.append(f"{tag}: residual {res.residual:.1e}")
    for M in rng.uniform(1, 10, 50):
        r0 = classical_radius(M)
        if abs(r0 * (M + math.sqrt(M * M - 1)) - 1) > 1e-12:
            failures.append(f"classical M={M}")
    elapsed = time.perf_counter() - t0
    report(6, "profile sanity on random parameter sets", not failures, elapsed, 30.0,
           f"failures={failures[:5]}" if failures else f"300 sets, {degenerate} degenerate")


def test_criterion_7_determinism(report):
    t0 = time.perf_counter()
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        code = run(["verify", "--theorem", "t1", "--m", "2", "--M", "2,1", "--p", "1", "--seed", "42"], buf, io.StringIO())
        outputs.append((code, buf.getvalue()))
    elapsed = time.perf_counter() - t0
    ok = outputs[0] == outputs[1] and outputs[0][0] == 0 and len(outputs[0][1]) > 0
    report(7, "verify JSON is byte-identical for equal seeds", ok, elapsed, 60.0, f"{len(outputs[0][1])} bytes")
