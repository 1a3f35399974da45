import math

import numpy as np
import pytest

from landaupoly.extremal import build_extremal, g1_spec, g4_spec, lemma1_extremal_series, sharpness_witness
from landaupoly.polyfn import Kind, eval_poly, from_coeffs, wirtinger_derivs
from landaupoly.radii import landau_radii, make_params
from landaupoly.series import AnalyticSeries, differentiate, eval_series
from landaupoly.verify import (
    BoundKind,
    PreconditionError,
    bound_grid,
    check_bounds_suite,
    check_distortion_bound,
    check_lemma6_condition,
    check_schlicht_coverage,
    check_starlike_sense_preserving,
    check_univalence_grid,
    circle_points,
    default_targets,
    generate_admissible,
    lemma6_value,
    run_verification,
    sunflower_points,
    winding_number,
)

IDENTITY = from_coeffs([[0, 1]])
T1 = make_params("t1", 2, (2, 1), (1,))
T4 = make_params("t4", 2, (2, 1))
R0 = 2 - math.sqrt(3)


class TestSampling:
    def test_sunflower_fills_closed_disk(self):
        z = sunflower_points(500, 0.7)
        assert z[0] == 0 and np.max(np.abs(z)) == pytest.approx(0.7)
        assert len(np.unique(np.round(z, 12))) == 500

    def test_bound_grid_skips_origin(self):
        z = bound_grid()
        assert z.size == 500 and np.min(np.abs(z)) > 0 and np.max(np.abs(z)) <= 0.95 + 1e-15


class TestUnivalenceGrid:
    def test_identity(self):
        res = check_univalence_grid(IDENTITY, 0.9, 400)
        assert res.passed and res.margin >= 0.9 / 400

    def test_extremal_inside(self):
        G = build_extremal(g1_spec(T1))
        assert check_univalence_grid(G, 0.99 * R0, 600).passed

    def test_witness_breaks_grid(self):
        spec = g1_spec(T1)
        r = R0 + 0.05
        w = sharpness_witness(spec, r)
        res = check_univalence_grid(build_extremal(spec), r, 600, extra_points=w.pair)
        assert not res.passed
        assert sorted(np.real(res.witness)) == pytest.approx(sorted([w.x2, w.x1]))

    def test_non_injective_map(self):
        F = from_coeffs([[0, 0, 1]])  # z^2 identifies z and -z
        res = check_univalence_grid(F, 0.5, 200, extra_points=[0.3, -0.3])
        assert not res.passed and res.witness is not None


class TestDistortion:
    def test_identity(self):
        # the identity is admissible for t2 with M = (1, 0), whose profile is at most 1
        p = make_params("t2", 2, (1, 0))
        res = check_distortion_bound(from_coeffs([[0, 1], [0]]), p, 0.5)
        assert res.passed

    def test_extremal(self):
        res = check_distortion_bound(build_extremal(g1_spec(T1)), T1, 0.2, 2000)
        assert res.passed

    def test_random_t2(self):
        p = make_params("t2", 2, (2, 0.5))
        F = generate_admissible(p, seed=7)
        res = check_distortion_bound(F, p, 0.12, 2000, seed=7)
        assert res.passed

    def test_contracting_map_fails(self):
        res = check_distortion_bound(from_coeffs([[0, 0.1]]), make_params("t2", 1, 1.0), 0.05)
        assert not res.passed and len(res.witness) == 2


class TestCoverage:
    def test_identity(self):
        res = check_schlicht_coverage(IDENTITY, 0.5, 0.5)
        assert res.passed
        assert res.details["min_modulus"] == pytest.approx(0.5)
        assert set(res.details["windings"]) == {1}

    def test_g1(self):
        G = build_extremal(g1_spec(T1))
        res1 = landau_radii(T1)
        res = check_schlicht_coverage(G, res1.radius, res1.schlicht_radius, 4096)
        assert res.passed and abs(res.margin) <= 1e-6
        assert abs(abs(eval_poly(G, res1.radius)) - res1.schlicht_radius) <= 1e-9

    def test_g4(self):
        G = build_extremal(g4_spec(T4))
        r = landau_radii(T4)
        assert check_schlicht_coverage(G, r.radius, r.schlicht_radius, 4096).passed

    def test_claim_too_large(self):
        res = check_schlicht_coverage(IDENTITY, 0.5, 0.6)
        assert not res.passed and res.witness is not None

    def test_targets_inside(self):
        t = default_targets(0.2)
        assert t.size == 25 and np.max(np.abs(t)) < 0.2


class TestWinding:
    def test_circle(self):
        k, err, _ = winding_number(circle_points(4096, 1.0))
        assert k == 1 and err < 1e-9

    def test_double_and_outside(self):
        z = circle_points(4096, 1.0)
        assert winding_number(z**2)[0] == 2
        assert winding_number(z, 3.0)[0] == 0
        assert winding_number(np.conj(z))[0] == -1

    @pytest.mark.parametrize("variant", ["t1", "t2", "t3", "t4", "t5"])
    def test_univalent_images_wind_once(self, variant):
        p = {
            "t1": T1,
            "t2": make_params("t2", 2, (2, 0.5)),
            "t3": make_params("t3", 2, (1.5, 1.2)),
            "t4": T4,
            "t5": make_params("t5", 2, (1.5, 1.5)),
        }[variant]
        r = 0.9 * landau_radii(p).radius
        for seed in range(5):
            F = generate_admissible(p, seed=seed)
            assert winding_number(eval_poly(F, circle_points(4096, r)))[0] == 1


class TestStarlike:
    def test_identity(self):
        res = check_starlike_sense_preserving(IDENTITY, 0.9)
        assert res.passed
        assert res.details["min_starlike_ratio"] == pytest.approx(1.0)
        assert res.details["min_jacobian"] == pytest.approx(1.0)

    def test_small_conjugate_term(self):
        F = from_coeffs([[0, 1], [0, 0.3]])
        assert lemma6_value(F, 0.9) < 1
        assert check_starlike_sense_preserving(F, 0.9).passed

    def test_large_conjugate_term_reported(self):
        F = from_coeffs([[0, 1], [0, 0.8]])
        assert not check_lemma6_condition(F, 0.9).passed
        res = check_starlike_sense_preserving(F, 0.9)
        assert isinstance(res.passed, bool)

    def test_jacobian_failure_detected(self):
        # |F_zbar| = 2|z| exceeds |F_z| = 1 for |z| > 1/2
        F = from_coeffs([[0, 1], [0, 2]])
        res = check_starlike_sense_preserving(F, 0.9)
        assert not res.passed and res.details["min_jacobian"] < 0


class TestLemmaCondition:
    def test_identity(self):
        res = check_lemma6_condition(IDENTITY, 0.5)
        assert res.passed and res.margin == 1.0

    def test_two_term_sum(self):
        F = from_coeffs([[0, 1], [0, 0.5]])
        assert lemma6_value(F, 0.8) == pytest.approx(0.8)
        assert check_lemma6_condition(F, 0.8).passed
        res = check_lemma6_condition(F, 1.0)
        assert lemma6_value(F, 1.0) == pytest.approx(1.0) and not res.passed

    def test_normalisation_required(self):
        with pytest.raises(PreconditionError):
            lemma6_value(from_coeffs([[0, 2]]), 0.5)

    def test_implies_starlike(self):
        p = make_params("t3", 3, (1.3, 1.5, 2))
        checked = 0
        for seed in range(20):
            F = generate_admissible(p, seed=seed)
            lo, hi = 0.0, 1.0 - 1e-9
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                lo, hi = (mid, hi) if lemma6_value(F, mid) < 1 else (lo, mid)
            for r in (0.5 * lo, 0.99 * lo):
                if check_lemma6_condition(F, r).passed:
                    assert check_starlike_sense_preserving(F, r).passed
                    checked += 1
        assert checked == 40


class TestBounds:
    def test_lemma_extremal_equality(self):
        res = check_bounds_suite(lemma1_extremal_series(2, 2.0, 64), BoundKind.COEFF_LEMMA1, M=2.0)
        assert res.passed
        assert abs(res.margin) <= 1e-12 and res.details["tightest_index"] == 2

    def test_coefficient_violation_gets_witness(self):
        # the 0.95 grid cannot see the true sup 1.4 of z + 0.45 z^20, so the
        # precondition holds with M = 1.2 and the lemma bound 0.3667 is broken
        f = AnalyticSeries(np.r_[0, 1, np.zeros(18), 0.45])
        res = check_bounds_suite(f, BoundKind.COEFF_LEMMA1, M=1.2)
        assert not res.passed and res.witness == 20

    def test_coefficient_precondition(self):
        with pytest.raises(PreconditionError):
            check_bounds_suite(AnalyticSeries([0, 1, 0.9]), BoundKind.COEFF_LEMMA1, M=1.1)

    def test_min_modulus_identity(self):
        res = check_bounds_suite(AnalyticSeries([0, 1]), BoundKind.MIN_MODULUS, Lambda=1.0, r=0.5)
        assert res.passed and res.details["bound"] == pytest.approx(0.5)
        assert abs(res.margin) <= 1e-15

    def test_schwarz_pick(self):
        res = check_bounds_suite(AnalyticSeries([0, 0, 1.5]), BoundKind.SCHWARZ_PICK, M=1.5)
        assert res.passed

    def test_schwarz_pick_precondition(self):
        with pytest.raises(PreconditionError):
            check_bounds_suite(AnalyticSeries([0.1, 1]), BoundKind.SCHWARZ_PICK, M=2)

    def test_deriv_cascade(self):
        f = AnalyticSeries([0, 0, 0.5])  # f'' = 1
        res = check_bounds_suite(f, BoundKind.DERIV_CASCADE, M=1.0, p=2)
        assert res.passed and abs(res.margin) <= 1e-12

    def test_deriv_cascade_jet(self):
        with pytest.raises(PreconditionError):
            check_bounds_suite(AnalyticSeries([0, 1, 0.5]), BoundKind.DERIV_CASCADE, M=1.0, p=2)

    def test_min_modulus_extremal_component(self):
        from landaupoly.extremal import log_component

        f0 = log_component(2.0)
        res = check_bounds_suite(f0, BoundKind.MIN_MODULUS, Lambda=2.0, r=R0)
        assert res.passed and abs(res.margin) <= 1e-9


class TestGenerateAdmissible:
    def test_deterministic(self):
        p = make_params("t2", 3, (2, 1, 0.5))
        a = generate_admissible(p, seed=4)
        b = generate_admissible(p, seed=4)
        for x, y in zip(a.components, b.components):
            np.testing.assert_array_equal(x.coeffs, y.coeffs)
        c = generate_admissible(p, seed=5)
        assert not np.array_equal(a.components[0].coeffs, c.components[0].coeffs)

    def test_t1_cascade(self):
        p = make_params("t1", 2, (2, 1), (2,))
        F = generate_admissible(p, degree=6, seed=1)
        assert check_bounds_suite(F.components[1], BoundKind.DERIV_CASCADE, M=1.0, p=2).passed
        assert abs(wirtinger_derivs(F, 0).F_z - 1) <= 1e-15
        fp = differentiate(F.components[0])
        assert np.max(np.abs(eval_series(fp, sunflower_points(2000, 0.999)))) < 2.0

    def test_t2_components(self):
        p = make_params("t2", 3, (2, 1, 0.5))
        F = generate_admissible(p, seed=2)
        z = sunflower_points(2000, 0.999)
        for f, M in zip(F.components, p.M):
            assert f.coeffs[0] == 0
            assert np.max(np.abs(eval_series(f, z))) <= M

    @pytest.mark.parametrize("variant,kind", [("t4", Kind.MODULUS), ("t5", Kind.MODULUS), ("t3", Kind.CONJUGATE)])
    def test_kinds(self, variant, kind):
        p = make_params(variant, 2, (2, 1.5))
        assert generate_admissible(p, seed=0).kind is kind

    def test_unit_derivative_components(self):
        p = make_params("t5", 3, (1.5, 2, 1))
        F = generate_admissible(p, seed=3)
        for f, M in zip(F.components, p.M):
            assert f.coeffs[1] == 1 and f.coefficient_sum() <= M


class TestRunVerification:
    @pytest.mark.parametrize(
        "params",
        [
            T1,
            make_params("t2", 2, (2, 0.5)),
            make_params("t3", 2, (1.5, 1.2)),
            T4,
            make_params("t5", 2, (1.5, 1.5)),
            make_params("tc", 2, 2),
            make_params("classical", 1, 2),
        ],
        ids=lambda p: p.variant.value,
    )
    def test_passes(self, params):
        rep = run_verification(params, seed=3, grid_points=200, pairs=500, boundary_samples=4096)
        assert rep.passed, [c.name for c in rep.checks if not c.passed]
        for c in rep.checks:
            assert c.margin > -1e-6 or c.witness is not None

    def test_extremal_checks_present(self):
        rep = run_verification(T1, seed=0, grid_points=200, pairs=200)
        assert rep["extremal_sharpness_witness"].passed
        assert rep["extremal_coverage"].details["boundary_value_error"] <= 1e-9

    def test_json_deterministic(self):
        p = make_params("t2", 2, (2, 0.5))
        a = run_verification(p, seed=9, grid_points=150, pairs=300).to_json()
        b = run_verification(p, seed=9, grid_points=150, pairs=300).to_json()
        assert a == b
        assert "elapsed" not in a
