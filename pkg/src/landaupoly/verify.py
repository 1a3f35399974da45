"""Numerical certification of univalence, coverage, starlikeness and bounds.

Every check returns a :class:`CheckResult`; a :class:`VerificationReport`
collects them. Sampling is seeded and every reduction is a min or max, so
reports are reproducible bit for bit for a given seed and sample counts.
None of this is a proof: a failing check produces a concrete witness, a
passing one only a margin.
"""

from __future__ import annotations

import enum
import json
import math
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from . import series as ser
from .extremal import build_extremal, g1_spec, g4_spec, sharpness_witness
from .polyfn import ClosedAnalytic, Kind, PolyFn, eval_poly, wirtinger_arrays
from .radii import (
    LandauParams,
    Variant,
    landau_radii,
    profile_value,
    schlicht_radius,
)

COINCIDENCE_TOL = 1e-12
DISTORTION_TOL = 1e-9
COVERAGE_TOL = 1e-6
ZERO_GUARD = 1e-12
WINDING_CLOSURE_TOL = 1e-6
INSIDE_FACTOR = 0.9
MAX_ATTEMPTS = 100

_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


class PreconditionError(ValueError):
    pass


class AdmissibleGenerationError(RuntimeError):
    pass


def _jsonable(x):
    if isinstance(x, (complex, np.complexfloating)):
        return [float(x.real), float(x.imag)]
    if isinstance(x, (np.floating, float)):
        return float(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class CheckResult:
    name: str
    passed: bool
    margin: float
    witness: object = None
    samples: int = 0
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return _jsonable(
            {
                "name": self.name,
                "passed": bool(self.passed),
                "margin": float(self.margin),
                "witness": self.witness,
                "samples": int(self.samples),
                "details": self.details,
            }
        )


@dataclass
class VerificationReport:
    checks: list
    seed: int
    elapsed: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "seed": self.seed,
            "passed": self.passed,
            "config": _jsonable(self.config),
            "checks": [c.to_dict() for c in self.checks],
        }
        if include_timing:
            out["elapsed"] = self.elapsed
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)


# ---------------------------------------------------------------- sampling


def sunflower_points(n: int, r: float, rotation: float = 0.0) -> np.ndarray:
    """``n`` quasi-uniform points of the closed disk of radius ``r``, boundary included."""
    i = np.arange(n)
    rad = r * np.sqrt(i / max(n - 1, 1))
    return rad * np.exp(1j * (i * _GOLDEN_ANGLE + rotation))


def random_disk_points(rng: np.random.Generator, n: int, r: float) -> np.ndarray:
    rad = r * np.sqrt(rng.uniform(size=n))
    return rad * np.exp(2j * np.pi * rng.uniform(size=n))


def circle_points(n: int, r: float) -> np.ndarray:
    return r * np.exp(2j * np.pi * np.arange(n) / n)


def bound_grid(n: int = 500, r: float = 0.95) -> np.ndarray:
    # origin excluded: every growth bound is an equality 0 = 0 there
    return sunflower_points(n + 1, r)[1:]


# ---------------------------------------------------------------- checks


def check_univalence_grid(
    F: PolyFn, r: float, n: int = 400, seed: int = 0, extra_points: Sequence[complex] = ()
) -> CheckResult:
    """Smallest image distance over sample pairs at least ``r/n`` apart."""
    rot = np.random.default_rng(seed).uniform(0.0, 2.0 * np.pi)
    z = np.concatenate([sunflower_points(n, r, rot), np.asarray(extra_points, dtype=complex)])
    w = eval_poly(F, z)
    dz = np.abs(z[:, None] - z[None, :])
    dw = np.abs(w[:, None] - w[None, :])
    mask = np.triu(dz >= r / n, k=1)
    dw_masked = np.where(mask, dw, np.inf)
    idx = np.unravel_index(np.argmin(dw_masked), dw_masked.shape)
    gap = float(dw_masked[idx])
    passed = gap > COINCIDENCE_TOL
    ratio = float(np.min(np.where(mask, dw / np.where(mask, dz, 1.0), np.inf)))
    return CheckResult(
        "univalence_grid",
        passed,
        gap,
        witness=None if passed else [z[idx[0]], z[idx[1]]],
        samples=int(z.size),
        details={"radius": r, "min_difference_quotient": ratio, "closest_pair": [z[idx[0]], z[idx[1]]]},
    )


def check_distortion_bound(
    F: PolyFn, params: LandauParams, r: float, pairs: int = 2000, seed: int = 0
) -> CheckResult:
    """``|F(z2) - F(z1)| >= G(r) |z2 - z1|`` on random pairs of ``D_r``."""
    G = profile_value(params, r)
    rng = np.random.default_rng(seed)
    z1 = random_disk_points(rng, pairs, r)
    z2 = random_disk_points(rng, pairs, r)
    lhs = np.abs(eval_poly(F, z2) - eval_poly(F, z1))
    deficit = lhs - G * np.abs(z2 - z1)
    i = int(np.argmin(deficit))
    margin = float(deficit[i])
    passed = margin >= -DISTORTION_TOL
    return CheckResult(
        "distortion_bound",
        passed,
        margin,
        witness=None if passed else [z1[i], z2[i]],
        samples=pairs,
        details={"radius": r, "profile": G, "variant": params.variant.value},
    )


def winding_number(curve: np.ndarray, w0: complex = 0.0) -> tuple[int, float, float]:
    """Winding of the closed polyline ``curve`` about ``w0``.

    Returns ``(winding, closure_error, largest_step)`` where the angle steps
    are principal arguments between consecutive samples.
    """
    d = np.asarray(curve, dtype=complex) - w0
    steps = np.angle(np.roll(d, -1) / d)
    turns = float(np.sum(steps)) / (2.0 * np.pi)
    k = int(round(turns))
    return k, abs(turns - k), float(np.max(np.abs(steps)))


def _boundary_windings(F: PolyFn, r: float, samples: int, targets: np.ndarray):
    for _attempt in range(2):
        curve = eval_poly(F, circle_points(samples, r))
        results = [winding_number(curve, t) for t in targets]
        coarse = any(err > WINDING_CLOSURE_TOL or step > np.pi / 2 for _, err, step in results)
        if not coarse:
            break
        samples *= 2
    return curve, results, samples, coarse


def default_targets(R: float, n: int = 5) -> np.ndarray:
    a = INSIDE_FACTOR * R / math.sqrt(2.0)
    xs = np.linspace(-a, a, n)
    return (xs[None, :] + 1j * xs[:, None]).ravel()


def check_schlicht_coverage(
    F: PolyFn,
    r: float,
    R: float,
    boundary_samples: int = 4096,
    targets: Optional[Sequence[complex]] = None,
) -> CheckResult:
    """Min modulus on ``|z| = r`` is at least ``R`` and the boundary curve winds once about each target."""
    targets = default_targets(R) if targets is None else np.asarray(targets, dtype=complex)
    curve, results, used, coarse = _boundary_windings(F, r, boundary_samples, targets)
    mod = np.abs(curve)
    j = int(np.argmin(mod))
    min_mod = float(mod[j])
    margin = min_mod - R
    windings = [k for k, _, _ in results]
    bad = [t for t, k in zip(targets, windings) if k != 1]
    passed = margin >= -COVERAGE_TOL and not bad and not coarse
    witness = None
    if not passed:
        witness = {"boundary_point": r * np.exp(2j * np.pi * j / used), "bad_targets": bad}
    return CheckResult(
        "schlicht_coverage",
        passed,
        margin,
        witness=witness,
        samples=used,
        details={
            "radius": r,
            "schlicht_radius": R,
            "min_modulus": min_mod,
            "windings": windings,
            "max_closure_error": max(e for _, e, _ in results),
            "insufficient_resolution": coarse,
        },
    )


def check_starlike_sense_preserving(
    F: PolyFn, r: float, circles: int = 20, samples: int = 256
) -> CheckResult:
    """``Re((z F_z - conj(z) F_zbar) / F) > 0`` and ``J_F > 0`` on circles up to radius ``r``."""
    rho = r * np.arange(1, circles + 1) / circles
    theta = 2.0 * np.pi * np.arange(samples) / samples
    z = (rho[:, None] * np.exp(1j * theta[None, :])).ravel()
    Fv = eval_poly(F, z)
    Fz, Fzb = wirtinger_arrays(F, z)
    jac = np.abs(Fz) ** 2 - np.abs(Fzb) ** 2
    ok = np.abs(Fv) >= ZERO_GUARD
    star = np.full(z.shape, np.inf)
    star[ok] = np.real((z[ok] * Fz[ok] - np.conj(z[ok]) * Fzb[ok]) / Fv[ok])
    i_star = int(np.argmin(star))
    i_jac = int(np.argmin(jac))
    min_star = float(star[i_star])
    min_jac = float(jac[i_jac])
    passed = min_star > 0 and min_jac > 0
    witness = None
    if not passed:
        witness = z[i_star] if min_star <= 0 else z[i_jac]
    return CheckResult(
        "starlike_sense_preserving",
        passed,
        min(min_star, min_jac),
        witness=witness,
        samples=int(z.size),
        details={
            "radius": r,
            "min_starlike_ratio": min_star,
            "min_jacobian": min_jac,
            "skipped_near_zero": int(np.count_nonzero(~ok)),
        },
    )


def lemma6_value(F: PolyFn, r: float) -> float:
    """Truncated left-hand side of the coefficient condition for full starlikeness."""
    if F.kind is not Kind.CONJUGATE or F.is_closed:
        raise PreconditionError("condition applies to conjugate-power functions given by series")
    comps = F.series_components()
    a = comps[0].coeffs
    if len(a) < 2 or abs(a[1] - 1.0) > 1e-12 or abs(a[0]) > 1e-12:
        raise PreconditionError("leading component must be normalised as z + a_2 z^2 + ...")
    n = np.arange(len(a))
    value = float(np.sum((n * np.abs(a) * r ** np.maximum(n - 1, 0))[2:]))
    for k, f in enumerate(comps[1:], start=1):
        b = f.coeffs
        if abs(b[0]) > 1e-12:
            raise PreconditionError(f"component {k} must vanish at the origin")
        n = np.arange(1, len(b))
        value += r**k * float(np.sum(n * np.abs(b[1:]) * r ** (n - 1)))
        value += k * r**k * float(np.sum(np.abs(b[1:]) * r ** (n - 1)))
    return value


def check_lemma6_condition(F: PolyFn, r: float) -> CheckResult:
    value = lemma6_value(F, r)
    return CheckResult(
        "lemma6_condition",
        value < 1.0,
        1.0 - value,
        witness=None if value < 1.0 else r,
        samples=sum(len(c) for c in F.components),
        details={"radius": r, "value": value},
    )


class BoundKind(enum.Enum):
    COEFF_LEMMA1 = "coeff_lemma1"
    DERIV_CASCADE = "deriv_cascade"
    SCHWARZ_PICK = "schwarz_pick"
    MIN_MODULUS = "min_modulus"


Analytic = Union[ser.AnalyticSeries, ClosedAnalytic]


def _eval(f: Analytic, z):
    return f.value(z) if isinstance(f, ClosedAnalytic) else ser.eval_series(f, z)


def _eval_deriv(f: Analytic, z):
    if isinstance(f, ClosedAnalytic):
        return f.derivative(z)
    return ser.eval_series(ser.differentiate(f), z)


def check_bounds_suite(
    f: Analytic,
    kind: BoundKind,
    *,
    M: Optional[float] = None,
    p: int = 1,
    Lambda: Optional[float] = None,
    r: Optional[float] = None,
    grid: int = 500,
    boundary_samples: int = 4096,
) -> CheckResult:
    """Coefficient and growth bounds used in the proofs.

    ``COEFF_LEMMA1``
        ``|a_n| <= M - 1/M`` for ``n >= 2`` when ``|a_1| = 1`` and ``|f| <= M``.
    ``DERIV_CASCADE``
        ``|f'| <= M |z|^(p-1)/(p-1)!`` and ``|f| <= M |z|^p/p!`` when ``f``
        vanishes to order ``p`` and ``|f^(p)| <= M``.
    ``SCHWARZ_PICK``
        ``|f| <= M |z|`` and ``|f'| <= M / (1 - |z|^2)`` when ``f(0) = 0``, ``|f| <= M``.
    ``MIN_MODULUS``
        ``min_{|z|=r} |f| >= L^2 r + (L^3 - L) log(1 - r/L)`` when ``f(0) = 0``,
        ``f'(0) = 1`` and ``|f'| <= L``.
    """
    kind = BoundKind(kind)
    zg = bound_grid(grid)
    absz = np.abs(zg)

    if kind is BoundKind.COEFF_LEMMA1:
        if not isinstance(f, ser.AnalyticSeries):
            raise PreconditionError("coefficient bound needs a series")
        a = f.coeffs
        if abs(abs(a[1]) - 1.0) > 1e-9:
            raise PreconditionError(f"|a_1| must be 1, got {abs(a[1])}")
        sup = float(np.max(np.abs(_eval(f, zg))))
        if sup > M + 1e-9:
            raise PreconditionError(f"grid sup {sup} exceeds M = {M}")
        bound = M - 1.0 / M
        slack = bound - np.abs(a[2:])
        if slack.size == 0:
            return CheckResult(kind.value, True, bound, samples=0)
        i = int(np.argmin(slack))
        margin = float(slack[i])
        passed = margin >= -1e-12
        return CheckResult(
            kind.value,
            passed,
            margin,
            witness=None if passed else i + 2,
            samples=int(a.size - 2),
            details={"bound": bound, "tightest_index": i + 2, "grid_sup": sup},
        )

    if kind is BoundKind.DERIV_CASCADE:
        if not isinstance(f, ser.AnalyticSeries):
            raise PreconditionError("derivative cascade needs a series")
        if np.any(np.abs(f.coeffs[:p]) > 1e-12):
            raise PreconditionError(f"series must vanish to order {p}")
        dp = f
        for _ in range(p):
            dp = ser.differentiate(dp)
        sup = float(np.max(np.abs(ser.eval_series(dp, zg))))
        if sup > M + 1e-9:
            raise PreconditionError(f"grid sup of the {p}-th derivative {sup} exceeds M = {M}")
        s1 = M * absz ** (p - 1) / math.factorial(p - 1) - np.abs(_eval_deriv(f, zg))
        s0 = M * absz**p / math.factorial(p) - np.abs(_eval(f, zg))
        slack = np.minimum(s0, s1)
    elif kind is BoundKind.SCHWARZ_PICK:
        if abs(_eval(f, 0.0)) > 1e-12:
            raise PreconditionError("f(0) must vanish")
        vals = np.abs(_eval(f, zg))
        sup = float(np.max(vals))
        if sup > M + 1e-9:
            raise PreconditionError(f"grid sup {sup} exceeds M = {M}")
        s0 = M * absz - vals
        s1 = M / (1.0 - absz**2) - np.abs(_eval_deriv(f, zg))
        slack = np.minimum(s0, s1)
    else:
        if abs(_eval(f, 0.0)) > 1e-12 or abs(_eval_deriv(f, 0.0) - 1.0) > 1e-12:
            raise PreconditionError("need f(0) = 0 and f'(0) = 1")
        sup = float(np.max(np.abs(_eval_deriv(f, zg))))
        if sup > Lambda + 1e-9:
            raise PreconditionError(f"grid sup of |f'| {sup} exceeds Lambda = {Lambda}")
        zb = circle_points(boundary_samples, r)
        mod = np.abs(_eval(f, zb))
        j = int(np.argmin(mod))
        bound = Lambda**2 * r + (Lambda**3 - Lambda) * math.log1p(-r / Lambda)
        margin = float(mod[j]) - bound
        passed = margin >= -COVERAGE_TOL
        return CheckResult(
            kind.value,
            passed,
            margin,
            witness=None if passed else zb[j],
            samples=boundary_samples,
            details={"bound": bound, "min_modulus": float(mod[j]), "radius": r},
        )

    i = int(np.argmin(slack))
    margin = float(slack[i])
    passed = margin >= -1e-12
    return CheckResult(
        kind.value,
        passed,
        margin,
        witness=None if passed else zg[i],
        samples=grid,
        details={"grid_sup": sup},
    )


# ---------------------------------------------------------------- test functions


def _raw(rng: np.random.Generator, degree: int, start: int = 0) -> ser.AnalyticSeries:
    c = np.zeros(degree + 1, dtype=complex)
    n = degree + 1 - start
    c[start:] = rng.normal(size=n) + 1j * rng.normal(size=n)
    return ser.AnalyticSeries(c)


def _normalized(rng, degree: int, bound: float, start: int = 0) -> ser.AnalyticSeries:
    return ser.normalize_bounded(_raw(rng, max(degree, start), start), bound)


def _unit_with_tail(rng, degree: int, M: float) -> ser.AnalyticSeries:
    """``z + tail`` with tail size drawn up to ``M - 1/M`` and ``sup |f| <= M`` certified."""
    z = ser.monomial(1)
    if M == 1.0 or degree < 2:
        return z
    for _ in range(MAX_ATTEMPTS):
        size = rng.uniform(0.0, M - 1.0 / M)
        f = z + _normalized(rng, degree, size, start=2)
        if f.coefficient_sum() <= M:
            return f
    raise AdmissibleGenerationError("could not draw a bounded component in 100 attempts")


def _derivative_bounded(rng, degree: int, M0: float) -> ser.AnalyticSeries:
    # f' = 1 + (M0 - 1) z q(z) with sum |q_n| < 1, so |f'| < M0 on the disk
    q = _normalized(rng, max(degree - 2, 0), 1.0)
    zq = ser.AnalyticSeries(np.concatenate([[0.0], q.coeffs]))
    fp = ser.AnalyticSeries([1.0]) + (M0 - 1.0) * zq
    return ser.integrate(fp)


def _vanishing_to_order(rng, degree: int, p: int, M: float) -> ser.AnalyticSeries:
    g = _normalized(rng, max(degree - p, 0), M)
    for _ in range(p):
        g = ser.integrate(g)
    return g


def generate_admissible(params: LandauParams, degree: int = 6, seed: int = 0) -> PolyFn:
    """Random polynomial function satisfying the hypotheses of ``params.variant``.

    Bounds are certified through coefficient sums, so every draw is admissible.
    """
    rng = np.random.default_rng(seed)
    v, m, M = params.variant, params.m, params.M
    if v is Variant.CLASSICAL:
        return PolyFn((_unit_with_tail(rng, degree, M[0]),))
    if v in (Variant.T1, Variant.T4):
        comps = [_derivative_bounded(rng, degree, M[0])]
        for k in range(1, m):
            pk = params.p[k - 1] if v is Variant.T1 else 1
            comps.append(_vanishing_to_order(rng, degree, pk, M[k]))
    elif v is Variant.T2:
        comps = [_unit_with_tail(rng, degree, M[0])]
        comps += [_normalized(rng, degree, M[k], start=1) for k in range(1, m)]
    else:
        comps = [_unit_with_tail(rng, degree, M[k]) for k in range(m)]
    kind = Kind.MODULUS if v in (Variant.T4, Variant.T5) else Kind.CONJUGATE
    return PolyFn(tuple(comps), kind)


# ---------------------------------------------------------------- suites


def component_bound_checks(F: PolyFn, params: LandauParams, r: float) -> list[CheckResult]:
    """The coefficient and growth bounds each component must satisfy under ``params``."""
    v, M = params.variant, params.M
    comps = F.series_components()
    out = []

    def tagged(res: CheckResult, k: int) -> CheckResult:
        res.name = f"{res.name}[f{k}]"
        return res

    for k, f in enumerate(comps):
        if v in (Variant.T1, Variant.T4):
            if k == 0:
                res = check_bounds_suite(f, BoundKind.MIN_MODULUS, Lambda=M[0], r=r)
            else:
                pk = params.p[k - 1] if v is Variant.T1 else 1
                res = check_bounds_suite(f, BoundKind.DERIV_CASCADE, M=M[k], p=pk)
        elif v is Variant.T2 and k > 0:
            res = check_bounds_suite(f, BoundKind.SCHWARZ_PICK, M=M[k])
        else:
            res = check_bounds_suite(f, BoundKind.COEFF_LEMMA1, M=M[k])
        out.append(tagged(res, k))
    return out


def extremal_checks(params: LandauParams, grid_points: int = 600, boundary_samples: int = 4096, seed: int = 0):
    """Sharpness evidence for the extremal of a t1 or t4 parameter set."""
    spec = g1_spec(params) if params.variant is Variant.T1 else g4_spec(params)
    G = build_extremal(spec)
    res = landau_radii(params)
    r0, r1 = res.radius, res.schlicht_radius
    checks = []

    inside = check_univalence_grid(G, 0.99 * r0, grid_points, seed)
    inside.name = "extremal_univalence_inside"
    checks.append(inside)

    r_out = min(r0 + 0.05, 1.0)
    if r_out >= 1.0:
        r_out = 0.5 * (r0 + 1.0)
    w = sharpness_witness(spec, r_out)
    gap = abs(eval_poly(G, w.x1) - eval_poly(G, w.x2))
    grid = check_univalence_grid(G, r_out, grid_points, seed, extra_points=w.pair)
    checks.append(
        CheckResult(
            "extremal_sharpness_witness",
            gap <= 1e-10 and not grid.passed,
            1e-10 - gap,
            witness=[w.x1, w.x2],
            samples=grid.samples,
            details={"radius": r_out, "image_gap": gap, "grid_detects_collision": not grid.passed},
        )
    )

    cov = check_schlicht_coverage(G, r0, r1, boundary_samples)
    cov.name = "extremal_coverage"
    edge = abs(abs(eval_poly(G, r0)) - r1)
    cov.details["boundary_value_error"] = edge
    cov.passed = cov.passed and edge <= 1e-9
    checks.append(cov)
    return checks


def run_verification(
    params: LandauParams,
    seed: int = 0,
    *,
    degree: int = 6,
    grid_points: int = 400,
    pairs: int = 2000,
    boundary_samples: int = 4096,
    circles: int = 20,
    circle_samples: int = 256,
) -> VerificationReport:
    """Full check suite on one seeded admissible function (plus the extremal, when one exists)."""
    t0 = time.perf_counter()
    res = landau_radii(params)
    r_in = INSIDE_FACTOR * res.radius
    F = generate_admissible(params, degree, seed)
    checks = [check_univalence_grid(F, r_in, grid_points, seed)]
    if params.variant not in (Variant.CLASSICAL, Variant.TC):
        checks.append(check_distortion_bound(F, params, r_in, pairs, seed))
    if res.schlicht_radius is not None:
        r_cov = res.radius if res.radius < 1.0 else 1.0 - 1e-3
        R = res.schlicht_radius if r_cov == res.radius else max(schlicht_radius(params, r_cov), 0.0)
        checks.append(check_schlicht_coverage(F, r_cov, R, boundary_samples))
    if params.variant is Variant.T3:
        checks.append(check_starlike_sense_preserving(F, r_in, circles, circle_samples))
        checks.append(check_lemma6_condition(F, r_in))
    checks.extend(component_bound_checks(F, params, min(res.radius, 1.0 - 1e-3)))
    if params.variant in (Variant.T1, Variant.T4):
        checks.extend(extremal_checks(params, max(grid_points, 600), boundary_samples, seed))
    config = {
        "params": params.to_dict(),
        "radius": res.radius,
        "schlicht_radius": res.schlicht_radius,
        "inside_factor": INSIDE_FACTOR,
        "degree": degree,
        "grid_points": grid_points,
        "pairs": pairs,
        "boundary_samples": boundary_samples,
    }
    return VerificationReport(checks, seed, time.perf_counter() - t0, config)
