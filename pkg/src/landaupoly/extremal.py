"""Extremal functions and the non-injectivity witness behind sharpness.

``G1`` (poly-analytic) and ``G4`` (reduced) share the leading component

    f_0(z) = M_0**2 z + (M_0**3 - M_0) log(1 - z / M_0),

whose derivative ``M_0 (1 - M_0 z) / (M_0 - z)`` is a disk automorphism
scaled by ``M_0``. On the real axis both extremals reduce to a real
function whose derivative is the radius profile, so it rises up to the
univalence radius and falls after it; two points with equal values on
either side of the peak collide under the full complex map.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import series as ser
from .polyfn import ClosedAnalytic, Kind, PolyFn
from .radii import LandauParams, ParamError, Variant, landau_radii, solve_monotone_root


class ExtremalKind(enum.Enum):
    G1 = "g1"
    G4 = "g4"
    CLASSICAL_F0 = "classical_f0"
    LEMMA1 = "lemma1"


@dataclass(frozen=True)
class ExtremalSpec:
    variant: ExtremalKind
    params: Optional[LandauParams] = None
    n: int = 1
    M: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "variant", ExtremalKind(self.variant))
        v = self.variant
        if v is ExtremalKind.G1 and (self.params is None or self.params.variant is not Variant.T1):
            raise ParamError("G1 needs t1 parameters")
        if v is ExtremalKind.G4 and (self.params is None or self.params.variant is not Variant.T4):
            raise ParamError("G4 needs t4 parameters")
        if v in (ExtremalKind.LEMMA1, ExtremalKind.CLASSICAL_F0):
            if self.M < 1:
                raise ParamError("M must be at least 1")
            if self.n < 1:
                raise ParamError("n must be a positive integer")


def g1_spec(params: LandauParams) -> ExtremalSpec:
    return ExtremalSpec(ExtremalKind.G1, params)


def g4_spec(params: LandauParams) -> ExtremalSpec:
    return ExtremalSpec(ExtremalKind.G4, params)


def log_component(M0: float) -> ClosedAnalytic:
    """``M0^2 z + (M0^3 - M0) log(1 - z/M0)``; principal log is fine since ``Re(1 - z/M0) > 0``."""
    a = M0**2
    b = M0**3 - M0

    def value(z):
        z = np.asarray(z, dtype=complex)
        out = a * z + b * np.log1p(-z / M0)
        return complex(out) if out.ndim == 0 else out

    def derivative(z):
        z = np.asarray(z, dtype=complex)
        out = M0 * (1 - M0 * z) / (M0 - z)
        return complex(out) if out.ndim == 0 else out

    return ClosedAnalytic(value, derivative, name=f"log_component(M0={M0})")


def lemma1_extremal_series(n: int, M: float, N: int = ser.DEFAULT_ORDER) -> ser.AnalyticSeries:
    """Taylor series of ``M z (1 - M z^(n-1)) / (M - z^(n-1))`` (``z`` itself for ``n = 1``)."""
    if n == 1:
        return ser.AnalyticSeries(np.r_[0.0, 1.0, np.zeros(N - 1)])
    num = np.zeros(n + 1, dtype=complex)
    num[1] = M
    num[n] = -(M**2)
    den = np.zeros(n, dtype=complex)
    den[0] = M
    den[n - 1] = -1.0
    return ser.series_divide(ser.AnalyticSeries(num), ser.AnalyticSeries(den), N)


def build_extremal(spec: ExtremalSpec, N: int = ser.DEFAULT_ORDER) -> PolyFn:
    v = spec.variant
    if v is ExtremalKind.LEMMA1:
        return PolyFn((lemma1_extremal_series(spec.n, spec.M, N),))
    if v is ExtremalKind.CLASSICAL_F0:
        return PolyFn((lemma1_extremal_series(2, spec.M, N),))

    params = spec.params
    M = params.M
    comps = [log_component(M[0])]
    if v is ExtremalKind.G1:
        for k in range(1, params.m):
            pk = params.p[k - 1]
            comps.append(ser.monomial(pk, -M[k] / math.factorial(pk)))
        return PolyFn(tuple(comps), Kind.CONJUGATE)
    for k in range(1, params.m):
        comps.append(ser.monomial(1, -M[k]))
    return PolyFn(tuple(comps), Kind.MODULUS)


def g2_profile(spec: ExtremalSpec, x: float) -> float:
    """Extremal restricted to the real segment ``[0, 1]``."""
    if spec.variant not in (ExtremalKind.G1, ExtremalKind.G4):
        raise ParamError("real-axis profile exists only for G1 and G4")
    if not 0.0 <= x <= 1.0:
        raise ValueError("x must lie in [0, 1]")
    params = spec.params
    M = params.M
    val = M[0] ** 2 * x + (M[0] ** 3 - M[0]) * math.log1p(-x / M[0])
    for k in range(1, params.m):
        if spec.variant is ExtremalKind.G1:
            pk = params.p[k - 1]
            val -= M[k] * x ** (k + pk) / math.factorial(pk)
        else:
            val -= M[k] * x ** (2 * k + 1)
    return val


class WitnessError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Witness:
    x1: float
    x2: float
    epsilon: float
    radius: float
    second_zero: Optional[float]

    @property
    def pair(self) -> tuple[complex, complex]:
        return complex(self.x1), complex(self.x2)


def _bisect_to_machine(f, a: float, b: float) -> float:
    # f(a) < 0 <= f(b); stop when the midpoint no longer splits the interval
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if f(mid) < 0:
            a = mid
        else:
            b = mid
    return a if abs(f(a)) <= abs(f(b)) else b


def sharpness_witness(spec: ExtremalSpec, r: float) -> Witness:
    """Two distinct points of ``D_r`` with the same image under the extremal.

    ``x1 = r0 + eps`` sits past the peak of the real profile ``g`` at the
    univalence radius ``r0``; ``eps`` is half the gap to ``r``, capped at half
    the gap to the second zero of ``g`` when ``g(1) <= 0``. ``x2 < r0`` solves
    ``g(x2) = g(x1)`` on the increasing branch.
    """
    if spec.variant not in (ExtremalKind.G1, ExtremalKind.G4):
        raise ParamError("witness construction exists only for G1 and G4")
    r0 = landau_radii(spec.params).radius
    if not r0 < r <= 1.0:
        raise ValueError(f"need r0 < r <= 1, got r = {r} with r0 = {r0}")
    g = lambda x: g2_profile(spec, x)  # noqa: E731
    peak = g(r0)
    if not peak > 0:
        raise WitnessError("profile does not rise above zero; the construction does not apply")

    eps = 0.5 * (r - r0)
    r2 = None
    if g(1.0) <= 0:
        # second zero on the decreasing branch
        r2, _, _ = solve_monotone_root(g, r0, 1.0, include_hi=True)
        eps = min(eps, 0.5 * (r2 - r0))
    x1 = r0 + eps
    target = g(x1)
    x2 = _bisect_to_machine(lambda x: g(x) - target, 0.0, r0)
    if not 0.0 < x2 < r0:
        raise WitnessError("no partner point on the increasing branch")
    return Witness(x1=x1, x2=x2, epsilon=eps, radius=r, second_zero=r2)
