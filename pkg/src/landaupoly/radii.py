"""Univalence radii and schlicht-disk radii of the Landau-type theorems.

Each theorem variant has a strictly decreasing *profile* ``G(r)`` with
``G(0) = 1``; its unique zero in the admissible interval is the univalence
radius. The schlicht radius is then a closed formula at that zero.

Variants
--------
T1
    poly-analytic, ``|f_0'| < M_0``, ``|f_k^(p_k)| <= M_k`` with a zero of
    order ``p_k`` at the origin.
T2
    poly-analytic, ``|f_k| <= M_k``.
T3
    as T2 plus ``f_k'(0) = 1``; radius of full starlikeness, no schlicht disk.
T4
    reduced poly-analytic, ``|f_0'| < M_0``, ``|f_k'| <= M_k``.
T5
    reduced poly-analytic, ``|f_k| <= M_k`` and ``f_k'(0) = 1``.
TC
    the earlier poly-analytic result with a common bound ``M`` and
    ``f_k'(0) = 1`` for every component.
CLASSICAL
    the analytic Landau theorem (closed form, no profile).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

BISECTION_TOL = 1e-13
POLE_GUARD = 1e-9


class Variant(enum.Enum):
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"
    T5 = "t5"
    TC = "tc"
    CLASSICAL = "classical"

    @classmethod
    def parse(cls, name) -> Variant:
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise ParamError(f"unknown theorem variant {name!r}") from None


class ParamError(ValueError):
    """Parameters violate the hypotheses of the chosen theorem."""


class BracketError(ValueError):
    pass


class NoRootError(ArithmeticError):
    """The profile never changes sign on the admissible interval."""


@dataclass(frozen=True)
class LandauParams:
    variant: Variant
    m: int
    M: tuple
    p: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant.parse(self.variant))
        object.__setattr__(self, "M", tuple(float(x) for x in np.atleast_1d(self.M)))
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        self._validate()

    def _validate(self):
        v, m, M, p = self.variant, self.m, self.M, self.p
        if not isinstance(m, (int, np.integer)) or m < 1:
            raise ParamError("m must be a positive integer")
        if any(not math.isfinite(x) for x in M):
            raise ParamError("M values must be finite")
        if v is Variant.CLASSICAL:
            if m != 1 or len(M) != 1:
                raise ParamError("classical theorem takes a single M (m = 1)")
            if M[0] < 1:
                raise ParamError("M must be at least 1")
            return
        if len(M) != m:
            raise ParamError(f"expected {m} M values, got {len(M)}")
        if any(x < 0 for x in M):
            raise ParamError("M_k must be non-negative")
        if v is Variant.T1:
            if len(p) != m - 1:
                raise ParamError(f"expected {m - 1} p values, got {len(p)}")
            if any(x < 1 for x in p):
                raise ParamError("p_k must be positive integers")
        elif p:
            raise ParamError("p is only used by theorem t1")
        if v in (Variant.T1, Variant.T4):
            if not M[0] > 1:
                raise ParamError("M0 must exceed 1")
        elif v is Variant.TC:
            if len(set(M)) != 1:
                raise ParamError("theorem tc uses one common bound M")
            if not M[0] > 1:
                raise ParamError("M must exceed 1")
        else:
            if M[0] < 1:
                raise ParamError("M0 must be at least 1")
            if v in (Variant.T3, Variant.T5) and any(x < 1 for x in M):
                raise ParamError("every M_k must be at least 1")

    @property
    def closed_interval(self) -> bool:
        """Whether the profile is defined at the right end of its interval."""
        return self.variant in (Variant.T1, Variant.T4)

    @property
    def bracket(self) -> tuple[float, float]:
        """Admissible ``(lo, hi)`` for the profile variable.

        ``hi`` is excluded unless :attr:`closed_interval` holds.
        """
        if self.variant is Variant.TC and self.m >= 2:
            return (0.0, min(1.0, 1.0 / (self.m - 1)))
        return (0.0, 1.0)

    def to_dict(self) -> dict:
        return {"variant": self.variant.value, "m": self.m, "M": list(self.M), "p": list(self.p)}

    @classmethod
    def from_dict(cls, d: dict) -> LandauParams:
        return cls(Variant.parse(d["variant"]), int(d["m"]), tuple(d["M"]), tuple(d.get("p", ())))


def make_params(variant, m: int, M, p: Sequence[int] = ()) -> LandauParams:
    """Convenience constructor; a single ``M`` is broadcast to all ``m`` components."""
    variant = Variant.parse(variant)
    M = tuple(np.atleast_1d(np.asarray(M, dtype=float)))
    if variant is Variant.CLASSICAL:
        m = 1
    elif len(M) == 1 and m > 1:
        M = M * m
    if variant is Variant.T1 and not p:
        p = (1,) * (m - 1)
    return LandauParams(variant, m, M, tuple(p))


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    schlicht_radius: Optional[float]
    degenerate: bool = False
    bracket: tuple = (0.0, 1.0)
    residual: float = 0.0
    iterations: int = 0
    schlicht_clamped: bool = False
    params: Optional[LandauParams] = field(default=None, compare=False)


def _lemma_weight(Mk: float) -> float:
    return Mk - 1.0 / Mk


def profile_value(params: LandauParams, r: float) -> float:
    """Left-hand side of the radius equation of ``params.variant`` at ``r``."""
    v, m, M, p = params.variant, params.m, params.M, params.p
    if v is Variant.CLASSICAL:
        raise ParamError("the classical theorem has a closed form, not a profile")
    lo, hi = params.bracket
    if not (lo <= r <= hi) or (r == hi and not params.closed_interval):
        raise ValueError(f"r = {r} outside the admissible interval of {v.value}")
    ks = range(1, m)

    if v is Variant.T1:
        M0 = M[0]
        val = M0 * (1 - M0 * r) / (M0 - r)
        for k in ks:
            pk = p[k - 1]
            val -= (k + pk) * M[k] * r ** (k + pk - 1) / math.factorial(pk)
        return val
    if v is Variant.T4:
        M0 = M[0]
        val = M0 * (1 - M0 * r) / (M0 - r)
        for k in ks:
            val -= M[k] * (2 * k + 1) * r ** (2 * k)
        return val
    if v is Variant.T2:
        val = 1.0 - _lemma_weight(M[0]) * (2 - r) * r / (1 - r) ** 2
        for k in ks:
            val -= r**k * M[k] / (1 - r**2)
        for k in ks:
            val -= k * r**k * M[k]
        return val
    if v is Variant.T3:
        val = 1.0
        for k in range(m):
            val -= _lemma_weight(M[k]) * r ** (k + 1) * (2 - r + k * (1 - r)) / (1 - r) ** 2
        for k in ks:
            val -= (k + 1) * r**k
        return val
    if v is Variant.T5:
        val = 1.0
        for k in range(m):
            val -= _lemma_weight(M[k]) * (2 * k * (1 - r) + (2 - r)) * r ** (2 * k + 1) / (1 - r) ** 2
        for k in ks:
            val -= (2 * k + 1) * r ** (2 * k)
        return val
    # Variant.TC
    Mc = M[0]
    s = r * (2 - r) / (1 - r) ** 2
    for k in ks:
        s += r**k * (1 + k - k * r) / (1 - k * r) ** 2
    return 1.0 - Mc * s


def solve_monotone_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    include_hi: bool = False,
    tol: float = BISECTION_TOL,
    grid_steps: int = 60,
) -> tuple[float, float, int]:
    """Bisection for the zero of a decreasing function with ``f(lo) > 0``.

    The right end may be a pole, so a sign change is first searched on the
    points ``hi - (hi - lo) / 2**j`` marching toward ``hi`` (and at ``hi``
    itself when ``include_hi``). Raises :class:`NoRootError` if the function
    never becomes non-positive there.

    Returns ``(root, |f(root)|, iterations)``.
    """
    flo = f(lo)
    if not flo > 0:
        raise BracketError(f"need f(lo) > 0, got {flo}")
    a = lo
    b = None
    probes = [hi - (hi - lo) / 2.0**j for j in range(1, grid_steps + 1)]
    if include_hi:
        probes.append(hi)
    for x in probes:
        if x <= a:
            continue
        if f(x) <= 0:
            b = x
            break
        a = x
    if b is None:
        raise NoRootError("no sign change on the admissible interval")

    it = 0
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if f(mid) > 0:
            a = mid
        else:
            b = mid
        it += 1
    root = 0.5 * (a + b)
    return root, abs(f(root)), it


def _clamp(value: float) -> tuple[float, bool]:
    if value < 0:
        return 0.0, True
    return value, False


def _log_part(M0: float, r: float) -> float:
    return M0**2 * r + (M0**3 - M0) * math.log1p(-r / M0)


def schlicht_radius(params: LandauParams, r: float) -> Optional[float]:
    """Unclamped schlicht-radius formula evaluated at a univalence radius ``r``."""
    v, m, M, p = params.variant, params.m, params.M, params.p
    ks = range(1, m)
    if v is Variant.T3:
        return None
    if v is Variant.CLASSICAL:
        return M[0] * r**2
    if v is Variant.T1:
        return _log_part(M[0], r) - sum(
            M[k] * r ** (p[k - 1] + k) / math.factorial(p[k - 1]) for k in ks
        )
    if v is Variant.T4:
        return _log_part(M[0], r) - sum(M[k] * r ** (2 * k + 1) for k in ks)
    if v is Variant.T2:
        w = _lemma_weight(M[0])
        head = w * r**2 / (1 - r) if w else 0.0
        return r - head - sum(M[k] * r**k for k in ks)
    if v is Variant.T5:
        # r (r^2 - r^(2m)) / (1 - r^2) written as a finite geometric sum
        geo = r * sum(r ** (2 * k) for k in ks)
        tail = sum(_lemma_weight(M[k]) * r ** (2 * k + 2) for k in range(m) if _lemma_weight(M[k]))
        return r - geo - (tail / (1 - r) if tail else 0.0)
    # Variant.TC; r^2 (1 - r^(m-1)) / (1 - r) is the geometric sum r^2 + ... + r^m
    geo = r**2 * sum(r**j for j in range(m - 1))
    return r - geo - M[0] * sum(r ** (k + 2) for k in range(m)) / (1 - r)


def classical_radius(M: float) -> float:
    return 1.0 / (M + math.sqrt(M * M - 1.0))


def landau_radii(params: LandauParams) -> RadiusResult:
    """Solve for the univalence radius and the schlicht radius of ``params``."""
    v = params.variant
    if v is Variant.CLASSICAL:
        M = params.M[0]
        r0 = classical_radius(M)
        return RadiusResult(
            radius=r0,
            schlicht_radius=M * r0**2,
            bracket=(r0, r0),
            residual=abs(r0 * (M + math.sqrt(M * M - 1.0)) - 1.0),
            params=params,
        )

    lo, hi = params.bracket
    closed = params.closed_interval
    if not closed:
        hi = hi - POLE_GUARD
    try:
        root, residual, it = solve_monotone_root(
            lambda r: profile_value(params, r), lo, hi, include_hi=closed
        )
        degenerate = False
    except NoRootError:
        root, residual, it, degenerate = 1.0, 0.0, 0, True

    R = schlicht_radius(params, root)
    clamped = False
    if R is not None:
        R, clamped = _clamp(R)
    return RadiusResult(
        radius=root,
        schlicht_radius=R,
        degenerate=degenerate,
        bracket=(lo, hi),
        residual=residual,
        iterations=it,
        schlicht_clamped=clamped,
        params=params,
    )


def is_degenerate(params: LandauParams) -> bool:
    """True when every coefficient of the profile vanishes, so ``G`` is identically 1."""
    v, m, M = params.variant, params.m, params.M
    if v in (Variant.T2,):
        return M[0] == 1.0 and all(x == 0 for x in M[1:])
    if v in (Variant.T3, Variant.T5):
        return m == 1 and M[0] == 1.0
    return False
