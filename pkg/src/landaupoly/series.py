"""Truncated Taylor series for the analytic components of a poly-analytic map.

Coefficients are stored lowest order first, so ``coeffs[n]`` multiplies
``z**n``. Every series is interpreted on the open unit disk only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

DEFAULT_ORDER = 64
SINGULAR_TOL = 1e-12
NORMALIZE_EPS = 1e-12


class DomainError(ValueError):
    """Raised when a point lies outside the open unit disk."""


class SingularSeriesError(ZeroDivisionError):
    """Raised when dividing by a series whose constant term vanishes."""


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """Taylor polynomial ``c_0 + c_1 z + ... + c_N z**N``."""

    coeffs: np.ndarray

    # keep numpy scalars from treating the series as a sequence in ``a * s``
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def truncation_order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __call__(self, z):
        return eval_series(self, z)

    def __add__(self, other: AnalyticSeries) -> AnalyticSeries:
        n = max(len(self), len(other))
        return AnalyticSeries(_padded(self.coeffs, n) + _padded(other.coeffs, n))

    def __sub__(self, other: AnalyticSeries) -> AnalyticSeries:
        return self + (-1.0) * other

    def __mul__(self, scalar) -> AnalyticSeries:
        if isinstance(scalar, AnalyticSeries):
            return NotImplemented
        return AnalyticSeries(complex(scalar) * self.coeffs)

    __rmul__ = __mul__

    def __neg__(self):
        return (-1.0) * self

    def __repr__(self):
        return f"AnalyticSeries(N={self.truncation_order}, coeffs={self.coeffs!r})"

    def coefficient_sum(self) -> float:
        """Sum of coefficient moduli, an upper bound for ``sup |f|`` on the disk."""
        return float(np.abs(self.coeffs).sum())

    def derivative_at_zero(self) -> complex:
        return complex(self.coeffs[1]) if len(self) > 1 else 0j


def _padded(c: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=complex)
    out[: c.size] = c[:n]
    return out


def _check_disk(z):
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("series are only defined on the open unit disk |z| < 1")


def monomial(n: int, coeff: complex = 1.0) -> AnalyticSeries:
    c = np.zeros(n + 1, dtype=complex)
    c[n] = coeff
    return AnalyticSeries(c)


def eval_series(s: AnalyticSeries, z):
    """Evaluate the Taylor polynomial at ``z`` (scalar or array), ``|z| < 1``."""
    z = np.asarray(z, dtype=complex)
    _check_disk(z)
    out = npoly.polyval(z, s.coeffs)
    return complex(out) if out.ndim == 0 else out


def differentiate(s: AnalyticSeries) -> AnalyticSeries:
    """Term-by-term derivative; the order drops by one (order 0 maps to zero)."""
    if s.truncation_order == 0:
        return AnalyticSeries([0.0])
    n = np.arange(1, len(s))
    return AnalyticSeries(n * s.coeffs[1:])


def integrate(s: AnalyticSeries) -> AnalyticSeries:
    """Antiderivative vanishing at the origin."""
    n = np.arange(1, len(s) + 1)
    return AnalyticSeries(np.concatenate([[0.0], s.coeffs / n]))


def cauchy_product(a: AnalyticSeries, b: AnalyticSeries, N: int | None = None) -> AnalyticSeries:
    """Product of two series truncated at order ``N`` (default: the larger order)."""
    if N is None:
        N = max(a.truncation_order, b.truncation_order)
    return AnalyticSeries(_padded(np.convolve(a.coeffs, b.coeffs), N + 1))


def series_divide(num: AnalyticSeries, den: AnalyticSeries, N: int = DEFAULT_ORDER) -> AnalyticSeries:
    """Quotient ``num / den`` expanded through order ``N``.

    The coefficients come from the usual recurrence
    ``q_n = (a_n - sum_{j=1..n} d_j q_{n-j}) / d_0``.
    """
    d0 = den.coeffs[0]
    if abs(d0) < SINGULAR_TOL:
        raise SingularSeriesError("denominator has a vanishing constant term")
    a = _padded(num.coeffs, N + 1)
    d = _padded(den.coeffs, N + 1)
    q = np.zeros(N + 1, dtype=complex)
    for n in range(N + 1):
        acc = a[n] - np.dot(d[1 : n + 1], q[n - 1 :: -1][:n]) if n else a[0]
        q[n] = acc / d0
    return AnalyticSeries(q)


def normalize_bounded(raw: AnalyticSeries, bound: float) -> AnalyticSeries:
    """Rescale so the coefficient moduli sum to at most ``bound``.

    Since ``|f(z)| <= sum |c_n|`` on the unit disk this certifies
    ``sup |f| <= bound`` without any boundary search.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    total = raw.coefficient_sum()
    if total == 0.0:
        raise ValueError("cannot normalize the zero series")
    scale = bound / (total + NORMALIZE_EPS)
    out = raw.coeffs * scale
    # rounding can leave the sum an ulp or two above the bound
    while np.abs(out).sum() > bound:
        scale = np.nextafter(scale, 0.0) * (1.0 - 1e-15)
        out = raw.coeffs * scale
    return AnalyticSeries(out)
