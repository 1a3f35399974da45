"""Poly-analytic and reduced poly-analytic functions on the unit disk.

A function of order ``m`` is stored as its analytic components
``f_0, ..., f_{m-1}`` together with the way they are weighted:

* ``Kind.CONJUGATE``: ``F(z) = sum_k conj(z)**k f_k(z)``
* ``Kind.MODULUS``:   ``F(z) = sum_k |z|**(2k) f_k(z)``

Components are normally truncated Taylor series. Extremal functions whose
leading component involves a logarithm carry a :class:`ClosedAnalytic`
instead, which evaluates the exact value and derivative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .series import AnalyticSeries, DomainError, differentiate, eval_series


class Kind(enum.Enum):
    CONJUGATE = "conjugate"
    MODULUS = "modulus"


class UnsupportedKindError(TypeError):
    pass


@dataclass(frozen=True)
class ClosedAnalytic:
    """Analytic function given by exact evaluators for value and derivative."""

    value: Callable
    derivative: Callable
    name: str = "closed"

    def __call__(self, z):
        return self.value(z)


Component = Union[AnalyticSeries, ClosedAnalytic]


@dataclass(frozen=True)
class WirtingerData:
    F_z: complex
    F_zbar: complex

    @property
    def jacobian(self) -> float:
        return abs(self.F_z) ** 2 - abs(self.F_zbar) ** 2

    @property
    def lambda_big(self) -> float:
        return abs(self.F_z) + abs(self.F_zbar)

    @property
    def lambda_small(self) -> float:
        return abs(abs(self.F_z) - abs(self.F_zbar))


@dataclass(frozen=True)
class PolyFn:
    components: tuple
    kind: Kind = Kind.CONJUGATE

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a poly-analytic function needs at least one component")
        for c in comps:
            if not isinstance(c, (AnalyticSeries, ClosedAnalytic)):
                raise TypeError(f"unsupported component type {type(c).__name__}")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def order(self) -> int:
        return len(self.components)

    @property
    def is_closed(self) -> bool:
        """True when some component is a closed-form evaluator, not a series."""
        return any(isinstance(c, ClosedAnalytic) for c in self.components)

    def series_components(self) -> list[AnalyticSeries]:
        if self.is_closed:
            raise TypeError("function has closed-form components")
        return list(self.components)

    def __call__(self, z):
        return eval_poly(self, z)


def from_coeffs(coeff_lists: Sequence[Sequence[complex]], kind: Kind = Kind.CONJUGATE) -> PolyFn:
    """Build a :class:`PolyFn` from plain coefficient lists, one per component."""
    return PolyFn(tuple(AnalyticSeries(c) for c in coeff_lists), kind)


def _value(c: Component, z):
    if isinstance(c, AnalyticSeries):
        return eval_series(c, z)
    return c.value(z)


def _deriv(c: Component, z):
    if isinstance(c, AnalyticSeries):
        return eval_series(differentiate(c), z)
    return c.derivative(z)


def _check_disk(z):
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("poly-analytic functions are evaluated on |z| < 1 only")


def _weight(F: PolyFn, z, zbar, k: int):
    if F.kind is Kind.CONJUGATE:
        return zbar**k
    return (zbar * z) ** k


def eval_poly(F: PolyFn, z):
    z = np.asarray(z, dtype=complex)
    _check_disk(z)
    zbar = np.conj(z)
    out = np.zeros_like(z)
    for k, c in enumerate(F.components):
        out = out + _weight(F, z, zbar, k) * _value(c, z)
    return complex(out) if out.ndim == 0 else out


def wirtinger_arrays(F: PolyFn, z):
    """Vectorised ``(F_z, F_zbar)`` at the points ``z``."""
    z = np.asarray(z, dtype=complex)
    _check_disk(z)
    zbar = np.conj(z)
    Fz = np.zeros_like(z)
    Fzb = np.zeros_like(z)
    for k, c in enumerate(F.components):
        fk = _value(c, z)
        dfk = _deriv(c, z)
        if F.kind is Kind.CONJUGATE:
            Fz = Fz + zbar**k * dfk
            if k:
                Fzb = Fzb + k * zbar ** (k - 1) * fk
        else:
            zk = z**k
            Fz = Fz + zbar**k * zk * dfk
            if k:
                Fz = Fz + k * zbar**k * z ** (k - 1) * fk
                Fzb = Fzb + k * zbar ** (k - 1) * zk * fk
    return Fz, Fzb


def wirtinger_derivs(F: PolyFn, z: complex) -> WirtingerData:
    Fz, Fzb = wirtinger_arrays(F, complex(z))
    return WirtingerData(complex(Fz), complex(Fzb))


def _dzbar(g: Callable, h: float, points: int) -> Callable:
    # (1 / (N h)) sum_j w_j g(z + h w_j) over the N-th roots of unity w_j;
    # exact on conj(z) and on z**n for n < N - 1, so the error is O(h**(N-2))
    w = np.exp(2j * np.pi * np.arange(points) / points)

    def stencil(z):
        return sum(wj * g(z + h * wj) for wj in w) / (points * h)

    return stencil


def order_residual(F: PolyFn, z: complex, h: float = 1e-3, points: int = 8) -> float:
    """Magnitude of a finite-difference estimate of the ``m``-th conjugate derivative.

    A poly-analytic function of order ``m`` is annihilated by ``d^m/dzbar^m``,
    so the result should be at the level of the stencil error.
    Only defined for ``Kind.CONJUGATE``. ``points=4`` gives the plain
    four-point cross, whose O(h**2) error is often too coarse for ``m >= 3``.
    """
    if F.kind is not Kind.CONJUGATE:
        raise UnsupportedKindError("order residual is only defined for conjugate-power functions")
    m = F.order
    if abs(z) + m * h >= 1.0:
        raise DomainError("stencil leaves the unit disk")
    g = F.__call__
    for _ in range(m):
        g = _dzbar(g, h, points)
    return float(abs(g(complex(z))))
