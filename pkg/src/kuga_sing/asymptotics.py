"""Radial growth models near a boundary divisor.

Three families of one-variable integrals carry the boundary estimates:

* the Petersson norm along the flow ``Ω_0 + itQ`` grows like ``t^rank(Q)``;
* ``∫_ε^R |log r|^a dr/r`` is ``o(ε^-α)`` for every ``α > 0``;
* ``∫_ε^R r^(1 - 2ν/m) dr`` is bounded, logarithmic or a power of ``1/ε``
  according as the pole order ``ν`` is ``< m``, ``= m`` or ``> m``.

All unspecified constants are normalised away by fitting slopes rather than
values.  Integrals are computed by adaptive quadrature and cross-checked
against closed forms.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import integrate

__all__ = [
    "GrowthClass",
    "geometric_grid",
    "loglog_slope",
    "petersson_flow_exponent",
    "boundary_integral",
    "boundary_integral_closed",
    "boundary_integral_quad",
    "boundary_decay_profile",
    "pole_integral_closed",
    "pole_integral_quad",
    "pole_model_classify",
    "SNCResult",
    "snc_convergence",
]

QUAD_ABS_FLOOR = 1e-14
QUAD_REL = 1e-10
BOUNDED_RTOL = 1e-3
LOG_SLOPE_RTOL = 0.02


@dataclass(frozen=True)
class GrowthClass:
    kind: str
    exponent: float | None = None

    def __post_init__(self):
        if self.kind not in ("bounded", "logarithmic", "power"):
            raise ValueError(f"unknown growth kind {self.kind!r}")
        if self.kind == "power" and not (self.exponent and self.exponent > 0):
            raise ValueError("power growth needs a positive exponent")


def geometric_grid(start: float = 0.5, ratio: float = 0.5, count: int = 40) -> np.ndarray:
    return start * ratio ** np.arange(count)


def _last_decade(x: np.ndarray) -> np.ndarray:
    """Indices of grid points within a factor 10 of the extreme end."""
    x = np.asarray(x, dtype=float)
    if x[-1] > x[0]:
        return np.nonzero(x >= x[-1] / 10)[0]
    return np.nonzero(x <= x[-1] * 10)[0]


def loglog_slope(x, y) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def petersson_flow_exponent(im_omega0, Q, t_grid: Sequence[float] | None = None) -> float:
    """Fitted growth exponent of ``det(Im Ω_0 + tQ)`` over the top decade of ``t``."""
    P = np.asarray(im_omega0, dtype=float)
    Q = np.asarray(Q, dtype=float)
    if P.shape != Q.shape or P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError("Im Ω_0 and Q must be square matrices of the same size")
    if np.abs(Q - Q.T).max() > 0 or np.abs(P - P.T).max() > 0:
        raise ValueError("Im Ω_0 and Q must be symmetric")
    scale = max(1.0, np.abs(Q).max())
    if np.linalg.eigvalsh(Q).min() < -1e-12 * scale:
        raise ValueError("Q is not positive semidefinite")
    if np.linalg.eigvalsh(P).min() <= 0:
        raise ValueError("Im Ω_0 is not positive definite")
    t = np.logspace(0, 6, 61) if t_grid is None else np.asarray(t_grid, dtype=float)
    if np.any(np.diff(t) <= 0) or t[-1] < 1e3:
        raise ValueError("t_grid must be increasing with max >= 1e3")
    idx = _last_decade(t)
    dets = np.array([np.linalg.det(P + ti * Q) for ti in t[idx]])
    return loglog_slope(t[idx], dets)


def boundary_integral_closed(a: float, eps: float, R: float) -> float:
    """``∫_ε^R |log r|^a dr / r`` via ``s = -log r``."""
    lo, hi = -math.log(R), -math.log(eps)
    if a == -1:
        return math.log(hi) - math.log(lo)
    return (hi ** (a + 1) - lo ** (a + 1)) / (a + 1)


def _decade_breaks(eps: float, R: float) -> list[float]:
    pts = [eps]
    x = eps * 10
    while x < R:
        pts.append(x)
        x *= 10
    pts.append(R)
    return pts


def boundary_integral_quad(a: float, eps: float, R: float) -> float:
    """Same integral by adaptive quadrature in ``r``, one decade at a time."""
    f = lambda r: abs(math.log(r)) ** a / r
    pts = _decade_breaks(eps, R)
    return math.fsum(
        integrate.quad(f, lo, hi, epsabs=QUAD_ABS_FLOOR, epsrel=QUAD_REL, limit=200)[0]
        for lo, hi in zip(pts, pts[1:])
    )


def boundary_integral(a: float, eps: float, R: float, rtol: float = 1e-6) -> tuple[float, float]:
    """Return ``(quadrature, closed_form)``; raise if they disagree beyond ``rtol``."""
    if not 0 < eps < R < 1:
        raise ValueError(f"need 0 < eps < R < 1, got eps={eps}, R={R}")
    q = boundary_integral_quad(a, eps, R)
    c = boundary_integral_closed(a, eps, R)
    if abs(q - c) > rtol * max(abs(c), QUAD_ABS_FLOOR):
        raise ArithmeticError(f"quadrature {q} and closed form {c} disagree")
    return q, c


def boundary_decay_profile(a: float, alpha: float, eps_grid, R: float = 0.5) -> np.ndarray:
    """``ε^α ∫_ε^R |log r|^a dr/r`` along ``eps_grid``."""
    return np.array([boundary_integral(a, e, R)[0] * e**alpha for e in eps_grid])


def pole_integral_closed(nu: int, m: int, eps: float, R: float = 0.5) -> float:
    """``∫_ε^R r^(1 - 2ν/m) dr``."""
    p = 1 - 2 * nu / m
    if nu == m:
        return math.log(R / eps)
    return (R ** (p + 1) - eps ** (p + 1)) / (p + 1)


def pole_integral_quad(nu: int, m: int, eps: float, R: float = 0.5) -> float:
    p = 1 - 2 * nu / m
    pts = _decade_breaks(eps, R)
    return math.fsum(
        integrate.quad(lambda r: r**p, lo, hi, epsabs=QUAD_ABS_FLOOR, epsrel=QUAD_REL)[0]
        for lo, hi in zip(pts, pts[1:])
    )


def pole_model_classify(nu: int, m: int, eps_grid=None, R: float = 0.5, rtol: float = 1e-6) -> GrowthClass:
    """Classify the growth of ``∫_ε^R r^(1-2ν/m) dr`` as ``ε -> 0``.

    Only the last decade of the grid is used.  Bounded: relative change below
    1e-3 there.  Logarithmic: the increments per unit of ``log(1/ε)`` agree
    within 2%; increments shrinking steadily also count as bounded.
    Otherwise power, with exponent the log-log slope against ``1/ε``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    eps = geometric_grid() if eps_grid is None else np.asarray(eps_grid, dtype=float)
    if eps.ndim != 1 or len(eps) < 3 or np.any(np.diff(eps) >= 0) or eps[0] > R or eps[-1] <= 0:
        raise ValueError("eps_grid must be strictly decreasing inside (0, R] with >= 3 points")
    if eps[-1] > 1e-6:
        raise ValueError("eps_grid must reach 1e-6 or below")
    ratios = eps[1:] / eps[:-1]
    if np.ptp(np.log(ratios)) > 1e-9 * abs(np.log(ratios)).max():
        raise ValueError("eps_grid must be geometric")

    idx = _last_decade(eps)
    if len(idx) < 3:
        raise ValueError("eps_grid needs at least 3 points in its last decade")
    e = eps[idx]
    vals = np.array([pole_integral_quad(nu, m, x, R) for x in e])
    closed = np.array([pole_integral_closed(nu, m, x, R) for x in e])
    if np.any(np.abs(vals - closed) > rtol * np.abs(closed)):
        raise ArithmeticError("quadrature disagrees with the closed form")

    if abs(vals[-1] - vals[0]) < BOUNDED_RTOL * abs(vals[-1]):
        return GrowthClass("bounded")
    L = np.log(1 / e)
    incr = np.diff(vals) / np.diff(L)
    if incr.min() > 0 and incr.max() / incr.min() - 1 < LOG_SLOPE_RTOL:
        return GrowthClass("logarithmic")
    # slowly converging tails (large m): increments shrink geometrically
    if np.all(incr[1:] < (1 - LOG_SLOPE_RTOL) * incr[:-1]):
        return GrowthClass("bounded")
    return GrowthClass("power", loglog_slope(1 / e, vals))


@dataclass(frozen=True)
class SNCResult:
    converges: bool
    exponents: tuple[float, ...]
    margin: float


def snc_convergence(m: int, k: int, delta_exponents: Sequence[float] | None = None) -> SNCResult:
    """Check ``∫_ε^1 r^δ dr = O(1)`` (i.e. ``δ > -1``) on each of ``k`` branches.

    The default radial exponent of every branch is ``2/m - 1``.  ``margin`` is
    ``min(δ) + 1``, the distance to the divergence threshold.
    """
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    if delta_exponents is None:
        exps = (2 / m - 1,) * k
    else:
        exps = tuple(float(d) for d in delta_exponents)
        if len(exps) != k:
            raise ValueError(f"expected {k} exponents, got {len(exps)}")
    margin = min(exps) + 1
    return SNCResult(margin > 0, exps, margin)
