"""Siegel upper half space: action, factor of automorphy, Petersson density.

Points are complex symmetric ``g x g`` matrices with positive-definite
imaginary part.  A symplectic matrix ``[[A, B], [C, D]]`` (same basis
convention as :mod:`kuga_sing.symplectic`) acts by
``(A Ω + B)(C Ω + D)^{-1}`` with factor of automorphy ``det(C Ω + D)``.
The metric and volume normalisations are fixed to 1; only their
transformation laws are meaningful.
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "SiegelError",
    "validate_point",
    "blocks",
    "moebius_act",
    "factor_of_automorphy",
    "petersson_det_im",
    "volume_density",
    "random_siegel_point",
    "cocycle_error",
    "metric_invariance_error",
    "volume_invariance_error",
]

SYM_TOL = 1e-12
COND_MAX = 1e12


class SiegelError(ValueError):
    pass


def validate_point(omega, tol: float = SYM_TOL) -> np.ndarray:
    omega = np.asarray(omega, dtype=complex)
    if omega.ndim != 2 or omega.shape[0] != omega.shape[1]:
        raise SiegelError(f"expected a square matrix, got shape {omega.shape}")
    scale = max(1.0, np.abs(omega).max())
    if np.abs(omega - omega.T).max() > tol * scale:
        raise SiegelError("Ω is not symmetric")
    if np.linalg.eigvalsh(omega.imag).min() <= 0:
        raise SiegelError("Im Ω is not positive definite")
    return omega


def blocks(M):
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    if M.shape != (n, n) or n % 2:
        raise SiegelError(f"expected a 2g x 2g matrix, got shape {M.shape}")
    g = n // 2
    return M[:g, :g], M[:g, g:], M[g:, :g], M[g:, g:]


def _denominator(M, omega):
    A, B, C, D = blocks(M)
    if C.shape[0] != omega.shape[0]:
        raise SiegelError(f"matrix of genus {C.shape[0]} cannot act on a {omega.shape[0]}x{omega.shape[0]} point")
    return A, B, C @ omega + D


def moebius_act(M, omega) -> np.ndarray:
    omega = validate_point(omega)
    A, B, den = _denominator(M, omega)
    if np.linalg.cond(den) >= COND_MAX:
        raise SiegelError("C Ω + D is numerically singular")
    # X den = A Ω + B  <=>  den^T X^T = (A Ω + B)^T
    num = A @ omega + B
    X = np.linalg.solve(den.T, num.T).T
    # one step of iterative refinement on the residual
    X += np.linalg.solve(den.T, (num - X @ den).T).T
    # exact result is symmetric; drop the rounding-level antisymmetric part
    return (X + X.T) / 2


def factor_of_automorphy(M, omega) -> complex:
    omega = np.asarray(omega, dtype=complex)
    _, _, den = _denominator(M, omega)
    return complex(np.linalg.det(den))


def petersson_det_im(omega) -> float:
    """``det Im Ω``: the Petersson norm of the distinguished frame."""
    return float(np.linalg.det(np.asarray(omega, dtype=complex).imag))


def volume_density(omega) -> float:
    """``det(Im Ω)^-(g+1)`` against the flat volume on symmetric matrices."""
    omega = np.asarray(omega, dtype=complex)
    g = omega.shape[0]
    return petersson_det_im(omega) ** (-(g + 1))


def random_siegel_point(g: int, rng: np.random.Generator, eps: float = 0.1) -> np.ndarray:
    """``S + i(B B^T + eps I)`` with ``S`` symmetric and ``B`` uniform in [-1, 1]."""
    S = rng.uniform(-1, 1, size=(g, g))
    S = (S + S.T) / 2
    B = rng.uniform(-1, 1, size=(g, g))
    return S + 1j * (B @ B.T + eps * np.eye(g))


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def cocycle_error(M, Mp, omega) -> float:
    """Relative defect of ``j(M M', Ω) = j(M, M'Ω) j(M', Ω)``."""
    M, Mp = np.asarray(M, dtype=float), np.asarray(Mp, dtype=float)
    lhs = factor_of_automorphy(M @ Mp, omega)
    rhs = factor_of_automorphy(M, moebius_act(Mp, omega)) * factor_of_automorphy(Mp, omega)
    return _rel(lhs, rhs)


def metric_invariance_error(M, omega) -> float:
    """Relative defect of ``det Im(MΩ) |j(M, Ω)|^2 = det Im Ω``."""
    lhs = petersson_det_im(moebius_act(M, omega)) * abs(factor_of_automorphy(M, omega)) ** 2
    return _rel(lhs, petersson_det_im(omega))


def volume_invariance_error(M, omega) -> float:
    """Relative defect of ``density(MΩ) = density(Ω) |j(M, Ω)|^(2(g+1))``."""
    omega = np.asarray(omega, dtype=complex)
    g = omega.shape[0]
    lhs = volume_density(moebius_act(M, omega))
    rhs = volume_density(omega) * abs(factor_of_automorphy(M, omega)) ** (2 * (g + 1))
    return _rel(lhs, rhs)
