"""Integral quadratic forms on an isotropic lattice and their characters.

A form on ``I`` (rank ``g'``) is stored by its upper triangle
``q_ij``, ``i <= j``, in row-major order, and the symmetric matrix has
``Q_ii = q_ii``, ``Q_ij = Q_ji = q_ij``.  Characters use the same indexing
with pairing ``<χ, Q> = Σ χ_ij q_ij``; the coordinate lattice is the default
choice of lattice.

Rank and positivity are decided exactly: Bareiss elimination for the rank,
symmetric elimination over ``Fraction`` for semi-definiteness.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

__all__ = [
    "QuadForm",
    "Character",
    "Membership",
    "Extension",
    "bareiss_rank",
    "is_psd",
    "cone_membership",
    "is_primitive",
    "dual_character",
    "character_extends",
    "ext_gcd",
]


def _triangle_size(gp: int) -> int:
    return gp * (gp + 1) // 2


def _pairs(gp: int):
    return [(i, j) for i in range(gp) for j in range(i, gp)]


def _g_prime_from_len(n: int) -> int:
    gp = (isqrt(8 * n + 1) - 1) // 2
    if _triangle_size(gp) != n or gp < 1:
        raise ValueError(f"{n} is not a triangular number g'(g'+1)/2")
    return gp


@dataclass(frozen=True)
class QuadForm:
    g_prime: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != _triangle_size(self.g_prime):
            raise ValueError(f"expected {_triangle_size(self.g_prime)} coordinates for g'={self.g_prime}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "QuadForm":
        return cls(_g_prime_from_len(len(coords)), tuple(coords))

    @classmethod
    def from_matrix(cls, M) -> "QuadForm":
        gp = len(M)
        for i in range(gp):
            for j in range(gp):
                if M[i][j] != M[j][i]:
                    raise ValueError("matrix is not symmetric")
        return cls(gp, tuple(int(M[i][j]) for i, j in _pairs(gp)))

    def matrix(self) -> list[list[int]]:
        gp = self.g_prime
        M = [[0] * gp for _ in range(gp)]
        for (i, j), q in zip(_pairs(gp), self.coords):
            M[i][j] = M[j][i] = q
        return M

    def __mul__(self, k: int) -> "QuadForm":
        return QuadForm(self.g_prime, tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def to_list(self) -> list[int]:
        return list(self.coords)


@dataclass(frozen=True)
class Character:
    coords: tuple[int, ...]

    def pair(self, Q: QuadForm) -> int:
        if len(self.coords) != len(Q.coords):
            raise ValueError("character and form live on different lattices")
        return sum(c * q for c, q in zip(self.coords, Q.coords))

    def to_list(self) -> list[int]:
        return list(self.coords)


class Membership(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


class Extension(str, Enum):
    NONVANISHING = "extends_nonvanishing"
    VANISHING = "extends_vanishing"
    NONE = "does_not_extend"


def bareiss_rank(M: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    rank, prev = 0, 1
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for r in range(rank + 1, rows):
            for k in range(c + 1, cols):
                A[r][k] = (A[r][k] * p - A[r][c] * A[rank][k]) // prev
            A[r][c] = 0
        prev = p
        rank += 1
    return rank


def is_psd(M: Sequence[Sequence]) -> bool:
    """Exact semi-definiteness via symmetric elimination.

    A zero pivot forces its whole row to vanish; a negative pivot is fatal.
    """
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    for k in range(n):
        p = A[k][k]
        if p < 0:
            return False
        if p == 0:
            if any(A[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return True


def cone_membership(Q: QuadForm) -> tuple[Membership, int]:
    """Positive definite (interior), singular semi-definite (boundary) or outside.

    Kernels of rational forms are rational, so every singular psd integer
    form lies on the rational boundary.
    """
    M = Q.matrix()
    rank = bareiss_rank(M)
    if not is_psd(M):
        return Membership.OUTSIDE, rank
    if rank == Q.g_prime:
        return Membership.INTERIOR, rank
    return Membership.BOUNDARY, rank


def is_primitive(Q: QuadForm) -> bool:
    g = 0
    for c in Q.coords:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("the zero form is not primitive")
    return g == 1


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(d, x, y)`` with ``a x + b y = d = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def dual_character(Q: QuadForm) -> Character:
    """A character with ``<χ, Q> = 1``, built by folding extended gcd over the coordinates."""
    if not is_primitive(Q):
        raise ValueError(f"form {list(Q.coords)} is not primitive")
    chi = [0] * len(Q.coords)
    d = 0
    for i, c in enumerate(Q.coords):
        # invariant: sum(chi[k] * coords[k] for k < i) == d
        d2, x, y = ext_gcd(d, c)
        chi = [x * v for v in chi]
        chi[i] = y
        d = d2
    out = Character(tuple(chi))
    if out.pair(Q) != 1:
        raise AssertionError("dual character certificate failed")
    return out


def character_extends(chi: Character, Q: QuadForm) -> Extension:
    """How ``e^χ`` behaves across the boundary divisor of the ray through ``Q``."""
    v = chi.pair(Q)
    if v == 0:
        return Extension.NONVANISHING
    if v > 0:
        return Extension.VANISHING
    return Extension.NONE
