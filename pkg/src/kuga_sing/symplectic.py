"""Exact symplectic linear algebra over Q.

Convention: basis ``e_1..e_g, e_{g+1}..e_{2g}`` with ``(e_i, e_{g+i}) = 1``
and ``(e_{g+i}, e_i) = -1``, all other pairings zero.  The form is
``(x, y) = x^T J y`` with ``J = [[0, I], [-I, 0]]``.  Matrices act on column
vectors and are numpy arrays of ``dtype=object`` holding ints or
:class:`~fractions.Fraction`, so every comparison is exact.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = [
    "gram",
    "pairing",
    "as_exact",
    "identity",
    "is_symplectic",
    "transvection_pair",
    "symplectic_transvection",
    "isotropic_basis",
    "in_isotropic",
    "in_perp",
    "relation_report",
    "check_relations",
    "in_unipotent_radical",
    "random_word",
    "matrix_to_json",
    "matrix_from_json",
]


def gram(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=object)
    J[:] = 0
    for i in range(g):
        J[i, g + i] = 1
        J[g + i, i] = -1
    return J


def as_exact(a) -> np.ndarray:
    """Copy into an object array, converting floats through ``Fraction``."""
    arr = np.array(a, dtype=object)
    flat = arr.reshape(-1)
    for k, x in enumerate(flat):
        if isinstance(x, (float, np.floating)):
            flat[k] = Fraction(float(x))
        elif isinstance(x, np.integer):
            flat[k] = int(x)
        elif isinstance(x, str):
            flat[k] = Fraction(x)
    return flat.reshape(arr.shape)


def identity(g: int) -> np.ndarray:
    I = np.zeros((2 * g, 2 * g), dtype=object)
    I[:] = 0
    for i in range(2 * g):
        I[i, i] = 1
    return I


def pairing(x, y) -> Fraction:
    x, y = as_exact(x), as_exact(y)
    if x.shape != y.shape or x.ndim != 1 or len(x) % 2:
        raise ValueError("pairing needs two vectors of the same even length")
    g = len(x) // 2
    return sum((x[i] * y[g + i] - x[g + i] * y[i] for i in range(g)), Fraction(0))


def _half_dim(M: np.ndarray) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] % 2:
        raise ValueError(f"expected a square matrix of even size, got shape {M.shape}")
    return M.shape[0] // 2


def is_symplectic(M) -> bool:
    """Exact test of ``M^T J M == J``."""
    M = as_exact(M)
    J = gram(_half_dim(M))
    return bool(np.all(M.T.dot(J).dot(M) == J))


def transvection_pair(m, l) -> np.ndarray:
    """Matrix of ``v -> v + (m, v) l + (l, v) m``; needs ``(m, l) = 0``."""
    m, l = as_exact(m), as_exact(l)
    if pairing(m, l) != 0:
        raise ValueError(f"(m, l) = {pairing(m, l)} != 0")
    g = len(m) // 2
    J = gram(g)
    # (m, v) = m^T J v, so the map is I + (l m^T + m l^T) J
    S = np.outer(l, m) + np.outer(m, l)
    return identity(g) + S.dot(J)


def symplectic_transvection(u) -> np.ndarray:
    """Matrix of ``v -> v + (u, v) u``.

    With the convention above, ``u = e_1`` sends ``e_{g+1}`` to
    ``e_{g+1} + e_1`` and fixes every other basis vector.
    """
    u = as_exact(u)
    if u.ndim != 1 or len(u) % 2:
        raise ValueError("u must be a vector of even length")
    g = len(u) // 2
    return identity(g) + np.outer(u, u).dot(gram(g))


def isotropic_basis(g: int, k: int) -> list[np.ndarray]:
    """``e_1..e_k``, spanning the standard isotropic subspace ``I``."""
    if not 0 <= k <= g:
        raise ValueError(f"isotropic dimension must be in [0, {g}], got {k}")
    out = []
    for i in range(k):
        e = np.zeros(2 * g, dtype=object)
        e[:] = 0
        e[i] = 1
        out.append(e)
    return out


def in_isotropic(v, k: int) -> bool:
    v = as_exact(v)
    return all(x == 0 for i, x in enumerate(v) if i >= k)


def in_perp(v, k: int) -> bool:
    """Membership in ``I^perp``: coordinates ``g+1..g+k`` vanish."""
    v = as_exact(v)
    g = len(v) // 2
    return all(v[g + i] == 0 for i in range(k))


def relation_report(m, mp, l, lp, alpha=Fraction(1, 2), k: int | None = None) -> dict[str, bool]:
    """Evaluate the four transvection relations for ``m, m' ∈ I^perp``, ``l, l' ∈ I``.

    ``I = span(e_1..e_k)``; ``k`` defaults to 1.
    """
    m, mp, l, lp = (as_exact(x) for x in (m, mp, l, lp))
    g = len(m) // 2
    k = 1 if k is None else k
    if not 1 <= k <= g:
        raise ValueError(f"isotropic dimension must be in [1, {g}], got {k}")
    for name, v in (("m", m), ("m'", mp)):
        if not in_perp(v, k):
            raise ValueError(f"{name} is not in I^perp for I = span(e_1..e_{k})")
    for name, v in (("l", l), ("l'", lp)):
        if not in_isotropic(v, k):
            raise ValueError(f"{name} is not in I = span(e_1..e_{k})")
    alpha = Fraction(alpha)
    T = transvection_pair

    def same(A, B):
        return bool(np.all(A == B))

    a3 = pairing(m, mp) / 2
    return {
        "scalar": same(T(alpha * m, l), T(m, alpha * l)),
        "additive": same(T(m, l).dot(T(m, lp)), T(m, l + lp)),
        "composition": same(T(m, l).dot(T(mp, l)), T(l, a3 * l).dot(T(m + mp, l))),
        "symmetric": same(T(l, lp), T(lp, l)),
    }


def check_relations(m, mp, l, lp, alpha=Fraction(1, 2), k: int | None = None) -> bool:
    return all(relation_report(m, mp, l, lp, alpha, k).values())


def in_unipotent_radical(M, k: int) -> bool:
    """Whether ``M`` fixes ``I`` pointwise and acts trivially on ``I^perp / I``."""
    M = as_exact(M)
    g = _half_dim(M)
    Id = identity(g)
    for i in range(2 * g):
        col = M[:, i] - Id[:, i]
        if i < k:
            if any(x != 0 for x in col):
                return False
        elif not (g <= i < g + k):
            # e_i lies in I^perp
            if not in_isotropic(col, k):
                return False
    return True


def random_word(g: int, length: int, seed: int, bound: int = 2) -> np.ndarray:
    """Product of ``length`` transvections ``v -> v + (u, v) u``.

    Entries of each ``u`` are uniform in ``[-bound, bound]``, drawn from
    ``numpy.random.default_rng(seed)``.
    """
    if g < 1 or length < 0:
        raise ValueError("need g >= 1 and length >= 0")
    rng = np.random.default_rng(seed)
    M = identity(g)
    for _ in range(length):
        u = [int(x) for x in rng.integers(-bound, bound + 1, size=2 * g)]
        M = M.dot(symplectic_transvection(u))
    return M


def matrix_to_json(M) -> str:
    M = as_exact(M)
    rows = [[str(Fraction(x)) for x in row] for row in M]
    return json.dumps(rows)


def matrix_from_json(text: str) -> np.ndarray:
    return as_exact([[Fraction(x) for x in row] for row in json.loads(text)])


def to_float(M: Sequence) -> np.ndarray:
    return np.array(as_exact(M), dtype=float)
