from fractions import Fraction as F
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kuga_sing.cones import (
    Character,
    Extension,
    Membership,
    QuadForm,
    bareiss_rank,
    character_extends,
    cone_membership,
    dual_character,
    is_primitive,
    is_psd,
)


def Qm(M):
    return QuadForm.from_matrix(M)


def test_membership_examples():
    assert cone_membership(Qm([[1, 0], [0, 1]])) == (Membership.INTERIOR, 2)
    assert cone_membership(Qm([[1, 0], [0, 0]])) == (Membership.BOUNDARY, 1)
    assert cone_membership(Qm([[1, 0], [0, -1]]))[0] == Membership.OUTSIDE


def test_coordinate_layout():
    Q = QuadForm.from_coords([1, 2, 3, 4, 5, 6])
    assert Q.g_prime == 3
    assert Q.matrix() == [[1, 2, 3], [2, 4, 5], [3, 5, 6]]
    assert QuadForm.from_matrix(Q.matrix()) == Q
    assert Q.to_list() == [1, 2, 3, 4, 5, 6]


def test_bad_coordinate_length():
    with pytest.raises(ValueError):
        QuadForm.from_coords([1, 2])


def random_form(rng, gp, lo=-3, hi=4):
    A = rng.integers(lo, hi, size=(gp, gp))
    return (A + A.T) // 1


def test_rank_matches_svd_on_200_forms():
    rng = np.random.default_rng(11)
    for t in range(200):
        gp = 1 + t % 4
        # low-rank products so that all ranks occur
        r = int(rng.integers(0, gp + 1))
        B = rng.integers(-3, 4, size=(gp, r))
        S = rng.integers(-2, 3, size=(r, r))
        M = B @ (S + S.T) @ B.T if t % 2 else random_form(rng, gp)
        exact = cone_membership(Qm(M.tolist()))[1]
        s = np.linalg.svd(M.astype(float), compute_uv=False)
        fl = int(np.sum(s > 1e-9 * max(1.0, s.max()))) if s.size else 0
        assert exact == fl == bareiss_rank(M.tolist())


def psd_by_eigen(M):
    return np.linalg.eigvalsh(np.asarray(M, dtype=float)).min() > -1e-9


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda gp: st.lists(st.integers(-4, 4), min_size=gp * (gp + 1) // 2, max_size=gp * (gp + 1) // 2)))
def test_psd_matches_eigenvalues(coords):
    Q = QuadForm.from_coords(coords)
    assert is_psd(Q.matrix()) == psd_by_eigen(Q.matrix())


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**31), st.integers(1, 4))
def test_psd_singular_forms_are_boundary(seed, gp):
    rng = np.random.default_rng(seed)
    r = int(rng.integers(0, gp))
    B = rng.integers(-3, 4, size=(gp, r))
    M = B @ B.T
    mem, rank = cone_membership(Qm(M.tolist()))
    assert mem == Membership.BOUNDARY
    assert rank == (np.linalg.matrix_rank(B) if r else 0)


def test_psd_with_rational_entries():
    assert is_psd([[F(1, 2), F(1, 3)], [F(1, 3), F(2, 9)]])
    assert not is_psd([[F(1, 2), F(1, 3)], [F(1, 3), F(1, 5)]])


def test_primitive_examples():
    assert is_primitive(QuadForm.from_coords([1, 0, 0]))
    assert not is_primitive(QuadForm.from_coords([2, 0, 2]))
    assert not is_primitive(QuadForm.from_coords([2, 3, 0]) * 2)
    with pytest.raises(ValueError):
        is_primitive(QuadForm.from_coords([0, 0, 0]))


def test_dual_character_examples():
    assert dual_character(QuadForm.from_coords([1, 0, 0])).to_list() == [1, 0, 0]
    chi = dual_character(QuadForm.from_coords([2, 3, 0]))
    assert chi.pair(QuadForm.from_coords([2, 3, 0])) == 1
    with pytest.raises(ValueError):
        dual_character(QuadForm.from_coords([2, 0, 2]))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda gp: st.lists(st.integers(-50, 50), min_size=gp * (gp + 1) // 2, max_size=gp * (gp + 1) // 2)))
def test_dual_character_certificate(coords):
    g = 0
    for c in coords:
        g = gcd(g, c)
    Q = QuadForm.from_coords(coords)
    if g == 1:
        chi = dual_character(Q)
        assert sum(a * b for a, b in zip(chi.coords, coords)) == 1
        assert dual_character(Q) == chi
    elif g > 1:
        with pytest.raises(ValueError):
            dual_character(Q)


def test_character_extends_examples():
    Q = QuadForm.from_coords([1, 0, 1])
    assert character_extends(Character((1, 0, -1)), Q) == Extension.NONVANISHING
    assert character_extends(Character((1, 0, 0)), Q) == Extension.VANISHING
    assert character_extends(Character((-1, 0, -1)), Q) == Extension.NONE
