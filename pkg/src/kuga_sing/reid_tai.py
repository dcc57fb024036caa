"""Reid-Tai sums on ``V^n ⊕ Sym^2 V`` and the exhaustive singularity scan.

For a finite-order element acting on a complex vector space with eigenvalues
``e(a_i)``, ``0 <= a_i < 1``, the Reid-Tai sum is ``sum a_i``.  A quotient by
a group without quasi-reflections is canonical iff every non-identity element
has sum ``>= 1``.  At a point of the n-fold Kuga family the tangent space is
``V^n ⊕ Sym^2 V`` with ``V`` the holomorphic half of the lattice
representation, so everything reduces to angle bookkeeping on a
:class:`~kuga_sing.cyclic_rep.HodgeSplitting`.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclic_rep import (
    HodgeSplitting,
    RationalRep,
    enumerate_reps,
    enumerate_splittings,
)

__all__ = [
    "TangentSpectrum",
    "ClassifiedCase",
    "ScanResult",
    "sym2_angles",
    "tangent_spectrum",
    "reid_tai_sum",
    "is_quasi_reflection",
    "classify",
    "iter_cases",
    "scan",
    "exceptional_family_rt",
    "exceptional_case",
]

_ZERO = Fraction(0)


def sym2_angles(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Angles of ``Sym^2``: ``(a_i + a_j) mod 1`` for ``i <= j``, sorted."""
    v = list(v)
    return tuple(sorted((v[i] + v[j]) % 1 for i in range(len(v)) for j in range(i, len(v))))


@dataclass(frozen=True)
class TangentSpectrum:
    angles: tuple[Fraction, ...]
    g: int
    n: int

    def __post_init__(self):
        expected = self.n * self.g + self.g * (self.g + 1) // 2
        if len(self.angles) != expected:
            raise ValueError(f"spectrum has {len(self.angles)} angles, expected {expected}")

    def __add__(self, other: "TangentSpectrum") -> tuple[Fraction, ...]:
        return tuple(sorted(self.angles + other.angles))


def tangent_spectrum(splitting: HodgeSplitting, n: int) -> TangentSpectrum:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    v = splitting.v_angles
    angles = tuple(sorted(v * n + sym2_angles(v)))
    return TangentSpectrum(angles, len(v), n)


def reid_tai_sum(spec: TangentSpectrum | Iterable[Fraction]) -> Fraction:
    angles = spec.angles if isinstance(spec, TangentSpectrum) else spec
    return sum(angles, _ZERO)


def is_quasi_reflection(spec: TangentSpectrum | Iterable[Fraction]) -> bool:
    """Exactly one eigenvalue differs from 1."""
    angles = spec.angles if isinstance(spec, TangentSpectrum) else spec
    return sum(1 for a in angles if a != 0) == 1


@dataclass(frozen=True)
class ClassifiedCase:
    g: int
    n: int
    rep: RationalRep
    splitting: HodgeSplitting
    rt: Fraction
    is_canonical_cert: bool
    is_quasi_reflection: bool

    def sort_key(self):
        return (self.g, self.n, self.rep.label, self.splitting.key())

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "rep": self.rep.label,
            "v_angles": self.splitting.labels(),
            "rt": str(self.rt),
            "canonical": self.is_canonical_cert,
            "quasi_reflection": self.is_quasi_reflection,
        }


def classify(g: int, n: int, rep: RationalRep, splitting: HodgeSplitting) -> ClassifiedCase:
    if rep.two_g != 2 * g or splitting.g != g:
        raise ValueError(f"g={g} does not match rep {rep.label} (2g={rep.two_g}) or splitting {splitting}")
    if not splitting.is_compatible_with(rep):
        raise ValueError(f"splitting {splitting} is not a Hodge half of {rep.label}")
    spec = tangent_spectrum(splitting, n)
    rt = reid_tai_sum(spec)
    # tie at rt == 1 counts as canonical
    return ClassifiedCase(g, n, rep, splitting, rt, rt >= 1, is_quasi_reflection(spec))


def iter_cases(g: int, n_values: Iterable[int], include_identity: bool = False):
    """Yield a :class:`ClassifiedCase` for every rep, splitting and ``n``.

    Sym^2 is computed once per splitting; ``n`` only rescales the ``V`` part.
    """
    n_values = list(n_values)
    for rep in enumerate_reps(2 * g):
        if rep.is_identity() and not include_identity:
            continue
        for sp in enumerate_splittings(rep):
            v = sp.v_angles
            s2 = sym2_angles(v)
            v_sum = sum(v, _ZERO)
            s2_sum = sum(s2, _ZERO)
            v_moving = sum(1 for a in v if a)
            s2_moving = sum(1 for a in s2 if a)
            for n in n_values:
                rt = n * v_sum + s2_sum
                qr = n * v_moving + s2_moving == 1
                yield ClassifiedCase(g, n, rep, sp, rt, rt >= 1, qr)


@dataclass
class ScanResult:
    """Outcome of :func:`scan`.

    ``exceptional`` holds the cases with Reid-Tai sum below 1, sorted;
    ``quasi_reflections`` any case whose action is a quasi-reflection.
    """

    exceptional: list[ClassifiedCase] = field(default_factory=list)
    quasi_reflections: list[ClassifiedCase] = field(default_factory=list)
    n_cases: int = 0

    def pairs(self) -> list[tuple[int, int]]:
        return sorted({(c.g, c.n) for c in self.exceptional})

    def to_dict(self) -> dict:
        return {
            "n_cases": self.n_cases,
            "exceptional_pairs": [list(p) for p in self.pairs()],
            "exceptional": [c.to_dict() for c in self.exceptional],
            "quasi_reflections": [c.to_dict() for c in self.quasi_reflections],
        }


def _scan_one(args) -> ScanResult:
    g, n_values = args
    res = ScanResult()
    for case in iter_cases(g, n_values):
        res.n_cases += 1
        if not case.is_canonical_cert:
            res.exceptional.append(case)
        if case.is_quasi_reflection:
            res.quasi_reflections.append(case)
    return res


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("KUGA_SING_THREADS", "1")))
    except ValueError:
        return 1


def scan(g_min: int, g_max: int, n_min: int, n_max: int, workers: int | None = None) -> ScanResult:
    """Scan every non-identity rep and splitting for ``g`` and ``n`` in range.

    Work is split by ``g`` across ``workers`` processes (default from
    ``KUGA_SING_THREADS``, else 1); results are re-sorted so the output does
    not depend on the worker count.
    """
    if not (2 <= g_min <= g_max):
        raise ValueError(f"need 2 <= g_min <= g_max, got {g_min}..{g_max}")
    if not (1 <= n_min <= n_max):
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    workers = _default_workers() if workers is None else max(1, workers)
    jobs = [(g, range(n_min, n_max + 1)) for g in range(g_min, g_max + 1)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            parts = list(pool.map(_scan_one, jobs))
    else:
        parts = [_scan_one(j) for j in jobs]

    out = ScanResult()
    for p in parts:
        out.exceptional += p.exceptional
        out.quasi_reflections += p.quasi_reflections
        out.n_cases += p.n_cases
    out.exceptional.sort(key=ClassifiedCase.sort_key)
    out.quasi_reflections.sort(key=ClassifiedCase.sort_key)
    return out


def exceptional_family_rt(g: int, n: int) -> Fraction:
    """Closed form ``1/3 + (g+n-1)/6`` for ``V_6 ⊕ V_1^(2g-2)`` with ``V ∋ 1/6``."""
    return Fraction(1, 3) + Fraction(g + n - 1, 6)


def exceptional_case(g: int, n: int) -> ClassifiedCase:
    rep = RationalRep(((1, 2 * g - 2), (6, 1)), 2 * g)
    sp = HodgeSplitting((Fraction(1, 6),) + (_ZERO,) * (g - 1))
    return classify(g, n, rep, sp)
