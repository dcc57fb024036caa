"""Rational representations of finite cyclic groups and their Hodge halves.

A rational representation of ``Z/N`` splits over Q into a sum of the
irreducible cyclotomic pieces ``V_d`` (``d | N``), where ``V_d`` has
dimension ``phi(d)`` and complex eigenvalues the primitive ``d``-th roots of
unity.  Eigenvalues ``e(a)`` are stored by their angle ``a``, a
:class:`fractions.Fraction` in ``[0, 1)``.

Everything here is exact; no floating point.
"""
from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "angle",
    "conj",
    "format_angle",
    "parse_angle",
    "euler_phi",
    "component_angles",
    "RationalRep",
    "HodgeSplitting",
    "enumerate_reps",
    "enumerate_splittings",
    "parse_rep",
    "count_splittings",
    "multiset_union",
    "RepError",
]

_HALF = Fraction(1, 2)


class RepError(ValueError):
    """Invalid representation data (bad label, parity, dimension)."""


def angle(x) -> Fraction:
    """Reduce ``x`` to its representative in ``[0, 1)``."""
    return Fraction(x) % 1


def conj(a: Fraction) -> Fraction:
    """Angle of the complex conjugate eigenvalue: ``-a mod 1``."""
    return (-a) % 1


def format_angle(a: Fraction) -> str:
    return str(Fraction(a))


def parse_angle(text: str) -> Fraction:
    return angle(Fraction(text))


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError(f"euler_phi needs d >= 1, got {d}")
    result, n, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def component_angles(d: int) -> tuple[Fraction, ...]:
    """Eigenvalue angles of ``V_d``: ``k/d`` for ``k`` prime to ``d``."""
    if d < 1:
        raise ValueError(f"order must be >= 1, got {d}")
    return tuple(Fraction(k, d) for k in range(d) if gcd(k, d) == 1)


def _label_part(d: int, mult: int) -> str:
    return f"V{d}" if mult == 1 else f"V{d}^{mult}"


@dataclass(frozen=True)
class RationalRep:
    """A multiset of cyclotomic components ``V_d^mult``.

    ``components`` is kept sorted by ``(d, mult)`` with one entry per order.
    """

    components: tuple[tuple[int, int], ...]
    two_g: int

    def __post_init__(self):
        merged: Counter[int] = Counter()
        for d, mult in self.components:
            if d < 1 or mult < 1:
                raise RepError(f"bad component V{d}^{mult}")
            merged[d] += mult
        comps = tuple(sorted(merged.items()))
        object.__setattr__(self, "components", comps)
        dim = sum(m * euler_phi(d) for d, m in comps)
        if dim != self.two_g:
            raise RepError(f"components have dimension {dim}, expected {self.two_g}")
        for d, m in comps:
            if d in (1, 2) and m % 2:
                raise RepError(f"V{d} must occur with even multiplicity, got {m}")
        if self.two_g < 4 or self.two_g % 2:
            raise RepError(f"dimension must be even and >= 4, got {self.two_g}")

    @classmethod
    def from_components(cls, components: Iterable[tuple[int, int]]) -> "RationalRep":
        comps = list(components)
        return cls(tuple(comps), sum(m * euler_phi(d) for d, m in comps))

    @property
    def g(self) -> int:
        return self.two_g // 2

    @property
    def label(self) -> str:
        # largest order first, the way the decompositions are usually written
        return "+".join(_label_part(d, m) for d, m in sorted(self.components, reverse=True))

    def multiplicity(self, d: int) -> int:
        return dict(self.components).get(d, 0)

    def is_identity(self) -> bool:
        return self.components == ((1, self.two_g),)

    def angles(self) -> tuple[Fraction, ...]:
        """Full eigenvalue multiset on the complexification, sorted."""
        out = []
        for d, m in self.components:
            out.extend(component_angles(d) * m)
        return tuple(sorted(out))

    def to_dict(self) -> dict:
        return {
            "components": [{"d": d, "mult": m} for d, m in self.components],
            "two_g": self.two_g,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "RationalRep":
        comps = tuple((int(c["d"]), int(c["mult"])) for c in data["components"])
        return cls(comps, int(data["two_g"]))

    @classmethod
    def from_json(cls, text: str) -> "RationalRep":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class HodgeSplitting:
    """Eigenvalue angles of the holomorphic half ``V`` (size ``g``), sorted."""

    v_angles: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "v_angles", tuple(sorted(angle(a) for a in self.v_angles)))

    @property
    def g(self) -> int:
        return len(self.v_angles)

    def key(self) -> tuple[Fraction, ...]:
        return self.v_angles

    def labels(self) -> list[str]:
        return [format_angle(a) for a in self.v_angles]

    def is_compatible_with(self, rep: RationalRep) -> bool:
        """Check ``v ⊎ conj(v)`` equals the eigenvalue multiset of ``rep``."""
        if 2 * len(self.v_angles) != rep.two_g:
            return False
        full = Counter(self.v_angles) + Counter(conj(a) for a in self.v_angles)
        return full == Counter(rep.angles())

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def _max_order(two_g: int) -> int:
    # phi(d) >= sqrt(d/2), so nothing beyond 2*(2g)^2 can have phi(d) <= 2g
    bound = 2 * two_g * two_g
    return max(d for d in range(1, bound + 1) if euler_phi(d) <= two_g)


def enumerate_reps(two_g: int) -> list[RationalRep]:
    """All rational representations of dimension ``two_g`` admitting a Hodge half.

    ``V_1`` and ``V_2`` occur with even multiplicity.  Sorted by components.
    """
    if two_g < 4 or two_g % 2:
        raise RepError(f"two_g must be even and >= 4, got {two_g}")
    orders = [d for d in range(1, _max_order(two_g) + 1) if euler_phi(d) <= two_g]
    # V_1 and V_2 enter in pairs, so treat them as blocks of dimension 2
    blocks = [(d, 2 if d <= 2 else 1, 2 if d <= 2 else euler_phi(d)) for d in orders]

    found: list[RationalRep] = []

    def extend(i: int, remaining: int, acc: list[tuple[int, int]]):
        if remaining == 0:
            found.append(RationalRep(tuple(acc), two_g))
            return
        if i == len(blocks):
            return
        d, step, dim = blocks[i]
        extend(i + 1, remaining, acc)
        k = 1
        while k * dim <= remaining:
            acc.append((d, k * step))
            extend(i + 1, remaining - k * dim, acc)
            acc.pop()
            k += 1

    extend(0, two_g, [])
    found.sort(key=lambda r: r.components)
    return found


def _pair_multiplicities(rep: RationalRep) -> tuple[int, int, list[tuple[Fraction, int]]]:
    counts = Counter(rep.angles())
    zero = counts.pop(Fraction(0), 0)
    half = counts.pop(_HALF, 0)
    pairs = sorted((a, m) for a, m in counts.items() if a < _HALF)
    return zero, half, pairs


def enumerate_splittings(rep: RationalRep) -> list[HodgeSplitting]:
    """Every Hodge-compatible choice of half the eigenvalues of ``rep``.

    For each conjugate pair ``{a, 1-a}`` (``0 < a < 1/2``) of multiplicity
    ``m`` the holomorphic half takes ``j`` copies of ``a`` and ``m - j`` of
    ``1 - a``; the ``0`` and ``1/2`` eigenspaces are halved.
    """
    zero, half, pairs = _pair_multiplicities(rep)
    forced = [Fraction(0)] * (zero // 2) + [_HALF] * (half // 2)
    out = []
    for choice in product(*(range(m + 1) for _, m in pairs)):
        v = list(forced)
        for (a, m), j in zip(pairs, choice):
            v += [a] * j + [1 - a] * (m - j)
        out.append(HodgeSplitting(tuple(v)))
    return sorted(set(out), key=HodgeSplitting.key)


def count_splittings(rep: RationalRep) -> int:
    """Closed-form count ``prod (m_a + 1)`` over conjugate pairs."""
    _, _, pairs = _pair_multiplicities(rep)
    n = 1
    for _, m in pairs:
        n *= m + 1
    return n


_TERM = re.compile(r"V(\d+)(?:\^(\d+))?")


def parse_rep(label: str) -> RationalRep:
    """Parse labels like ``"V6+V1^2"``; the dimension is inferred."""
    text = label.replace(" ", "")
    if not text:
        raise RepError("empty representation label")
    comps: list[tuple[int, int]] = []
    for term in text.split("+"):
        m = _TERM.fullmatch(term)
        if m is None:
            raise RepError(f"cannot parse term {term!r} in {label!r}")
        d = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if d < 1 or mult < 1:
            raise RepError(f"order and multiplicity must be positive in {term!r}")
        comps.append((d, mult))
    return RationalRep.from_components(comps)


def multiset_union(*parts: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out: list[Fraction] = []
    for p in parts:
        out.extend(p)
    return tuple(sorted(out))
