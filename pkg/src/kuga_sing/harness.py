"""Seeded random-trial drivers shared by the CLI and the test-suite."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import siegel, symplectic

__all__ = [
    "TrialReport",
    "random_rational_vector",
    "random_relation_instance",
    "symplectic_trials",
    "random_siegel_pair",
    "siegel_trials",
]


@dataclass
class TrialReport:
    trials: int = 0
    failures: list[dict] = field(default_factory=list)
    max_error: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "ok": self.ok,
            "max_error": self.max_error,
            "failures": self.failures,
        }


def random_rational_vector(rng: np.random.Generator, size: int, num: int = 3, den: int = 3) -> list[Fraction]:
    nums = rng.integers(-num, num + 1, size=size)
    dens = rng.integers(1, den + 1, size=size)
    return [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]


def random_relation_instance(rng: np.random.Generator, g: int):
    """``(m, m', l, l', α, k)`` with ``m, m' ∈ I^perp``, ``l, l' ∈ I = span(e_1..e_k)``."""
    k = int(rng.integers(1, g + 1))
    m, mp = (random_rational_vector(rng, 2 * g) for _ in range(2))
    for v in (m, mp):
        for i in range(k):
            v[g + i] = Fraction(0)
    l, lp = ([Fraction(0)] * (2 * g) for _ in range(2))
    l[:k] = random_rational_vector(rng, k)
    lp[:k] = random_rational_vector(rng, k)
    alpha = random_rational_vector(rng, 1, num=5, den=4)[0]
    return m, mp, l, lp, alpha, k


def symplectic_trials(seed: int, trials: int, g_values=(2, 3)) -> TrialReport:
    """Check the four transvection relations and exact symplecticity."""
    rng = np.random.default_rng(seed)
    rep = TrialReport()
    for t in range(trials):
        g = g_values[t % len(g_values)]
        m, mp, l, lp, alpha, k = random_relation_instance(rng, g)
        rel = symplectic.relation_report(m, mp, l, lp, alpha, k)
        mats = {
            "T(m,l)": symplectic.transvection_pair(m, l),
            "T(m',l')": symplectic.transvection_pair(mp, lp),
            "T(l,l')": symplectic.transvection_pair(l, lp),
            "T(m+m',l)": symplectic.transvection_pair([a + b for a, b in zip(m, mp)], l),
        }
        sym = {name: symplectic.is_symplectic(M) for name, M in mats.items()}
        radical = all(symplectic.in_unipotent_radical(M, k) for M in mats.values())
        rep.trials += 1
        if not (all(rel.values()) and all(sym.values()) and radical):
            rep.failures.append({
                "trial": t, "g": g, "k": k,
                "relations": rel, "symplectic": sym, "unipotent": radical,
            })
    return rep


def random_siegel_pair(rng: np.random.Generator, g: int, word_length: int = 2):
    seeds = rng.integers(0, 2**31, size=2)
    M = symplectic.to_float(symplectic.random_word(g, word_length, int(seeds[0])))
    Mp = symplectic.to_float(symplectic.random_word(g, word_length, int(seeds[1])))
    return M, Mp, siegel.random_siegel_point(g, rng)


def siegel_trials(g_values, trials: int, seed: int = 0, tol: float = 1e-9, word_length: int = 2) -> TrialReport:
    """Cocycle, metric and volume transformation laws on random data.

    ``word_length`` bounds the size of the random symplectic words; longer
    words have larger entries and lose floating-point accuracy.
    """
    rng = np.random.default_rng(seed)
    rep = TrialReport()
    for t in range(trials):
        g = g_values[t % len(g_values)]
        M, Mp, omega = random_siegel_pair(rng, g, word_length)
        errs = {
            "cocycle": siegel.cocycle_error(M, Mp, omega),
            "metric": siegel.metric_invariance_error(M, omega),
            "volume": siegel.volume_invariance_error(M, omega),
        }
        image = siegel.moebius_act(M, omega)
        try:
            siegel.validate_point(image)
            valid = True
        except siegel.SiegelError:
            valid = False
        worst = max(errs.values())
        rep.trials += 1
        rep.max_error = max(rep.max_error, worst)
        if worst > tol or not valid:
            rep.failures.append({"trial": t, "g": g, "errors": errs, "valid_image": valid})
    return rep
