"""Weight bookkeeping for pluricanonical forms and known cusp-form data.

``m``-canonical forms on the n-fold Kuga family over a genus ``g`` Siegel
modular variety correspond to modular forms of weight ``(g + n + 1) m``;
canonical forms (``m = 1``) extending to a smooth model correspond to cusp
forms.  The table records the smallest weight with a nonzero cusp form for
full level ``Sp(2g, Z)``, ``g = 2..6``, and the resulting bound on ``n``.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

__all__ = [
    "CuspFormFact",
    "KodairaFact",
    "CUSP_FACTS",
    "weight_of",
    "parity_vanishes",
    "kodaira_fact",
    "table_json",
]


@dataclass(frozen=True)
class CuspFormFact:
    g: int
    weight: int
    dim: int
    dim_is_lower_bound: bool
    is_minimal_weight: bool
    min_n: int
    kodaira: str  # ">=0" or ">0" for n >= min_n
    source: str

    def __post_init__(self):
        if self.weight < 1 or self.dim < 0:
            raise ValueError("weight must be >= 1 and dim >= 0")


@dataclass(frozen=True)
class KodairaFact:
    min_cusp_weight: int
    dim_at_min: int
    dim_is_lower_bound: bool
    min_n_for_nonneg_kodaira: int


CUSP_FACTS: dict[int, CuspFormFact] = {
    f.g: f
    for f in (
        CuspFormFact(2, 10, 1, False, True, 7, ">=0", "Igusa 1962: unique cusp form of weight 10"),
        CuspFormFact(3, 12, 1, False, True, 8, ">=0", "Tsuyumine: unique cusp form of weight 12"),
        CuspFormFact(4, 8, 1, False, True, 3, ">=0", "Igusa 1982 (Schottky form); Salvati Manni: minimal, dim S_8 = 1"),
        CuspFormFact(5, 12, 2, False, True, 6, ">0", "Nebe-Venkov: dim S_12 = 2; Poor-Yuen: minimal weight"),
        # weight 12 is not known to be minimal here, only that weights <= 8 carry no cusp form
        CuspFormFact(6, 12, 3, True, False, 5, ">0", "Nebe-Venkov: dim S_12 >= 3; Poor-Yuen: none of weight <= 8"),
    )
}


def weight_of(g: int, n: int, m: int) -> int:
    if g < 2 or n < 1 or m < 0:
        raise ValueError(f"need g >= 2, n >= 1, m >= 0; got g={g}, n={n}, m={m}")
    return (g + n + 1) * m


def parity_vanishes(g: int, k: int, minus_one_in_gamma: bool) -> bool:
    """``-1`` acts on weight-``k`` forms by ``(-1)^(gk)``; odd ``gk`` kills them."""
    return bool(minus_one_in_gamma) and (g * k) % 2 == 1


def kodaira_fact(g: int) -> KodairaFact:
    try:
        f = CUSP_FACTS[g]
    except KeyError:
        raise ValueError(f"no cusp-form data for g={g}; table covers g=2..6") from None
    return KodairaFact(f.weight, f.dim, f.dim_is_lower_bound, f.min_n)


def table_json() -> str:
    rows = []
    for g in sorted(CUSP_FACTS):
        rows.append(asdict(CUSP_FACTS[g]))
    return json.dumps(rows, indent=2)
