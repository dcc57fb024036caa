"""
Transvections in the unipotent radical
======================================

T(m, l) : v -> v + (m, v) l + (l, v) m for m in I^perp and l in I.
We check the four relations exactly on random rational data and show the
sign convention on a small example.
"""
from fractions import Fraction

from kuga_sing import symplectic as sp
from kuga_sing.harness import symplectic_trials

print(sp.symplectic_transvection([1, 0, 0, 0]))

m, mp = [1, 2, 0, 3], [-1, 0, 0, 2]
l, lp = [2, 0, 0, 0], [-3, 0, 0, 0]
print(sp.relation_report(m, mp, l, lp, alpha=Fraction(2, 3)))

T = sp.transvection_pair(m, l)
print(sp.is_symplectic(T), sp.in_unipotent_radical(T, 1))
print(sp.matrix_to_json(sp.transvection_pair([Fraction(1, 2), 0, 0, 1], [Fraction(1, 3), 0, 0, 0])))

rep = symplectic_trials(seed=0, trials=200)
print(f"{rep.trials} random instances, {len(rep.failures)} failures")
