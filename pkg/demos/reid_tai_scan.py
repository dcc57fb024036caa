"""
Which Kuga families can have non-canonical quotient singularities?
==================================================================

Scan every finite-order rational representation of genus g and every
Hodge-compatible choice of the holomorphic half V, then add up the angles
of V^n + Sym^2 V.  Sums below 1 are the only obstructions.
"""
from kuga_sing import enumerate_reps, enumerate_splittings, scan
from kuga_sing.reid_tai import exceptional_family_rt

# how many candidate representations there are for small genus
for two_g in (4, 6, 8):
    reps = enumerate_reps(two_g)
    n_split = sum(len(enumerate_splittings(r)) for r in reps)
    print(f"2g={two_g}: {len(reps)} representations, {n_split} splittings")

res = scan(2, 6, 1, 4)
print(f"\n{res.n_cases} cases scanned, {len(res.quasi_reflections)} quasi-reflections")
for c in res.exceptional:
    print(f"  g={c.g} n={c.n}  {c.rep.label:10s} V={c.splitting.labels()}  RT={c.rt}")

# the surviving family has a closed form; print the table around RT = 1
print("\n   n:" + "".join(f"{n:>6}" for n in range(1, 6)))
for g in range(2, 6):
    print(f"g={g}: " + "".join(f"{str(exceptional_family_rt(g, n)):>6}" for n in range(1, 6)))
