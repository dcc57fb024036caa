"""
Rays, cones and characters
==========================

Quadratic forms on I are stored by their upper triangle.  A primitive form
has a character pairing to 1 with it, and the sign of the pairing decides
whether e^chi extends over the boundary divisor of the ray.
"""
from kuga_sing.cones import Character, QuadForm, character_extends, cone_membership, dual_character, is_primitive

for coords in ([1, 0, 1], [1, 0, 0], [1, 2, 1], [1, 0, -1], [2, 3, 0, 4, 0, 5]):
    Q = QuadForm.from_coords(coords)
    where, rank = cone_membership(Q)
    chi = dual_character(Q) if is_primitive(Q) else None
    print(coords, where.value, "rank", rank, "chi", chi and chi.to_list())

Q = QuadForm.from_coords([1, 0, 1])
for chi in ((1, 0, -1), (1, 0, 0), (-1, 0, -1)):
    print(chi, character_extends(Character(chi), Q).value)
