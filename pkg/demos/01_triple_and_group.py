"""Walk through the permutation triple and the Sp(6,2) model.

Run with:  python demos/01_triple_and_group.py   (about 15 s, most of it the census)
"""

from psp62.constants import load
from psp62.nielsen import NielsenContext, braid_orbits, count_tuples
from psp62.perm import CycleType, cycle_type, is_transitive, minimal_blocks
from psp62.sp62 import SymplecticModel, form_orbits, locate_class_vector

consts = load()
x, z = consts.x, consts.z
y = ~x * ~z                       # left-first composition, so x*y*z = 1
print("types:", cycle_type(x), cycle_type(y), cycle_type(z))
print("transitive on 72 points:", is_transitive([x, z], 72))
blocks = [s for s in minimal_blocks([x, z]) if len(s) == 2]
print("block systems with 2 blocks:", [[len(b) for b in s] for s in blocks])

model = SymplecticModel(seed=0)
print("|Sp(6,2)| on 63 points:", model.chain63.order())
print("orbits on quadratic forms:", sorted(len(o) for o in form_orbits(model.matrices)))

census = model.census             # enumerates all 1451520 elements
print(len(census.classes), "conjugacy classes")
c1, c2, c3 = locate_class_vector(census, [CycleType.parse(t) for t in ("3^12", "1^12.2^12", "1^6.2.4^7")])
print("class sizes:", c1.size, c2.size, c3.size)

# Nielsen class of (C1, C2, C2, C3)
ctx = NielsenContext(census, c1)
res = count_tuples(ctx, [c1, c2, c2, c3])
print("Nielsen class length:", res.length)
parts, _ = braid_orbits(ctx, res.representatives)
print("braid orbits:", parts)
