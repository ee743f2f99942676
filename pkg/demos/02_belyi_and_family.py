"""Check the degree-72 Belyi map and the one-parameter degree-36 family.

Run with:  python demos/02_belyi_and_family.py   (a few seconds)
"""

from psp62.belyi import verify_belyi, verify_delta, verify_family_branch_data, verify_square_root_structure
from psp62.constants import load
from psp62.dedekind import square_disc_check

consts = load()
p, q = consts.belyi_p.expand_uni(), consts.belyi_q.expand_uni()
prof = verify_belyi(p, q, consts.belyi_scale)
print("ramification over 0, 1, inf:", prof.as_dict())
print("Riemann-Hurwitz total:", prof.riemann_hurwitz(), "= 2*72 - 2")
sq = verify_square_root_structure(p, q, consts.belyi_scale)
print("scale is minus a square:", sq["scale_root"], "squared and negated")

P, Q = consts.family_p.expand_bi(), consts.family_q.expand_bi()
for a0 in (1, 2, 3):
    prof, wit = verify_family_branch_data(P, Q, a0)
    print(f"a = {a0}: {prof.as_dict()}  (split prime {wit['prime']})")

# the discriminant in t, recomputed exactly and compared with the factored form
res = verify_delta(P, Q, consts.delta, [1, 2])
print("discriminant degree in t:", res[1].degree)
print("exponents:", consts.delta.exponents())
chk = square_disc_check(consts.delta.at(1), 37)
print("square over Q:", chk.rational_square, " square mod 37:", chk.reduction_square)
