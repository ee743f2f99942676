"""Sample Frobenius cycle types of the a = 1 specialization and compare them
with the cycle types of Sp(6,2) on 36 points.

Run with:  python demos/03_frobenius_statistics.py   (about 30 s)
"""

from collections import Counter

from psp62.constants import load
from psp62.dedekind import Pencil, default_primes, sample_frobenius, statistics
from psp62.sp62 import SymplecticModel

consts = load()
P, Q = consts.family_p.expand_bi(), consts.family_q.expand_bi()
fam = Pencil(P.specialize(1), Q.specialize(1))
primes = default_primes(fam)
print("primes:", primes[0], "...", primes[-1], f"({len(primes)} of them)")

recs = sample_frobenius(fam, primes, 40, seed=42, good_prime=fam.good_prime)
census = SymplecticModel(seed=0).census
s = statistics(recs, census.cycle_types(), 0.15, 0.35)
print(f"mean fix {s.mean_fix:.3f} (expect 1), mean fix^2 {s.mean_fix_squared:.3f} (expect 2)")
print("types outside the group:", s.unknown_type_count)

# compare observed frequencies with class proportions for the commonest types
ok = [r for r in recs if r.accepted]
seen = Counter(str(r.pattern) for r in ok)
expected = Counter()
for c in census.classes:
    expected[str(c.cycle_type)] += c.size / census.order
for t, n in seen.most_common(6):
    print(f"{t:>20}  observed {n / len(ok):.3f}  group {expected[t]:.3f}")
