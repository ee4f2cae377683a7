"""
Drawing paths uniformly at random
=================================

The completion-count trick: tabulate, for every automaton state, how
many ways the walk can finish from there, then walk forward choosing
each step with probability proportional to the completions it leaves
open.  Every path of the target length comes out with equal probability,
and a fixed seed gives a reproducible draw.
"""

from collections import Counter

from catwalk import preset
from catwalk.sampler import SamplerSpec, sample, total_count

spec = SamplerSpec(preset("skew-cat"), n=10, final="closed", seed=7)
print(f"closed skew-cat paths of length {spec.n}: {total_count(spec)}")

draws = sample(spec, 12)
for path in draws:
    print("  ", path)

# Same seed, same draws.
again = sample(spec, 12)
print("reproducible:", [str(p) for p in draws] == [str(p) for p in again])

# Uniformity check on a small ensemble where we can see every member:
# the ten closed skew paths of length six should each get ~10% of draws.
small = SamplerSpec(preset("skew"), n=6, final="closed", seed=2024)
counts = Counter(str(p) for p in sample(small, 5000))
print()
print(f"5000 draws over the {total_count(small)} closed skew paths of length 6:")
for word, hits in sorted(counts.items()):
    bar = "#" * (hits // 20)
    print(f"  {word}  {hits / 5000:6.1%}  {bar}")
