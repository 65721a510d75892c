"""
Are the roots of unity optimal?
===============================

Move each point by a small random angle and recompute the energy. For
s >= 0 the energy should never go down (the roots of unity minimize it),
for -2 < s < 0 it should never go up (they maximize it). Below s = -2 two
antipodal clusters do better.
"""

import numpy as np

from riesz_circle import configurations, energy, verify

rng = np.random.Generator(np.random.Philox(42))
base = configurations.roots_of_unity(20)
for s in (1.0, -1.0):
    e0 = configurations.pairwise_energy(base, s)
    moved = configurations.on_circle(configurations.perturbed_angles(20, 1e-3, rng))
    print(f"s={s:+.1f}  E0={e0:.10f}  perturbed={configurations.pairwise_energy(moved, s):.10f}")

for s in (0.5, 3.0, -1.0):
    rep = verify.audit_optimality(s, 20, 1000, 1e-3, seed=42)
    print(s, rep.summary, rep.cases[0].note)

# s = -3, N = 4: two points at each end of a diameter beat the square.
print(configurations.clustered_energy(-3.0, 4), energy.energy_direct(-3.0, 4))
