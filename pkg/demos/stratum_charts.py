"""The rank-s stratum of commuting unitary tuples is charted by pairs
(X, f): a commuting skew-Hermitian tuple of size s via the inverse Cayley
transform, and an isometric frame spanning the distinguished subspace F.
"""

import numpy as np

from commvar import (
    cayley,
    cayley_inv,
    class_distance,
    gen_exact_rank_tuple,
    pairing_chart,
    reconstruct_chart,
    stabilize,
    stratum_rank,
    subquotient_chart,
    trace_split,
)
from commvar.numkit import commutator_defect, fro

# The Cayley transform carries skew-Hermitian matrices onto the unitaries
# without eigenvalue 1.
x = np.array([[1j, 0.3 + 0.1j], [-0.3 + 0.1j, -0.5j]])
a = cayley(x)
print("unitary defect:", fro(a.conj().T @ a - np.eye(2)))
print("distance of spectrum from 1:", np.min(np.abs(np.linalg.eigvals(a) - 1)))
print("round trip:", fro(cayley_inv(a) - x))

# A tuple of exact rank 3 inside a 5-dimensional space.
t = gen_exact_rank_tuple(7, n=2, s=3, ambient_dim=5)
print("stratum rank:", stratum_rank(t))

chart = subquotient_chart(t)
print("chart size:", chart.s, "frame shape:", chart.f.shape)
print("chart commutes:", commutator_defect(chart.X.mats))

# Rebuilding from the chart gives back the canonical representative.
rec = reconstruct_chart(chart, t.s)
print("reconstruction gap:", class_distance(rec, t))

# The scalar directions split off the chart coordinates.
bar, tau = trace_split(chart.X)
print("traceless part traces:", [abs(np.trace(m)) for m in bar.mats])
print("scalar parts tau:", np.round(tau, 4))

# Stabilization appends zero components; the Kronecker pairing multiplies
# sizes and concatenates tuples.
print("stabilized length:", stabilize(chart.X, 2).n)
pair = pairing_chart(chart.X, bar)
print("pairing size:", pair.s, "commutes:", commutator_defect(pair.mats))
