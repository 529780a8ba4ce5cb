"""Isotropy analysis: decomposition types, fixed-subspace dimensions, and
the unordered-flag parametrization of unit tuples at p = 2.
"""

import numpy as np

from commvar import (
    DecompType,
    decomposition_type,
    fixed_subspace_dim,
    flag_map,
    flag_map_preimage,
    gen_partition_tuple,
    is_complete_type,
    tuple_norm,
    unit_normalize,
)
from commvar.commodel import CommutingTuple
from commvar.numkit import fro
from commvar.rng import SplitMix64, haar_unitary

# A tuple engineered to have eigenspace dimensions (2, 2, 1).
t = gen_partition_tuple(5, n=2, parts=(2, 2, 1), kind="skew_hermitian")
d = decomposition_type(t)
print("decomposition type:", d.parts, "complete:", is_complete_type(d))

# Unit-norm traceless tuples always have complete type: a single block
# would force the tuple to vanish.
u = unit_normalize(gen_partition_tuple(5, 2, (2, 2, 1), kind="skew_hermitian",
                                       traceless=True))
print("unit tuple norm:", tuple_norm(u), "type:", decomposition_type(u).parts)

# The linear space of tuples fixed by a block subgroup has dimension
# n (k - 1), for unitary and orthogonal blocks alike.
for parts in [(3,), (2, 1), (1, 1, 1)]:
    dt = DecompType(parts)
    print(f"fixed dim for blocks {parts}, n=2:", fixed_subspace_dim(dt, 2))

# At p = 2, every unit tuple is a conjugated diagonal pair and the
# preimage class under the flag parametrization is unique.
rng = SplitMix64(9)
g = haar_unitary(rng, 2)
amp = 1.0 / np.sqrt(2.0)
x = CommutingTuple("skew_hermitian", np.array([np.diag([1j * amp, -1j * amp])]))
target = flag_map(g, x)
g_rec, x_rec = flag_map_preimage(target)
rebuilt = flag_map(g_rec, x_rec)
print("preimage residual:",
      max(fro(p - q) for p, q in zip(rebuilt.mats, target.mats)))
