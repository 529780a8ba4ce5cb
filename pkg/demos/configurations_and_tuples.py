"""Labeled configurations and commuting unitary tuples are two pictures of
the same thing.  This script builds a configuration, converts it to a
commuting tuple, and walks back.
"""

import numpy as np

from commvar import (
    Configuration,
    Label,
    SpherePoint,
    canonicalize,
    commuting_to_config,
    config_distance,
    config_to_commuting,
    rank,
    sigma_action_config,
    sigma_action_tuple,
    class_distance,
)
from commvar.symuniverse import UniverseBasis

# A universe: polynomials in 2 variables up to degree 1 (dimension 3).
universe = UniverseBasis(2, 1)
print("universe:", universe)

# Two labels: orthogonal coordinate subspaces, each tagged with a point of
# the 2-torus away from the basepoint (no coordinate equal to 1).
eye = np.eye(universe.dim, dtype=complex)
config = canonicalize(Configuration(universe, [
    Label(eye[:, [0]], SpherePoint([-1.0, 1j])),
    Label(eye[:, [1, 2]], SpherePoint([1j, -1j])),
]))
print("labels:", config.k, "rank:", rank(config))

# The corresponding commuting tuple scales each label subspace by the
# point coordinates and fixes the rest.
tuple_ = config_to_commuting(config)
print("tuple component 0:")
print(np.round(tuple_.mats[0], 4))

# Joint diagonalization recovers the configuration.
back = commuting_to_config(tuple_)
print("round-trip distance:", config_distance(config, back))

# The symmetric group acts compatibly on both sides.
sigma = [1, 0]
lhs = sigma_action_tuple(sigma, tuple_)
rhs = config_to_commuting(sigma_action_config(sigma, config))
print("equivariance gap:", class_distance(lhs, rhs))
