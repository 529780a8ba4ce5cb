"""Unit, multiplication, and structure maps of the configuration tower,
checked in both pictures.
"""

from commvar import (
    SpherePoint,
    class_distance,
    config_distance,
    config_to_commuting,
    gen_random_config,
    multiply,
    multiply_tuple,
    rank,
    smash,
    structure_map,
    unit_map,
)
from commvar.symuniverse import UniverseBasis

ua = UniverseBasis(2, 1)
ub = UniverseBasis(1, 1)
a = gen_random_config(3, ua, max_labels=2, max_rank=2)
b = gen_random_config(4, ub, max_labels=2, max_rank=2)
print("rank a:", rank(a), " rank b:", rank(b))

# Multiplication tensors the labels pairwise; ranks multiply.
ab = multiply(a, b)
print("rank of product:", rank(ab), "=", rank(a), "*", rank(b))

# The unit places a sphere point on the scalar line; the structure map is
# multiplication with a unit.
y = SpherePoint([-1.0])
sm = structure_map(a, y)
via_unit = multiply(a, unit_map(y, ub))
print("structure map vs unit route:", config_distance(sm, via_unit))
print("rank preserved:", rank(sm) == rank(a))

# Units are compatible with smashing points together.
x = SpherePoint([1j, -1.0])
lhs = structure_map(unit_map(x, ua), y)
rhs = unit_map(smash(x, y), UniverseBasis(3, 2))
print("unit law gap:", config_distance(lhs, rhs))

# The commuting-tuple formulas define the same maps through the
# configuration/tuple correspondence.
ta, tb = config_to_commuting(a), config_to_commuting(b)
gap = class_distance(config_to_commuting(ab), multiply_tuple(ta, tb))
print("cross-picture gap:", gap)
