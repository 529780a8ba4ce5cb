import math

import numpy as np
import pytest

from commvar.errors import IndexOutOfRange, NotOrthogonal
from commvar.gammaconf import (
    BASEPOINT,
    Configuration,
    Label,
    SpherePoint,
    apply_based_map,
    canonicalize,
    config_distance,
    point_distance,
    push_labels,
    rank,
    sigma_action_config,
    smash,
    sphere_coord,
)
from commvar.generate import gen_random_config
from commvar.symuniverse import UniverseBasis


def _unit_labels(universe, *specs):
    """Labels from (column indices, coords) specs on the standard basis."""
    eye = np.eye(universe.dim, dtype=complex)
    out = []
    for cols, coords in specs:
        point = BASEPOINT if coords is None else SpherePoint(coords)
        out.append(Label(eye[:, list(cols)], point))
    return out


def test_sphere_coord_values():
    assert sphere_coord(0.0) == pytest.approx(-1.0)
    # (i - 1)/(i + 1) = i by direct complex division
    assert sphere_coord(1.0) == pytest.approx(1j)
    assert sphere_coord(math.inf) == pytest.approx(1.0)
    for t in [-3.0, 0.25, 17.0]:
        assert abs(abs(sphere_coord(t)) - 1.0) < 1e-15


def test_canonicalize_drops_basepoint_and_empty():
    u = UniverseBasis(2, 1)
    c = Configuration(u, _unit_labels(u, ((0,), None)))
    assert canonicalize(c).k == 0
    near = SpherePoint([1.0 + 1e-12, -1.0])  # first coordinate within eps of 1
    c2 = Configuration(u, [Label(np.eye(u.dim, dtype=complex)[:, [0]], near)])
    assert canonicalize(c2).k == 0
    zero_dim = Configuration(u, [Label(np.zeros((u.dim, 0), dtype=complex),
                                       SpherePoint([-1.0, -1.0]))])
    assert canonicalize(zero_dim).k == 0


def test_canonicalize_merges_equal_points():
    u = UniverseBasis(2, 1)
    x = [-1.0, 1j]
    c = Configuration(u, _unit_labels(u, ((0,), x), ((1,), x)))
    out = canonicalize(c)
    assert out.k == 1
    assert out.labels[0].frame.shape[1] == 2
    assert rank(out) == 2


def test_canonicalize_idempotent_and_orthogonality_error():
    u = UniverseBasis(2, 1)
    c = gen_random_config(4, u, max_labels=3, max_rank=3)
    again = canonicalize(c)
    assert config_distance(c, again) < 1e-13
    overlapping = Configuration(u, _unit_labels(
        u, ((0,), [-1.0, -1.0]), ((0, 1), [1j, -1.0])))
    with pytest.raises(NotOrthogonal):
        canonicalize(overlapping)


def test_rank_additive():
    u = UniverseBasis(2, 2)
    c = Configuration(u, _unit_labels(
        u, ((0, 1), [-1.0, -1.0]), ((2, 3, 4), [1j, -1j])))
    assert rank(canonicalize(c)) == 5
    assert rank(Configuration(u, [])) == 0
    # dropping a basepoint label drops its dimension
    c2 = Configuration(u, _unit_labels(
        u, ((0, 1), [-1.0, -1.0]), ((2, 3, 4), None)))
    assert rank(canonicalize(c2)) == 2


def test_apply_based_map_identity_and_delete():
    u = UniverseBasis(2, 1)
    c = canonicalize(Configuration(u, _unit_labels(
        u, ((0,), [-1.0, -1.0]), ((1,), [1j, -1.0]))))
    same = apply_based_map(c, [1, 2], 2)
    assert config_distance(c, same) < 1e-13
    gone = apply_based_map(c, [0, 0], 2)
    assert gone.k == 0


def test_apply_based_map_fold_on_equal_points():
    u = UniverseBasis(2, 1)
    x = [-1.0, 1j]
    c = canonicalize(Configuration(u, _unit_labels(u, ((0,), x), ((1,), x))))
    # canonicalize already merged the two labels; rebuild unmerged input
    c_raw = Configuration(u, _unit_labels(u, ((0,), x), ((1,), x)))
    folded = apply_based_map(c_raw, [1, 1], 1)
    assert folded.k == 1
    assert rank(folded) == 2
    assert config_distance(folded, c) < 1e-13


def test_apply_based_map_index_errors():
    u = UniverseBasis(2, 1)
    c = canonicalize(Configuration(u, _unit_labels(u, ((0,), [-1.0, -1.0]))))
    with pytest.raises(IndexOutOfRange):
        apply_based_map(c, [3], 2)
    with pytest.raises(IndexOutOfRange):
        apply_based_map(c, [1, 1], 2)


def test_push_labels_functorial():
    u = UniverseBasis(2, 1)
    x = [-1.0, 1j]
    labels = _unit_labels(u, ((0,), x), ((1,), x), ((2,), x))
    alpha = [1, 2, 1]
    beta = [2, 0]
    mid = push_labels(labels, alpha, 2, u.dim)
    two_step = canonicalize(Configuration(u, push_labels(mid, beta, 2, u.dim)))
    composed = [beta[a - 1] if a else 0 for a in alpha]
    direct = apply_based_map(Configuration(u, labels), composed, 2)
    assert config_distance(two_step, direct) < 1e-13


def test_sigma_action_is_group_action():
    u = UniverseBasis(3, 1)
    c = gen_random_config(9, u, max_labels=2, max_rank=3)
    sigma, tau = [1, 2, 0], [0, 2, 1]
    comp = [sigma[tau[j]] for j in range(3)]
    lhs = sigma_action_config(sigma, sigma_action_config(tau, c))
    rhs = sigma_action_config(comp, c)
    assert config_distance(lhs, rhs) < 1e-12
    assert rank(lhs) == rank(c)
    ident = sigma_action_config([0, 1, 2], c)
    assert config_distance(ident, c) < 1e-13


def test_sigma_action_swaps_coordinates():
    u = UniverseBasis(2, 1)
    c = canonicalize(Configuration(u, _unit_labels(u, ((0,), [-1.0, 1j]))))
    out = sigma_action_config([1, 0], c)
    got = out.labels[0].point.coords
    assert np.allclose(got, [1j, -1.0])


def test_smash_and_point_distance():
    x = SpherePoint([-1.0])
    y = SpherePoint([1j, -1j])
    assert np.allclose(smash(x, y).coords, [-1.0, 1j, -1j])
    assert smash(x, BASEPOINT).is_basepoint
    assert point_distance(BASEPOINT, BASEPOINT) == 0.0
    assert point_distance(x, BASEPOINT) == math.inf
    assert point_distance(y, y) == 0.0


def test_config_distance_detects_differences():
    u = UniverseBasis(2, 1)
    a = canonicalize(Configuration(u, _unit_labels(u, ((0,), [-1.0, -1.0]))))
    b = canonicalize(Configuration(u, _unit_labels(u, ((1,), [-1.0, -1.0]))))
    assert config_distance(a, b) > 0.5
    assert config_distance(a, Configuration(u, [])) == math.inf
    moved = canonicalize(Configuration(u, _unit_labels(u, ((0,), [-1.0, 1j]))))
    assert config_distance(a, moved) > 0.5
