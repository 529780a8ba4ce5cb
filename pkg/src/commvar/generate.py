"""Seeded generators for exactly commuting tuples and canonical
configurations.

Tuples are exact by construction: sample an eigenvalue tuple per coordinate,
sample a Haar unitary (or orthogonal) basis, and conjugate the diagonals.
All randomness flows through the SplitMix64 stream, so every generator is
deterministic in its seed.
"""

from __future__ import annotations

import numpy as np

from .commodel import CommutingTuple
from .gammaconf import Configuration, Label, SpherePoint, canonicalize
from .numkit import DEFAULT_TOL, Tolerances
from .rng import SplitMix64, haar_orthogonal, haar_unitary, unit_phase
from .symuniverse import UniverseBasis


def _sample_value(rng: SplitMix64, kind: str, margin: float) -> complex:
    if kind == "unitary":
        return unit_phase(rng, margin)
    if kind == "skew_hermitian":
        return 1j * rng.normal()
    return rng.normal()


def _sample_value_columns(rng: SplitMix64, kind: str, n: int, cols: int,
                          margin: float, min_separation: float) -> np.ndarray:
    """(n, cols) eigenvalue tuples, column c belonging to eigenvector c;
    columns are resampled until pairwise max-metric separation is met."""
    vals = np.zeros((n, cols), dtype=complex)
    for c in range(cols):
        for _attempt in range(1000):
            col = np.array([_sample_value(rng, kind, margin) for _ in range(n)])
            ok = all(
                np.max(np.abs(col - vals[:, p])) >= min_separation
                for p in range(c)
            ) if n else True
            if ok or min_separation == 0.0:
                break
        vals[:, c] = col
    return vals


def _assemble(kind: str, vals: np.ndarray, rng: SplitMix64, s: int,
              ambient=None) -> CommutingTuple:
    n = vals.shape[0]
    if kind == "real_symmetric":
        q = haar_orthogonal(rng, s)
        mats = np.array([q @ np.diag(vals[j].real) @ q.T for j in range(n)]) \
            if n else np.zeros((0, s, s))
    else:
        q = haar_unitary(rng, s)
        mats = np.array([q @ np.diag(vals[j]) @ q.conj().T for j in range(n)]) \
            if n else np.zeros((0, s, s), dtype=complex)
        if kind == "skew_hermitian":
            mats = 0.5 * (mats - np.conj(np.swapaxes(mats, 1, 2)))
    return CommutingTuple(kind, mats, ambient)


def gen_random_commuting(seed: int, n: int, s: int, kind: str,
                         margin: float = 0.0,
                         min_separation: float = 0.0,
                         ambient=None) -> CommutingTuple:
    """Exactly commuting random tuple, deterministic in the seed.

    margin keeps unitary eigenvalues away from 1 (arc distance);
    min_separation enforces pairwise distinctness of the eigenvalue tuples
    in the max metric.
    """
    rng = SplitMix64(seed)
    vals = _sample_value_columns(rng, kind, n, s, margin, min_separation)
    return _assemble(kind, vals, rng, s, ambient)


def gen_partition_tuple(seed: int, n: int, parts, kind: str = "skew_hermitian",
                        separation: float = 0.5, traceless: bool = False,
                        unit: bool = False) -> CommutingTuple:
    """Commuting tuple whose coarsest eigenspace decomposition realizes the
    prescribed part sizes: one shared eigenvalue tuple per part, parts kept
    apart by `separation` in the max metric."""
    parts = list(parts)
    s = sum(parts)
    rng = SplitMix64(seed)
    part_vals = _sample_value_columns(rng, kind, n, len(parts), 0.3, separation)
    cols = np.hstack([
        np.repeat(part_vals[:, [p]], parts[p], axis=1) for p in range(len(parts))
    ]) if n else np.zeros((0, s))
    t = _assemble(kind, cols, rng, s)
    if traceless or unit:
        if kind == "skew_hermitian":
            tr = np.array([np.trace(m) / s for m in t.mats]).reshape(-1, 1, 1)
            mats = t.mats - tr * np.eye(s)
        elif kind == "real_symmetric":
            tr = np.array([np.trace(m).real / s for m in t.mats]).reshape(-1, 1, 1)
            mats = t.mats - tr * np.eye(s)
        else:
            raise ValueError("traceless projection needs a Lie-algebra kind")
        t = CommutingTuple(kind, mats)
    if unit:
        norm = np.sqrt(sum(np.linalg.norm(m) ** 2 for m in t.mats))
        if norm == 0.0:
            raise ValueError("partition with a single part gives the zero tuple")
        t = CommutingTuple(kind, t.mats / norm)
    return t


def gen_random_config(seed: int, universe: UniverseBasis, max_labels: int = 3,
                      max_rank: int | None = None, point_margin: float = 0.35,
                      min_point_sep: float = 0.2, dims=None,
                      tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Canonical random configuration with well-separated labels.

    Label subspaces are slices of a Haar unitary frame of the universe;
    points stay `point_margin` away from the basepoint and pairwise
    `min_point_sep` apart, so canonicalization is stable.  Passing `dims`
    pins the label dimensions (and hence the rank) exactly.
    """
    rng = SplitMix64(seed)
    dim = universe.dim
    if dims is not None:
        dims = list(dims)
        if sum(dims) > dim:
            raise ValueError("label dimensions exceed the universe dimension")
    else:
        if max_rank is None:
            max_rank = dim
        max_rank = min(max_rank, dim)
        k = rng.randint(1, min(max_labels, max_rank) + 1)
        dims = []
        budget = max_rank
        for i in range(k):
            d = rng.randint(1, budget - (k - 1 - i) + 1)
            dims.append(d)
            budget -= d
    basis = haar_unitary(rng, dim)
    labels = []
    offset = 0
    points: list[np.ndarray] = []
    for d in dims:
        frame = basis[:, offset:offset + d]
        offset += d
        for _attempt in range(1000):
            coords = np.array([unit_phase(rng, point_margin) for _ in range(universe.n)])
            if all(np.max(np.abs(coords - p)) >= min_point_sep for p in points):
                break
        points.append(coords)
        labels.append(Label(frame, SpherePoint(coords)))
    return canonicalize(Configuration(universe, labels), tol)


def gen_exact_rank_tuple(seed: int, n: int, s: int, ambient_dim: int | None = None,
                         tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Unitary tuple of exact stratum rank s inside a larger ambient space:
    s eigenvalue columns away from 1 and mutually separated, padded by
    identity directions."""
    if ambient_dim is None:
        ambient_dim = s + 2
    if ambient_dim < s:
        raise ValueError("ambient dimension must be at least the rank")
    rng = SplitMix64(seed)
    vals = _sample_value_columns(rng, "unitary", n, s, 0.3, 0.2)
    ones = np.ones((n, ambient_dim - s), dtype=complex)
    cols = np.hstack([vals, ones]) if n else np.zeros((0, ambient_dim))
    return _assemble("unitary", cols, rng, ambient_dim)
