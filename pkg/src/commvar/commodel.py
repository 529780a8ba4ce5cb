"""Commuting matrix tuples and their equivalence with labeled configurations.

A commuting tuple is a list of pairwise commuting square matrices, flagged as
unitary, skew-Hermitian, or real symmetric.  Joint diagonalization by
extended Jacobi sweeps produces the unique coarsest orthogonal decomposition
on whose summands every matrix acts by a scalar; the eigenblocks with no
value equal to 1 assemble the distinguished subspace F on which every
component minus the identity is non-singular.  Reading eigenblocks as labels
(frame, value tuple) converts a unitary tuple into a configuration and back.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotCommuting, ShapeMismatch
from .gammaconf import (
    Configuration,
    Label,
    SpherePoint,
    canonicalize,
)
from .numkit import (
    DEFAULT_TOL,
    Tolerances,
    check_real_symmetric,
    check_skew_hermitian,
    check_unitary,
    commutator_defect,
    fro,
    joint_diagonalizer,
    off_norm,
    orthonormalize,
    phase_normalize,
)
from .symuniverse import UniverseBasis, conjugate_by_perm, perm_inverse, sigma_star

KINDS = ("unitary", "skew_hermitian", "real_symmetric")

_CHECKERS = {
    "unitary": check_unitary,
    "skew_hermitian": check_skew_hermitian,
    "real_symmetric": check_real_symmetric,
}


@dataclass
class CommutingTuple:
    """n pairwise commuting s x s matrices of one structural kind.

    mats is stacked (n, s, s); real_symmetric tuples are stored with a real
    dtype, the other kinds as complex.  ambient optionally records the
    universe whose coordinates the matrices act on.
    """

    kind: str
    mats: np.ndarray
    ambient: UniverseBasis | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        dtype = float if self.kind == "real_symmetric" else complex
        self.mats = np.asarray(self.mats, dtype=dtype)
        if self.mats.ndim != 3 or self.mats.shape[1] != self.mats.shape[2]:
            raise ShapeMismatch(f"expected (n, s, s) stack, got {self.mats.shape}")

    @property
    def n(self) -> int:
        return self.mats.shape[0]

    @property
    def s(self) -> int:
        return self.mats.shape[1]

    def validate(self, tol: Tolerances = DEFAULT_TOL):
        check = _CHECKERS[self.kind]
        for m in self.mats:
            check(m, tol)
        defect = commutator_defect(self.mats)
        if defect > tol.eps_struct:
            raise NotCommuting(f"commutator defect {defect:.3e}")
        return self


def identity_tuple(n: int, s: int, ambient: UniverseBasis | None = None) -> CommutingTuple:
    return CommutingTuple("unitary", np.broadcast_to(np.eye(s), (n, s, s)).copy(), ambient)


@dataclass
class EigenBlock:
    """Simultaneous eigenspace with its tuple of eigenvalues."""

    frame: np.ndarray
    values: np.ndarray


def _hermitian_components(t: CommutingTuple) -> np.ndarray:
    if t.kind == "unitary":
        parts = []
        for a in t.mats:
            parts.append(0.5 * (a + a.conj().T))
            parts.append((a - a.conj().T) / 2j)
        return np.array(parts) if parts else np.zeros((0, t.s, t.s), dtype=complex)
    if t.kind == "skew_hermitian":
        return np.array([-1j * x for x in t.mats]) if t.n else np.zeros((0, t.s, t.s), dtype=complex)
    return t.mats.copy()


def _cluster_columns(vals: np.ndarray, eps: float) -> list[list[int]]:
    """Single-linkage clustering of value tuples in the max metric."""
    s = vals.shape[1]
    parent = list(range(s))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in range(s):
        for b in range(a + 1, s):
            d = np.max(np.abs(vals[:, a] - vals[:, b])) if vals.shape[0] else 0.0
            if d < eps:
                parent[find(b)] = find(a)
    groups: dict[int, list[int]] = {}
    for i in range(s):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _value_key(values: np.ndarray):
    return tuple(v for z in np.atleast_1d(values) for v in (complex(z).real, complex(z).imag))


def joint_diagonalize(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL):
    """Simultaneously diagonalize a commuting tuple.

    Returns (Q, blocks): Q unitary (orthogonal for real tuples) with
    Q^H A_j Q diagonal up to a joint residual of 1e-8 max_j ||A_j||_F, and
    the coarsest eigenblock decomposition obtained by single-linkage
    clustering of the joint eigenvalue tuples at eps_cluster.  Blocks are
    sorted by their value tuples and carry phase-normalized frames.
    """
    t.validate(tol)
    real = t.kind == "real_symmetric"
    comps = _hermitian_components(t)
    scale = max((fro(a) for a in t.mats), default=0.0)
    q = joint_diagonalizer(comps, tol, off_target=1e-12 * scale,
                           off_required=1e-8 * scale)
    if real:
        q = q.real
    diag = np.einsum("ab,kbc,cd->kad", q.conj().T, t.mats, q)
    resid = np.sqrt(sum(off_norm(d) ** 2 for d in diag)) if t.n else 0.0
    if resid > 1e-8 * max(scale, 1e-300):
        raise NotCommuting(f"joint residual {resid:.3e} for tuple of size {t.s}")
    vals = np.array([np.diagonal(d) for d in diag]) if t.n else np.zeros((0, t.s))
    if real:
        vals = vals.real
    blocks = []
    for cols in _cluster_columns(vals, tol.eps_cluster):
        frame = phase_normalize(orthonormalize(q[:, cols], tol), tol)
        values = vals[:, cols].mean(axis=1) if t.n else np.zeros(0)
        blocks.append(EigenBlock(frame, values))
    blocks.sort(key=lambda b: _value_key(b.values))
    return q, blocks


def F_subspace(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Frame spanning the largest subspace on which every A_i - Id is
    non-singular: the sum of the eigenblocks whose value tuple stays away
    from 1 in every coordinate (threshold eps_base)."""
    _, blocks = joint_diagonalize(t, tol)
    keep = [
        b.frame for b in blocks
        if b.values.size == 0 or np.all(np.abs(b.values - 1.0) > tol.eps_base)
    ]
    if t.n == 0:
        return np.zeros((t.s, 0), dtype=t.mats.dtype if t.mats.size else complex)
    if not keep:
        return np.zeros((t.s, 0), dtype=blocks[0].frame.dtype if blocks else complex)
    return np.hstack(keep)


def canonical_rep(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Canonical representative of the equivalence class of a unitary tuple:
    each component restricted to F and extended by the identity."""
    f = F_subspace(t, tol)
    p = f @ f.conj().T
    eye = np.eye(t.s)
    mats = np.array([p @ a @ p + (eye - p) for a in t.mats])
    return CommutingTuple("unitary", mats, t.ambient)


def class_distance(t1: CommutingTuple, t2: CommutingTuple,
                   tol: Tolerances = DEFAULT_TOL) -> float:
    """Distance between equivalence classes via canonical representatives."""
    a = canonical_rep(t1, tol)
    b = canonical_rep(t2, tol)
    if a.mats.shape != b.mats.shape:
        raise ShapeMismatch("tuples live on different spaces")
    if a.n == 0:
        return 0.0
    return max(fro(x - y) for x, y in zip(a.mats, b.mats))


def tuples_equivalent(t1: CommutingTuple, t2: CommutingTuple,
                      tol: Tolerances = DEFAULT_TOL) -> bool:
    """Two unitary tuples are equivalent iff their canonical representatives
    agree within eps_struct."""
    return class_distance(t1, t2, tol) <= tol.eps_struct


def config_to_commuting(c: Configuration, tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Unitary tuple acting on the universe of a canonical configuration:
    component j scales each label subspace by the j-th point coordinate and
    fixes the orthogonal complement."""
    dim = c.universe.dim
    eye = np.eye(dim, dtype=complex)
    mats = np.array([eye.copy() for _ in range(c.universe.n)])
    for lab in c.labels:
        if lab.point.is_basepoint:
            continue
        proj = lab.frame @ lab.frame.conj().T
        for j in range(c.universe.n):
            mats[j] += (lab.point.coords[j] - 1.0) * proj
    return CommutingTuple("unitary", mats, c.universe)


def commuting_to_config(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Inverse direction: eigenblocks whose value tuple avoids 1 become
    labels; blocks touching 1 are the basepoint part and disappear."""
    if t.ambient is None:
        raise ValueError("tuple needs an ambient universe to become a configuration")
    if t.kind != "unitary":
        raise ValueError("only unitary tuples correspond to configurations")
    _, blocks = joint_diagonalize(t, tol)
    labels = []
    for b in blocks:
        point = SpherePoint(b.values)
        if point.near_basepoint(tol.eps_base):
            continue
        labels.append(Label(b.frame, point))
    return canonicalize(Configuration(t.ambient, labels), tol)


def sigma_action_tuple(sigma, t: CommutingTuple,
                       tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Permutation action on tuples over a universe: component j of the
    output is sigma_* A_{sigma^{-1}(j)} sigma_*^{-1}.

    The inverse index pairs with the coordinate convention
    (sigma . x)_j = x_{sigma^{-1}(j)} to make the action a left action that
    intertwines the configuration correspondence.
    """
    if t.ambient is None:
        raise ValueError("tuple needs an ambient universe for the permutation action")
    perm = sigma_star(sigma, t.ambient)
    inv = perm_inverse(sigma)
    mats = np.array([conjugate_by_perm(perm, t.mats[inv[j]]) for j in range(t.n)])
    return CommutingTuple(t.kind, mats, t.ambient)
