"""Level structure of the tower of configuration spaces: unit maps,
multiplication, and structure maps, in both pictures.

The configuration picture is the computational primary; the commuting-tuple
formulas are implemented verbatim as an independent second route, and their
agreement through the configuration/tuple correspondence is the strongest
correctness oracle in the package.
"""

from __future__ import annotations

import numpy as np

from .commodel import CommutingTuple, F_subspace
from .gammaconf import (
    Configuration,
    Label,
    SpherePoint,
    canonicalize,
    smash,
)
from .numkit import DEFAULT_TOL, Tolerances
from .symuniverse import UniverseBasis, j0, psi_embed


def unit_map(x: SpherePoint, universe: UniverseBasis,
             tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Unit: a sphere point labels the scalar line of the universe.

    Basepoints (exact or within eps_base) give the empty configuration.
    """
    if x.is_basepoint:
        return Configuration(universe, [])
    if len(x.coords) != universe.n:
        raise ValueError("point dimension must match the universe")
    return canonicalize(Configuration(universe, [Label(j0(universe), x)]), tol)


def unit_map_tuple(x: SpherePoint, universe: UniverseBasis,
                   tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Tuple picture of the unit: coordinate j scales the scalar line by
    x_j and fixes everything else."""
    dim = universe.dim
    mats = np.array([np.eye(dim, dtype=complex) for _ in range(universe.n)])
    if not x.is_basepoint:
        if len(x.coords) != universe.n:
            raise ValueError("point dimension must match the universe")
        idx = universe.index[(0,) * universe.n]
        for j in range(universe.n):
            mats[j, idx, idx] = x.coords[j]
    return CommutingTuple("unitary", mats, universe)


def multiply(a: Configuration, b: Configuration, degree_bound: int | None = None,
             tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Multiplication of configurations: one label per pair, with the tensor
    frame embedded in the joint universe and the smashed point."""
    psi = psi_embed(a.universe, b.universe, degree_bound)
    labels = [
        Label(psi.kron_frame(la.frame, lb.frame, tol), smash(la.point, lb.point))
        for la in a.labels
        for lb in b.labels
    ]
    return canonicalize(Configuration(psi.target, labels), tol)


def structure_map(a: Configuration, y: SpherePoint, m: int | None = None,
                  right_degree: int | None = None,
                  tol: Tolerances = DEFAULT_TOL) -> Configuration:
    """Structure map: smash every point with y and embed every frame along
    the scalar line of a fresh universe of m variables.

    Equals multiply(a, unit_map(y, ...)); implemented directly from its own
    formula so that the equality stays a testable law.
    """
    if m is None:
        if y.is_basepoint:
            raise ValueError("structure map at the basepoint needs an explicit m")
        m = len(y.coords)
    if right_degree is None:
        right_degree = a.universe.D
    right = UniverseBasis(m, right_degree)
    psi = psi_embed(a.universe, right)
    if y.is_basepoint:
        return Configuration(psi.target, [])
    jframe = j0(right)
    labels = [
        Label(psi.kron_frame(la.frame, jframe, tol), smash(la.point, y))
        for la in a.labels
    ]
    return canonicalize(Configuration(psi.target, labels), tol)


def _extend_by_identity(g: np.ndarray, small: np.ndarray, dim: int) -> np.ndarray:
    proj = g @ g.conj().T
    return g @ small @ g.conj().T + (np.eye(dim, dtype=complex) - proj)


def multiply_tuple(ta: CommutingTuple, tb: CommutingTuple,
                   degree_bound: int | None = None,
                   tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Tuple picture of the multiplication.

    Restrict each component to the distinguished subspace of its own tuple,
    tensor with the identity of the other side, push into the joint universe,
    and extend by the identity.
    """
    if ta.ambient is None or tb.ambient is None:
        raise ValueError("both tuples need ambient universes")
    fa = F_subspace(ta, tol)
    fb = F_subspace(tb, tol)
    ra, rb = fa.shape[1], fb.shape[1]
    psi = psi_embed(ta.ambient, tb.ambient, degree_bound)
    g = psi.kron_frame(fa, fb, tol)
    dim = psi.target.dim
    mats = []
    for a in ta.mats:
        ma = fa.conj().T @ a @ fa
        mats.append(_extend_by_identity(g, np.kron(ma, np.eye(rb)), dim))
    for b in tb.mats:
        nb = fb.conj().T @ b @ fb
        mats.append(_extend_by_identity(g, np.kron(np.eye(ra), nb), dim))
    stack = np.array(mats) if mats else np.zeros((0, dim, dim), dtype=complex)
    return CommutingTuple("unitary", stack, psi.target)


def structure_map_tuple(t: CommutingTuple, y: SpherePoint, m: int | None = None,
                        right_degree: int | None = None,
                        tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Tuple picture of the structure map: components of t act on F tensored
    with the scalar line; the new components scale that subspace by the
    coordinates of y."""
    if t.ambient is None:
        raise ValueError("tuple needs an ambient universe")
    if m is None:
        if y.is_basepoint:
            raise ValueError("structure map at the basepoint needs an explicit m")
        m = len(y.coords)
    if right_degree is None:
        right_degree = t.ambient.D
    right = UniverseBasis(m, right_degree)
    psi = psi_embed(t.ambient, right)
    dim = psi.target.dim
    if y.is_basepoint:
        mats = np.array([np.eye(dim, dtype=complex) for _ in range(t.n + m)])
        return CommutingTuple("unitary", mats, psi.target)
    f = F_subspace(t, tol)
    r = f.shape[1]
    g = psi.kron_frame(f, j0(right), tol)
    mats = []
    for a in t.mats:
        ma = f.conj().T @ a @ f
        mats.append(_extend_by_identity(g, ma, dim))
    for j in range(m):
        mats.append(_extend_by_identity(g, y.coords[j] * np.eye(r, dtype=complex), dim))
    return CommutingTuple("unitary", np.array(mats), psi.target)
