"""Rank stratification: Cayley charts, trace splitting, stabilization,
and the Kronecker pairing.

The Cayley transform X -> (X - Id)(X + Id)^{-1} carries skew-Hermitian
matrices bijectively onto the unitaries without eigenvalue 1.  Conjugating a
unitary tuple onto its distinguished subspace F and pulling back along the
transform yields the chart (X, f) of the open stratum of exact rank s: X a
commuting skew-Hermitian tuple of size s, f an isometric frame spanning F.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .commodel import CommutingTuple, EigenBlock, joint_diagonalize
from .errors import ShapeMismatch, SingularAtOne, WrongStratum
from .numkit import (
    DEFAULT_TOL,
    Tolerances,
    check_skew_hermitian,
    fro,
    leading_index,
    require_square,
)


@dataclass
class SubquotientChart:
    """Chart data of a stratum element.

    s          stratum rank (dimension of F)
    X          commuting skew-Hermitian tuple of size s
    f          isometric frame of s columns spanning F in the ambient space
    traceless  X with the scalar part removed
    tau        imaginary parts of tr(X_i)/s, one real number per component
    """

    s: int
    X: CommutingTuple
    f: np.ndarray
    traceless: CommutingTuple
    tau: np.ndarray


def cayley(x: np.ndarray) -> np.ndarray:
    """Cayley transform of a skew-Hermitian matrix: (X - Id)(X + Id)^{-1}.

    The output is unitary and its distance from the identity is invertible;
    the transform is equivariant under unitary conjugation.
    """
    s = require_square(x)
    check_skew_hermitian(x)
    eye = np.eye(s)
    # factors commute, so the one-sided solve computes the two-sided product
    return np.linalg.solve(np.asarray(x, dtype=complex) + eye, np.asarray(x, dtype=complex) - eye)


def cayley_inv(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse Cayley transform (Id - A)^{-1}(Id + A).

    Requires the smallest singular value of A - Id to exceed eps_struct;
    raises SingularAtOne otherwise.  The result is skew-Hermitized to kill
    roundoff in the Hermitian direction.
    """
    s = require_square(a)
    a = np.asarray(a, dtype=complex)
    eye = np.eye(s)
    sv = np.linalg.svd(a - eye, compute_uv=False)
    if s and sv[-1] <= tol.eps_struct:
        raise SingularAtOne(f"A - Id has smallest singular value {sv[-1]:.3e}")
    x = np.linalg.solve(eye - a, eye + a)
    return 0.5 * (x - x.conj().T)


def stratum_rank(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL) -> int:
    """Dimension of the distinguished subspace F of a unitary tuple."""
    from .commodel import F_subspace

    return F_subspace(t, tol).shape[1]


def _sorted_f_blocks(blocks: list[EigenBlock], tol: Tolerances) -> list[EigenBlock]:
    keep = [
        b for b in blocks
        if b.values.size == 0 or np.all(np.abs(b.values - 1.0) > tol.eps_base)
    ]
    keep.sort(key=lambda b: (
        leading_index(b.frame, tol),
        tuple(v for z in b.values for v in (complex(z).real, complex(z).imag)),
    ))
    return keep


def subquotient_chart(t: CommutingTuple, tol: Tolerances = DEFAULT_TOL,
                      frame: np.ndarray | None = None) -> SubquotientChart:
    """Chart of a unitary tuple in the open stratum of its exact rank.

    The frame defaults to the joint eigenblock frames of F sorted by their
    leading coordinate; passing a frame spanning F exposes the documented
    U(s)-conjugation ambiguity.  Raises WrongStratum when some component
    minus the identity is singular on F at working tolerance.
    """
    if t.kind != "unitary":
        raise ValueError("charts are defined for unitary tuples")
    _, blocks = joint_diagonalize(t, tol)
    fblocks = _sorted_f_blocks(blocks, tol)
    f = (np.hstack([b.frame for b in fblocks]) if fblocks
         else np.zeros((t.s, 0), dtype=complex))
    s = f.shape[1]
    if frame is not None:
        frame = np.asarray(frame, dtype=complex)
        if frame.shape != (t.s, s):
            raise ShapeMismatch(f"frame must be {(t.s, s)}, got {frame.shape}")
        if fro(frame @ frame.conj().T - f @ f.conj().T) > 1e-8:
            raise WrongStratum("supplied frame does not span F")
        f = frame
    xs = []
    for a in t.mats:
        b = f.conj().T @ a @ f
        try:
            xs.append(cayley_inv(b, tol))
        except SingularAtOne as exc:
            raise WrongStratum(
                "a component is singular at 1 on F; tolerance breach between "
                "clustering and the chart"
            ) from exc
    x_stack = np.array(xs) if xs else np.zeros((0, s, s), dtype=complex)
    x = CommutingTuple("skew_hermitian", x_stack)
    traceless, tau = trace_split(x)
    return SubquotientChart(s, x, f, traceless, tau)


def reconstruct_chart(chart: SubquotientChart, ambient_dim: int,
                      tol: Tolerances = DEFAULT_TOL) -> CommutingTuple:
    """Rebuild the canonical unitary tuple from (X, f): push the Cayley
    transform of each component into the ambient space along f and extend by
    the identity."""
    f = chart.f
    if f.shape[0] != ambient_dim:
        raise ShapeMismatch("frame does not match the ambient dimension")
    eye = np.eye(ambient_dim, dtype=complex)
    proj = f @ f.conj().T
    mats = np.array([
        f @ cayley(x) @ f.conj().T + (eye - proj) for x in chart.X.mats
    ]) if chart.X.n else np.zeros((0, ambient_dim, ambient_dim), dtype=complex)
    return CommutingTuple("unitary", mats)


def trace_split(x: CommutingTuple):
    """Split a skew-Hermitian tuple into traceless part and scalar part.

    Returns (traceless tuple, tau) with X_i = traceless_i + i tau_i Id and
    tau_i = Im(tr X_i)/s real.  The reassembly is exact.
    """
    if x.kind != "skew_hermitian":
        raise ValueError("trace_split expects a skew-Hermitian tuple")
    s = x.s
    if s == 0:
        return CommutingTuple("skew_hermitian", x.mats.copy()), np.zeros(x.n)
    tau = np.array([np.trace(m).imag / s for m in x.mats])
    eye = np.eye(s)
    bar = np.array([m - 1j * t * eye for m, t in zip(x.mats, tau)]) if x.n \
        else np.zeros((0, s, s), dtype=complex)
    return CommutingTuple("skew_hermitian", bar), tau


def reassemble_trace(traceless: CommutingTuple, tau: np.ndarray) -> CommutingTuple:
    eye = np.eye(traceless.s)
    mats = np.array([m + 1j * t * eye for m, t in zip(traceless.mats, tau)]) \
        if traceless.n else traceless.mats.copy()
    return CommutingTuple("skew_hermitian", mats)


def stabilize(x: CommutingTuple, m: int) -> CommutingTuple:
    """Append m zero components; the composition law
    stabilize(stabilize(x, a), b) = stabilize(x, a + b) holds on the nose."""
    if x.kind != "skew_hermitian":
        raise ValueError("stabilize expects a skew-Hermitian tuple")
    if m < 0:
        raise ValueError("cannot remove components")
    zeros = np.zeros((m, x.s, x.s), dtype=complex)
    return CommutingTuple("skew_hermitian", np.concatenate([x.mats, zeros]), x.ambient)


def pairing_chart(x: CommutingTuple, y: CommutingTuple) -> CommutingTuple:
    """Kronecker pairing of skew-Hermitian tuples:
    (X_1 (x) Id, ..., X_n (x) Id, Id (x) Y_1, ..., Id (x) Y_m)."""
    if x.kind != "skew_hermitian" or y.kind != "skew_hermitian":
        raise ValueError("pairing expects skew-Hermitian tuples")
    eye_s = np.eye(x.s)
    eye_t = np.eye(y.s)
    mats = [np.kron(m, eye_t) for m in x.mats] + [np.kron(eye_s, m) for m in y.mats]
    stack = np.array(mats) if mats else np.zeros((0, x.s * y.s, x.s * y.s), dtype=complex)
    return CommutingTuple("skew_hermitian", stack)
