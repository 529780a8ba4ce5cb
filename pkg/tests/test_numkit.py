import numpy as np
import pytest

from commvar.errors import (
    NoConvergence,
    NotHermitian,
    RankDeficient,
    ShapeMismatch,
)
from commvar.numkit import (
    DEFAULT_TOL,
    Tolerances,
    commutator_defect,
    fro,
    hermitian_eig,
    orthonormalize,
    phase_normalize,
)
from commvar.rng import SplitMix64, haar_unitary


def test_tolerances_validation():
    with pytest.raises(ValueError):
        Tolerances(eps_struct=0.0)
    with pytest.raises(ValueError):
        Tolerances(eps_struct=1e-3, eps_cluster=1e-6)
    with pytest.raises(ValueError):
        Tolerances(max_sweeps=0)
    assert DEFAULT_TOL.eps_struct <= DEFAULT_TOL.eps_cluster


def test_orthonormalize_identity_on_orthonormal():
    e = np.eye(2, dtype=complex)
    out = orthonormalize(e)
    assert fro(out - e) < 1e-14


def test_orthonormalize_gram_schmidt():
    # hand Gram-Schmidt: (e1, e1+e2) -> (e1, e2)
    v = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
    out = phase_normalize(orthonormalize(v))
    assert fro(out - np.eye(2)) < 1e-14


def test_orthonormalize_rank_deficient():
    v = np.array([[1.0, 1.0 + 1e-15], [0.0, 0.0]], dtype=complex)
    with pytest.raises(RankDeficient):
        orthonormalize(v)


def test_orthonormalize_idempotent():
    rng = SplitMix64(3)
    v = rng.complex_normals(6, 3)
    q = orthonormalize(v)
    assert fro(orthonormalize(q) - q) < 1e-13


def test_hermitian_eig_zero():
    q, lam = hermitian_eig(np.zeros((3, 3)))
    assert fro(q - np.eye(3)) < 1e-14
    assert np.all(lam == 0)


def test_hermitian_eig_diagonal():
    q, lam = hermitian_eig(np.diag([2.0, 1.0]))
    assert np.allclose(lam, [1.0, 2.0])
    # Q is the swap permutation up to phase
    assert fro(np.abs(q) - np.array([[0, 1], [1, 0]])) < 1e-12


def test_hermitian_eig_closed_form_2x2():
    h = np.array([[0.0, 1.0], [1.0, 0.0]])
    q, lam = hermitian_eig(h)
    assert np.allclose(lam, [-1.0, 1.0])
    minus = np.array([1.0, -1.0]) / np.sqrt(2)
    plus = np.array([1.0, 1.0]) / np.sqrt(2)
    assert min(fro(q[:, 0] - minus), fro(q[:, 0] + minus)) < 1e-12
    assert min(fro(q[:, 1] - plus), fro(q[:, 1] + plus)) < 1e-12


def test_hermitian_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_hermitian_eig_no_convergence_when_sweeps_capped():
    rng = SplitMix64(19)
    g = rng.complex_normals(8, 8)
    h = 0.5 * (g + g.conj().T)
    with pytest.raises(NoConvergence):
        hermitian_eig(h, Tolerances(max_sweeps=1))


def test_orthonormalize_accepts_single_vector_and_lists():
    out = orthonormalize(np.array([3.0, 4.0]))
    assert out.shape == (2, 1)
    assert np.allclose(out[:, 0], [0.6, 0.8])
    out2 = orthonormalize([np.array([1.0, 0.0]), np.array([1.0, 1.0])])
    assert out2.shape == (2, 2)


@pytest.mark.parametrize("s", [2, 4, 8])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_hermitian_eig_random(seed, s):
    rng = SplitMix64(seed * 101 + s)
    g = rng.complex_normals(s, s)
    h = 0.5 * (g + g.conj().T)
    q, lam = hermitian_eig(h)
    assert fro(q @ q.conj().T - np.eye(s)) <= 1e-10
    assert fro(q.conj().T @ h @ q - np.diag(lam)) <= 1e-10 * fro(h)
    assert np.all(np.diff(lam) >= -1e-12)


def test_commutator_defect_diagonal_and_polynomial():
    d1 = np.diag([1.0, 2.0, 3.0])
    d2 = np.diag([4.0, 5.0, 6.0])
    assert commutator_defect([d1, d2]) == 0.0
    rng = SplitMix64(7)
    x = rng.complex_normals(4, 4)
    assert commutator_defect([x, x @ x]) < 1e-12


def test_commutator_defect_frozen_example():
    # direct 2x2 multiplication: [X, Y] = [[0, 2i], [2i, 0]], so the
    # Frobenius norm is 2*sqrt(2) and the normalizer is ||X|| ||Y|| = 2
    x = np.diag([1j, -1j])
    y = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)
    comm = x @ y - y @ x
    assert fro(comm) == pytest.approx(2.0 * np.sqrt(2.0))
    got = commutator_defect([x, y])
    assert got == pytest.approx(np.sqrt(2.0))
    assert got > 0.1


def test_commutator_defect_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        commutator_defect([np.eye(2), np.eye(3)])
    with pytest.raises(ShapeMismatch):
        commutator_defect([np.ones((2, 3))])


def test_commutator_defect_conjugation_invariant():
    rng = SplitMix64(11)
    x = rng.complex_normals(4, 4)
    y = rng.complex_normals(4, 4)
    u = haar_unitary(rng, 4)
    before = commutator_defect([x, y])
    after = commutator_defect([u @ x @ u.conj().T, u @ y @ u.conj().T])
    assert abs(before - after) < 1e-12 * max(1.0, before)
