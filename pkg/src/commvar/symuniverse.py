"""Truncated symmetric-algebra universe and its canonical isometries.

A universe is the monomial basis of the polynomials on n variables of degree
at most D, carrying the inner product in which distinct monomials are
orthogonal and <e_alpha, e_alpha> = alpha! (the product of the factorials of
the exponents).  Coordinates are always taken in the orthonormalized basis
e_alpha / sqrt(alpha!), so every canonical isometry below is a literal
permutation of coordinates.
"""

from __future__ import annotations

import math
from itertools import product

import numpy as np

from .errors import TruncationOverflow
from .numkit import DEFAULT_TOL, Tolerances


def _graded_lex_key(alpha):
    return (sum(alpha), tuple(-a for a in alpha))


class UniverseBasis:
    """Monomial basis of degree <= D polynomials in n variables.

    monomials are exponent multi-indices in graded lexicographic order, with
    the constant monomial (the scalar line) first.  norms_sq[i] = alpha_i!
    as an exact integer.
    """

    def __init__(self, n: int, D: int):
        if n < 1:
            raise ValueError("universe needs at least one variable")
        if D < 0:
            raise ValueError("truncation degree must be non-negative")
        self.n = n
        self.D = D
        alphas = [a for a in product(range(D + 1), repeat=n) if sum(a) <= D]
        alphas.sort(key=_graded_lex_key)
        self.monomials: tuple[tuple[int, ...], ...] = tuple(alphas)
        self.index: dict[tuple[int, ...], int] = {a: i for i, a in enumerate(alphas)}
        self.norms_sq: tuple[int, ...] = tuple(
            math.prod(math.factorial(e) for e in a) for a in alphas
        )

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def __eq__(self, other):
        return isinstance(other, UniverseBasis) and (self.n, self.D) == (other.n, other.D)

    def __hash__(self):
        return hash((self.n, self.D))

    def __repr__(self):
        return f"UniverseBasis(n={self.n}, D={self.D}, dim={self.dim})"


def j0(universe: UniverseBasis) -> np.ndarray:
    """Rank-1 frame spanning the scalar line (the constant monomial)."""
    f = np.zeros((universe.dim, 1), dtype=complex)
    f[universe.index[(0,) * universe.n], 0] = 1.0
    return f


def perm_inverse(sigma) -> np.ndarray:
    sigma = np.asarray(sigma, dtype=int)
    inv = np.empty_like(sigma)
    inv[sigma] = np.arange(len(sigma))
    return inv


def _check_perm(sigma, n: int):
    sigma = np.asarray(sigma, dtype=int)
    if sorted(sigma.tolist()) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {sigma}")
    return sigma


def permute_multi_index(sigma, alpha) -> tuple[int, ...]:
    """(sigma . alpha)_j = alpha_{sigma^{-1}(j)}."""
    inv = perm_inverse(sigma)
    return tuple(alpha[inv[j]] for j in range(len(alpha)))


def sigma_star(sigma, universe: UniverseBasis) -> np.ndarray:
    """Coordinate permutation induced on the universe by permuting variables.

    Returns perm with perm[i] = index of sigma . monomial_i; as an operator
    on coordinate vectors, (sigma_* v)[perm[i]] = v[i].
    """
    sigma = _check_perm(sigma, universe.n)
    return np.array(
        [universe.index[permute_multi_index(sigma, a)] for a in universe.monomials],
        dtype=int,
    )


def apply_perm_to_coords(perm, vecs: np.ndarray) -> np.ndarray:
    """Apply a coordinate permutation to a vector or the rows of a frame."""
    out = np.empty_like(vecs)
    out[perm] = vecs
    return out


def conjugate_by_perm(perm, a: np.ndarray) -> np.ndarray:
    """P A P^{-1} for the permutation operator P given by perm."""
    out = np.empty_like(a)
    out[np.ix_(perm, perm)] = a
    return out


class PsiIsometry:
    """Isometric embedding of a tensor product of universes.

    On orthonormalized basis vectors it sends (alpha, beta) to the
    concatenated multi-index, which is again orthonormalized because
    (alpha, beta)! = alpha! beta!.  The embedding is a bijection onto the
    target monomials of bidegree <= (D_left, D_right).
    """

    def __init__(self, left: UniverseBasis, right: UniverseBasis,
                 degree_bound: int | None = None):
        if degree_bound is None:
            degree_bound = left.D + right.D
        self.left = left
        self.right = right
        self.target = UniverseBasis(left.n + right.n, degree_bound)
        idx = np.full((left.dim, right.dim), -1, dtype=int)
        for i, a in enumerate(left.monomials):
            for k, b in enumerate(right.monomials):
                if sum(a) + sum(b) <= degree_bound:
                    idx[i, k] = self.target.index[a + b]
        self.pair_index = idx

    def kron_vec(self, u: np.ndarray, v: np.ndarray,
                 tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        """Image of u (x) v in the target coordinates."""
        w = np.outer(np.asarray(u, dtype=complex), np.asarray(v, dtype=complex))
        lost = self.pair_index < 0
        if np.any(np.abs(w[lost]) > tol.eps_struct):
            raise TruncationOverflow(
                f"product monomial exceeds degree bound {self.target.D}"
            )
        out = np.zeros(self.target.dim, dtype=complex)
        keep = ~lost
        out[self.pair_index[keep]] = w[keep]
        return out

    def kron_frame(self, f: np.ndarray, g: np.ndarray,
                   tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
        """Columnwise images of all tensor pairs; pair (a, b) lands at
        column a * g.shape[1] + b, matching np.kron index order."""
        cols = [
            self.kron_vec(f[:, a], g[:, b], tol)
            for a in range(f.shape[1])
            for b in range(g.shape[1])
        ]
        if not cols:
            return np.zeros((self.target.dim, 0), dtype=complex)
        return np.column_stack(cols)


def psi_embed(left: UniverseBasis, right: UniverseBasis,
              degree_bound: int | None = None) -> PsiIsometry:
    """Canonical isometry of the tensor product of two universes into the
    joint universe, truncated at degree_bound (defaults to the sum)."""
    return PsiIsometry(left, right, degree_bound)
