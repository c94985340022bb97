"""Floating-point matrix laboratory for independent numeric sanity checks.

Floats live only in this module; the exact engine never consumes a numeric
result. A matrix realization stores exact rational basis matrices, and its
commutators are checked against the algebra's structure table by exact
equality before anything is flattened to floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonFinite, NotInFixedSubspace, NotInM
from .liealg import LieAlgebra
from .linalg import Matrix, Vector, ZERO

TOLERANCE = 1e-9


@dataclass(frozen=True)
class MatrixRealization:
    """Exact antisymmetric matrix model of an algebra's basis."""

    algebra: LieAlgebra
    matrix_dim: int
    basis_matrices: tuple[Matrix, ...]

    def to_matrix(self, X: Vector) -> Matrix:
        """Exact rational matrix of a coordinate vector."""
        n = self.matrix_dim
        out = [[ZERO] * n for _ in range(n)]
        for c, B in zip(X, self.basis_matrices, strict=True):
            if c:
                for i in range(n):
                    row = B[i]
                    for j in range(n):
                        if row[j]:
                            out[i][j] += c * row[j]
        return tuple(tuple(r) for r in out)

    def to_float(self, X: Vector) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.to_matrix(X)])


def make_matrix_realization(algebra: LieAlgebra, basis_matrices) -> MatrixRealization:
    """Validate that matrix commutators reproduce the brackets exactly."""
    mats = tuple(tuple(tuple(x for x in row) for row in B) for B in basis_matrices)
    if len(mats) != algebra.dim:
        raise ValueError("one basis matrix per basis vector required")
    n = len(mats[0])
    for B in mats:
        for i in range(n):
            for j in range(n):
                if B[i][j] != -B[j][i]:
                    raise ValueError("realization matrices must be antisymmetric")
    from .linalg import rank

    flattened = tuple(tuple(x for row in B for x in row) for B in mats)
    if rank(flattened, n * n) != algebra.dim:
        raise ValueError("realization must embed the algebra faithfully")
    real = MatrixRealization(algebra, n, mats)
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            comm = _commutator(mats[i], mats[j])
            if comm != real.to_matrix(algebra.bracket_basis(i, j)):
                raise ValueError(f"commutator of basis pair {(i, j)} disagrees with the bracket")
    return real


def _commutator(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a, b = A[i][k], B[i][k]
            if a:
                for j in range(n):
                    out[i][j] += a * B[k][j]
            if b:
                for j in range(n):
                    out[i][j] -= b * A[k][j]
    return tuple(tuple(r) for r in out)


def matrix_exp(A: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring with a degree-18 Taylor core.

    The argument is scaled by 2^-s until its infinity norm is at most 1/2,
    the truncated series is evaluated by Horner, and the result is squared s
    times. For skew-symmetric input the result is orthogonal to well below
    the lab tolerance at desk scale.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("square matrix required")
    if not np.all(np.isfinite(A)):
        raise NonFinite("matrix exponential of a non-finite matrix")
    n = A.shape[0]
    norm = np.abs(A).sum(axis=1).max() if n else 0.0
    s = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    scaled = A / (2.0**s)
    out = np.eye(n)
    for k in range(18, 0, -1):
        out = np.eye(n) + scaled @ out / k
    for _ in range(s):
        out = out @ out
    return out


def orthogonality_residual(R: np.ndarray) -> float:
    n = R.shape[0]
    return float(np.abs(R.T @ R - np.eye(n)).max())


def flow_commutation_check(entry, X: Vector, Y: Vector, t: float, s: float) -> float:
    """Two float routes to the flow identity for an invariant direction X.

    Route one evaluates Exp(sY) Exp(tX) directly; route two pushes the flow
    through the moved basepoint, Exp(t Ad(g)X) g with g = Exp(sY). The identity
    is exact in exact arithmetic, so the residual measures realization plumbing
    and exponential quality only.
    """
    if abs(t) > 2 or abs(s) > 2:
        raise ValueError("step parameters are capped at |t|, |s| <= 2")
    pair = entry.pair
    if not entry.fixed_subspace.contains_vector(tuple(X)):
        raise NotInFixedSubspace("X must be an isotropy-fixed direction of m")
    if not pair.m.contains_vector(tuple(Y)):
        raise NotInM("Y must lie in m")
    real = entry.realization
    Xf = real.to_float(X)
    Yf = real.to_float(Y)
    g = matrix_exp(s * Yf)
    route_one = g @ matrix_exp(t * Xf)
    route_two = matrix_exp(t * (g @ Xf @ g.T)) @ g
    return float(np.abs(route_one - route_two).max())


def isotropy_commutation_residual(entry, X: Vector, u: float = 1.0) -> float:
    """Conjugating Exp(X) by isotropy exponentials must fix it: a numeric echo
    of [h, X] = 0 for carrier directions."""
    if not entry.fixed_subspace.contains_vector(tuple(X)):
        raise NotInFixedSubspace("X must be an isotropy-fixed direction of m")
    real = entry.realization
    base = matrix_exp(real.to_float(X))
    worst = 0.0
    for r in entry.pair.h.rows:
        h = matrix_exp(u * real.to_float(r))
        worst = max(worst, float(np.abs(h @ base @ h.T - base).max()))
    return worst
