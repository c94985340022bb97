"""Exact rational linear algebra on immutable tuple-backed vectors and matrices.

Every scalar is a `fractions.Fraction`; nothing here rounds or approximates.
Vectors are tuples of Fractions, matrices are tuples of row vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(x) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vector(coords: Iterable) -> Vector:
    return tuple(rat(c) for c in coords)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def is_zero_vector(v: Vector) -> bool:
    return all(c == 0 for c in v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def smul(c: Fraction, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


def matvec(A: Matrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in A)


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(vadd(r, s) for r, s in zip(A, B, strict=True))


def mat_scale(c: Fraction, A: Matrix) -> Matrix:
    return tuple(smul(c, r) for r in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A)) if A else ()


def trace(A: Matrix) -> Fraction:
    return sum((A[i][i] for i in range(len(A))), ZERO)


def stack(*mats: Matrix) -> Matrix:
    out: list[Vector] = []
    for m in mats:
        out.extend(m)
    return tuple(out)


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form with zero rows dropped; returns (rows, pivot columns).

    The result is the canonical representative of the row space: two inputs have
    equal rref iff they span the same subspace.
    """
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        if inv != 1:
            mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def kernel(A: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Canonical (rref) basis of the right kernel {x : A x = 0}."""
    red, pivots = rref(A, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return rref(basis, ncols)[0]


def coords_in_rref(rows: Matrix, pivots: tuple[int, ...], v: Vector) -> Vector | None:
    """Coordinates of v in the given rref row basis, or None if v is outside."""
    residual = list(v)
    coords = []
    for row, p in zip(rows, pivots):
        c = residual[p]
        coords.append(c)
        if c != 0:
            for k in range(len(residual)):
                residual[k] -= c * row[k]
    if any(x != 0 for x in residual):
        return None
    return tuple(coords)


def mat_inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [list(A[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    red, pivots = rref(aug, 2 * n)
    if len(red) != n or pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def signature(gram: Matrix) -> tuple[int, int, int]:
    """Inertia (n_pos, n_neg, n_zero) of a symmetric matrix, by rational congruence.

    Symmetric Gaussian steps, with the standard row+column trick when the active
    diagonal is entirely zero; Sylvester's law makes the counts well-defined.
    """
    n = len(gram)
    M = [list(row) for row in gram]
    pos = neg = 0
    active = list(range(n))
    while active:
        d = None
        for i in active:
            if M[i][i] != 0:
                d = i
                break
        if d is None:
            offdiag = None
            for ai in range(len(active)):
                for aj in range(ai + 1, len(active)):
                    i, j = active[ai], active[aj]
                    if M[i][j] != 0:
                        offdiag = (i, j)
                        break
                if offdiag:
                    break
            if offdiag is None:
                break  # remaining block is zero
            i, j = offdiag
            for k in range(n):
                M[i][k] += M[j][k]
            for k in range(n):
                M[k][i] += M[k][j]
            continue
        a = M[d][d]
        if a > 0:
            pos += 1
        else:
            neg += 1
        active.remove(d)
        for i in active:
            if M[i][d] != 0:
                f = M[i][d] / a
                for k in range(n):
                    M[i][k] -= f * M[d][k]
                for k in range(n):
                    M[k][i] -= f * M[k][d]
    return pos, neg, n - pos - neg


def charpoly(A: Matrix) -> tuple[Fraction, ...]:
    """Monic characteristic polynomial, coefficients low degree to high.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n = len(A)
    M = identity(n)
    coeffs_high_to_low = [ONE]
    for k in range(1, n + 1):
        AM = matmul(A, M)
        c = -trace(AM) / k
        coeffs_high_to_low.append(c)
        M = mat_add(AM, mat_scale(c, identity(n)))
    return tuple(reversed(coeffs_high_to_low))


def minpoly(A: Matrix) -> tuple[Fraction, ...]:
    """Monic minimal polynomial via the first linear dependence among powers of A."""
    n = len(A)
    flat_powers = [tuple(ONE if i == j else ZERO for i in range(n) for j in range(n))]
    P = identity(n)
    for _ in range(n):
        P = matmul(A, P)
        flat_powers.append(tuple(x for row in P for x in row))
        cols = len(flat_powers)
        system = tuple(
            tuple(flat_powers[c][r] for c in range(cols)) for r in range(n * n)
        )
        ker = kernel(system, cols)
        if ker:
            rel = ker[0]
            lead = rel[cols - 1]
            # first dependence: the top power must participate
            assert lead != 0
            return tuple(c / lead for c in rel)
    raise AssertionError("no dependence among matrix powers up to the dimension")


def poly_eval_matrix(coeffs: Sequence[Fraction], A: Matrix) -> Matrix:
    """Evaluate a polynomial (coefficients low to high) at a square matrix."""
    n = len(A)
    out = mat_scale(coeffs[-1], identity(n))
    for c in reversed(coeffs[:-1]):
        out = mat_add(matmul(out, A), mat_scale(c, identity(n)))
    return out


def factor_poly(coeffs: Sequence[Fraction]) -> tuple[tuple[tuple[Fraction, ...], int], ...]:
    """Irreducible monic factors over Q of a rational polynomial, with multiplicities.

    Deterministic ordering: by degree, then by coefficient tuple.
    """
    import sympy  # local import: sympy is slow to load and only needed here

    x = sympy.Symbol("x")
    sym_coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)]
    _, factors = sympy.Poly(sym_coeffs, x, domain="QQ").factor_list()
    out = []
    for poly, mult in factors:
        poly = poly.monic()
        cs = tuple(
            Fraction(int(c.numerator), int(c.denominator))
            for c in reversed(poly.all_coeffs())
        )
        out.append((cs, int(mult)))
    out.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return tuple(out)
