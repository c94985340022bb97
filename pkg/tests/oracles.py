"""Independent oracle implementations used only by the tests.

Deliberately different code paths from the package: dense Fraction matrices out
of explicit matrix realizations, naive Gaussian elimination, closed-form trace
identities. Nothing here imports the package under test.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def dense_zero(n, m=None):
    m = n if m is None else m
    return [[F0] * m for _ in range(n)]


def dense_identity(n):
    M = dense_zero(n)
    for i in range(n):
        M[i][i] = F1
    return M


def dense_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    out = dense_zero(n, m)
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a:
                for j in range(m):
                    if B[t][j]:
                        out[i][j] += a * B[t][j]
    return out


def dense_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def commutator(A, B):
    return dense_sub(dense_mul(A, B), dense_mul(B, A))


def dense_trace(A):
    return sum((A[i][i] for i in range(len(A))), F0)


def gauss_rank(rows, ncols):
    """Plain forward elimination; no pivot normalization, no canonical form."""
    mat = [list(r) for r in rows]
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col] != 0:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def so_matrix_basis(n):
    """E_ij = e_i e_j^T - e_j e_i^T for i < j in lexicographic order."""
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            M = dense_zero(n)
            M[i][j] = F1
            M[j][i] = -F1
            basis.append(M)
    return basis


def so_coords(M, n):
    """Coordinates of an antisymmetric matrix in the E_ij basis."""
    return [M[i][j] for i in range(n) for j in range(i + 1, n)]


def cyclic_so3_matrices():
    """L1 = E23, L2 = E13, L3 = E12: satisfies [L1,L2] = L3 cyclically."""
    e23, e13, e12 = dense_zero(3), dense_zero(3), dense_zero(3)
    e23[1][2], e23[2][1] = F1, -F1
    e13[0][2], e13[2][0] = F1, -F1
    e12[0][1], e12[1][0] = F1, -F1
    return [e23, e13, e12]


def express_in_basis(M, basis):
    """Solve M = sum c_k basis_k by elimination on the flattened system."""
    n = len(M)
    flat_cols = [[B[i][j] for i in range(n) for j in range(n)] for B in basis]
    target = [M[i][j] for i in range(n) for j in range(n)]
    rows = len(target)
    aug = [[flat_cols[c][r] for c in range(len(basis))] + [target[r]] for r in range(rows)]
    # forward elimination
    piv_rows = []
    r = 0
    for c in range(len(basis)):
        piv = None
        for i in range(r, rows):
            if aug[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c] / aug[r][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_rows.append((r, c))
        r += 1
    coords = [F0] * len(basis)
    for rr, cc in piv_rows:
        coords[cc] = aug[rr][len(basis)] / aug[rr][cc]
    # consistency: rows beyond the pivots must have zero rhs
    for i in range(r, rows):
        assert aug[i][len(basis)] == 0, "matrix is outside the span of the basis"
    return coords


def brute_force_jacobi(dim, bracket_fn):
    """bracket_fn(i, j) -> coordinate list; checks all dim^3 ordered triples."""
    def bracket_vec(x, y):
        out = [F0] * dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                bij = bracket_fn(i, j)
                for k in range(dim):
                    out[k] += xi * yj * bij[k]
        return out

    units = [[F1 if t == s else F0 for t in range(dim)] for s in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                total = [F0] * dim
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    term = bracket_vec(bracket_fn(x, y), units[z])
                    total = [a + b for a, b in zip(total, term)]
                if any(total):
                    return (i, j, k)
    return None


def dense_ad_matrices(dim, bracket_fn):
    """ad(e_i) as dense matrices from a basis-bracket function."""
    ads = []
    for i in range(dim):
        M = dense_zero(dim)
        for b in range(dim):
            col = bracket_fn(i, b)
            for a in range(dim):
                M[a][b] = col[a]
        ads.append(M)
    return ads


def killing_by_traces(dim, bracket_fn):
    """Killing matrix via dense ad products, independent of sparse bookkeeping."""
    ads = dense_ad_matrices(dim, bracket_fn)
    return [[dense_trace(dense_mul(ads[i], ads[j])) for j in range(dim)] for i in range(dim)]
