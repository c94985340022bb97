"""Structure-constant Lie algebra calculus over exact rationals.

A Lie algebra is given by its dimension, basis labels and a sparse table of
structure constants [e_i, e_j] = sum_k c[i][j][k] e_k, stored for i < j only
and completed by antisymmetry. Basis indices are 0-based throughout the
Python API. All subspaces are canonicalized in reduced row-echelon form, so
subspace equality is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DegenerateForm,
    JacobiViolation,
    NotASubalgebra,
    NotCompactType,
)
from .linalg import (
    Matrix,
    ONE,
    Vector,
    ZERO,
    dot,
    factor_poly,
    identity,
    kernel,
    coords_in_rref,
    matmul,
    matvec,
    minpoly,
    poly_eval_matrix,
    rat,
    rref,
    signature,
    stack,
    transpose,
    vector,
)

SparseTable = dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of Q^n in canonical reduced row-echelon basis form."""

    ambient_dim: int
    rows: Matrix
    pivots: tuple[int, ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "SubspaceBasis":
        rows = [vector(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError(f"vector length {len(r)} != ambient dim {ambient_dim}")
        red, piv = rref(rows, ambient_dim)
        return SubspaceBasis(ambient_dim, red, piv)

    @staticmethod
    def zero(ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, (), ())

    @staticmethod
    def full(ambient_dim: int) -> "SubspaceBasis":
        return SubspaceBasis(ambient_dim, identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_vector(self, v: Vector) -> bool:
        return self.coords_of(v) is not None

    def coords_of(self, v: Vector) -> Vector | None:
        return coords_in_rref(self.rows, self.pivots, v)

    def contains(self, other: "SubspaceBasis") -> bool:
        return all(self.contains_vector(r) for r in other.rows)

    def sum_with(self, other: "SubspaceBasis") -> "SubspaceBasis":
        return SubspaceBasis.from_vectors(self.ambient_dim, self.rows + other.rows)

    def annihilator(self) -> Matrix:
        """Rows spanning {w : w . v = 0 for all v in the subspace} (standard dot)."""
        return kernel(self.rows, self.ambient_dim)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        # v lies in a row space iff it is annihilated by that space's dot-annihilator
        system = stack(self.annihilator(), other.annihilator())
        return SubspaceBasis.from_vectors(self.ambient_dim, kernel(system, self.ambient_dim))


@dataclass(frozen=True)
class LieAlgebra:
    """Finite-dimensional Lie algebra with exact rational structure constants."""

    dim: int
    basis_labels: tuple[str, ...]
    entries: tuple[tuple[int, int, int, Fraction], ...]  # (i, j, k, c) with i < j, sorted

    @cached_property
    def _table(self) -> SparseTable:
        table: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for i, j, k, c in self.entries:
            table.setdefault((i, j), []).append((k, c))
        return {key: tuple(val) for key, val in table.items()}

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        if i == j:
            return ZERO
        sign = ONE
        if i > j:
            i, j, sign = j, i, -ONE
        for kk, c in self._table.get((i, j), ()):
            if kk == k:
                return sign * c
        return ZERO

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] as a dense coordinate vector."""
        out = [ZERO] * self.dim
        if i == j:
            return tuple(out)
        sign = ONE
        if i > j:
            i, j, sign = j, i, -ONE
        for k, c in self._table.get((i, j), ()):
            out[k] += sign * c
        return tuple(out)

    def bracket(self, X: Vector, Y: Vector) -> Vector:
        if len(X) != self.dim or len(Y) != self.dim:
            raise ValueError("vector length does not match the algebra dimension")
        out = [ZERO] * self.dim
        for (i, j), terms in self._table.items():
            coef = X[i] * Y[j] - X[j] * Y[i]
            if coef:
                for k, c in terms:
                    out[k] += coef * c
        return tuple(out)

    def ad(self, X: Vector) -> Matrix:
        """Matrix of ad(X) = [X, .] acting on coordinates."""
        cols = [self.bracket(X, unit) for unit in identity(self.dim)]
        return transpose(tuple(cols))

    @cached_property
    def _sparse_ads(self) -> tuple[dict[tuple[int, int], Fraction], ...]:
        # ads[i][(a, b)] = coefficient of e_a in [e_i, e_b]
        ads: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(self.dim)]
        for i, j, k, c in self.entries:
            ads[i][(k, j)] = ads[i].get((k, j), ZERO) + c
            ads[j][(k, i)] = ads[j].get((k, i), ZERO) - c
        return tuple(ads)

    @cached_property
    def _ad_basis(self) -> tuple[Matrix, ...]:
        mats = []
        for i in range(self.dim):
            M = [[ZERO] * self.dim for _ in range(self.dim)]
            for (a, b), c in self._sparse_ads[i].items():
                M[a][b] += c
            mats.append(tuple(tuple(row) for row in M))
        return tuple(mats)

    def ad_basis_matrix(self, i: int) -> Matrix:
        return self._ad_basis[i]


def make_lie_algebra(
    dim: int,
    entries: Iterable[Sequence] = (),
    basis_labels: Sequence[str] | None = None,
) -> LieAlgebra:
    """Validated constructor: antisymmetric completion plus an exhaustive Jacobi check.

    `entries` lists (i, j, k, c) with i < j; duplicates accumulate, zeros drop.
    Raises IndexError for out-of-range indices and JacobiViolation with the first
    lexicographic failing triple and its defect vector.
    """
    if dim < 1:
        raise ValueError("dimension must be positive")
    if basis_labels is None:
        basis_labels = tuple(f"e{i + 1}" for i in range(dim))
    else:
        basis_labels = tuple(basis_labels)
        if len(basis_labels) != dim:
            raise ValueError("number of basis labels does not match the dimension")
    acc: dict[tuple[int, int, int], Fraction] = {}
    for entry in entries:
        i, j, k, c = entry
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise IndexError(f"structure entry {(i, j, k)} out of range for dim {dim}")
        if i >= j:
            raise ValueError(f"structure entries must have i < j, got {(i, j)}")
        acc[(i, j, k)] = acc.get((i, j, k), ZERO) + rat(c)
    canonical = tuple(
        (i, j, k, c) for (i, j, k), c in sorted(acc.items()) if c != 0
    )
    algebra = LieAlgebra(dim, basis_labels, canonical)
    _check_jacobi(algebra)
    return algebra


def _check_jacobi(L: LieAlgebra) -> None:
    # Triples with a repeated index vanish identically by antisymmetry; sparse
    # expansion keeps the sweep O(dim^3 * nnz) instead of O(dim^5).
    table = L._table

    def terms(i: int, j: int):
        if i == j:
            return ()
        if i < j:
            return table.get((i, j), ())
        return tuple((k, -c) for k, c in table.get((j, i), ()))

    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                defect = [ZERO] * L.dim
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    for l, c in terms(x, y):
                        for t, d in terms(l, z):
                            defect[t] += c * d
                if any(defect):
                    raise JacobiViolation(i, j, k, tuple(defect))


def _unit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric bilinear form with its rational inertia precomputed."""

    gram: Matrix
    inertia: tuple[int, int, int]  # (positive, negative, zero)

    @property
    def definiteness(self) -> str:
        pos, neg, zero = self.inertia
        n = pos + neg + zero
        if zero > 0:
            return "degenerate"
        if pos == n:
            return "positive-definite"
        if neg == n:
            return "negative-definite"
        return "indefinite"

    def apply(self, u: Vector, v: Vector) -> Fraction:
        return dot(u, matvec(self.gram, v))

    def restrict(self, sub: SubspaceBasis) -> Matrix:
        """Gram matrix of the form on the rows of `sub`."""
        return tuple(
            tuple(self.apply(r, s) for s in sub.rows) for r in sub.rows
        )


def make_bilinear_form(gram: Iterable[Iterable]) -> BilinearForm:
    G = tuple(vector(row) for row in gram)
    n = len(G)
    for row in G:
        if len(row) != n:
            raise ValueError("gram matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if G[i][j] != G[j][i]:
                raise ValueError(f"gram matrix not symmetric at {(i, j)}")
    return BilinearForm(G, signature(G))


@dataclass(frozen=True)
class TripleWitness:
    """First basis triple violating a three-slot identity, with its defect."""

    indices: tuple[int, int, int]
    defect: Fraction


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: TripleWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def killing_form(L: LieAlgebra) -> BilinearForm:
    """B(X, Y) = trace(ad X . ad Y) on basis pairs, assembled sparsely."""
    ads = L._sparse_ads
    gram = [[ZERO] * L.dim for _ in range(L.dim)]
    for i in range(L.dim):
        for j in range(i, L.dim):
            total = ZERO
            for (a, b), c in ads[i].items():
                other = ads[j].get((b, a))
                if other is not None:
                    total += c * other
            gram[i][j] = total
            gram[j][i] = total
    return make_bilinear_form(gram)


def ad_invariance_check(L: LieAlgebra, form: BilinearForm) -> CheckResult:
    """<[e_i,e_j], e_k> + <e_j, [e_i,e_k]> = 0 over all ordered basis triples."""
    if len(form.gram) != L.dim:
        raise ValueError("form dimension does not match the algebra")
    G = form.gram
    sparse: list[list[tuple[tuple[int, Fraction], ...]]] = [
        [() for _ in range(L.dim)] for _ in range(L.dim)
    ]
    for (i, j), terms in L._table.items():
        sparse[i][j] = terms
        sparse[j][i] = tuple((k, -c) for k, c in terms)
    for i in range(L.dim):
        for j in range(L.dim):
            bij = sparse[i][j]
            for k in range(L.dim):
                defect = sum((c * G[a][k] for a, c in bij), ZERO)
                defect += sum((c * G[j][a] for a, c in sparse[i][k]), ZERO)
                if defect != 0:
                    return CheckResult(False, TripleWitness((i, j, k), defect))
    return CheckResult(True)


def orthogonal_complement(sub: SubspaceBasis, form: BilinearForm) -> SubspaceBasis:
    """{v : <s, v> = 0 for every s in sub}; requires a non-degenerate form."""
    if form.definiteness == "degenerate":
        raise DegenerateForm("orthogonal complement needs a non-degenerate form")
    system = tuple(matvec(form.gram, s) for s in sub.rows)
    return SubspaceBasis.from_vectors(sub.ambient_dim, kernel(system, sub.ambient_dim))


def centralizer(L: LieAlgebra, sub: SubspaceBasis) -> SubspaceBasis:
    """{X : [s, X] = 0 for all s in sub}, as the kernel of stacked adjoints."""
    system = stack(*(L.ad(s) for s in sub.rows)) if sub.dim else ()
    if not system:
        return SubspaceBasis.full(L.dim)
    return SubspaceBasis.from_vectors(L.dim, kernel(system, L.dim))


def center(L: LieAlgebra) -> SubspaceBasis:
    return centralizer(L, SubspaceBasis.full(L.dim))


def derived_subalgebra(L: LieAlgebra) -> SubspaceBasis:
    vectors = [
        L.bracket_basis(i, j) for i in range(L.dim) for j in range(i + 1, L.dim)
    ]
    return SubspaceBasis.from_vectors(L.dim, vectors)


def span_closure(L: LieAlgebra, seed: SubspaceBasis) -> SubspaceBasis:
    """Smallest subalgebra containing the seed; dimension grows strictly each round."""
    current = seed
    while True:
        new_vecs = [
            L.bracket(u, v)
            for a, u in enumerate(current.rows)
            for v in current.rows[a + 1 :]
        ]
        grown = current.sum_with(SubspaceBasis.from_vectors(L.dim, new_vecs))
        if grown.dim == current.dim:
            return current
        current = grown


def is_subalgebra(L: LieAlgebra, sub: SubspaceBasis) -> CheckResult:
    for a, u in enumerate(sub.rows):
        for b in range(a + 1, len(sub.rows)):
            if not sub.contains_vector(L.bracket(u, sub.rows[b])):
                return CheckResult(False, TripleWitness((a, b, -1), ZERO))
    return CheckResult(True)


def largest_ideal_in(L: LieAlgebra, h: SubspaceBasis) -> SubspaceBasis:
    """Largest ideal of L contained in the subalgebra h.

    Fixpoint of the descending chain h_{k+1} = {X in h_k : [L, X] in h_k}.
    """
    if not is_subalgebra(L, h):
        raise NotASubalgebra()
    current = h
    while current.dim > 0:
        ann = current.annihilator()
        basis_t = transpose(current.rows)
        system_rows = []
        for i in range(L.dim):
            # condition: ann . ad(e_i) . (t-combination of current rows) = 0
            block = matmul(matmul(ann, L.ad_basis_matrix(i)), basis_t)
            system_rows.extend(block)
        t_kernel = kernel(tuple(system_rows), current.dim)
        nxt = SubspaceBasis.from_vectors(
            L.dim, [matvec(basis_t, t) for t in t_kernel]
        )
        if nxt.dim == current.dim:
            return current
        current = nxt
    return current


def _ideal_closure(L: LieAlgebra, seed_vectors: Sequence[Vector]) -> SubspaceBasis:
    """Smallest ideal of L containing the seed vectors."""
    current = SubspaceBasis.from_vectors(L.dim, seed_vectors)
    while True:
        new_vecs = [
            L.bracket(_unit(L.dim, i), v) for i in range(L.dim) for v in current.rows
        ]
        grown = current.sum_with(SubspaceBasis.from_vectors(L.dim, new_vecs))
        if grown.dim == current.dim:
            return current
        current = grown


def _generating_rows(L: LieAlgebra, piece: SubspaceBasis) -> Matrix:
    """Greedy prefix of the piece's basis whose subalgebra closure is the piece."""
    chosen: list[Vector] = []
    for row in piece.rows:
        chosen.append(row)
        closed = span_closure(L, SubspaceBasis.from_vectors(L.dim, chosen))
        if closed.dim == piece.dim:
            return tuple(chosen)
    return piece.rows


def _adjoint_commutant(L: LieAlgebra, piece: SubspaceBasis, generators: Matrix) -> tuple[Matrix, ...]:
    """Basis of {T : T ad(g)|_piece = ad(g)|_piece T for all generators g}.

    T is expressed in the piece's row-basis coordinates. Commuting with a
    generating set suffices because ad is a homomorphism.
    """
    r = piece.dim
    restricted = []
    for g in generators:
        cols = []
        for row in piece.rows:
            coords = piece.coords_of(L.bracket(g, row))
            assert coords is not None, "piece is not ad-invariant"
            cols.append(coords)
        restricted.append(transpose(tuple(cols)))
    system_rows = []
    for A in restricted:
        # (T A - A T)[a][b] = 0, unknowns T[p][q] flattened row-major
        for a in range(r):
            for b in range(r):
                coeffs = [ZERO] * (r * r)
                for c in range(r):
                    coeffs[a * r + c] += A[c][b]
                    coeffs[c * r + b] -= A[a][c]
                system_rows.append(tuple(coeffs))
    flat_basis = kernel(tuple(system_rows), r * r)
    return tuple(
        tuple(tuple(flat[p * r + q] for q in range(r)) for p in range(r))
        for flat in flat_basis
    )


def _is_scalar_matrix(T: Matrix) -> bool:
    n = len(T)
    lam = T[0][0]
    return all(T[i][j] == (lam if i == j else 0) for i in range(n) for j in range(n))


def _split_semisimple(L: LieAlgebra, piece: SubspaceBasis, killing: BilinearForm) -> list[SubspaceBasis]:
    if piece.dim == 0:
        return []
    # Cheap route: the minimal ideal generated by a basis vector, split off its
    # Killing-orthogonal complement (also an ideal; the form is definite here).
    for row in piece.rows:
        ideal = _ideal_closure(L, [row])
        if ideal.dim < piece.dim:
            comp_system = tuple(matvec(killing.gram, s) for s in ideal.rows)
            basis_t = transpose(piece.rows)
            t_kernel = kernel(matmul(comp_system, basis_t), piece.dim)
            complement = SubspaceBasis.from_vectors(
                L.dim, [matvec(basis_t, t) for t in t_kernel]
            )
            return _split_semisimple(L, ideal, killing) + _split_semisimple(L, complement, killing)
    # Every basis seed generates the whole piece; certify or split via the
    # commutant of the adjoint action (the centroid, for a perfect algebra).
    commutant = _adjoint_commutant(L, piece, _generating_rows(L, piece))
    if len(commutant) <= 1:
        return [piece]
    basis_t = transpose(piece.rows)
    for T in commutant:
        if _is_scalar_matrix(T):
            continue
        mp = minpoly(T)
        factors = factor_poly(mp)
        if len(factors) == 1 and factors[0][1] == 1:
            continue  # irreducible minimal polynomial: no rational split from T
        pieces = []
        for fac, mult in factors:
            power = fac
            for _ in range(mult - 1):
                power = _poly_mul(power, fac)
            ker = kernel(poly_eval_matrix(power, T), piece.dim)
            sub = SubspaceBasis.from_vectors(
                L.dim, [matvec(basis_t, t) for t in ker]
            )
            if sub.dim:
                pieces.append(sub)
        if len(pieces) >= 2:
            out: list[SubspaceBasis] = []
            for p in pieces:
                out.extend(_split_semisimple(L, p, killing))
            return out
    # No rational idempotent found: the piece is simple over Q.
    return [piece]


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for a, pa in enumerate(p):
        if pa:
            for b, qb in enumerate(q):
                out[a + b] += pa * qb
    return tuple(out)


def simple_ideal_decomposition(L: LieAlgebra) -> tuple[SubspaceBasis, tuple[SubspaceBasis, ...]]:
    """Split a compact-type algebra as center + pairwise-orthogonal simple ideals.

    Requires the Killing form negative semi-definite with kernel equal to the
    center (raises NotCompactType otherwise). The simple ideals are returned in
    a deterministic order (dimension, then echelon rows).
    """
    B = killing_form(L)
    pos, _neg, _zero = B.inertia
    if pos > 0:
        raise NotCompactType("Killing form has a positive direction")
    z = center(L)
    killing_kernel = SubspaceBasis.from_vectors(L.dim, kernel(B.gram, L.dim))
    if killing_kernel.rows != z.rows:
        raise NotCompactType("Killing-form kernel differs from the center")
    g1 = derived_subalgebra(L)
    if z.dim + g1.dim != L.dim or z.intersect(g1).dim != 0:
        raise NotCompactType("center and derived subalgebra do not split the algebra")
    ideals = _split_semisimple(L, g1, B)
    ideals.sort(key=lambda s: (s.dim, s.pivots, s.rows))
    return z, tuple(ideals)
