"""Reductive decompositions g = h + m and their classification.

Builds normal decompositions (m = orthogonal complement of h with respect to
an invariant positive-definite metric), verifies all flags exactly, and probes
the isotropy representation on m for fixed vectors and invariant subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (
    InvalidDecomposition,
    MetricNotAdInvariant,
    MetricNotPositiveDefinite,
    NotASubalgebra,
    NotCompactType,
    NotReductive,
)
from .liealg import (
    BilinearForm,
    CheckResult,
    LieAlgebra,
    SubspaceBasis,
    TripleWitness,
    ad_invariance_check,
    center,
    derived_subalgebra,
    is_subalgebra,
    killing_form,
    largest_ideal_in,
    make_bilinear_form,
    orthogonal_complement,
    simple_ideal_decomposition,
)
from .linalg import (
    Matrix,
    ONE,
    Vector,
    ZERO,
    charpoly,
    factor_poly,
    identity,
    kernel,
    mat_add,
    mat_inverse,
    matmul,
    matvec,
    rat,
    transpose,
    vadd,
    vector,
)


@dataclass(frozen=True)
class MetricSpec:
    """Recipe for an invariant inner product: -Killing per simple ideal, with
    optional positive rational scales, and a user Gram matrix on the center
    (identity by default)."""

    mode: str = "negative_killing"  # "negative_killing" (all defaults) or "custom"
    scale_factors: tuple[Fraction, ...] | None = None
    center_gram: Matrix | None = None

    def __post_init__(self):
        if self.mode not in ("negative_killing", "custom"):
            raise ValueError(f"unknown metric mode {self.mode!r}")
        if self.mode == "negative_killing" and (
            self.scale_factors is not None or self.center_gram is not None
        ):
            raise ValueError("negative_killing mode takes no parameters; use mode='custom'")

    @staticmethod
    def custom(scale_factors=None, center_gram=None) -> "MetricSpec":
        scales = None
        if scale_factors is not None:
            scales = tuple(rat(s) for s in scale_factors)
        gram = None
        if center_gram is not None:
            gram = tuple(vector(row) for row in center_gram)
        return MetricSpec("custom", scales, gram)


def build_metric(L: LieAlgebra, spec: MetricSpec) -> BilinearForm:
    """Assemble and fully verify the invariant metric described by `spec`."""
    B = killing_form(L)
    z = center(L)
    if spec.scale_factors is not None:
        _, ideals = simple_ideal_decomposition(L)
        if len(spec.scale_factors) != len(ideals):
            raise ValueError(
                f"{len(spec.scale_factors)} scale factors for {len(ideals)} simple ideals"
            )
        if any(s <= 0 for s in spec.scale_factors):
            raise MetricNotPositiveDefinite("scale factors must be positive")
        blocks = list(ideals)
        scales = list(spec.scale_factors)
    else:
        g1 = derived_subalgebra(L)
        blocks = [g1] if g1.dim else []
        scales = [ONE]
    gram = [[ZERO] * L.dim for _ in range(L.dim)]
    adapted = list(z.rows)
    for blk in blocks:
        adapted.extend(blk.rows)
    if len(adapted) != L.dim:
        raise NotCompactType("center and derived subalgebra do not span the algebra")
    coord_rows = mat_inverse(transpose(tuple(adapted)))  # row r = coordinates along adapted[r]
    offset = z.dim
    for blk, s in zip(blocks, scales):
        R = coord_rows[offset : offset + blk.dim]
        blk_gram = [
            [-s * B.apply(u, v) for v in blk.rows] for u in blk.rows
        ]
        contrib = matmul(matmul(transpose(R), tuple(tuple(r) for r in blk_gram)), R)
        gram = [list(vadd(tuple(g), c)) for g, c in zip(gram, contrib)]
        offset += blk.dim
    if z.dim:
        cg = spec.center_gram if spec.center_gram is not None else identity(z.dim)
        if len(cg) != z.dim or any(len(r) != z.dim for r in cg):
            raise ValueError(f"center gram must be {z.dim}x{z.dim}")
        Rz = coord_rows[: z.dim]
        contrib = matmul(matmul(transpose(Rz), cg), Rz)
        gram = [list(vadd(tuple(g), c)) for g, c in zip(gram, contrib)]
    elif spec.center_gram is not None:
        raise ValueError("center gram supplied but the algebra has no center")
    form = make_bilinear_form(gram)
    if form.definiteness != "positive-definite":
        raise MetricNotPositiveDefinite(
            f"assembled metric is {form.definiteness}; the algebra must be of compact type"
        )
    inv = ad_invariance_check(L, form)
    if not inv.ok:
        raise MetricNotAdInvariant(f"witness {inv.witness}")
    return form


@dataclass(frozen=True)
class ReductiveFlags:
    reductive: bool
    normal: bool
    naturally_reductive: bool
    effective: bool


@dataclass(frozen=True)
class ReductivePair:
    """The decomposition g = h + m with projections and verified flags."""

    algebra: LieAlgebra
    h: SubspaceBasis
    m: SubspaceBasis
    metric: BilinearForm
    flags: ReductiveFlags
    proj_h: Matrix
    proj_m: Matrix

    def project_h(self, X: Vector) -> Vector:
        return matvec(self.proj_h, X)

    def project_m(self, X: Vector) -> Vector:
        return matvec(self.proj_m, X)

    def bracket_m(self, X: Vector, Y: Vector) -> Vector:
        return self.project_m(self.algebra.bracket(X, Y))

    @cached_property
    def gram_m(self) -> Matrix:
        """Metric restricted to the rows of m."""
        return self.metric.restrict(self.m)


def _projections(L: LieAlgebra, h: SubspaceBasis, m: SubspaceBasis) -> tuple[Matrix, Matrix]:
    rows = h.rows + m.rows
    if len(rows) != L.dim:
        raise InvalidDecomposition(f"dim h + dim m = {len(rows)} != {L.dim}")
    basis_t = transpose(rows)
    try:
        coord_rows = mat_inverse(basis_t)
    except ValueError:
        raise InvalidDecomposition("h and m have a nonzero intersection") from None
    h_block = tuple(basis_t[i][: h.dim] for i in range(L.dim))
    proj_h = matmul(h_block, coord_rows[: h.dim]) if h.dim else tuple(
        tuple(ZERO for _ in range(L.dim)) for _ in range(L.dim)
    )
    proj_m = mat_add(identity(L.dim), tuple(tuple(-x for x in row) for row in proj_h))
    return proj_h, proj_m


def _reductive_flag(L: LieAlgebra, h: SubspaceBasis, m: SubspaceBasis) -> bool:
    return all(
        m.contains_vector(L.bracket(u, w)) for u in h.rows for w in m.rows
    )


def _naturally_reductive_witness(pair_like) -> TripleWitness | None:
    L, m, gram_m, proj_m = pair_like
    units = m.rows
    projected = {
        (a, b): matvec(proj_m, L.bracket(units[a], units[b]))
        for a in range(len(units))
        for b in range(len(units))
    }
    coords = {key: m.coords_of(v) for key, v in projected.items()}

    def pairing(coeffs, c):
        # <v, m_c> with v given by m-coordinates
        return sum((coeffs[t] * gram_m[t][c] for t in range(len(coeffs))), ZERO)

    for a in range(len(units)):
        for b in range(len(units)):
            for c in range(len(units)):
                defect = pairing(coords[(a, b)], c) + pairing(coords[(a, c)], b)
                if defect != 0:
                    return TripleWitness((a, b, c), defect)
    return None


def make_reductive_pair(
    L: LieAlgebra, h: SubspaceBasis, m: SubspaceBasis, metric: BilinearForm
) -> ReductivePair:
    """General constructor: flags are computed, not assumed."""
    sub_check = is_subalgebra(L, h)
    if not sub_check.ok:
        raise NotASubalgebra(sub_check.witness)
    proj_h, proj_m = _projections(L, h, m)
    reductive = _reductive_flag(L, h, m)
    gram_m = metric.restrict(m)
    nr = False
    if reductive:
        nr = _naturally_reductive_witness((L, m, gram_m, proj_m)) is None
    normal = (
        metric.definiteness == "positive-definite"
        and ad_invariance_check(L, metric).ok
        and m == orthogonal_complement(h, metric)
    )
    effective = largest_ideal_in(L, h).dim == 0
    flags = ReductiveFlags(reductive, normal, nr, effective)
    return ReductivePair(L, h, m, metric, flags, proj_h, proj_m)


def normal_decomposition(
    L: LieAlgebra, h: SubspaceBasis, spec_or_form: MetricSpec | BilinearForm | None = None
) -> ReductivePair:
    """h + h-perp with respect to an invariant positive-definite metric.

    Accepts a MetricSpec (default: plain -Killing with identity on the center)
    or an explicit BilinearForm, which is then verified to be positive-definite
    and invariant.
    """
    sub_check = is_subalgebra(L, h)
    if not sub_check.ok:
        raise NotASubalgebra(sub_check.witness)
    if spec_or_form is None:
        spec_or_form = MetricSpec()
    if isinstance(spec_or_form, MetricSpec):
        form = build_metric(L, spec_or_form)
    else:
        form = spec_or_form
        if form.definiteness != "positive-definite":
            raise MetricNotPositiveDefinite(f"metric is {form.definiteness}")
        inv = ad_invariance_check(L, form)
        if not inv.ok:
            raise MetricNotAdInvariant(f"witness {inv.witness}")
    m = orthogonal_complement(h, form)
    pair = make_reductive_pair(L, h, m, form)
    assert pair.flags.normal, "normal decomposition failed its own normality check"
    assert pair.flags.reductive, "invariant metric must make h-perp reductive"
    return pair


def naturally_reductive_check(pair: ReductivePair) -> CheckResult:
    """<[X,Y]_m, Z> + <Y, [X,Z]_m> = 0 over ordered basis triples of m."""
    if not pair.flags.reductive:
        raise NotReductive("naturally reductive check needs a reductive pair")
    witness = _naturally_reductive_witness(
        (pair.algebra, pair.m, pair.gram_m, pair.proj_m)
    )
    return CheckResult(witness is None, witness)


@dataclass(frozen=True)
class NormalizerCheck:
    ok: bool
    normalizer: SubspaceBasis
    witness: TripleWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def normalizer_invariance_check(pair: ReductivePair) -> NormalizerCheck:
    """Does the normalizer algebra of h keep m invariant: [n_g(h), m] in m?"""
    if not pair.flags.reductive:
        raise NotReductive("normalizer invariance check needs a reductive pair")
    L, h, m = pair.algebra, pair.h, pair.m
    if h.dim == 0:
        normalizer = SubspaceBasis.full(L.dim)
    else:
        ann_h = h.annihilator()
        system_rows = []
        for r in h.rows:
            # [X, r] in h  <=>  ann_h . ad(r) . X = 0 (up to sign)
            system_rows.extend(matmul(ann_h, L.ad(r)))
        normalizer = SubspaceBasis.from_vectors(L.dim, kernel(tuple(system_rows), L.dim))
    for a, u in enumerate(normalizer.rows):
        for b, w in enumerate(m.rows):
            if not m.contains_vector(L.bracket(u, w)):
                return NormalizerCheck(False, normalizer, TripleWitness((a, b, -1), ZERO))
    return NormalizerCheck(True, normalizer)


from functools import lru_cache


@lru_cache(maxsize=None)
def isotropy_fixed_subspace(pair: ReductivePair) -> SubspaceBasis:
    """m^h = {X in m : [h, X] = 0}, the fixed set of the isotropy action."""
    if not pair.flags.reductive:
        raise NotReductive("fixed subspace needs a reductive pair")
    L, h, m = pair.algebra, pair.h, pair.m
    if h.dim == 0 or m.dim == 0:
        return m
    basis_t = transpose(m.rows)
    system_rows = []
    for r in h.rows:
        system_rows.extend(matmul(L.ad(r), basis_t))
    t_kernel = kernel(tuple(system_rows), m.dim)
    return SubspaceBasis.from_vectors(L.dim, [matvec(basis_t, t) for t in t_kernel])


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of the isotropy-irreducibility probe."""

    verdict: str  # "irreducible" | "reducible" | "inconclusive"
    invariant_subspace: SubspaceBasis | None = None
    commutant_dim: int = 0


def isotropy_irreducibility_probe(pair: ReductivePair) -> ProbeResult:
    """Search for a proper invariant subspace of the isotropy action on m.

    Factors characteristic polynomials of commutant elements over Q. A trivial
    commutant certifies irreducibility; a rational factor yields a reducibility
    witness; otherwise the probe stays honest and reports inconclusive.
    """
    if not pair.flags.reductive:
        raise NotReductive("irreducibility probe needs a reductive pair")
    L, h, m = pair.algebra, pair.h, pair.m
    if m.dim == 0:
        return ProbeResult("irreducible", None, 0)
    fixed = isotropy_fixed_subspace(pair)
    if 0 < fixed.dim < m.dim:
        return ProbeResult("reducible", fixed, _commutant_dim(pair))
    commutant = _isotropy_commutant(pair)
    if len(commutant) == 1:
        return ProbeResult("irreducible", None, 1)
    basis_t = transpose(m.rows)
    for T in commutant:
        if _is_scalar(T):
            continue
        for fac, mult in factor_poly(charpoly(T)):
            power = fac
            for _ in range(mult - 1):
                power = _poly_mul(power, fac)
            ker = kernel(_poly_matrix(power, T), m.dim)
            if 0 < len(ker) < m.dim:
                witness = SubspaceBasis.from_vectors(
                    L.dim, [matvec(basis_t, t) for t in ker]
                )
                return ProbeResult("reducible", witness, len(commutant))
    return ProbeResult("inconclusive", None, len(commutant))


def _isotropy_commutant(pair: ReductivePair) -> tuple[Matrix, ...]:
    """Basis of {T on m : T commutes with ad(h)|_m}, in m-coordinates."""
    L, h, m = pair.algebra, pair.h, pair.m
    r = m.dim
    restricted = []
    for u in h.rows:
        cols = []
        for w in m.rows:
            coords = m.coords_of(L.bracket(u, w))
            assert coords is not None, "pair is not reductive"
            cols.append(coords)
        restricted.append(transpose(tuple(cols)))
    system_rows = []
    for A in restricted:
        for a in range(r):
            for b in range(r):
                coeffs = [ZERO] * (r * r)
                for c in range(r):
                    coeffs[a * r + c] += A[c][b]
                    coeffs[c * r + b] -= A[a][c]
                system_rows.append(tuple(coeffs))
    flat_basis = kernel(tuple(system_rows), r * r) if system_rows else identity(r * r)
    return tuple(
        tuple(tuple(flat[p * r + q] for q in range(r)) for p in range(r))
        for flat in flat_basis
    )


def _commutant_dim(pair: ReductivePair) -> int:
    return len(_isotropy_commutant(pair))


def _is_scalar(T: Matrix) -> bool:
    lam = T[0][0]
    n = len(T)
    return all(T[i][j] == (lam if i == j else 0) for i in range(n) for j in range(n))


def _poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = [ZERO] * (len(p) + len(q) - 1)
    for a, pa in enumerate(p):
        if pa:
            for b, qb in enumerate(q):
                out[a + b] += pa * qb
    return tuple(out)


def _poly_matrix(coeffs: Sequence[Fraction], A: Matrix) -> Matrix:
    from .linalg import poly_eval_matrix

    return poly_eval_matrix(coeffs, A)
