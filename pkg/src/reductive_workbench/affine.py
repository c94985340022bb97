"""Transvection algebra, invariant-field algebra, affine assembly and the
fixed-point torus of a reductive pair, with the gated isometry identification.

Bracket convention on the invariant-field algebra k (carrier m^h):

    [X, Y]_k = -[X, Y]_m

The opposite sign gives the anti-isomorphic algebra; comparisons are made only
through isomorphism invariants (dimension, center dimension, Killing inertia).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ClosureFailure, NotEffective, NotNormal, NotReductive
from .homspace import (
    ProbeResult,
    ReductivePair,
    isotropy_fixed_subspace,
    isotropy_irreducibility_probe,
)
from .liealg import (
    BilinearForm,
    CheckResult,
    LieAlgebra,
    SubspaceBasis,
    TripleWitness,
    center,
    centralizer,
    derived_subalgebra,
    is_subalgebra,
    make_bilinear_form,
    make_lie_algebra,
    orthogonal_complement,
)
from .linalg import Matrix, ZERO, matvec, transpose, vneg

K_BRACKET_CONVENTION = "[X,Y]_k = -[X,Y]_m"
ALMOST_DIRECT_PRODUCT_NOTE = (
    "factors commute at the Lie-algebra level; the corresponding groups may "
    "intersect in a discrete subgroup, which is not modeled here"
)
LOCAL_IRREDUCIBILITY_CAVEAT = (
    "local irreducibility is a global Riemannian hypothesis; the algebraic probe "
    "certifies only the sufficient case of an irreducible isotropy representation"
)
SPHERE_GATE_CAVEAT = (
    "identification of the full isometry group additionally assumes the space is "
    "not globally isometric to a sphere or a real projective space (user-asserted, "
    "not computed)"
)


def transvection_algebra(pair: ReductivePair) -> SubspaceBasis:
    """span([m, m]) + m inside g; verified to be a subalgebra (an ideal when normal)."""
    if not pair.flags.reductive:
        raise NotReductive("transvection algebra needs a reductive pair")
    L = pair.algebra
    rows = pair.m.rows
    vectors = list(rows)
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            vectors.append(L.bracket(rows[a], rows[b]))
    tr = SubspaceBasis.from_vectors(L.dim, vectors)
    assert is_subalgebra(L, tr).ok, "transvection span failed to close"
    if pair.flags.normal:
        assert all(
            tr.contains_vector(L.bracket(u, w))
            for u in SubspaceBasis.full(L.dim).rows
            for w in tr.rows
        ), "transvection algebra of a normal pair must be an ideal"
    return tr


@dataclass(frozen=True)
class TransvectionCheck:
    equals_g: bool
    transvection: SubspaceBasis
    complement: SubspaceBasis  # orthogonal complement; zero when equals_g
    complement_in_h: bool

    def __bool__(self) -> bool:
        return self.equals_g


def transvection_equals_g_check(pair: ReductivePair) -> TransvectionCheck:
    """Does the transvection algebra exhaust g? For effective normal pairs it must."""
    if not pair.flags.normal:
        raise NotNormal("transvection comparison is stated for normal pairs")
    L = pair.algebra
    tr = transvection_algebra(pair)
    if tr.dim == L.dim:
        zero = SubspaceBasis.zero(L.dim)
        return TransvectionCheck(True, tr, zero, True)
    comp = orthogonal_complement(tr, pair.metric)
    return TransvectionCheck(False, tr, comp, pair.h.contains(comp))


@dataclass(frozen=True)
class InvariantFieldAlgebra:
    """The algebra k of isotropy-fixed directions with bracket -[.,.]_m."""

    carrier: SubspaceBasis  # m^h, in ambient coordinates
    algebra: LieAlgebra  # bracket table on the carrier basis (Jacobi-validated)
    gram: Matrix  # ambient metric restricted to the carrier
    metric_invariant: bool
    compact_type: bool
    center: SubspaceBasis  # ambient coordinates
    status: str  # "invariant-fields" (normal pair) or "upper-bound-candidate"

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @cached_property
    def killing(self) -> BilinearForm:
        from .liealg import killing_form

        if self.dim == 0:
            return make_bilinear_form(())
        return killing_form(self.algebra)


class _ZeroAlgebra:
    """Stand-in for the zero Lie algebra (LieAlgebra requires dim >= 1)."""

    dim = 0
    basis_labels: tuple[str, ...] = ()
    entries: tuple = ()

    def bracket(self, X, Y):
        return ()

    def bracket_basis(self, i, j):
        raise IndexError("zero algebra has no basis")


_ZERO_ALGEBRA = _ZeroAlgebra()


from functools import lru_cache


@lru_cache(maxsize=None)
def invariant_field_algebra(pair: ReductivePair) -> InvariantFieldAlgebra:
    """Carrier m^h with the projected bracket; closure and Jacobi are verified."""
    if not pair.flags.reductive:
        raise NotReductive("invariant-field algebra needs a reductive pair")
    carrier = isotropy_fixed_subspace(pair)
    status = "invariant-fields" if pair.flags.normal else "upper-bound-candidate"
    gram = pair.metric.restrict(carrier)
    if carrier.dim == 0:
        return InvariantFieldAlgebra(
            carrier, _ZERO_ALGEBRA, gram, True, True,
            SubspaceBasis.zero(pair.algebra.dim), status,
        )
    rows = carrier.rows
    entries = []
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            value = vneg(pair.bracket_m(rows[a], rows[b]))
            coords = carrier.coords_of(value)
            if coords is None:
                raise ClosureFailure((a, b, value))
            entries.extend((a, b, k, c) for k, c in enumerate(coords) if c)
    algebra = make_lie_algebra(
        carrier.dim, entries, [f"k{a + 1}" for a in range(carrier.dim)]
    )
    metric_invariant = _k_metric_invariance(algebra, gram)
    posdef = make_bilinear_form(gram).definiteness == "positive-definite"
    basis_t = transpose(rows)
    center_ambient = SubspaceBasis.from_vectors(
        pair.algebra.dim, [matvec(basis_t, t) for t in center(algebra).rows]
    )
    return InvariantFieldAlgebra(
        carrier, algebra, gram, metric_invariant,
        posdef and metric_invariant, center_ambient, status,
    )


def _k_metric_invariance(algebra: LieAlgebra, gram: Matrix) -> bool:
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            bij = algebra.bracket_basis(i, j)
            for k in range(n):
                lhs = sum((bij[t] * gram[t][k] for t in range(n)), ZERO)
                bik = algebra.bracket_basis(i, k)
                rhs = sum((gram[j][t] * bik[t] for t in range(n)), ZERO)
                if lhs + rhs != 0:
                    return False
    return True


def invariant_field_killing_check(pair: ReductivePair) -> CheckResult:
    """Infinitesimal isometry identity for every fixed direction X:
    <[X,Y]_m, Z> + <Y, [X,Z]_m> = 0 over all Y, Z in the basis of m."""
    if not pair.flags.reductive:
        raise NotReductive("Killing check needs a reductive pair")
    carrier = isotropy_fixed_subspace(pair)
    G = pair.metric
    for a, x in enumerate(carrier.rows):
        for b, y in enumerate(pair.m.rows):
            for c, z in enumerate(pair.m.rows):
                defect = G.apply(pair.bracket_m(x, y), z) + G.apply(y, pair.bracket_m(x, z))
                if defect != 0:
                    return CheckResult(False, TripleWitness((a, b, c), defect))
    return CheckResult(True)


@dataclass(frozen=True)
class AffineAlgebra:
    """Direct sum of the semisimple part of g with the invariant-field algebra."""

    g1: SubspaceBasis
    k: InvariantFieldAlgebra
    total_dim: int
    assembled: LieAlgebra


def affine_algebra(pair: ReductivePair) -> AffineAlgebra:
    """Assemble g1 + k with componentwise bracket; the two factors commute.

    Requires a normal, effective pair. Verifies that the center of g embeds
    into k and that carrier vectors inside g1 centralizing g1 vanish.
    """
    if not pair.flags.normal:
        raise NotNormal("affine assembly is stated for normal pairs")
    if not pair.flags.effective:
        raise NotEffective("affine assembly needs an effective pair")
    L = pair.algebra
    g1 = derived_subalgebra(L)
    k = invariant_field_algebra(pair)
    total = g1.dim + k.dim
    entries = []
    for a in range(g1.dim):
        for b in range(a + 1, g1.dim):
            value = L.bracket(g1.rows[a], g1.rows[b])
            coords = g1.coords_of(value)
            assert coords is not None, "derived subalgebra is an ideal"
            entries.extend((a, b, t, c) for t, c in enumerate(coords) if c)
    for a in range(k.dim):
        for b in range(a + 1, k.dim):
            for t, c in enumerate(k.algebra.bracket_basis(a, b)):
                if c:
                    entries.append((g1.dim + a, g1.dim + b, g1.dim + t, c))
    assert total >= 1, "an effective pair on a nonzero algebra has a nonzero affine algebra"
    labels = [f"g1_{a + 1}" for a in range(g1.dim)] + [f"k{a + 1}" for a in range(k.dim)]
    assembled = make_lie_algebra(total, entries, labels)
    # center of g must inject into k through the m-projection
    zg = center(L)
    if zg.dim:
        images = [pair.project_m(z) for z in zg.rows]
        assert all(k.carrier.contains_vector(v) for v in images), "central directions must be fixed"
        assert (
            SubspaceBasis.from_vectors(L.dim, images).dim == zg.dim
        ), "center of g must inject into k"
    # carrier vectors inside g1 that centralize g1 vanish
    overlap = k.carrier.intersect(g1).intersect(centralizer(L, g1))
    assert overlap.dim == 0, "semisimple Killing fields meet k only at zero"
    return AffineAlgebra(g1, k, total, assembled)


@dataclass(frozen=True)
class TorusResult:
    dimension: int
    basis: SubspaceBasis  # ambient coordinates, inside the carrier of k


def fixed_torus(pair: ReductivePair) -> TorusResult:
    """Center of the invariant-field algebra; abelian by an exact check."""
    if not pair.flags.normal:
        raise NotNormal("the fixed-point torus is stated for normal pairs")
    k = invariant_field_algebra(pair)
    basis = k.center
    for u in basis.rows:
        for w in basis.rows:
            assert pair.bracket_m(u, w) == tuple(ZERO for _ in range(pair.algebra.dim))
    return TorusResult(basis.dim, basis)


@dataclass(frozen=True)
class UserAssertions:
    """Global Riemannian facts the engine cannot compute; None means unasserted."""

    locally_irreducible: bool | None = None
    is_sphere_or_rp: bool | None = None


@dataclass(frozen=True)
class IsometryFragment:
    certified: bool
    group_dim: int | None
    semisimple: bool | None
    probe: ProbeResult | None
    caveats: tuple[str, ...]


def isometry_report(
    pair: ReductivePair,
    assertions: UserAssertions | None = None,
    probe: ProbeResult | None = None,
    affine: AffineAlgebra | None = None,
) -> IsometryFragment:
    """Emit the isometry identification when the gates pass.

    Gate 1: the isotropy probe certifies irreducibility, or the user asserts
    local irreducibility. Gate 2: the user asserts the space is not a sphere or
    a real projective space. Otherwise only the affine algebra is certified.
    Precomputed probe/affine results may be passed to avoid recomputation.
    """
    assertions = assertions or UserAssertions()
    caveats = [ALMOST_DIRECT_PRODUCT_NOTE]
    if not (pair.flags.normal and pair.flags.effective):
        caveats.append("identification requires an effective normal pair")
        return IsometryFragment(False, None, None, None, tuple(caveats))
    probe = probe or isotropy_irreducibility_probe(pair)
    aff = affine or affine_algebra(pair)
    irreducibility_ok = probe.verdict == "irreducible" or assertions.locally_irreducible is True
    sphere_ok = assertions.is_sphere_or_rp is False
    caveats.append(LOCAL_IRREDUCIBILITY_CAVEAT)
    if irreducibility_ok and sphere_ok:
        semisimple = aff.k.center.dim == 0
        caveats.append(SPHERE_GATE_CAVEAT)
        return IsometryFragment(True, aff.total_dim, semisimple, probe, tuple(caveats))
    if not irreducibility_ok:
        caveats.append(
            f"local irreducibility not established (probe: {probe.verdict}; no user assertion)"
        )
    if not sphere_ok:
        caveats.append("sphere / real projective space not excluded by the user")
    caveats.append("isometry identification not certified; only the affine algebra is")
    return IsometryFragment(False, aff.total_dim, None, probe, tuple(caveats))
