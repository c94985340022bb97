from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reductive_workbench.errors import (
    MetricNotAdInvariant,
    MetricNotPositiveDefinite,
    NotASubalgebra,
)
from reductive_workbench.homspace import (
    MetricSpec,
    build_metric,
    isotropy_fixed_subspace,
    isotropy_irreducibility_probe,
    make_reductive_pair,
    naturally_reductive_check,
    normal_decomposition,
    normalizer_invariance_check,
)
from reductive_workbench.liealg import (
    SubspaceBasis,
    make_bilinear_form,
    make_lie_algebra,
)
from reductive_workbench.linalg import matrix, rat

from test_liealg import (
    CYCLIC_SO3,
    abelian,
    cyclic_so3,
    heisenberg,
    so3_plus_so3,
    so_algebra,
    unit_subspace,
)

F = Fraction


def sphere_pair():
    L = cyclic_so3()
    return normal_decomposition(L, unit_subspace(3, [2]))


def diagonal_pair():
    L = so3_plus_so3()
    diag = SubspaceBasis.from_vectors(
        6, [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]]
    )
    return normal_decomposition(L, diag)


def second_factor_pair():
    L = so3_plus_so3()
    return normal_decomposition(L, unit_subspace(6, [3, 4, 5]))


def so4_mod_so2_pair():
    return normal_decomposition(so_algebra(4), unit_subspace(6, [0]))


def trivial_isotropy_pair(L):
    return normal_decomposition(L, SubspaceBasis.zero(L.dim))


# --- normal decomposition -----------------------------------------------------


def test_sphere_pair_decomposition_and_flags():
    pair = sphere_pair()
    assert pair.m == unit_subspace(3, [0, 1])
    f = pair.flags
    assert (f.reductive, f.normal, f.naturally_reductive, f.effective) == (True,) * 4


def test_diagonal_pair_is_antidiagonal_and_effective():
    pair = diagonal_pair()
    # orthocomplement of the diagonal: vectors (v, -v)
    assert pair.m == SubspaceBasis.from_vectors(
        6, [[1, 0, 0, -1, 0, 0], [0, 1, 0, 0, -1, 0], [0, 0, 1, 0, 0, -1]]
    )
    assert pair.flags.effective and pair.flags.normal


def test_second_factor_pair_is_not_effective():
    pair = second_factor_pair()
    assert pair.flags.normal
    assert not pair.flags.effective
    assert pair.m == unit_subspace(6, [0, 1, 2])


def test_projections_identities():
    pair = so4_mod_so2_pair()
    from reductive_workbench.linalg import identity, mat_add, matmul

    P, Q = pair.proj_h, pair.proj_m
    assert mat_add(P, Q) == identity(6)
    assert matmul(P, P) == P
    assert matmul(Q, Q) == Q


def test_normal_decomposition_rejects_non_subalgebra():
    with pytest.raises(NotASubalgebra):
        normal_decomposition(so_algebra(4), unit_subspace(6, [0, 1]))


def test_normal_decomposition_rejects_bad_explicit_metrics():
    L = cyclic_so3()
    with pytest.raises(MetricNotAdInvariant):
        normal_decomposition(L, unit_subspace(3, [2]), make_bilinear_form([[1, 0, 0], [0, 1, 0], [0, 0, 2]]))
    with pytest.raises(MetricNotPositiveDefinite):
        normal_decomposition(L, unit_subspace(3, [2]), make_bilinear_form([[-1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def test_build_metric_rejects_noncompact():
    sl2 = make_lie_algebra(3, [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
    with pytest.raises(MetricNotPositiveDefinite):
        build_metric(sl2, MetricSpec())


def test_metric_spec_validation():
    L = so3_plus_so3()
    with pytest.raises(ValueError):
        build_metric(L, MetricSpec.custom(scale_factors=[1]))  # two ideals
    with pytest.raises(MetricNotPositiveDefinite):
        build_metric(L, MetricSpec.custom(scale_factors=[1, -1]))
    with pytest.raises(ValueError):
        build_metric(L, MetricSpec.custom(center_gram=[[1]]))  # centerless
    with pytest.raises(ValueError):
        MetricSpec("negative_killing", (rat(2),), None)


def test_center_gram_metric_on_so3_plus_r():
    L = make_lie_algebra(4, CYCLIC_SO3)
    form = build_metric(L, MetricSpec.custom(center_gram=[[3]]))
    assert form.gram == matrix([[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]])
    pair = normal_decomposition(L, SubspaceBasis.zero(4), MetricSpec.custom(center_gram=[[3]]))
    assert pair.flags.normal and pair.flags.naturally_reductive


@settings(max_examples=15, deadline=None)
@given(
    st.fractions(min_value="1/3", max_value=4, max_denominator=5),
    st.fractions(min_value="1/3", max_value=4, max_denominator=5),
)
def test_scaled_metrics_keep_normal_pairs_naturally_reductive(s1, s2):
    L = so3_plus_so3()
    diag = SubspaceBasis.from_vectors(
        6, [[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 1, 0], [0, 0, 1, 0, 0, 1]]
    )
    pair = normal_decomposition(L, diag, MetricSpec.custom(scale_factors=[s1, s2]))
    assert pair.flags.normal and pair.flags.naturally_reductive
    assert naturally_reductive_check(pair).ok


# --- naturally reductive check -------------------------------------------------


def test_normal_pairs_pass_naturally_reductive_check():
    for pair in (sphere_pair(), diagonal_pair(), second_factor_pair(), so4_mod_so2_pair()):
        assert naturally_reductive_check(pair).ok


def test_coupled_metric_breaks_natural_reductivity():
    # so(3) + R^2 with h = 0 and a positive-definite Gram coupling the so(3)
    # block to the abelian block; brute-force search over couplings finds a
    # violation, and the first lexicographic witness is pinned.
    L = make_lie_algebra(5, CYCLIC_SO3)
    h = SubspaceBasis.zero(5)
    m = SubspaceBasis.full(5)
    found = None
    for i in range(3):
        for j in range(3, 5):
            gram = [[F(0)] * 5 for _ in range(5)]
            for d in range(3):
                gram[d][d] = F(2)
            for d in range(3, 5):
                gram[d][d] = F(1)
            gram[i][j] = gram[j][i] = F(1, 2)
            form = make_bilinear_form(gram)
            if form.definiteness != "positive-definite":
                continue
            pair = make_reductive_pair(L, h, m, form)
            res = naturally_reductive_check(pair)
            if not res.ok:
                found = (i, j, res)
                break
        if found:
            break
    assert found is not None
    i, j, res = found
    assert (i, j) == (0, 3)
    assert res.witness.indices == (1, 2, 3)
    assert res.witness.defect == F(1, 2)


def test_abelian_pair_trivially_naturally_reductive():
    pair = trivial_isotropy_pair(abelian(2))
    assert naturally_reductive_check(pair).ok


# --- normalizer invariance ------------------------------------------------------


def test_normalizer_of_cartan_line_in_so3():
    pair = sphere_pair()
    res = normalizer_invariance_check(pair)
    assert res.ok
    assert res.normalizer == unit_subspace(3, [2])


def test_normalizer_invariance_on_normal_pairs():
    for pair in (diagonal_pair(), second_factor_pair(), so4_mod_so2_pair()):
        assert normalizer_invariance_check(pair).ok


def test_normalizer_moves_complement_in_heisenberg_pair():
    # naturally reductive but non-normal: h = center, m = span(x, y)
    L = heisenberg()
    pair = make_reductive_pair(
        L,
        unit_subspace(3, [2]),
        unit_subspace(3, [0, 1]),
        make_bilinear_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    )
    assert pair.flags.reductive and pair.flags.naturally_reductive
    assert not pair.flags.normal
    res = normalizer_invariance_check(pair)
    assert not res.ok
    assert res.normalizer == SubspaceBasis.full(3)
    assert res.witness.indices[:2] == (0, 1)  # [x, y] = z leaves m


# --- isotropy fixed subspace -----------------------------------------------------


def test_fixed_subspace_examples():
    assert isotropy_fixed_subspace(sphere_pair()).dim == 0
    pair = trivial_isotropy_pair(cyclic_so3())
    assert isotropy_fixed_subspace(pair) == pair.m
    assert isotropy_fixed_subspace(so4_mod_so2_pair()) == unit_subspace(6, [5])


def test_fixed_subspace_is_bracket_closed_in_m():
    for pair in (sphere_pair(), diagonal_pair(), so4_mod_so2_pair(), second_factor_pair()):
        fixed = isotropy_fixed_subspace(pair)
        assert pair.m.contains(fixed)
        for u in fixed.rows:
            for r in pair.h.rows:
                assert pair.algebra.bracket(r, u) == (rat(0),) * pair.algebra.dim
            for w in fixed.rows:
                assert fixed.contains_vector(pair.bracket_m(u, w))


# --- irreducibility probe ---------------------------------------------------------


def test_probe_sphere_pair_never_reports_reducible():
    res = isotropy_irreducibility_probe(sphere_pair())
    assert res.verdict == "inconclusive"  # rotation commutant has no rational split
    assert res.commutant_dim == 2
    assert res.invariant_subspace is None


def test_probe_so4_mod_so2_reducible_via_fixed_line():
    res = isotropy_irreducibility_probe(so4_mod_so2_pair())
    assert res.verdict == "reducible"
    assert res.invariant_subspace == unit_subspace(6, [5])


def test_probe_trivial_isotropy_reducible():
    res = isotropy_irreducibility_probe(trivial_isotropy_pair(cyclic_so3()))
    assert res.verdict == "reducible"
    assert res.invariant_subspace.dim < 3


def test_probe_round_sphere_s3_irreducible():
    pair = normal_decomposition(so_algebra(4), unit_subspace(6, [0, 1, 3]))
    res = isotropy_irreducibility_probe(pair)
    assert res.verdict == "irreducible"
    assert res.commutant_dim == 1


def test_probe_witness_is_invariant_when_reducible():
    for pair in (so4_mod_so2_pair(), second_factor_pair()):
        res = isotropy_irreducibility_probe(pair)
        if res.verdict != "reducible":
            continue
        W = res.invariant_subspace
        assert 0 < W.dim < pair.m.dim
        for r in pair.h.rows:
            for w in W.rows:
                assert W.contains_vector(pair.algebra.bracket(r, w))
