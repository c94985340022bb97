import pytest

from reductive_workbench.affine import (
    affine_algebra,
    fixed_torus,
    invariant_field_algebra,
    transvection_algebra,
    transvection_equals_g_check,
)
from reductive_workbench.catalog import (
    CURATED_NAMES,
    catalog_names,
    construct,
    so_corner_indices,
    su_corner_indices,
)
from reductive_workbench.errors import ParamOutOfRange, UnknownName
from reductive_workbench.homspace import (
    isotropy_irreducibility_probe,
    normalizer_invariance_check,
    naturally_reductive_check,
)
from reductive_workbench.liealg import is_subalgebra, killing_form


@pytest.fixture(params=CURATED_NAMES)
def entry(request):
    return construct(request.param)


def test_every_entry_is_valid_and_embedded(entry):
    # make_lie_algebra already enforced Jacobi; embeddings must be subalgebras
    assert is_subalgebra(entry.algebra, entry.h).ok
    assert entry.expected, f"no frozen expectations for {entry.name}"


def test_every_entry_matches_expected_dims(entry):
    pair = entry.pair
    exp = entry.expected["dims"]
    k = invariant_field_algebra(pair)
    assert pair.algebra.dim == exp["g"]
    assert pair.h.dim == exp["h"]
    assert pair.m.dim == exp["m"]
    assert entry.fixed_subspace.dim == exp["m_fixed"]
    assert k.dim == exp["k"]
    assert k.center.dim == exp["k_center"]
    assert transvection_algebra(pair).dim == exp["transvection"]
    if exp["affine"] is None:
        assert not pair.flags.effective
    else:
        aff = affine_algebra(pair)
        assert aff.total_dim == exp["affine"]
        assert aff.assembled.dim == exp["affine"]


def test_every_entry_matches_expected_flags(entry):
    pair = entry.pair
    exp = entry.expected["flags"]
    assert pair.flags.reductive == exp["reductive"]
    assert pair.flags.normal == exp["normal"]
    assert pair.flags.naturally_reductive == exp["naturally_reductive"]
    assert pair.flags.effective == exp["effective"]
    assert naturally_reductive_check(pair).ok == exp["naturally_reductive"]
    assert normalizer_invariance_check(pair).ok == exp["normalizer_invariant"]
    assert transvection_equals_g_check(pair).equals_g == exp["transvection_equals_g"]


def test_every_entry_matches_expected_probe_and_torus(entry):
    pair = entry.pair
    assert isotropy_irreducibility_probe(pair).verdict == entry.expected["probe"]
    assert fixed_torus(pair).dimension == entry.expected["torus_dim"]


def test_killing_form_closed_trace_forms():
    # engine ad-traces vs the closed forms the oracle uses: so(n) gives
    # -2(n-2) per E_ij, su(n) realified gives the 2n tr(XY) values
    for n in (3, 4, 5):
        L = construct(f"so{n}_mod_0" if n != 5 else "so5_mod_so4").algebra
        B = killing_form(L)
        assert all(B.gram[i][i] == -2 * (n - 2) for i in range(L.dim))
    su3 = construct("su3_mod_su2").algebra
    B = killing_form(su3)
    # A_ij: tr(A^2) = -2 -> B = -12; S_ij likewise; D_k: tr(D^2) = -2 -> -12
    assert B.gram[0][0] == -12 and B.gram[3][3] == -12 and B.gram[6][6] == -12
    assert B.definiteness == "negative-definite"


def test_corner_index_helpers():
    assert so_corner_indices(4, 3) == [0, 1, 3]
    assert so_corner_indices(4, 2) == [0]
    assert su_corner_indices(3, 2) == [0, 3, 6]


def test_su3_su2_corner_is_subalgebra_with_fixed_line():
    e = construct("su3_mod_su2")
    assert e.h.dim == 3
    assert e.fixed_subspace.dim == 1
    # the fixed direction is the anti-hermitian diagonal commuting with the block
    fixed = e.fixed_subspace.rows[0]
    for r in e.h.rows:
        assert e.algebra.bracket(r, fixed) == tuple(0 for _ in range(8))


def test_realizations_expose_exact_skew_matrices(entry):
    real = entry.realization
    for B in real.basis_matrices:
        for i in range(real.matrix_dim):
            for j in range(real.matrix_dim):
                assert B[i][j] == -B[j][i]


def test_unknown_and_out_of_range_names():
    with pytest.raises(UnknownName):
        construct("sp4_mod_sp2")
    with pytest.raises(UnknownName):
        construct("so3so4_mod_diag")
    with pytest.raises(ParamOutOfRange):
        construct("so9_mod_so2")
    with pytest.raises(ParamOutOfRange):
        construct("so4_mod_so1")
    with pytest.raises(ParamOutOfRange):
        construct("r9_mod_0")
    with pytest.raises(ParamOutOfRange):
        construct("su2_mod_su1")


def test_parametric_families_work_beyond_curated_list():
    e = construct("su2_mod_0")
    assert e.algebra.dim == 3
    assert killing_form(e.algebra).definiteness == "negative-definite"
    e2 = construct("r3_mod_0")
    assert e2.pair.flags.normal


def test_catalog_names_listing():
    names = catalog_names()
    assert names == CURATED_NAMES
    assert len(set(names)) == len(names) == 13
