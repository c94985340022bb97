"""Named desk-scale algebras, subalgebra embeddings and space presentations.

Families: so(n) on the lexicographic E_ij basis (elementary antisymmetric
matrices), su(n) realified on the documented A/S/D basis, direct sums, corner
embeddings so(k) in so(n) and su(k) in su(n) (top-left block), the diagonal
embedding of g in g+g, trivial subalgebras and abelian r(d). Structure
constants are generated from matrix commutators and validated by the algebra
constructor; every entry also carries an exact matrix realization.

Regression expectations for the curated entries are loaded from packaged data
produced by scripts/compute_expected_catalog.py, never typed by hand.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cache, cached_property
from importlib import resources

from .errors import ParamOutOfRange, UnknownName
from .homspace import (
    MetricSpec,
    ReductivePair,
    isotropy_fixed_subspace,
    normal_decomposition,
)
from .liealg import LieAlgebra, SubspaceBasis, make_lie_algebra
from .linalg import Matrix, ONE, ZERO
from .numlab import MatrixRealization, make_matrix_realization

DESK_CAP = 8

CURATED_NAMES = (
    "so3_mod_so2",
    "so4_mod_so3",
    "so5_mod_so4",
    "so6_mod_so5",
    "so4_mod_so2",
    "su3_mod_su2",
    "so3_mod_0",
    "so4_mod_0",
    "so3so3_mod_diag",
    "so4so4_mod_diag",
    "so3so3_mod_second_factor",
    "so3r1_mod_0",
    "r2_mod_0",
)


@dataclass(frozen=True)
class CatalogEntry:
    """A named space presentation with frozen regression expectations."""

    name: str
    algebra: LieAlgebra
    h: SubspaceBasis
    metric_spec: MetricSpec
    expected: dict = field(compare=False)
    realization: MatrixRealization = field(compare=False)

    @cached_property
    def pair(self) -> ReductivePair:
        return normal_decomposition(self.algebra, self.h, self.metric_spec)

    @cached_property
    def fixed_subspace(self) -> SubspaceBasis:
        return isotropy_fixed_subspace(self.pair)


# ---------------------------------------------------------------------------
# factor builders: (dim, labels, entries, real basis matrices)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Factor:
    dim: int
    labels: tuple[str, ...]
    entries: tuple
    basis_mats: tuple[Matrix, ...]


def _zeros(n):
    return [[ZERO] * n for _ in range(n)]


def _entries_from_brackets(dim, bracket_coords):
    entries = []
    for i in range(dim):
        for j in range(i + 1, dim):
            for k, c in enumerate(bracket_coords(i, j)):
                if c:
                    entries.append((i, j, k, c))
    return tuple(entries)


def _build_so(n: int) -> _Factor:
    mats = []
    labels = []
    for i in range(n):
        for j in range(i + 1, n):
            M = _zeros(n)
            M[i][j], M[j][i] = ONE, -ONE
            mats.append(tuple(tuple(r) for r in M))
            labels.append(f"E{i + 1}{j + 1}")

    def extract(M):
        return [M[i][j] for i in range(n) for j in range(i + 1, n)]

    def bracket_coords(a, b):
        return extract(_real_commutator(mats[a], mats[b]))

    dim = n * (n - 1) // 2
    return _Factor(dim, tuple(labels), _entries_from_brackets(dim, bracket_coords), tuple(mats))


def _real_commutator(A, B):
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
    return out


def _build_su(n: int) -> _Factor:
    # complex anti-hermitian traceless basis, stored as (re, im) pairs:
    # A_ij = E_ij - E_ji, S_ij = i(E_ij + E_ji), D_k = i(E_kk - E_{k+1,k+1})
    cmats = []
    labels = []
    for i in range(n):
        for j in range(i + 1, n):
            re = _zeros(n)
            re[i][j], re[j][i] = ONE, -ONE
            cmats.append((re, _zeros(n)))
            labels.append(f"A{i + 1}{j + 1}")
    for i in range(n):
        for j in range(i + 1, n):
            im = _zeros(n)
            im[i][j], im[j][i] = ONE, ONE
            cmats.append((_zeros(n), im))
            labels.append(f"S{i + 1}{j + 1}")
    for k in range(n - 1):
        im = _zeros(n)
        im[k][k], im[k + 1][k + 1] = ONE, -ONE
        cmats.append((_zeros(n), im))
        labels.append(f"D{k + 1}")

    def extract(M):
        re, im = M
        coords = [re[i][j] for i in range(n) for j in range(i + 1, n)]
        coords += [im[i][j] for i in range(n) for j in range(i + 1, n)]
        acc = ZERO
        for k in range(n - 1):
            acc = acc + im[k][k]
            coords.append(acc)
        return coords

    def ccomm(A, B):
        (ar, ai), (br, bi) = A, B
        rr, ri = _zeros(n), _zeros(n)
        for i in range(n):
            for k in range(n):
                for sign, (xr, xi), (yr, yi) in ((1, (ar, ai), (br, bi)), (-1, (br, bi), (ar, ai))):
                    a, b = xr[i][k], xi[i][k]
                    if a or b:
                        for j in range(n):
                            rr[i][j] += sign * (a * yr[k][j] - b * yi[k][j])
                            ri[i][j] += sign * (a * yi[k][j] + b * yr[k][j])
        return rr, ri

    def bracket_coords(a, b):
        return extract(ccomm(cmats[a], cmats[b]))

    def realify(pair):
        re, im = pair
        R = _zeros(2 * n)
        for i in range(n):
            for j in range(n):
                R[2 * i][2 * j] = re[i][j]
                R[2 * i + 1][2 * j + 1] = re[i][j]
                R[2 * i][2 * j + 1] = -im[i][j]
                R[2 * i + 1][2 * j] = im[i][j]
        return tuple(tuple(r) for r in R)

    dim = n * n - 1
    return _Factor(
        dim,
        tuple(labels),
        _entries_from_brackets(dim, bracket_coords),
        tuple(realify(pair) for pair in cmats),
    )


def _build_abelian(d: int) -> _Factor:
    mats = []
    for t in range(d):
        M = _zeros(2 * d)
        M[2 * t][2 * t + 1], M[2 * t + 1][2 * t] = -ONE, ONE
        mats.append(tuple(tuple(r) for r in M))
    return _Factor(d, tuple(f"Z{t + 1}" for t in range(d)), (), tuple(mats))


def _direct_sum(parts: list[_Factor]) -> _Factor:
    if len(parts) == 1:
        return parts[0]
    dim = sum(p.dim for p in parts)
    labels = []
    entries = []
    offset = 0
    for t, p in enumerate(parts):
        labels.extend(f"{lbl}_{t + 1}" for lbl in p.labels)
        entries.extend((i + offset, j + offset, k + offset, c) for i, j, k, c in p.entries)
        offset += p.dim
    sizes = [len(p.basis_mats[0]) for p in parts]
    total = sum(sizes)
    mats = []
    off_mat = 0
    for t, p in enumerate(parts):
        for B in p.basis_mats:
            M = _zeros(total)
            for i in range(sizes[t]):
                for j in range(sizes[t]):
                    M[off_mat + i][off_mat + j] = B[i][j]
            mats.append(tuple(tuple(r) for r in M))
        off_mat += sizes[t]
    return _Factor(dim, tuple(labels), tuple(entries), tuple(mats))


# ---------------------------------------------------------------------------
# subalgebra pickers
# ---------------------------------------------------------------------------


def so_corner_indices(n: int, k: int) -> list[int]:
    """Positions of E_ij with j <= k: the top-left so(k) block."""
    out = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if j + 1 <= k:
                out.append(idx)
            idx += 1
    return out


def su_corner_indices(n: int, k: int) -> list[int]:
    npairs = n * (n - 1) // 2
    out = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if j + 1 <= k:
                out.append(idx)
                out.append(npairs + idx)
            idx += 1
    out.extend(2 * npairs + t for t in range(k - 1))
    return sorted(out)


def _unit_rows(ambient, indices):
    return SubspaceBasis.from_vectors(
        ambient,
        [tuple(ONE if c == i else ZERO for c in range(ambient)) for i in indices],
    )


def _diagonal_subspace(factor_dim: int) -> SubspaceBasis:
    rows = []
    for i in range(factor_dim):
        row = [ZERO] * (2 * factor_dim)
        row[i] = ONE
        row[factor_dim + i] = ONE
        rows.append(row)
    return SubspaceBasis.from_vectors(2 * factor_dim, rows)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


@cache
def _expected_table() -> dict:
    data = resources.files("reductive_workbench").joinpath("data/catalog_expected.json")
    return json.loads(data.read_text(encoding="utf-8"))


def _check_range(n: int, low: int = 2) -> None:
    if not (low <= n <= DESK_CAP):
        raise ParamOutOfRange(f"parameter {n} outside desk scale [{low}, {DESK_CAP}]")


@cache
def construct(name: str) -> CatalogEntry:
    """Build a catalog entry by name; parametric families are matched by pattern."""
    factor: _Factor
    if m := re.fullmatch(r"so(\d+)_mod_so(\d+)", name):
        n, k = int(m.group(1)), int(m.group(2))
        _check_range(n, low=3)
        if not 2 <= k < n:
            raise ParamOutOfRange(f"corner so({k}) needs 2 <= k < {n}")
        factor = _build_so(n)
        h_indices = so_corner_indices(n, k)
    elif m := re.fullmatch(r"so(\d+)_mod_0", name):
        n = int(m.group(1))
        _check_range(n)
        factor = _build_so(n)
        h_indices = []
    elif m := re.fullmatch(r"su(\d+)_mod_su(\d+)", name):
        n, k = int(m.group(1)), int(m.group(2))
        _check_range(n, low=3)
        if not 2 <= k < n:
            raise ParamOutOfRange(f"corner su({k}) needs 2 <= k < {n}")
        factor = _build_su(n)
        h_indices = su_corner_indices(n, k)
    elif m := re.fullmatch(r"su(\d+)_mod_0", name):
        n = int(m.group(1))
        _check_range(n)
        factor = _build_su(n)
        h_indices = []
    elif m := re.fullmatch(r"so(\d+)so(\d+)_mod_diag", name):
        n, n2 = int(m.group(1)), int(m.group(2))
        if n != n2:
            raise UnknownName(f"diagonal pairing needs equal factors, got {name}")
        _check_range(n, low=3)
        part = _build_so(n)
        factor = _direct_sum([part, part])
        algebra = make_lie_algebra(factor.dim, factor.entries, factor.labels)
        h = _diagonal_subspace(part.dim)
        return _finish(name, algebra, h, factor)
    elif m := re.fullmatch(r"so(\d+)so(\d+)_mod_second_factor", name):
        n, n2 = int(m.group(1)), int(m.group(2))
        if n != n2:
            raise UnknownName(f"factor pairing needs equal factors, got {name}")
        _check_range(n, low=3)
        part = _build_so(n)
        factor = _direct_sum([part, part])
        h_indices = list(range(part.dim, 2 * part.dim))
    elif m := re.fullmatch(r"r(\d+)_mod_0", name):
        d = int(m.group(1))
        _check_range(d, low=1)
        factor = _build_abelian(d)
        h_indices = []
    elif name == "so3r1_mod_0":
        factor = _direct_sum([_build_so(3), _build_abelian(1)])
        h_indices = []
    else:
        raise UnknownName(f"no catalog family matches {name!r}")
    algebra = make_lie_algebra(factor.dim, factor.entries, factor.labels)
    h = _unit_rows(factor.dim, h_indices)
    return _finish(name, algebra, h, factor)


def _finish(name: str, algebra: LieAlgebra, h: SubspaceBasis, factor: _Factor) -> CatalogEntry:
    realization = make_matrix_realization(algebra, factor.basis_mats)
    expected = _expected_table().get(name, {})
    return CatalogEntry(name, algebra, h, MetricSpec(), expected, realization)


def catalog_names() -> tuple[str, ...]:
    return CURATED_NAMES
