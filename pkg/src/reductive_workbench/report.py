"""Full analysis pipeline and deterministic report assembly.

A report is a plain dict with fixed key insertion order, so identical inputs
produce byte-identical JSON and text renderings. Exact scalars are serialized
as canonical rational strings, never as floats; the only floats appear in the
optional numeric-lab section, which is excluded from golden comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .affine import (
    ALMOST_DIRECT_PRODUCT_NOTE,
    K_BRACKET_CONVENTION,
    UserAssertions,
    affine_algebra,
    fixed_torus,
    invariant_field_algebra,
    invariant_field_killing_check,
    isometry_report,
    transvection_equals_g_check,
)
from .connection import CONVENTIONS as CONNECTION_CONVENTIONS
from .connection import connection_tensors_at_basepoint
from .errors import WorkbenchError
from .homspace import (
    isotropy_fixed_subspace,
    isotropy_irreducibility_probe,
    naturally_reductive_check,
    normal_decomposition,
    normalizer_invariance_check,
)
from .liealg import make_lie_algebra, SubspaceBasis
from .linalg import smul, vneg, rat, zero_vector

METRIC_CONVENTION = (
    "minus Killing form on each simple ideal (optional positive rational scales), "
    "user Gram matrix on the center (identity by default)"
)


class PipelineError(WorkbenchError):
    """An engine error tagged with the pipeline operation that raised it."""

    def __init__(self, operation: str, cause: Exception):
        self.operation = operation
        self.cause = cause
        super().__init__(f"{operation}: {cause}")


def _step(operation: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except WorkbenchError as exc:
        raise PipelineError(operation, exc) from exc


def _fmt(value) -> str:
    return str(Fraction(value))


def _fmt_vector(vec) -> list[str]:
    return [_fmt(c) for c in vec]


@dataclass(frozen=True)
class SpaceReport:
    body: dict

    def to_json(self) -> str:
        import json

        return json.dumps(self.body, indent=2) + "\n"

    def to_text(self) -> str:
        b = self.body
        lines = []
        lines.append(f"reductive-workbench {b['engine']['version']} :: {b['input']}")
        lines.append(f"checks: {b['checks']}")
        dims = b["dims"]
        lines.append(
            "dims: g={g} h={h} m={m} m_fixed={m_fixed} k={k} k_center={k_center} "
            "transvection={transvection} affine={affine}".format(
                **{key: ("-" if val is None else val) for key, val in dims.items()}
            )
        )
        flags = b["flags"]
        lines.append(
            "flags: "
            + " ".join(f"{name}={str(val).lower()}" for name, val in flags.items())
        )
        lines.append(f"torus dimension: {b['torus_dim'] if b['torus_dim'] is not None else '-'}")
        lines.append("theorem verdicts:")
        for v in b["theorem_verdicts"]:
            if not v["applicable"]:
                status = "n/a"
            else:
                status = "pass" if v["passed"] else "FAIL"
            detail = ""
            if v.get("details"):
                pairs = ", ".join(
                    f"{key}={str(val).lower() if isinstance(val, bool) else val}"
                    for key, val in v["details"].items()
                )
                detail = f"  [{pairs}]"
            lines.append(f"  {v['name']:32s} {status}{detail}")
        iso = b["isometry"]
        lines.append(f"isometry identification certified: {str(iso['certified']).lower()}")
        if iso["group_dim"] is not None:
            semi = iso["semisimple"]
            semi_text = "-" if semi is None else str(semi).lower()
            lines.append(f"  group dim {iso['group_dim']}, semisimple: {semi_text}")
        for caveat in iso["caveats"]:
            lines.append(f"  caveat: {caveat}")
        if b["witnesses"]:
            lines.append("witnesses:")
            for w in b["witnesses"]:
                lines.append(f"  {w}")
        if b.get("numeric"):
            lines.append("numeric lab:")
            for key, val in b["numeric"].items():
                lines.append(f"  {key}: {val}")
        return "\n".join(lines) + "\n"

    @property
    def exit_code(self) -> int:
        for verdict in self.body["theorem_verdicts"]:
            if verdict["applicable"] and not verdict["passed"]:
                return 2
        return 0


def _header() -> dict:
    return {
        "name": "reductive-workbench",
        "version": __version__,
        "indexing": "0-based basis indices in witnesses; input files are 1-based",
        "conventions": {
            **CONNECTION_CONVENTIONS,
            "invariant_field_bracket": K_BRACKET_CONVENTION,
            "metric": METRIC_CONVENTION,
            "almost_direct_product": ALMOST_DIRECT_PRODUCT_NOTE,
        },
    }


def run_report(
    source,
    checks: str = "all",
    numeric: bool = False,
    assertions: UserAssertions | None = None,
) -> SpaceReport:
    """Execute the full pipeline on a catalog entry or a parsed SpaceSpec."""
    from .catalog import CatalogEntry
    from .specfile import SpaceSpec

    if isinstance(source, CatalogEntry):
        input_desc = f"catalog:{source.name}"
        algebra = source.algebra
        pair = _step("normal_decomposition", lambda: source.pair)
        entry = source
    elif isinstance(source, SpaceSpec):
        input_desc = "file"
        algebra = _step(
            "make_lie_algebra",
            make_lie_algebra,
            source.dim,
            source.bracket_entries,
            source.basis_labels,
        )
        h = SubspaceBasis.from_vectors(source.dim, source.subalgebra_rows)
        pair = _step("normal_decomposition", normal_decomposition, algebra, h, source.metric_spec)
        assertions = assertions or source.assertions
        entry = None
    else:
        raise TypeError(f"cannot analyze {type(source).__name__}")

    witnesses: list[dict] = []

    def record_witness(check: str, witness) -> None:
        if witness is None:
            return
        entry_dict = {"check": check, "indices": list(witness.indices)}
        defect = witness.defect
        if isinstance(defect, (tuple, list)):
            entry_dict["defect"] = _fmt_vector(defect)
        else:
            entry_dict["defect"] = _fmt(defect)
        witnesses.append(entry_dict)

    nr = _step("naturally_reductive_check", naturally_reductive_check, pair)
    record_witness("naturally_reductive_identity", nr.witness)
    norm_inv = _step("normalizer_invariance_check", normalizer_invariance_check, pair)
    record_witness("normalizer_invariance", norm_inv.witness)
    killing = _step("invariant_field_killing_check", invariant_field_killing_check, pair)
    record_witness("invariant_fields_are_killing", killing.witness)

    fixed = _step("isotropy_fixed_subspace", isotropy_fixed_subspace, pair)
    probe = _step("isotropy_irreducibility_probe", isotropy_irreducibility_probe, pair)
    k = _step("invariant_field_algebra", invariant_field_algebra, pair)
    tr_check = _step("transvection_equals_g_check", transvection_equals_g_check, pair)
    torus = _step("fixed_torus", fixed_torus, pair)

    affine_details = None
    affine_dim = None
    aff = None
    if pair.flags.normal and pair.flags.effective:
        aff = _step("affine_algebra", affine_algebra, pair)
        affine_dim = aff.total_dim
        cross_ok = all(
            aff.assembled.bracket_basis(a, aff.g1.dim + b) == zero_vector(aff.total_dim)
            for a in range(aff.g1.dim)
            for b in range(aff.k.dim)
        )
        affine_details = {
            "dim_g1": aff.g1.dim,
            "dim_k": aff.k.dim,
            "dims_add": aff.total_dim == aff.g1.dim + aff.k.dim,
            "cross_brackets_vanish": cross_ok,
        }

    connection_details = None
    if checks == "all":
        tensors = _step("connection_tensors_at_basepoint", connection_tensors_at_basepoint, pair)
        rows = pair.m.rows
        n_m = len(rows)
        antisym = all(
            tensors.torsion_table[a][b] == vneg(tensors.torsion_table[b][a])
            for a in range(n_m)
            for b in range(n_m)
        )
        doubling = (not tensors.has_lc) or all(
            tensors.canonical_table[a][b] == smul(rat(2), tensors.lc_table[a][b])
            for a in range(n_m)
            for b in range(n_m)
        )
        bianchi = True
        for a in range(n_m):
            for b in range(a + 1, n_m):
                for c in range(n_m):
                    total = zero_vector(algebra.dim)
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        total = tuple(
                            p + q
                            for p, q in zip(total, tensors.curvature_table[x][y][z])
                        )
                        t_of_t = vneg(pair.bracket_m(tensors.torsion_table[x][y], rows[z]))
                        total = tuple(p - q for p, q in zip(total, t_of_t))
                    if total != zero_vector(algebra.dim):
                        bianchi = False
        connection_details = {
            "torsion_antisymmetric": antisym,
            "canonical_equals_twice_lc": doubling,
            "bianchi_cyclic_identity": bianchi,
        }

    iso = _step("isometry_report", isometry_report, pair, assertions, probe, aff)

    flags = {
        "reductive": pair.flags.reductive,
        "normal": pair.flags.normal,
        "naturally_reductive": pair.flags.naturally_reductive,
        "effective": pair.flags.effective,
        "normalizer_invariant": norm_inv.ok,
        "transvection_equals_g": tr_check.equals_g,
        "isotropy_probe": probe.verdict,
    }

    verdicts = []

    def verdict(name: str, applicable: bool, passed: bool | None, details=None):
        verdicts.append(
            {
                "name": name,
                "applicable": applicable,
                "passed": passed if applicable else None,
                "details": details,
            }
        )

    verdict("naturally_reductive_identity", pair.flags.normal, nr.ok)
    verdict("normalizer_invariance", pair.flags.normal, norm_inv.ok)
    verdict("invariant_fields_are_killing", pair.flags.normal, killing.ok)
    verdict(
        "transvection_equals_g",
        pair.flags.normal and pair.flags.effective,
        tr_check.equals_g,
    )
    verdict(
        "transvection_complement_in_h",
        pair.flags.normal and not tr_check.equals_g,
        tr_check.complement_in_h and tr_check.complement.dim > 0,
        None
        if tr_check.equals_g
        else {
            "complement_dim": tr_check.complement.dim,
            "complement_rows": [_fmt_vector(r) for r in tr_check.complement.rows],
        },
    )
    verdict(
        "affine_direct_sum",
        affine_details is not None,
        None
        if affine_details is None
        else affine_details["dims_add"] and affine_details["cross_brackets_vanish"],
        affine_details,
    )
    verdict(
        "torus_abelian",
        pair.flags.normal,
        True,  # fixed_torus verifies commutativity exactly or raises
        {"torus_dim": torus.dimension},
    )
    verdict(
        "connection_consistency",
        connection_details is not None,
        None if connection_details is None else all(connection_details.values()),
        connection_details,
    )

    numeric_section = None
    if numeric:
        numeric_section = _numeric_section(entry)

    body = {
        "engine": _header(),
        "input": input_desc,
        "checks": checks,
        "dims": {
            "g": algebra.dim,
            "h": pair.h.dim,
            "m": pair.m.dim,
            "m_fixed": fixed.dim,
            "k": k.dim,
            "k_center": k.center.dim,
            "transvection": tr_check.transvection.dim,
            "affine": affine_dim,
        },
        "flags": flags,
        "torus_dim": torus.dimension,
        "k_status": k.status,
        "theorem_verdicts": verdicts,
        "witnesses": witnesses,
        "isometry": {
            "certified": iso.certified,
            "group_dim": iso.group_dim,
            "semisimple": iso.semisimple,
            "caveats": list(iso.caveats),
        },
        "numeric": numeric_section,
    }
    return SpaceReport(body)


def _numeric_section(entry) -> dict:
    if entry is None:
        return {"status": "skipped: no matrix realization for file inputs"}
    import numpy as np

    from .numlab import TOLERANCE, flow_commutation_check, matrix_exp, orthogonality_residual

    rng = np.random.default_rng(13)
    worst_orth = 0.0
    for _ in range(25):
        n = int(rng.integers(3, 7))
        A = rng.normal(size=(n, n))
        worst_orth = max(worst_orth, orthogonality_residual(matrix_exp(A - A.T)))
    worst_flow = 0.0
    flows = 0
    for X in entry.fixed_subspace.rows:
        for Y in entry.pair.m.rows:
            worst_flow = max(worst_flow, flow_commutation_check(entry, X, Y, 1.0, 1.0))
            flows += 1
    return {
        "status": "ok",
        "tolerance": f"{TOLERANCE:.1e}",
        "matrix_exp_orthogonality_max": f"{worst_orth:.3e}",
        "flow_commutation_checks": flows,
        "flow_commutation_max": f"{worst_flow:.3e}",
        "all_below_tolerance": bool(worst_orth < TOLERANCE and worst_flow < TOLERANCE),
    }
