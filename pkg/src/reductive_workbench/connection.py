"""Basepoint tensors of the canonical and Levi-Civita connections.

Sign conventions, fixed once and echoed in every report header:

    levi_civita(X, Y)  = -1/2 [X, Y]_m        (naturally reductive pairs only)
    canonical(X, Y)    = -[X, Y]_m
    torsion(X, Y)      = -[X, Y]_m
    curvature(X, Y)Z   = -[[X, Y]_h, Z]

The torsion follows from T(X,Y) = D_X Y - D_Y X - [X,Y] applied to the induced
Killing fields, whose Lie bracket at the basepoint is -[X,Y]_m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInM, NotNaturallyReductive, NotReductive
from .homspace import ReductivePair
from .linalg import Vector, smul, rat, vneg


Table2 = tuple[tuple[Vector, ...], ...]
Table3 = tuple[tuple[tuple[Vector, ...], ...], ...]

CONVENTIONS = {
    "levi_civita": "LC(X,Y) = -1/2 [X,Y]_m",
    "canonical": "C(X,Y) = -[X,Y]_m",
    "torsion": "T(X,Y) = -[X,Y]_m",
    "curvature": "R(X,Y)Z = -[[X,Y]_h, Z]",
}


@dataclass(frozen=True)
class ConnectionTensors:
    """Connection data at the basepoint, indexed over the echelon basis of m.

    All values are ambient coordinate vectors lying in m.
    """

    pair: ReductivePair
    canonical_table: Table2
    torsion_table: Table2
    curvature_table: Table3
    _lc: Table2 | None

    @property
    def lc_table(self) -> Table2:
        if self._lc is None:
            raise NotNaturallyReductive(
                "Levi-Civita basepoint table needs a naturally reductive pair"
            )
        return self._lc

    @property
    def has_lc(self) -> bool:
        return self._lc is not None


def connection_tensors_at_basepoint(pair: ReductivePair) -> ConnectionTensors:
    """Compute all basepoint tables exactly over the basis of m."""
    if not pair.flags.reductive:
        raise NotReductive("connection tensors need a reductive pair")
    L = pair.algebra
    rows = pair.m.rows
    minus_bracket_m = tuple(
        tuple(vneg(pair.bracket_m(x, y)) for y in rows) for x in rows
    )
    canonical = minus_bracket_m
    torsion = minus_bracket_m
    curvature = tuple(
        tuple(
            tuple(vneg(L.bracket(pair.project_h(L.bracket(x, y)), z)) for z in rows)
            for y in rows
        )
        for x in rows
    )
    lc = None
    if pair.flags.naturally_reductive:
        half = rat("1/2")
        lc = tuple(tuple(smul(half, v) for v in row) for row in canonical)
    return ConnectionTensors(pair, canonical, torsion, curvature, lc)


@dataclass(frozen=True)
class GeodesicDescriptor:
    """Symbolic description of the basepoint geodesic generated by X in m."""

    generator: Vector
    curve: str = "one-parameter-subgroup-orbit"
    transport: str = "differential-of-exp(tX)"


def geodesic_and_transport_descriptors(pair: ReductivePair, X: Vector) -> GeodesicDescriptor:
    if pair.project_m(X) != tuple(X):
        raise NotInM("generator has a component outside m")
    if all(c == 0 for c in X):
        return GeodesicDescriptor(tuple(X), curve="constant-at-basepoint", transport="identity")
    return GeodesicDescriptor(tuple(X))
