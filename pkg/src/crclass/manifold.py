"""Manifold descriptions and their validation.

A manifold of type (n, c) is given by c real-valued graphing functions
phi_j in the variables z_1..z_n, zb_1..zb_n, u_1..u_c, together with a
base point. Supported types keep the real dimension 2n + c at most 5:
(1, 1), (1, 2), (1, 3), (2, 1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import (
    BasePointError,
    DimensionError,
    FrameSingularError,
    RealityError,
    ValidationError,
)
from .gaussian import GR_I, GR_ONE, GaussianRational, gr
from .parser import expr_to_text, parse_constant, parse_expr
from .poly import VarSpace
from .ratfunc import PoleError, RationalExpr

ALLOWED_TYPES = ((1, 1), (1, 2), (1, 3), (2, 1))


@dataclass(frozen=True, slots=True)
class PointAssignment:
    """A point on the ambient space: complex z-values and real u-values."""

    z: tuple[GaussianRational, ...]
    u: tuple[Fraction, ...]

    def coords(self, space: VarSpace) -> tuple[GaussianRational, ...]:
        if len(self.z) != space.n or len(self.u) != space.c:
            raise DimensionError(
                f"point has {len(self.z)} z-values and {len(self.u)} u-values, "
                f"expected {space.n} and {space.c}"
            )
        zbar = tuple(v.conj() for v in self.z)
        uu = tuple(gr(v) for v in self.u)
        return self.z + zbar + uu

    @staticmethod
    def origin(n: int, c: int) -> "PointAssignment":
        return PointAssignment(
            z=tuple(gr(0) for _ in range(n)),
            u=tuple(Fraction(0) for _ in range(c)),
        )


@dataclass(frozen=True, slots=True)
class ManifoldSpec:
    """Unvalidated manifold data exactly as the user supplied it."""

    n: int
    c: int
    phi: tuple[RationalExpr, ...]
    point: PointAssignment


@dataclass(frozen=True, slots=True)
class ValidatedManifold:
    """A ManifoldSpec that passed validate_manifold, plus any warnings."""

    n: int
    c: int
    phi: tuple[RationalExpr, ...]
    point: PointAssignment
    warnings: tuple[str, ...]

    @property
    def space(self) -> VarSpace:
        return VarSpace(self.n, self.c)

    def point_coords(self) -> tuple[GaussianRational, ...]:
        return self.point.coords(self.space)

    def input_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "c": self.c,
            "phi": [expr_to_text(p) for p in self.phi],
            "point": {
                "z": [str(v) for v in self.point.z],
                "u": [str(gr(v)) for v in self.point.u],
            },
        }


def _parse_point(data: Any, n: int, c: int) -> PointAssignment:
    if not isinstance(data, dict):
        raise BasePointError("point must be an object with 'z' and 'u' arrays")
    zs = data.get("z", [])
    us = data.get("u", [])
    if not isinstance(zs, list) or not isinstance(us, list):
        raise BasePointError("point 'z' and 'u' must be arrays of strings")
    if len(zs) != n or len(us) != c:
        raise DimensionError(
            f"point needs {n} z-values and {c} u-values, got {len(zs)} and {len(us)}"
        )
    zvals = []
    for i, text in enumerate(zs):
        if not isinstance(text, str):
            raise BasePointError(f"point z[{i}] must be a string")
        zvals.append(parse_constant(text))
    uvals = []
    for j, text in enumerate(us):
        if not isinstance(text, str):
            raise BasePointError(f"point u[{j}] must be a string")
        value = parse_constant(text)
        if value.im != 0:
            raise BasePointError(f"point u[{j}] must be real, got {value}")
        uvals.append(value.re)
    return PointAssignment(z=tuple(zvals), u=tuple(uvals))


def manifold_from_dict(data: Any) -> ManifoldSpec:
    """Build a ManifoldSpec from parsed JSON; raises ValidationError subclasses."""
    if not isinstance(data, dict):
        raise ValidationError("manifold description must be a JSON object")
    n = data.get("n")
    c = data.get("c")
    if not isinstance(n, int) or not isinstance(c, int):
        raise DimensionError("'n' and 'c' must be integers")
    if (n, c) not in ALLOWED_TYPES:
        raise DimensionError(
            f"type ({n}, {c}) unsupported; allowed: "
            + ", ".join(f"({a}, {b})" for a, b in ALLOWED_TYPES)
        )
    phi_texts = data.get("phi")
    if not isinstance(phi_texts, list) or not all(isinstance(t, str) for t in phi_texts):
        raise ValidationError("'phi' must be an array of expression strings")
    if len(phi_texts) != c:
        raise DimensionError(f"need {c} graphing functions, got {len(phi_texts)}")
    phi = tuple(parse_expr(t, n, c) for t in phi_texts)
    if "point" in data and data["point"] is not None:
        point = _parse_point(data["point"], n, c)
    else:
        point = PointAssignment.origin(n, c)
    return ManifoldSpec(n=n, c=c, phi=phi, point=point)


def load_manifold(path: str) -> ManifoldSpec:
    with open(path, "r", encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON in {path}: {exc}") from exc
    return manifold_from_dict(data)


def _phi_u_matrix(spec: ManifoldSpec) -> list[list[RationalExpr]]:
    space = VarSpace(spec.n, spec.c)
    rows = []
    for j in range(spec.c):
        rows.append([spec.phi[j].diff(space.u_slot(l)) for l in range(spec.c)])
    return rows


def cramer_denominator(spec: ManifoldSpec | ValidatedManifold) -> RationalExpr:
    """det(i*I_c + Phi_u), the shared denominator of the frame coefficients."""
    from .linalg import det_expr

    space = VarSpace(spec.n, spec.c)
    rows = _phi_u_matrix(spec)  # type: ignore[arg-type]
    i_const = RationalExpr.const(space, GR_I)
    for j in range(spec.c):
        rows[j][j] = rows[j][j] + i_const
    return det_expr(rows)


def validate_manifold(spec: ManifoldSpec) -> ValidatedManifold:
    """Check reality, dimensions, and base-point regularity.

    Raises a ValidationError subclass on failure. Non-fatal conventions
    (phi nonzero at the base point, d_phi nonzero at the base point) are
    collected as warnings.
    """
    if (spec.n, spec.c) not in ALLOWED_TYPES:
        raise DimensionError(f"type ({spec.n}, {spec.c}) unsupported")
    if len(spec.phi) != spec.c:
        raise DimensionError(
            f"need {spec.c} graphing functions, got {len(spec.phi)}"
        )
    space = VarSpace(spec.n, spec.c)
    for j, p in enumerate(spec.phi):
        if p.space != space:
            raise DimensionError(f"phi_{j + 1} was parsed for a different type")
        if not (p.conj() - p).is_zero():
            raise RealityError(f"phi_{j + 1} is not real-valued (conj differs)")

    coords = spec.point.coords(space)
    for j, p in enumerate(spec.phi):
        try:
            p.eval(coords)
        except PoleError as exc:
            raise BasePointError(
                f"phi_{j + 1} has a pole at the base point"
            ) from exc

    den = cramer_denominator(spec)
    try:
        den_at_point = den.eval(coords)
    except PoleError as exc:
        raise BasePointError(
            "frame denominator has a pole at the base point"
        ) from exc
    if den_at_point.is_zero():
        raise FrameSingularError(
            "det(i*I + Phi_u) vanishes at the base point; frame is singular there"
        )

    warnings = []
    for j, p in enumerate(spec.phi):
        if not p.eval(coords).is_zero():
            warnings.append(f"phi_{j + 1} is nonzero at the base point")
    for j, p in enumerate(spec.phi):
        grad_nonzero = False
        for slot in range(space.nvars):
            try:
                if not p.diff(slot).eval(coords).is_zero():
                    grad_nonzero = True
                    break
            except PoleError:
                grad_nonzero = True
                break
        if grad_nonzero:
            warnings.append(f"phi_{j + 1} has nonzero gradient at the base point")

    return ValidatedManifold(
        n=spec.n, c=spec.c, phi=spec.phi, point=spec.point,
        warnings=tuple(warnings),
    )
