"""CR frames, vector fields, one-forms, and Lie brackets.

Vector fields live on the ambient coordinates (z, zb, u) and are stored
as coefficient tuples against d/dz_1..d/dz_n, d/dzb_1..d/dzb_n,
d/du_1..d/du_c in that slot order. The tangential frame L_1..L_n is
produced by solving the c x c Cramer system

    sum_l (i*delta_{jl} + d(phi_j)/d(u_l)) * A_i^l = -d(phi_j)/d(z_i)

so that L_i = d/dz_i + sum_l A_i^l d/du_l annihilates the defining
equations to first order along M.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DependentFrameError, FrameSingularError, NotInSpanError
from .gaussian import GR_I, GR_ONE, GaussianRational
from .linalg import (
    RankCertificate,
    det_expr,
    generic_rank_matrix,
    rank_at_point_matrix,
)
from .manifold import ValidatedManifold
from .parser import expr_to_text
from .poly import VarSpace
from .ratfunc import RationalExpr


@dataclass(frozen=True, slots=True)
class VectorField:
    """First-order operator sum_d coeffs[d] * d/d(var_d)."""

    space: VarSpace
    coeffs: tuple[RationalExpr, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.space.nvars:
            raise ValueError("coefficient count must match the variable count")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def apply(self, f: RationalExpr) -> RationalExpr:
        out = RationalExpr.zero(self.space)
        for slot, coeff in enumerate(self.coeffs):
            if coeff.is_zero():
                continue
            out = out + coeff * f.diff(slot)
        return out

    def conj(self) -> "VectorField":
        conj_coeffs = [RationalExpr.zero(self.space)] * self.space.nvars
        out = list(conj_coeffs)
        for slot, coeff in enumerate(self.coeffs):
            out[self.space.conj_slot(slot)] = coeff.conj()
        return VectorField(self.space, tuple(out))

    def scale(self, factor: RationalExpr | GaussianRational) -> "VectorField":
        if isinstance(factor, GaussianRational):
            factor = RationalExpr.const(self.space, factor)
        return VectorField(self.space, tuple(factor * c for c in self.coeffs))

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(
            self.space, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(
            self.space, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "VectorField":
        return VectorField(self.space, tuple(-c for c in self.coeffs))

    def eval(self, coords: tuple[GaussianRational, ...]) -> tuple[GaussianRational, ...]:
        return tuple(c.eval(coords) for c in self.coeffs)

    def render(self) -> str:
        parts = []
        for slot, coeff in enumerate(self.coeffs):
            if coeff.is_zero():
                continue
            name = self.space.var_name(slot)
            if coeff.is_one():
                parts.append(f"d/d{name}")
            else:
                parts.append(f"({expr_to_text(coeff)}) d/d{name}")
        if not parts:
            return "0"
        return " + ".join(parts)


@dataclass(frozen=True, slots=True)
class OneForm:
    """Covector sum_d coeffs[d] * d(var_d); pairs with VectorField.apply."""

    space: VarSpace
    coeffs: tuple[RationalExpr, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.space.nvars:
            raise ValueError("coefficient count must match the variable count")

    def apply(self, field: VectorField) -> RationalExpr:
        out = RationalExpr.zero(self.space)
        for w, x in zip(self.coeffs, field.coeffs):
            if w.is_zero() or x.is_zero():
                continue
            out = out + w * x
        return out

    def render(self) -> str:
        parts = []
        for slot, coeff in enumerate(self.coeffs):
            if coeff.is_zero():
                continue
            name = self.space.var_name(slot)
            if coeff.is_one():
                parts.append(f"d{name}")
            else:
                parts.append(f"({expr_to_text(coeff)}) d{name}")
        if not parts:
            return "0"
        return " + ".join(parts)


def lie_bracket(x: VectorField, y: VectorField) -> VectorField:
    """[X, Y] = X(Y_d) - Y(X_d) against each coordinate direction d."""
    space = x.space
    out = []
    for d in range(space.nvars):
        out.append(x.apply(y.coeffs[d]) - y.apply(x.coeffs[d]))
    return VectorField(space, tuple(out))


def vf_conj(x: VectorField) -> VectorField:
    return x.conj()


@dataclass(frozen=True, slots=True)
class FrameData:
    """The tangential frame of a validated manifold."""

    manifold: ValidatedManifold
    A: tuple[tuple[RationalExpr, ...], ...]  # A[i][l], n rows, c columns
    L: tuple[VectorField, ...]
    Lbar: tuple[VectorField, ...]


def cramer_frame(vm: ValidatedManifold) -> FrameData:
    space = vm.space
    n, c = vm.n, vm.c
    i_const = RationalExpr.const(space, GR_I)
    system = []
    for j in range(c):
        row = [vm.phi[j].diff(space.u_slot(l)) for l in range(c)]
        row[j] = row[j] + i_const
        system.append(row)
    den = det_expr(system)
    if den.is_zero():
        raise FrameSingularError("det(i*I + Phi_u) vanishes identically")
    a_rows = []
    fields = []
    for i in range(n):
        rhs = [-vm.phi[j].diff(space.z_slot(i)) for j in range(c)]
        a_i = []
        for l in range(c):
            replaced = [
                [rhs[j] if col == l else system[j][col] for col in range(c)]
                for j in range(c)
            ]
            a_i.append(det_expr(replaced) / den)
        a_rows.append(tuple(a_i))
        coeffs = [RationalExpr.zero(space)] * space.nvars
        coeffs[space.z_slot(i)] = RationalExpr.one(space)
        for l in range(c):
            coeffs[space.u_slot(l)] = a_i[l]
        fields.append(VectorField(space, tuple(coeffs)))
    l_fields = tuple(fields)
    return FrameData(
        manifold=vm,
        A=tuple(a_rows),
        L=l_fields,
        Lbar=tuple(f.conj() for f in l_fields),
    )


def rho0(frame: FrameData) -> tuple[OneForm, ...]:
    """Characteristic coforms rho0_j = du_j - sum_i A_i^j dz_i - conj terms.

    Each rho0_j annihilates every L_i and Lbar_i and pairs with du_j as 1.
    """
    space = frame.manifold.space
    n, c = frame.manifold.n, frame.manifold.c
    forms = []
    for j in range(c):
        coeffs = [RationalExpr.zero(space)] * space.nvars
        coeffs[space.u_slot(j)] = RationalExpr.one(space)
        for i in range(n):
            coeffs[space.z_slot(i)] = -frame.A[i][j]
            coeffs[space.zb_slot(i)] = -frame.A[i][j].conj()
        forms.append(OneForm(space, tuple(coeffs)))
    return tuple(forms)


def one_form_apply(form: OneForm, field: VectorField) -> RationalExpr:
    return form.apply(field)


def characteristic_field(frame: FrameData) -> VectorField:
    """T = i[L_1, Lbar_1]; real whenever n = 1."""
    return lie_bracket(frame.L[0], frame.Lbar[0]).scale(GR_I)


def field_matrix(fields: Sequence[VectorField]) -> list[list[RationalExpr]]:
    """Coefficient matrix: rows are coordinate directions, columns fields."""
    space = fields[0].space
    return [
        [f.coeffs[d] for f in fields]
        for d in range(space.nvars)
    ]


def generic_rank(fields: Sequence[VectorField]) -> RankCertificate:
    if not fields:
        return RankCertificate(0, (), (), None)
    return generic_rank_matrix(field_matrix(fields))


def rank_at_point(
    fields: Sequence[VectorField], coords: tuple[GaussianRational, ...]
) -> int:
    values = [f.eval(coords) for f in fields]
    # eval gives one row per field; transpose to directions-by-fields
    return rank_at_point_matrix(list(zip(*values)))


def decompose_in_frame(
    target: VectorField, fields: Sequence[VectorField]
) -> tuple[RationalExpr, ...]:
    """Coefficients lambda with target = sum lambda_k fields[k], exactly.

    Picks the lexicographically first set of coordinate rows whose square
    subsystem is invertible, solves by Cramer, and verifies the residual
    vanishes in every remaining row.
    """
    space = target.space
    k = len(fields)
    if k == 0:
        if target.is_zero():
            return ()
        raise NotInSpanError("nonzero field cannot be decomposed in an empty frame")
    mat = field_matrix(fields)
    nrows = space.nvars
    if k > nrows:
        raise DependentFrameError("more frame fields than coordinate directions")
    for rows in combinations(range(nrows), k):
        sub = [[mat[r][j] for j in range(k)] for r in rows]
        den = det_expr(sub)
        if den.is_zero():
            continue
        lams = []
        for j in range(k):
            replaced = [
                [target.coeffs[rows[r_pos]] if col == j else sub[r_pos][col] for col in range(k)]
                for r_pos in range(k)
            ]
            lams.append(det_expr(replaced) / den)
        residual = target
        for lam, f in zip(lams, fields):
            residual = residual - f.scale(lam)
        if not residual.is_zero():
            raise NotInSpanError("target field is not in the span of the frame")
        return tuple(lams)
    raise DependentFrameError("frame fields are generically dependent")


def change_frame(
    fields: Sequence[VectorField],
    matrix: Sequence[Sequence[RationalExpr | GaussianRational]],
) -> tuple[VectorField, ...]:
    """New_i = sum_j matrix[i][j] * fields[j]; matrix must be invertible."""
    space = fields[0].space
    rows = []
    for row in matrix:
        conv = [
            RationalExpr.const(space, v) if isinstance(v, GaussianRational) else v
            for v in row
        ]
        rows.append(conv)
    if len(rows) != len(fields) or any(len(r) != len(fields) for r in rows):
        raise ValueError("frame-change matrix must be square of matching size")
    if det_expr(rows).is_zero():
        raise DependentFrameError("frame-change matrix is singular")
    out = []
    for row in rows:
        acc = None
        for coeff, f in zip(row, fields):
            term = f.scale(coeff)
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)
