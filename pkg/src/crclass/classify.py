"""Six-class decision procedure over bracket ranks and Levi/Freeman data.

Class conditions are decided on generic rank (identical-vanishing tests
of minors), matching the relocalization convention: the verdict speaks
about a generic point. The base point's own ranks are reported next to
the generic ones, and sigma_flag marks a base point sitting inside the
exceptional locus where some rank drops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionError, InternalAssertion
from .frames import (
    FrameData,
    VectorField,
    change_frame,
    cramer_frame,
    decompose_in_frame,
    generic_rank,
    lie_bracket,
    rank_at_point,
    rho0,
)
from .gaussian import GR_I, GaussianRational
from .levi import KernelData, levi_entries, slant_k
from .linalg import RankCertificate, generic_rank_matrix, rank_at_point_matrix
from .manifold import ValidatedManifold
from .ratfunc import RationalExpr

VERDICT_TEXT = {
    "ClassI": "Class I",
    "ClassII": "Class II",
    "ClassIII1": "Class III_1",
    "ClassIII2": "Class III_2",
    "ClassIV1": "Class IV_1",
    "ClassIV2": "Class IV_2",
    "LeviFlat": "Levi-flat",
    "DegenerateProduct(M3xR)": "Degenerate product M3 x R",
    "DegenerateProduct(M3xR2)": "Degenerate product M3 x R^2",
    "DegenerateProduct(M4xR)": "Degenerate product M4 x R",
    "DegenerateProduct(M3xC)": "Degenerate product M3 x C",
}

CERTIFICATE_TEXT = {
    "LeviFlat": "locally a product C^n x R^c; all classifying brackets degenerate",
    "DegenerateProduct(M3xR)": (
        "splits off one flat real parameter; the classification reduces to a "
        "nondegenerate 3-dimensional hypersurface-type manifold"
    ),
    "DegenerateProduct(M3xR2)": (
        "splits off two flat real parameters; the classification reduces to a "
        "nondegenerate 3-dimensional hypersurface-type manifold"
    ),
    "DegenerateProduct(M4xR)": (
        "splits off one flat real parameter; the classification reduces to a "
        "4-dimensional manifold of type (1,2)"
    ),
    "DegenerateProduct(M3xC)": (
        "splits off a complex-line factor; the classification reduces to a "
        "nondegenerate 3-dimensional hypersurface-type manifold"
    ),
}


@dataclass(frozen=True, slots=True)
class ClassificationReport:
    verdict: str
    generic_ranks: dict[str, int]
    point_ranks: dict[str, int]
    witnesses: dict[str, RankCertificate]
    kernel: KernelData | None
    sigma_flag: bool
    observational_d: RationalExpr | None
    certificate: str


@dataclass(frozen=True, slots=True)
class HullResult:
    rank: int
    stabilized_at: int | None
    ranks_by_depth: tuple[int, ...]


def _apply_change(
    frame: FrameData,
    matrix: Sequence[Sequence[RationalExpr | GaussianRational]] | None,
) -> tuple[VectorField, ...]:
    if matrix is None:
        return frame.L
    return change_frame(frame.L, matrix)


def classify(
    vm: ValidatedManifold,
    frame_change: Sequence[Sequence[RationalExpr | GaussianRational]] | None = None,
) -> ClassificationReport:
    """Run the decision tree for the manifold's (n, c) type.

    frame_change optionally post-composes the Cramer frame with a fixed
    invertible matrix before all rank computations; the verdict is
    invariant under such changes.
    """
    frame = cramer_frame(vm)
    if vm.n == 1:
        return _classify_hypersurface_like(vm, frame, frame_change)
    return _classify_five_dim_c1(vm, frame, frame_change)


def _rank_data(
    name: str,
    fields: Sequence[VectorField],
    coords: tuple[GaussianRational, ...],
    generic_ranks: dict[str, int],
    point_ranks: dict[str, int],
    witnesses: dict[str, RankCertificate],
) -> int:
    cert = generic_rank(fields)
    generic_ranks[name] = cert.rank
    point_ranks[name] = rank_at_point(fields, coords)
    witnesses[name] = cert
    return cert.rank


def _observational_d(
    l: VectorField, lb: VectorField, t: VectorField, lt: VectorField,
    lbt: VectorField,
) -> RationalExpr:
    quad = [l, lb, t, lt]
    if generic_rank(quad).rank != 4:
        raise InternalAssertion(
            "quad frame {L, Lb, T, [L,T]} is not of rank 4 on a Class II / "
            "Class III_2 verdict"
        )
    coeffs = decompose_in_frame(lbt, quad)
    d = coeffs[3]
    if not (d * d.conj()).is_one():
        raise InternalAssertion("decomposition coefficient d has d*conj(d) != 1")
    return d


def _classify_hypersurface_like(
    vm: ValidatedManifold,
    frame: FrameData,
    frame_change,
) -> ClassificationReport:
    fields = _apply_change(frame, frame_change)
    l = fields[0]
    lb = l.conj()
    t = lie_bracket(l, lb).scale(GR_I)
    coords = vm.point_coords()
    generic_ranks: dict[str, int] = {}
    point_ranks: dict[str, int] = {}
    witnesses: dict[str, RankCertificate] = {}
    r = _rank_data("L,Lb,T", [l, lb, t], coords,
                   generic_ranks, point_ranks, witnesses)
    verdict: str
    obs_d: RationalExpr | None = None

    if vm.c == 1:
        verdict = "ClassI" if r == 3 else "LeviFlat"
    elif r == 2:
        verdict = "LeviFlat"
    else:
        lt = lie_bracket(l, t)
        lbt = lie_bracket(lb, t)
        _rank_data("L,Lb,T,[L,T]", [l, lb, t, lt], coords,
                   generic_ranks, point_ranks, witnesses)
        r4 = _rank_data("L,Lb,T,[L,T],[Lb,T]", [l, lb, t, lt, lbt], coords,
                        generic_ranks, point_ranks, witnesses)
        if vm.c == 2:
            if r4 == 4:
                verdict = "ClassII"
                obs_d = _observational_d(l, lb, t, lt, lbt)
            else:
                verdict = "DegenerateProduct(M3xR)"
        else:
            if r4 == 3:
                verdict = "DegenerateProduct(M3xR2)"
            elif r4 == 5:
                verdict = "ClassIII1"
            else:
                llt = lie_bracket(l, lt)
                r5 = _rank_data(
                    "L,Lb,T,[L,T],[Lb,T],[L,[L,T]]",
                    [l, lb, t, lt, lbt, llt], coords,
                    generic_ranks, point_ranks, witnesses)
                if r5 == 5:
                    verdict = "ClassIII2"
                    obs_d = _observational_d(l, lb, t, lt, lbt)
                else:
                    verdict = "DegenerateProduct(M4xR)"

    sigma = any(point_ranks[k] < generic_ranks[k] for k in generic_ranks)
    certificate = CERTIFICATE_TEXT.get(
        verdict, f"{VERDICT_TEXT[verdict]}: bracket ranks as recorded"
    )
    return ClassificationReport(
        verdict=verdict,
        generic_ranks=generic_ranks,
        point_ranks=point_ranks,
        witnesses=witnesses,
        kernel=None,
        sigma_flag=sigma,
        observational_d=obs_d,
        certificate=certificate,
    )


def _classify_five_dim_c1(
    vm: ValidatedManifold,
    frame: FrameData,
    frame_change,
) -> ClassificationReport:
    if vm.c != 1:
        raise DimensionError("n = 2 requires c = 1")
    fields = _apply_change(frame, frame_change)
    rho = rho0(frame)[0]
    rows = levi_entries(rho, fields)
    cert = generic_rank_matrix([list(r) for r in rows])
    coords = vm.point_coords()
    values = [[e.eval(coords) for e in r] for r in rows]
    point_rank = rank_at_point_matrix(values)
    generic_ranks = {"Levi": cert.rank}
    point_ranks = {"Levi": point_rank}
    witnesses = {"Levi": cert}
    kernel: KernelData | None = None
    if cert.rank == 2:
        verdict = "ClassIV1"
    elif cert.rank == 0:
        verdict = "LeviFlat"
    else:
        kernel = slant_k(vm, frame)
        verdict = (
            "DegenerateProduct(M3xC)" if kernel.freeman.is_zero() else "ClassIV2"
        )
    sigma = point_rank < cert.rank
    if verdict == "ClassIV2":
        assert kernel is not None
        at_point = kernel.freeman_at_point
        if at_point is None:
            note = "freeman value at the base point: pole"
        elif at_point.is_zero():
            note = "freeman vanishes at the base point"
        else:
            note = f"freeman at the base point = {at_point}"
        certificate = f"freeman invariant not identically zero; {note}"
    else:
        certificate = CERTIFICATE_TEXT.get(
            verdict, f"{VERDICT_TEXT[verdict]}: Levi rank as recorded"
        )
    return ClassificationReport(
        verdict=verdict,
        generic_ranks=generic_ranks,
        point_ranks=point_ranks,
        witnesses=witnesses,
        kernel=kernel,
        sigma_flag=sigma,
        observational_d=None,
        certificate=certificate,
    )


def lie_hull_rank(vm: ValidatedManifold, max_depth: int = 4) -> HullResult:
    """Generic rank of iterated brackets of the frame, depth by depth.

    Depth 1 is {L_i, conj(L_i)}; depth d+1 adds brackets of the depth-1
    generators against the newest layer, all depths up to max_depth.
    stabilized_at is the depth where the final constant plateau of the
    rank table starts, provided it starts before max_depth (a witness of
    stabilization, not a proof for arbitrary inputs); None otherwise.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    frame = cramer_frame(vm)
    gens = list(frame.L) + list(frame.Lbar)
    seen: set[VectorField] = set(gens)
    accumulated: list[VectorField] = list(gens)
    layer = list(gens)
    ranks = [generic_rank(accumulated).rank]
    for _depth in range(2, max_depth + 1):
        new_layer = []
        for g in gens:
            for y in layer:
                br = lie_bracket(g, y)
                if br.is_zero() or br in seen or (-br) in seen:
                    continue
                seen.add(br)
                new_layer.append(br)
        accumulated.extend(new_layer)
        layer = new_layer
        ranks.append(generic_rank(accumulated).rank)
    plateau = max_depth
    while plateau > 1 and ranks[plateau - 2] == ranks[-1]:
        plateau -= 1
    stabilized = plateau if plateau < max_depth else None
    return HullResult(
        rank=ranks[-1], stabilized_at=stabilized, ranks_by_depth=tuple(ranks)
    )
