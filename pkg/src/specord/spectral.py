"""Spectral order and the lattice operations it induces.

a is spectrally below b when every cumulative projection of b sits below the
matching projection of a.  Joins take pointwise meets of the cumulative
projections on the merged breakpoint grid; meets take pointwise joins of the
right-limit values, which in finite dimension live at the same grid points.

Grid bookkeeping is exact: the merged breakpoints are chain-clustered and
each operand's cumulative projection at a grid point is selected by counting
its breakpoints up to the midpoint boundaries between grid clusters, so tie
tolerances cannot leak a neighbouring jump into the wrong probe.
"""

from __future__ import annotations

import numpy as np

from .lattice import family_join, family_meet
from .resolution import StepResolution, merged_breakpoints, reconstruct, resolution_of
from .substrate import (
    DEFAULT_POLICY,
    Effect,
    Projection,
    SymMatrix,
    TolerancePolicy,
    frobenius,
)

__all__ = [
    "spectral_leq",
    "resolution_leq",
    "spectral_join",
    "spectral_meet",
    "family_sup",
    "family_inf",
]

# Projections from independent eigenruns either coincide (drift ~1e-14) or
# differ in rank (Frobenius gap >= 1); anything past this is real drift.
_CANONICAL_TOL = 1e-6


def _grid_cumulatives(
    resolutions: list[StepResolution],
) -> tuple[np.ndarray, np.ndarray, float, list[list[np.ndarray]]]:
    """Merged cluster edges plus each operand's cumulative projection per
    cluster.  A cluster's value for an operand is its cumulative projection
    through the cluster's right edge; midpoints between adjacent cluster
    edges assign every member breakpoint to the right cluster exactly."""
    dim = resolutions[0].dim
    for r in resolutions:
        if r.dim != dim:
            raise ValueError(f"dimension mismatch: {r.dim} vs {dim}")
    lows, highs, tie = merged_breakpoints(resolutions)
    bounds = (highs[:-1] + lows[1:]) / 2.0
    zero = np.zeros((dim, dim))
    cums: list[list[np.ndarray]] = []
    for r in resolutions:
        counts = np.searchsorted(np.asarray(r.breakpoints), bounds, side="right")
        per_grid = []
        for c in list(counts) + [len(r.breakpoints)]:
            per_grid.append(zero if c == 0 else r.projections[int(c) - 1].mat)
        cums.append(per_grid)
    return lows, highs, tie, cums


def resolution_leq(
    ra: StepResolution, rb: StepResolution, policy: TolerancePolicy = DEFAULT_POLICY
) -> bool:
    """Spectral comparison straight off two resolutions."""
    lows, _, _, cums = _grid_cumulatives([ra, rb])
    for i in range(lows.size):
        pa, pb = cums[0][i], cums[1][i]
        if frobenius(pb - pb @ pa) > policy.tol_proj:
            return False
    return True


def spectral_leq(
    a: SymMatrix, b: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> bool:
    """True when b's resolution is below a's at every merged breakpoint."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return resolution_leq(resolution_of(a, policy), resolution_of(b, policy), policy)


def _compress(
    grid: np.ndarray, projs: list[np.ndarray], tie: float, dim: int
) -> StepResolution:
    """Drop grid points where nothing jumps and freeze the step function."""
    bps = []
    kept: list[Projection] = []
    prev_rank = 0.0
    for lam, p in zip(grid, projs):
        rank = float(np.trace(p))
        if rank - prev_rank >= 0.5:
            bps.append(float(lam))
            kept.append(Projection(p))
            prev_rank = rank
    return StepResolution(tuple(bps), tuple(kept), tie_tol=tie)


def _assert_canonical(
    built: StepResolution, result: SymMatrix, policy: TolerancePolicy
):
    """Re-derive the resolution from the reconstructed matrix and demand it
    matches the built one; guards against drift in the lattice pipeline."""
    fresh = resolution_of(result, policy)
    probes = sorted(set(built.breakpoints) | set(fresh.breakpoints))
    for lam in probes:
        gap = frobenius(built.at(lam).mat - fresh.at(lam).mat)
        if gap > _CANONICAL_TOL:
            raise RuntimeError(
                f"lattice canonicalization drift {gap:.3e} at lambda={lam!r}"
            )


def _family_sup_matrix(
    mats: list[SymMatrix], policy: TolerancePolicy
) -> SymMatrix:
    # A jump of the sup lands on its cluster's right edge: pushing it right
    # keeps the sup's cumulatives below every member's at member breakpoints.
    resolutions = [resolution_of(a, policy) for a in mats]
    _, highs, tie, cums = _grid_cumulatives(resolutions)
    dim = resolutions[0].dim
    projs = []
    for i in range(highs.size):
        if i == highs.size - 1:
            projs.append(np.eye(dim))
        else:
            projs.append(
                family_meet([Projection(c[i]) for c in cums], policy=policy).mat
            )
    built = _compress(highs, projs, tie, dim)
    result = reconstruct(built)
    _assert_canonical(built, result, policy)
    return result


def _family_inf_matrix(
    mats: list[SymMatrix], policy: TolerancePolicy
) -> SymMatrix:
    # Mirror image: a jump of the inf lands on its cluster's left edge so
    # its cumulatives dominate every member's at member breakpoints.
    resolutions = [resolution_of(a, policy) for a in mats]
    lows, _, tie, cums = _grid_cumulatives(resolutions)
    dim = resolutions[0].dim
    projs = []
    for i in range(lows.size):
        if i == lows.size - 1:
            projs.append(np.eye(dim))
        else:
            projs.append(
                family_join([Projection(c[i]) for c in cums], policy=policy).mat
            )
    built = _compress(lows, projs, tie, dim)
    result = reconstruct(built)
    _assert_canonical(built, result, policy)
    return result


def spectral_join(
    a: SymMatrix, b: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> SymMatrix:
    """Least upper bound in the spectral order."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return _family_sup_matrix([a, b], policy)


def spectral_meet(
    a: SymMatrix, b: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> SymMatrix:
    """Greatest lower bound in the spectral order."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return _family_inf_matrix([a, b], policy)


def family_sup(
    effects: list[Effect], policy: TolerancePolicy = DEFAULT_POLICY
) -> Effect:
    """Supremum of a finite family of effects; agrees with spectral_join
    bit-for-bit on two-element families."""
    if not effects:
        raise ValueError("family must be nonempty")
    return Effect(_family_sup_matrix(list(effects), policy).mat)


def family_inf(
    effects: list[Effect], policy: TolerancePolicy = DEFAULT_POLICY
) -> Effect:
    """Infimum of a finite family of effects."""
    if not effects:
        raise ValueError("family must be nonempty")
    return Effect(_family_inf_matrix(list(effects), policy).mat)
