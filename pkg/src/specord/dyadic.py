"""Dyadic projection decomposition of effects.

An effect expands as a binary series e = sum 2^-j p_j of commuting
projections: at each step the projector onto the part of the residual
exceeding the next power of two is split off.  Residual eigenvalues exactly
at the threshold round down (bit 0), matching the resolution boundary
convention.  Production code walks the clustered eigenvalues directly; the
matrix-level single step is the public primitive and the two routes agree.
"""

from __future__ import annotations

import numpy as np

from .lattice import family_join
from .resolution import resolution_of
from .substrate import (
    DEFAULT_POLICY,
    Effect,
    Projection,
    SymMatrix,
    TolerancePolicy,
    cluster_spectrum,
    eig,
)

__all__ = ["dyadic_step", "dyadic_expand", "carrier_via_join"]

_MAX_STEPS = 52


def dyadic_step(
    b: SymMatrix, n: int, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """One extraction step: for 0 <= b <= 2^-n, the projection p with
    0 <= b - 2^-(n+1) p <= 2^-(n+1); p commutes with b."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    es = eig(b, policy)
    lo, hi = float(es.eigenvalues[0]), float(es.eigenvalues[-1])
    bound = 2.0 ** (-n)
    if lo < -policy.tol_psd or hi > bound + policy.tol_psd:
        raise ValueError(
            f"operand spectrum [{lo:.3e}, {hi:.3e}] leaves [0, 2^-{n}]"
        )
    lam = 2.0 ** (-(n + 1))
    res = resolution_of(b, policy)
    return res.at(lam).complement()


def _cluster_bits(e: SymMatrix, steps: int, policy: TolerancePolicy):
    """Clustered eigenvalues of e with their dyadic bit patterns."""
    es = eig(e, policy)
    scale = float(np.max(np.abs(es.eigenvalues)))
    cut = policy.eig_cut(scale)
    tie = policy.eig_cut(1.0)
    clusters = cluster_spectrum(es, cut)
    bits = []
    residuals = [value for value, _ in clusters]
    for j in range(1, steps + 1):
        lam = 2.0 ** (-j)
        row = []
        for i, r in enumerate(residuals):
            if r > lam + tie:
                row.append(True)
                residuals[i] = r - lam
            else:
                row.append(False)
        bits.append(row)
    return clusters, bits


def dyadic_expand(
    e: Effect, steps: int, policy: TolerancePolicy = DEFAULT_POLICY
) -> list[Projection]:
    """First `steps` projections of the dyadic series of e.

    Partial sums obey the sandwich 0 <= e - sum_{j<=n} 2^-j p_j <= 2^-n,
    so the series converges to e at rate 2^-steps.
    """
    if not 1 <= steps <= _MAX_STEPS:
        raise ValueError(f"steps must lie in 1..{_MAX_STEPS}")
    es = eig(e, policy)
    lo, hi = float(es.eigenvalues[0]), float(es.eigenvalues[-1])
    if lo < -policy.tol_psd or hi > 1.0 + policy.tol_psd:
        raise ValueError(f"operand spectrum [{lo:.3e}, {hi:.3e}] leaves [0, 1]")
    clusters, bits = _cluster_bits(e, steps, policy)
    n = e.dim
    out = []
    for row in bits:
        total = np.zeros((n, n))
        for picked, (_, proj) in zip(row, clusters):
            if picked:
                total = total + proj.mat
        out.append(Projection(total))
    return out


def carrier_via_join(
    e: Effect, steps: int, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """Join of the first `steps` dyadic projections; climbs to the carrier
    once 2^-steps drops below the smallest positive eigenvalue of e."""
    ps = dyadic_expand(e, steps, policy)
    return family_join(ps, dim=e.dim, policy=policy)
