"""Spectral resolutions as finite right-continuous step functions.

A resolution is stored as ascending breakpoints with the cumulative spectral
projection at each one; between breakpoints the function is constant, below
the first it is 0 and from the last on it is the identity.  Evaluation
treats eigenvalues within tie_tol of the probe as lying on the <= side,
so boundary behaviour matches the convention that an eigenvalue exactly at
the probe belongs to the projection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .substrate import (
    DEFAULT_POLICY,
    Projection,
    SymMatrix,
    TolerancePolicy,
    cluster_spectrum,
    eig,
    frobenius,
)

__all__ = [
    "StepResolution",
    "resolution_of",
    "eigenprojection",
    "reconstruct",
    "affine",
    "negate",
    "step_approximant",
    "merged_breakpoints",
]


@dataclass(frozen=True)
class StepResolution:
    """Right-continuous family of nested projections with finitely many jumps."""

    breakpoints: tuple[float, ...]
    projections: tuple[Projection, ...]
    tie_tol: float = 0.0

    def __post_init__(self):
        if len(self.breakpoints) != len(self.projections):
            raise ValueError("breakpoints and projections must align")
        if not self.breakpoints:
            raise ValueError("a resolution needs at least one breakpoint")
        bps = tuple(float(b) for b in self.breakpoints)
        for i in range(1, len(bps)):
            if bps[i] <= bps[i - 1]:
                raise ValueError("breakpoints must be strictly ascending")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "projections", tuple(self.projections))
        n = self.projections[0].dim
        last = self.projections[-1]
        if frobenius(last.mat - np.eye(n)) > DEFAULT_POLICY.tol_proj * n:
            raise ValueError("final projection must be the identity")
        for i in range(1, len(self.projections)):
            p, q = self.projections[i - 1], self.projections[i]
            if frobenius(p.mat - p.mat @ q.mat) > DEFAULT_POLICY.tol_proj * n:
                raise ValueError("projections must be nested (monotone in lambda)")

    @property
    def dim(self) -> int:
        return self.projections[0].dim

    @property
    def lower(self) -> float:
        """Smallest breakpoint; the resolution is 0 strictly below it."""
        return self.breakpoints[0]

    @property
    def upper(self) -> float:
        """Largest breakpoint; the resolution is the identity from it on."""
        return self.breakpoints[-1]

    def at(self, lam: float) -> Projection:
        """Cumulative projection at lam, ties within tie_tol included."""
        idx = -1
        for i, b in enumerate(self.breakpoints):
            if b <= lam + self.tie_tol:
                idx = i
            else:
                break
        if idx < 0:
            return Projection(np.zeros((self.dim, self.dim)))
        return self.projections[idx]

    def jumps(self) -> list[tuple[float, Projection]]:
        """Breakpoints with the projection gained at each one."""
        out = []
        prev = np.zeros((self.dim, self.dim))
        for b, p in zip(self.breakpoints, self.projections):
            out.append((b, Projection(p.mat - prev)))
            prev = p.mat
        return out


def _resolution_cache(a: SymMatrix) -> dict:
    cache = getattr(a, "_res_cache", None)
    if cache is None:
        cache = {}
        object.__setattr__(a, "_res_cache", cache)
    return cache


def resolution_of(
    a: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> StepResolution:
    """Spectral resolution of a: at each probe, the projector onto the span
    of eigenvectors whose (clustered) eigenvalue does not exceed it.

    Equals the complement of the carrier of the positive part of a - lam at
    every probe lam; the final cumulative projection is the exact identity.
    """
    es = eig(a, policy)
    scale = float(np.max(np.abs(es.eigenvalues)))
    cut = policy.eig_cut(scale)
    cache = _resolution_cache(a)
    hit = cache.get(cut)
    if hit is not None:
        return hit
    clusters = cluster_spectrum(es, cut)
    bps = []
    projs = []
    running = np.zeros((a.dim, a.dim))
    for i, (value, p) in enumerate(clusters):
        running = running + p.mat
        bps.append(value)
        if i == len(clusters) - 1:
            projs.append(Projection(np.eye(a.dim)))
        else:
            projs.append(Projection(running))
    res = StepResolution(tuple(bps), tuple(projs), tie_tol=cut)
    cache[cut] = res
    return res


def eigenprojection(
    a: SymMatrix, lam: float, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """Projection onto the eigenspace at lam; zero when lam misses the
    spectrum by more than the cut.  Equals the jump of the resolution."""
    es = eig(a, policy)
    scale = float(np.max(np.abs(es.eigenvalues)))
    cut = policy.eig_cut(scale)
    for value, p in cluster_spectrum(es, cut):
        if abs(value - lam) <= cut:
            return p
    return Projection(np.zeros((a.dim, a.dim)))


def reconstruct(res: StepResolution) -> SymMatrix:
    """Sum of breakpoint * jump recovers the original matrix."""
    total = np.zeros((res.dim, res.dim))
    for value, jump in res.jumps():
        total = total + value * jump.mat
    return SymMatrix(total)


def affine(res: StepResolution, alpha: float, beta: float) -> StepResolution:
    """Resolution of alpha * a + beta from the resolution of a; alpha > 0."""
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    bps = tuple(alpha * b + beta for b in res.breakpoints)
    return StepResolution(bps, res.projections, tie_tol=alpha * res.tie_tol)


def negate(res: StepResolution) -> StepResolution:
    """Resolution of -a from the resolution of a.

    The jump at lam moves to -lam and cumulative sums rebuild in reversed
    order; the identity tail is preserved exactly.
    """
    jumps = res.jumps()
    n = res.dim
    bps = []
    projs = []
    running = np.zeros((n, n))
    for i, (value, jump) in enumerate(reversed(jumps)):
        running = running + jump.mat
        bps.append(-value)
        if i == len(jumps) - 1:
            projs.append(Projection(np.eye(n)))
        else:
            projs.append(Projection(running))
    return StepResolution(tuple(bps), tuple(projs), tie_tol=res.tie_tol)


def step_approximant(
    e: SymMatrix, n: int, policy: TolerancePolicy = DEFAULT_POLICY
) -> SymMatrix:
    """n-th staircase approximant 1 - (1/n) * sum of the resolution at k/n
    for k = 0..n-1; within 1/n of e in operator norm for effects."""
    if n < 1:
        raise ValueError("n must be at least 1")
    res = resolution_of(e, policy)
    total = np.zeros((e.dim, e.dim))
    for k in range(n):
        total = total + res.at(k / n).mat
    return SymMatrix(np.eye(e.dim) - total / n)


def merged_breakpoints(
    resolutions: list[StepResolution], tie_tol: float | None = None
) -> tuple[np.ndarray, np.ndarray, float]:
    """Union of breakpoints, chain-clustered so near-coincident values from
    different operands collapse into one cluster.  Returns the cluster edge
    arrays (lows, highs) and the tie tolerance; exact midpoints between
    adjacent cluster edges separate every member breakpoint correctly even
    when a cluster is wider than the inter-cluster gap."""
    if not resolutions:
        raise ValueError("need at least one resolution")
    tie = max(r.tie_tol for r in resolutions) if tie_tol is None else tie_tol
    merged = np.sort(np.concatenate([np.asarray(r.breakpoints) for r in resolutions]))
    lows, highs = [], []
    start = 0
    for i in range(1, merged.size + 1):
        if i == merged.size or merged[i] - merged[i - 1] > tie:
            lows.append(float(merged[start]))
            highs.append(float(merged[i - 1]))
            start = i
    return np.asarray(lows), np.asarray(highs), tie
