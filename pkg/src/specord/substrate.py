"""Symmetric-matrix substrate: domain types, a deterministic eigensolver,
spectral clustering and subspace projections.

Everything downstream (resolutions, lattices, orders) is built on the
primitives in this module.  The eigensolver is a cyclic Jacobi sweep rather
than a LAPACK call so that results are bit-identical across runs and
platforms for identical input bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "SymMatrix",
    "Effect",
    "Projection",
    "EigenSystem",
    "ConvergenceError",
    "eig",
    "cluster_spectrum",
    "projection_onto_span",
    "nullspace_projection",
    "operator_norm",
    "is_psd",
    "frobenius",
    "identity",
    "zeros",
    "from_diag",
]

# Convergence is declared when the off-diagonal Frobenius mass drops below
# this fraction of the input's Frobenius norm.
_JACOBI_REL_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 100


@dataclass(frozen=True)
class TolerancePolicy:
    """Numerical tolerances threaded through every comparison.

    tol_eig scales with the operand (tol_eig * max(1, ||a||)) wherever
    eigenvalues are grouped; tol_psd, tol_proj and tol_recon are absolute.
    """

    tol_eig: float = 1e-9
    tol_psd: float = 1e-9
    tol_proj: float = 1e-8
    tol_recon: float = 1e-8

    def eig_cut(self, scale: float) -> float:
        """Effective eigenvalue-grouping tolerance for an operand of norm scale."""
        return self.tol_eig * max(1.0, scale)


DEFAULT_POLICY = TolerancePolicy()


class ConvergenceError(RuntimeError):
    """Eigensolver failed to reach the off-diagonal threshold."""

    def __init__(self, residual: float, sweeps: int):
        self.residual = residual
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi sweep did not converge: off-diagonal residual "
            f"{residual:.3e} after {sweeps} sweeps"
        )


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Real symmetric matrix, symmetrized and frozen on construction.

    Scalar addition and subtraction follow the operator-algebra convention:
    ``a + t`` means ``a + t * identity``, not entrywise shift.
    """

    mat: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.mat, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        m = (m + m.T) / 2.0
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)
        self._validate()

    def _validate(self):
        pass

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __add__(self, other):
        if isinstance(other, SymMatrix):
            _check_dims(self, other)
            return SymMatrix(self.mat + other.mat)
        if isinstance(other, (int, float)):
            return SymMatrix(self.mat + float(other) * np.eye(self.dim))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, SymMatrix):
            _check_dims(self, other)
            return SymMatrix(self.mat - other.mat)
        if isinstance(other, (int, float)):
            return SymMatrix(self.mat - float(other) * np.eye(self.dim))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return SymMatrix(float(other) * np.eye(self.dim) - self.mat)
        return NotImplemented

    def __neg__(self):
        return SymMatrix(-self.mat)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, float)):
            return SymMatrix(self.mat * float(scalar))
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        kind = type(self).__name__
        rows = np.array2string(self.mat, precision=6, suppress_small=True)
        return f"{kind}(dim={self.dim},\n{rows})"


@dataclass(frozen=True, eq=False)
class Effect(SymMatrix):
    """Symmetric matrix with spectrum in [0, 1] within tol_psd."""

    def _validate(self):
        es = eig(self)
        lo = float(es.eigenvalues[0])
        hi = float(es.eigenvalues[-1])
        tol = DEFAULT_POLICY.tol_psd
        if lo < -tol or hi > 1.0 + tol:
            raise ValueError(
                f"not an effect: spectrum [{lo:.3e}, {hi:.3e}] leaves [0, 1]"
            )


@dataclass(frozen=True, eq=False)
class Projection(Effect):
    """Idempotent effect.  Validation checks ||p^2 - p|| only; idempotency
    within tolerance already pins the spectrum near {0, 1}."""

    def _validate(self):
        drift = float(np.linalg.norm(self.mat @ self.mat - self.mat))
        if drift > DEFAULT_POLICY.tol_proj:
            raise ValueError(f"not idempotent: ||p^2 - p|| = {drift:.3e}")

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.mat))))

    def complement(self) -> "Projection":
        return Projection(np.eye(self.dim) - self.mat)


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _check_dims(a: SymMatrix, b: SymMatrix):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def identity(dim: int) -> Projection:
    return Projection(np.eye(dim))


def zeros(dim: int) -> Projection:
    return Projection(np.zeros((dim, dim)))


def from_diag(values) -> SymMatrix:
    return SymMatrix(np.diag(np.asarray(values, dtype=float)))


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m, ord="fro"))


def _offdiag_norm(m: np.ndarray) -> float:
    """Frobenius mass strictly off the diagonal, summed directly (no
    cancellation against the full norm)."""
    tmp = m.copy()
    np.fill_diagonal(tmp, 0.0)
    return frobenius(tmp)


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization.  Returns (diagonal matrix, rotations).

    Rows are swept in fixed (p, q) order every pass, so the result is a
    deterministic function of the input bytes.
    """
    n = a.shape[0]
    m = a.copy()
    q = np.eye(n)
    if n == 1:
        return m, q
    total = frobenius(m)
    threshold = _JACOBI_REL_TOL * total
    for sweep in range(_JACOBI_MAX_SWEEPS):
        off = _offdiag_norm(m)
        if off <= threshold:
            return m, q
        for p in range(n - 1):
            for r in range(p + 1, n):
                apq = m[p, r]
                if apq == 0.0:
                    continue
                theta = (m[r, r] - m[p, p]) / (2.0 * apq)
                if abs(theta) > 1e154:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (
                        abs(theta) + math.sqrt(theta * theta + 1.0)
                    )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = m[:, p].copy()
                col_r = m[:, r].copy()
                m[:, p] = c * col_p - s * col_r
                m[:, r] = s * col_p + c * col_r
                row_p = m[p, :].copy()
                row_r = m[r, :].copy()
                m[p, :] = c * row_p - s * row_r
                m[r, :] = s * row_p + c * row_r
                m[p, r] = 0.0
                m[r, p] = 0.0
                qp = q[:, p].copy()
                qr = q[:, r].copy()
                q[:, p] = c * qp - s * qr
                q[:, r] = s * qp + c * qr
    off = _offdiag_norm(m)
    if off <= threshold:
        return m, q
    raise ConvergenceError(off, _JACOBI_MAX_SWEEPS)


def eig(a: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> EigenSystem:
    """Full eigendecomposition, ascending, with canonical eigenvector signs.

    The decomposition is cached on the (immutable) operand, so repeated
    spectral queries against the same object cost one factorization.
    Reconstruction and orthogonality are validated against tol_recon
    (the policy carries no separate orthogonality knob).
    """
    cached = getattr(a, "_eig_cache", None)
    if cached is not None:
        return cached
    d, q = _jacobi(a.mat)
    vals = np.diag(d).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = q[:, order].copy()
    for j in range(vecs.shape[1]):
        k = int(np.argmax(np.abs(vecs[:, j])))
        if vecs[k, j] < 0.0:
            vecs[:, j] = -vecs[:, j]
    vals.flags.writeable = False
    vecs.flags.writeable = False
    es = EigenSystem(eigenvalues=vals, eigenvectors=vecs)
    scale = 1.0 + float(np.max(np.abs(vals))) if vals.size else 1.0
    recon = frobenius(vecs @ np.diag(vals) @ vecs.T - a.mat)
    orth = frobenius(vecs.T @ vecs - np.eye(a.dim))
    if recon > policy.tol_recon * scale or orth > policy.tol_recon:
        raise ConvergenceError(max(recon, orth), _JACOBI_MAX_SWEEPS)
    object.__setattr__(a, "_eig_cache", es)
    return es


def cluster_spectrum(
    es: EigenSystem, tol_eig: float
) -> list[tuple[float, Projection]]:
    """Group near-equal eigenvalues and build one projector per cluster.

    Consecutive eigenvalues within tol_eig chain into one cluster whose
    representative value is the cluster mean.  tol_eig = 0 groups exact
    repeats only.  The projectors sum to the identity.
    """
    vals = es.eigenvalues
    vecs = es.eigenvectors
    if vals.size == 0:
        return []
    clusters: list[tuple[float, Projection]] = []
    start = 0
    for i in range(1, vals.size + 1):
        if i == vals.size or vals[i] - vals[i - 1] > tol_eig:
            block = vecs[:, start:i]
            value = float(np.mean(vals[start:i]))
            clusters.append((value, Projection(block @ block.T)))
            start = i
    return clusters


def projection_onto_span(
    vectors, dim: int | None = None, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """Orthogonal projection onto the span of the given vectors.

    Spanning is decided by Gram-Schmidt residual amplitude, not by gram
    eigenvalues: a gram matrix squares amplitudes, so a direction present at
    1e-6 would drown in eigensolver noise.  A vector joins the basis when,
    after two orthogonalization passes against the accepted basis, its
    absolute residual clears eig_cut (vectors longer than 1 are scaled down
    first; shorter ones are taken raw, so sub-cut content stays invisible
    rather than being amplified).  Deterministic in the input order.
    """
    vecs = [np.asarray(v, dtype=float).reshape(-1) for v in vectors]
    if dim is None:
        if not vecs:
            raise ValueError("dim is required for an empty vector list")
        dim = vecs[0].size
    cut = policy.eig_cut(1.0)
    basis: list[np.ndarray] = []
    for v in vecs:
        if v.size != dim:
            raise ValueError(f"dimension mismatch: {v.size} vs {dim}")
        norm = float(np.linalg.norm(v))
        if norm > 1.0:
            v = v / norm
        u = v.astype(float, copy=True)
        for _ in range(2):
            for b in basis:
                u = u - float(b @ u) * b
        residual = float(np.linalg.norm(u))
        if residual > cut:
            basis.append(u / residual)
        if len(basis) == dim:
            break
    if not basis:
        return Projection(np.zeros((dim, dim)))
    if len(basis) == dim:
        return Projection(np.eye(dim))
    block = np.column_stack(basis)
    return Projection(block @ block.T)


def carrier_projection(
    a: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """Projection onto the span of eigenvectors with |eigenvalue| above the cut."""
    es = eig(a, policy)
    scale = float(np.max(np.abs(es.eigenvalues))) if a.dim else 0.0
    cut = policy.eig_cut(scale)
    keep = np.abs(es.eigenvalues) > cut
    return _eigenspace_projection(es, keep, a.dim)


def _eigenspace_projection(es: EigenSystem, keep: np.ndarray, dim: int) -> Projection:
    # full and empty selections snap to the exact identity / zero matrix
    if bool(np.all(keep)):
        return Projection(np.eye(dim))
    if not bool(np.any(keep)):
        return Projection(np.zeros((dim, dim)))
    block = es.eigenvectors[:, keep]
    return Projection(block @ block.T)


def nullspace_projection(
    a: SymMatrix,
    tol_eig: float | None = None,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> Projection:
    """Projection onto the kernel: eigenvectors with |eigenvalue| <= the cut."""
    es = eig(a, policy)
    scale = float(np.max(np.abs(es.eigenvalues))) if a.dim else 0.0
    cut = policy.eig_cut(scale) if tol_eig is None else tol_eig
    keep = np.abs(es.eigenvalues) <= cut
    return _eigenspace_projection(es, keep, a.dim)


def operator_norm(a: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> float:
    """Largest absolute eigenvalue."""
    es = eig(a, policy)
    return float(np.max(np.abs(es.eigenvalues))) if a.dim else 0.0


def is_psd(a: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True when the smallest eigenvalue clears -tol_psd."""
    es = eig(a, policy)
    return bool(es.eigenvalues[0] >= -policy.tol_psd)
