"""Order dispatch plus the involutive and complementation structure on
effects: Kleene complement, Brouwer complement, their axiom checkers and the
De Morgan carrier laws.

Checkers return VerificationReports whose witnesses replay: feeding a
failure's witnesses back through the same check reproduces the magnitude.
"""

from __future__ import annotations

import math
import time
from enum import Enum

import numpy as np

from .core import carrier, commutes, numerical_leq, sqrt_psd
from .lattice import join as proj_join
from .lattice import meet as proj_meet
from .lattice import orthocomplement, proj_leq
from .report import VerificationReport
from .resolution import merged_breakpoints, resolution_of
from .spectral import spectral_join, spectral_leq, spectral_meet
from .substrate import (
    DEFAULT_POLICY,
    Effect,
    Projection,
    SymMatrix,
    TolerancePolicy,
    eig,
    frobenius,
)

__all__ = [
    "OrderTag",
    "leq",
    "kleene_complement",
    "brouwer_complement",
    "check_involution",
    "check_bz",
    "demorgan_carrier_checks",
]


class OrderTag(Enum):
    NUMERICAL = "numerical"
    SPECTRAL = "spectral"


def leq(
    a: SymMatrix,
    b: SymMatrix,
    order: OrderTag,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> bool:
    """Comparator dispatch; the spectral order refines the numerical one."""
    if order is OrderTag.NUMERICAL:
        return numerical_leq(a, b, policy)
    if order is OrderTag.SPECTRAL:
        return spectral_leq(a, b, policy)
    raise ValueError(f"unknown order: {order!r}")


def kleene_complement(a: SymMatrix) -> SymMatrix:
    """1 - a; an involution on effects reversing both orders."""
    return SymMatrix(np.eye(a.dim) - a.mat)


def brouwer_complement(
    e: SymMatrix, policy: TolerancePolicy = DEFAULT_POLICY
) -> Projection:
    """Kleene complement of the carrier; the largest projection killing e."""
    return orthocomplement(carrier(e, policy))


def _psd_deficit(a: SymMatrix, b: SymMatrix, policy: TolerancePolicy) -> float:
    """How far b - a is from PSD; 0 when the comparison holds."""
    es = eig(b - a, policy)
    return max(0.0, -float(es.eigenvalues[0]))


def _violation(a, b, order: OrderTag, policy) -> float:
    if order is OrderTag.NUMERICAL:
        return _psd_deficit(a, b, policy)
    return 0.0 if spectral_leq(a, b, policy) else 1.0


def check_involution(
    sample: list[tuple[SymMatrix, SymMatrix]],
    order: OrderTag,
    policy: TolerancePolicy = DEFAULT_POLICY,
    complement=kleene_complement,
) -> VerificationReport:
    """Kleene axioms over sampled pairs: period two (i1), antitonicity (i2)
    and regularity (r).  i2 and r fire only where their premises hold; the
    premise hit counts land in the notes."""
    start = time.perf_counter()
    dim = sample[0][0].dim if sample else 0
    report = VerificationReport(
        suite="involution", order=order.value, dim=dim, trials=len(sample), seed=0
    )
    i2_hits = 0
    r_hits = 0
    tol = policy.tol_proj
    for a, b in sample:
        twice = complement(complement(a))
        mag = frobenius(twice.mat - a.mat)
        if mag > tol * (1.0 + frobenius(a.mat)):
            report.add("i1-period-two", mag, [a])
        ca, cb = complement(a), complement(b)
        if leq(a, b, order, policy):
            i2_hits += 1
            mag = _violation(cb, ca, order, policy)
            if mag > policy.tol_psd:
                report.add("i2-antitone", mag, [a, b])
        if leq(a, ca, order, policy) and leq(b, cb, order, policy):
            r_hits += 1
            mag = _violation(a, cb, order, policy)
            if mag > policy.tol_psd:
                report.add("r-regularity", mag, [a, b])
    report.notes.append(f"i2 premise held on {i2_hits}/{len(sample)} pairs")
    report.notes.append(f"r premise held on {r_hits}/{len(sample)} pairs")
    report.elapsed = time.perf_counter() - start
    return report


def check_bz(
    effects: list[Effect],
    order: OrderTag,
    policy: TolerancePolicy = DEFAULT_POLICY,
) -> VerificationReport:
    """Brouwer-Zadeh axioms for e~ = complement of the carrier.

    (2a) nothing sits below both e and e~: under the spectral order the meet
    is computed outright; under the numerical order candidates f <= e~ are
    compressed out of sample partners and must annihilate e and collapse
    whenever they also sit below e.  (2b) e <= e~~.  (2c) the map is
    antitone.  (3) the two complements interlock: (e~)-Kleene = e~~.
    """
    start = time.perf_counter()
    if not effects:
        raise ValueError("sample must be nonempty")
    dim = effects[0].dim
    report = VerificationReport(
        suite="bz", order=order.value, dim=dim, trials=len(effects), seed=0
    )
    tol = policy.tol_proj
    count = len(effects)
    for i, e in enumerate(effects):
        g = effects[(i + 1) % count]
        br = brouwer_complement(e, policy)
        br2 = orthocomplement(carrier(br, policy))
        car = carrier(e, policy)

        if order is OrderTag.SPECTRAL:
            m = spectral_meet(e, SymMatrix(br.mat), policy)
            mag = frobenius(m.mat)
            if mag > tol * e.dim:
                report.add("bz-2a-meet", mag, [e])
        f = SymMatrix(br.mat @ g.mat @ br.mat)
        mag = frobenius(f.mat @ e.mat)
        if mag > tol * (1.0 + frobenius(g.mat)):
            report.add("bz-2a-annihilates", mag, [e, g])
        if leq(f, e, order, policy):
            mag = frobenius(f.mat)
            if mag > tol * e.dim:
                report.add("bz-2a-forces-zero", mag, [e, g])

        mag = _violation(e, SymMatrix(br2.mat), order, policy)
        if mag > policy.tol_psd:
            report.add("bz-2b-below-double", mag, [e])

        if order is OrderTag.NUMERICAL:
            half = sqrt_psd(kleene_complement(e), policy)
            big = Effect(e.mat + half.mat @ g.mat @ half.mat)
        else:
            big = Effect(spectral_join(e, g, policy).mat)
        if not proj_leq(brouwer_complement(big, policy), br, policy):
            report.add("bz-2c-antitone", 1.0, [e, g])

        mag = frobenius(kleene_complement(br).mat - br2.mat)
        if mag > tol:
            report.add("bz-3-interlock", mag, [e])
        mag = frobenius(br2.mat - car.mat)
        if mag > tol:
            report.add("bz-double-is-carrier", mag, [e])

        p = car
        mag = frobenius(
            brouwer_complement(p, policy).mat - orthocomplement(p).mat
        )
        if mag > tol:
            report.add("bz-projection-complement", mag, [e])

        sq = SymMatrix(g.mat @ g.mat)
        agree = numerical_leq(SymMatrix(np.zeros((dim, dim))), sq, policy) == (
            spectral_leq(SymMatrix(np.zeros((dim, dim))), sq, policy)
        )
        if not agree:
            report.add("positivity-bridge", 1.0, [g])
        shifted = g - 0.5
        agree = numerical_leq(
            SymMatrix(np.zeros((dim, dim))), shifted, policy
        ) == spectral_leq(SymMatrix(np.zeros((dim, dim))), shifted, policy)
        if not agree:
            report.add("positivity-bridge", 1.0, [g])
        bigger = SymMatrix(sq.mat + e.mat @ e.mat)
        if not proj_leq(carrier(sq, policy), carrier(bigger, policy), policy):
            report.add("carrier-monotone", 1.0, [g, e])
    report.elapsed = time.perf_counter() - start
    return report


def demorgan_carrier_checks(
    e: Effect, f: Effect, policy: TolerancePolicy = DEFAULT_POLICY
) -> VerificationReport:
    """Carrier versions of the De Morgan laws for one pair of effects.

    Spectral meet/join carriers factor through the projection lattice; the
    resolution identity is probed at every merged breakpoint; the Kleene
    complement swaps meet and join.  The commuting variant runs
    only when the pair commutes and is noted otherwise.
    """
    start = time.perf_counter()
    report = VerificationReport(
        suite="demorgan-carrier", order="both", dim=e.dim, trials=1, seed=0
    )
    tol = policy.tol_proj * e.dim
    m = spectral_meet(e, f, policy)
    j = spectral_join(e, f, policy)
    ce, cf = carrier(e, policy), carrier(f, policy)

    mag = frobenius(carrier(m, policy).mat - proj_meet(ce, cf, policy).mat)
    if mag > tol:
        report.add("dm-meet-carrier", mag, [e, f])
    mag = frobenius(carrier(j, policy).mat - proj_join(ce, cf, policy).mat)
    if mag > tol:
        report.add("dm-join-carrier", mag, [e, f])

    re, rf = resolution_of(e, policy), resolution_of(f, policy)
    rm = resolution_of(m, policy)
    rj = resolution_of(j, policy)
    _, grid, _ = merged_breakpoints([re, rf, rm, rj])
    worst_meet = 0.0
    worst_join = 0.0
    for lam in grid:
        pe, pf = re.at(float(lam)), rf.at(float(lam))
        worst_meet = max(
            worst_meet,
            frobenius(rm.at(float(lam)).mat - proj_join(pe, pf, policy).mat),
        )
        worst_join = max(
            worst_join,
            frobenius(rj.at(float(lam)).mat - proj_meet(pe, pf, policy).mat),
        )
    if worst_meet > tol:
        report.add("dm-resolution-meet", worst_meet, [e, f])
    if worst_join > tol:
        report.add("dm-resolution-join", worst_join, [e, f])

    lhs = kleene_complement(m)
    rhs = spectral_join(kleene_complement(e), kleene_complement(f), policy)
    mag = frobenius(lhs.mat - rhs.mat)
    if mag > tol:
        report.add("dm-kleene-meet", mag, [e, f])
    lhs = kleene_complement(j)
    rhs = spectral_meet(kleene_complement(e), kleene_complement(f), policy)
    mag = frobenius(lhs.mat - rhs.mat)
    if mag > tol:
        report.add("dm-kleene-join", mag, [e, f])

    if commutes(e, f, policy):
        es = eig(e + math.pi * f, policy)
        q = es.eigenvectors
        de = np.diag(q.T @ e.mat @ q)
        df = np.diag(q.T @ f.mat @ q)
        syn_meet = SymMatrix(q @ np.diag(np.minimum(de, df)) @ q.T)
        syn_join = SymMatrix(q @ np.diag(np.maximum(de, df)) @ q.T)
        mag = frobenius(
            carrier(syn_meet, policy).mat - proj_meet(ce, cf, policy).mat
        )
        if mag > tol:
            report.add("dm-commuting-meet-carrier", mag, [e, f])
        mag = frobenius(
            carrier(syn_join, policy).mat - proj_join(ce, cf, policy).mat
        )
        if mag > tol:
            report.add("dm-commuting-join-carrier", mag, [e, f])
    else:
        report.notes.append(
            "commuting meet/join not applicable: pair does not commute"
        )
    report.elapsed = time.perf_counter() - start
    return report
