"""Sparse convolution on Z^d and weighted convolution-algebra diagnostics.

The scans here are lower-bound certificates, not proofs: each samples
seeded pairs, takes the worst ratio of a bounded-bilinear-map inequality,
and reports how that worst case moves as the support radius grows. A
plateau (growth below 15% across a 4x radius increase) is consistency
evidence for boundedness; growth of 25% or more is evidence against it.
Reports carry ``certificate="empirical"`` to make this status explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ConjugateInfiniteError,
    ConvexityError,
    PreconditionError,
    ResourceLimitError,
)
from .finsupp import FinSuppFn
from .norms import luxemburg_norm, weighted_l1_norm, weighted_norm
from .sampling import scan_pairs
from .weights import Weight
from .young import ComplementaryPair, YoungFunction, numeric_conjugate, sqrt_transform

__all__ = [
    "convolve",
    "flip",
    "AlgebraContext",
    "ScanReport",
    "classify_trend",
    "submult_estimate",
    "l1_module_check",
    "sqrt_pair_inequality_check",
    "conv_inclusion_check",
    "pointwise_inclusion_check",
    "PLATEAU_MAX_GROWTH",
    "GROWTH_MIN",
]

MAX_CONV_OPS = 10_000_000

# Trend thresholds: below the first is a plateau, at or above the second is
# growth, anything between is reported as indeterminate.
PLATEAU_MAX_GROWTH = 0.15
GROWTH_MIN = 0.25


def convolve(f: FinSuppFn, g: FinSuppFn) -> FinSuppFn:
    """Exact sparse convolution (f*g)(x) = sum_y f(y) g(x-y)."""
    f._check_dim(g)
    ops = len(f) * len(g)
    if ops > MAX_CONV_OPS:
        raise ResourceLimitError(f"convolution needs {ops} products, budget {MAX_CONV_OPS}")
    out: dict = {}
    for p, a in f:
        for q, b in g:
            key = tuple(x + y for x, y in zip(p, q))
            out[key] = out.get(key, 0.0) + a * b
    return FinSuppFn(f.dim, out)


def flip(f: FinSuppFn) -> FinSuppFn:
    """The reflection f(-x); an involution compatible with convolution."""
    return FinSuppFn(f.dim, {tuple(-c for c in p): v for p, v in f})


@dataclass(frozen=True, eq=False)
class AlgebraContext:
    """A complementary pair, a weight, and a lattice dimension."""

    pair: ComplementaryPair
    omega: Weight
    dim: int = 1

    def weighted_luxemburg(self, f: FinSuppFn) -> float:
        return weighted_norm(self.pair.phi, self.omega, f)

    def describe(self) -> str:
        return f"{self.pair.phi.describe()} / {self.omega.describe()} / Z^{self.dim}"


@dataclass(frozen=True)
class ScanReport:
    op: str
    params: dict
    per_radius: list[dict]
    max_ratio: float
    trend: str
    certificate: str = "empirical"
    notes: str = ""

    def to_json_obj(self) -> dict:
        return {
            "op": self.op,
            "params": self.params,
            "max_ratio": self.max_ratio,
            "per_radius": self.per_radius,
            "trend": self.trend,
            "certificate": self.certificate,
            **({"notes": self.notes} if self.notes else {}),
        }


def classify_trend(first: float, last: float) -> str:
    if first <= 0.0:
        return "indeterminate"
    growth = last / first - 1.0
    if growth < PLATEAU_MAX_GROWTH:
        return "plateau"
    if growth >= GROWTH_MIN:
        return "growth"
    return "indeterminate"


def _radius_ladder(radius: int) -> list[int]:
    ladder = sorted({max(1, radius // 4), max(1, radius // 2), radius})
    return ladder


def _ratio_scan(
    op: str,
    params: dict,
    radii: Sequence[int],
    ratio_fn,
    dim: int,
    trials: int,
    seed: int,
    omega: Weight | None = None,
    xi=None,
    max_support: int = 40,
) -> ScanReport:
    per_radius = []
    for r in radii:
        best, best_kind = 0.0, ""
        for kind, f, g in scan_pairs(dim, r, trials, seed, omega=omega, xi=xi,
                                     max_support=max_support):
            ratio = ratio_fn(f, g)
            if ratio is not None and ratio > best:
                best, best_kind = ratio, kind
        per_radius.append({"radius": r, "max_ratio": best, "argmax": best_kind})
    trend = classify_trend(per_radius[0]["max_ratio"], per_radius[-1]["max_ratio"])
    return ScanReport(
        op=op,
        params=params,
        per_radius=per_radius,
        max_ratio=max(row["max_ratio"] for row in per_radius),
        trend=trend,
    )


def submult_estimate(
    ctx: AlgebraContext,
    radius: int,
    trials: int,
    seed: int,
    *,
    max_support: int = 40,
) -> ScanReport:
    """Scan ||f*g|| / (||f|| ||g||) in the weighted Luxemburg norm.

    A growing worst case across the radius ladder is evidence that the
    weighted space is not a convolution algebra; a plateau only says the
    sampled pairs found no obstruction.
    """

    def ratio(f: FinSuppFn, g: FinSuppFn) -> float | None:
        nf, ng = ctx.weighted_luxemburg(f), ctx.weighted_luxemburg(g)
        if nf == 0.0 or ng == 0.0:
            return None
        return ctx.weighted_luxemburg(convolve(f, g)) / (nf * ng)

    return _ratio_scan(
        "submult_estimate",
        {"context": ctx.describe(), "radius": radius, "trials": trials, "seed": seed},
        _radius_ladder(radius),
        ratio,
        ctx.dim,
        trials,
        seed,
        omega=ctx.omega,
        max_support=max_support,
    )


def l1_module_check(
    ctx: AlgebraContext,
    radius: int,
    trials: int,
    seed: int,
    *,
    max_support: int = 40,
) -> ScanReport:
    """Scan ||f*g||_{Phi,w} / (||f||_{1,w} ||g||_{Phi,w}).

    The weighted-L1 module bound holds for every weight, so this scan is
    expected to plateau unconditionally; it serves as a control experiment
    for the thresholds.
    """

    def ratio(f: FinSuppFn, g: FinSuppFn) -> float | None:
        nf = weighted_l1_norm(ctx.omega, f)
        ng = ctx.weighted_luxemburg(g)
        if nf == 0.0 or ng == 0.0:
            return None
        return ctx.weighted_luxemburg(convolve(f, g)) / (nf * ng)

    return _ratio_scan(
        "l1_module_check",
        {"context": ctx.describe(), "radius": radius, "trials": trials, "seed": seed},
        _radius_ladder(radius),
        ratio,
        ctx.dim,
        trials,
        seed,
        omega=ctx.omega,
        max_support=max_support,
    )


def _sqrt_pair(pair: ComplementaryPair) -> tuple[YoungFunction, YoungFunction]:
    try:
        psi_tilde = sqrt_transform(pair.psi)
    except ConvexityError as exc:
        raise PreconditionError(
            f"sqrt transform rejected for {pair.psi.describe()}: {exc}"
        ) from exc
    return psi_tilde, numeric_conjugate(psi_tilde)


def sqrt_pair_inequality_check(pair: ComplementaryPair, grid: Sequence[float]) -> bool:
    """Pointwise comparisons tying Phi to the conjugate of Psi(sqrt(.)).

    Checks Phi(x) <= T(2x^2/Phi(x)) and T(x^2/(4 Phi(x))) <= Phi(x) on the
    grid, where T is the conjugate of the sqrt transform of Psi. Requires
    the sqrt transform to be accepted.
    """
    _, phi_tilde = _sqrt_pair(pair)
    phi = pair.phi
    for x in grid:
        fx = phi(x)
        if fx <= 0.0 or math.isinf(fx):
            continue
        tol = 1e-6
        try:
            upper = phi_tilde(2.0 * x * x / fx)
        except ConjugateInfiniteError:
            upper = math.inf  # an infinite upper bound holds trivially
        if fx > upper * (1.0 + tol):
            return False
        try:
            lower = phi_tilde(x * x / (4.0 * fx))
        except ConjugateInfiniteError:
            return False
        if lower > fx * (1.0 + tol):
            return False
    return True


def conv_inclusion_check(
    pair: ComplementaryPair,
    radius: int,
    trials: int,
    seed: int,
    dim: int = 1,
    *,
    max_support: int = 40,
) -> ScanReport:
    """Scan the convolution inclusion: N_Psi(u*f) / (N_T(u) N_Phi(f)) where
    T is the sqrt transform of Psi."""
    psi_tilde, _ = _sqrt_pair(pair)

    def ratio(u: FinSuppFn, f: FinSuppFn) -> float | None:
        nu = luxemburg_norm(psi_tilde, u)
        nf = luxemburg_norm(pair.phi, f)
        if nu == 0.0 or nf == 0.0:
            return None
        return luxemburg_norm(pair.psi, convolve(u, f)) / (nu * nf)

    return _ratio_scan(
        "conv_inclusion_check",
        {"pair": pair.describe(), "radius": radius, "trials": trials, "seed": seed},
        _radius_ladder(radius),
        ratio,
        dim,
        trials,
        seed,
        max_support=max_support,
    )


def pointwise_inclusion_check(
    pair: ComplementaryPair,
    radius: int,
    trials: int,
    seed: int,
    dim: int = 1,
    *,
    max_support: int = 40,
) -> ScanReport:
    """Scan the pointwise-product inclusion: N_Phi(u.g) / (N_T(u) N_Psi(g))
    where T is the conjugate of the sqrt transform of Psi."""
    _, phi_tilde = _sqrt_pair(pair)

    def ratio(u: FinSuppFn, g: FinSuppFn) -> float | None:
        nu = luxemburg_norm(phi_tilde, u)
        ng = luxemburg_norm(pair.psi, g)
        if nu == 0.0 or ng == 0.0:
            return None
        return luxemburg_norm(pair.phi, u.pointwise_mul(g)) / (nu * ng)

    return _ratio_scan(
        "pointwise_inclusion_check",
        {"pair": pair.describe(), "radius": radius, "trials": trials, "seed": seed},
        _radius_ladder(radius),
        ratio,
        dim,
        trials,
        seed,
        max_support=max_support,
    )
