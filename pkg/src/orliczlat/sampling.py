"""Seeded sample pools for the experiment runners.

Random draws place a support uniformly in the ball of the requested radius
and give each entry magnitude |N(0,1)| with an independent uniform phase.
Every trial derives its own generator from (seed, radius, trial index), so
results do not depend on evaluation order.

Deterministic adversarial candidates ride along with the random draws:
ball indicators (the classic witnesses against unweighted convolution
bounds), single atoms placed where the damped homomorphism is largest
(the witnesses for derivation growth), and reciprocal-weight profiles.
Candidate pairs are emitted as (f, flip f) and (f, f).
"""

from __future__ import annotations

import math
from typing import Callable, Iterator

import numpy as np

from .finsupp import FinSuppFn, Point
from .weights import Weight, ball, ball_size

__all__ = ["rng_for", "random_finsupp", "adversarial_candidates", "scan_pairs"]

# Ball indicators and profiles are only enumerated up to this many points.
PROFILE_SUPPORT_CAP = 8192


def rng_for(seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng((int(seed),) + tuple(int(k) for k in key))


def random_finsupp(
    dim: int,
    radius: int,
    rng: np.random.Generator,
    max_support: int = 40,
) -> FinSuppFn:
    size = int(rng.integers(1, max_support + 1))
    entries: dict[Point, complex] = {}
    pts = rng.integers(-radius, radius + 1, size=(size, dim))
    mags = np.abs(rng.standard_normal(size))
    phases = rng.uniform(0.0, 2.0 * math.pi, size)
    for row, m, th in zip(pts, mags, phases):
        if m == 0.0:
            continue
        entries[tuple(int(c) for c in row)] = m * complex(math.cos(th), math.sin(th))
    if not entries:
        entries[(0,) * dim] = 1.0
    return FinSuppFn(dim, entries)


def _flip(f: FinSuppFn) -> FinSuppFn:
    return FinSuppFn(f.dim, {tuple(-c for c in p): v for p, v in f})


def adversarial_candidates(
    dim: int,
    radius: int,
    omega: Weight | None = None,
    xi: Callable[[Point], complex] | None = None,
) -> list[tuple[str, FinSuppFn]]:
    cands: list[tuple[str, FinSuppFn]] = []
    corner = (radius,) * dim
    cands.append(("corner-atom", FinSuppFn.delta(corner)))
    cands.append(("axis-atom", FinSuppFn.delta((radius,) + (0,) * (dim - 1))))
    if omega is not None and xi is not None:
        # Atom where |xi| / (omega * flipped omega) peaks along the rays.
        best_pt, best_val = corner, -1.0
        for n in range(1, radius + 1):
            for pt in ((n,) * dim, (n,) + (0,) * (dim - 1)):
                neg = tuple(-c for c in pt)
                val = abs(xi(pt)) / (omega(pt) * omega(neg))
                if val > best_val:
                    best_pt, best_val = pt, val
        cands.append(("damped-peak-atom", FinSuppFn.delta(best_pt)))
    if ball_size(radius, dim) <= PROFILE_SUPPORT_CAP:
        pts = ball(radius, dim)
        cands.append(("ball-indicator", FinSuppFn.indicator(pts)))
        if radius >= 2:
            cands.append(("half-ball-indicator", FinSuppFn.indicator(ball(radius // 2, dim))))
        if omega is not None:
            cands.append(
                ("inverse-weight-profile", FinSuppFn(dim, {p: 1.0 / omega(p) for p in pts}))
            )
            if xi is not None:
                prof = {
                    p: xi(p) / (omega(p) * omega(tuple(-c for c in p))) for p in pts
                }
                cands.append(("damped-form-profile", FinSuppFn(dim, prof)))
    return cands


def scan_pairs(
    dim: int,
    radius: int,
    trials: int,
    seed: int,
    omega: Weight | None = None,
    xi: Callable[[Point], complex] | None = None,
    max_support: int = 40,
) -> Iterator[tuple[str, FinSuppFn, FinSuppFn]]:
    """Adversarial pairs first, then ``trials`` seeded random pairs."""
    for kind, f in adversarial_candidates(dim, radius, omega, xi):
        g = _flip(f)
        yield f"{kind}/flipped", f, g
        yield f"{kind}/same", f, f
    for t in range(trials):
        rng = rng_for(seed, radius, t)
        f = random_finsupp(dim, radius, rng, max_support)
        g = random_finsupp(dim, radius, rng, max_support)
        yield f"random[{t}]", f, g
