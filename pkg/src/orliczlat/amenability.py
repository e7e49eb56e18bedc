"""Homomorphism obstructions, windowed derivations, and the classifier.

Every additive map Z^d -> C is a linear form xi(x) = sum c_i x_i. Its
weight-damped version

    xi_w(s) = xi(s) / (omega(s) * omega(-s))

is the pivot of the weak-amenability theory for weighted convolution
algebras on abelian groups: if some nonzero form stays bounded after
damping, the windowed operator

    D(f) = window * (flip(f) . flip(xi))

extends to a bounded derivation into the dual and kills weak amenability;
if no nonzero form survives the damping, the space (on the power scale,
where simple functions are dense) is weakly amenable. The classifier
:func:`classify` encodes the resulting thresholds for the built-in weight
families; the scan and diagnostic functions in this module produce the
numerical evidence behind the same dichotomy.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .algebra import AlgebraContext, ScanReport, _ratio_scan, convolve
from .errors import InvalidInputError, PreconditionError
from .finsupp import FinSuppFn, Point
from .weights import (
    SeriesReport,
    Weight,
    ball,
    reciprocal_summability,
    shell_count,
    weight_from_spec,
)
from .young import YoungFunction

__all__ = [
    "Homomorphism",
    "DampedHomomorphism",
    "Derivation",
    "apply_derivation",
    "leibniz_check",
    "LeibnizReport",
    "BoundednessReport",
    "damped_form_bounded",
    "MembershipReport",
    "damped_form_in_orlicz",
    "derivation_norm_scan",
    "ChainReport",
    "decay_chain_check",
    "Verdict",
    "ClassificationResult",
    "classify",
]


@dataclass(frozen=True)
class Homomorphism:
    """Additive map Z^d -> C given by coefficients: x -> sum c_i x_i."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidInputError("a homomorphism needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    @classmethod
    def basis(cls, dim: int, axis: int = 0) -> "Homomorphism":
        if not 0 <= axis < dim:
            raise InvalidInputError(f"axis {axis} out of range for dim {dim}")
        return cls(tuple(1.0 if i == axis else 0.0 for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __call__(self, x: Point | Sequence[int]) -> complex:
        return sum(c * xi for c, xi in zip(self.coeffs, x))

    def corner_amplitude(self) -> float:
        """max over sign patterns of |sum +-c_i|; |xi| on the shell of
        radius n attains its maximum n * corner_amplitude at a cube vertex."""
        best = 0.0
        for signs in itertools.product((1.0, -1.0), repeat=self.dim):
            best = max(best, abs(sum(s * c for s, c in zip(signs, self.coeffs))))
        return best


@dataclass(frozen=True, eq=False)
class DampedHomomorphism:
    """xi(s) / (omega(s) * omega(-s)) as a pointwise evaluator."""

    xi: Homomorphism
    omega: Weight

    def __call__(self, s: Point | Sequence[int]) -> complex:
        pt = tuple(int(c) for c in s)
        neg = tuple(-c for c in pt)
        return self.xi(pt) / (self.omega(pt) * self.omega(neg))

    def shell_max(self, n: int) -> float:
        """Exact max of the damped magnitude over the shell of radius n."""
        if n == 0:
            return 0.0
        r = self.omega.radial(n)
        denom = r * r
        if math.isinf(denom):
            return 0.0
        return n * self.xi.corner_amplitude() / denom


@dataclass(frozen=True, eq=False)
class Derivation:
    """Windowed derivation f -> window * (flip(f) . flip(xi))."""

    window: FinSuppFn
    form: Homomorphism

    @classmethod
    def with_ball_window(cls, form: Homomorphism, dim: int, r: int = 1) -> "Derivation":
        if form.dim != dim:
            raise InvalidInputError(f"form has dim {form.dim}, lattice has {dim}")
        return cls(FinSuppFn.indicator(ball(r, dim)), form)


def apply_derivation(d: Derivation, f: FinSuppFn) -> FinSuppFn:
    """D(f) = window * h with h(x) = f(-x) * xi(-x); linear in f."""
    if f.dim != d.window.dim:
        raise InvalidInputError(f"dimension mismatch: {f.dim} vs {d.window.dim}")
    h = {tuple(-c for c in p): v * d.form(p) for p, v in f}
    return convolve(d.window, FinSuppFn(f.dim, h))


def pairing(u: FinSuppFn, w: FinSuppFn) -> complex:
    """Bilinear pairing <u, w> = sum u(s) w(s) (no conjugation)."""
    u._check_dim(w)
    small, big = (u, w) if len(u) <= len(w) else (w, u)
    return sum((v * big.entries[p] for p, v in small if p in big.entries), 0j)


@dataclass(frozen=True)
class LeibnizReport:
    lhs: complex
    rhs: complex
    ok: bool


def leibniz_check(d: Derivation, f: FinSuppFn, g: FinSuppFn, h: FinSuppFn) -> LeibnizReport:
    """Derivation identity against the dual module action.

    lhs = <D(f*g), h>, rhs = <D(g), h*f> + <D(f), h*g>; for a commutative
    convolution algebra acting on its dual by <a.phi, b> = <phi, b*a> this
    is the Leibniz rule tested in weak form.
    """
    lhs = pairing(apply_derivation(d, convolve(f, g)), h)
    rhs = pairing(apply_derivation(d, g), convolve(h, f)) + pairing(
        apply_derivation(d, f), convolve(h, g)
    )
    ok = abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))
    return LeibnizReport(lhs=lhs, rhs=rhs, ok=ok)


# --------------------------------------------------------------------------
# Boundedness and membership verdicts for the damped form
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundednessReport:
    verdict: str  # "bounded" | "unbounded" | "inconclusive"
    sup_estimate: float | None
    growth_exponent: float | None
    method: str


def _log_sampled_ints(n_max: int, count: int = 240) -> list[int]:
    return [int(v) for v in np.unique(np.geomspace(1, n_max, count).astype(np.int64))]


def damped_form_bounded(
    dh: DampedHomomorphism,
    mode: str = "analytic",
    n_max: int = 10**6,
) -> BoundednessReport:
    """Is the damped form essentially bounded on the lattice?

    Analytic mode resolves the built-in families: for the polynomial
    weight of order beta the damped form behaves like n^(1-2beta), so it
    is bounded iff 2*beta >= 1; both subexponential families damp any
    linear form to zero. Numeric mode fits a log-log slope to the exact
    shell maxima: slope > 0.05 reads unbounded, slope < -0.05 (or a sup
    attained away from the horizon) reads bounded, the rest inconclusive.
    """
    if dh.xi.is_zero:
        raise InvalidInputError("the zero form is always bounded; need a nonzero one")
    family = dh.omega.family
    if mode == "analytic" and family in ("polynomial", "subexp_alpha", "subexp_log"):
        if family == "polynomial":
            beta = float(dh.omega.params["beta"])
            exponent = 1.0 - 2.0 * beta
            if 2.0 * beta >= 1.0:
                peak = 1.0 / (2.0 * beta - 1.0) if 2.0 * beta > 1.0 else float(n_max)
                horizon = min(n_max, max(1000, int(3 * peak) + 1))
                sup = max(dh.shell_max(n) for n in range(1, horizon + 1))
                if 2.0 * beta == 1.0:
                    sup = max(sup, dh.xi.corner_amplitude())
                return BoundednessReport("bounded", sup, exponent, "analytic:polynomial")
            return BoundednessReport("unbounded", None, exponent, "analytic:polynomial")
        horizon = min(n_max, 200_000)
        sup = 0.0
        prev = -1.0
        for n in range(1, horizon + 1):
            v = dh.shell_max(n)
            sup = max(sup, v)
            if n > 1000 and v < prev and v < sup * 1e-6:
                break
            prev = v
        return BoundednessReport("bounded", sup, None, f"analytic:{family}")
    if mode not in ("analytic", "numeric"):
        raise InvalidInputError(f"unknown mode {mode!r}")

    ns = _log_sampled_ints(n_max)
    vals = [dh.shell_max(n) for n in ns]
    sup = max(vals)
    cut = math.sqrt(n_max)
    xs = [math.log(n) for n, v in zip(ns, vals) if n >= cut and v > 0]
    ys = [math.log(v) for n, v in zip(ns, vals) if n >= cut and v > 0]
    if len(xs) < 4:
        return BoundednessReport("inconclusive", sup, None, "numeric:sparse")
    slope = float(np.polyfit(xs, ys, 1)[0])
    if slope > 0.05:
        return BoundednessReport("unbounded", None, slope, "numeric:slope")
    if slope < -0.05:
        return BoundednessReport("bounded", sup, slope, "numeric:slope")
    argmax = vals.index(sup)
    if argmax < 0.6 * len(vals) and vals[-1] <= 0.9 * sup:
        return BoundednessReport("bounded", sup, slope, "numeric:stabilised")
    return BoundednessReport("inconclusive", sup, slope, "numeric:slope")


@dataclass(frozen=True)
class MembershipReport:
    verdict: str  # "yes" | "no" | "inconclusive"
    alpha: float | None
    method: str


def _sampled_tail_behaviour(
    term: Callable[[int], float], n_max: int
) -> tuple[str, float]:
    """Verdict for sum(term(n)) from log-sampled anchors.

    Returns (verdict, fitted slope) with verdict one of "converges",
    "diverges", "inconclusive", or "resolution-floor" when every sampled
    term is already a float zero (nothing can be said at this scale).
    Geometric decay is detected from anchor-local ratios, polynomial decay
    from a log-log slope against the p-series boundary -1.
    """
    anchors = _log_sampled_ints(n_max, 90)
    all_vals = [(n, term(n)) for n in anchors]
    if any(math.isinf(v) for _, v in all_vals):
        return "diverges", math.inf
    if all(v == 0.0 for _, v in all_vals):
        return "resolution-floor", 0.0
    tail = [(n, v) for n, v in all_vals if n >= math.sqrt(n_max)]
    if len(tail) < 4:
        tail = all_vals[-6:]
    if all(v == 0.0 for _, v in tail):
        # positive head decayed to exact zero: the float sum terminates
        return "converges", -math.inf
    local = [(term(n + 1), v) for n, v in tail]
    if all(v > 0 and nxt / v <= 1.0 - 1e-3 for nxt, v in local):
        return "converges", -math.inf
    pos = [(n, v) for n, v in tail if v > 0]
    if len(pos) < 4:
        return "inconclusive", 0.0
    slope = float(np.polyfit([math.log(n) for n, _ in pos], [math.log(v) for _, v in pos], 1)[0])
    if slope <= -1.15:
        return "converges", slope
    if slope >= -0.85:
        return "diverges", slope
    return "inconclusive", slope


def damped_form_in_orlicz(
    dh: DampedHomomorphism,
    psi_tilde: YoungFunction,
    n_max: int = 10**4,
    dim: int | None = None,
) -> MembershipReport:
    """Does the damped form lie in the Orlicz space of ``psi_tilde``?

    Membership asks for SOME alpha > 0 with sum psi_tilde(alpha |xi_w|)
    finite, so alphas are swept downward geometrically; shell sums are
    bounded through the exact shell maxima. A "no" additionally requires
    the smallest alpha to diverge with a non-vanishing tail, which rules
    out every other alpha for regularly decaying profiles.
    """
    if dh.xi.is_zero:
        raise InvalidInputError("membership is trivial for the zero form")
    d = dim if dim is not None else dh.xi.dim

    def term_for(alpha: float) -> Callable[[int], float]:
        return lambda n: shell_count(n, d) * psi_tilde(alpha * dh.shell_max(n))

    anchors = _log_sampled_ints(n_max, 90)
    profile = [dh.shell_max(n) for n in anchors]
    tail = profile[len(profile) // 2:]
    tail_nondecaying = all(
        b >= a * (1.0 - 1e-12) for a, b in zip(tail, tail[1:])
    ) and tail[-1] > 0.0

    alphas = [2.0 ** (-k) for k in range(0, 41, 4)]
    divergent_seen = False
    for alpha in alphas:
        verdict, _ = _sampled_tail_behaviour(term_for(alpha), n_max)
        if verdict == "converges":
            return MembershipReport("yes", alpha, "shell-upper-bound")
        if verdict == "diverges":
            divergent_seen = True
    if divergent_seen and tail_nondecaying:
        # the damped profile does not vanish at infinity, so scaling alpha
        # down cannot make the series summable
        return MembershipReport("no", None, "non-vanishing-damped-profile")
    return MembershipReport("inconclusive", None, "alpha-sweep-exhausted")


def derivation_norm_scan(
    ctx: AlgebraContext,
    d: Derivation,
    radii: Sequence[int],
    trials: int,
    seed: int,
    *,
    max_support: int = 40,
) -> ScanReport:
    """Scan |<D(f), g>| / (||f||_{Phi,w} ||g||_{Phi,w}) over seeded pairs.

    In the regime where a bounded damped form exists the ratio is capped
    by the derivation bound and the scan plateaus; in the weakly amenable
    regime no bounded extension exists and atoms pushed to the boundary of
    the ball make the worst case grow with the radius.
    """

    def ratio(f: FinSuppFn, g: FinSuppFn) -> float | None:
        nf, ng = ctx.weighted_luxemburg(f), ctx.weighted_luxemburg(g)
        if nf == 0.0 or ng == 0.0:
            return None
        return abs(pairing(apply_derivation(d, f), g)) / (nf * ng)

    return _ratio_scan(
        "derivation_norm_scan",
        {
            "context": ctx.describe(),
            "window_size": len(d.window),
            "radii": list(radii),
            "trials": trials,
            "seed": seed,
        },
        list(radii),
        ratio,
        ctx.dim,
        trials,
        seed,
        omega=ctx.omega,
        xi=d.form,
        max_support=max_support,
    )


# --------------------------------------------------------------------------
# Decay-chain diagnostic
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainReport:
    monotone_ok: bool
    chain_ok: bool
    shell_series: SeriesReport
    witness_sup: float
    witness_argmax: int
    ok: bool


def decay_chain_check(
    omega: Weight,
    psi: YoungFunction,
    xi: Homomorphism,
    alpha: float,
    n_max: int,
    dim: int = 1,
) -> ChainReport:
    """Check the chain behind the summability route to non-amenability.

    With a_n = Psi(alpha / omega_radial(n)): (a) a_n is non-increasing,
    (b) n * a_n <= a_1 + ... + a_n (an exact consequence of (a)),
    (c) the shell-weighted series sum |shell(n)| a_n converges, and the
    witness sup_n |xi| * a_n over shell maxima is attained well before the
    horizon. Requires the reciprocal weight to be summable in Psi; invoked
    outside that regime it raises :class:`PreconditionError`.
    """
    summability = reciprocal_summability(omega, psi, alpha, n_max, dim)
    if summability.verdict != "converges":
        raise PreconditionError(
            f"reciprocal summability verdict is {summability.verdict!r}; "
            "the decay chain needs the convergent regime"
        )
    a = [psi(alpha / omega.radial(n)) for n in range(1, n_max + 1)]
    monotone_ok = all(
        nxt <= prev * (1.0 + 1e-9) + 1e-300 for prev, nxt in zip(a, a[1:])
    )
    chain_ok = True
    running = 0.0
    for n, an in enumerate(a, start=1):
        running += an
        if n * an > running * (1.0 + 1e-12) + 1e-300:
            chain_ok = False
            break
    shell_series = summability
    amp = xi.corner_amplitude()
    witness = [n * amp * an for n, an in enumerate(a, start=1)]
    witness_sup = max(witness)
    witness_argmax = witness.index(witness_sup) + 1
    witness_ok = witness_argmax <= max(1, int(0.9 * n_max))
    ok = monotone_ok and chain_ok and shell_series.verdict == "converges" and witness_ok
    return ChainReport(
        monotone_ok=monotone_ok,
        chain_ok=chain_ok,
        shell_series=shell_series,
        witness_sup=witness_sup,
        witness_argmax=witness_argmax,
        ok=ok,
    )


# --------------------------------------------------------------------------
# Classifier
# --------------------------------------------------------------------------


class Verdict:
    NOT_BANACH_ALGEBRA = "NotBanachAlgebra"
    WEAKLY_AMENABLE = "WeaklyAmenable"
    NOT_WEAKLY_AMENABLE = "NotWeaklyAmenable"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str
    thresholds: dict
    evidence: list[str]
    params: dict = field(default_factory=dict)
    reason: str = ""

    def to_json_obj(self) -> dict:
        obj = {
            "verdict": self.verdict,
            "thresholds": self.thresholds,
            "evidence": self.evidence,
            "params": self.params,
        }
        if self.reason:
            obj["reason"] = self.reason
        return obj


def classify(
    p: float,
    weight: Weight | Mapping[str, object],
    dim: int = 1,
) -> ClassificationResult:
    """Classify the weighted p-scale convolution algebra on Z^dim.

    Verdicts: "NotBanachAlgebra" when the reciprocal weight fails the
    conjugate-exponent summability needed for convolution to be bounded;
    otherwise "WeaklyAmenable" or "NotWeaklyAmenable" according to whether
    a nonzero linear form survives the weight damping; "Undecided" when a
    heuristic summability probe cannot settle the remaining case.
    """
    if not p > 1.0 or math.isinf(p):
        raise InvalidInputError(f"need 1 < p < inf, got {p!r}")
    if dim < 1:
        raise InvalidInputError(f"need dim >= 1, got {dim!r}")
    omega = weight if isinstance(weight, Weight) else weight_from_spec(weight)
    q = p / (p - 1.0)
    thresholds = {"d_over_q": dim / q, "half": 0.5}
    params = {"p": p, "q": q, "dim": dim, "weight": omega.spec()}

    if omega.family == "polynomial":
        beta = float(omega.params["beta"])
        thresholds["beta"] = beta
        if beta * q <= dim:
            return ClassificationResult(
                Verdict.NOT_BANACH_ALGEBRA,
                thresholds,
                [
                    f"reciprocal weight not q-summable: sum n^(d-1) (1+n)^(-beta*q) "
                    f"diverges since beta*q = {beta * q:g} <= d = {dim} (integral test)",
                    "the weighted p-space is a convolution algebra exactly when the "
                    "reciprocal weight is q-summable",
                ],
                params,
            )
        evidence = [
            f"convolution algebra: beta*q = {beta * q:g} > d = {dim}, so the "
            "reciprocal weight is q-summable",
        ]
        if p <= 2.0:
            if beta < 0.5:
                evidence.append(
                    f"every nonzero linear form damps to ~ n^(1-2*beta) = "
                    f"n^{1 - 2 * beta:g}, unbounded since beta < 1/2"
                )
                evidence.append(
                    "no bounded damped homomorphism exists, which forces weak "
                    "amenability on the power scale (simple functions are dense)"
                )
                return ClassificationResult(
                    Verdict.WEAKLY_AMENABLE, thresholds, evidence, params
                )
            evidence.append(
                f"the coordinate form damps to n/(1+n)^{2 * beta:g}, bounded since "
                "beta >= 1/2"
            )
            evidence.append(
                f"q = {q:g} >= 2 so the square-root transform of the conjugate is "
                "convex; the windowed derivation extends boundedly"
            )
            return ClassificationResult(
                Verdict.NOT_WEAKLY_AMENABLE, thresholds, evidence, params
            )
        evidence.append(
            f"p = {p:g} > 2: the square-root transform of the base function is "
            "convex and the q-summable reciprocal weight feeds the decay chain, "
            "so a bounded derivation witness exists"
        )
        return ClassificationResult(
            Verdict.NOT_WEAKLY_AMENABLE, thresholds, evidence, params
        )

    if omega.family in ("subexp_alpha", "subexp_log"):
        evidence = [
            f"subexponential weight {omega.describe()}: convolution algebra for "
            "every choice of parameters",
            "every nonzero linear form damps to zero (linear growth against "
            "super-polynomial weight decay), so a bounded damped form exists",
        ]
        if p <= 2.0:
            evidence.append(
                f"q = {q:g} >= 2 so the square-root transform of the conjugate is "
                "convex; the windowed derivation extends boundedly"
            )
            return ClassificationResult(
                Verdict.NOT_WEAKLY_AMENABLE, thresholds, evidence, params
            )
        from .young import young_from_spec

        probe = reciprocal_summability(
            omega, young_from_spec({"family": "power", "p": q}), 1.0, 3000, dim
        )
        if probe.verdict == "converges":
            evidence.append(
                "reciprocal weight q-summable (shell-series probe converges), so "
                "the decay chain applies for p > 2"
            )
            return ClassificationResult(
                Verdict.NOT_WEAKLY_AMENABLE, thresholds, evidence, params
            )
        return ClassificationResult(
            Verdict.UNDECIDED,
            thresholds,
            evidence,
            params,
            reason=f"summability probe returned {probe.verdict!r} for p > 2",
        )

    return ClassificationResult(
        Verdict.UNDECIDED,
        thresholds,
        [],
        params,
        reason=f"no analytic rule for weight family {omega.family!r}",
    )
