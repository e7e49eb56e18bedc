"""Young functions, convex conjugation, and the named catalog.

A Young function is a convex Phi: [0, inf) -> [0, inf) with Phi(0) = 0 and
Phi(x) -> inf. Throughout the package we work with the continuous strictly
increasing kind, so inverses exist and the complementary (convex conjugate)
function

    Psi(y) = sup{ x*y - Phi(x) : x >= 0 }

is again of that kind whenever Phi grows superlinearly. Complementary pairs
satisfy the product inequality x*y <= Phi(x) + Psi(y) and the inverse
sandwich x <= Phi^{-1}(x) * Psi^{-1}(x) <= 2x, both of which are enforced on
a sampled grid when a pair is built.

All grid validations use log-spaced abscissae on [1e-6, 1e3]; inequalities
stated for all x >= 0 are checked on that working range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np
from scipy.integrate import quad

from .errors import (
    ConjugateInfiniteError,
    ConvexityError,
    InvalidInputError,
    NumericalFailureError,
)

__all__ = [
    "YoungFunction",
    "ComplementaryPair",
    "conjugate",
    "conjugate_with_argmax",
    "inverse",
    "make_pair",
    "numeric_conjugate",
    "from_density",
    "delta2_estimate",
    "strong_equiv_check",
    "find_strong_equiv_constants",
    "sqrt_transform",
    "catalog",
    "catalog_ids",
    "young_from_spec",
    "pair_from_spec",
    "default_grid",
]

# Working range for grid validations.
GRID_MIN = 1e-6
GRID_MAX = 1e3
# Bracket cap for conjugate evaluation; beyond this the sup is reported infinite.
BRACKET_CAP = 1e12


def default_grid(n: int = 61, lo: float = GRID_MIN, hi: float = GRID_MAX) -> list[float]:
    """Log-spaced validation abscissae on the working range."""
    return [float(x) for x in np.geomspace(lo, hi, n)]


def _guarded(fn: Callable[[float], float], x: float) -> float:
    """Evaluate fn(x), mapping float overflow to +inf."""
    try:
        v = fn(x)
    except OverflowError:
        return math.inf
    return float(v)


@dataclass(frozen=True, eq=False)
class YoungFunction:
    """Evaluator for a convex function on [0, inf) with optional derivative.

    ``fn`` must accept a nonnegative float. ``derivative``, when given, is
    the closed-form derivative; otherwise :meth:`d` falls back to central
    differences with step h = max(1e-6, 1e-6*x).
    """

    fn: Callable[[float], float]
    derivative: Callable[[float], float] | None = None
    label: str = "custom"
    params: Mapping[str, float] = field(default_factory=dict)

    def __call__(self, x: float) -> float:
        if x < 0:
            raise InvalidInputError(f"Young function evaluated at negative x={x!r}")
        return _guarded(self.fn, x)

    def d(self, x: float) -> float:
        """Derivative at x (closed form if available, else central differences)."""
        if x < 0:
            raise InvalidInputError(f"derivative requested at negative x={x!r}")
        if self.derivative is not None:
            return _guarded(self.derivative, x)
        h = max(1e-6, 1e-6 * x)
        lo = max(0.0, x - h)
        return (self(x + h) - self(lo)) / (x + h - lo)

    def values(self, xs: Iterable[float]) -> list[float]:
        return [self(x) for x in xs]

    def describe(self) -> str:
        if self.params:
            inner = ",".join(f"{k}={v:g}" for k, v in sorted(self.params.items()))
            return f"{self.label}({inner})"
        return self.label

    def validate(self, grid: Sequence[float] | None = None) -> None:
        """Check the Young-function invariants on a grid; raise on violation.

        Checks: value 0 at 0, strict monotonicity, convexity at interior
        ratios {0.25, 0.5, 0.75}, and eventual growth. Convexity plus
        positivity forces divergence, so growth reduces to positivity at
        the top of the range.
        """
        xs = list(grid) if grid is not None else default_grid()
        v0 = self(0.0)
        if v0 != 0.0:
            raise InvalidInputError(f"{self.describe()}: value at 0 is {v0!r}, expected 0")
        vals = self.values(xs)
        if not vals[0] > 0.0:
            raise InvalidInputError(f"{self.describe()}: not positive at x={xs[0]:g}")
        for a, b, va, vb in zip(xs, xs[1:], vals, vals[1:]):
            if math.isinf(va):
                continue
            if not vb > va:
                raise InvalidInputError(
                    f"{self.describe()}: not strictly increasing between {a:g} and {b:g}"
                )
        if not vals[-1] > 0.0:
            raise InvalidInputError(f"{self.describe()}: not positive at top of range")
        # Convexity on grid pairs several decades apart and adjacent.
        idx = range(0, len(xs), 4)
        for i in idx:
            for j in range(i + 1, len(xs), 7):
                x, y = xs[i], xs[j]
                fx, fy = vals[i], vals[j]
                if math.isinf(fy):
                    continue
                for t in (0.25, 0.5, 0.75):
                    m = t * x + (1.0 - t) * y
                    bound = t * fx + (1.0 - t) * fy
                    if self(m) > bound + 1e-9 * (1.0 + abs(bound)):
                        raise ConvexityError(
                            f"{self.describe()}: convexity fails", m
                        )


def conjugate_with_argmax(phi: YoungFunction, y: float) -> tuple[float, float]:
    """Conjugate value sup{x*y - Phi(x)} and its maximiser.

    Bracket expansion doubles x until the chord slope Phi(x)/x exceeds y
    (for convex Phi with Phi(0)=0 the slope is nondecreasing and bounds the
    derivative from below, so the maximiser lies inside the bracket), then
    ternary search on the concave map x -> x*y - Phi(x).
    """
    if y < 0:
        raise InvalidInputError(f"conjugate requested at negative y={y!r}")
    if y == 0.0:
        return 0.0, 0.0

    def g(x: float) -> float:
        v = phi(x)
        if math.isinf(v):
            return -math.inf
        return x * y - v

    hi = 1.0
    while True:
        v = phi(hi)
        if v / hi > y:
            break
        if hi >= BRACKET_CAP:
            # Asymptotically linear case: if the objective is still climbing
            # at the cap the sup is reported infinite; if it has flattened
            # (slope exactly y in the tail) the sup over [0, cap] is it.
            g_cap, g_half = g(hi), g(0.5 * hi)
            if g_cap > g_half + 1e-9 * (1.0 + abs(g_cap)):
                raise ConjugateInfiniteError(y, BRACKET_CAP)
            break
        hi = min(hi * 2.0, BRACKET_CAP)

    lo = 0.0
    best_x, best_v = 0.0, 0.0
    for it in range(240):
        # relative width so tiny maximisers (conjugates near 0) stay sharp
        if hi - lo <= 1e-15 * hi:
            break
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        g1, g2 = g(m1), g(m2)
        if g1 > best_v:
            best_x, best_v = m1, g1
        if g2 > best_v:
            best_x, best_v = m2, g2
        if it > 60 and best_v > 0.0 and abs(g1 - g2) <= 1e-15 * best_v:
            break
        if g1 < g2:
            lo = m1
        else:
            hi = m2
    mid = 0.5 * (lo + hi)
    gm = g(mid)
    if gm > best_v:
        best_x, best_v = mid, gm
    return max(0.0, best_v), best_x


def conjugate(phi: YoungFunction, y: float) -> float:
    """Convex conjugate of ``phi`` at ``y``; see :func:`conjugate_with_argmax`."""
    return conjugate_with_argmax(phi, y)[0]


def numeric_conjugate(phi: YoungFunction) -> YoungFunction:
    """Conjugate of ``phi`` as an evaluator.

    Values come from the bracket/ternary optimiser; the derivative is the
    maximiser itself (the envelope rule for the conjugate of a strictly
    convex function), which falls out of the same computation. Results are
    memoised per abscissa since downstream solvers revisit points.
    """
    cache: dict[float, tuple[float, float]] = {}

    def solve(y: float) -> tuple[float, float]:
        got = cache.get(y)
        if got is None:
            got = conjugate_with_argmax(phi, y)
            if len(cache) > 100_000:
                cache.clear()
            cache[y] = got
        return got

    return YoungFunction(
        fn=lambda y: solve(y)[0],
        derivative=lambda y: solve(y)[1],
        label=f"conj[{phi.describe()}]",
    )


def inverse(phi: YoungFunction, y: float) -> float:
    """Solve Phi(x) = y for x by bracketed bisection.

    Requires strictly increasing continuous ``phi``; the residual satisfies
    |Phi(x) - y| <= 1e-10 * max(1, y).
    """
    if y < 0:
        raise InvalidInputError(f"inverse requested below Phi(0)=0, y={y!r}")
    if y == 0.0:
        return 0.0
    hi = 1.0
    for _ in range(4000):
        if phi(hi) >= y:
            break
        hi *= 2.0
    else:
        raise NumericalFailureError(f"no bracket for inverse at y={y!r}")
    lo = 0.0
    for _ in range(200):
        if hi - lo <= 1e-15 * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if phi(mid) < y:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    if abs(phi(x) - y) <= 1e-10 * max(1.0, y):
        return x
    raise NumericalFailureError(f"inverse bisection stalled at y={y!r}")


@dataclass(frozen=True, eq=False)
class ComplementaryPair:
    """A Young function together with its convex conjugate.

    ``conjugation_mode`` records how psi was obtained: "closed_form" for
    catalog members with a known conjugate, "numerical" for the optimiser
    based conjugate, "quadrature" for pairs built from a density.
    """

    phi: YoungFunction
    psi: YoungFunction
    conjugation_mode: str = "numerical"

    def describe(self) -> str:
        return f"({self.phi.describe()}, {self.psi.describe()})"

    def swap(self) -> "ComplementaryPair":
        """The same pair with the roles of phi and psi exchanged."""
        return ComplementaryPair(self.psi, self.phi, self.conjugation_mode)

    def phi_inv(self, x: float) -> float:
        return inverse(self.phi, x)

    def psi_inv(self, x: float) -> float:
        return inverse(self.psi, x)

    def validate(self, grid: Sequence[float] | None = None) -> None:
        """Product inequality and inverse sandwich on a sampled grid."""
        xs = list(grid) if grid is not None else default_grid(13)
        for x in xs:
            px = self.phi(x)
            for y in xs:
                bound = px + self.psi(y)
                if x * y > bound + 1e-9 * (1.0 + x * y):
                    raise InvalidInputError(
                        f"pair {self.describe()}: product inequality fails at "
                        f"({x:g},{y:g}): {x * y:g} > {bound:g}"
                    )
        for x in xs:
            prod = self.phi_inv(x) * self.psi_inv(x)
            if not (x <= prod * (1.0 + 1e-8) and prod <= 2.0 * x + 1e-8):
                raise InvalidInputError(
                    f"pair {self.describe()}: inverse sandwich fails at {x:g}: "
                    f"product {prod:g} outside [{x:g}, {2 * x:g}]"
                )


def make_pair(
    phi: YoungFunction,
    psi: YoungFunction | None = None,
    *,
    validate: bool = True,
) -> ComplementaryPair:
    """Pair ``phi`` with its conjugate.

    When ``psi`` is not supplied, a catalog member with a known conjugate
    gets the closed form, anything else the numerical conjugate. The pair
    invariants are checked on the validation grid unless disabled.
    """
    phi.validate()
    if psi is not None:
        mode = "closed_form"
    else:
        psi = _closed_form_conjugate(phi)
        if psi is not None:
            mode = "closed_form"
        else:
            psi = numeric_conjugate(phi)
            mode = "numerical"
    pair = ComplementaryPair(phi, psi, mode)
    if validate:
        if mode == "closed_form":
            psi.validate()
        pair.validate()
    return pair


def from_density(
    varphi: Callable[[float], float],
    *,
    label: str = "density",
    validate: bool = True,
) -> ComplementaryPair:
    """Build the pair Phi(x) = int_0^x varphi, Psi(y) = int_0^y varphi^{-1}.

    ``varphi`` must be continuous, strictly increasing, 0 at 0 and
    unbounded; monotonicity is probed on a grid before any quadrature.
    Integrals use adaptive quadrature at 1e-9 relative accuracy.
    """
    probe = [0.0] + default_grid(41)
    vals = [_guarded(varphi, x) for x in probe]
    if vals[0] != 0.0:
        raise InvalidInputError(f"density must vanish at 0, got {vals[0]!r}")
    for a, b, va, vb in zip(probe, probe[1:], vals, vals[1:]):
        if math.isinf(va):
            continue
        if not vb > va:
            raise InvalidInputError(f"density not strictly increasing on [{a:g},{b:g}]")

    def varphi_inv(t: float) -> float:
        if t <= 0.0:
            return 0.0
        hi = 1.0
        for _ in range(4000):
            if varphi(hi) >= t:
                break
            hi *= 2.0
        lo = 0.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if varphi(mid) < t:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def phi_fn(x: float) -> float:
        if x == 0.0:
            return 0.0
        return quad(varphi, 0.0, x, epsabs=0.0, epsrel=1e-9, limit=200)[0]

    def psi_fn(y: float) -> float:
        if y == 0.0:
            return 0.0
        return quad(varphi_inv, 0.0, y, epsabs=0.0, epsrel=1e-9, limit=200)[0]

    phi = YoungFunction(fn=phi_fn, derivative=varphi, label=f"{label}:integral")
    psi = YoungFunction(fn=psi_fn, derivative=varphi_inv, label=f"{label}:integral-inv")
    pair = ComplementaryPair(phi, psi, "quadrature")
    if validate:
        phi.validate(default_grid(21))
        pair.validate(default_grid(9, 1e-3, 1e2))
    return pair


def delta2_estimate(phi: YoungFunction, x_max: float, *, points_per_decade: int = 24) -> float:
    """Sup of Phi(2x)/Phi(x) over a log grid in (0, x_max].

    Returns the sup when it has stabilised (relative growth below 1e-3 over
    the last decade of the grid), else ``math.inf`` as the unbounded flag.
    """
    if x_max <= 0:
        raise InvalidInputError("x_max must be positive")
    lo = min(1e-8, x_max * 1e-10)
    decades = math.log10(x_max / lo)
    n = max(16, int(decades * points_per_decade))
    xs = np.geomspace(lo, x_max, n)
    sup_head = 0.0
    sup_all = 0.0
    cutoff = x_max / 10.0
    for x in xs:
        fx = phi(float(x))
        if fx == 0.0:
            continue
        r = phi(float(2 * x)) / fx
        if math.isinf(r):
            return math.inf
        sup_all = max(sup_all, r)
        if x <= cutoff:
            sup_head = max(sup_head, r)
    if sup_head > 0.0 and sup_all <= sup_head * (1.0 + 1e-3):
        return sup_all
    return math.inf


def strong_equiv_check(
    phi1: YoungFunction,
    phi2: YoungFunction,
    a: float,
    b: float,
    grid: Sequence[float],
) -> bool:
    """True iff Phi1(a*x) <= Phi2(x) <= Phi1(b*x) for every grid x."""
    if not 0 < a <= b:
        raise InvalidInputError(f"need 0 < a <= b, got a={a!r}, b={b!r}")
    if len(grid) == 0:
        raise InvalidInputError("empty grid")
    for x in grid:
        lo, mid, hi = phi1(a * x), phi2(x), phi1(b * x)
        slack = 1e-12 * (1.0 + abs(mid))
        if not (lo <= mid + slack and mid <= hi + slack):
            return False
    return True


def find_strong_equiv_constants(
    phi1: YoungFunction,
    phi2: YoungFunction,
    grid: Sequence[float] | None = None,
) -> tuple[float, float] | None:
    """Grid-search constants (a, b) witnessing strong equivalence, or None."""
    xs = list(grid) if grid is not None else default_grid(41)
    candidates = [2.0 ** k for k in range(-24, 9)]
    a_found = None
    for a in reversed(candidates):
        if all(phi1(a * x) <= phi2(x) * (1.0 + 1e-12) + 1e-300 for x in xs):
            a_found = a
            break
    if a_found is None:
        return None
    for b in candidates:
        if b < a_found:
            continue
        if all(phi2(x) <= phi1(b * x) * (1.0 + 1e-12) + 1e-300 for x in xs):
            return a_found, b
    return None


def sqrt_transform(psi: YoungFunction, grid: Sequence[float] | None = None) -> YoungFunction:
    """The function x -> Psi(sqrt(x)), verified to be a Young function.

    Convexity of the transform is equivalent to Psi'(x)/x being
    nondecreasing; that ratio is probed on a log grid and a violation
    raises :class:`ConvexityError` carrying the abscissa. For the power
    scale x^q/q this accepts exactly q >= 2.
    """
    xs = list(grid) if grid is not None else default_grid(41)
    prev_ratio = None
    prev_x = None
    for x in xs:
        dv = psi.d(x)
        if not math.isfinite(dv):
            break
        ratio = dv / x
        if prev_ratio is not None and ratio < prev_ratio * (1.0 - 1e-6):
            raise ConvexityError(
                f"sqrt transform of {psi.describe()} is not convex: "
                f"Psi'(x)/x decreases from {prev_x:g}",
                x,
            )
        prev_ratio, prev_x = ratio, x
    return YoungFunction(
        fn=lambda x: psi(math.sqrt(x)),
        derivative=(
            (lambda x: psi.derivative(math.sqrt(x)) / (2.0 * math.sqrt(x)) if x > 0 else 0.0)
            if psi.derivative is not None
            else None
        ),
        label=f"sqrt[{psi.describe()}]",
    )


# --------------------------------------------------------------------------
# Named catalog
# --------------------------------------------------------------------------
#
# The entropy-type formulas cancel catastrophically near 0 in their naive
# forms ((1+x)ln(1+x)-x and e^x-x-1 are both ~ x^2/2 there), so tiny
# arguments take a series branch; cosh x - 1 is 2 sinh^2(x/2) exactly.


def _entropy_fn(x: float) -> float:
    if x < 1e-4:
        return x * x * (0.5 + x * (-1.0 / 6.0 + x * (1.0 / 12.0 - x / 20.0)))
    return (1.0 + x) * math.log1p(x) - x


def _expm1mx(x: float) -> float:
    if x < 1e-4:
        return x * x * (0.5 + x * (1.0 / 6.0 + x * (1.0 / 24.0 + x / 120.0)))
    return math.expm1(x) - x


def _coshm1(x: float) -> float:
    s = math.sinh(0.5 * x)
    return 2.0 * s * s


def _power(p: float) -> YoungFunction:
    if p <= 1:
        raise InvalidInputError(f"power family needs p > 1, got {p!r}")
    return YoungFunction(
        fn=lambda x: x ** p / p,
        derivative=lambda x: x ** (p - 1.0),
        label="power",
        params={"p": p},
    )


def _cosh_pow(p: float) -> YoungFunction:
    if p < 1:
        raise InvalidInputError(f"cosh family needs p >= 1, got {p!r}")
    if p == 1.0:
        return YoungFunction(
            fn=_coshm1,
            derivative=math.sinh,
            label="cosh",
            params={"p": 1.0},
        )
    return YoungFunction(
        fn=lambda x: _coshm1(x) ** p,
        derivative=lambda x: p * _coshm1(x) ** (p - 1.0) * math.sinh(x),
        label="cosh",
        params={"p": p},
    )


def _cosh_conjugate() -> YoungFunction:
    # sup x*y - (cosh x - 1) is attained at x = asinh(y); sqrt(1+y^2) - 1
    # is written as y^2/(1 + sqrt(1+y^2)) to stay accurate near 0.
    return YoungFunction(
        fn=lambda y: y * math.asinh(y) - y * y / (1.0 + math.sqrt(1.0 + y * y)),
        derivative=math.asinh,
        label="cosh-conj",
        params={},
    )


def _entropy() -> YoungFunction:
    return YoungFunction(
        fn=_entropy_fn,
        derivative=math.log1p,
        label="entropy",
        params={},
    )


def _exp_taylor(p: float) -> YoungFunction:
    if p < 1:
        raise InvalidInputError(f"exp_taylor family needs p >= 1, got {p!r}")
    if p == 1.0:
        return YoungFunction(
            fn=_expm1mx,
            derivative=lambda x: math.expm1(x),
            label="exp_taylor",
            params={"p": 1.0},
        )
    return YoungFunction(
        fn=lambda x: _expm1mx(x) ** p,
        derivative=lambda x: p * _expm1mx(x) ** (p - 1.0) * math.expm1(x),
        label="exp_taylor",
        params={"p": p},
    )


def _square_log(p: float) -> YoungFunction:
    if p < 1:
        raise InvalidInputError(f"square_log family needs p >= 1, got {p!r}")

    def base(x: float) -> float:
        return x * x * math.log1p(x)

    def dbase(x: float) -> float:
        return 2.0 * x * math.log1p(x) + x * x / (1.0 + x)

    if p == 1.0:
        return YoungFunction(fn=base, derivative=dbase, label="square_log", params={"p": 1.0})
    return YoungFunction(
        fn=lambda x: base(x) ** p,
        derivative=lambda x: p * base(x) ** (p - 1.0) * dbase(x),
        label="square_log",
        params={"p": p},
    )


def _exp_power(p: float) -> YoungFunction:
    if p <= 1:
        raise InvalidInputError(f"exp_power family needs p > 1, got {p!r}")
    return YoungFunction(
        fn=lambda x: math.expm1(x ** p),
        derivative=lambda x: p * x ** (p - 1.0) * math.exp(x ** p) if x > 0 else 0.0,
        label="exp_power",
        params={"p": p},
    )


_FAMILIES: dict[str, Callable[..., YoungFunction]] = {
    "power": _power,
    "cosh": _cosh_pow,
    "entropy": _entropy,
    "exp_taylor": _exp_taylor,
    "square_log": _square_log,
    "exp_power": _exp_power,
}


def catalog_ids() -> list[str]:
    return sorted(_FAMILIES)


def young_from_spec(spec: Mapping[str, object]) -> YoungFunction:
    """Construct a catalog Young function from {"family": id, <params>}."""
    if "family" not in spec:
        raise InvalidInputError(f"young spec missing 'family': {spec!r}")
    family = str(spec["family"])
    maker = _FAMILIES.get(family)
    if maker is None:
        raise InvalidInputError(f"unknown young family {family!r} (known: {catalog_ids()})")
    kwargs = {k: float(v) for k, v in spec.items() if k != "family"}  # type: ignore[arg-type]
    try:
        return maker(**kwargs)
    except TypeError as exc:
        raise InvalidInputError(f"bad parameters for family {family!r}: {kwargs}") from exc


def _closed_form_conjugate(phi: YoungFunction) -> YoungFunction | None:
    if phi.label == "power":
        p = float(phi.params["p"])
        q = p / (p - 1.0)
        return _power(q)
    if phi.label == "cosh" and float(phi.params.get("p", 1.0)) == 1.0:
        return _cosh_conjugate()
    if phi.label == "entropy":
        return YoungFunction(
            fn=_expm1mx,
            derivative=lambda y: math.expm1(y),
            label="exp_taylor",
            params={"p": 1.0},
        )
    if phi.label == "exp_taylor" and float(phi.params.get("p", 1.0)) == 1.0:
        return _entropy()
    return None


def pair_from_spec(spec: Mapping[str, object], *, validate: bool = True) -> ComplementaryPair:
    """Construct a complementary pair from a family spec (CLI-shared naming)."""
    return make_pair(young_from_spec(spec), validate=validate)


_CATALOG_SPECS: tuple[tuple[str, dict[str, float]], ...] = (
    ("power", {"p": 1.5}),
    ("power", {"p": 2.0}),
    ("power", {"p": 3.0}),
    ("cosh", {"p": 1.0}),
    ("entropy", {}),
    ("exp_taylor", {"p": 1.0}),
    ("cosh", {"p": 2.0}),
    ("exp_taylor", {"p": 2.0}),
    ("square_log", {"p": 1.0}),
    ("exp_power", {"p": 2.0}),
)


@lru_cache(maxsize=1)
def _catalog_cached() -> tuple[ComplementaryPair, ...]:
    pairs = []
    for family, params in _CATALOG_SPECS:
        spec: dict[str, object] = {"family": family, **params}
        pairs.append(pair_from_spec(spec))
    return tuple(pairs)


def catalog() -> list[ComplementaryPair]:
    """Default instantiation of the named families as validated pairs.

    Power appears at p in {1.5, 2, 3}; the cosh, entropy and exp_taylor
    families carry closed-form conjugates at p=1; the remaining entries
    ((cosh x - 1)^2, (e^x - x - 1)^2, x^2 ln(1+x), e^{x^2} - 1) use the
    numerical conjugate.
    """
    return list(_catalog_cached())
