from __future__ import annotations

import math

import pytest

from conftest import seeded_rng
from orliczlat.algebra import (
    AlgebraContext,
    classify_trend,
    conv_inclusion_check,
    convolve,
    flip,
    l1_module_check,
    pointwise_inclusion_check,
    sqrt_pair_inequality_check,
    submult_estimate,
)
from orliczlat.errors import PreconditionError, ResourceLimitError
from orliczlat.finsupp import FinSuppFn
from orliczlat.norms import luxemburg_norm, weighted_l1_norm
from orliczlat.sampling import random_finsupp
from orliczlat.weights import polynomial_weight, subexp_alpha_weight
from orliczlat.young import default_grid, inverse, pair_from_spec


def conv_oracle(f: FinSuppFn, g: FinSuppFn) -> dict:
    """Independent double-sum convolution."""
    out: dict = {}
    for p, a in f:
        for q, b in g:
            key = tuple(x + y for x, y in zip(p, q))
            out[key] = out.get(key, 0.0) + a * b
    return {k: v for k, v in out.items() if v != 0}


# -- convolution ----------------------------------------------------------------


def test_convolve_deltas():
    assert convolve(FinSuppFn.delta(2), FinSuppFn.delta(3)) == FinSuppFn.delta(5)
    a, b = FinSuppFn.delta((1, -2)), FinSuppFn.delta((3, 3))
    assert convolve(a, b) == FinSuppFn.delta((4, 1))


def test_convolve_box_example():
    box = FinSuppFn.indicator([(-1,), (0,), (1,)])
    c = convolve(box, box)
    assert c[(0,)] == pytest.approx(3.0)
    assert c.support() == [(-2,), (-1,), (0,), (1,), (2,)]


def test_convolve_matches_oracle_and_commutes():
    for t in range(50):
        rng = seeded_rng(20, t)
        d = 1 + t % 2
        f = random_finsupp(d, 5, rng, max_support=10)
        g = random_finsupp(d, 5, rng, max_support=10)
        got = convolve(f, g)
        assert dict(got.entries) == pytest.approx(conv_oracle(f, g))
        # commutative up to summation order (last-ulp reassociation)
        other = convolve(g, f)
        assert got.support() == other.support()
        for p, v in got:
            assert v == pytest.approx(other[p], rel=1e-12, abs=1e-15)


def test_convolve_associative():
    for t in range(20):
        rng = seeded_rng(21, t)
        f = random_finsupp(1, 4, rng, max_support=6)
        g = random_finsupp(1, 4, rng, max_support=6)
        h = random_finsupp(1, 4, rng, max_support=6)
        left = convolve(convolve(f, g), h)
        right = convolve(f, convolve(g, h))
        assert left.support() == right.support()
        for p, v in left:
            assert v == pytest.approx(right[p], rel=1e-9, abs=1e-12)


def test_convolve_identity_exact():
    for t in range(10):
        f = random_finsupp(2, 5, seeded_rng(22, t), max_support=12)
        assert convolve(FinSuppFn.delta((0, 0)), f) == f


def test_convolve_budget():
    big = FinSuppFn.indicator([(k,) for k in range(4000)])
    with pytest.raises(ResourceLimitError):
        convolve(big, big)


# -- flip --------------------------------------------------------------------------


def test_flip_examples():
    assert flip(FinSuppFn.delta((3, -1))) == FinSuppFn.delta((-3, 1))
    for t in range(10):
        f = random_finsupp(1, 5, seeded_rng(23, t), max_support=8)
        g = random_finsupp(1, 5, seeded_rng(24, t), max_support=8)
        assert flip(flip(f)) == f
        assert flip(convolve(f, g)) == convolve(flip(f), flip(g))


# -- trend classifier ---------------------------------------------------------------


def test_classify_trend_thresholds():
    assert classify_trend(1.0, 1.1) == "plateau"
    assert classify_trend(1.0, 1.30) == "growth"
    assert classify_trend(1.0, 1.2) == "indeterminate"
    assert classify_trend(0.0, 1.0) == "indeterminate"


# -- submultiplicativity scans ---------------------------------------------------------


def test_submult_plateau_in_algebra_regime():
    pair = pair_from_spec({"family": "power", "p": 1.5})
    ctx = AlgebraContext(pair, polynomial_weight(0.7), 1)
    rep = submult_estimate(ctx, 64, trials=60, seed=11)
    assert rep.trend == "plateau", rep.per_radius
    assert rep.certificate == "empirical"


def test_submult_growth_without_weight():
    # the unweighted p=2 space is not a convolution algebra on the line;
    # ball indicators make the ratio grow like sqrt(radius)
    pair = pair_from_spec({"family": "power", "p": 2})
    ctx = AlgebraContext(pair, polynomial_weight(0.0), 1)
    rep = submult_estimate(ctx, 64, trials=60, seed=11)
    assert rep.trend == "growth", rep.per_radius
    first, last = rep.per_radius[0]["max_ratio"], rep.per_radius[-1]["max_ratio"]
    assert last >= 1.25 * first


def test_submult_identity_atom_ratio_is_phi_inverse_of_one():
    # delta_0 is the convolution identity, so the ratio reduces to
    # 1/N(delta_0) = inv(Phi)(1); with the x^p/p normalisation this is
    # p^(1/p), not 1.
    pair = pair_from_spec({"family": "power", "p": 1.5})
    ctx = AlgebraContext(pair, polynomial_weight(0.7), 1)
    f = FinSuppFn.delta(0)
    ratio = ctx.weighted_luxemburg(convolve(f, f)) / ctx.weighted_luxemburg(f) ** 2
    assert ratio == pytest.approx(inverse(pair.phi, 1.0), rel=1e-9)


# -- module scan ------------------------------------------------------------------------


def test_l1_module_translate_bound():
    pair = pair_from_spec({"family": "power", "p": 1.5})
    w = polynomial_weight(0.7)
    ctx = AlgebraContext(pair, w, 1)
    for a in (-5, 0, 3, 17):
        da = FinSuppFn.delta(a)
        for t in range(5):
            g = random_finsupp(1, 6, seeded_rng(25, a % 7, t), max_support=8)
            num = ctx.weighted_luxemburg(convolve(da, g))
            den = weighted_l1_norm(w, da) * ctx.weighted_luxemburg(g)
            assert num <= den * (1.0 + 1e-9)


def test_l1_module_plateau_unweighted_l2():
    pair = pair_from_spec({"family": "power", "p": 2})
    ctx = AlgebraContext(pair, polynomial_weight(0.0), 1)
    rep = l1_module_check(ctx, 64, trials=40, seed=12)
    assert rep.trend == "plateau"
    assert all(row["max_ratio"] <= 1.0 + 1e-9 for row in rep.per_radius)


# -- sqrt-pair machinery ------------------------------------------------------------------


def test_sqrt_pair_inequalities_power_and_entropy():
    grid = [float(x) for x in default_grid(41, 1e-3, 1e3)]
    assert sqrt_pair_inequality_check(pair_from_spec({"family": "power", "p": 1.5}), grid)
    assert sqrt_pair_inequality_check(pair_from_spec({"family": "entropy"}), grid)
    assert sqrt_pair_inequality_check(pair_from_spec({"family": "power", "p": 2}), grid)


def test_sqrt_pair_rejection_raises_precondition():
    pair = pair_from_spec({"family": "power", "p": 3})  # psi is x^1.5/1.5
    with pytest.raises(PreconditionError):
        sqrt_pair_inequality_check(pair, default_grid(11, 1e-2, 1e2))
    with pytest.raises(PreconditionError):
        conv_inclusion_check(pair, 8, 4, 1)


def test_conv_inclusion_single_atom_and_plateau():
    pair = pair_from_spec({"family": "power", "p": 1.5})
    rep = conv_inclusion_check(pair, 32, trials=40, seed=13)
    assert rep.trend == "plateau", rep.per_radius
    # closed-form single-atom ratio
    from orliczlat.algebra import _sqrt_pair

    psi_tilde, _ = _sqrt_pair(pair)
    d0 = FinSuppFn.delta(0)
    ratio = luxemburg_norm(pair.psi, d0) / (
        luxemburg_norm(psi_tilde, d0) * luxemburg_norm(pair.phi, d0)
    )
    expected = (1.0 / inverse(pair.psi, 1.0)) / (
        (1.0 / inverse(psi_tilde, 1.0)) * (1.0 / inverse(pair.phi, 1.0))
    )
    assert ratio == pytest.approx(expected, rel=1e-10)
    assert math.isfinite(ratio) and ratio > 0


def test_pointwise_inclusion_single_atom_and_plateau():
    pair = pair_from_spec({"family": "power", "p": 1.5})
    rep = pointwise_inclusion_check(pair, 16, trials=15, seed=13)
    assert rep.trend == "plateau", rep.per_radius
    assert rep.max_ratio > 0


def test_scan_report_serialises():
    pair = pair_from_spec({"family": "power", "p": 2})
    ctx = AlgebraContext(pair, polynomial_weight(0.0), 1)
    rep = l1_module_check(ctx, 8, trials=5, seed=3)
    obj = rep.to_json_obj()
    assert obj["certificate"] == "empirical"
    assert {"op", "params", "max_ratio", "per_radius", "trend"} <= set(obj)


# -- weighted algebra context across weights ------------------------------------------------


def test_submult_plateau_subexponential():
    pair = pair_from_spec({"family": "power", "p": 2})
    ctx = AlgebraContext(pair, subexp_alpha_weight(0.5, 1.0), 1)
    rep = submult_estimate(ctx, 48, trials=40, seed=14)
    assert rep.trend == "plateau", rep.per_radius
