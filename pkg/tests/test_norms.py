from __future__ import annotations

import math

import pytest

from conftest import seeded_rng
from orliczlat.errors import NumericalFailureError
from orliczlat.finsupp import FinSuppFn
from orliczlat.norms import (
    holder_check,
    luxemburg_norm,
    modular,
    orlicz_norm,
    weighted_l1_norm,
    weighted_norm,
)
from orliczlat.sampling import random_finsupp
from orliczlat.weights import polynomial_weight
from orliczlat.young import YoungFunction, inverse, young_from_spec


def power_lux_closed_form(p: float, f: FinSuppFn) -> float:
    """Oracle: for Phi = x^p/p the Luxemburg norm is p^(-1/p) ||f||_p."""
    return (sum(abs(v) ** p for _, v in f)) ** (1.0 / p) * p ** (-1.0 / p)


def naive_luxemburg(phi, f: FinSuppFn, iters: int = 120) -> float:
    """Independent coarse bisection straight from the definition."""
    if f.is_zero:
        return 0.0
    lo, hi = 1e-9, 1.0
    while modular(phi, f.scale(1.0 / hi)) > 1.0:
        hi *= 2.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if modular(phi, f.scale(1.0 / mid)) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


# -- modular -------------------------------------------------------------------


def test_modular_examples():
    p2 = young_from_spec({"family": "power", "p": 2})
    assert modular(p2, FinSuppFn.zero(1)) == 0.0
    f = FinSuppFn(1, {(0,): 3.0, (1,): 4.0})
    assert modular(p2, f) == pytest.approx(12.5, rel=1e-15)
    et = young_from_spec({"family": "exp_taylor", "p": 1})
    assert modular(et, FinSuppFn.delta(0)) == pytest.approx(math.e - 2.0, rel=1e-12)


# -- luxemburg -------------------------------------------------------------------


def test_luxemburg_zero():
    p2 = young_from_spec({"family": "power", "p": 2})
    assert luxemburg_norm(p2, FinSuppFn.zero(1)) == 0.0


def test_luxemburg_single_atom_closed_form():
    for p in (1.5, 2.0, 3.0):
        phi = young_from_spec({"family": "power", "p": p})
        for c in (0.25, 1.0, 7.5):
            f = FinSuppFn.delta(0, c)
            expected = c / inverse(phi, 1.0)
            assert luxemburg_norm(phi, f) == pytest.approx(expected, rel=1e-10)
            assert expected == pytest.approx(c * p ** (-1.0 / p), rel=1e-10)


def test_luxemburg_matches_p_norm_identity_and_naive_bisection():
    for p in (1.5, 2.0, 3.0):
        phi = young_from_spec({"family": "power", "p": p})
        for t in range(20):
            f = random_finsupp(1, 8, seeded_rng(1, t), max_support=12)
            got = luxemburg_norm(phi, f)
            assert got == pytest.approx(power_lux_closed_form(p, f), rel=1e-8)
            assert got == pytest.approx(naive_luxemburg(phi, f), rel=1e-8)


def test_luxemburg_unit_modular_characterisation(catalog_pairs):
    for pair in catalog_pairs[:6]:
        for t in range(10):
            f = random_finsupp(1, 6, seeded_rng(2, t), max_support=8)
            n = luxemburg_norm(pair.phi, f)
            m = modular(pair.phi, f.scale(1.0 / n))
            assert m <= 1.0 + 1e-12
            assert m >= 1.0 - 1e-6


def test_luxemburg_norm_axioms(power_pair_15):
    phi = power_pair_15.phi
    for t in range(50):
        rng = seeded_rng(3, t)
        f = random_finsupp(1, 6, rng, max_support=10)
        g = random_finsupp(1, 6, rng, max_support=10)
        c = complex(rng.standard_normal(), rng.standard_normal())
        assert luxemburg_norm(phi, f.scale(c)) == pytest.approx(
            abs(c) * luxemburg_norm(phi, f), rel=1e-9
        )
        assert luxemburg_norm(phi, f + g) <= (
            luxemburg_norm(phi, f) + luxemburg_norm(phi, g)
        ) * (1.0 + 1e-9)


# -- orlicz ----------------------------------------------------------------------


def test_orlicz_zero_and_single_atom(power_pair_2):
    assert orlicz_norm(power_pair_2, FinSuppFn.zero(1)) == 0.0
    got = orlicz_norm(power_pair_2, FinSuppFn.delta(0))
    assert got == pytest.approx(math.sqrt(2.0), rel=1e-9)


def test_orlicz_single_atom_duality_closed_form(catalog_pairs):
    # sup over one coordinate: ||c d0||_Phi = c * inv(Psi)(1)
    for pair in catalog_pairs:
        expected = 2.5 * inverse(pair.psi, 1.0)
        got = orlicz_norm(pair, FinSuppFn.delta(0, 2.5))
        assert got == pytest.approx(expected, rel=1e-8), pair.describe()


def test_orlicz_sandwich_on_random_inputs(catalog_pairs):
    for pair in catalog_pairs:
        for t in range(50):
            f = random_finsupp(1, 6, seeded_rng(4, t), max_support=10)
            n = luxemburg_norm(pair.phi, f)
            o = orlicz_norm(pair, f)
            assert n * (1 - 1e-9) <= o <= 2 * n * (1 + 1e-9), pair.describe()


def test_orlicz_gate_catches_wrong_derivative(power_pair_2):
    # A deliberately wrong closed-form derivative must trip the sandwich
    # gate rather than return silently.
    broken_phi = YoungFunction(
        fn=lambda x: x * x / 2.0, derivative=lambda x: 0.2 * x, label="broken"
    )
    broken_pair = type(power_pair_2)(broken_phi, power_pair_2.psi, "closed_form")
    f = FinSuppFn(1, {(0,): 1.0, (1,): 2.0})
    with pytest.raises(NumericalFailureError):
        orlicz_norm(broken_pair, f)


# -- weighted ---------------------------------------------------------------------


def test_weighted_norm_trivial_weight_matches_unweighted(power_pair_15):
    one = polynomial_weight(0.0)
    for t in range(10):
        f = random_finsupp(1, 5, seeded_rng(5, t), max_support=8)
        assert weighted_norm(power_pair_15.phi, one, f) == pytest.approx(
            luxemburg_norm(power_pair_15.phi, f), rel=1e-12
        )


def test_weighted_norm_single_atom_with_polynomial_weight():
    # f = delta_3, weight (1+|x|)^1: the weighted function is 4*delta_3, so
    # the norm is 4 / inv(Phi)(1) = 2*sqrt(2) for Phi = x^2/2.
    p2 = young_from_spec({"family": "power", "p": 2})
    w = polynomial_weight(1.0)
    got = weighted_norm(p2, w, FinSuppFn.delta(3))
    assert got == pytest.approx(4.0 / math.sqrt(2.0), rel=1e-10)
    assert got == pytest.approx(2.0 * math.sqrt(2.0), rel=1e-10)


def test_weighted_norm_monotone_in_magnitude(power_pair_15):
    w = polynomial_weight(0.7)
    phi = power_pair_15.phi
    for t in range(20):
        rng = seeded_rng(6, t)
        f = random_finsupp(1, 6, rng, max_support=10)
        # |g| >= |f| pointwise, same support plus one extra atom
        entries = {p: v * (1.0 + float(rng.uniform(0.0, 2.0))) for p, v in f}
        entries[(9,)] = entries.get((9,), 0) + 1.0
        g = FinSuppFn(1, entries)
        assert weighted_norm(phi, w, f) <= weighted_norm(phi, w, g) * (1 + 1e-12)


def test_weighted_l1_norm():
    w = polynomial_weight(1.0)
    f = FinSuppFn(1, {(0,): 1.0, (2,): -2.0})
    assert weighted_l1_norm(w, f) == pytest.approx(1.0 + 2.0 * 3.0, rel=1e-15)


# -- holder ------------------------------------------------------------------------


def test_holder_zero_input(power_pair_2):
    rep = holder_check(power_pair_2, FinSuppFn.zero(1), FinSuppFn.delta(0))
    assert rep.lhs == 0.0 and rep.ok


def test_holder_single_atoms(power_pair_2):
    rep = holder_check(power_pair_2, FinSuppFn.delta(0), FinSuppFn.delta(0))
    assert rep.lhs == pytest.approx(1.0, rel=1e-12)
    assert rep.rhs >= 1.0 - 1e-9
    assert rep.ok


def test_holder_property_suite(catalog_pairs):
    for pair in catalog_pairs:
        for t in range(100):
            rng = seeded_rng(7, t)
            f = random_finsupp(1, 4, rng, max_support=6)
            g = random_finsupp(1, 4, rng, max_support=6)
            rep = holder_check(pair, f, g)
            assert rep.ok, (pair.describe(), t, rep)
