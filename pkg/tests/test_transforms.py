import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolclt import (Polynomial, RationalFn, auxiliary_measure, bernoulli, boolean_convolve,
                     boolean_cumulants, boolean_power, cauchy_transform, dilate, dirac,
                     example_measure, f_transform, k_transform, make_measure, recover_measure,
                     stieltjes_density_sample, transform_bundle)
from boolclt.corpus import random_corpus, random_measure
from boolclt.errors import InvalidArgument, NotAMeasure, PreconditionViolation
from boolclt.transforms import k_partial_fractions, measure_from_k_partial_fractions
from conftest import measures

P = Polynomial
GOLDEN = (1 + math.sqrt(5)) / 2


def test_cauchy_of_bernoulli():
    g = cauchy_transform(bernoulli())
    assert g.num.allclose(P([0, 1])) and g.den == P([-1, 0, 1])


def test_transforms_of_example():
    t = transform_bundle(example_measure(1))
    assert t.f.num.allclose(P([-1, -1, 1]), atol=1e-14)
    assert t.f.den.allclose(P([-1, 1]), atol=1e-14)
    assert t.k.num.allclose(P([1]), atol=1e-14)
    assert t.source_atoms == 2


def test_k_of_bernoulli_and_dirac():
    k = k_transform(bernoulli())
    assert k.num.allclose(P([1])) and k.den == P([0, 1])
    k = k_transform(dirac(2.5))
    assert k.num == P([2.5]) and k.den == P([1])


def test_self_convolution_of_bernoulli():
    mu = boolean_convolve(bernoulli(), bernoulli())
    assert mu.allclose(make_measure([(-math.sqrt(2), 0.5), (math.sqrt(2), 0.5)]), atol=1e-14)


def test_dirac_at_zero_is_identity():
    mu = random_measure(np.random.default_rng(3))
    assert boolean_convolve(mu, dirac(0.0)).allclose(mu, atol=1e-12)


def test_convolving_diracs_adds_positions():
    assert boolean_convolve(dirac(1.0), dirac(2.0)).allclose(dirac(3.0))


@given(measures(max_atoms=12, min_gap=0.1))
@settings(max_examples=100, deadline=None)
def test_recover_inverts_f(mu):
    assert recover_measure(f_transform(mu)).allclose(mu, atol=1e-8)


@given(measures(), st.floats(0.2, 5))
@settings(deadline=None)
def test_dilation_covariance(mu, a):
    f, fa = f_transform(mu), f_transform(dilate(mu, a))
    for z in (0.3 + 1j, -2 + 0.5j, 4j):
        assert fa(z) == pytest.approx(a * f(z / a), rel=1e-9, abs=1e-9)


@given(measures())
@settings(deadline=None)
def test_f_is_herglotz_and_g_has_no_zeros_above(mu):
    f, g = f_transform(mu), cauchy_transform(mu)
    for z in (0.1j, 1 + 0.01j, -3 + 2j, 0.5 + 10j):
        assert f(z).imag >= z.imag * (1 - 1e-9)
        assert abs(g(z)) > 0
        assert g(z).imag < 0


@given(measures(max_atoms=4), measures(max_atoms=4), measures(max_atoms=4))
@settings(max_examples=60, deadline=None)
def test_convolution_commutative_associative(a, b, c):
    assert boolean_convolve(a, b).allclose(boolean_convolve(b, a), atol=1e-9)
    lhs = boolean_convolve(boolean_convolve(a, b), c)
    rhs = boolean_convolve(a, boolean_convolve(b, c))
    assert lhs.allclose(rhs, atol=1e-8)


def test_cumulants_add_under_convolution():
    rng = np.random.default_rng(11)
    for _ in range(100):
        mu, nu = random_measure(rng), random_measure(rng)
        lhs = boolean_cumulants(boolean_convolve(mu, nu), 5)
        rhs = np.add(boolean_cumulants(mu, 5), boolean_cumulants(nu, 5))
        assert np.allclose(lhs, rhs, rtol=1e-8, atol=1e-8)


def test_power_matches_repeated_convolution():
    for mu in random_corpus(seed=5, size=10, max_atoms=4):
        acc = mu
        for t in range(2, 6):
            acc = boolean_convolve(acc, mu)
            assert acc.allclose(boolean_power(mu, t), atol=1e-9)


def test_power_edge_cases():
    mu = example_measure(1)
    assert boolean_power(mu, 0) == dirac(0.0)
    assert boolean_power(mu, 1).allclose(mu, atol=1e-12)
    half = boolean_power(mu, 0.5)
    assert boolean_convolve(half, half).allclose(mu, atol=1e-9)
    with pytest.raises(InvalidArgument):
        boolean_power(mu, -1)


def test_partial_fractions_reconstruct_k():
    mu = make_measure([(-1.0, 0.2), (0.5, 0.3), (2.0, 0.5)])
    c, poles, res = k_partial_fractions(mu)
    k = k_transform(mu)
    for z in (1j, 0.7 + 0.2j, -3.0 + 0j):
        assert c + np.sum(res / (z - poles)) == pytest.approx(k(z), rel=1e-10)
    assert measure_from_k_partial_fractions(c, poles, res).allclose(mu, atol=1e-12)
    with pytest.raises(NotAMeasure):
        measure_from_k_partial_fractions(0.0, [0.0], [-1.0])


def test_auxiliary_measure():
    assert auxiliary_measure(bernoulli()).allclose(dirac(0.0), atol=1e-14)
    assert auxiliary_measure(example_measure(1)).allclose(dirac(1.0), atol=1e-12)
    with pytest.raises(PreconditionViolation):
        auxiliary_measure(dirac(1.0))


def test_auxiliary_measure_relation():
    for mu in random_corpus(size=10):
        nu = auxiliary_measure(mu)
        f, g = f_transform(mu), cauchy_transform(nu)
        for z in (0.2 + 1j, -1 + 0.3j):
            assert f(z) == pytest.approx(z - g(z), rel=1e-9)


def test_recover_rejects_non_measures():
    with pytest.raises(NotAMeasure):
        recover_measure(RationalFn(P([1, 0, 1]), P([0, 1])))   # complex zeros
    with pytest.raises(NotAMeasure):
        recover_measure(RationalFn(P([-1, 0, 1]), P([-2, 1])))  # negative weight
    with pytest.raises(NotAMeasure):
        recover_measure(RationalFn(P([0, 0, 2]), P([0, 1])))    # not z + O(1)


def test_stieltjes_samples():
    assert stieltjes_density_sample(cauchy_transform(dirac(0.0)), 0.0, 0.01) == pytest.approx(100 / math.pi)
    g = cauchy_transform(bernoulli())
    assert stieltjes_density_sample(g, 0.0, 0.1) == pytest.approx(0.1 / (1.01 * math.pi))
    with pytest.raises(InvalidArgument):
        stieltjes_density_sample(g, 0.0, 0.0)


def test_stieltjes_mass_near_atom():
    # integrating the smoothed density across an atom recovers its weight
    mu = example_measure(1)
    g = cauchy_transform(mu)
    eps, h = 1e-3, 1e-5
    xs = np.arange(GOLDEN - 0.5, GOLDEN + 0.5, h)
    dens = np.array([stieltjes_density_sample(g, x, eps) for x in xs])
    assert dens.sum() * h == pytest.approx(mu.w[1], abs=2e-3)
