import math

import numpy as np
import pytest

from boolclt import (bernoulli, boolean_cumulants, clt_iterate, convergence_table, dilate,
                     example_measure, levy_distance, make_measure, sharpness_measure,
                     standardize, static_levy_bound, thm1_bound, thm2_structure)
from boolclt.corpus import random_corpus
from boolclt.errors import InvalidArgument, PreconditionViolation
from boolclt.verify import pairwise_clt

K_EXAMPLE = (1 + math.sqrt(5)) / 2


def test_bernoulli_is_a_fixed_point():
    b = bernoulli()
    for n in (1, 2, 17, 10 ** 6):
        assert clt_iterate(b, n).allclose(b, atol=1e-12)


@pytest.mark.parametrize("n", [1, 2, 5, 10, 25, 100, 10 ** 4])
def test_example_matches_closed_form(n):
    mu_n = clt_iterate(example_measure(1), n)
    assert mu_n.max_deviation(example_measure(n)) <= 1e-8


def test_example_at_25():
    # s = sqrt(101), t = 10
    x, y = example_measure(25).x
    s = math.sqrt(101)
    assert x == pytest.approx((1 - s) / 10, abs=1e-15)
    assert y == pytest.approx((1 + s) / 10, abs=1e-15)
    assert example_measure(25).w[0] == pytest.approx((s + 1) / (2 * s), abs=1e-15)


@pytest.mark.parametrize("n", [1, 2, 5, 10, 100, 10 ** 4])
def test_example_levy_window(n):
    lv = levy_distance(clt_iterate(example_measure(1), n), bernoulli())
    assert lv >= 1 / (6 * math.sqrt(n))
    if math.sqrt(n) > K_EXAMPLE:
        assert lv <= 2 * K_EXAMPLE / math.sqrt(n)


def test_clt_matches_pairwise_path():
    for mu in random_corpus(seed=3, size=10, max_atoms=4):
        for n in range(1, 6):
            assert clt_iterate(mu, n).max_deviation(pairwise_clt(mu, n)) <= 1e-8


def test_clt_rejects_bad_input():
    with pytest.raises(PreconditionViolation):
        clt_iterate(make_measure([(0.0, 0.5), (3.0, 0.5)]), 2)
    for n in (0, -1, 2.5):
        with pytest.raises(InvalidArgument):
            clt_iterate(bernoulli(), n)


def test_r4_scales_as_one_over_n():
    mu = random_corpus(size=1)[0]
    r4 = boolean_cumulants(mu, 4)[3]
    for n in (1, 3, 64, 4096):
        assert boolean_cumulants(clt_iterate(mu, n), 4)[3] == pytest.approx(r4 / n, rel=1e-8)


def test_thm1_bound_value():
    assert thm1_bound(sharpness_measure(0.1), 1000) == pytest.approx(0.0440972, abs=1e-7)
    assert thm1_bound(bernoulli(), 5) == 0.0
    assert static_levy_bound(sharpness_measure(0.1)) == thm1_bound(sharpness_measure(0.1), 1)
    with pytest.raises(InvalidArgument):
        thm1_bound(dilate(bernoulli(), 0.5), 1)


def test_thm1_bound_holds_on_corpus_sample():
    b = bernoulli()
    for mu in random_corpus(size=20):
        for n in (1, 4, 64, 1024):
            assert levy_distance(clt_iterate(mu, n), b) <= thm1_bound(mu, n) + 1e-9


def test_thm2_report_for_example():
    rep = thm2_structure(example_measure(1), K_EXAMPLE, 100)
    h = K_EXAMPLE / 10
    assert rep.passed, rep.failing()
    assert rep.r == 0.0 and rep.thm2_bound == pytest.approx(2 * h)
    assert rep.x1 < -h and rep.x2 > h


def test_thm2_bulk_mass_for_three_atoms():
    mu = standardize(make_measure([(-1.2, 0.3), (0.0, 0.1), (1.0, 0.6)]))
    k = mu.support_radius
    rep = thm2_structure(mu, None, 400)
    assert rep.k_bound == k
    assert rep.p + rep.q + rep.r == pytest.approx(1.0)
    assert 0 < rep.r < 4 * k / 20
    assert rep.passed, rep.failing()


def test_thm2_preconditions():
    with pytest.raises(PreconditionViolation):
        thm2_structure(example_measure(1), K_EXAMPLE, 2)
    with pytest.raises(PreconditionViolation):
        thm2_structure(example_measure(1), 1.0, 100)


def test_thm2_flags_single_outside_atom():
    # the Example at n = 3: h = K/sqrt(3) > 1/2 and the left atom sits inside the bulk
    rep = thm2_structure(example_measure(1), K_EXAMPLE, 3)
    h = K_EXAMPLE / math.sqrt(3)
    assert -h < rep.x1 < 0 and rep.x2 > h
    assert rep.failing() == ["two_atoms_outside_bulk"]


def test_thm2_holds_when_bulk_is_narrow():
    # with h < 1/2 the two extreme zeros of F are forced outside the bulk
    for mu in random_corpus(size=40):
        k = mu.support_radius
        n = math.floor((2 * k) ** 2) + 1
        rep = thm2_structure(mu, k, n)
        assert rep.passed, (n, rep.failing())


def test_convergence_table():
    rows = convergence_table(example_measure(1), [1, 2, 4, 100])
    assert [r.n for r in rows] == [1, 2, 4, 100]
    assert rows[0].thm2_bound is None and rows[1].thm2_bound is None
    assert rows[2].thm2_bound == pytest.approx(K_EXAMPLE)
    assert rows[3].thm2_bound == pytest.approx(2 * K_EXAMPLE / 10)
    for r in rows:
        assert r.levy <= r.kolmogorov
        assert r.m4 == pytest.approx(1 + boolean_cumulants(example_measure(1), 4)[3] / r.n, rel=1e-9)
    assert rows[0].vacuous
    with pytest.raises(InvalidArgument):
        convergence_table(bernoulli(), [4, 2])
    with pytest.raises(InvalidArgument):
        convergence_table(bernoulli(), [])


def test_levy_decreases_kolmogorov_does_not():
    rows = convergence_table(example_measure(1), [1, 10, 100, 10 ** 4])
    levy = np.array([r.levy for r in rows])
    assert np.all(np.diff(levy) < 0) and levy[-1] < 0.02
    assert all(r.kolmogorov >= 0.5 for r in rows)


@pytest.mark.parametrize("n", [2, 9, 1000])
def test_thm2_report_for_bernoulli(n):
    rep = thm2_structure(bernoulli(), 1.0, n)
    assert (rep.x1, rep.x2, rep.r) == (pytest.approx(-1.0), pytest.approx(1.0), 0.0)
    assert rep.p == pytest.approx(0.5) and rep.q == pytest.approx(0.5)
    assert rep.passed


def test_thm2_report_for_sharpness_family():
    k = math.sqrt(1.2)
    rep = thm2_structure(sharpness_measure(0.2), k, 100)
    assert abs(rep.x1 + 1) <= k / 10 and abs(rep.x2 - 1) <= k / 10
    assert rep.r < 4 * k / 10
    assert rep.passed, rep.failing()


def test_thm2_example_at_25():
    rep = thm2_structure(example_measure(1), K_EXAMPLE, 25)
    s = math.sqrt(101)
    assert rep.x1 == pytest.approx((1 - s) / 10, abs=1e-9)
    assert rep.p == pytest.approx((s + 1) / (2 * s), abs=1e-9)
    assert rep.passed
