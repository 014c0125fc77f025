"""Invariant suite run by ``boolclt verify``.

Each predicate returns a :class:`PredicateResult`; the first violating
instance is kept in serialized form so it can be replayed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .clt import clt_iterate, static_levy_bound, thm1_bound, thm2_structure
from .corpus import DEFAULT_SEED, random_corpus
from .measure import (AtomicMeasure, bernoulli, boolean_cumulants, dilate, levy_distance, moment,
                      sharpness_measure, square_pushforward, variance)
from .transforms import boolean_convolve

CLT_NS = tuple(2 ** k for k in range(15))
SHARPNESS_EPS = (0.3, 0.2, 0.1, 0.05)
CHEBYSHEV_EPS = (0.5, 0.25, 0.1)
ORACLE_MAX_ATOMS = 4
ORACLE_SUBCORPUS = 50
ORACLE_MAX_N = 8

LEVY_SLACK = 1e-9
ORACLE_TOL = 1e-8
CUMULANT_RTOL = 1e-8
VARIANCE_TOL = 1e-8


@dataclass
class PredicateResult:
    name: str
    checked: int = 0
    violations: int = 0
    vacuous: int = 0
    first_failure: Optional[dict] = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, **instance):
        self.violations += 1
        if self.first_failure is None:
            self.first_failure = _jsonable(instance)

    def as_dict(self) -> dict:
        out = {"checked": self.checked, "violations": self.violations, "passed": self.passed}
        if self.vacuous:
            out["vacuous"] = self.vacuous
        if self.notes:
            out["notes"] = self.notes
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        return out


def _jsonable(obj):
    if isinstance(obj, AtomicMeasure):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def check_theorem1(corpus, ns=CLT_NS) -> PredicateResult:
    res = PredicateResult("theorem1_rate")
    b = bernoulli()
    for mu in corpus:
        for n in ns:
            bound = thm1_bound(mu, n)
            levy = levy_distance(clt_iterate(mu, n), b)
            res.checked += 1
            if bound >= 1.0:
                res.vacuous += 1
            if levy > bound + LEVY_SLACK:
                res.fail(measure=mu, n=n, levy=levy, bound=bound)
    return res


def check_theorem2(corpus, ns=CLT_NS) -> PredicateResult:
    res = PredicateResult("theorem2_structure")
    by_check: dict[str, int] = {}
    worst_h = {}
    for mu in corpus:
        k = mu.support_radius
        for n in ns:
            if not math.sqrt(n) > k:
                continue
            rep = thm2_structure(mu, k, n)
            res.checked += 1
            if not rep.passed:
                bad = rep.failing()
                for name in bad:
                    by_check[name] = by_check.get(name, 0) + 1
                    worst_h[name] = min(worst_h.get(name, math.inf), k / math.sqrt(n))
                res.fail(measure=mu, n=n, k_bound=k, failing_checks=bad,
                         x1=rep.x1, x2=rep.x2, p=rep.p, q=rep.q, r=rep.r)
    if by_check:
        res.notes = {"violations_by_check": by_check,
                     "smallest_failing_k_over_sqrt_n": worst_h}
    return res


def check_sharpness(eps_values=SHARPNESS_EPS) -> PredicateResult:
    res = PredicateResult("sharpness_family")
    b = bernoulli()
    for eps in eps_values:
        mu = sharpness_measure(eps)
        res.checked += 1
        m4 = moment(mu, 4)
        levy = levy_distance(mu, b)
        if abs(m4 - (1 + 2 * eps ** 3)) > 1e-12 or levy < eps / 4:
            res.fail(eps=eps, m4=m4, levy=levy)
    return res


def pairwise_clt(mu: AtomicMeasure, n: int) -> AtomicMeasure:
    """n-fold Boolean convolution by repeated pairwise self-energy addition,
    then dilation by 1/sqrt(n)."""
    acc = mu
    for _ in range(n - 1):
        acc = boolean_convolve(acc, mu)
    return dilate(acc, 1.0 / math.sqrt(n))


def check_oracle_equivalence(corpus, max_n=ORACLE_MAX_N) -> PredicateResult:
    res = PredicateResult("oracle_equivalence")
    sub = [mu for mu in corpus if len(mu) <= ORACLE_MAX_ATOMS][:ORACLE_SUBCORPUS]
    for mu in sub:
        for n in range(1, max_n + 1):
            res.checked += 1
            dev = clt_iterate(mu, n).max_deviation(pairwise_clt(mu, n))
            if not dev <= ORACLE_TOL:
                res.fail(measure=mu, n=n, deviation=dev)
    return res


def check_cumulant_scaling(corpus, ns=CLT_NS) -> PredicateResult:
    res = PredicateResult("cumulant_scaling")
    for mu in corpus:
        r4 = boolean_cumulants(mu, 4)[3]
        for n in ns:
            res.checked += 1
            r4n = boolean_cumulants(clt_iterate(mu, n), 4)[3]
            if abs(r4n - r4 / n) > CUMULANT_RTOL * abs(r4 / n):
                res.fail(measure=mu, n=n, r4_mun=r4n, expected=r4 / n)
    return res


def check_lemmas(corpus) -> list[PredicateResult]:
    var_res = PredicateResult("square_variance_equals_r4")
    cheb = PredicateResult("chebyshev_mass_bound")
    static = PredicateResult("static_levy_bound")
    b = bernoulli()
    for mu in corpus:
        r4 = boolean_cumulants(mu, 4)[3]
        sq = square_pushforward(mu)
        var_res.checked += 1
        if abs(variance(sq) - r4) > VARIANCE_TOL:
            var_res.fail(measure=mu, variance=variance(sq), r4=r4)
        for eps in CHEBYSHEV_EPS:
            cheb.checked += 1
            mass = sq.mass(1 - eps, 1 + eps)
            if mass < 1 - r4 / eps ** 2:
                cheb.fail(measure=mu, eps=eps, mass=mass, r4=r4)
        static.checked += 1
        bound = static_levy_bound(mu)
        if bound >= 1.0:
            static.vacuous += 1
        levy = levy_distance(mu, b)
        if levy > bound + LEVY_SLACK:
            static.fail(measure=mu, levy=levy, bound=bound)
    return [var_res, cheb, static]


def run_suite(seed: int = DEFAULT_SEED, corpus_size: int = 200, extra=()) -> dict:
    """Run every predicate; returns the JSON-ready report."""
    corpus = random_corpus(seed, corpus_size) + list(extra)
    results = [
        check_theorem1(corpus),
        check_theorem2(corpus),
        check_sharpness(),
        check_oracle_equivalence(corpus),
        check_cumulant_scaling(corpus),
        *check_lemmas(corpus),
    ]
    return {
        "seed": seed,
        "corpus_size": len(corpus),
        "passed": [r.name for r in results if r.passed],
        "failed": [r.name for r in results if not r.passed],
        "details": {r.name: r.as_dict() for r in results},
    }
