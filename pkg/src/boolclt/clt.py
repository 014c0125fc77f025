"""Boolean central limit iteration and checks of its rate bounds.

``clt_iterate(mu, n)`` is the law of the normalized n-fold Boolean sum,
``D_{1/sqrt(n)} mu^{⊎n}``.  Its self-energy is ``sqrt(n) K_mu(sqrt(n) z)``,
so the rational transform keeps the degree of ``mu`` for every n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidArgument, PrecisionFailure, PreconditionViolation, StructureViolation
from .measure import (AtomicMeasure, bernoulli, boolean_cumulants, is_standardized,
                      kolmogorov_distance, levy_distance, moment)
from .poly import Z, Polynomial, RationalFn, poly_scale_arg
from .transforms import k_transform, recover_measure

# atoms with |x| > K/sqrt(n) + this count as outside the bulk
OUTSIDE_SLACK = 1e-12
# float slack on the non-strict theorem inequalities
CHECK_SLACK = 1e-12


def _check_n(n) -> int:
    if int(n) != n or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    return int(n)


def clt_iterate(mu: AtomicMeasure, n: int) -> AtomicMeasure:
    n = _check_n(n)
    if not is_standardized(mu):
        raise PreconditionViolation("clt_iterate needs a mean-0, variance-1 measure")
    k = k_transform(mu)
    # the z**(m-1) coefficient of K's numerator is the mean: drop it
    knum = Polynomial(k.num.coeffs[: k.den.degree])
    root_n = math.sqrt(n)
    k_n = RationalFn(poly_scale_arg(knum, root_n) * root_n, poly_scale_arg(k.den, root_n))
    f_n = RationalFn(Z * k_n.den - k_n.num, k_n.den)
    try:
        out = recover_measure(f_n)
    except PrecisionFailure as exc:
        raise PrecisionFailure(f"clt_iterate(n={n}, atoms={len(mu)}): {exc}") from exc
    if not is_standardized(out):
        raise PrecisionFailure(
            f"clt_iterate(n={n}): result has mean {moment(out, 1)!r}, second moment {moment(out, 2)!r}")
    return out


def thm1_bound(mu: AtomicMeasure, n: int) -> float:
    """(7/2) ((m4 - 1) / n)**(1/3): Lévy-distance rate for the Boolean CLT."""
    n = _check_n(n)
    excess = moment(mu, 4) - 1.0
    if excess < -1e-9:
        raise InvalidArgument(f"fourth moment {excess + 1.0!r} is below 1")
    return 3.5 * (max(excess, 0.0) / n) ** (1.0 / 3.0)


def static_levy_bound(mu: AtomicMeasure) -> float:
    """(7/2) (m4 - 1)**(1/3), bounding the Lévy distance of a standardized
    measure from the symmetric Bernoulli law."""
    if not is_standardized(mu):
        raise PreconditionViolation("static_levy_bound needs a mean-0, variance-1 measure")
    return thm1_bound(mu, 1)


@dataclass
class StructureReport:
    n: int
    k_bound: float
    x1: float
    x2: float
    p: float
    q: float
    r: float
    levy_to_b: float
    thm2_bound: float
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failing(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def thm2_structure(mu: AtomicMeasure, k_bound: Optional[float] = None, n: int = 1) -> StructureReport:
    """Split ``clt_iterate(mu, n)`` into its two extreme atoms ``x1 < x2``
    and the remaining bulk, and test the bounded-support structure
    inequalities with ``h = K / sqrt(n)``.

    Raises :class:`StructureViolation` if any non-extreme atom falls outside
    ``[-h, h]``.  ``k_bound`` defaults to the largest |atom| of ``mu``.
    """
    n = _check_n(n)
    radius = mu.support_radius
    kb = radius if k_bound is None else float(k_bound)
    if radius > kb * (1 + 1e-12):
        raise PreconditionViolation(f"support radius {radius!r} exceeds k_bound {kb!r}")
    root_n = math.sqrt(n)
    if not root_n > kb:
        raise PreconditionViolation(f"need sqrt(n) > K, got n={n}, K={kb!r}")
    mun = clt_iterate(mu, n)
    h = kb / root_n
    if len(mun) < 2:
        raise StructureViolation(f"clt_iterate(n={n}) returned a single atom")
    # the two extreme atoms are the zeros of F beyond the auxiliary support
    (x1, p), (x2, q) = mun.atoms[0], mun.atoms[-1]
    strays = [x for x, _ in mun.atoms[1:-1] if abs(x) > h + OUTSIDE_SLACK]
    if strays:
        raise StructureViolation(f"atoms {strays!r} lie outside [-{h:.6g}, {h:.6g}] besides the extremes")
    r = float(sum(mun.w[1:-1]))
    levy = levy_distance(mun, bernoulli())
    s = CHECK_SLACK
    checks = {
        # only guaranteed by the bounding argument once K/sqrt(n) < 1/2
        "two_atoms_outside_bulk": x1 < -h - OUTSIDE_SLACK and x2 > h + OUTSIDE_SLACK,
        "mass_sums_to_one": abs(p + q + r - 1.0) <= 1e-9,
        "x1_near_minus_one": abs(x1 + 1.0) <= h + s,
        "x2_near_plus_one": abs(x2 - 1.0) <= h + s,
        "p_in_interval": 0.5 - 2 * h - s <= p <= 0.5 + h / 2 + s,
        "q_in_interval": 0.5 - 2 * h - s <= q <= 0.5 + h / 2 + s,
        "r_below_4h": r < 4 * h,
        "levy_below_2h": levy <= 2 * h + s,
    }
    return StructureReport(n=n, k_bound=kb, x1=x1, x2=x2, p=p, q=q, r=r,
                           levy_to_b=levy, thm2_bound=2 * h, checks=checks)


@dataclass
class ConvergenceRow:
    n: int
    levy: float
    kolmogorov: float
    thm1_bound: float
    thm2_bound: Optional[float]
    m4: float
    r4_of_mun: float

    @property
    def vacuous(self) -> bool:
        """The rate bound says nothing once it reaches 1."""
        return self.thm1_bound >= 1.0


def convergence_table(mu: AtomicMeasure, ns, k_bound: Optional[float] = None) -> list[ConvergenceRow]:
    ns = [_check_n(n) for n in ns]
    if not ns:
        raise InvalidArgument("ns must be nonempty")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise InvalidArgument("ns must be strictly ascending")
    kb = mu.support_radius if k_bound is None else float(k_bound)
    b = bernoulli()
    rows = []
    for n in ns:
        mun = clt_iterate(mu, n)
        rows.append(ConvergenceRow(
            n=n,
            levy=levy_distance(mun, b),
            kolmogorov=kolmogorov_distance(mun, b),
            thm1_bound=thm1_bound(mu, n),
            thm2_bound=2 * kb / math.sqrt(n) if math.sqrt(n) > kb else None,
            m4=moment(mun, 4),
            r4_of_mun=boolean_cumulants(mun, 4)[3],
        ))
    return rows
