"""Cauchy, reciprocal Cauchy and self-energy transforms of atomic measures,
Boolean convolution, and recovery of measures from transforms.

For an atomic measure with m atoms the Cauchy transform ``G = N / D`` has
``D`` the monic polynomial vanishing at the atoms and ``N`` of degree m - 1.
``F = 1 / G`` and ``K = z - F`` follow without any cancellation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (InvalidArgument, NotAMeasure, PreconditionViolation, PrecisionFailure,
                     RootStructureViolation)
from .measure import AtomicMeasure, is_standardized, make_measure
from .poly import Z, Polynomial, RationalFn, poly_derivative, real_roots

NEG_WEIGHT_TOL = 1e-10
RECOVERY_MASS_TOL = 1e-6
POLE_MERGE_RTOL = 1e-9


@dataclass(frozen=True)
class TransformBundle:
    g: RationalFn
    f: RationalFn
    k: RationalFn
    source_atoms: int


def cauchy_transform(mu: AtomicMeasure) -> RationalFn:
    den = Polynomial.from_roots(mu.x)
    num = Polynomial()
    for i, wi in enumerate(mu.w):
        num = num + Polynomial.from_roots(np.delete(mu.x, i)) * float(wi)
    return RationalFn(num, den)


def f_transform(mu: AtomicMeasure) -> RationalFn:
    return cauchy_transform(mu).reciprocal()


def _k_numerator(f: RationalFn) -> Polynomial:
    # z*den - num; the z**m terms cancel exactly for unit mass, so the
    # result is cut to the degree of den
    c = (Z * f.den - f.num).coeffs
    return Polynomial(c[: f.den.degree + 1])


def k_transform(mu: AtomicMeasure) -> RationalFn:
    f = f_transform(mu)
    return RationalFn(_k_numerator(f), f.den)


def transform_bundle(mu: AtomicMeasure) -> TransformBundle:
    g = cauchy_transform(mu)
    f = g.reciprocal()
    return TransformBundle(g=g, f=f, k=RationalFn(_k_numerator(f), f.den), source_atoms=len(mu))


def recover_measure(f: RationalFn) -> AtomicMeasure:
    """Invert an F-transform: atoms at the zeros of ``f``, weight 1/f'(a).

    At a zero of ``f.num`` the quotient rule reduces to
    ``f'(a) = f.num'(a) / f.den(a)``.
    """
    if f.num.degree != f.den.degree + 1 or abs(f.num.lead - 1.0) > 1e-6:
        raise NotAMeasure("F-transform must behave like z + O(1) at infinity")
    if f.num.degree == 1:
        return make_measure([(-f.num.coeffs[0] / f.num.coeffs[1], 1.0)])
    try:
        xs = real_roots(f.num)
    except RootStructureViolation as exc:
        raise NotAMeasure(f"F-transform numerator has non-real or repeated roots: {exc}") from exc
    dnum = poly_derivative(f.num)
    ws = np.array([f.den(a) / dnum(a) for a in xs])
    if np.any(ws < -NEG_WEIGHT_TOL):
        raise NotAMeasure(f"negative atom weight {ws.min()!r}")
    ws = np.clip(ws, 0.0, None)
    total = ws.sum()
    if abs(total - 1.0) > RECOVERY_MASS_TOL:
        raise PrecisionFailure(f"recovered weights sum to {total!r}")
    return make_measure(zip(xs, ws), mass_tol=RECOVERY_MASS_TOL)


# Pole-residue form of the self-energy: K(z) = c + sum_j rho_j / (z - s_j),
# rho_j > 0.  The poles are the zeros of G, one strictly between each pair
# of neighbouring atoms.

def _bisect_sign(fun, lo, hi, iters=110):
    # vectorised bisection; fun(lo) < 0 < fun(hi) elementwise
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        neg = fun(mid) < 0.0
        lo = np.where(neg, mid, lo)
        hi = np.where(neg, hi, mid)
    return 0.5 * (lo + hi)


def k_partial_fractions(mu: AtomicMeasure):
    """Return ``(c, poles, residues)`` with ``K = c + sum rho/(z - s)``."""
    x, w = mu.x, mu.w
    c = float(np.dot(w, x))
    if len(x) == 1:
        return c, np.empty(0), np.empty(0)

    def minus_g(s):
        return -np.sum(w / (s[:, None] - x), axis=1)

    # -G increases from -inf to +inf between consecutive atoms
    poles = _bisect_sign(minus_g, x[:-1].copy(), x[1:].copy())
    dg = np.sum(w / (poles[:, None] - x) ** 2, axis=1)
    return c, poles, 1.0 / dg


def _merge_poles(poles, residues):
    order = np.argsort(poles)
    ps, rs = [], []
    for s, r in zip(poles[order].tolist(), residues[order].tolist()):
        if ps and abs(s - ps[-1]) <= POLE_MERGE_RTOL * max(1.0, abs(s)):
            ps[-1] = (ps[-1] * rs[-1] + s * r) / (rs[-1] + r)
            rs[-1] += r
        else:
            ps.append(s)
            rs.append(r)
    return np.array(ps), np.array(rs)


def measure_from_k_partial_fractions(c: float, poles, residues) -> AtomicMeasure:
    """Atoms of the measure whose self-energy is ``c + sum rho/(z - s)``.

    ``F = z - K`` increases between poles, so each gap (and each of the two
    unbounded ends) holds exactly one zero.
    """
    poles, residues = np.asarray(poles, float), np.asarray(residues, float)
    if np.any(residues <= 0):
        raise NotAMeasure("self-energy residues must be positive")
    if poles.size == 0:
        return make_measure([(c, 1.0)])
    poles, residues = _merge_poles(poles, residues)
    spread = 1.0 + residues.sum()
    lo = np.concatenate([[min(c, poles[0]) - spread], poles])
    hi = np.concatenate([poles, [max(c, poles[-1]) + spread]])

    def f(z):
        return z - c - np.sum(residues / (z[:, None] - poles), axis=1)

    xs = _bisect_sign(f, lo, hi)
    fprime = 1.0 + np.sum(residues / (xs[:, None] - poles) ** 2, axis=1)
    ws = 1.0 / fprime
    total = ws.sum()
    if abs(total - 1.0) > RECOVERY_MASS_TOL:
        raise PrecisionFailure(f"recovered weights sum to {total!r}")
    return make_measure(zip(xs, ws), mass_tol=RECOVERY_MASS_TOL)


def boolean_convolve(mu: AtomicMeasure, nu: AtomicMeasure) -> AtomicMeasure:
    """Boolean convolution: the self-energies add.

    The sum is taken in pole-residue form so that poles shared by both
    operands (self-convolution chains) are merged instead of producing
    repeated roots.
    """
    c1, s1, r1 = k_partial_fractions(mu)
    c2, s2, r2 = k_partial_fractions(nu)
    return measure_from_k_partial_fractions(c1 + c2, np.concatenate([s1, s2]), np.concatenate([r1, r2]))


def boolean_power(mu: AtomicMeasure, t: float) -> AtomicMeasure:
    """The Boolean convolution power mu^{⊎t}, t >= 0 real.

    ``K`` scales by ``t``, i.e. ``F_t = (1 - t) z + t F_mu``.
    """
    if not t >= 0:
        raise InvalidArgument(f"Boolean power needs t >= 0, got {t!r}")
    if t == 0:
        return make_measure([(0.0, 1.0)])
    k = k_transform(mu)
    return recover_measure(RationalFn(Z * k.den - k.num * float(t), k.den))


def auxiliary_measure(mu: AtomicMeasure) -> AtomicMeasure:
    """The measure nu with ``F_mu(z) = z - G_nu(z)``; needs mean 0, variance 1."""
    if not is_standardized(mu):
        raise PreconditionViolation("auxiliary_measure needs a mean-0, variance-1 measure")
    if len(mu) < 2:
        raise PreconditionViolation("a standardized measure has at least two atoms")
    k = k_transform(mu)
    # leading coefficient of K's numerator is the mean, zero by precondition
    knum = Polynomial(k.num.coeffs[: k.den.degree])
    return recover_measure(RationalFn(k.den, knum))


def stieltjes_density_sample(g: RationalFn, x: float, eps: float) -> float:
    """-(1/pi) Im g(x + i eps): smoothed density read off a Cauchy transform."""
    if not eps > 0:
        raise InvalidArgument("eps must be positive")
    return -complex(g(complex(x, eps))).imag / math.pi

