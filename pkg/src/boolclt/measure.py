"""Finitely supported probability measures on the real line."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import DegenerateMeasure, InvalidArgument, InvalidMeasure

MERGE_RTOL = 1e-11
PRUNE_WEIGHT = 1e-12
MASS_TOL = 1e-8
NEG_WEIGHT_TOL = 1e-12


class AtomicMeasure:
    """Probability measure ``sum_i w_i delta_{x_i}``.

    Build instances through :func:`make_measure`, which sorts, merges and
    validates; the constructor itself only freezes the arrays.
    """

    __slots__ = ("x", "w")

    def __init__(self, x, w):
        x = np.array(x, dtype=np.float64)
        w = np.array(w, dtype=np.float64)
        x.setflags(write=False)
        w.setflags(write=False)
        self.x = x
        self.w = w

    @property
    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.w.tolist()))

    def __len__(self):
        return len(self.x)

    @property
    def support_radius(self) -> float:
        return float(np.max(np.abs(self.x)))

    def mass(self, lo: float, hi: float, *, closed: bool = False) -> float:
        """Mass of the interval (lo, hi), or [lo, hi] when ``closed``."""
        if closed:
            sel = (self.x >= lo) & (self.x <= hi)
        else:
            sel = (self.x > lo) & (self.x < hi)
        return float(self.w[sel].sum())

    def allclose(self, other: "AtomicMeasure", atol: float = 1e-9) -> bool:
        return (len(self) == len(other)
                and bool(np.allclose(self.x, other.x, rtol=0, atol=atol))
                and bool(np.allclose(self.w, other.w, rtol=0, atol=atol)))

    def max_deviation(self, other: "AtomicMeasure") -> float:
        """Largest position or weight difference; inf if atom counts differ."""
        if len(self) != len(other):
            return math.inf
        return float(max(np.max(np.abs(self.x - other.x)), np.max(np.abs(self.w - other.w))))

    def __eq__(self, other):
        if not isinstance(other, AtomicMeasure):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.w, other.w)

    def __hash__(self):
        return hash((self.x.tobytes(), self.w.tobytes()))

    def __repr__(self):
        inner = ", ".join(f"({x:.12g}, {w:.12g})" for x, w in self.atoms)
        return f"AtomicMeasure([{inner}])"

    def to_json(self) -> dict:
        return {"atoms": [{"x": x, "w": w} for x, w in self.atoms]}

    @classmethod
    def from_json(cls, obj) -> "AtomicMeasure":
        try:
            pairs = [(float(a["x"]), float(a["w"])) for a in obj["atoms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidMeasure(f"malformed measure JSON: {exc}") from exc
        return make_measure(pairs)


def _merge_sorted(x: np.ndarray, w: np.ndarray):
    xs, ws = [], []
    for xi, wi in zip(x.tolist(), w.tolist()):
        if xs and abs(xi - xs[-1]) <= MERGE_RTOL * max(1.0, abs(xi)):
            tot = ws[-1] + wi
            if tot > 0:
                xs[-1] = (xs[-1] * ws[-1] + xi * wi) / tot
            ws[-1] = tot
        else:
            xs.append(xi)
            ws.append(wi)
    return np.array(xs), np.array(ws)


def make_measure(pairs, *, mass_tol: float = MASS_TOL) -> AtomicMeasure:
    """Validate ``(position, weight)`` pairs into an :class:`AtomicMeasure`.

    Atoms closer than ``1e-11 * max(1, |x|)`` are merged, weights below
    ``1e-12`` are dropped and the remaining mass renormalized.
    """
    arr = np.array(list(pairs), dtype=np.float64).reshape(-1, 2)
    if arr.shape[0] == 0:
        raise InvalidMeasure("measure has no atoms")
    if not np.all(np.isfinite(arr)):
        raise InvalidMeasure("non-finite atom position or weight")
    x, w = arr[:, 0], arr[:, 1]
    if np.any(w < -NEG_WEIGHT_TOL):
        raise InvalidMeasure(f"negative weight {w.min()!r}")
    total = w.sum()
    if abs(total - 1.0) > mass_tol:
        raise InvalidMeasure(f"total mass {total!r} is not 1")
    order = np.argsort(x, kind="stable")
    x, w = _merge_sorted(x[order], np.clip(w[order], 0.0, None))
    keep = w >= PRUNE_WEIGHT
    if not keep.any():
        raise InvalidMeasure("no atom survives pruning")
    x, w = x[keep], w[keep]
    return AtomicMeasure(x + 0.0, w / w.sum())


def dirac(a: float) -> AtomicMeasure:
    return make_measure([(a, 1.0)])


def bernoulli() -> AtomicMeasure:
    """The symmetric Bernoulli law on {-1, 1}."""
    return make_measure([(-1.0, 0.5), (1.0, 0.5)])


def moment(mu: AtomicMeasure, k: int) -> float:
    if k == 0:
        return 1.0
    return float(np.dot(mu.w, mu.x ** k))


def variance(mu: AtomicMeasure) -> float:
    return moment(mu, 2) - moment(mu, 1) ** 2


def is_standardized(mu: AtomicMeasure, tol: float = 1e-8) -> bool:
    return abs(moment(mu, 1)) <= tol and abs(moment(mu, 2) - 1.0) <= tol


def cumulants_from_moments(m) -> list[float]:
    """Boolean cumulants from moments ``m[0] = 1, m[1], ...``.

    Inverts m_n = sum_{k=1}^{n} r_k m_{n-k}.
    """
    r = [0]
    for n in range(1, len(m)):
        r.append(m[n] - sum(r[k] * m[n - k] for k in range(1, n)))
    return r[1:]


def moments_from_cumulants(r) -> list[float]:
    """Moments m_1..m_N from Boolean cumulants r_1..r_N."""
    rr = [0.0] + list(r)
    m = [1.0]
    for n in range(1, len(rr)):
        m.append(sum(rr[k] * m[n - k] for k in range(1, n + 1)))
    return m[1:]


def exact_moments(mu: AtomicMeasure, upto: int) -> list[Fraction]:
    """Moments 0..upto of the stored atoms in exact rational arithmetic,
    normalized by the stored total mass."""
    xs = [Fraction(float(x)) for x in mu.x]
    ws = [Fraction(float(w)) for w in mu.w]
    total = sum(ws)
    out, powers = [], [Fraction(1)] * len(xs)
    for _ in range(upto + 1):
        out.append(sum(w * p for w, p in zip(ws, powers)) / total)
        powers = [p * x for p, x in zip(powers, xs)]
    return out


def boolean_cumulants(mu: AtomicMeasure, upto: int) -> list[float]:
    """r_1..r_upto.  Moments are taken exactly: near the Bernoulli law r_4 is
    a tiny difference of order-one moments."""
    if upto < 1:
        raise InvalidArgument("upto must be at least 1")
    return [float(r) for r in cumulants_from_moments(exact_moments(mu, upto))]


def dilate(mu: AtomicMeasure, a: float) -> AtomicMeasure:
    if not a > 0:
        raise InvalidArgument(f"dilation factor must be positive, got {a!r}")
    return AtomicMeasure(mu.x * a, mu.w)


def square_pushforward(mu: AtomicMeasure) -> AtomicMeasure:
    """Law of X**2 when X has law ``mu``."""
    return make_measure(zip(mu.x ** 2, mu.w))


def standardize(mu: AtomicMeasure) -> AtomicMeasure:
    m1, m2 = moment(mu, 1), moment(mu, 2)
    var = m2 - m1 * m1
    if var <= 1e-14 * max(m2, 1e-300):
        raise DegenerateMeasure("cannot standardize a measure with zero variance")
    return AtomicMeasure((mu.x - m1) / math.sqrt(var), mu.w)


@dataclass(frozen=True)
class StepCdf:
    """Right-continuous distribution function of an atomic measure."""

    jumps: np.ndarray
    values: np.ndarray

    def __call__(self, x: float) -> float:
        k = int(np.searchsorted(self.jumps, x, side="right"))
        return float(self.values[k - 1]) if k else 0.0

    def left_limit(self, x: float) -> float:
        k = int(np.searchsorted(self.jumps, x, side="left"))
        return float(self.values[k - 1]) if k else 0.0


def cdf(mu: AtomicMeasure) -> StepCdf:
    v = np.cumsum(mu.w)
    v[-1] = 1.0
    return StepCdf(mu.x, v)


def levy_distance(mu: AtomicMeasure, nu: AtomicMeasure) -> float:
    """Lévy distance, by bisection on the sandwich condition (60 steps on [0, 1])."""
    f, g = cdf(mu), cdf(nu)
    return float(kernels.levy_bisect(f.jumps, f.values, g.jumps, g.values, 60, 1.0))


def kolmogorov_distance(mu: AtomicMeasure, nu: AtomicMeasure) -> float:
    f, g = cdf(mu), cdf(nu)
    return float(kernels.kolmogorov_steps(f.jumps, f.values, g.jumps, g.values))


def sharpness_measure(eps: float) -> AtomicMeasure:
    """Six-atom standardized measure with fourth moment 1 + 2 eps**3."""
    if not 0.0 < eps < 0.5:
        raise InvalidArgument(f"eps must lie in (0, 1/2), got {eps!r}")
    a, b = math.sqrt(1.0 + eps), math.sqrt(1.0 - eps)
    half = eps / 2.0
    return make_measure([(-a, half), (-1.0, 0.5 - eps), (-b, half),
                         (b, half), (1.0, 0.5 - eps), (a, half)])


def example_measure(n: int) -> AtomicMeasure:
    """Closed-form two-atom law of the normalized n-fold Boolean power of
    the measure with atoms at the golden-ratio points."""
    if n < 1 or int(n) != n:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    s = math.sqrt(1.0 + 4.0 * n)
    t = math.sqrt(4.0 * n)
    p = (s + 1.0) / (2.0 * s)
    q = (s - 1.0) / (2.0 * s)
    return make_measure([((1.0 - s) / t, p), ((1.0 + s) / t, q)])
