"""Dense real polynomials, rational functions and real-root isolation.

Coefficients are stored in ascending degree order as read-only float64
arrays.  Nothing here attempts symbolic simplification: rational functions
keep whatever numerator and denominator they were built from, with the
denominator scaled to be monic.
"""
from __future__ import annotations

import numpy as np

from . import kernels
from .errors import InvalidArgument, PoleEvaluation, PrecisionFailure, RootStructureViolation

# bisection stops at this width relative to max(1, |root|)
ROOT_REL_WIDTH = 1e-13
# |p(root)| allowed, relative to sum |c_k| max(1, |root|)^k
ROOT_RESIDUAL_TOL = 1e-9
POLE_TOL = 1e-14


def _as_coeffs(coeffs) -> np.ndarray:
    c = np.array(coeffs, dtype=np.float64).reshape(-1)
    nz = np.flatnonzero(c)
    c = c[: nz[-1] + 1] if nz.size else c[:0]
    c.setflags(write=False)
    return c


class Polynomial:
    """Real polynomial ``c[0] + c[1] z + ... + c[d] z**d``.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            coeffs = coeffs.coeffs
        self.coeffs = _as_coeffs(coeffs)

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        """Monic polynomial with the given roots."""
        c = np.array([1.0])
        for r in roots:
            c = np.convolve(c, [-float(r), 1.0])
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> float:
        return float(self.coeffs[-1]) if len(self.coeffs) else 0.0

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def __call__(self, z):
        acc = 0.0
        for c in self.coeffs[::-1]:
            acc = acc * z + float(c)
        return acc

    def abs_eval(self, x: float) -> float:
        """sum |c_k| |x|**k, the scale against which roundoff is judged."""
        return Polynomial(np.abs(self.coeffs))(abs(x))

    def __add__(self, other):
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-self.coeffs)

    def __sub__(self, other):
        return poly_add(self, -_lift(other))

    def __rsub__(self, other):
        return poly_add(_lift(other), -self)

    def __mul__(self, other):
        return poly_mul(self, _lift(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial(self.coeffs / float(scalar))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def allclose(self, other, rtol=1e-12, atol=0.0) -> bool:
        a, b = self.coeffs, _lift(other).coeffs
        n = max(len(a), len(b))
        a = np.pad(a, (0, n - len(a)))
        b = np.pad(b, (0, n - len(b)))
        return bool(np.allclose(a, b, rtol=rtol, atol=atol))

    def __repr__(self):
        return f"Polynomial({self.coeffs.tolist()})"


def _lift(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial([p])


Z = Polynomial([0.0, 1.0])
ONE = Polynomial([1.0])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return Polynomial(np.pad(a.coeffs, (0, n - len(a.coeffs))) + np.pad(b.coeffs, (0, n - len(b.coeffs))))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial()
    return Polynomial(np.convolve(a.coeffs, b.coeffs))


def poly_scale_arg(p: Polynomial, a: float) -> Polynomial:
    """Return q with q(z) = p(a z)."""
    if a == 0:
        raise InvalidArgument("poly_scale_arg: scale factor must be nonzero")
    return Polynomial(p.coeffs * float(a) ** np.arange(len(p.coeffs)))


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(p.coeffs[1:] * np.arange(1, len(p.coeffs)))


def _polish(c: np.ndarray, dc: np.ndarray, x: float, lo: float, hi: float) -> float:
    fx = kernels.horner(c, x)
    d = kernels.horner(dc, x)
    if d == 0.0:
        return x
    x1 = x - fx / d
    if lo <= x1 <= hi and abs(kernels.horner(c, x1)) <= abs(fx):
        return x1
    return x


def _real_roots(c: np.ndarray) -> list[float]:
    deg = len(c) - 1
    if deg == 1:
        return [-c[0] / c[1]]
    dc = c[1:] * np.arange(1, deg + 1)
    crit = _real_roots(dc)
    bound = 1.0 + float(np.max(np.abs(c[:-1])) / abs(c[-1]))
    marks = [-bound] + crit + [bound]
    vals = [kernels.horner(c, x) for x in marks]
    roots = []
    for k in range(deg):
        lo, hi = marks[k], marks[k + 1]
        flo, fhi = vals[k], vals[k + 1]
        if flo == 0.0 and 0 < k:
            # vanishing at a critical point means a repeated root
            raise RootStructureViolation(f"repeated root near {lo!r}")
        if (flo < 0.0) == (fhi < 0.0) or fhi == 0.0:
            continue
        x = kernels.bisect_root(c, lo, hi, ROOT_REL_WIDTH)
        roots.append(_polish(c, dc, x, lo, hi))
    if len(roots) != deg:
        raise RootStructureViolation(
            f"found {len(roots)} real roots for a degree-{deg} polynomial; "
            "roots are not all real and simple")
    return roots


def real_roots(p: Polynomial) -> list[float]:
    """All roots of ``p``, ascending, assuming they are real and simple.

    Roots of the derivative (found recursively) separate the roots of
    ``p``; each separated interval with a sign change is bisected and the
    result polished with one Newton step.  Raises
    :class:`RootStructureViolation` when fewer than ``degree`` sign changes
    are found.
    """
    p = _lift(p)
    if p.degree < 1:
        raise InvalidArgument("real_roots needs a nonconstant polynomial")
    c = np.asarray(p.coeffs / p.lead)
    roots = _real_roots(c)
    for r in roots:
        scale = Polynomial(c).abs_eval(max(1.0, abs(r)))
        if abs(kernels.horner(c, r)) > ROOT_RESIDUAL_TOL * scale:
            raise PrecisionFailure(f"root {r!r} has residual above tolerance")
    return roots


class RationalFn:
    """``num / den`` with ``den`` rescaled to be monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = _lift(num), _lift(den)
        if den.is_zero():
            raise InvalidArgument("rational function with zero denominator")
        s = den.lead
        self.num = num / s if s != 1.0 else num
        self.den = den / s if s != 1.0 else den

    def __call__(self, z):
        return rational_eval(self, z)

    def reciprocal(self) -> "RationalFn":
        if self.num.is_zero():
            raise InvalidArgument("reciprocal of the zero rational function")
        return RationalFn(self.den, self.num)

    def __add__(self, other):
        return rational_add(self, _lift_rational(other))

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return rational_add(self, -_lift_rational(other))

    def __rsub__(self, other):
        return rational_add(_lift_rational(other), -self)

    def scale(self, s: float) -> "RationalFn":
        return RationalFn(self.num * float(s), self.den)

    def allclose(self, other, rtol=1e-12, atol=0.0) -> bool:
        return self.num.allclose(other.num, rtol, atol) and self.den.allclose(other.den, rtol, atol)

    def __repr__(self):
        return f"RationalFn(num={self.num.coeffs.tolist()}, den={self.den.coeffs.tolist()})"


def _lift_rational(f) -> RationalFn:
    if isinstance(f, RationalFn):
        return f
    return RationalFn(_lift(f))


def rational_add(f: RationalFn, g: RationalFn) -> RationalFn:
    """Cross-multiplied sum; no common factors are cancelled."""
    if f.den == g.den:
        return RationalFn(f.num + g.num, f.den)
    return RationalFn(f.num * g.den + g.num * f.den, f.den * g.den)


def rational_eval(f: RationalFn, z):
    d = f.den(z)
    if abs(d) <= POLE_TOL * max(f.den.abs_eval(abs(z)), 1e-300):
        raise PoleEvaluation(f"evaluation at a pole: z={z!r}")
    return f.num(z) / d
