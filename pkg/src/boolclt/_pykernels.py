"""Pure-Python versions of the hot loops.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled build is tested against.
"""
from bisect import bisect_right


def horner(coeffs, x):
    """Evaluate an ascending-order coefficient sequence at a real ``x``."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def bisect_root(coeffs, lo, hi, rel_width=1e-13, max_iter=400):
    coeffs = [float(c) for c in coeffs]
    flo = horner(coeffs, lo)
    if flo == 0.0:
        return lo
    if horner(coeffs, hi) == 0.0:
        return hi
    neg_lo = flo < 0.0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_width * max(1.0, abs(mid)):
            break
        fm = horner(coeffs, mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == neg_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _step(xs, vals, x):
    k = bisect_right(xs, x)
    return vals[k - 1] if k else 0.0


def _sandwiched(ax, aF, bx, bG, eps):
    # F(x - eps) - eps <= G(x) <= F(x + eps) + eps; both sides are step
    # functions of x, so only piece starts need checking.
    for a, fa in zip(ax, aF):
        if _step(bx, bG, a + eps) < fa - eps:
            return False
        if _step(bx, bG, a - eps) > fa + eps:
            return False
    for b, gb in zip(bx, bG):
        if gb < _step(ax, aF, b - eps) - eps:
            return False
        if gb > _step(ax, aF, b + eps) + eps:
            return False
    return True


def levy_bisect(ax, aF, bx, bG, iters=60, hi=1.0):
    ax, aF, bx, bG = (list(map(float, v)) for v in (ax, aF, bx, bG))
    if _sandwiched(ax, aF, bx, bG, 0.0):
        return 0.0
    lo = 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if _sandwiched(ax, aF, bx, bG, mid):
            hi = mid
        else:
            lo = mid
    return hi


def kolmogorov_steps(ax, aF, bx, bG):
    ax, aF, bx, bG = (list(map(float, v)) for v in (ax, aF, bx, bG))
    # left limits at a jump equal the value at the previous jump, so
    # right-values over the merged jump set cover the supremum
    best = 0.0
    for x in ax + bx:
        d = abs(_step(ax, aF, x) - _step(bx, bG, x))
        if d > best:
            best = d
    return best
