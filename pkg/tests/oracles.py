"""Brute-force oracles, independent of the code paths they check."""
import numpy as np


def step_eval(xs, cum, pts):
    idx = np.searchsorted(xs, pts, side="right")
    vals = np.concatenate([[0.0], cum])
    return vals[idx]


def _cdf_arrays(mu):
    return np.asarray(mu.x, float), np.cumsum(mu.w)


def levy_grid_oracle(mu, nu, coarse=1e-3, fine=1e-7):
    """Scan an epsilon grid for the first sandwich-feasible value.

    Feasibility uses the symmetric form sup_x F(x) - G(x+e) <= e and
    sup_x G(x) - F(x+e) <= e, whose suprema sit at the jumps of the
    first-named function.  Coarse scan, then a fine scan inside the first
    feasible coarse cell; the answer overshoots the infimum by < ``fine``.
    """
    ax, af = _cdf_arrays(mu)
    bx, bg = _cdf_arrays(nu)

    def feasible(eps):
        eps = np.asarray(eps)[:, None]
        d1 = af[None, :] - step_eval(bx, bg, ax[None, :] + eps)
        d2 = bg[None, :] - step_eval(ax, af, bx[None, :] + eps)
        worst = np.maximum(d1.max(axis=1), d2.max(axis=1))
        return worst <= eps[:, 0]

    grid = np.arange(0.0, 1.0 + coarse, coarse)
    ok = feasible(grid)
    k = int(np.argmax(ok))
    if k == 0:
        lo = 0.0
    else:
        lo = grid[k - 1]
    fine_grid = np.arange(lo, grid[k] + fine, fine)
    ok = feasible(fine_grid)
    return float(fine_grid[int(np.argmax(ok))])


def levy_xgrid_oracle(mu, nu, eps_step=0.005, x_lo=-4.0, x_hi=4.0, x_step=1e-3):
    """Literal definition checked on grids in both epsilon and x."""
    ax, af = _cdf_arrays(mu)
    bx, bg = _cdf_arrays(nu)
    xs = np.arange(x_lo, x_hi, x_step)
    g = step_eval(bx, bg, xs)
    for eps in np.arange(eps_step, 1.0 + eps_step, eps_step):
        lower = step_eval(ax, af, xs - eps) - eps
        upper = step_eval(ax, af, xs + eps) + eps
        if np.all(lower <= g) and np.all(g <= upper):
            return float(eps)
    return 1.0


def kolmogorov_grid_oracle(mu, nu, x_lo=-4.0, x_hi=4.0, x_step=1e-4):
    ax, af = _cdf_arrays(mu)
    bx, bg = _cdf_arrays(nu)
    xs = np.arange(x_lo, x_hi, x_step)
    return float(np.max(np.abs(step_eval(ax, af, xs) - step_eval(bx, bg, xs))))
