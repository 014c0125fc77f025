"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Micro timings call each backend module directly; the end-to-end timing runs
a Theorem 1 sweep over a small corpus in a subprocess per backend, since the
backend is fixed at import.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from boolclt import _pykernels, cdf, example_measure
from boolclt.corpus import random_measure

try:
    from boolclt import _ckernels
except ImportError:
    _ckernels = None

SWEEP = """
import time
from boolclt import BACKEND, bernoulli, clt_iterate, levy_distance
from boolclt.corpus import random_corpus
b = bernoulli()
corpus = random_corpus(size=40)
t0 = time.perf_counter()
for mu in corpus:
    for k in range(15):
        levy_distance(clt_iterate(mu, 2 ** k), b)
print(BACKEND, time.perf_counter() - t0)
"""


def _arrays(mu):
    f = cdf(mu)
    return np.ascontiguousarray(f.jumps), np.ascontiguousarray(f.values)


def micro(mod, repeat):
    rng = np.random.default_rng(0)
    mu = random_measure(rng, 12, 12)
    ax, af = _arrays(mu)
    bx, bg = _arrays(example_measure(50))
    c = np.ascontiguousarray(np.poly(np.linspace(-2, 2, 9))[::-1])
    cases = {
        "levy_bisect": lambda: mod.levy_bisect(ax, af, bx, bg, 60, 1.0),
        "kolmogorov_steps": lambda: mod.kolmogorov_steps(ax, af, bx, bg),
        "bisect_root": lambda: mod.bisect_root(c, 1.75, 2.5, 1e-13, 400),
        "horner": lambda: mod.horner(c, 0.37),
    }
    out = {}
    for name, fn in cases.items():
        number = 200
        best = min(timeit.repeat(fn, number=number, repeat=repeat)) / number
        out[name] = best
    return out


def sweep(pure):
    env = dict(os.environ)
    if pure:
        env["BOOLCLT_PURE_PYTHON"] = "1"
    else:
        env.pop("BOOLCLT_PURE_PYTHON", None)
    res = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    backend, secs = res.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    py, cy = micro(_pykernels, args.repeat), micro(_ckernels, args.repeat)
    print(f"{'kernel':<18}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}")
    for name in py:
        print(f"{name:<18}{py[name] * 1e6:>14.2f}{cy[name] * 1e6:>14.2f}{py[name] / cy[name]:>10.1f}")
    print()
    for pure in (True, False):
        backend, secs = sweep(pure)
        print(f"theorem 1 sweep, 40 measures x 15 n, {backend:<7} {secs:8.3f} s")


if __name__ == "__main__":
    main()
