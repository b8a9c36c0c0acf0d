"""Time the numba and numpy kernel backends against each other.

The backend is fixed at import, so each measurement runs in a subprocess with
GAUSSIA_BACKEND set.  Reports wall time for the seed-grid objective and the
full classical-correlations optimization, plus the entanglement estimator.

Usage: python3 benchmarks/compare_backends.py [--repeats N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json
import time

import numpy as np

from gaussia import _kernels
from gaussia.measurement import classical_correlations
from gaussia.phase_space import ModePartition
from gaussia.renyi import entanglement_estimate
from gaussia.unruh import FrameScenario, observed_pair

AR = ModePartition({"A": (0,), "R": (1,)})
pair = observed_pair(FrameScenario("a", s=0.828727, r=1.0))
sigma4 = np.ascontiguousarray(pair.matrix)

# warm-up triggers JIT compilation on the numba path
thetas = np.linspace(0.0, np.pi, 64, endpoint=False)
zs = np.linspace(-8.0, 8.0, 64)
tg, zg = [a.ravel() for a in np.meshgrid(thetas, zs, indexing="ij")]
_kernels.conditional_logdet_grid(sigma4, tg, zg)
entanglement_estimate(pair, AR, budget=500)

out = {"backend": _kernels.backend_name()}

t0 = time.perf_counter()
for _ in range(200):
    _kernels.conditional_logdet_grid(sigma4, tg, zg)
out["grid_64x64_x200_s"] = time.perf_counter() - t0

t0 = time.perf_counter()
for _ in range(20):
    classical_correlations(pair, AR, measured="A")
out["classical_correlations_x20_s"] = time.perf_counter() - t0

t0 = time.perf_counter()
for _ in range(3):
    entanglement_estimate(pair, AR, budget=20000)
out["entanglement_estimate_x3_s"] = time.perf_counter() - t0

print(json.dumps(out))
"""


def measure(backend: str, repeats: int) -> dict:
    best = None
    for _ in range(repeats):
        env = dict(os.environ, GAUSSIA_BACKEND=backend)
        proc = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                              capture_output=True, text=True, check=True)
        res = json.loads(proc.stdout.strip().splitlines()[-1])
        if best is None:
            best = res
        else:
            for k, v in res.items():
                if isinstance(v, float):
                    best[k] = min(best[k], v)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    results = {b: measure(b, args.repeats) for b in ("numpy", "numba")}
    keys = [k for k in results["numpy"] if k != "backend"]
    width = max(len(k) for k in keys)
    print(f"{'workload':<{width}}  {'numpy':>10}  {'numba':>10}  speedup")
    for k in keys:
        a, b = results["numpy"][k], results["numba"][k]
        print(f"{k:<{width}}  {a:>9.3f}s  {b:>9.3f}s  {a / b:6.1f}x")


if __name__ == "__main__":
    main()
