"""Time the hot kernels with numba on and off.

Each configuration runs in a fresh interpreter so the
``RANKED_COMMUNITIES_NUMBA`` flag is read at import time. The jitted run
is warmed up once before timing; results are also checked to be identical.

    python benchmarks/bench_kernels.py [--reps 50]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import numpy as np
from ranked_communities import *
from ranked_communities._accel import USE_NUMBA

reps = int(sys.argv[1])
g = ring_lattice((100, 9))

def timed(fn):
    fn()  # warm-up (JIT compile when enabled)
    t = time.perf_counter()
    out = fn()
    return time.perf_counter() - t, out

def lp():
    return [modularity(g, label_propagation(g, random_order(100, s), s)) for s in range(reps)]

def ml():
    return [modularity(g, multilevel(g, random_order(100, s), s)) for s in range(reps)]

def bet():
    return betweenness_scores(g).values.tolist()

res = {"numba": USE_NUMBA}
for name, fn in (("betweenness", bet), ("label_propagation", lp), ("multilevel", ml)):
    secs, out = timed(fn)
    res[name] = {"seconds": secs, "checksum": float(np.sum(out))}
print(json.dumps(res))
"""


def run(flag, reps):
    env = dict(os.environ, RANKED_COMMUNITIES_NUMBA=flag)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(reps)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=50)
    args = parser.parse_args()

    fast, slow = run("1", args.reps), run("0", args.reps)
    print(f"ring lattice n=100 nei=9, {args.reps} runs per method")
    print(f"{'kernel':<20}{'numba s':>10}{'python s':>10}{'speedup':>9}  match")
    for name in ("betweenness", "label_propagation", "multilevel"):
        a, b = fast[name], slow[name]
        same = a["checksum"] == b["checksum"]
        print(f"{name:<20}{a['seconds']:>10.4f}{b['seconds']:>10.4f}"
              f"{b['seconds'] / a['seconds']:>8.1f}x  {'yes' if same else 'NO'}")


if __name__ == "__main__":
    main()
