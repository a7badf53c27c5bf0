#!/usr/bin/env python3
"""Time each hot kernel under numba and under plain numpy.

Both kernel tables are importable side by side, so the per-kernel
comparison runs in one process. ``--epoch`` additionally times one training
epoch end to end in two subprocesses, one with ``MIXAE_DISABLE_NUMBA=1``.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from mixae import kernels


def _cases(rng):
    B, n = 256, 784
    x = rng.uniform(0, 1, (B, n))
    xt = np.clip(rng.uniform(0, 1, (B, n)), 1e-7, 1 - 1e-7)
    X = rng.standard_normal((10000, 20))
    C = rng.standard_normal((10, 20))
    labels = rng.integers(0, 10, 10000)
    cost = rng.random((50, 50))
    pred, truth = rng.integers(0, 10, 10000), rng.integers(0, 10, 10000)
    p, g = rng.standard_normal(200000), rng.standard_normal(200000)
    m, v = np.zeros_like(p), np.zeros_like(p)
    return {
        "linear_sum_assignment": (cost,),
        "contingency": (pred, truth, 10, 10),
        "nearest_centroid": (X, C),
        "centroid_sums": (X, labels, 10),
        "mse_rows": (x, xt),
        "bce_rows": (x, xt, 1e-7),
        "sigmoid": (rng.standard_normal((B, n)),),
        "adam_update": (p, g, m, v, 0.9, 0.999, 1e-3, 0.5, 1e-8),
    }


def bench_kernels(repeat):
    rng = np.random.default_rng(0)
    cases = _cases(rng)
    rows = []
    for name, args in cases.items():
        timings = {}
        for label, table in (("numba", kernels.NUMBA_KERNELS), ("numpy", kernels.NUMPY_KERNELS)):
            fn = table.get(name)
            if fn is None:
                continue
            fn(*args)  # compile / warm up
            number = 5
            best = min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number
            timings[label] = best
        rows.append((name, timings))
    return rows


EPOCH_SNIPPET = """
import time, numpy as np
from mixae import ModelConfig, TrainConfig, init_params, train, kernels
rng = np.random.default_rng(0)
X = rng.uniform(0, 1, (4096, 784))
mc = ModelConfig(784, 10, 10, reconstruction_loss="bce")
tc = TrainConfig(epochs=1)
train(init_params(mc, 0), mc, X[:512], TrainConfig(epochs=1))  # warm up
t = time.perf_counter()
train(init_params(mc, 0), mc, X, tc)
print(kernels.BACKEND, time.perf_counter() - t)
"""


def bench_epoch():
    out = {}
    for disable in ("0", "1"):
        env = dict(os.environ, MIXAE_DISABLE_NUMBA=disable)
        res = subprocess.run([sys.executable, "-c", EPOCH_SNIPPET], env=env,
                             capture_output=True, text=True, check=True)
        backend, seconds = res.stdout.split()
        out[backend] = float(seconds)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--epoch", action="store_true", help="also time one training epoch")
    args = parser.parse_args(argv)

    print(f"{'kernel':<24}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    for name, t in bench_kernels(args.repeat):
        nb, npy = t.get("numba"), t.get("numpy")
        speed = f"{npy / nb:9.2f}x" if nb else "      n/a"
        nb_s = f"{nb * 1e3:12.3f}" if nb else f"{'n/a':>12}"
        print(f"{name:<24}{nb_s}{npy * 1e3:12.3f}{speed}")
    if args.epoch:
        t = bench_epoch()
        print(f"\none epoch, N=4096, n=784, K=10: numba {t['numba']:.2f}s, numpy {t['numpy']:.2f}s")


if __name__ == "__main__":
    main()
