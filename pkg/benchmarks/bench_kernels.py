#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

The numpy path is what you get with DIFFADD_NUMBA=0; this script imports
both implementations directly so a single run compares them side by side.
A model-level comparison (full training step under each backend) is
included because kernel microbenchmarks alone don't decide the flag.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import subprocess
import sys
import time

import numpy as np

from diffadd.kernels import _numba_impl, _numpy_impl


def timeit(fn, *args, repeat=20, warmup=2):
    for _ in range(warmup):
        fn(*args)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat * 1000.0


def row(name, t_np, t_nb):
    ratio = t_np / t_nb if t_nb > 0 else float("inf")
    winner = "numba" if t_nb < t_np else "numpy"
    print(f"{name:<38} numpy {t_np:9.3f} ms   numba {t_nb:9.3f} ms   "
          f"x{ratio:5.2f} -> {winner}")


def bench_kernels(repeat):
    rng = np.random.default_rng(0)
    print("== kernel microbenchmarks ==")

    for shape, k, s in [((16, 34, 34, 24), 3, 1), ((16, 18, 18, 64), 3, 2),
                        ((64, 32, 32, 3), 3, 1)]:
        x = rng.normal(size=shape).astype(np.float32)
        n, h, w, c = shape
        t_np = timeit(_numpy_impl.im2col, x, k, k, s, 1, repeat=repeat)
        t_nb = timeit(_numba_impl.im2col, x, k, k, s, 1, repeat=repeat)
        row(f"im2col {shape} k{k} s{s}", t_np, t_nb)
        cols = _numpy_impl.im2col(x, k, k, s, 1)
        g = rng.normal(size=cols.shape).astype(np.float32)
        t_np = timeit(_numpy_impl.col2im, g, n, h, w, c, k, k, s, 1, repeat=repeat)
        t_nb = timeit(_numba_impl.col2im, g, n, h, w, c, k, k, s, 1, repeat=repeat)
        row(f"col2im {shape} k{k} s{s}", t_np, t_nb)

    img = rng.random((37, 53, 3)).astype(np.float32)
    row("bilinear_resize (37,53,3)->(64,64)",
        timeit(_numpy_impl.bilinear_resize, img, 64, 64, repeat=repeat),
        timeit(_numba_impl.bilinear_resize, img, 64, 64, repeat=repeat))
    mask = (rng.random((64, 64)) < 0.35).astype(np.uint8)
    row("flood_outside (64,64)",
        timeit(_numpy_impl.flood_outside, mask, repeat=repeat),
        timeit(_numba_impl.flood_outside, mask, repeat=repeat))
    blob = rng.random((64, 64)) < 0.4
    row("label_components (64,64)",
        timeit(_numpy_impl.label_components, blob, repeat=repeat),
        timeit(_numba_impl.label_components, blob, repeat=repeat))
    xs = rng.uniform(2, 62, 12)
    ys = rng.uniform(2, 62, 12)
    row("rasterize_polygon 12 verts (64,64)",
        timeit(_numpy_impl.rasterize_polygon, xs, ys, 64, 64, repeat=repeat),
        timeit(_numba_impl.rasterize_polygon, xs, ys, 64, 64, repeat=repeat))
    m = rng.random((64, 64)) < 0.1
    row("binary_dilate r3 (64,64)",
        timeit(_numpy_impl.binary_dilate, m, 3, repeat=repeat),
        timeit(_numba_impl.binary_dilate, m, 3, repeat=repeat))


STEP_SNIPPET = r"""
import time
import numpy as np
from diffadd.kernels import backend_name
from diffadd.model import Denoiser, MaskHead, ModelConfig, NoiseSchedule, training_losses
from diffadd.nn import Adam, clip_grad_norm

cfg = ModelConfig(vocab=[f"c{i}" for i in range(16)])
rng = np.random.default_rng(0)
den = Denoiser(cfg, latent_channels=12, rng=rng)
head = MaskHead(12, cfg.omp_width, rng)
sched = NoiseSchedule.linear(T=1000)
params = {}
params.update({f"d.{k}": v for k, v in den.parameters().items()})
params.update({f"o.{k}": v for k, v in head.parameters().items()})
opt = Adam(params)
B = 8
zt = rng.normal(size=(B, 32, 32, 12)).astype(np.float32)
z = rng.normal(size=(B, 32, 32, 12)).astype(np.float32)
m = (rng.random((B, 32, 32, 1)) < 0.2).astype(np.float32)
t = rng.integers(1, 1001, size=B)
eps = rng.standard_normal(zt.shape).astype(np.float32)
ids = rng.integers(1, 17, size=B)

def step():
    total, _ = training_losses(den, head, zt, z, ids, m, t, eps, sched, lam=2.0)
    opt.zero_grad(); total.backward(); clip_grad_norm(opt.params, 1.0); opt.step()

step()
t0 = time.perf_counter()
for _ in range(N_STEPS):
    step()
dt = (time.perf_counter() - t0) / N_STEPS * 1000
print(f"{backend_name()}: {dt:.0f} ms/train-step (batch {B})")
"""


def bench_train_step(n_steps):
    print("\n== full training step, backend selected by DIFFADD_NUMBA ==",
          flush=True)
    snippet = STEP_SNIPPET.replace("N_STEPS", str(n_steps))
    for flag in ("1", "0"):
        subprocess.run([sys.executable, "-c", snippet],
                       env={**__import__("os").environ, "DIFFADD_NUMBA": flag},
                       check=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="fewer repetitions")
    args = ap.parse_args()
    repeat = 5 if args.quick else 20
    bench_kernels(repeat)
    bench_train_step(3 if args.quick else 10)
