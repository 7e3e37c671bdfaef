"""Compiled vs pure-numpy kernels: raycasting, z-buffer rasterization, whole samples.

Run ``python3 benchmarks/bench_kernels.py [--repeat N]``. Each kernel is run
through both paths on identical inputs; outputs must match exactly before the
timings are reported.
"""
import argparse
import os
import time

import numpy as np

from bevbench.baseline import rasterize_topdown
from bevbench.dataset import DatasetConfig, generate_sample
from bevbench.render import cast_rays, pixel_directions
from bevbench.scene import CameraIntrinsics, agent_candidates, generate_scene, poses_at
from bevbench.topdown import GridSpec


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def same(a, b):
    if isinstance(a, (tuple, list)):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def bench_raycast(repeat):
    scene = generate_scene(11)
    pos = agent_candidates(scene, 10.0 / 64)[0]
    intr = CameraIntrinsics.from_fov(256, 256)
    dirs = pixel_directions(intr, poses_at(pos, 8)[1])
    return {path: best_of(lambda: cast_rays(scene, np.asarray(pos), dirs, use_numba=path == "numba"), repeat)
            for path in ("numba", "numpy")}, dirs.shape[0]


def bench_zbuffer(repeat):
    rng = np.random.default_rng(0)
    n = 500_000
    pts = np.c_[rng.uniform(-5, 5, (n, 2)), rng.uniform(0, 2.5, n)]
    labels = rng.integers(1, 9, n)
    spec = GridSpec((0.0, 0.0), 10.0, 64)

    def run(flag):
        g = rasterize_topdown(pts, labels, spec, 3.0, use_numba=flag)
        return g.labels, g.heights

    return {path: best_of(lambda: run(path == "numba"), repeat) for path in ("numba", "numpy")}, n


def bench_sample(repeat):
    cfg = DatasetConfig()
    out = {}
    for path in ("numba", "numpy"):
        os.environ["BEVBENCH_NUMBA"] = "1" if path == "numba" else "0"
        out[path] = best_of(lambda: generate_sample(cfg, "train", 0), repeat)
    os.environ.pop("BEVBENCH_NUMBA")
    a, b = out["numba"][1], out["numpy"][1]
    out["numba"] = (out["numba"][0], (a.sem, a.depth, a.topdown, a.vis))
    out["numpy"] = (out["numpy"][0], (b.sem, b.depth, b.topdown, b.vis))
    return out, 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    # compile outside the timed region
    bench_raycast(1)
    bench_zbuffer(1)
    print(f"{'kernel':<12}{'items':>10}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, fn in (("raycast", bench_raycast), ("zbuffer", bench_zbuffer), ("sample", bench_sample)):
        res, items = fn(args.repeat)
        (tn, on), (tp, op) = res["numba"], res["numpy"]
        if not same(on, op):
            raise SystemExit(f"{name}: numba and numpy outputs differ")
        print(f"{name:<12}{items:>10,}{tn * 1e3:>12.2f}{tp * 1e3:>12.2f}{tp / tn:>9.1f}x")


if __name__ == "__main__":
    main()
