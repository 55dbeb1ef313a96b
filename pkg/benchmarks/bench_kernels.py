#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

Run:  python benchmarks/bench_kernels.py
The same comparison with the fallback forced: FREEPLAY_NUMBA=0 disables the
jitted path entirely in the package; here both backends are imported
directly so one process covers both columns.
"""

import os
import sys
import time

import numpy as np

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))

from freeplay import nn  # noqa: E402
from freeplay.core import Dataset, Episode, StateLayout  # noqa: E402
from freeplay.kernels import get_impl  # noqa: E402
from freeplay.world_model import Ensemble, ModelConfig, train_iteration  # noqa: E402


def timeit(fn, repeat=20):
    fn()  # warmup / jit
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def pack_net(dims, act, ln, seed):
    net = nn.init_mlp(list(dims), act, ln, rng=np.random.default_rng(seed))
    return net.pack(), np.asarray(net.dims, dtype=np.int64)


def bench_rows():
    rng = np.random.default_rng(0)
    rows = []
    impls = {"numpy": get_impl("numpy"), "numba": get_impl("numba")}
    if impls["numba"] is None:
        del impls["numba"]

    # batched MLP stack (planner-sized)
    flat, dims = pack_net([24, 64, 64, 64], "relu", True, 1)
    X = rng.standard_normal((816, 24))
    rows.append(("mlp_batch 816x[24,64,64,64]",
                 {k: timeit(lambda i=i: i.mlp_batch(X, flat, dims, 1, 0))
                  for k, i in impls.items()}))

    # structured-model rollout at free-play shape
    e_flat, e_dims = pack_net([24, 32, 32, 32], "relu", True, 2)
    n_flat, n_dims = pack_net([9 + 6 + 32, 32, 32, 6], "relu", True, 3)
    g_flat, g_dims = pack_net([6 + 32, 32, 32, 4], "relu", True, 4)
    D = 4 + 4 * 9
    s0 = rng.standard_normal(D)
    acts = rng.uniform(-1, 1, (65, 12, 2))
    norms = dict(in_mu=np.zeros(D), in_sd=np.ones(D), act_mu=np.zeros(2),
                 act_sd=np.ones(2), oa_mu=np.zeros(4), oa_sd=np.ones(4),
                 oo_mu=np.zeros(6), oo_sd=np.ones(6))
    e_all = np.stack([e_flat] * 3)
    n_all = np.stack([n_flat] * 3)
    g_all = np.stack([g_flat] * 3)

    def roll(i):
        return i.graph_rollout(s0, acts, e_all, n_all, g_all, e_dims, n_dims,
                               g_dims, 1, 0, norms["in_mu"], norms["in_sd"],
                               norms["act_mu"], norms["act_sd"],
                               norms["oa_mu"], norms["oa_sd"],
                               norms["oo_mu"], norms["oo_sd"], 4, 4, 6, 3)

    rows.append(("graph_rollout P=65 H=12 M=3 N=4",
                 {k: timeit(lambda i=i: roll(i), repeat=10)
                  for k, i in impls.items()}))

    # monolithic rollout
    m_flat, m_dims = pack_net([D + 2, 64, 64, 64, 28], "silu", False, 5)
    dyn_idx = StateLayout(4, 6, 3, 2, 4).dyn_indices()
    m_all = np.stack([m_flat] * 3)

    def mroll(i):
        return i.monolithic_rollout(s0, acts, m_all, m_dims, 1,
                                    np.zeros(D + 2), np.ones(D + 2),
                                    np.zeros(28), np.ones(28), dyn_idx)

    rows.append(("monolithic_rollout P=65 H=12 M=3",
                 {k: timeit(lambda i=i: mroll(i), repeat=10)
                  for k, i in impls.items()}))

    # physics step, batched
    masses = np.array([1.0, 0.3, 0.5, 0.7])
    rot = np.array([1, 1, 0, 1], dtype=np.int64)
    shapes = np.array([0, 0, 1, 0], dtype=np.int64)
    consts = np.array([2.0, 0.05, 0.1, 1.0, 0.1, 0.8, 0.8, 4.0, 0.3, 2.0])
    S = rng.uniform(-1.5, 1.5, (256, D))
    A = rng.uniform(-1, 1, (256, 2))
    rows.append(("env_step batch 256, N=4",
                 {k: timeit(lambda i=i: i.env_step(S, A, masses, rot, shapes,
                                                   consts))
                  for k, i in impls.items()}))
    return rows


def bench_training():
    """Fused numba trainer vs the generic numpy trainer."""
    lay = StateLayout(4, 6, 3, 2, 4)
    rng = np.random.default_rng(0)
    ds = Dataset(lay)
    for _ in range(2):
        ds.append(Episode(rng.standard_normal((201, lay.flat_dim)),
                          rng.uniform(-1, 1, (200, 2))))
    cfg = ModelConfig(kind="graph", hidden=(32, 32), edge_dim=32,
                      ensemble_size=1, epochs=1, batch_size=125)
    out = {}
    for label, flag in (("numpy", "0"), ("numba", "1")):
        os.environ["FREEPLAY_NUMBA"] = flag
        for mod in [m for m in list(sys.modules) if m.startswith("freeplay")]:
            del sys.modules[mod]
        from freeplay import kernels as _k  # noqa: F811
        from freeplay.world_model import Ensemble as _E, \
            train_iteration as _t, ModelConfig as _MC
        if label == "numba" and _k.BACKEND != "numba":
            continue
        c = _MC(kind="graph", hidden=(32, 32), edge_dim=32, ensemble_size=1,
                epochs=1, batch_size=125)
        ens = _E.create(lay, c, root_seed=0)
        _t(ens, ds, c, root_seed=0)  # warmup
        t0 = time.perf_counter()
        _t(ens, ds, c, root_seed=0)
        out[label] = time.perf_counter() - t0
    os.environ.pop("FREEPLAY_NUMBA", None)
    return out


def main():
    rows = bench_rows()
    print(f"{'kernel':38s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for name, res in rows:
        np_ms = res.get("numpy", float("nan")) * 1e3
        nb_ms = res.get("numba", float("nan")) * 1e3
        ratio = np_ms / nb_ms if nb_ms == nb_ms else float("nan")
        print(f"{name:38s} {np_ms:9.2f}ms {nb_ms:9.2f}ms {ratio:7.1f}x")
    tr = bench_training()
    if len(tr) == 2:
        print(f"{'graph train epoch (400 transitions)':38s} "
              f"{tr['numpy']*1e3:9.2f}ms {tr['numba']*1e3:9.2f}ms "
              f"{tr['numpy']/tr['numba']:7.1f}x")


if __name__ == "__main__":
    main()
