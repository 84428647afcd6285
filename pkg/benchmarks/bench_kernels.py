"""Compare the compiled and pure-Python kernels on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0] [--sweep N]

``--sweep N`` also times a full classification sweep up to order N in a
fresh interpreter per backend (backend choice is fixed at import).
"""
import argparse
import os
import random
import subprocess
import sys
import time

from irlab import kernels
from irlab.catalog import get
from irlab.graph import Graph
from irlab.patterns import search_order


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def workloads(seed):
    rng = random.Random(seed)
    g8 = [random_graph(rng, 8, 0.5) for _ in range(2000)]
    g14 = [random_graph(rng, 14, 0.3) for _ in range(60)]
    hosts = [random_graph(rng, 12, 0.5) for _ in range(300)]
    f1 = get("F1").graph
    f1_order = tuple(search_order(f1))
    f7 = get("F7").graph

    def canon(k):
        for g in g8:
            k.canon_label(g.n, g.adj)

    def gamma(k):
        for g in g14:
            c = g.closed()
            j = 1
            while k.dom_feasible(g.n, c, j, g.full, 0) < 0:
                j += 1

    def ir(k):
        for g in g14:
            c = g.closed()
            j = 1
            while k.ir_search(g.n, c, j) < 0:
                j += 1

    def induced(k):
        for h in hosts:
            k.find_induced(h.n, h.adj, f1.n, f1.adj, f1_order)

    def ir_f7(k):
        c = f7.closed()
        for j in range(1, 5):
            k.ir_search(f7.n, c, j)

    def bc(k):
        for h in hosts[:100]:
            k.bc_pair_exists(h.n, h.adj)

    return {"canon_label n=8 x2000": canon, "gamma n=14 x60": gamma, "ir n=14 x60": ir,
            "ir F7 (17 vertices)": ir_f7, "find_induced F1 in n=12 x300": induced,
            "bc_pair_exists n=12 x100": bc}


def best_of(fn, mod, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mod)
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sweep", type=int, default=0, metavar="N")
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python kernels are available")
    names = sorted(backends)
    print(f"{'workload':32s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}")
    for label, fn in workloads(args.seed).items():
        t = {n: best_of(fn, backends[n], args.repeat) for n in names}
        speed = t["python"] / t["cython"] if "cython" in t else 1.0
        print(f"{label:32s}" + "".join(f"{t[n]:11.4f}s" for n in names) + f"{speed:9.1f}x")
    if args.sweep:
        t = {n: sweep_seconds(n, args.sweep) for n in names}
        speed = t["python"] / t["cython"] if "cython" in t else 1.0
        label = f"sweep max_n={args.sweep}"
        print(f"{label:32s}" + "".join(f"{t[n]:11.2f}s" for n in names) + f"{speed:9.1f}x")


def sweep_seconds(backend, max_n):
    code = ("import time; from irlab.verifier import collect; t=time.perf_counter(); "
            f"collect({max_n}); print(time.perf_counter()-t)")
    env = dict(os.environ, IRLAB_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout)


if __name__ == "__main__":
    main()
