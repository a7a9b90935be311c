"""Compiled vs pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the blossom matching on random graphs and the ordered subset search on
middle graphs, once per backend, and prints per-call times and the speedup.
"""

import argparse
import random
import timeit

from middledom import _pykernels
from middledom.graph import Graph, vertex_pairs
from middledom.solvers import _closed_masks
from middledom.transforms import middle_graph

try:
    from middledom import _kernels
except ImportError:
    _kernels = None


def random_graph(rng, n, p):
    return Graph(n, [e for e in vertex_pairs(n) if rng.random() < p])


def matching_case(rng, n, p, count):
    graphs = [random_graph(rng, n, p) for _ in range(count)]

    def run(impl):
        for g in graphs:
            impl.matching_mates(g.n, g.adjacency)

    return run


def cover_case(rng, n, p, count):
    # edge-vertex restricted search, as the middle-graph oracle runs it
    problems = []
    while len(problems) < count:
        g = random_graph(rng, n, p)
        if g.has_isolated_vertex():
            continue
        mg = middle_graph(g)
        masks = _closed_masks(mg.graph)[g.n:]
        problems.append((masks, (1 << mg.graph.n) - 1, 0, (n + 1) // 2, len(masks), 10**9))

    def run(impl):
        for prob in problems:
            impl.smallest_cover(*prob)

    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")

    rng = random.Random(args.seed)
    cases = [
        ("matching n=8  p=0.4", matching_case(rng, 8, 0.4, 500), 500),
        ("matching n=40 p=0.1", matching_case(rng, 40, 0.1, 100), 100),
        ("matching n=200 p=0.02", matching_case(rng, 200, 0.02, 10), 10),
        ("cover    n=7  p=0.5", cover_case(rng, 7, 0.5, 50), 50),
        ("cover    n=9  p=0.35", cover_case(rng, 9, 0.35, 10), 10),
    ]
    print(f"{'case':<24} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name, run, calls in cases:
        t_py = min(timeit.repeat(lambda: run(_pykernels), number=1, repeat=args.repeat)) / calls
        t_c = min(timeit.repeat(lambda: run(_kernels), number=1, repeat=args.repeat)) / calls
        print(f"{name:<24} {t_py * 1e6:>10.1f}us {t_c * 1e6:>10.1f}us {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
