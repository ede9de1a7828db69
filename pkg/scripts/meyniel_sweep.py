"""Greedy cop cover plus subcubic reduction over a sweep of gnp graphs.

    python3 scripts/meyniel_sweep.py [--epsilon 1/4] [--p 0.1]
"""
import argparse
from fractions import Fraction

from copkit.graph import gnp
from copkit.meyniel import meyniel_pipeline


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--epsilon", default="1/4")
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--sizes", type=int, nargs="*", default=[50, 100, 150, 200, 250, 300])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    eps = Fraction(args.epsilon)
    print(f"{'n':>4} {'Δ':>4} {'thresh':>7} {'cops':>5} {'n^(1-ε)':>8} {'res_n':>6} {'res_Δ':>5} "
          f"{'comps':>5} {'subcubic':>9} {'ok':>3}")
    for n in args.sizes:
        g = gnp(n, args.p, args.seed + n)
        rep = meyniel_pipeline(g, eps)
        s = rep.summary()
        print(f"{n:>4} {g.max_degree:>4} {s['threshold']:>7.2f} {s['stationed']:>5} "
              f"{n ** float(1 - eps):>8.1f} {s['residual_n']:>6} {s['residual_max_degree']:>5} "
              f"{len(rep.rows):>5} {s['subcubic_total']:>9} {'yes' if rep.ok else 'NO':>3}")


if __name__ == "__main__":
    main()
