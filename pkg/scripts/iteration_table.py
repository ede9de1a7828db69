"""Iterations of the hat transform needed to reach maximum degree 3.

Compares the measured count with the k satisfying
2^(2^(k-2)+1) < d <= 2^(2^(k-1)+1) and the final size with 2 mu^k d^2 n.

    python3 scripts/iteration_table.py [--dmax 33] [--family star|complete]
"""
import argparse

from copkit.graph import complete, star
from copkit.transforms import MU, iterate_to_subcubic


def predicted(d):
    return next(k for k in range(2, 12) if 2 ** (2 ** (k - 2) + 1) < d <= 2 ** (2 ** (k - 1) + 1))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmin", type=int, default=5)
    ap.add_argument("--dmax", type=int, default=33)
    ap.add_argument("--family", choices=("star", "complete"), default="star")
    args = ap.parse_args()
    make = star if args.family == "star" else (lambda d: complete(d + 1))
    print(f"{'d':>3} {'k_pred':>6} {'k':>3} {'trajectory':<16} {'final_n':>8} {'bound':>12}")
    for d in range(args.dmin, args.dmax + 1):
        g = make(d)
        final, _, rep = iterate_to_subcubic(g)
        bound = 2 * MU ** rep.k_used * d * d * g.n
        traj = "->".join(str(x) for x in [d] + [it.max_degree for it in rep.iterations])
        print(f"{d:>3} {predicted(d):>6} {rep.k_used:>3} {traj:<16} {final.n:>8} {float(bound):>12.1f}")


if __name__ == "__main__":
    main()
