"""Lifted robber escape on G_hat against each cop controller.

    python3 scripts/lift_runs.py [--seeds 3] [--rounds-factor 10]
"""
import argparse

from copkit.graph import circulant, complete, cycle, named_graph, star, wheel
from copkit.lift import verify_escape
from copkit.solver import cop_number, cops_win
from copkit.transforms import hat_transform

GRAPHS = {
    "C4": lambda: cycle(4),
    "C6": lambda: cycle(6),
    "K5": lambda: complete(5),
    "K1,5": lambda: star(5),
    "C8(1,2)": lambda: circulant(8, [1, 2]),
    "W6": lambda: wheel(6),
    "Petersen": lambda: named_graph("petersen"),
    "Robertson": lambda: named_graph("robertson"),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--rounds-factor", type=int, default=10)
    ap.add_argument("--graphs", nargs="*", default=list(GRAPHS))
    args = ap.parse_args()
    print(f"{'graph':<10} {'t':>2} {'cops':<8} {'seed':>4} {'rounds':>6} {'captured':>8} "
          f"{'macro':>6} {'max_len':>7} {'disp':>4} {'ok':>3}")
    for name in args.graphs:
        g = GRAPHS[name]()
        t = cop_number(g, 5) - 1
        ghat, _ = hat_transform(g)
        hat = cops_win(ghat, t)
        rounds = args.rounds_factor * ghat.n
        for kind in ("optimal", "greedy", "random"):
            for seed in range(args.seeds):
                rep = verify_escape(g, t, kind, rounds, seed, hat_result=hat)
                print(f"{name:<10} {t:>2} {kind:<8} {seed:>4} {rounds:>6} {str(rep.captured):>8} "
                      f"{rep.macro_rounds:>6} {rep.max_macro_length:>7} {rep.max_shadow_displacement:>4} "
                      f"{'yes' if rep.ok else 'NO':>3}")


if __name__ == "__main__":
    main()
