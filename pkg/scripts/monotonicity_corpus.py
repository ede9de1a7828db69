"""Exact check that t = c(G) - 1 cops lose on G_hat for a corpus of graphs.

    python3 scripts/monotonicity_corpus.py [--gnp 5] [--skip-robertson]
"""
import argparse
import time

from copkit.graph import circulant, complete, gnp, named_graph, star, wheel
from copkit.solver import DEFAULT_BUDGET, BudgetExceeded, cop_number, cops_win
from copkit.transforms import hat_transform


def corpus(n_gnp, robertson):
    yield "K5", complete(5)
    yield "K1,5", star(5)
    yield "C8(1,2)", circulant(8, [1, 2])
    yield "W6", wheel(6)
    if robertson:
        yield "Robertson", named_graph("robertson")
    for seed in range(n_gnp):
        yield f"gnp(9,0.5,{seed})", gnp(9, 0.5, seed)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gnp", type=int, default=5, help="number of pinned gnp samples")
    ap.add_argument("--skip-robertson", action="store_true")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    args = ap.parse_args()
    print(f"{'graph':<16} {'n':>4} {'Δ':>3} {'c(G)':>4} {'n_hat':>6} {'t':>2} {'cops_win_hat':>12} {'secs':>7}")
    for name, g in corpus(args.gnp, not args.skip_robertson):
        c = cop_number(g, 5, args.budget)
        ghat, _ = hat_transform(g)
        t0 = time.perf_counter()
        try:
            win = cops_win(ghat, c - 1, args.budget).cops_win
        except BudgetExceeded as exc:
            win = f"budget {exc.required}"
        print(f"{name:<16} {g.n:>4} {g.max_degree:>3} {c:>4} {ghat.n:>6} {c - 1:>2} {str(win):>12} "
              f"{time.perf_counter() - t0:>7.2f}")


if __name__ == "__main__":
    main()
