"""Compare the weakest pairing of sigma*(gamma) over nonzero dominant gamma
with 2^s, and show where the per-gamma scaling bound breaks.

    python3 scripts/lemma_boundary.py
"""
import itertools

from ree_f4.isogeny import sigma_star
from ree_f4.lattice import Weight, alpha0_pairing


def main():
    box = [Weight(*c) for c in itertools.product(range(4), repeat=4) if any(c)]
    print("r\ts\t2^s\tmin<sigma*g,a0v>\targmin\tscaling failures (of %d)" % len(box))
    for r in range(1, 24, 2):
        s = (r + 1) // 2
        vals = [(alpha0_pairing(sigma_star(r, g)), g) for g in box]
        low, arg = min(vals)
        fails = sum(v < 2 ** s * alpha0_pairing(g) for v, g in vals)
        print(f"{r}\t{s}\t{2 ** s}\t{low}\t{arg}\t{fails}")


if __name__ == "__main__":
    main()
