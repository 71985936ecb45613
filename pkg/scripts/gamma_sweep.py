"""Time the cold Freudenthal sweep over the truncation set and cross-check
every dimension against the Weyl dimension product.

    python3 scripts/gamma_sweep.py [--tsv out.tsv]
"""
import argparse
import time

from ree_f4.characters import gamma_set, weyl_character, weyl_dim
from ree_f4.lattice import alpha0_pairing


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tsv", help="write nu, pairing, dimension rows here")
    args = ap.parse_args()

    gamma = gamma_set()
    t0 = time.perf_counter()
    rows, bad = [], []
    for nu in gamma:
        d = weyl_character(nu).dim
        if d != weyl_dim(nu):
            bad.append(nu)
        rows.append((nu, alpha0_pairing(nu), d))
    elapsed = time.perf_counter() - t0

    print(f"|Gamma| = {len(gamma)}")
    print(f"mismatches = {len(bad)}")
    print(f"largest dimension = {max(r[2] for r in rows)} at {max(rows, key=lambda r: r[2])[0]}")
    print(f"sweep time = {elapsed:.1f}s")
    if args.tsv:
        with open(args.tsv, "w") as fh:
            for nu, p, d in rows:
                fh.write(f"{nu}\t{p}\t{d}\n")


if __name__ == "__main__":
    main()
