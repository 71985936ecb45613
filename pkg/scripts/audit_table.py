"""Tabulate the remainder weight-bound chain over a grid of (r, t).

    python3 scripts/audit_table.py --r-max 31
"""
import argparse

from ree_f4.theoremengine import audit_truncation_chain, chain_values


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-min", type=int, default=19)
    ap.add_argument("--r-max", type=int, default=27)
    args = ap.parse_args()

    print("r\tt\tleft\tmiddle\tright\tresult\tfailed")
    for r in range(args.r_min | 1, args.r_max + 1, 2):
        s = r // 2
        for t in range(4, s - 2):
            rep = audit_truncation_chain(r, t).to_dict()
            left, middle, right = chain_values(s, t)
            print(f"{r}\t{t}\t{left}\t{middle}\t{right}\t{rep['outcome']}\t{','.join(rep['failed'])}")


if __name__ == "__main__":
    main()
