#!/usr/bin/env python3
"""Emit a CSV table comparing exact isolation probabilities of the
singleton hypergraph family to the asymptotic estimates h0, h1, h2 at
phi = n/M.

Example:
    python scripts/asymptotics_table.py --n 2,4,6 --M 4,6,8,12 > table.csv
"""

import argparse
import sys
from fractions import Fraction

from isobench import (
    compare_to_asymptotics,
    count_isolating,
    identity_objective,
    singleton_hypergraph,
    success_probabilities,
)
from isobench.search import CSV_COLUMNS_ASYMPTOTIC, asymptotic_rows_to_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="2,4,6")
    ap.add_argument("--M", default="4,6,8,12")
    args = ap.parse_args()

    ns = [int(x) for x in args.n.split(",")]
    Ms = [int(x) for x in args.M.split(",")]
    print(CSV_COLUMNS_ASYMPTOTIC)
    for n in ns:
        H = singleton_hypergraph(n)
        for M in Ms:
            f = identity_objective(M)
            report = count_isolating(H, M, f)
            p, q = success_probabilities(H, M, f, report)
            rows = compare_to_asymptotics(n, M, p=p, q=q)
            body = asymptotic_rows_to_csv(rows).splitlines()[1:]
            print("\n".join(body))
    return 0


if __name__ == "__main__":
    sys.exit(main())
